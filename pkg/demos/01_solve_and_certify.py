"""Decide whether S4 colours the Petersen graph and certify the answer.

Run:  python demos/01_solve_and_certify.py
"""

from hcolour import check_colouring, solve
from hcolour.graphio import certificate_text, parse_certificate
from hcolour.named import petersen, s4, star

host = s4().graph
guest = petersen().graph

res = solve(host, guest)
print(f"solve(S4, P): {res.status} after {res.nodes} nodes")

cert = certificate_text(res.witness, "S4", "P")
print("\ncertificate:")
print(cert)

# a certificate is only as good as its independent revalidation
back = parse_certificate(cert, host, guest)
print("revalidates:", check_colouring(back).ok)

# counting all labelled colourings is a separate mode
print("\nlabelled S4-colourings of P:", solve(host, guest, mode="count").count)

# a host that cannot work: the claw forces a single vertex type everywhere
print("solve(K1,3, P):", solve(star(3).graph, guest).status)
