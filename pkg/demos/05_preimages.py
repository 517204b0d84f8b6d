"""Preimage classifications under a colouring.

Under any valid colouring, a host matching pulls back to a guest matching;
a host perfect matching (or any matching covering the vertex image) pulls
back to a guest perfect matching; an edge cut of the used subgraph leaving
no isolated vertex pulls back to a guest edge cut; a k-regular host edge
set meeting the vertex image pulls back to a k-regular guest edge set.

Run:  python demos/05_preimages.py
"""

from hcolour import preimage, solve
from hcolour.named import petersen, s4
from hcolour.structure import perfect_matchings

c = solve(s4().graph, petersen().graph).witness

for M in perfect_matchings(c.host):
    rep = preimage(c, M)
    names = [chk.name for chk in rep.checks if chk.applicable]
    print(f"host edge set {sorted(M)} -> guest preimage {sorted(rep.edges)}")
    print(f"  applicable: {names}; all hold: {rep.all_applicable_hold}")

# the S4 image touches its pendant edge, so it is not degree-uniform and the
# k-regular classification does not apply; a self-colouring of P shows the
# applicable case with k = 3
rep = preimage(c, set(c.edge_map))
print("\nS4 image k-regular applicable:", rep.check("regular_subgraph").applicable)

self_c = solve(petersen().graph, petersen().graph).witness
rep = preimage(self_c, set(self_c.edge_map))
print("full P self-image pulls back 3-regular:",
      rep.check("regular_subgraph").applicable,
      rep.check("regular_subgraph").holds)
