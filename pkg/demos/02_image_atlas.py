"""Enumerate every splitted image a guest admits, up to isomorphism.

The atlas for the Petersen graph has exactly two classes: the graph itself
and S4.  The atlas of S12 additionally demonstrates that a guest can have a
strictly smaller image (S10).

Run:  python demos/02_image_atlas.py
"""

from hcolour import canonical_digest, enumerate_splitted_images
from hcolour.named import cycle, petersen, s12

for lab in (petersen(), s12()):
    atlas = enumerate_splitted_images(lab.graph)
    print(f"{lab.name}: {len(atlas.entries)} image classes "
          f"({atlas.nodes} search nodes, complete={atlas.complete})")
    for e in atlas.entries:
        g = e.graph
        pend = e.pendant_count
        print(f"  n={g.n:2d} m={g.m:2d} digest={canonical_digest(g)} "
              f"multiplicity={e.multiplicity} pendant={pend}")
    print()

# a guest colourable by t parallel edges is flagged, not listed as an entry
atlas = enumerate_splitted_images(cycle(4).graph)
print("C4 realizable by 2 parallel edges:", atlas.tk2_realizable)
print("C4 image classes:", [(e.graph.n, e.graph.m) for e in atlas.entries])
