"""Exact H-colouring tools for finite loopless multigraphs.

An H-colouring of a graph G maps each edge of G to an edge of a host H so
that adjacent edges stay distinct and the edge set at every vertex of G
equals the edge set at some vertex of H.  This package decides and
enumerates such colourings for fixed hosts, enumerates all splitted images
a guest admits up to isomorphism, and bundles the structural checks
(matchings, edge cuts, preimage classifications) used to verify the
accompanying theory at small scale.
"""

from .canonical import canonical_digest, canonical_form, is_isomorphic
from .colouring import (
    AmbiguousHostError,
    Colouring,
    ColouringReport,
    ImageGraph,
    check_colouring,
    image_subgraph,
    induced_vertex_map,
    preimage,
    splitted_image,
    unused_vertices,
)
from .graphio import (
    GraphFormatError,
    certificate_text,
    decode_graph6,
    decode_sparse6,
    encode_graph6,
    ingest_graph6,
    parse_certificate,
)
from .images import (
    AtlasEntry,
    ImageAtlas,
    TypePartition,
    enumerate_splitted_images,
    image_admits_extension,
    realize_image,
)
from .multigraph import Multigraph, from_edge_list_text, to_edge_list_text
from .recipes import RECIPES, VerificationReport, run_corpus, run_recipe
from .solver import SolveResult, naive_solve_all, solve, tk2_colourable
from .structure import (
    Matching,
    chromatic_index,
    edge_colouring,
    enumerate_matchings,
    exposed_copies,
    has_perfect_matching,
    has_two_disjoint_perfect_matchings,
    is_matching,
    perfect_matching_count,
    perfect_matchings,
    spanning_regular_check,
)

__version__ = "0.1.0"
