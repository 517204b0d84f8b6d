"""Named verification recipes binding the solver, enumerator and structure
tools into reproducible pass/fail reports.

Each recipe runs a fixed list of checks and returns a VerificationReport.
Reports are deterministic for identical inputs and limits: every value that
lands in the serialized output is derived from the computation itself, never
from the clock (timings are kept separately for diagnostics).
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from random import Random
from typing import Callable, Optional

from .canonical import canonical_digest, canonical_form
from .colouring import Colouring, check_colouring, preimage
from .graphio import GraphFormatError, ingest_graph6
from .images import enumerate_splitted_images
from .multigraph import Multigraph
from .named import (
    complete,
    cycle,
    j_graph,
    k_family_members,
    petersen,
    poorly_matchable_ten_vertices,
    s4,
    s4_plus_km,
    s10,
    s12,
    s12_plus_km,
    t_k2,
)
from .solver import solve
from .structure import (
    enumerate_matchings,
    has_two_disjoint_perfect_matchings,
    perfect_matchings,
)

DEFAULT_NODE_BUDGET = 10**8

Outcome = str  # "pass" | "fail" | "unknown"


@dataclass
class CheckResult:
    name: str
    outcome: Outcome
    details: dict = field(default_factory=dict)
    nodes: int = 0

    def to_json(self) -> str:
        payload = {"check": self.name, "outcome": self.outcome, "nodes": self.nodes}
        payload.update(self.details)
        return json.dumps(payload, sort_keys=True)


@dataclass
class VerificationReport:
    recipe: str
    checks: list[CheckResult] = field(default_factory=list)
    version: str = ""
    elapsed: float = 0.0  # diagnostics only; never serialized

    @property
    def status(self) -> Outcome:
        if any(c.outcome == "fail" for c in self.checks):
            return "fail"
        if any(c.outcome == "unknown" for c in self.checks):
            return "unknown"
        return "pass"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def total_nodes(self) -> int:
        return sum(c.nodes for c in self.checks)

    def to_json_lines(self) -> str:
        lines = [c.to_json() for c in self.checks]
        lines.append(
            json.dumps(
                {
                    "recipe": self.recipe,
                    "status": self.status,
                    "checks": len(self.checks),
                    "total_nodes": self.total_nodes,
                    "version": self.version,
                },
                sort_keys=True,
            )
        )
        return "\n".join(lines) + "\n"


def artifact_version() -> str:
    """Digest of the package sources, stamped into every report."""
    h = hashlib.sha256()
    pkg_dir = Path(__file__).parent
    for path in sorted(pkg_dir.glob("*.py")):
        h.update(path.name.encode())
        h.update(path.read_bytes())
    return h.hexdigest()[:12]


def _check(name: str, ok: bool, nodes: int = 0, **details) -> CheckResult:
    return CheckResult(name, "pass" if ok else "fail", details, nodes)


def _atlas_checks(
    guest_name: str,
    guest: Multigraph,
    expected: dict[str, Multigraph],
    node_limit: Optional[int] = None,
) -> list[CheckResult]:
    """Enumerate the guest's images and compare against the expected classes."""
    atlas = enumerate_splitted_images(guest, node_limit=node_limit)
    out = [
        _check(
            f"{guest_name}-atlas-complete",
            atlas.complete,
            nodes=atlas.nodes,
            entries=len(atlas.entries),
        )
    ]
    expected_keys = {name: canonical_form(g) for name, g in expected.items()}
    got = atlas.canonical_set()
    out.append(
        _check(
            f"{guest_name}-atlas-classes",
            got == set(expected_keys.values()) and atlas.complete,
            expected=sorted(expected_keys),
            found=[canonical_digest(e.graph) for e in atlas.entries],
            multiplicities={
                nm: (atlas.find(g).multiplicity if atlas.find(g) else 0)
                for nm, g in expected.items()
            },
        )
    )
    out.append(
        _check(
            f"{guest_name}-atlas-zero-split",
            all(e.split_vertex_count == 0 for e in atlas.entries),
        )
    )
    bad = [
        i
        for i, e in enumerate(atlas.entries)
        if not check_colouring(e.witness).ok
    ]
    out.append(_check(f"{guest_name}-atlas-witnesses-revalidate", not bad, bad=bad))
    return out


# -- individual recipes ----------------------------------------------------

def _recipe_petersen_images(params: dict) -> list[CheckResult]:
    P = petersen().graph
    checks = _atlas_checks(
        "petersen", P, {"petersen": P, "s4": s4().graph}, params.get("node_limit")
    )
    atlas = enumerate_splitted_images(P)
    checks.append(
        _check("petersen-atlas-exactly-two", len(atlas.entries) == 2,
               entries=len(atlas.entries))
    )
    # bridge property: in every image, each bridge uv has exactly one
    # endpoint of degree 1; and image degrees all lie in {1, 3}
    bridge_ok = deg_ok = True
    for e in atlas.entries:
        g = e.graph
        for eid in g.bridges():
            a, b = g.edges[eid]
            if (g.degree(a) == 1) == (g.degree(b) == 1):
                bridge_ok = False
        if not all(g.degree(v) in (1, 3) for v in range(g.n)):
            deg_ok = False
    checks.append(_check("petersen-image-bridge-endpoints", bridge_ok))
    checks.append(_check("petersen-image-degrees-1-or-3", deg_ok))
    return checks


def _recipe_s10_images(params: dict) -> list[CheckResult]:
    g = s10().graph
    return _atlas_checks("s10", g, {"s10": g}, params.get("node_limit"))


def _recipe_s12_images(params: dict) -> list[CheckResult]:
    g = s12().graph
    return _atlas_checks(
        "s12", g, {"s10": s10().graph, "s12": g}, params.get("node_limit")
    )


def _recipe_p_matching_cuts(params: dict) -> list[CheckResult]:
    P = petersen().graph
    pms = {frozenset(M) for M in perfect_matchings(P)}
    cuts = {
        frozenset(M.edges)
        for M in enumerate_matchings(P)
        if M.edges and P.is_edge_cut(set(M.edges))
    }
    return [
        _check("p-perfect-matching-count", len(pms) == 6, count=len(pms)),
        _check(
            "p-matching-cuts-are-perfect-matchings",
            cuts == pms,
            cut_matchings=len(cuts),
        ),
    ]


def _recipe_k5_images(params: dict) -> list[CheckResult]:
    K5 = complete(5).graph
    atlas = enumerate_splitted_images(K5, node_limit=params.get("node_limit"))
    family: dict[int, set[bytes]] = {}
    checks = [
        _check("k5-atlas-complete", atlas.complete, nodes=atlas.nodes,
               entries=len(atlas.entries))
    ]
    all_in_family = True
    no_unused = True
    for e in atlas.entries:
        t = e.graph.n
        if t % 2 == 0:
            all_in_family = False
            continue
        if t not in family:
            family[t] = {canonical_form(m) for m in k_family_members(t, 4)}
        if e.canonical not in family[t]:
            all_in_family = False
        if any(e.graph.degree(v) != 4 for v in range(e.graph.n)):
            no_unused = False
    checks.append(_check("k5-images-in-k-family-odd-t", all_in_family and atlas.complete))
    checks.append(_check("k5-images-no-unused-vertex", no_unused))
    checks.append(
        _check(
            "k5-atlas-zero-split",
            all(e.split_vertex_count == 0 for e in atlas.entries),
        )
    )
    return checks


def _recipe_j4_exclusion(params: dict) -> list[CheckResult]:
    guest = j_graph(2).graph
    hosts = [(3, m) for m in k_family_members(3, 4)] + [
        (5, m) for m in k_family_members(5, 4)
    ]
    checks = [
        _check("j4-host-count", len(hosts) == 2, hosts=len(hosts))
    ]
    for t, h in hosts:
        r = solve(h, guest, node_limit=params.get("node_limit"))
        checks.append(
            _check(
                f"j4-unsat-vs-{h.name or f'kfamily-{t}'}",
                r.status == "unsat",
                nodes=r.nodes,
                status=r.status,
            )
        )
    return checks


def _recipe_s12km_rigidity(params: dict) -> list[CheckResult]:
    k = int(params.get("k", 1))
    g = s12_plus_km(k).graph
    return _atlas_checks(f"s12+{k}M", g, {f"s12+{k}M": g}, params.get("node_limit"))


def _pairwise_disjoint_free(G: Multigraph) -> bool:
    """True iff no two perfect matchings of G are edge-disjoint.

    Deliberately naive (all pairs over the full matching enumeration) so it
    is independent of has_two_disjoint_perfect_matchings.
    """
    pms = [frozenset(M) for M in perfect_matchings(G)]
    return all(p & q for i, p in enumerate(pms) for q in pms[i + 1:])


def _recipe_thm44(params: dict) -> list[CheckResult]:
    """Poorly matchable 4-regular pipeline.

    Exhaustive search shows no 4-regular multigraph on at most 8 vertices
    has a perfect matching but no two disjoint ones, so the witness here is
    the order-10 construction (see poorly_matchable_ten_vertices); an
    explicit witness graph may be supplied via params["witness"].
    """
    witness: Multigraph = params.get("witness") or poorly_matchable_ten_vertices().graph
    host = s12_plus_km(1).graph
    checks = [
        _check("witness-4-regular", witness.is_regular(4), n=witness.n),
        _check(
            "witness-has-perfect-matching",
            next(perfect_matchings(witness), None) is not None,
        ),
        _check(
            "witness-no-two-disjoint-pms",
            has_two_disjoint_perfect_matchings(witness) is None,
        ),
        _check(
            "witness-no-two-disjoint-pms-independent",
            _pairwise_disjoint_free(witness),
        ),
    ]
    pair = has_two_disjoint_perfect_matchings(host)
    checks.append(_check("s12+1M-two-disjoint-pms", pair is not None))
    r = solve(host, witness, node_limit=params.get("node_limit"))
    checks.append(
        _check("s12+1M-does-not-colour-witness", r.status == "unsat",
               nodes=r.nodes, status=r.status)
    )
    return checks


_LEMMA_PAIRS: Callable[[], list[tuple[str, Multigraph, Multigraph]]] = lambda: [
    ("s4<p", s4().graph, petersen().graph),
    ("p<p", petersen().graph, petersen().graph),
    ("s10<s10", s10().graph, s10().graph),
    ("s10<s12", s10().graph, s12().graph),
    ("s12<s12", s12().graph, s12().graph),
    ("s12+1M<s12+1M", s12_plus_km(1).graph, s12_plus_km(1).graph),
    ("k5<k5", complete(5).graph, complete(5).graph),
    ("k4<k4", complete(4).graph, complete(4).graph),
    ("c5<c5", cycle(5).graph, cycle(5).graph),
    ("2k2<c4", t_k2(2).graph, cycle(4).graph),
    ("s4+1M<s4+1M", s4_plus_km(1).graph, s4_plus_km(1).graph),
]


def _recipe_lemma24_props(params: dict) -> list[CheckResult]:
    """Preimage classification properties over sampled solver colourings.

    For each (host, guest) pair, sample colourings found by the solver and
    host edge sets F, and assert every applicable preimage classification
    holds: matchings pull back to matchings, host perfect matchings and
    image-covering matchings to guest perfect matchings, isolated-free
    edge-cuts of the used subgraph to guest edge-cuts, and k-regular host
    sets meeting the vertex image to k-regular guest sets.
    """
    rng = Random(int(params.get("seed", 0)))
    per_pair = int(params.get("colourings_per_pair", 12))
    checks: list[CheckResult] = []
    applied: dict[str, int] = {}
    total_colourings = 0
    for label, host, guest in _LEMMA_PAIRS():
        res = solve(host, guest, mode="all", node_limit=params.get("node_limit"))
        if res.status != "sat":
            checks.append(
                _check(f"lemma24-{label}-sat", False, status=res.status,
                       nodes=res.nodes)
            )
            continue
        sample = res.colourings
        if len(sample) > per_pair:
            sample = rng.sample(sample, per_pair)
        total_colourings += len(sample)
        violations = []
        for ci, c in enumerate(sample):
            subsets = _edge_set_samples(host, c, rng)
            for F in subsets:
                rep = preimage(c, F)
                for chk in rep.checks:
                    if chk.applicable:
                        applied[chk.name] = applied.get(chk.name, 0) + 1
                        if not chk.holds:
                            violations.append((ci, sorted(F), chk.name))
        checks.append(
            _check(
                f"lemma24-{label}",
                not violations,
                colourings=len(sample),
                nodes=res.nodes,
                violations=violations[:5],
            )
        )
    checks.append(
        _check(
            "lemma24-coverage",
            total_colourings >= 100 and len(applied) == 5,
            colourings=total_colourings,
            applications=dict(sorted(applied.items())),
        )
    )
    return checks


def _edge_set_samples(host: Multigraph, c: Colouring, rng: Random) -> list[set[int]]:
    """Host edge sets exercising each preimage classification."""
    out: list[set[int]] = []
    pms = [set(M) for M in perfect_matchings(host)]
    out.extend(rng.sample(pms, min(3, len(pms))))
    matchings = [set(M.edges) for M in enumerate_matchings(host) if M.edges]
    if matchings:
        out.extend(rng.sample(matchings, min(4, len(matchings))))
    img = sorted(set(c.edge_map))
    out.append(set(img))
    for _ in range(4):
        out.append({e for e in range(host.m) if rng.random() < 0.4})
    for _ in range(2):
        if img:
            out.append({e for e in img if rng.random() < 0.5})
    return [F for F in out if F]


# -- corpus recipes --------------------------------------------------------

def _corpus_worker(args) -> tuple[int, str, int, Optional[tuple[int, ...]]]:
    index, host, guest, node_limit = args
    r = solve(host, guest, node_limit=node_limit)
    em = r.witness.edge_map if r.witness else None
    return index, r.status, r.nodes, em


def worker_count(requested: Optional[int] = None) -> int:
    env = os.environ.get("HCOLOR_THREADS")
    if env:
        return max(1, int(env))
    if requested:
        return max(1, requested)
    return os.cpu_count() or 1


def run_corpus(
    path: str,
    host: Multigraph,
    host_name: str,
    node_limit: int = DEFAULT_NODE_BUDGET,
    workers: Optional[int] = None,
    start_index: int = 0,
    progress: Optional[Callable[[CheckResult], None]] = None,
) -> list[CheckResult]:
    """Solve host ≺ G for every bridgeless cubic graph in a graph6 file.

    Entries that are not connected bridgeless cubic simple graphs are
    reported as skipped.  Parse errors are reported per line with outcome
    "unknown" and the run continues.  Results are order-stable by input
    index; start_index resumes a previous run.  Every SAT certificate is
    re-validated here, outside the solver.
    """
    entries: list[tuple[int, int, Multigraph]] = []  # (index, lineno, G)
    checks: list[CheckResult] = []
    index = -1
    for lineno, item in ingest_graph6(path):
        index += 1
        if index < start_index:
            continue
        if isinstance(item, GraphFormatError):
            checks.append(
                CheckResult(
                    f"entry-{index}", "unknown",
                    {"line": lineno, "error": str(item)},
                )
            )
            continue
        G = item
        if not (
            G.is_regular(3) and G.is_connected()
            and not G.bridges()
            and all(G.multiplicity(a, b) == 1 for a, b in G.edges)
        ):
            checks.append(
                _check(
                    f"entry-{index}", True, line=lineno,
                    skipped="not a connected bridgeless cubic simple graph",
                )
            )
            continue
        entries.append((index, lineno, G))

    jobs = [(i, host, G, node_limit) for i, _, G in entries]
    by_index = {i: (lineno, G) for i, lineno, G in entries}

    def consume(result: tuple[int, str, int, Optional[tuple[int, ...]]]) -> None:
        index, status, nodes, em = result
        lineno, G = by_index[index]
        ok = status == "sat"
        details = {"line": lineno, "n": G.n, "m": G.m, "status": status,
                   "host": host_name}
        if ok:
            cert = Colouring(host, G, em)
            if not check_colouring(cert).ok:
                ok = False
                details["error"] = "certificate failed revalidation"
            else:
                details["certificate"] = " ".join(
                    f"{g}:{h}" for g, h in cert.pairs()
                )
        outcome = "pass" if ok else ("unknown" if status == "unknown" else "fail")
        res = CheckResult(f"entry-{index}", outcome, details, nodes)
        checks.append(res)
        if progress is not None:
            progress(res)

    nworkers = worker_count(workers)
    if nworkers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            for result in pool.map(_corpus_worker, jobs):
                consume(result)
    else:
        for job in jobs:
            consume(_corpus_worker(job))
    checks.sort(key=lambda c: int(c.name.split("-")[1]))
    return checks


def _recipe_corpus_s4(params: dict) -> list[CheckResult]:
    return run_corpus(
        params["path"],
        s4().graph,
        "s4",
        node_limit=params.get("node_limit", DEFAULT_NODE_BUDGET),
        workers=params.get("workers"),
        start_index=params.get("start_index", 0),
        progress=params.get("progress"),
    )


def _recipe_corpus_p(params: dict) -> list[CheckResult]:
    return run_corpus(
        params["path"],
        petersen().graph,
        "petersen",
        node_limit=params.get("node_limit", DEFAULT_NODE_BUDGET),
        workers=params.get("workers"),
        start_index=params.get("start_index", 0),
        progress=params.get("progress"),
    )


RECIPES: dict[str, Callable[[dict], list[CheckResult]]] = {
    "petersen-images": _recipe_petersen_images,
    "s10-images": _recipe_s10_images,
    "s12-images": _recipe_s12_images,
    "p-matching-cuts": _recipe_p_matching_cuts,
    "k5-images": _recipe_k5_images,
    "j4-exclusion": _recipe_j4_exclusion,
    "s12kM-rigidity": _recipe_s12km_rigidity,
    "thm44": _recipe_thm44,
    "corpus-s4": _recipe_corpus_s4,
    "corpus-p": _recipe_corpus_p,
    "lemma24-props": _recipe_lemma24_props,
}


def run_recipe(name: str, params: Optional[dict] = None) -> VerificationReport:
    """Run a named recipe; see RECIPES for the available names."""
    if name not in RECIPES:
        raise ValueError(
            f"unknown recipe {name!r}; available: {', '.join(sorted(RECIPES))}"
        )
    start = time.perf_counter()
    checks = RECIPES[name](params or {})
    report = VerificationReport(
        recipe=name, checks=checks, version=artifact_version()
    )
    report.elapsed = time.perf_counter() - start
    return report
