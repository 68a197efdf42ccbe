"""Theorem-verification suites: instance samplers, checkers and reports.

Every suite draws a deterministic instance stream (seeded samplers or
exhaustive small-graph enumerations), validates the theorem's hypothesis
with the recognizers, runs the designated checker and aggregates outcomes.
A hypothesis-satisfying instance contradicting its theorem is a FAIL and
gets a persisted counterexample certificate; Unknown (budget) outcomes are
reported separately and never count as passes.
"""

from __future__ import annotations

import math
import os
import random
import sys
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable

from . import __version__
from .chordality import (
    NOT_W_CHORDAL,
    W_CHORDAL,
    every_contraction_simplicial,
    is_w_chordal,
)
from .chordality import UNKNOWN as CH_UNKNOWN
from .complexes import SimplicialComplex, ind_r_complex, independence_complex, link
from .conn import con_r
from .constructions import (
    CliquePartition,
    attach_star_cliques,
    clique_cycle,
    clique_whisker,
    counterexample_Gt,
    random_family,
    she_higher_family,
    t3_graph,
    whisker,
)
from .errors import UnknownSuite
from .families import classify_families
from .formats import (
    bad_minor_certificate_doc,
    exhausted_search_doc,
    graph_digest,
    serialize_graph,
    shelling_certificate_doc,
    write_certificate,
)
from .graphs import Graph, contains_induced, diameter, connected_components
from .shelling import (
    NOT_SHELLABLE,
    SHELLABLE,
    UNKNOWN,
    brute_force_shellable,
    is_shellable,
)

DEFAULT_SEED = 20250801


def default_budget() -> int:
    env = os.environ.get("INDSHELL_BUDGET")
    return int(env) if env else 10_000_000


@dataclass(frozen=True)
class SuiteOptions:
    seed: int = DEFAULT_SEED
    samples: int | None = None
    max_n: int | None = None
    budget: int | None = None
    out_dir: str | None = None
    workers: int = 1
    per_component: bool = False

    def effective_budget(self) -> int:
        return self.budget if self.budget else default_budget()


@dataclass(frozen=True)
class Instance:
    name: str
    checker: str
    graph: Graph | None
    r: int = 0
    extra: tuple = ()
    informational: bool = False


@dataclass(frozen=True)
class InstanceResult:
    name: str
    outcome: str  # pass | fail | unknown
    detail: str = ""
    certificate: dict | None = None
    informational: bool = False


@dataclass(frozen=True)
class TheoremSuite:
    id: str
    description: str
    expectation: str
    sampler: Callable[[SuiteOptions], list[Instance]]
    default_budget: int | None = None


@dataclass(frozen=True)
class RunReport:
    suite_id: str
    instances: int
    passed: int
    failed: int
    unknown: int
    certificates: tuple[str, ...]
    seed: int
    versions: dict[str, str] = field(compare=False)
    failures: tuple[str, ...] = ()
    info: dict[str, int] = field(compare=False, default_factory=dict)

    def ok(self) -> bool:
        return self.failed == 0 and self.unknown == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite_id,
            "instances": self.instances,
            "passed": self.passed,
            "failed": self.failed,
            "unknown": self.unknown,
            "certificates": list(self.certificates),
            "seed": self.seed,
            "versions": self.versions,
            "failures": list(self.failures),
            "info": dict(self.info),
        }


# ---------------------------------------------------------------------------
# samplers


def _atlas_graphs(min_n: int, max_n: int, connected: bool = False) -> list[Graph]:
    import networkx as nx

    out = []
    for ag in nx.graph_atlas_g():
        n = ag.number_of_nodes()
        if n < min_n or n > max_n:
            continue
        if connected and (n == 0 or not nx.is_connected(ag)):
            continue
        relabel = {v: i for i, v in enumerate(sorted(ag.nodes()))}
        out.append(
            Graph.from_edges(n, [(relabel[u], relabel[v]) for u, v in ag.edges()])
        )
    return out


def _all_trees(n: int) -> list[Graph]:
    import networkx as nx

    if n == 1:
        return [Graph.from_edges(1, [])]
    if n == 2:
        return [Graph.from_edges(2, [(0, 1)])]
    out = []
    for t in nx.nonisomorphic_trees(n):
        relabel = {v: i for i, v in enumerate(sorted(t.nodes()))}
        out.append(
            Graph.from_edges(n, [(relabel[u], relabel[v]) for u, v in t.edges()])
        )
    return out


def _disjoint_union(parts: list[Graph]) -> Graph:
    edges = []
    offset = 0
    for g in parts:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


def _all_forests(max_n: int) -> list[tuple[int, Graph]]:
    """(n, forest) for every forest on 1..max_n vertices up to isomorphism.

    A forest is a multiset of trees; nondecreasing (size, index) component
    sequences enumerate each multiset once.
    """
    trees = {k: _all_trees(k) for k in range(1, max_n + 1)}
    out: list[tuple[int, Graph]] = []

    def build(remaining: int, start: tuple[int, int], chosen: list[Graph]):
        if remaining == 0:
            forest = _disjoint_union(chosen)
            out.append((forest.n, forest))
            return
        for size in range(1, remaining + 1):
            for idx, t in enumerate(trees[size]):
                if (size, idx) < start:
                    continue
                build(remaining - size, (size, idx), chosen + [t])

    for n in range(1, max_n + 1):
        build(n, (0, 0), [])
    return out


def _random_graph(n: int, rng: random.Random) -> Graph:
    p = rng.uniform(0.2, 0.8)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def _random_cover(g: Graph, rng: random.Random) -> list[int]:
    """Complement of a greedy maximal independent set is a minimal cover."""
    order = list(range(g.n))
    rng.shuffle(order)
    indep: set[int] = set()
    for v in order:
        if not g.adj[v] & indep:
            indep.add(v)
    return sorted(set(range(g.n)) - indep)


def _random_clique_partition(g: Graph, rng: random.Random, t: int) -> CliquePartition:
    order = list(range(g.n))
    rng.shuffle(order)
    unassigned = set(order)
    parts = []
    for v in order:
        if v not in unassigned:
            continue
        part = {v}
        unassigned.discard(v)
        candidates = [u for u in order if u in unassigned and u in g.adj[v]]
        for u in candidates:
            if all(u in g.adj[w] for w in part) and rng.random() < 0.7:
                part.add(u)
                unassigned.discard(u)
        parts.append(frozenset(part))
    return CliquePartition(tuple(parts), tuple(t for _ in parts))


def _sc_sizes(r: int, rng: random.Random) -> list[int]:
    """Random star-clique shape with |V(SC)| >= r + 1."""
    if r <= 1 or rng.random() < 0.6:
        return [max(r, 1)]
    cut = rng.randint(1, r - 1)
    return [cut, r - cut]


# ---------------------------------------------------------------------------
# per-suite instance streams


def _instances_oracle_equality(opts: SuiteOptions) -> list[Instance]:
    out = []
    for i, g in enumerate(_atlas_graphs(1, min(5, opts.max_n or 5), connected=True)):
        for r in range(1, 5):
            out.append(Instance(f"atlas{i}-n{g.n}-r{r}", "oracle_equality", g, r))
    rng = random.Random(opts.seed)
    samples = opts.samples if opts.samples is not None else 300
    for i in range(samples):
        g = _random_graph(rng.randint(1, opts.max_n or 7), rng)
        for r in range(1, 5):
            out.append(Instance(f"rand{i}-n{g.n}-r{r}", "oracle_equality", g, r))
    return out


def _instances_not_chordal(opts: SuiteOptions) -> list[Instance]:
    k1 = Graph.from_edges(1, [])
    gt = counterexample_Gt(4, k1, k1, k1)
    return [
        Instance(
            "gt-r4-t1",
            "gt_certificate",
            gt.graph,
            4,
            extra=(gt.attachment_roots,),
        )
    ]


def _instances_chordal_cond(opts: SuiteOptions) -> list[Instance]:
    out = []
    max_n = opts.max_n or 6
    for i, g in enumerate(_atlas_graphs(3, max_n)):
        for r in (g.n - 2, g.n - 1):
            out.append(Instance(f"atlas{i}-n{g.n}-r{r}", "shellable", g, r))
    return out


def _instances_block2(opts: SuiteOptions) -> list[Instance]:
    max_n = opts.max_n or 7
    want = opts.samples if opts.samples is not None else 500
    seen: set[str] = set()
    graphs: list[Graph] = []
    for g in _atlas_graphs(1, min(6, max_n)):
        if classify_families(g).is_block_graph:
            key = serialize_graph(g)
            if key not in seen:
                seen.add(key)
                graphs.append(g)
    i = 0
    while len(graphs) < want and i < want * 40:
        n = 1 + (i % max_n)
        g = random_family("block_graph", n, opts.seed + i)
        i += 1
        key = serialize_graph(g)
        if key not in seen:
            seen.add(key)
            graphs.append(g)
    return [
        Instance(f"block{j}-n{g.n}", "shellable", g, 2) for j, g in enumerate(graphs)
    ]


def _instances_block_diam(opts: SuiteOptions) -> list[Instance]:
    max_n = opts.max_n or 9
    want = opts.samples if opts.samples is not None else 200
    out = []
    seen: set[str] = set()
    i = 0
    while len(seen) < want and i < want * 50:
        n = 2 + (i % (max_n - 1))
        g = random_family("block_graph", n, opts.seed * 3 + i)
        i += 1
        if g.n >= 1 and diameter(g) <= 4:
            key = serialize_graph(g)
            if key not in seen:
                seen.add(key)
                for r in (2, 3):
                    out.append(Instance(f"bd{len(seen)}-n{g.n}-r{r}", "shellable", g, r))
    return out


def _instances_tree_diam(opts: SuiteOptions) -> list[Instance]:
    out = []
    max_n = opts.max_n or 9
    idx = 0
    for n in range(1, max_n + 1):
        for t in _all_trees(n):
            if diameter(t) <= 5:
                for r in (2, 3, 4):
                    out.append(Instance(f"tree{idx}-n{n}-r{r}", "shellable", t, r))
            idx += 1
    return out


def _instances_tree_lower(opts: SuiteOptions) -> list[Instance]:
    out = []
    max_n = opts.max_n or 9
    for idx, (n, f) in enumerate(_all_forests(max_n)):
        for r in range(max(1, n - 5), n + 1):
            out.append(Instance(f"forest{idx}-n{n}-r{r}", "shellable", f, r))
        if opts.per_component:
            comp_max = max(len(c) for c in connected_components(f)) if n else 0
            for r in range(max(1, comp_max - 5), max(1, n - 5)):
                out.append(
                    Instance(
                        f"forest{idx}-n{n}-r{r}-percomp",
                        "shellable",
                        f,
                        r,
                        informational=True,
                    )
                )
    return out


def _instances_block3(opts: SuiteOptions) -> list[Instance]:
    max_n = opts.max_n or 9
    want = opts.samples if opts.samples is not None else 300
    t3, _ = t3_graph()
    out = []
    seen: set[str] = set()
    i = 0
    while len(seen) < want and i < want * 50:
        n = 2 + (i % (max_n - 1))
        g = random_family("block_graph", n, opts.seed * 5 + i)
        i += 1
        if contains_induced(g, t3)[0]:
            continue
        key = serialize_graph(g)
        if key not in seen:
            seen.add(key)
            out.append(Instance(f"t3free{len(seen)}-n{g.n}", "shellable", g, 3))
    return out


def _instances_3tree(opts: SuiteOptions) -> list[Instance]:
    max_n = opts.max_n or 8
    return [
        Instance(f"forest{i}-n{n}", "shellable", f, 3)
        for i, (n, f) in enumerate(_all_forests(max_n))
    ]


def _instances_block4(opts: SuiteOptions) -> list[Instance]:
    max_n = opts.max_n or 10
    want = opts.samples if opts.samples is not None else 150
    out = []
    for i in range(want):
        n = 4 + (i % (max_n - 3))
        g = random_family("T2", n, opts.seed * 7 + i)
        out.append(Instance(f"t2-{i}-n{g.n}", "shellable", g, 4))
    return out


def _instances_block5(opts: SuiteOptions) -> list[Instance]:
    max_n = opts.max_n or 10
    want = opts.samples if opts.samples is not None else 150
    out = []
    for i in range(want):
        n = 4 + (i % (max_n - 3))
        g = random_family("T1", n, opts.seed * 11 + i)
        for r in (5, 6):
            out.append(Instance(f"t1-{i}-n{g.n}-r{r}", "shellable", g, r))
    return out


def _instances_whisker(opts: SuiteOptions) -> list[Instance]:
    want = opts.samples if opts.samples is not None else 100
    rng = random.Random(opts.seed * 13)
    out = []
    for i in range(want):
        h = _random_graph(rng.randint(1, opts.max_n or 5), rng)
        r = rng.choice((1, 2))
        cover = _random_cover(h, rng)
        if not cover:
            cover = [0] if h.n else []
        if not cover:
            continue
        sizes = {x: _sc_sizes(r, rng) for x in cover}
        g = attach_star_cliques(h, cover, r, sizes, require_cover=True).graph
        out.append(Instance(f"ccg{i}-n{g.n}-r{r}", "shellable", g, r))
    return out


def _instances_she(opts: SuiteOptions) -> list[Instance]:
    want = opts.samples if opts.samples is not None else 100
    rng = random.Random(opts.seed * 17)
    out = []
    for i in range(want):
        h = random_family("chordal", rng.randint(1, opts.max_n or 5), opts.seed + i)
        t = rng.choice((1, 2))
        r = rng.randint(1, 2 * t + 1)
        sizes = {x: [t] for x in range(h.n)}
        g = attach_star_cliques(h, range(h.n), t, sizes).graph
        out.append(Instance(f"she{i}-n{g.n}-t{t}-r{r}", "shellable", g, r))
    return out


def _instances_clique_whisker(opts: SuiteOptions) -> list[Instance]:
    want = opts.samples if opts.samples is not None else 100
    rng = random.Random(opts.seed * 19)
    out = []
    for i in range(want):
        h = _random_graph(rng.randint(1, opts.max_n or 5), rng)
        r = rng.choice((1, 2))
        p = _random_clique_partition(h, rng, r)
        g = clique_whisker(h, p).graph
        out.append(Instance(f"cw{i}-n{g.n}-r{r}", "shellable", g, r))
    return out


def _instances_clique_cycle(opts: SuiteOptions) -> list[Instance]:
    want = opts.samples if opts.samples is not None else 100
    rng = random.Random(opts.seed * 23)
    out = []
    for i in range(want):
        r = rng.choice((1, 2))
        ncliques = rng.choice((3, 4))
        cc = clique_cycle([rng.choice((2, 3)) for _ in range(ncliques)])
        conns = list(cc.connectors)
        a = sorted(rng.sample(conns, rng.randint(1, len(conns))))
        sizes = {x: [rng.randint(1, 2)] for x in a}
        sizes[rng.choice(a)] = _sc_sizes(r, rng)
        g = attach_star_cliques(cc.graph, a, 0, sizes).graph
        out.append(Instance(f"cc{i}-n{g.n}-r{r}", "shellable", g, r))
    return out


def _instances_she_higher(opts: SuiteOptions) -> list[Instance]:
    return [Instance("she-higher-n2-t1", "she_higher", None, 4)]


def _instances_last_ex(opts: SuiteOptions) -> list[Instance]:
    return [Instance("last-ex-wc4-r2", "last_ex", None, 2)]


_CHAIN_SOURCES = (
    "chordal-cond",
    "block-2",
    "block-diam",
    "tree-diam",
    "tree-lower",
    "block:3",
    "3:tree",
    "block-4",
    "block-5",
    "whisker",
    "she",
    "clique-whisker",
    "clique-cycle",
)


def _instances_chain(opts: SuiteOptions) -> list[Instance]:
    out = []
    seen: set[tuple[str, int]] = set()
    for sid in _CHAIN_SOURCES:
        for inst in SUITES[sid].sampler(opts):
            if inst.graph is None or inst.graph.n > 7 or inst.informational:
                continue
            key = (serialize_graph(inst.graph), inst.r)
            if key in seen:
                continue
            seen.add(key)
            out.append(
                Instance(f"{sid}:{inst.name}", "implication_chain", inst.graph, inst.r)
            )
    return out


def _random_complex(rng: random.Random) -> tuple[tuple[int, ...], ...]:
    ground = rng.randint(1, 7)
    count = rng.randint(1, 6)
    sets = []
    for _ in range(count):
        size = rng.randint(1, ground)
        sets.append(frozenset(rng.sample(range(ground), size)))
    maximal = [s for s in sets if not any(s < t for t in sets)]
    uniq = sorted({tuple(sorted(s)) for s in maximal})
    return tuple(uniq)


def _instances_shelling_oracle(opts: SuiteOptions) -> list[Instance]:
    out = []
    rng = random.Random(opts.seed * 29)
    want = opts.samples if opts.samples is not None else 500
    for i in range(want):
        facets = _random_complex(rng)
        out.append(
            Instance(f"random{i}-t{len(facets)}", "engine_agreement", None, 0, (facets,))
        )
    seen: set[tuple] = set()
    sources = _CHAIN_SOURCES + ("she-higher", "last-ex")
    for sid in sources:
        for inst in SUITES[sid].sampler(opts):
            if inst.graph is None or inst.informational:
                continue
            d = ind_r_complex(inst.graph, inst.r)
            if len(d.facets) > 8:
                continue
            facets = tuple(d.facet_list())
            if facets in seen:
                continue
            seen.add(facets)
            out.append(
                Instance(
                    f"{sid}:{inst.name}-t{len(facets)}",
                    "engine_agreement",
                    None,
                    0,
                    (facets,),
                )
            )
    return out


# ---------------------------------------------------------------------------
# checkers


def _check_oracle_equality(inst: Instance, budget: int) -> InstanceResult:
    g, r = inst.graph, inst.r
    a = ind_r_complex(g, r)
    b = independence_complex(con_r(g, r))
    if a.facets == b.facets and a.ground == b.ground:
        return InstanceResult(inst.name, "pass")
    return InstanceResult(
        inst.name,
        "fail",
        detail=f"facet sets differ: {a.facet_list()} vs {b.facet_list()}",
    )


def _check_shellable(inst: Instance, budget: int) -> InstanceResult:
    g, r = inst.graph, inst.r
    d = ind_r_complex(g, r)
    dec = is_shellable(d, budget)
    if dec.status == SHELLABLE:
        return InstanceResult(inst.name, "pass", informational=inst.informational)
    if dec.status == UNKNOWN:
        return InstanceResult(
            inst.name, "unknown", detail=f"budget exhausted after {dec.nodes} nodes",
            informational=inst.informational,
        )
    doc = exhausted_search_doc(
        g, r, "shelling", {"facets": d.facet_list(), "nodes": dec.nodes}
    )
    return InstanceResult(
        inst.name,
        "fail",
        detail=f"ind_{r} not shellable ({len(d.facets)} facets)",
        certificate=doc,
        informational=inst.informational,
    )


def _check_gt_certificate(inst: Instance, budget: int) -> InstanceResult:
    g, r = inst.graph, inst.r
    roots = inst.extra[0]
    dec = is_w_chordal(con_r(g, r), budget)
    if dec.status == CH_UNKNOWN:
        return InstanceResult(inst.name, "unknown", detail="budget exhausted")
    if dec.status == W_CHORDAL:
        return InstanceResult(inst.name, "fail", detail="expected NotWChordal")
    cert = dec.certificate
    expected_vertices = frozenset(range(7))
    expected_edges = frozenset(
        frozenset(e)
        for e in (
            (0, 1, 2, 3),
            (0, 1, 2, 5),
            (4, 3, 0, 5),
            (4, 3, 0, 1),
            (6, 5, 0, 3),
            (6, 5, 0, 1),
        )
    )
    ok = (
        cert.minor_vertices == expected_vertices
        and cert.minor_edges == expected_edges
        and cert.spec.deleted == frozenset()
        and cert.spec.contracted == frozenset(roots)
    )
    doc = bad_minor_certificate_doc(g, r, cert)
    if ok:
        return InstanceResult(inst.name, "pass", certificate=doc)
    return InstanceResult(
        inst.name, "fail", detail=f"unexpected certificate {doc}", certificate=doc
    )


def _check_she_higher(inst: Instance, budget: int) -> InstanceResult:
    fam = she_higher_family(2, 1)
    d = ind_r_complex(fam.graph, fam.r)
    lk = link(d, fam.contraction_set)
    inv = {v: k for k, v in fam.labels.items()}
    expected = frozenset(
        [
            frozenset((inv["a1"], inv["b1"])),
            frozenset((inv["c"], inv["d"])),
        ]
    )
    if lk.facets != expected:
        return InstanceResult(
            inst.name, "fail", detail=f"link facets {lk.facet_list()} unexpected"
        )
    from .graphs import cycle_graph

    dec = is_shellable(ind_r_complex(cycle_graph(4), 1), budget)
    if dec.status == NOT_SHELLABLE:
        return InstanceResult(inst.name, "pass")
    if dec.status == UNKNOWN:
        return InstanceResult(inst.name, "unknown")
    return InstanceResult(inst.name, "fail", detail="ind(C4) reported shellable")


def _check_last_ex(inst: Instance, budget: int) -> InstanceResult:
    from .graphs import cycle_graph

    w = whisker(cycle_graph(4))
    d = ind_r_complex(w.graph, 2)
    dec = is_shellable(d, budget)
    if dec.status == SHELLABLE:
        return InstanceResult(inst.name, "fail", detail="expected NotShellable")
    if dec.status == UNKNOWN:
        return InstanceResult(inst.name, "unknown")
    lk = link(d, w.fresh_vertices())
    expected = ind_r_complex(cycle_graph(4), 1)
    if lk.facets != expected.facets:
        return InstanceResult(
            inst.name, "fail", detail=f"link facets {lk.facet_list()} != ind(C4)"
        )
    doc = exhausted_search_doc(
        w.graph, 2, "shelling", {"facets": d.facet_list(), "nodes": dec.nodes}
    )
    return InstanceResult(inst.name, "pass", certificate=doc)


def _check_chain(inst: Instance, budget: int) -> InstanceResult:
    g, r = inst.graph, inst.r
    d = ind_r_complex(g, r)
    sh = is_shellable(d, budget).status
    h = con_r(g, r)
    ecs = every_contraction_simplicial(h, budget).status
    wch = is_w_chordal(h, budget).status if r <= 3 else None
    if wch == W_CHORDAL and ecs == NOT_W_CHORDAL:
        return InstanceResult(inst.name, "fail", detail="WChordal but a contraction lacks a simplicial vertex")
    if ecs == W_CHORDAL and sh == NOT_SHELLABLE:
        return InstanceResult(inst.name, "fail", detail="contractions simplicial but not shellable")
    if wch == W_CHORDAL and sh == NOT_SHELLABLE:
        return InstanceResult(inst.name, "fail", detail="WChordal but not shellable")
    if UNKNOWN in (sh,) or CH_UNKNOWN in (ecs, wch):
        return InstanceResult(inst.name, "unknown", detail="budget exhausted")
    return InstanceResult(inst.name, "pass")


def _check_engine_agreement(inst: Instance, budget: int) -> InstanceResult:
    facets = [frozenset(f) for f in inst.extra[0]]
    ground = frozenset().union(*facets) if facets else frozenset()
    d = SimplicialComplex(ground, frozenset(facets))
    fast = is_shellable(d, budget)
    slow = brute_force_shellable(d)
    if fast.status == UNKNOWN:
        return InstanceResult(inst.name, "unknown")
    if fast.status == slow.status:
        return InstanceResult(inst.name, "pass")
    return InstanceResult(
        inst.name,
        "fail",
        detail=f"search={fast.status} brute={slow.status} facets={inst.extra[0]}",
    )


CHECKERS: dict[str, Callable[[Instance, int], InstanceResult]] = {
    "oracle_equality": _check_oracle_equality,
    "shellable": _check_shellable,
    "gt_certificate": _check_gt_certificate,
    "she_higher": _check_she_higher,
    "last_ex": _check_last_ex,
    "implication_chain": _check_chain,
    "engine_agreement": _check_engine_agreement,
}


# ---------------------------------------------------------------------------
# registry and runner

SUITES: dict[str, TheoremSuite] = {}


def _register(suite: TheoremSuite) -> None:
    SUITES[suite.id] = suite


_register(TheoremSuite(
    "oracle-equality",
    "ind_r facets match the independence complex of con_r",
    "oracle_equality",
    _instances_oracle_equality,
))
_register(TheoremSuite(
    "not-chordal",
    "con_4 of the spider-with-branches tree is not w-chordal, exact minor",
    "not_w_chordal",
    _instances_not_chordal,
))
_register(TheoremSuite(
    "chordal-cond",
    "n-2 <= r <= n-1 forces shellability",
    "all_shellable",
    _instances_chordal_cond,
))
_register(TheoremSuite(
    "block-2",
    "block graphs have shellable ind_2",
    "all_shellable",
    _instances_block2,
))
_register(TheoremSuite(
    "block-diam",
    "block graphs of diameter <= 4: ind_r shellable for r >= 2",
    "all_shellable",
    _instances_block_diam,
))
_register(TheoremSuite(
    "tree-diam",
    "trees of diameter <= 5: ind_r shellable for r >= 2",
    "all_shellable",
    _instances_tree_diam,
))
_register(TheoremSuite(
    "tree-lower",
    "forests: ind_r shellable for r >= n - 5",
    "all_shellable",
    _instances_tree_lower,
))
_register(TheoremSuite(
    "block:3",
    "T3-free block graphs have shellable ind_3",
    "all_shellable",
    _instances_block3,
))
_register(TheoremSuite(
    "3:tree",
    "forests have shellable ind_3",
    "all_shellable",
    _instances_3tree,
))
_register(TheoremSuite(
    "block-4",
    "T2-graphs have shellable ind_4",
    "all_shellable",
    _instances_block4,
))
_register(TheoremSuite(
    "block-5",
    "T1-graphs have shellable ind_r for r >= 5",
    "all_shellable",
    _instances_block5,
))
_register(TheoremSuite(
    "whisker",
    "star-clique attachments over a vertex cover: ind_r shellable",
    "all_shellable",
    _instances_whisker,
))
_register(TheoremSuite(
    "she",
    "star-clique attachments everywhere on a chordal host, r <= 2t+1",
    "all_shellable",
    _instances_she,
))
_register(TheoremSuite(
    "clique-whisker",
    "r-clique whiskerings: ind_r shellable",
    "all_shellable",
    _instances_clique_whisker,
))
_register(TheoremSuite(
    "clique-cycle",
    "clique cycles with star-clique attachments: ind_r shellable",
    "all_shellable",
    _instances_clique_cycle,
))
_register(TheoremSuite(
    "she-higher",
    "the r = nt + n attachment family links to the 4-cycle complex",
    "not_shellable",
    _instances_she_higher,
))
_register(TheoremSuite(
    "last-ex",
    "whiskered 4-cycle with r = 2 is not shellable",
    "not_shellable",
    _instances_last_ex,
))
_register(TheoremSuite(
    "implication-chain",
    "w-chordal => contractions simplicial => shellable on all touched instances",
    "implication_chain",
    _instances_chain,
))
_register(TheoremSuite(
    "shelling-oracle",
    "search engine agrees with the brute-force permutation oracle",
    "engine_agreement",
    _instances_shelling_oracle,
))


def _run_one(args: tuple[Instance, int]) -> InstanceResult:
    inst, budget = args
    return CHECKERS[inst.checker](inst, budget)


def run_suite(suite_id: str, opts: SuiteOptions | None = None) -> RunReport:
    if suite_id not in SUITES:
        raise UnknownSuite(f"unknown suite {suite_id!r}")
    opts = opts or SuiteOptions()
    suite = SUITES[suite_id]
    instances = suite.sampler(opts)
    budget = opts.effective_budget()
    jobs = [(inst, budget) for inst in instances]
    if opts.workers > 1:
        import multiprocessing as mp

        with mp.Pool(opts.workers) as pool:
            results = pool.map(_run_one, jobs)
    else:
        results = [_run_one(j) for j in jobs]

    passed = failed = unknown = 0
    info: dict[str, int] = {}
    failures = []
    cert_paths = []
    out_dir = Path(opts.out_dir) if opts.out_dir else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    for i, res in enumerate(results):
        if res.informational:
            info[f"info_{res.outcome}"] = info.get(f"info_{res.outcome}", 0) + 1
            continue
        if res.outcome == "pass":
            passed += 1
        elif res.outcome == "unknown":
            unknown += 1
        else:
            failed += 1
            failures.append(f"{res.name}: {res.detail}")
        if res.certificate and out_dir and (res.outcome == "fail" or suite.expectation in ("not_w_chordal", "not_shellable")):
            path = out_dir / f"{suite_id.replace(':', '_')}_{i:04d}_{res.certificate['kind']}.json"
            write_certificate(path, res.certificate)
            cert_paths.append(str(path))
    return RunReport(
        suite_id=suite_id,
        instances=len(instances) - sum(1 for r in results if r.informational),
        passed=passed,
        failed=failed,
        unknown=unknown,
        certificates=tuple(cert_paths),
        seed=opts.seed,
        versions={"indshell": __version__, "python": sys.version.split()[0]},
        failures=tuple(failures[:20]),
        info=info,
    )
