"""Generators for the named graph constructions and random test families.

Fresh vertices introduced by an attachment are numbered after the host
vertices, in attachment order, and every construction carries a label map
back to human-readable names so certificates can be audited.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidInput, InvalidPartition, NotAVertexCover
from .families import CliquePath, classify_families
from .graphs import Graph, is_clique, is_connected


@dataclass(frozen=True)
class StarCliqueGraph:
    graph: Graph
    center: int
    labels: dict[int, str] = field(compare=False)


@dataclass(frozen=True)
class CliquePathGraph:
    graph: Graph
    path: CliquePath
    labels: dict[int, str] = field(compare=False)


@dataclass(frozen=True)
class CliqueCycleGraph:
    graph: Graph
    cliques: tuple[frozenset[int], ...]
    connectors: tuple[int, ...]
    labels: dict[int, str] = field(compare=False)


@dataclass(frozen=True)
class AttachedGraph:
    """Host graph with star-cliques glued at their centers (CCG(H, S, r))."""

    graph: Graph
    host: Graph
    attach_points: tuple[int, ...]
    attached: dict[int, tuple[frozenset[int], ...]] = field(compare=False)
    labels: dict[int, str] = field(compare=False)

    def fresh_vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for cliques in self.attached.values():
            for c in cliques:
                out |= c
        return frozenset(out)


@dataclass(frozen=True)
class CliquePartition:
    """Disjoint cliques covering the host's vertex set, with whisker counts."""

    parts: tuple[frozenset[int], ...]
    whisker_counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.parts) != len(self.whisker_counts):
            raise InvalidPartition("one whisker count per part")
        if any(t < 1 for t in self.whisker_counts):
            raise InvalidPartition("whisker counts must be >= 1")
        for a, b in combinations(self.parts, 2):
            if a & b:
                raise InvalidPartition("parts must be pairwise disjoint")


@dataclass(frozen=True)
class CliqueWhiskerGraph:
    graph: Graph
    host: Graph
    partition: CliquePartition
    fresh: tuple[tuple[int, ...], ...]
    labels: dict[int, str] = field(compare=False)


@dataclass(frozen=True)
class GtGraph:
    graph: Graph
    base: tuple[int, ...]
    attachment_roots: tuple[int, ...]
    labels: dict[int, str] = field(compare=False)


@dataclass(frozen=True)
class SheHigherFamily:
    host: Graph
    graph: Graph
    r: int
    contraction_set: frozenset[int]
    labels: dict[int, str] = field(compare=False)


def star_clique(clique_sizes: Sequence[int]) -> StarCliqueGraph:
    """Cliques B_1..B_t glued at a single central vertex."""
    if not clique_sizes:
        raise InvalidInput("need at least one clique")
    if any(s < 1 for s in clique_sizes):
        raise InvalidInput("clique sizes must be >= 1")
    edges = []
    labels = {0: "x"}
    nxt = 1
    for i, size in enumerate(clique_sizes, start=1):
        members = [0] + list(range(nxt, nxt + size))
        for j, v in enumerate(members[1:], start=1):
            labels[v] = f"b{i}_{j}"
        nxt += size
        edges.extend(combinations(members, 2))
    return StarCliqueGraph(Graph.from_edges(nxt, edges), 0, labels)


def clique_path(clique_sizes: Sequence[int]) -> CliquePathGraph:
    """Cliques B_1..B_n chained linearly through single shared vertices."""
    if not clique_sizes:
        raise InvalidInput("need at least one clique")
    if len(clique_sizes) > 1 and any(s < 2 for s in clique_sizes):
        raise InvalidInput("chained cliques need >= 2 vertices each")
    cliques = []
    connectors = []
    labels: dict[int, str] = {}
    nxt = 0
    prev_connector = None
    for i, size in enumerate(clique_sizes, start=1):
        fresh_count = size if prev_connector is None else size - 1
        members = ([] if prev_connector is None else [prev_connector]) + list(
            range(nxt, nxt + fresh_count)
        )
        for v in members:
            labels.setdefault(v, f"c{i}_{v}")
        nxt += fresh_count
        cliques.append(frozenset(members))
        if i < len(clique_sizes):
            prev_connector = members[-1]
            connectors.append(prev_connector)
            labels[prev_connector] = f"x{i}"
    edges = [e for c in cliques for e in combinations(sorted(c), 2)]
    g = Graph.from_edges(nxt, edges)
    return CliquePathGraph(g, CliquePath(tuple(cliques), tuple(connectors)), labels)


def clique_cycle(clique_sizes: Sequence[int]) -> CliqueCycleGraph:
    """Cliques B_1..B_n arranged cyclically; B_n and B_1 share x_n."""
    if len(clique_sizes) < 3:
        raise InvalidInput("a clique cycle needs at least 3 cliques")
    if any(s < 2 for s in clique_sizes):
        raise InvalidInput("cycle cliques need >= 2 vertices each")
    cliques: list[frozenset[int]] = []
    connectors: list[int] = []
    labels: dict[int, str] = {}
    nxt = 0
    prev = None
    for i, size in enumerate(clique_sizes, start=1):
        last = i == len(clique_sizes)
        members = [] if prev is None else [prev]
        fresh = size - len(members) - (1 if last else 0)
        members += list(range(nxt, nxt + fresh))
        nxt += fresh
        if last:
            members.append(0)
        cliques.append(frozenset(members))
        if not last:
            prev = members[-1]
            connectors.append(prev)
            labels[prev] = f"x{i}"
    connectors.append(0)
    labels[0] = f"x{len(clique_sizes)}"
    for v in range(nxt):
        labels.setdefault(v, f"y{v}")
    edges = {e for c in cliques for e in combinations(sorted(c), 2)}
    g = Graph.from_edges(nxt, edges)
    if len(set(connectors)) != len(connectors):
        raise InvalidInput("cycle too small: connectors must be distinct")
    return CliqueCycleGraph(g, tuple(cliques), tuple(connectors), labels)


def is_vertex_cover(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    return all(u in s or v in s for u, v in g.edges())


def attach_star_cliques(
    h: Graph,
    s: Iterable[int],
    min_size: int,
    sizes: dict[int, Sequence[int]],
    require_cover: bool = False,
) -> AttachedGraph:
    """CCG(H, S, r): glue a star-clique SC(x) with |V(SC(x))| >= min_size + 1
    at every x in S.  ``sizes[x]`` lists the clique sizes hanging at x."""
    points = sorted(set(s))
    for x in points:
        if not 0 <= x < h.n:
            raise InvalidInput(f"attachment point {x} not in host")
    if require_cover and not is_vertex_cover(h, points):
        raise NotAVertexCover("attachment set does not cover every edge")
    edges = list(h.edges())
    labels = {v: str(v) for v in range(h.n)}
    attached: dict[int, tuple[frozenset[int], ...]] = {}
    nxt = h.n
    for x in points:
        my_sizes = list(sizes.get(x, ()))
        if not my_sizes or any(c < 1 for c in my_sizes):
            raise InvalidInput(f"attachment at {x} needs positive clique sizes")
        if sum(my_sizes) < min_size:
            raise InvalidInput(
                f"star-clique at {x} has {1 + sum(my_sizes)} vertices, "
                f"needs at least {min_size + 1}"
            )
        cliques = []
        for i, size in enumerate(my_sizes, start=1):
            members = [x] + list(range(nxt, nxt + size))
            for j, v in enumerate(members[1:], start=1):
                labels[v] = f"sc{x}_{i}_{j}"
            nxt += size
            edges.extend(combinations(members, 2))
            cliques.append(frozenset(members[1:]))
        attached[x] = tuple(cliques)
    return AttachedGraph(
        Graph.from_edges(nxt, edges), h, tuple(points), attached, labels
    )


def whisker(g: Graph) -> AttachedGraph:
    """W(G): one pendant vertex attached to every vertex."""
    return attach_star_cliques(g, range(g.n), 1, {x: [1] for x in range(g.n)})


def clique_whisker(g: Graph, p: CliquePartition) -> CliqueWhiskerGraph:
    """G^pi_r: each part W_i grows by t_i fresh vertices into a larger clique."""
    covered: set[int] = set()
    for part in p.parts:
        for v in part:
            if not 0 <= v < g.n:
                raise InvalidPartition(f"vertex {v} not in host")
        if not is_clique(g, part):
            raise InvalidPartition(f"part {sorted(part)} is not a clique")
        covered |= part
    if covered != set(range(g.n)):
        raise InvalidPartition("parts must cover the vertex set")
    edges = list(g.edges())
    labels = {v: str(v) for v in range(g.n)}
    fresh: list[tuple[int, ...]] = []
    nxt = g.n
    for i, (part, t) in enumerate(zip(p.parts, p.whisker_counts), start=1):
        new = list(range(nxt, nxt + t))
        for j, v in enumerate(new, start=1):
            labels[v] = f"x{i}_{j}"
        nxt += t
        edges.extend(combinations(sorted(part) + new, 2))
        fresh.append(tuple(new))
    existing = set()
    dedup = []
    for e in edges:
        key = tuple(sorted(e))
        if key not in existing:
            existing.add(key)
            dedup.append(key)
    return CliqueWhiskerGraph(
        Graph.from_edges(nxt, dedup), g, p, tuple(fresh), labels
    )


def counterexample_Gt(r: int, h1: Graph, h2: Graph, h3: Graph) -> GtGraph:
    """Spider base v1..v7 with three branch graphs glued by single edges."""
    if r < 4:
        raise InvalidInput("the construction needs r >= 4")
    base_edges = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]
    labels = {i: f"v{i + 1}" for i in range(7)}
    edges = list(base_edges)
    nxt = 7
    roots = []
    for i, h in enumerate((h1, h2, h3), start=1):
        if h.n < r - 3:
            raise InvalidInput(
                f"branch {i} has {h.n} vertices, needs at least {r - 3}"
            )
        if not is_connected(h):
            raise InvalidInput(f"branch {i} must be connected")
        offset = nxt
        roots.append(offset)
        labels[offset] = f"u{i}"
        for j in range(1, h.n):
            labels[offset + j] = f"h{i}_{j}"
        edges.extend((offset + a, offset + b) for a, b in h.edges())
        edges.append(({1: 2, 2: 4, 3: 6}[i], offset))
        nxt += h.n
    return GtGraph(Graph.from_edges(nxt, edges), tuple(range(7)), tuple(roots), labels)


def she_higher_family(n: int, t: int) -> SheHigherFamily:
    """Two n-paths joined through an adjacent pair, star-cliques of size t+1
    attached everywhere; the returned complex parameter is r = n*t + n."""
    if n < 2 or t < 1:
        raise InvalidInput("need n >= 2 and t >= 1")
    a = list(range(n))
    b = list(range(n, 2 * n))
    c, d = 2 * n, 2 * n + 1
    edges = [(a[i], a[i + 1]) for i in range(n - 1)]
    edges += [(b[i], b[i + 1]) for i in range(n - 1)]
    edges += [(a[0], c), (a[0], d), (b[0], c), (b[0], d), (c, d)]
    host = Graph.from_edges(2 * n + 2, edges)
    host_labels = {v: f"a{v + 1}" for v in a}
    host_labels.update({v: f"b{v - n + 1}" for v in b})
    host_labels.update({c: "c", d: "d"})
    attached = attach_star_cliques(
        host, range(host.n), t, {x: [t] for x in range(host.n)}
    )
    labels = dict(attached.labels)
    labels.update(host_labels)
    keep = {a[0], b[0], c, d}
    contraction = frozenset(range(attached.graph.n)) - keep
    return SheHigherFamily(host, attached.graph, n * t + n, contraction, labels)


def t3_graph() -> tuple[Graph, dict[int, str]]:
    """The fixed 9-vertex obstruction for r = 3 on block graphs."""
    edges = [(0, 1), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (5, 6), (3, 7), (7, 8)]
    return Graph.from_edges(9, edges), {i: f"x{i + 1}" for i in range(9)}


def _random_tree(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def _random_interval_chordal(n: int, rng: random.Random) -> Graph:
    spans = []
    for _ in range(n):
        x, y = rng.random(), rng.random()
        spans.append((min(x, y), max(x, y)))
    edges = [
        (i, j)
        for i, j in combinations(range(n), 2)
        if spans[i][0] <= spans[j][1] and spans[j][0] <= spans[i][1]
    ]
    return Graph.from_edges(n, edges)


def _random_block_graph(n: int, rng: random.Random) -> Graph:
    edges = []
    pool = [0]
    nxt = 1
    while nxt < n:
        root = rng.choice(pool)
        size = rng.randint(1, min(3, n - nxt))
        fresh = list(range(nxt, nxt + size))
        nxt += size
        members = [root] + fresh
        edges.extend(combinations(members, 2))
        pool.extend(fresh)
    return Graph.from_edges(n, edges)


def _random_t_graph(n: int, rng: random.Random, level: int) -> Graph:
    """Clique path with blocks hung at connectors (level 1) and optionally one
    step further (level 2)."""
    if n <= 3:
        return path_graph_local(n)
    edges = []
    # backbone clique path
    backbone = max(2, rng.randint(2, max(2, n // 2)))
    sizes = []
    used = 0
    for i in range(backbone):
        remaining = n - used - (backbone - i - 1)
        if remaining < 2:
            break
        s = rng.randint(2, min(3, remaining))
        sizes.append(s)
        used += s if i == 0 else s - 1
    cp = clique_path(sizes)
    edges = list(cp.graph.edges())
    nxt = cp.graph.n
    connectors = list(cp.path.connectors)
    first_level: list[int] = []
    while nxt < n:
        budget = n - nxt
        if connectors and (level == 1 or not first_level or rng.random() < 0.5):
            root = rng.choice(connectors)
        elif first_level:
            root = rng.choice(first_level)
        else:
            break
        size = rng.randint(1, min(2, budget))
        fresh = list(range(nxt, nxt + size))
        nxt += size
        edges.extend(combinations([root] + fresh, 2))
        if level == 2 and root in connectors:
            first_level.extend(fresh)
    return Graph.from_edges(nxt, edges)


def path_graph_local(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def random_family(kind: str, n: int, seed: int) -> Graph:
    """Deterministic seeded generator; output is certified by
    classify_families before use and regenerated until the flag holds."""
    if n < 1:
        raise InvalidInput("n must be >= 1")
    makers = {
        "tree": (_random_tree, lambda f: f.is_tree),
        "chordal": (_random_interval_chordal, lambda f: f.is_chordal),
        "block_graph": (_random_block_graph, lambda f: f.is_block_graph),
        "T1": (lambda m, rng: _random_t_graph(m, rng, 1), lambda f: f.is_T1),
        "T2": (lambda m, rng: _random_t_graph(m, rng, 2), lambda f: f.is_T2),
    }
    if kind not in makers:
        raise InvalidInput(f"unknown family kind {kind!r}")
    maker, flag = makers[kind]
    for attempt in range(200):
        rng = random.Random(f"{kind}:{n}:{seed}:{attempt}")
        g = maker(n, rng)
        if flag(classify_families(g)):
            return g
    # fall back to a guaranteed member of every supported family
    return path_graph_local(n)
