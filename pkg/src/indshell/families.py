"""Graph-family recognizers and clique paths.

Contains the clique-path machinery (paths of cliques chained through single
shared vertices) and the classification flags used by the theorem suites:
forests, chordal graphs, block graphs, caterpillars/lobsters and their
block-graph generalizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidInput
from .graphs import (
    Graph,
    blocks,
    connected_components,
    elimination_layers,
    induced_subgraph,
    is_block_graph,
    is_clique,
    is_connected,
    _bfs_dist,
)


@dataclass(frozen=True)
class CliquePath:
    """Cliques B_1..B_n chained linearly; consecutive pairs share exactly
    the connector x_i, non-consecutive cliques are disjoint."""

    cliques: tuple[frozenset[int], ...]
    connectors: tuple[int, ...]

    def __post_init__(self):
        if len(self.connectors) != max(len(self.cliques) - 1, 0):
            raise InvalidInput("need exactly n-1 connectors for n cliques")
        for i, x in enumerate(self.connectors):
            if self.cliques[i] & self.cliques[i + 1] != {x}:
                raise InvalidInput(f"cliques {i},{i + 1} must share exactly {{x_{i}}}")
        for i, j in combinations(range(len(self.cliques)), 2):
            if j > i + 1 and self.cliques[i] & self.cliques[j]:
                raise InvalidInput(f"non-consecutive cliques {i},{j} intersect")

    def __len__(self) -> int:
        return len(self.cliques)

    def vertex_set(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for c in self.cliques:
            out |= c
        return out


@dataclass(frozen=True)
class FamilyFlags:
    is_forest: bool
    is_tree: bool
    is_chordal: bool
    is_block_graph: bool
    is_caterpillar: bool
    is_lobster: bool
    is_T1: bool
    is_T2: bool


def is_forest(g: Graph) -> bool:
    return g.edge_count() == g.n - len(connected_components(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_forest(g) and is_connected(g)


def _sequences_extend(cliques, seq, used, before_last, out, best):
    """DFS over clique-path extensions; ``out`` keeps only maximum-length
    sequences found so far, ``best`` is a one-element list with their length."""
    if len(seq) > best[0]:
        best[0] = len(seq)
        out.clear()
    if len(seq) == best[0]:
        out.append(tuple(seq))
    last = seq[-1]
    for cand in cliques:
        inter = cand & used
        if len(inter) != 1:
            continue
        (x,) = inter
        if x not in last or x in before_last:
            continue
        seq.append(cand)
        _sequences_extend(cliques, seq, used | cand, before_last | last, out, best)
        seq.pop()


def _max_clique_path_sequences(cliques) -> tuple[int, list[tuple[frozenset[int], ...]]]:
    """All maximum-length clique paths over the given candidate cliques.

    Both orientations of each path are produced; callers' predicates are
    orientation-invariant.
    """
    out: list[tuple[frozenset[int], ...]] = []
    best = [0]
    for start in cliques:
        _sequences_extend(cliques, [start], start, frozenset(), out, best)
    return best[0], out


def _connectors(seq) -> tuple[int, ...]:
    return tuple(
        next(iter(seq[i] & seq[i + 1])) for i in range(len(seq) - 1)
    )


def maximum_clique_path(g: Graph) -> CliquePath:
    """A maximum clique path formed from the blocks of a connected block graph.

    Ties are broken canonically: lexicographically smallest sorted connector
    sequence, then smallest clique sequence over both orientations.  For trees
    this is a longest path.
    """
    if g.n == 0 or not is_connected(g):
        raise InvalidInput("maximum_clique_path needs a connected graph")
    if not is_block_graph(g):
        raise InvalidInput("maximum_clique_path needs a block graph")
    comps, _ = blocks(g)
    _, seqs = _max_clique_path_sequences(comps)

    def key(seq):
        forward = tuple(tuple(sorted(c)) for c in seq)
        backward = tuple(tuple(sorted(c)) for c in reversed(seq))
        return (tuple(sorted(_connectors(seq))), min(forward, backward))

    chosen = min(seqs, key=key)
    if tuple(tuple(sorted(c)) for c in chosen) > tuple(
        tuple(sorted(c)) for c in reversed(chosen)
    ):
        chosen = tuple(reversed(chosen))
    return CliquePath(tuple(chosen), _connectors(chosen))


def _all_subcliques(g: Graph) -> list[frozenset[int]]:
    """Cliques with >= 2 vertices, grouped inside blocks (block graphs only)."""
    comps, _ = blocks(g)
    out = []
    for comp in comps:
        vs = sorted(comp)
        for size in range(2, len(vs) + 1):
            out.extend(frozenset(c) for c in combinations(vs, size))
    return out


def _component_t1_t2(g: Graph) -> tuple[bool, bool]:
    """T1/T2 flags of one connected component.

    Tested against every maximum-length clique-path subgraph: the component
    qualifies when some maximum path satisfies the off-path clause.  Blocks
    whose vertices all lie on the path are exempt; the others must hang at a
    connecting vertex (T1), or hang by a single shared vertex off a clique
    that does (T2 only).
    """
    if not is_block_graph(g):
        return False, False
    if g.n <= 1:
        return True, True
    comps = [b for b in blocks(g)[0] if len(b) >= 2]
    _, seqs = _max_clique_path_sequences(_all_subcliques(g))
    t1 = t2 = False
    for seq in seqs:
        vp = frozenset().union(*seq)
        conns = set(_connectors(seq))
        off = [b for b in comps if not b <= vp]
        anchored = [
            b for b in off if len(b & vp) == 1 and next(iter(b & vp)) in conns
        ]
        if len(anchored) == len(off):
            return True, True
        ok2 = True
        for b in off:
            if b in anchored:
                continue
            if b & vp:
                ok2 = False
                break
            if not any(len(b & a) == 1 for a in anchored):
                ok2 = False
                break
        t2 = t2 or ok2
    return t1, t2


def _longest_paths_tree(g: Graph) -> list[list[int]]:
    """All longest paths of a tree, one per unordered endpoint pair."""
    dists = [_bfs_dist(g, v) for v in range(g.n)]
    diam = max(max(row) for row in dists)
    paths = []
    for u in range(g.n):
        for v in range(u, g.n):
            if dists[u][v] != diam:
                continue
            # walk the unique u-v path by descending distance to v
            path = [u]
            cur = u
            while cur != v:
                cur = next(w for w in g.adj[cur] if dists[v][w] == dists[v][cur] - 1)
                path.append(cur)
            paths.append(path)
    return paths


def _caterpillar_lobster(g: Graph) -> tuple[bool, bool]:
    if not is_tree(g):
        return False, False
    if g.n <= 3:
        return True, True
    dists = [_bfs_dist(g, v) for v in range(g.n)]
    cat = lob = False
    for path in _longest_paths_tree(g):
        on = set(path)
        k = len(path)
        inner1 = path[1 : k - 1]
        inner2 = path[2 : k - 2]
        off = [z for z in range(g.n) if z not in on]
        if all(any(dists[z][y] == 1 for y in inner1) for z in off):
            return True, True
        if not lob and all(
            any(dists[z][y] == 1 for y in inner1)
            or any(dists[z][y] == 2 for y in inner2)
            for z in off
        ):
            lob = True
    return cat, lob


def classify_families(g: Graph) -> FamilyFlags:
    """Structural family flags.  Caterpillar/lobster apply to trees only and
    are false otherwise; T1/T2 are tested per connected component."""
    forest = is_forest(g)
    tree = is_tree(g)
    chordal = elimination_layers(g).exhausts()
    block = is_block_graph(g)
    cat, lob = _caterpillar_lobster(g)
    t1 = t2 = block
    if block and g.n:
        for comp in connected_components(g):
            sub, _ = induced_subgraph(g, comp)
            c1, c2 = _component_t1_t2(sub)
            t1 = t1 and c1
            t2 = t2 and c2
            if not t2:
                break
    return FamilyFlags(forest, tree, chordal, block, cat, lob, t1, t2)
