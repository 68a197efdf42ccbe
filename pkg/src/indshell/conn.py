"""Connected k-subset enumeration and the connected-subset hypergraph.

``con_r(g)`` has the same vertices as ``g`` and one edge per connected
(r+1)-subset; its independence complex is the r-independence complex of g.
"""

from __future__ import annotations

from .errors import InvalidInput
from .graphs import Graph
from .hypergraphs import Hypergraph


def connected_subsets(g: Graph, k: int) -> list[frozenset[int]]:
    """All k-subsets of V(g) inducing a connected subgraph, sorted.

    Anchored connected extension (ESU-style): every set is produced exactly
    once from its minimum vertex, using exclusive neighborhoods to rule out
    duplicates, so sparse graphs never pay the C(n, k) filter cost.
    """
    if k < 1:
        raise InvalidInput("subset size must be positive")
    if k > g.n:
        return []
    out: list[frozenset[int]] = []

    def extend(sub: list[int], ext: list[int], seen: frozenset[int], anchor: int):
        if len(sub) == k:
            out.append(frozenset(sub))
            return
        while ext:
            w = ext.pop()
            exclusive = [u for u in sorted(g.adj[w]) if u > anchor and u not in seen]
            extend(sub + [w], ext + exclusive, seen | frozenset(exclusive), anchor)

    for v in range(g.n):
        first = [u for u in sorted(g.adj[v]) if u > v]
        extend([v], list(first), frozenset([v]) | frozenset(first), v)
    return sorted(out, key=lambda s: tuple(sorted(s)))


def con_r(g: Graph, r: int) -> Hypergraph:
    """Hypergraph of connected (r+1)-subsets; con_1 coincides with the graph."""
    if r < 1:
        raise InvalidInput("r must be a positive integer")
    return Hypergraph(frozenset(range(g.n)), frozenset(connected_subsets(g, r + 1)))
