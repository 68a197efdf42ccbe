"""Simple hypergraphs with deletion, contraction and minors.

Edges form an antichain (no edge contains another).  Vertex labels are
arbitrary integers and survive minors unchanged, so certificates always
name vertices of the original host.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import EmptyEdgeCollapse, InvalidEdge, InvalidVertex


def _minimalize(sets: Iterable[frozenset[int]]) -> frozenset[frozenset[int]]:
    """Inclusion-minimal members of a family of sets."""
    by_size = sorted(set(sets), key=len)
    kept: list[frozenset[int]] = []
    for s in by_size:
        if not any(k <= s for k in kept):
            kept.append(s)
    return frozenset(kept)


@dataclass(frozen=True)
class Hypergraph:
    vertices: frozenset[int]
    edges: frozenset[frozenset[int]]

    def __post_init__(self):
        for e in self.edges:
            if not e:
                raise InvalidEdge("the empty edge is forbidden")
            if not e <= self.vertices:
                raise InvalidEdge(f"edge {sorted(e)} not inside the vertex set")
        for e, f in combinations(self.edges, 2):
            if e <= f or f <= e:
                raise InvalidEdge("edges must form an antichain")

    def canonical_form(self) -> tuple:
        return (
            tuple(sorted(self.vertices)),
            tuple(sorted(tuple(sorted(e)) for e in self.edges)),
        )

    def sorted_edges(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(e)) for e in self.edges)


@dataclass(frozen=True)
class MinorSpec:
    """Disjoint (deleted, contracted) vertex pair identifying a minor."""

    deleted: frozenset[int]
    contracted: frozenset[int]

    def __post_init__(self):
        if self.deleted & self.contracted:
            raise InvalidVertex("deleted and contracted sets must be disjoint")

    def size(self) -> int:
        return len(self.deleted) + len(self.contracted)

    def sort_key(self) -> tuple:
        return (self.size(), tuple(sorted(self.deleted)), tuple(sorted(self.contracted)))


def make_hypergraph(vertices: Iterable[int], raw_edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Build a simple hypergraph; edge families are antichain-reduced."""
    vs = frozenset(vertices)
    edges = []
    for e in raw_edges:
        e = frozenset(e)
        if not e:
            raise InvalidEdge("the empty edge is forbidden")
        if not e <= vs:
            raise InvalidEdge(f"edge {sorted(e)} not inside the vertex set")
        edges.append(e)
    return Hypergraph(vs, _minimalize(edges))


def delete_vertex(h: Hypergraph, v: int) -> Hypergraph:
    if v not in h.vertices:
        raise InvalidVertex(f"vertex {v} not in hypergraph")
    return Hypergraph(
        h.vertices - {v}, frozenset(e for e in h.edges if v not in e)
    )


def contract_vertex(h: Hypergraph, v: int) -> Hypergraph:
    if v not in h.vertices:
        raise InvalidVertex(f"vertex {v} not in hypergraph")
    if frozenset([v]) in h.edges:
        raise EmptyEdgeCollapse(f"contracting {v} would create the empty edge")
    return Hypergraph(h.vertices - {v}, _minimalize(e - {v} for e in h.edges))


def minor(h: Hypergraph, spec: MinorSpec) -> Hypergraph:
    """The minor h \\ deleted / contracted (set-based, order-independent)."""
    for v in spec.deleted | spec.contracted:
        if v not in h.vertices:
            raise InvalidVertex(f"vertex {v} not in hypergraph")
    surviving = []
    for e in h.edges:
        if e & spec.deleted:
            continue
        if e <= spec.contracted:
            raise EmptyEdgeCollapse(
                f"edge {sorted(e)} is swallowed by the contracted set"
            )
        surviving.append(e - spec.contracted)
    return Hypergraph(h.vertices - spec.deleted - spec.contracted, _minimalize(surviving))


def is_hyper_simplicial(h: Hypergraph, v: int) -> bool:
    """Any two edges through v must have a third edge inside their union minus v."""
    incident = [e for e in h.edges if v in e]
    if len(incident) <= 1:
        return True
    for e1, e2 in combinations(incident, 2):
        target = (e1 | e2) - {v}
        if not any(e3 <= target for e3 in h.edges):
            return False
    return True


def hyper_simplicial_vertices(h: Hypergraph) -> frozenset[int]:
    return frozenset(v for v in sorted(h.vertices) if is_hyper_simplicial(h, v))


def has_singleton(h: Hypergraph) -> bool:
    return any(len(e) == 1 for e in h.edges)


def subsets_by_size(vertices: Iterable[int]) -> Iterator[tuple[int, ...]]:
    vs = sorted(vertices)
    for size in range(len(vs) + 1):
        yield from combinations(vs, size)


def enumerate_contractions(
    h: Hypergraph, filter: str = "all"
) -> Iterator[tuple[frozenset[int], Hypergraph]]:
    """Stream of (V_c, h / V_c) over all contraction sets avoiding collapse.

    ``filter='c_prime'`` keeps only results without singleton edges.
    Subsets are yielded by size, then lexicographically; duplicate resulting
    hypergraphs from different V_c are still yielded.
    """
    if filter not in ("all", "c_prime"):
        raise ValueError(f"unknown filter {filter!r}")
    for vc in subsets_by_size(h.vertices):
        spec = MinorSpec(frozenset(), frozenset(vc))
        try:
            result = minor(h, spec)
        except EmptyEdgeCollapse:
            continue
        if filter == "c_prime" and has_singleton(result):
            continue
        yield frozenset(vc), result


def enumerate_minor_specs(vertices: Iterable[int]) -> Iterator[MinorSpec]:
    """All disjoint (V_d, V_c) pairs, by |V_d|+|V_c| then lexicographically."""
    vs = sorted(vertices)
    all_subsets = sorted(
        (tuple(c) for size in range(len(vs) + 1) for c in combinations(vs, size))
    )
    for total in range(len(vs) + 1):
        for vd in all_subsets:
            if len(vd) > total:
                continue
            rest = [v for v in vs if v not in vd]
            for vc in combinations(rest, total - len(vd)):
                yield MinorSpec(frozenset(vd), frozenset(vc))
