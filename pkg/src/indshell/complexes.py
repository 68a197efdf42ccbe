"""Simplicial complexes stored by facets; independence and r-independence
complexes.

Two deliberately different facet enumerations are kept side by side:
``independence_complex`` runs an incremental minimal-transversal sweep over
the edges, while ``ind_r_complex`` runs a branch-on-edge search for maximal
independent sets of the connected-subset hypergraph.  The theorem suites
cross-check one against the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .conn import con_r
from .errors import InvalidInput, InvalidVertex, NotAFace
from .graphs import Graph
from .hypergraphs import Hypergraph


@dataclass(frozen=True)
class SimplicialComplex:
    """Antichain of facets over an explicit ground set.

    The void complex (no faces at all, ``facets == frozenset()``) is distinct
    from the empty complex ``{ {} }`` whose single facet is the empty face.
    """

    ground: frozenset[int]
    facets: frozenset[frozenset[int]]

    def __post_init__(self):
        sets = sorted(self.facets, key=len)
        for i, f in enumerate(sets):
            if not f <= self.ground:
                raise InvalidInput(f"facet {sorted(f)} not inside the ground set")
            for g in sets[i + 1 :]:
                if f <= g and f != g:
                    raise InvalidInput("facets must form an antichain")

    def is_void(self) -> bool:
        return not self.facets

    def dim(self) -> int | None:
        if not self.facets:
            return None
        return max(len(f) for f in self.facets) - 1

    def facet_list(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(f)) for f in self.facets)

    def is_face(self, face: Iterable[int]) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def relabel(self, mapping: dict[int, int]) -> "SimplicialComplex":
        return SimplicialComplex(
            frozenset(mapping[v] for v in self.ground),
            frozenset(frozenset(mapping[v] for v in f) for f in self.facets),
        )


def full_simplex(vertices: Iterable[int]) -> SimplicialComplex:
    vs = frozenset(vertices)
    return SimplicialComplex(vs, frozenset([vs]))


def _min_reduce_masks(masks: Iterable[int]) -> list[int]:
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: (bin(x).count("1"), x)):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _max_reduce_masks(masks: Iterable[int]) -> list[int]:
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: (-bin(x).count("1"), x)):
        if not any(k & m == m for k in kept):
            kept.append(m)
    return kept


def _edge_masks(h: Hypergraph, labels: list[int]) -> list[int]:
    bit = {v: 1 << i for i, v in enumerate(labels)}
    masks = []
    for e in sorted(h.edges, key=lambda e: tuple(sorted(e))):
        m = 0
        for v in e:
            m |= bit[v]
        masks.append(m)
    return masks


def _masks_to_facets(masks: Iterable[int], labels: list[int]) -> frozenset[frozenset[int]]:
    out = []
    for m in masks:
        out.append(frozenset(labels[i] for i in range(len(labels)) if m >> i & 1))
    return frozenset(out)


def independence_complex(h: Hypergraph) -> SimplicialComplex:
    """Faces are the independent sets of the hypergraph.

    Facets are computed as complements of the minimal transversals, built by
    an incremental sweep over the edges; with no edges the result is the full
    simplex.
    """
    labels = sorted(h.vertices)
    edge_masks = _edge_masks(h, labels)
    transversals = [0]
    for em in edge_masks:
        bits = [1 << i for i in range(len(labels)) if em >> i & 1]
        grown: list[int] = []
        for t in transversals:
            if t & em:
                grown.append(t)
            else:
                grown.extend(t | b for b in bits)
        transversals = _min_reduce_masks(grown)
    full = (1 << len(labels)) - 1
    return SimplicialComplex(
        frozenset(labels), _masks_to_facets((full ^ t for t in transversals), labels)
    )


def is_r_independent(g: Graph, a: Iterable[int], r: int) -> bool:
    """True when every component of the induced subgraph on ``a`` has at most
    r vertices."""
    if r < 1:
        raise InvalidInput("r must be a positive integer")
    a = frozenset(a)
    for v in a:
        if not 0 <= v < g.n:
            raise InvalidVertex(f"vertex {v} out of range")
    todo = set(a)
    while todo:
        comp = {todo.pop()}
        frontier = list(comp)
        while frontier:
            u = frontier.pop()
            for w in g.adj[u]:
                if w in todo:
                    todo.discard(w)
                    comp.add(w)
                    frontier.append(w)
        if len(comp) > r:
            return False
    return True


def ind_r_complex(g: Graph, r: int) -> SimplicialComplex:
    """Complex of all r-independent vertex sets of ``g``.

    Facets are the maximal independent sets of con_r(g), enumerated by
    branching on an uncovered edge (one excluded vertex per edge, memoized on
    the excluded set) and keeping the maximal complements.
    """
    if r < 1:
        raise InvalidInput("r must be a positive integer")
    h = con_r(g, r)
    labels = sorted(h.vertices)
    edge_masks = _edge_masks(h, labels)
    bits_of = {
        em: [1 << i for i in range(len(labels)) if em >> i & 1] for em in edge_masks
    }
    seen: set[int] = set()
    hitting: list[int] = []

    def branch(excluded: int) -> None:
        if excluded in seen:
            return
        seen.add(excluded)
        for em in edge_masks:
            if not em & excluded:
                for b in bits_of[em]:
                    branch(excluded | b)
                return
        hitting.append(excluded)

    branch(0)
    full = (1 << len(labels)) - 1
    facet_masks = _max_reduce_masks(full ^ t for t in hitting)
    return SimplicialComplex(frozenset(labels), _masks_to_facets(facet_masks, labels))


def link(d: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    """Link of a face: facets are F - face over the facets F containing it."""
    face = frozenset(face)
    if not d.is_face(face):
        raise NotAFace(f"{sorted(face)} is not a face")
    return SimplicialComplex(
        d.ground - face,
        frozenset(f - face for f in d.facets if face <= f),
    )


def deletion(d: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    """Deletion of a vertex set: the faces disjoint from it."""
    face = frozenset(face)
    stripped = [f - face for f in d.facets]
    kept: list[frozenset[int]] = []
    for f in sorted(stripped, key=len, reverse=True):
        if not any(f <= k for k in kept):
            kept.append(f)
    return SimplicialComplex(d.ground - face, frozenset(kept))
