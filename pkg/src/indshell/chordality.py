"""w-chordality of hypergraphs: every minor must contain a simplicial vertex.

The decision procedures enumerate minors in a canonical order (by
|V_d| + |V_c|, then lexicographically) and return the first simplicial-
vertex-free minor as a refutation certificate, so small certificates are
found first and runs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .conn import con_r
from .errors import IndshellError, InvalidInput
from .graphs import Graph
from .hypergraphs import (
    Hypergraph,
    MinorSpec,
    enumerate_contractions,
    hyper_simplicial_vertices,
    minor,
)

W_CHORDAL = "w_chordal"
NOT_W_CHORDAL = "not_w_chordal"
UNKNOWN = "unknown"

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class BadMinorCertificate:
    """Witness that a hypergraph is not w-chordal: a minor without any
    simplicial vertex."""

    spec: MinorSpec
    minor_vertices: frozenset[int]
    minor_edges: frozenset[frozenset[int]]


@dataclass(frozen=True)
class ChordalityDecision:
    status: str
    certificate: BadMinorCertificate | None
    minors_checked: int

    def __bool__(self) -> bool:
        return self.status == W_CHORDAL


def _min_reduce(masks: list[int]) -> tuple[int, ...]:
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: (bin(x).count("1"), x)):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(kept)


def _exists_simplicial(vmask: int, edges: tuple[int, ...], nbits: int) -> bool:
    if vmask == 0:
        # a minor with no surviving vertex never refutes chordality
        return True
    for i in range(nbits):
        vbit = 1 << i
        if not vmask & vbit:
            continue
        incident = [e for e in edges if e & vbit]
        if len(incident) <= 1:
            return True
        ok = True
        for e1, e2 in combinations(incident, 2):
            target = (e1 | e2) & ~vbit
            if not any(e3 & ~target == 0 for e3 in edges):
                ok = False
                break
        if ok:
            return True
    return False


def _spec_masks(labels: list[int], contractions_only: bool) -> Iterator[tuple[int, int]]:
    """(V_d, V_c) masks by total size then lexicographic sorted-tuple order."""
    n = len(labels)
    idx = list(range(n))
    all_subsets = sorted(
        tuple(c) for size in range(n + 1) for c in combinations(idx, size)
    )
    for total in range(n + 1):
        for vd in all_subsets if not contractions_only else [()]:
            if len(vd) > total:
                continue
            rest = [i for i in idx if i not in vd]
            for vc in combinations(rest, total - len(vd)):
                yield sum(1 << i for i in vd), sum(1 << i for i in vc)


def _decide(
    h: Hypergraph, budget: int, contractions_only: bool
) -> ChordalityDecision:
    labels = sorted(h.vertices)
    n = len(labels)
    bit = {v: 1 << i for i, v in enumerate(labels)}
    edge_masks = [sum(bit[v] for v in e) for e in sorted(h.edges, key=lambda e: tuple(sorted(e)))]
    full = (1 << n) - 1
    checked = 0
    known_good: set[tuple[int, tuple[int, ...]]] = set()
    for vd, vc in _spec_masks(labels, contractions_only):
        checked += 1
        if checked > budget:
            return ChordalityDecision(UNKNOWN, None, checked - 1)
        survivors = []
        collapsed = False
        for em in edge_masks:
            if em & vd:
                continue
            rem = em & ~vc
            if rem == 0:
                collapsed = True
                break
            survivors.append(rem)
        if collapsed:
            continue
        vmask = full & ~vd & ~vc
        minimal = _min_reduce(survivors)
        key = (vmask, minimal)
        if key in known_good:
            continue
        if _exists_simplicial(vmask, minimal, n):
            known_good.add(key)
            continue
        spec = MinorSpec(
            frozenset(labels[i] for i in range(n) if vd >> i & 1),
            frozenset(labels[i] for i in range(n) if vc >> i & 1),
        )
        bad = minor(h, spec)
        return ChordalityDecision(
            NOT_W_CHORDAL,
            BadMinorCertificate(spec, bad.vertices, bad.edges),
            checked,
        )
    return ChordalityDecision(W_CHORDAL, None, checked)


def is_w_chordal(h: Hypergraph, budget: int = DEFAULT_BUDGET) -> ChordalityDecision:
    """Exhaustively check that every minor of h has a simplicial vertex."""
    return _decide(h, budget, contractions_only=False)


def every_contraction_simplicial(
    h: Hypergraph, budget: int = DEFAULT_BUDGET
) -> ChordalityDecision:
    """Restriction of is_w_chordal to c-minors (V_d empty)."""
    return _decide(h, budget, contractions_only=True)


def verify_bad_minor(h: Hypergraph, cert: BadMinorCertificate) -> bool:
    """Re-derive the certificate minor and confirm it has no simplicial vertex."""
    try:
        m = minor(h, cert.spec)
    except IndshellError:
        return False
    return (
        m.vertices == cert.minor_vertices
        and m.edges == cert.minor_edges
        and not hyper_simplicial_vertices(m)
    )


def c_prime_minor_stream(
    g: Graph, r: int
) -> Iterator[tuple[frozenset[int], Hypergraph]]:
    """Stream of (contracted set, c'-minor) over con_r(g)."""
    if r < 1:
        raise InvalidInput("r must be a positive integer")
    yield from enumerate_contractions(con_r(g, r), filter="c_prime")
