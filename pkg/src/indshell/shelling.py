"""Shellability of (not necessarily pure) simplicial complexes.

The searcher orders facet prefixes and extends them only by facets passing
the pairwise codimension-one criterion; prefixes are memoized by the *set*
of placed facets, so an order permutation is never re-explored.  NotShellable
is returned only after exhaustive refutation; running out of budget is an
explicit Unknown outcome, not an error.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .complexes import SimplicialComplex
from .errors import InvalidOrder, TooLarge

SHELLABLE = "shellable"
NOT_SHELLABLE = "not_shellable"
UNKNOWN = "unknown"

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class ShellingCertificate:
    order: tuple[frozenset[int], ...]
    verified: bool


@dataclass(frozen=True)
class ShellingDecision:
    status: str
    certificate: ShellingCertificate | None
    nodes: int

    def __bool__(self) -> bool:
        return self.status == SHELLABLE


def canonical_facet_order(facets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """Descending dimension, then lexicographic on the sorted vertex tuple."""
    return sorted(facets, key=lambda f: (-len(f), tuple(sorted(f))))


def _pairwise_step_ok(
    prefix: Sequence[frozenset[int]], fk: frozenset[int]
) -> bool:
    """For every earlier facet F_i there must be an earlier near-miss F_j with
    F_k n F_i <= F_k n F_j and |F_k \\ F_j| = 1."""
    near = [fj for fj in prefix if len(fk - fj) == 1]
    for fi in prefix:
        inter = fk & fi
        if not any(inter <= (fk & fj) for fj in near):
            return False
    return True


def _definition_step_ok(
    prefix: Sequence[frozenset[int]], fk: frozenset[int]
) -> bool:
    """Definition-direct check: <F_k> n <F_1..F_{k-1}> is pure of dimension
    dim F_k - 1.  The intersection complex is generated by the pairwise
    intersections, so its facets are their inclusion-maximal members."""
    inters = {fk & fi for fi in prefix}
    maximal = [
        s for s in inters if not any(s < t for t in inters)
    ]
    return all(len(s) == len(fk) - 1 for s in maximal)


def _check_permutation(d: SimplicialComplex, order: Sequence[frozenset[int]]) -> list[frozenset[int]]:
    order = [frozenset(f) for f in order]
    if len(order) != len(d.facets) or set(order) != set(d.facets) or len(set(order)) != len(order):
        raise InvalidOrder("order is not a permutation of the facets")
    return order


def verify_shelling(d: SimplicialComplex, order: Sequence[Iterable[int]]) -> bool:
    """Is the given facet permutation a shelling order?  (pairwise criterion)"""
    seq = _check_permutation(d, [frozenset(f) for f in order])
    return all(_pairwise_step_ok(seq[:k], seq[k]) for k in range(1, len(seq)))


def verify_shelling_direct(d: SimplicialComplex, order: Sequence[Iterable[int]]) -> bool:
    """Definition-direct variant of verify_shelling (no pairwise shortcut)."""
    seq = _check_permutation(d, [frozenset(f) for f in order])
    return all(_definition_step_ok(seq[:k], seq[k]) for k in range(1, len(seq)))


class _BudgetExhausted(Exception):
    pass


class _Search:
    """Backtracking over facet prefixes with incremental candidate state.

    For an unplaced facet k, ``avail[k]`` collects the vertices x such that
    some placed near-miss F_j realizes F_k n F_j = F_k - {x}; facet k may be
    placed exactly when every placed F_i satisfies (F_k \\ F_i) & avail[k] != 0,
    i.e. ``blockers[k]`` is empty.
    """

    def __init__(self, facets: list[frozenset[int]], budget: int):
        self.t = len(facets)
        ground = sorted(set().union(*facets)) if facets else []
        bit = {v: 1 << i for i, v in enumerate(ground)}
        self.masks = [sum(bit[v] for v in f) for f in facets]
        self.diff = [
            [self.masks[k] & ~self.masks[i] for i in range(self.t)]
            for k in range(self.t)
        ]
        self.near = [
            [bin(self.diff[k][i]).count("1") == 1 for i in range(self.t)]
            for k in range(self.t)
        ]
        self.budget = budget
        self.nodes = 0
        self.failed: set[int] = set()
        self.avail = [0] * self.t
        self.blockers: list[set[int]] = [set() for _ in range(self.t)]

    def _place(self, m: int, placed_mask: int) -> tuple[list[int], list[set[int]]]:
        snap_avail = list(self.avail)
        snap_block = [set(b) for b in self.blockers]
        for k in range(self.t):
            if k == m or placed_mask >> k & 1:
                continue
            d_km = self.diff[k][m]
            if self.near[k][m] and not self.avail[k] & d_km:
                self.avail[k] |= d_km
                if self.blockers[k]:
                    a = self.avail[k]
                    self.blockers[k] = {
                        i for i in self.blockers[k] if not self.diff[k][i] & a
                    }
            if not d_km & self.avail[k]:
                self.blockers[k].add(m)
        return snap_avail, snap_block

    def run(self) -> tuple[int, ...] | None:
        order: list[int] = []

        def dfs(placed_mask: int) -> bool:
            self.nodes += 1
            if self.nodes > self.budget:
                raise _BudgetExhausted
            if len(order) == self.t:
                return True
            if placed_mask in self.failed:
                return False
            for k in range(self.t):
                if placed_mask >> k & 1 or self.blockers[k]:
                    continue
                snap = self._place(k, placed_mask)
                order.append(k)
                if dfs(placed_mask | (1 << k)):
                    return True
                order.pop()
                self.avail, self.blockers = list(snap[0]), [set(b) for b in snap[1]]
            self.failed.add(placed_mask)
            return False

        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 3 * self.t + 100))
        try:
            found = dfs(0)
        finally:
            sys.setrecursionlimit(limit)
        return tuple(order) if found else None


def is_shellable(d: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> ShellingDecision:
    """Decide shellability by backtracking search.

    Complexes with at most one facet (including the void complex and the
    complex whose only face is empty) are shellable by convention.
    """
    facets = canonical_facet_order(d.facets)
    if len(facets) <= 1:
        cert = ShellingCertificate(tuple(facets), True)
        return ShellingDecision(SHELLABLE, cert, 0)
    search = _Search(facets, budget)
    try:
        found = search.run()
    except _BudgetExhausted:
        return ShellingDecision(UNKNOWN, None, search.nodes)
    if found is None:
        return ShellingDecision(NOT_SHELLABLE, None, search.nodes)
    order = tuple(facets[k] for k in found)
    assert verify_shelling(d, order)
    return ShellingDecision(SHELLABLE, ShellingCertificate(order, True), search.nodes)


def brute_force_shellable(d: SimplicialComplex) -> ShellingDecision:
    """Independent oracle: try every facet permutation with the
    definition-direct check.  Limited to 8 facets."""
    facets = canonical_facet_order(d.facets)
    if len(facets) > 8:
        raise TooLarge("brute force is limited to 8 facets")
    if len(facets) <= 1:
        return ShellingDecision(SHELLABLE, ShellingCertificate(tuple(facets), True), 0)
    tried = 0
    for perm in permutations(facets):
        tried += 1
        if all(_definition_step_ok(perm[:k], perm[k]) for k in range(1, len(perm))):
            cert = ShellingCertificate(tuple(perm), True)
            return ShellingDecision(SHELLABLE, cert, tried)
    return ShellingDecision(NOT_SHELLABLE, None, tried)
