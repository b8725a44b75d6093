"""Positroids: Gale order, bases, rank machinery, and cell dimension.

A positroid of rank k on {1..n} is the matroid whose bases are the
k-subsets H with H >=_i I_i for every term of a Grassmann necklace, where
>=_i compares sorted subsets componentwise in the cyclic order starting
at i.  Basis enumeration filters all C(n, k) subsets, which is fine at
desk scale (n up to around 30 with small k).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .necklace import (
    GrassmannNecklace,
    cyclic_interval,
    cyclic_interval_rank,
    necklace_from_decorated,
    validate_necklace,
)
from .perms import DecoratedPermutation, affine_lift


@dataclass(frozen=True)
class GaleOrder:
    """The cyclic order shift < shift+1 < ... < shift-1 on {1..n}."""

    n: int
    shift: int

    def __post_init__(self) -> None:
        if not 1 <= self.shift <= self.n:
            raise ValueError(f"shift {self.shift} outside 1..{self.n}")

    def position(self, x: int) -> int:
        return (x - self.shift) % self.n

    def sort(self, xs: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(xs, key=self.position))

    def geq(self, h: Iterable[int], i: Iterable[int]) -> bool:
        """Componentwise domination of sorted subsets in this order."""
        hs = self.sort(h)
        ks = self.sort(i)
        if len(hs) != len(ks):
            raise ValueError(f"subsets must have equal size, got {len(hs)} and {len(ks)}")
        return all(self.position(a) >= self.position(b) for a, b in zip(hs, ks))


def gale_geq(h: Iterable[int], i: Iterable[int], shift: int, n: int) -> bool:
    """H >=_shift I on the ground set {1..n}."""
    return GaleOrder(n, shift).geq(h, i)


@dataclass(frozen=True)
class Positroid:
    """Ground size, rank, and the set of bases.

    The constructor checks shapes only; use ``verify_exchange_axiom`` to
    test that a collection really is a matroid.
    """

    n: int
    k: int
    bases: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bases", frozenset(frozenset(b) for b in self.bases))
        if self.n < 1:
            raise ValueError("ground set must be nonempty")
        if not self.bases:
            raise ValueError("a matroid has at least one basis")
        ground = frozenset(range(1, self.n + 1))
        for b in self.bases:
            if len(b) != self.k:
                raise ValueError(f"basis {sorted(b)} has size {len(b)}, expected {self.k}")
            if not b <= ground:
                raise ValueError(f"basis {sorted(b)} is not a subset of 1..{self.n}")

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1))


@dataclass(frozen=True)
class ExchangeFailure:
    """Witness (I, J, i) with no j in J - I making I - i + j a basis."""

    basis_a: frozenset[int]
    basis_b: frozenset[int]
    element: int


def positroid_from_necklace(nk: GrassmannNecklace) -> Positroid:
    """Bases are the k-subsets dominating every necklace term in its order.

    >>> from .necklace import necklace_from_decorated
    >>> from .perms import DecoratedPermutation, Permutation
    >>> nk = necklace_from_decorated(DecoratedPermutation(Permutation((2, 4, 1, 3)), {}))
    >>> sorted(sorted(b) for b in positroid_from_necklace(nk).bases)
    [[1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]
    """
    violation = validate_necklace(nk)
    if violation is not None:
        raise ValueError(f"invalid necklace at index {violation.index}: {violation.reason}")
    n, k = nk.n, nk.k
    # Precompute the sorted position vector of each term in its own order.
    targets = []
    for i in range(1, n + 1):
        targets.append(sorted((x - i) % n for x in nk.term(i)))
    bases = []
    for combo in itertools.combinations(range(1, n + 1), k):
        ok = True
        for i in range(1, n + 1):
            hpos = sorted((x - i) % n for x in combo)
            if any(h < t for h, t in zip(hpos, targets[i - 1])):
                ok = False
                break
        if ok:
            bases.append(frozenset(combo))
    return Positroid(n, k, frozenset(bases))


def positroid_from_decorated(dp: DecoratedPermutation) -> Positroid:
    return positroid_from_necklace(necklace_from_decorated(dp))


def verify_exchange_axiom(m: Positroid) -> ExchangeFailure | None:
    """Exhaustive basis-exchange check; None means the axiom holds.

    For every pair of bases I, J and every i in I - J there must be some
    j in J - I with (I - {i}) + {j} again a basis.
    """
    for a in m.bases:
        for b in m.bases:
            for i in a - b:
                if not any((a - {i}) | {j} in m.bases for j in b - a):
                    return ExchangeFailure(a, b, i)
    return None


def matroid_rank(m: Positroid, subset: Iterable[int]) -> int:
    """Size of the largest independent subset of ``subset``.

    Equals the maximum of |subset ∩ B| over the bases B.
    """
    s = frozenset(subset)
    if not s <= m.ground:
        raise ValueError(f"{sorted(s)} is not a subset of 1..{m.n}")
    cap = min(m.k, len(s))
    best = 0
    for b in m.bases:
        best = max(best, len(s & b))
        if best == cap:
            break
    return best


def circuits(m: Positroid) -> tuple[frozenset[int], ...]:
    """Minimal dependent sets, enumerated by size (never larger than k + 1)."""
    found: list[frozenset[int]] = []
    ground = sorted(m.ground)
    for size in range(1, m.k + 2):
        for combo in itertools.combinations(ground, size):
            s = frozenset(combo)
            if any(c <= s for c in found):
                continue
            if matroid_rank(m, s) < len(s):
                found.append(s)
    return tuple(sorted(found, key=sorted))


def connected_components(m: Positroid) -> tuple[tuple[int, ...], ...]:
    """Partition of {1..n} into matroid connected components.

    Two elements lie in a common component exactly when some circuit
    contains both.  That relation coincides with single-element basis
    exchange: e and f share a circuit iff some basis B has e in B, f
    outside, and B - e + f again a basis.  The exchange form is what gets
    computed; loops and coloops end up as singletons.  For a positroid the
    result is non-crossing in the cyclic order.
    """
    parent = {e: e for e in m.ground}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for b in m.bases:
        outside = m.ground - b
        for e in b:
            for f in outside:
                if (b - {e}) | {f} in m.bases:
                    union(e, f)
    blocks: dict[int, list[int]] = {}
    for e in sorted(m.ground):
        blocks.setdefault(find(e), []).append(e)
    return tuple(tuple(v) for _, v in sorted(blocks.items()))


def gale_minimum(m: Positroid, shift: int) -> frozenset[int]:
    """The basis below every other basis in the <=_shift Gale order.

    Positroids have one for every shift (it is the necklace term I_shift).
    Raises ValueError when no basis dominates from below, which means the
    input is not a positroid.
    """
    order = GaleOrder(m.n, shift)
    candidate = min(m.bases, key=lambda b: tuple(order.position(x) for x in order.sort(b)))
    for b in m.bases:
        if not order.geq(b, candidate):
            raise ValueError(f"no Gale minimum at shift {shift}: {sorted(candidate)} "
                             f"does not sit below {sorted(b)}")
    return candidate


def necklace_of_positroid(m: Positroid) -> GrassmannNecklace:
    """Recover the necklace as the tuple of Gale minima."""
    terms = tuple(gale_minimum(m, i) for i in range(1, m.n + 1))
    return GrassmannNecklace(m.n, m.k, terms)


def cell_dimension(dp: DecoratedPermutation) -> int:
    """Dimension of the cell indexed by a decorated permutation.

    With f the affine lift and I the necklace, the dimension is the sum of
    the interval ranks r[i, f(i)] minus k squared.

    >>> from .perms import DecoratedPermutation, Permutation
    >>> cell_dimension(DecoratedPermutation(Permutation((2, 4, 1, 3)), {}))
    3
    """
    nk = necklace_from_decorated(dp)
    lift = affine_lift(dp)
    total = sum(cyclic_interval_rank(nk, i, lift.f[i - 1]) for i in range(1, dp.n + 1))
    return total - nk.k**2


def interval_rank_summands(dp: DecoratedPermutation) -> tuple[int, ...]:
    """The r[i, f(i)] values feeding the dimension formula, in order."""
    nk = necklace_from_decorated(dp)
    lift = affine_lift(dp)
    return tuple(cyclic_interval_rank(nk, i, lift.f[i - 1]) for i in range(1, dp.n + 1))
