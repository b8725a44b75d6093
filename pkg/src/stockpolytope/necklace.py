"""Grassmann necklaces and cyclic interval ranks.

A Grassmann necklace on ground set {1..n} is a cyclic sequence I_1, ..., I_n
of k-subsets obeying the increment axiom: if i is in I_i, then I_{i+1} is
(I_i minus {i}) plus one element j (possibly j = i again); if i is not in
I_i, then I_{i+1} = I_i.  Indices wrap, so I_{n+1} means I_1.

Necklaces are equivalent data to decorated permutations; both directions of
the bijection live here, together with the interval rank r[a, b] used by the
cell dimension formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perms import Color, DecoratedPermutation, Permutation, anti_exceedance_count


def cyclic_position(x: int, shift: int, n: int) -> int:
    """Rank of x in the cyclic order shift < shift+1 < ... < shift-1."""
    return (x - shift) % n


def cyclic_interval(a: int, b: int, n: int) -> tuple[int, ...]:
    """Elements a, a+1, ..., b around the n-cycle, at most one full lap."""
    width = min(b - a + 1, n)
    return tuple((a - 1 + t) % n + 1 for t in range(width))


@dataclass(frozen=True)
class GrassmannNecklace:
    n: int
    k: int
    terms: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(frozenset(t) for t in self.terms))
        if self.n < 1:
            raise ValueError("ground set must be nonempty")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"k = {self.k} outside 0..{self.n}")
        if len(self.terms) != self.n:
            raise ValueError(f"expected {self.n} terms, got {len(self.terms)}")
        for idx, term in enumerate(self.terms, start=1):
            if len(term) != self.k:
                raise ValueError(f"term {idx} has size {len(term)}, expected {self.k}")
            if not term <= frozenset(range(1, self.n + 1)):
                raise ValueError(f"term {idx} is not a subset of 1..{self.n}")

    def term(self, i: int) -> frozenset[int]:
        """I_i with cyclic indexing, so term(n + 1) is term(1)."""
        return self.terms[(i - 1) % self.n]


@dataclass(frozen=True)
class NecklaceViolation:
    """First index where the increment axiom fails, with the reason."""

    index: int
    reason: str


def necklace_from_decorated(dp: DecoratedPermutation) -> GrassmannNecklace:
    """Necklace term I_i collects the anti-exceedances seen from position i.

    A value j belongs to I_i when its preimage comes strictly later than j
    in the cyclic order starting at i.  LEFT fixed points always qualify,
    RIGHT fixed points never do.

    >>> nk = necklace_from_decorated(DecoratedPermutation(Permutation((2, 4, 1, 3)), {}))
    >>> [sorted(t) for t in nk.terms]
    [[1, 3], [2, 3], [3, 4], [1, 4]]
    """
    n = dp.n
    inv = dp.perm.inverse()
    left = dp.left_fixed_points()
    terms = []
    for i in range(1, n + 1):
        members = set(left)
        for j in range(1, n + 1):
            pre = inv(j)
            if pre == j:
                continue
            if cyclic_position(pre, i, n) > cyclic_position(j, i, n):
                members.add(j)
        terms.append(frozenset(members))
    k = anti_exceedance_count(dp)
    if any(len(t) != k for t in terms):
        raise AssertionError(f"necklace terms of {dp} do not all have size {k}")
    return GrassmannNecklace(n, k, tuple(terms))


def validate_necklace(nk: GrassmannNecklace) -> NecklaceViolation | None:
    """Check the increment axiom at every cyclic index.

    Returns None when the necklace is valid, otherwise a report naming the
    first index that breaks the axiom.  Re-inserting the removed element
    (I_{i+1} = I_i with i in both) is allowed; that is how LEFT fixed points
    appear.
    """
    for i in range(1, nk.n + 1):
        cur = nk.term(i)
        nxt = nk.term(i + 1)
        if i in cur:
            if not (cur - {i}) <= nxt:
                return NecklaceViolation(
                    i, f"I_{i} contains {i} but I_{i + 1} does not extend I_{i} minus {{{i}}}"
                )
        else:
            if nxt != cur:
                return NecklaceViolation(
                    i, f"I_{i} omits {i} but I_{i + 1} differs from I_{i}"
                )
    return None


def decorated_from_necklace(nk: GrassmannNecklace) -> DecoratedPermutation:
    """Invert the necklace construction; raises ValueError on invalid input.

    When i is absent from I_i the point is a RIGHT fixed point.  Otherwise
    pi(i) is the single element that I_{i+1} gains over I_i minus {i}; if
    that element is i itself, the point is a LEFT fixed point.
    """
    violation = validate_necklace(nk)
    if violation is not None:
        raise ValueError(f"invalid necklace at index {violation.index}: {violation.reason}")
    images = [0] * nk.n
    colors: dict[int, Color] = {}
    for i in range(1, nk.n + 1):
        cur = nk.term(i)
        nxt = nk.term(i + 1)
        if i not in cur:
            images[i - 1] = i
            colors[i] = Color.RIGHT
        else:
            gained = nxt - (cur - {i})
            if len(gained) != 1:
                raise AssertionError(f"axiom gave {len(gained)} new elements at index {i}")
            (j,) = gained
            images[i - 1] = j
            if j == i:
                colors[i] = Color.LEFT
    perm = Permutation(tuple(images))
    return DecoratedPermutation(perm, colors)


def cyclic_interval_rank(nk: GrassmannNecklace, a: int, b: int) -> int:
    """Rank of the cyclic column interval [a..b], computed as |I_a ∩ [a..b]|.

    ``b`` may exceed n and wraps; a window of width n or more covers the
    whole ground set and has rank k.
    """
    if not 1 <= a <= nk.n:
        raise ValueError(f"interval start {a} outside 1..{nk.n}")
    if not a <= b <= a + nk.n:
        raise ValueError(f"interval end {b} outside [{a}, {a + nk.n}]")
    if b - a + 1 >= nk.n:
        return nk.k
    window = cyclic_interval(a, b, nk.n)
    return len(nk.term(a).intersection(window))
