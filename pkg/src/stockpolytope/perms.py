"""Permutations, decorated permutations, wiring words, and affine lifts.

One-line notation is 1-based throughout: a permutation of {1..n} is stored
as the tuple (pi(1), ..., pi(n)).  A wiring word is a time-ordered sequence
of adjacent transpositions s_p; multiplying its letters left to right from
the identity gives the arrangement on the right edge of the wiring diagram.

Everything here is immutable and hashable, so values can be shared freely
between threads and used as cache keys.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Mapping


class Color(Enum):
    """Direction tag carried by a fixed point of a decorated permutation."""

    RIGHT = "right"
    LEFT = "left"


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation.

    >>> Permutation((2, 4, 1, 3))(1)
    2
    >>> Permutation((2, 4, 1, 3)).inverse().images
    (3, 1, 4, 2)
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(
                f"not one-line notation for a permutation of 1..{len(images)}: {images!r}"
            )

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} outside 1..{self.n}")
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.images, start=1) if v == i)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))


@dataclass(frozen=True)
class DecoratedPermutation:
    """A permutation whose fixed points each point RIGHT or LEFT.

    ``colors`` may be given as a mapping or as (point, Color) pairs; it must
    cover every fixed point exactly once and nothing else.
    """

    perm: Permutation
    colors: tuple[tuple[int, Color], ...]

    def __post_init__(self) -> None:
        raw = self.colors
        if isinstance(raw, Mapping):
            pairs = tuple(sorted((int(i), c) for i, c in raw.items()))
        else:
            pairs = tuple(sorted((int(i), c) for i, c in raw))
        object.__setattr__(self, "colors", pairs)
        fixed = set(self.perm.fixed_points())
        seen: dict[int, Color] = {}
        for i, c in pairs:
            if not isinstance(c, Color):
                raise TypeError(f"color of {i} must be a Color, got {c!r}")
            if i not in fixed:
                raise ValueError(f"{i} is not a fixed point and cannot carry a color")
            if i in seen:
                raise ValueError(f"fixed point {i} colored twice")
            seen[i] = c
        if set(seen) != fixed:
            missing = sorted(fixed - set(seen))
            raise ValueError(f"fixed points without a color: {missing}")

    @classmethod
    def uniform(cls, perm: Permutation, color: Color = Color.RIGHT) -> "DecoratedPermutation":
        """Decorate every fixed point of ``perm`` with the same color."""
        return cls(perm, {i: color for i in perm.fixed_points()})

    @property
    def n(self) -> int:
        return self.perm.n

    def colors_dict(self) -> dict[int, Color]:
        return dict(self.colors)

    def color_of(self, i: int) -> Color:
        for point, color in self.colors:
            if point == i:
                return color
        raise KeyError(f"{i} is not a colored fixed point")

    def left_fixed_points(self) -> frozenset[int]:
        return frozenset(i for i, c in self.colors if c is Color.LEFT)


@dataclass(frozen=True)
class WiringWord:
    """A sequence of adjacent transpositions s_p with p in {1..n-1}."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(p) for p in self.letters))
        if self.n < 1:
            raise ValueError("wiring words need at least one wire")
        for p in self.letters:
            if not 1 <= p <= self.n - 1:
                raise ValueError(f"letter s_{p} outside 1..{self.n - 1}")

    def __len__(self) -> int:
        return len(self.letters)

    def prefix(self, t: int) -> "WiringWord":
        if not 0 <= t <= len(self.letters):
            raise IndexError(f"prefix length {t} outside 0..{len(self.letters)}")
        return WiringWord(self.n, self.letters[:t])


@dataclass(frozen=True)
class BoundedAffinePermutation:
    """The shifted form of a decorated permutation.

    ``f`` maps {1..n} into {1..2n} with i <= f(i) <= i + n, and the residues
    of f mod n are a bijection.  f(i) > n marks an anti-exceedance; the count
    of those is ``k``.
    """

    n: int
    f: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "f", tuple(int(v) for v in self.f))
        if len(self.f) != self.n:
            raise ValueError(f"expected {self.n} values, got {len(self.f)}")
        for i, v in enumerate(self.f, start=1):
            if not i <= v <= i + self.n:
                raise ValueError(f"f({i}) = {v} outside [{i}, {i + self.n}]")
        residues = sorted((v - 1) % self.n + 1 for v in self.f)
        if residues != list(range(1, self.n + 1)):
            raise ValueError(f"residues of {self.f} mod {self.n} are not a bijection")

    @property
    def k(self) -> int:
        return sum(1 for v in self.f if v > self.n)


def word_to_permutation(word: WiringWord) -> Permutation:
    """Multiply the word's letters left to right starting from the identity.

    Letter p swaps the entries currently in positions p and p+1, so the
    result is the right-edge arrangement of the wiring diagram: entry q
    names the wire exiting at height q.

    >>> word_to_permutation(WiringWord(4, (1, 3, 2))).images
    (2, 4, 1, 3)
    >>> word_to_permutation(WiringWord(4, (1, 1))).is_identity()
    True
    """
    line = list(range(1, word.n + 1))
    for p in word.letters:
        line[p - 1], line[p] = line[p], line[p - 1]
    return Permutation(tuple(line))


def inversions(perm: Permutation) -> int:
    """Count pairs i < j with pi(i) > pi(j)."""
    images = perm.images
    return sum(
        1
        for i in range(len(images))
        for j in range(i + 1, len(images))
        if images[i] > images[j]
    )


def is_reduced(word: WiringWord) -> bool:
    """True when no shorter word has the same product.

    A word is reduced exactly when its length equals the inversion count of
    its product.  Markets may cross and re-cross, so words are not required
    to be reduced; this is a queryable property, not an invariant.
    """
    return inversions(word_to_permutation(word)) == len(word.letters)


def anti_exceedance_count(dp: DecoratedPermutation) -> int:
    """Number of positions with pi(i) < i, plus LEFT-colored fixed points.

    >>> anti_exceedance_count(DecoratedPermutation(Permutation((2, 4, 1, 3)), {}))
    2
    """
    drops = sum(1 for i, v in enumerate(dp.perm.images, start=1) if v < i)
    return drops + len(dp.left_fixed_points())


def affine_lift(dp: DecoratedPermutation) -> BoundedAffinePermutation:
    """Shift a decorated permutation into bounded affine form.

    Values pi(i) < i move up by n; RIGHT fixed points stay at i and LEFT
    fixed points go to i + n.  The lift is injective and ``k`` equals
    ``anti_exceedance_count``.

    >>> dp = DecoratedPermutation(Permutation((2, 4, 1, 3)), {})
    >>> affine_lift(dp).f
    (2, 4, 5, 7)
    """
    n = dp.n
    out = []
    for i, v in enumerate(dp.perm.images, start=1):
        if v > i:
            out.append(v)
        elif v < i:
            out.append(v + n)
        else:
            out.append(i if dp.color_of(i) is Color.RIGHT else i + n)
    return BoundedAffinePermutation(n, tuple(out))


def remove_letter(word: WiringWord, index: int) -> WiringWord:
    """Delete one letter, keeping the relative order of the rest."""
    if not word.letters:
        raise IndexError("cannot remove a letter from an empty word")
    if not 0 <= index < len(word.letters):
        raise IndexError(f"letter index {index} outside 0..{len(word.letters) - 1}")
    return WiringWord(word.n, word.letters[:index] + word.letters[index + 1 :])


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def all_decorated_permutations(n: int) -> Iterator[DecoratedPermutation]:
    """Every permutation of {1..n} with every fixed-point coloring."""
    for perm in all_permutations(n):
        fixed = perm.fixed_points()
        for combo in itertools.product((Color.RIGHT, Color.LEFT), repeat=len(fixed)):
            yield DecoratedPermutation(perm, dict(zip(fixed, combo)))
