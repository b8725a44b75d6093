"""Shared helpers: independent oracles and small exhaustive generators."""

from __future__ import annotations

import itertools
import random
from datetime import date, timedelta
from decimal import Decimal
from functools import lru_cache

import pytest

from stockpolytope import (
    DecoratedPermutation,
    Permutation,
    PriceTable,
    cell_dimension,
    matroid_rank,
    positroid_from_decorated,
)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p o q)(i) = p(q(i)); independent of the line-swap multiplication."""
    return Permutation(tuple(p.images[q.images[i] - 1] for i in range(p.n)))


def simple_transposition(n: int, p: int) -> Permutation:
    images = list(range(1, n + 1))
    images[p - 1], images[p] = images[p], images[p - 1]
    return Permutation(tuple(images))


def reduced_words(n: int):
    """Every reduced word of every element of S_n, as letter tuples.

    DFS over the weak order: appending letter p keeps the word reduced
    exactly when the current arrangement is ascending at p.
    """

    def rec(line, word):
        yield tuple(word)
        for p in range(1, n):
            if line[p - 1] < line[p]:
                line[p - 1], line[p] = line[p], line[p - 1]
                word.append(p)
                yield from rec(line, word)
                word.pop()
                line[p - 1], line[p] = line[p], line[p - 1]

    yield from rec(list(range(1, n + 1)), [])


def brute_circuits(m) -> list[frozenset[int]]:
    """Circuit enumeration straight from the definition (minimal dependent)."""
    ground = sorted(m.ground)
    out: list[frozenset[int]] = []
    for size in range(1, m.n + 1):
        for combo in itertools.combinations(ground, size):
            s = frozenset(combo)
            if matroid_rank(m, s) >= len(s):
                continue
            if all(matroid_rank(m, s - {e}) == len(s) - 1 for e in s):
                out.append(s)
    return out


def components_from_circuits(m) -> tuple[tuple[int, ...], ...]:
    """Oracle for connected components: union elements sharing a circuit."""
    parent = {e: e for e in m.ground}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for circuit in brute_circuits(m):
        members = sorted(circuit)
        for other in members[1:]:
            ra, rb = find(members[0]), find(other)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    blocks: dict[int, list[int]] = {}
    for e in sorted(m.ground):
        blocks.setdefault(find(e), []).append(e)
    return tuple(tuple(v) for _, v in sorted(blocks.items()))


@lru_cache(maxsize=None)
def cached_dim(images: tuple[int, ...]) -> int:
    return cell_dimension(DecoratedPermutation.uniform(Permutation(images)))


@lru_cache(maxsize=None)
def cached_positroid(images: tuple[int, ...]):
    return positroid_from_decorated(DecoratedPermutation.uniform(Permutation(images)))


def random_table(seed: int, n_stocks: int = 5, n_dates: int = 12) -> PriceTable:
    """Random-walk price table in whole cents, deterministic per seed."""
    rng = random.Random(seed)
    tickers = tuple(f"S{i}" for i in range(n_stocks))
    cents = [rng.randrange(2000, 9000) for _ in range(n_stocks)]
    start = date(2020, 1, 1)
    dates = []
    rows = []
    for d in range(n_dates):
        dates.append(start + timedelta(days=d))
        cents = [max(100, c + rng.randrange(-400, 401)) for c in cents]
        rows.append(tuple(Decimal(c) / Decimal(100) for c in cents))
    return PriceTable(tickers, tuple(dates), tuple(rows))


@pytest.fixture(scope="session")
def sample_table():
    from stockpolytope import load_sample_table

    return load_sample_table()
