"""Price tables and the crossing history they generate.

A price table is a dates-by-tickers matrix of positive closing prices.
Sorting the stocks by price on each date gives a ranking; two stocks
cross when their price order flips between consecutive dates.  Relative
to a reference date, the accumulated crossings give a permutation, and
net price moves color its fixed points.

Conventions, fixed once here:

* ``permutation_at`` returns the arrangement reading: entry q is the
  reference-date rank of the stock holding rank q at the target date.
  With that reading, multiplying the crossing stream's letters left to
  right from the identity reproduces ``permutation_at`` exactly.
* Ties at the first table date break by ticker; later dates keep the
  previous date's relative order, so a tie never fabricates a crossing.
* A day's rank changes decompose into adjacent swaps by bubble sort with
  repeated left-to-right passes, giving exactly inversion-count many
  events per day.

Tables are immutable and all functions are pure, so per-date analyses
can run concurrently without coordination.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from datetime import date
from decimal import Decimal, InvalidOperation
from importlib import resources

from .perms import Color, DecoratedPermutation, Permutation


class PriceCsvError(ValueError):
    """Malformed price CSV, with the offending row and column when known."""

    def __init__(self, message: str, row: int | None = None, column: str | None = None):
        self.row = row
        self.column = column
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


@dataclass(frozen=True)
class PriceTable:
    """Closing prices: ``prices[d][s]`` is stock s on date d.

    Dates are strictly increasing; every price is a positive Decimal.
    """

    tickers: tuple[str, ...]
    dates: tuple[date, ...]
    prices: tuple[tuple[Decimal, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tickers", tuple(self.tickers))
        object.__setattr__(self, "dates", tuple(self.dates))
        object.__setattr__(self, "prices", tuple(tuple(row) for row in self.prices))
        if not self.tickers:
            raise ValueError("a price table needs at least one ticker")
        if len(set(self.tickers)) != len(self.tickers):
            raise ValueError("duplicate ticker")
        if not self.dates:
            raise ValueError("a price table needs at least one date")
        if any(b <= a for a, b in zip(self.dates, self.dates[1:])):
            raise ValueError("dates must be strictly increasing")
        if len(self.prices) != len(self.dates):
            raise ValueError("one price row per date required")
        for row in self.prices:
            if len(row) != len(self.tickers):
                raise ValueError("every row needs one price per ticker")
            for p in row:
                if not isinstance(p, Decimal) or not p.is_finite() or p <= 0:
                    raise ValueError(f"prices must be positive decimals, got {p!r}")

    @property
    def n_stocks(self) -> int:
        return len(self.tickers)

    def date_index(self, d: date) -> int:
        try:
            return self.dates.index(d)
        except ValueError:
            raise ValueError(f"unknown date {d.isoformat()}") from None

    def price(self, d: date, stock: int) -> Decimal:
        return self.prices[self.date_index(d)][stock]


@dataclass(frozen=True)
class Ranking:
    """Stocks at one date, ascending by price; position p holds rank p+1."""

    date: date
    order: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", tuple(self.order))
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError(f"order {self.order} is not a permutation of 0..{len(self.order) - 1}")

    def rank_of(self, stock: int) -> int:
        """1-based rank of a stock index."""
        return self.order.index(stock) + 1


@dataclass(frozen=True)
class CrossingEvent:
    """One adjacent rank swap: ranks ``position`` and ``position + 1``.

    ``stocks`` names the two stock indices as (lower ranked, higher
    ranked) immediately before the swap.  ``seq`` numbers the events of a
    single date from 0 with no gaps.
    """

    date: date
    seq: int
    position: int
    stocks: tuple[int, int]


def parse_price_csv(data: str | bytes) -> PriceTable:
    """Parse ``date,<ticker>,...`` CSV text into a PriceTable.

    Rows may arrive in any date order and come out sorted.  Malformed
    numbers, non-positive prices, duplicate dates or tickers, and row
    length mismatches raise PriceCsvError with the offending location.
    """
    text = data.decode("utf-8-sig") if isinstance(data, bytes) else data
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise PriceCsvError("empty input")
    header = [cell.strip() for cell in rows[0]]
    if not header or header[0] != "date":
        raise PriceCsvError("header must start with 'date'", row=1, column="1")
    tickers = tuple(header[1:])
    if not tickers:
        raise PriceCsvError("header names no tickers", row=1)
    seen_tickers: set[str] = set()
    for pos, t in enumerate(tickers, start=2):
        if not t:
            raise PriceCsvError("empty ticker name", row=1, column=str(pos))
        if t in seen_tickers:
            raise PriceCsvError(f"duplicate ticker {t!r}", row=1, column=str(pos))
        seen_tickers.add(t)

    parsed: dict[date, tuple[Decimal, ...]] = {}
    for line_no, row in enumerate(rows[1:], start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        cells = [cell.strip() for cell in row]
        if len(cells) != len(tickers) + 1:
            raise PriceCsvError(
                f"expected {len(tickers) + 1} fields, got {len(cells)}", row=line_no
            )
        try:
            d = date.fromisoformat(cells[0])
        except ValueError:
            raise PriceCsvError(f"bad ISO-8601 date {cells[0]!r}", row=line_no, column="date") from None
        if d in parsed:
            raise PriceCsvError(f"duplicate date {d.isoformat()}", row=line_no, column="date")
        prices = []
        for ticker, cell in zip(tickers, cells[1:]):
            try:
                value = Decimal(cell)
            except InvalidOperation:
                raise PriceCsvError(f"malformed number {cell!r}", row=line_no, column=ticker) from None
            if not value.is_finite():
                raise PriceCsvError(f"malformed number {cell!r}", row=line_no, column=ticker)
            if value <= 0:
                raise PriceCsvError(f"non-positive price {cell!r}", row=line_no, column=ticker)
            prices.append(value)
        parsed[d] = tuple(prices)
    if not parsed:
        raise PriceCsvError("no data rows")
    dates = tuple(sorted(parsed))
    return PriceTable(tickers, dates, tuple(parsed[d] for d in dates))


def read_price_csv(path) -> PriceTable:
    with open(path, "rb") as handle:
        return parse_price_csv(handle.read())


def sample_csv_text() -> str:
    """The bundled four-ticker sample used across the docs and demos."""
    return resources.files(__package__).joinpath("data/djia4_sample.csv").read_text("utf-8")


def load_sample_table() -> PriceTable:
    return parse_price_csv(sample_csv_text())


def rankings(table: PriceTable, up_to: date | None = None) -> tuple[Ranking, ...]:
    """Rankings for every date, chained so that ties never reorder.

    The first date sorts by (price, ticker); every later date stably
    re-sorts the previous order by the day's prices, so equal prices keep
    their standing instead of fabricating a crossing.
    """
    stop = table.date_index(up_to) if up_to is not None else len(table.dates) - 1
    first = sorted(range(table.n_stocks), key=lambda s: (table.prices[0][s], table.tickers[s]))
    out = [Ranking(table.dates[0], tuple(first))]
    for di in range(1, stop + 1):
        row = table.prices[di]
        order = sorted(out[-1].order, key=lambda s: row[s])
        out.append(Ranking(table.dates[di], tuple(order)))
    return tuple(out)


def rank_at_date(table: PriceTable, d: date) -> Ranking:
    """Deterministic ranking of one date (same table, same result)."""
    return rankings(table, up_to=d)[-1]


def _check_range(table: PriceTable, ref_date: date, target_date: date) -> tuple[int, int]:
    ri = table.date_index(ref_date)
    ti = table.date_index(target_date)
    if ti < ri:
        raise ValueError(
            f"target date {target_date.isoformat()} is before reference {ref_date.isoformat()}"
        )
    return ri, ti


def permutation_at(table: PriceTable, ref_date: date, target_date: date) -> Permutation:
    """Permutation of reference ranks after the crossings up to the target.

    Entry q is the reference-date rank of the stock holding rank q at the
    target date; the identity when the dates coincide.  Equals the left
    to right product of ``crossing_stream`` over the same range.
    """
    ri, ti = _check_range(table, ref_date, target_date)
    chain = rankings(table, up_to=target_date)
    ref_rank = {s: r for r, s in enumerate(chain[ri].order, start=1)}
    return Permutation(tuple(ref_rank[s] for s in chain[ti].order))


def _bubble_word(values: list[int]) -> list[int]:
    # Repeated left-to-right passes; swap positions are 1-based and the
    # total count equals the inversion number of the input.
    word = []
    swapped = True
    while swapped:
        swapped = False
        for p in range(1, len(values)):
            if values[p - 1] > values[p]:
                values[p - 1], values[p] = values[p], values[p - 1]
                word.append(p)
                swapped = True
    return word


def crossing_stream(table: PriceTable, ref_date: date, end_date: date) -> tuple[CrossingEvent, ...]:
    """All crossing events between consecutive dates of the range.

    Each daily transition decomposes into adjacent swaps via bubble sort;
    applying a date's events in ``seq`` order to the previous ranking
    yields the date's ranking, and the concatenated stream multiplies to
    ``permutation_at(ref_date, end_date)``.
    """
    ri, ti = _check_range(table, ref_date, end_date)
    chain = rankings(table, up_to=end_date)
    events = []
    for di in range(ri + 1, ti + 1):
        prev = chain[di - 1]
        cur = chain[di]
        today_rank = {s: r for r, s in enumerate(cur.order, start=1)}
        word = _bubble_word([today_rank[s] for s in prev.order])
        arrangement = list(prev.order)
        for seq, p in enumerate(word):
            involved = (arrangement[p - 1], arrangement[p])
            events.append(CrossingEvent(cur.date, seq, p, involved))
            arrangement[p - 1], arrangement[p] = arrangement[p], arrangement[p - 1]
    return tuple(events)


def decorate(
    perm: Permutation, table: PriceTable, ref_date: date, target_date: date
) -> DecoratedPermutation:
    """Color the fixed points by the net price move since the reference.

    A fixed point's stock kept its rank; its cord points RIGHT when the
    price rose or is unchanged, LEFT when it fell.  ``perm`` must be the
    permutation of the same date range.
    """
    expected = permutation_at(table, ref_date, target_date)
    if perm != expected:
        raise ValueError(
            f"permutation {perm.images} does not match the table between "
            f"{ref_date.isoformat()} and {target_date.isoformat()}"
        )
    ref_ranking = rank_at_date(table, ref_date)
    colors = {}
    for i in perm.fixed_points():
        stock = ref_ranking.order[i - 1]
        before = table.price(ref_date, stock)
        after = table.price(target_date, stock)
        colors[i] = Color.RIGHT if after >= before else Color.LEFT
    return DecoratedPermutation(perm, colors)
