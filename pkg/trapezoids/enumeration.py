"""
Exhaustive enumeration, exact counting and rank/unrank for both families.

Everything here walks the same column order. Column j < n holds the pair
(row-1 entry, row-2 entry); column n holds the single left-over entry
(m[2,n] for Magog, g[1,n] for Gog). The canonical order on a family is the
lexicographic order of the flattened columns, which is also the order
``enumerate_trapezoids`` yields in.

All rules only couple neighbouring columns, so counting is a transfer-matrix
sweep from column n back to column 1. The table for column j maps every
column state (a, b) to the number of ways to finish columns j+1..n; with 2D
suffix sums each column costs O((n + ell)^2) big-integer additions.
"""
import logging
from functools import cached_property, lru_cache
from typing import Iterator, NamedTuple
import numpy as np
from trapezoids.core import Kind, Trapezoid, TrapezoidParams, cell_upper_bound, trapezoid_class
from trapezoids.exceptions import RankOutOfRangeError

logger = logging.getLogger(__name__)


class ColumnState(NamedTuple):
    j: int
    top: int
    # None for the single-entry column n.
    bottom: int | None = None


def column_states(kind: Kind | str, params: TrapezoidParams, j: int) -> list[ColumnState]:
    """Every (top, bottom) pair column j < n admits on its own, in canonical order."""
    kind = Kind(kind)
    top_limit = cell_upper_bound(kind, 1, j, params)
    bottom_limit = cell_upper_bound(kind, 2, j, params)
    strict = 1 if kind is Kind.GOG else 0
    return [
        ColumnState(j, top, bottom)
        for top in range(1, top_limit + 1)
        for bottom in range(top + strict, bottom_limit + 1)
    ]


def enumerate_trapezoids(kind: Kind | str, params: TrapezoidParams, partition: tuple[int, int] = (0, 1)) -> Iterator[Trapezoid]:
    """Yield every trapezoid of the family once, in increasing canonical order.

    ``partition=(i, p)`` restricts the walk to the column-1 states whose
    position in canonical order is i modulo p; the p shards are disjoint,
    cover the family, and each is itself in canonical order. Bad params or
    partitions raise here, before the first item is requested.
    """
    kind = Kind(kind)
    params.ensure_valid()
    index, parts = partition
    if not 0 <= index < parts:
        raise ValueError(f'Partition index {index} is outside 0..{parts - 1}')
    return _walk(kind, params, index, parts)


def _walk(kind: Kind, params: TrapezoidParams, index: int, parts: int) -> Iterator[Trapezoid]:
    n = params.n
    magog = kind is Kind.MAGOG
    cls = trapezoid_class(kind)
    top_limits = [cell_upper_bound(kind, 1, j, params) for j in range(1, n)]
    bottom_limits = [cell_upper_bound(kind, 2, j, params) for j in range(1, n)]
    end_limit = params.max_value
    tops = [0] * (n - 1)
    bottoms = [0] * (n - 1)

    def extend(col: int) -> Iterator[Trapezoid]:
        # col is the 0-based column being filled; col - 1 is already set.
        prev_top, prev_bottom = tops[col - 1], bottoms[col - 1]
        if col == n - 1:
            low, high = (prev_bottom, end_limit) if magog else (prev_top, prev_bottom)
            for end in range(low, high + 1):
                yield cls.from_columns(params, tops, bottoms, end)
            return
        top_high = top_limits[col] if magog else min(top_limits[col], prev_bottom)
        for top in range(prev_top, top_high + 1):
            tops[col] = top
            bottom_low = max(top, prev_bottom) if magog else max(top + 1, prev_bottom)
            for bottom in range(bottom_low, bottom_limits[col] + 1):
                bottoms[col] = bottom
                yield from extend(col + 1)

    starts = column_states(kind, params, 1)
    logger.debug(f'Enumerating {kind} {params}, shard {index}/{parts} of {len(starts)} column-1 states')
    for position, state in enumerate(starts):
        if position % parts != index:
            continue
        tops[0], bottoms[0] = state.top, state.bottom
        yield from extend(1)


def _state_mask(kind: Kind, params: TrapezoidParams, j: int, size: int) -> np.ndarray:
    values = np.arange(size)
    top = values[:, np.newaxis]
    bottom = values[np.newaxis, :]
    mask = (top >= 1) & (top <= cell_upper_bound(kind, 1, j, params))
    mask = mask & (bottom <= cell_upper_bound(kind, 2, j, params))
    if kind is Kind.MAGOG:
        return mask & (bottom >= top)
    return mask & (bottom > top)


def _last_pair_table(kind: Kind, params: TrapezoidParams, size: int) -> np.ndarray:
    values = np.arange(size)
    top = values[:, np.newaxis]
    bottom = values[np.newaxis, :]
    if kind is Kind.MAGOG:
        # m[2,n] ranges over [m[2,n-1], n + ell]
        choices = params.max_value - bottom + 1
    else:
        # g[1,n] ranges over [g[1,n-1], g[2,n-1]]
        choices = bottom - top + 1
    mask = _state_mask(kind, params, params.n - 1, size)
    return np.where(mask, choices, 0).astype(object)


def _suffix_sums(block: np.ndarray) -> np.ndarray:
    return block[::-1, ::-1].cumsum(axis=0).cumsum(axis=1)[::-1, ::-1]


def _sweep(kind: Kind, params: TrapezoidParams) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (j, completion table of column j) for j = n-1 down to 1."""
    size = params.max_value + 2
    table = _last_pair_table(kind, params, size)
    yield params.n - 1, table
    for j in range(params.n - 2, 0, -1):
        # Column j + 1 only holds values up to j + 2 + ell.
        h = min(size, j + params.ell + 3)
        sums = _suffix_sums(table[:h, :h])
        if kind is Kind.GOG:
            # The diagonal rule caps the next top at the current bottom b,
            # so drop the successors whose top exceeds b.
            beyond = np.zeros(h, dtype=object)
            beyond[:-1] = sums[np.arange(1, h), np.arange(h - 1)]
            sums = sums - beyond[np.newaxis, :]
        mask = _state_mask(kind, params, j, size)[:h, :h]
        table = np.zeros((size, size), dtype=object)
        table[:h, :h] = np.where(mask, sums, 0)
        yield j, table


def count(kind: Kind | str, params: TrapezoidParams) -> int:
    """Exact size of the family, keeping one column table at a time."""
    kind = Kind(kind)
    params.ensure_valid()
    table = None
    for _, table in _sweep(kind, params):
        pass
    total = int(table.sum())
    logger.debug(f'count({kind}, {params}) = {total}')
    return total


class CountTable:
    """Completion counts of every column state, kept for rank/unrank."""

    def __init__(self, kind: Kind, params: TrapezoidParams) -> None:
        self.kind = kind
        self.params = params
        self._tables = dict(_sweep(kind, params))

    def column(self, j: int) -> np.ndarray:
        return self._tables[j]

    def completions(self, state: ColumnState) -> int:
        if state.bottom is None:
            return 1
        table = self._tables.get(state.j)
        if table is None or not (0 <= state.top < table.shape[0] and 0 <= state.bottom < table.shape[1]):
            return 0
        return int(table[state.top, state.bottom])

    def states(self, j: int) -> Iterator[tuple[ColumnState, int]]:
        for state in column_states(self.kind, self.params, j):
            yield state, self.completions(state)

    @cached_property
    def total(self) -> int:
        return int(self._tables[1].sum())


@lru_cache(maxsize=16)
def _cached_table(kind: Kind, params: TrapezoidParams) -> CountTable:
    logger.debug(f'Building count table for {kind} {params}')
    return CountTable(kind, params)


def count_table(kind: Kind | str, params: TrapezoidParams) -> CountTable:
    params.ensure_valid()
    return _cached_table(Kind(kind), params)


def rank(trapezoid: Trapezoid) -> int:
    """0-based position of the trapezoid in its family's canonical order."""
    trapezoid.ensure_valid()
    table = count_table(trapezoid.kind, trapezoid.params)
    columns = trapezoid.columns()
    position = 0
    prev_top, prev_bottom = 0, 0
    for j, (top, bottom) in enumerate(columns[:-1], start=1):
        counts = table.column(j)
        # Earlier siblings: a smaller top with any admissible bottom, or the
        # same top with a smaller bottom. Out-of-family cells are zero.
        position += int(counts[prev_top:top, prev_bottom:].sum())
        position += int(counts[top, prev_bottom:bottom].sum())
        prev_top, prev_bottom = top, bottom
    (end,) = columns[-1]
    position += end - (prev_bottom if trapezoid.kind is Kind.MAGOG else prev_top)
    return position


def unrank(kind: Kind | str, params: TrapezoidParams, position: int) -> Trapezoid:
    """The trapezoid at 0-based ``position`` of the canonical order."""
    kind = Kind(kind)
    table = count_table(kind, params)
    if not 0 <= position < table.total:
        raise RankOutOfRangeError(position, table.total)

    remaining = position
    tops, bottoms = [], []
    prev_top, prev_bottom = 1, 0
    for j in range(1, params.n):
        counts = table.column(j)
        top_limit = cell_upper_bound(kind, 1, j, params)
        if kind is Kind.GOG and j > 1:
            top_limit = min(top_limit, prev_bottom)
        for top in range(prev_top, top_limit + 1):
            block = int(counts[top, prev_bottom:].sum())
            if remaining < block:
                break
            remaining -= block
        for bottom in range(max(prev_bottom, top), counts.shape[1]):
            weight = int(counts[top, bottom])
            if remaining < weight:
                break
            remaining -= weight
        tops.append(top)
        bottoms.append(bottom)
        prev_top, prev_bottom = top, bottom

    start = prev_bottom if kind is Kind.MAGOG else prev_top
    return trapezoid_class(kind).from_columns(params, tops, bottoms, start + remaining)
