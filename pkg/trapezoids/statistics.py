"""
Statistics on trapezoids, their distributions over a family, and the search
for trapezoids whose statistic changes under the bijection.

The extractors are explicit candidates for the two families of statistics
the bijection is known not to preserve:

* ``mrr_stats``: per row, how many entries equal 1 and how many reach their
  cell's upper bound (``cell_upper_bound``, per cell, not per row);
* ``bc_stats``: the rightmost entries, (g[1,n], g[2,n-1]) for Gog and
  (m[1,n-2], m[1,n-1], m[2,n-1], m[2,n]) for Magog.
"""
import csv
import io
import json
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence
from trapezoids.bijection import magog_to_gog
from trapezoids.core import Kind, MagogTrapezoid, GogTrapezoid, Trapezoid, TrapezoidParams
from trapezoids.enumeration import enumerate_trapezoids
from trapezoids.exceptions import InvalidTrapezoidError, UnknownStatisticError
from trapezoids.formats import to_dict
from trapezoids.utils import run_sharded

logger = logging.getLogger(__name__)

MRR_COMPONENTS = ('ones_row1', 'ones_row2', 'maxed_row1', 'maxed_row2')
BC_COMPONENTS = {
    Kind.MAGOG: ('row1_penultimate', 'row1_last', 'row2_penultimate', 'row2_last'),
    Kind.GOG: ('row1_last', 'row2_last'),
}


@dataclass(frozen=True)
class StatVector:
    components: tuple[tuple[str, int], ...]

    @classmethod
    def of(cls, **components: int) -> 'StatVector':
        return cls(tuple(components.items()))

    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.components)

    def values(self) -> tuple[int, ...]:
        return tuple(value for _, value in self.components)

    def __getitem__(self, name: str) -> int:
        for key, value in self.components:
            if key == name:
                return value
        raise UnknownStatisticError(f'No component {name!r}; available: {", ".join(self.names())}')

    def select(self, names: Sequence[str]) -> 'StatVector':
        return StatVector(tuple((name, self[name]) for name in names))

    def merge(self, other: 'StatVector') -> 'StatVector':
        return StatVector(self.components + other.components)

    def as_dict(self) -> dict[str, int]:
        return dict(self.components)

    def __str__(self) -> str:
        return ' '.join(f'{name}={value}' for name, value in self.components)


def _ensure_valid(trapezoid: Trapezoid) -> None:
    report = trapezoid.validate()
    if not report.is_valid:
        raise InvalidTrapezoidError(report)


def mrr_stats(trapezoid: Trapezoid, check: bool = True) -> StatVector:
    if check:
        _ensure_valid(trapezoid)
    counts = {}
    for i in (1, 2):
        row = trapezoid.row(i)
        counts[f'ones_row{i}'] = sum(1 for value in row if value == 1)
        counts[f'maxed_row{i}'] = sum(
            1 for j, value in enumerate(row, start=1) if value == trapezoid.upper_bound(i, j)
        )
    return StatVector(tuple((name, counts[name]) for name in MRR_COMPONENTS))


def bc_stats(trapezoid: Trapezoid, check: bool = True) -> StatVector:
    if check:
        _ensure_valid(trapezoid)
    if trapezoid.kind is Kind.GOG:
        return StatVector.of(row1_last=trapezoid.row1[-1], row2_last=trapezoid.row2[-1])
    return StatVector.of(
        row1_penultimate=trapezoid.row1[-2],
        row1_last=trapezoid.row1[-1],
        row2_penultimate=trapezoid.row2[-2],
        row2_last=trapezoid.row2[-1],
    )


def all_stats(trapezoid: Trapezoid, check: bool = True) -> StatVector:
    return mrr_stats(trapezoid, check=check).merge(bc_stats(trapezoid, check=False))


def component_names(kind: Kind | str) -> tuple[str, ...]:
    return MRR_COMPONENTS + BC_COMPONENTS[Kind(kind)]


class ComponentSelector:
    """Projects the full statistic vector onto some named components."""

    def __init__(self, names: Sequence[str]) -> None:
        self.names = tuple(names)

    def __call__(self, trapezoid: Trapezoid) -> StatVector:
        return all_stats(trapezoid, check=False).select(self.names)

    def check_kind(self, kind: Kind | str) -> None:
        unknown = [name for name in self.names if name not in component_names(kind)]
        if unknown:
            raise UnknownStatisticError(
                f'Unknown {kind} statistic(s) {", ".join(unknown)}; available: {", ".join(component_names(kind))}'
            )

    def __repr__(self) -> str:
        return f'ComponentSelector({self.names!r})'


class ConstantSelector:

    def __call__(self, trapezoid: Trapezoid) -> StatVector:
        return StatVector.of(constant=0)

    def check_kind(self, kind: Kind | str) -> None:
        pass


Selector = Callable[[Trapezoid], StatVector]


@dataclass(frozen=True)
class StatPairing:
    name: str
    magog: Selector
    gog: Selector


PAIRINGS = {
    'mrr': StatPairing('mrr', ComponentSelector(MRR_COMPONENTS), ComponentSelector(MRR_COMPONENTS)),
    'bc': StatPairing(
        'bc',
        ComponentSelector(('row2_penultimate', 'row2_last')),
        ComponentSelector(('row1_last', 'row2_last')),
    ),
    'constant': StatPairing('constant', ConstantSelector(), ConstantSelector()),
}


def get_pairing(pairing: StatPairing | str) -> StatPairing:
    if isinstance(pairing, StatPairing):
        return pairing
    try:
        return PAIRINGS[pairing]
    except KeyError:
        raise UnknownStatisticError(f'Unknown pairing {pairing!r}; available: {", ".join(PAIRINGS)}') from None


def _as_selector(selector: Selector | Sequence[str] | None, kind: Kind) -> Selector:
    if selector is None:
        selector = component_names(kind)
    if not callable(selector):
        selector = ComponentSelector(selector)
    check_kind = getattr(selector, 'check_kind', None)
    if check_kind is not None:
        check_kind(kind)
    return selector


def _distribution_shard(kind: Kind, params: TrapezoidParams, selector: Selector, partition: tuple[int, int]) -> Counter:
    return Counter(selector(trapezoid) for trapezoid in enumerate_trapezoids(kind, params, partition))


def distribution(kind: Kind | str, params: TrapezoidParams, selector: Selector | Sequence[str] | None = None, workers: int = 1) -> dict[StatVector, int]:
    """Exact count of the family's members per statistic value, in increasing
    order of the value tuple. Shards merge by adding counters."""
    kind = Kind(kind)
    params.ensure_valid()
    selector = _as_selector(selector, kind)
    table = Counter()
    for shard in run_sharded(_distribution_shard, (kind, params, selector), workers):
        table.update(shard)
    logger.info(f'Distribution of {kind} {params}: {len(table)} distinct values over {sum(table.values())} trapezoids')
    return dict(sorted(table.items(), key=lambda item: item[0].values()))


def distribution_to_csv(table: dict[StatVector, int]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    names = next(iter(table)).names() if table else ()
    writer.writerow([*names, 'count'])
    for vector, total in table.items():
        writer.writerow([*vector.values(), total])
    return buffer.getvalue()


def distribution_to_json(table: dict[StatVector, int]) -> str:
    rows = [{**vector.as_dict(), 'count': total} for vector, total in table.items()]
    return json.dumps(rows)


@dataclass(frozen=True)
class StatCounterexample:
    pairing: str
    magog: MagogTrapezoid
    gog: GogTrapezoid
    magog_stats: StatVector
    gog_stats: StatVector

    def to_dict(self) -> dict:
        return {
            'pairing': self.pairing,
            'magog': to_dict(self.magog),
            'gog': to_dict(self.gog),
            'magog_stats': self.magog_stats.as_dict(),
            'gog_stats': self.gog_stats.as_dict(),
        }


def find_statistic_counterexample(params: TrapezoidParams, pairing: StatPairing | str) -> StatCounterexample | None:
    """The first Magog trapezoid, in canonical order, whose paired statistic
    differs from that of its image; None when the whole family preserves it."""
    pairing = get_pairing(pairing)
    for magog in enumerate_trapezoids(Kind.MAGOG, params):
        gog = magog_to_gog(magog, check=False)
        magog_stats = pairing.magog(magog)
        gog_stats = pairing.gog(gog)
        if magog_stats.values() != gog_stats.values():
            logger.info(f'{pairing.name} is not preserved at {params}: {magog_stats} -> {gog_stats}')
            return StatCounterexample(pairing.name, magog, gog, magog_stats, gog_stats)
    return None


def scan_statistic_counterexample(pairing: StatPairing | str, ell: int = 0, n_max: int = 6) -> StatCounterexample | None:
    """Try n = 3, 4, ..., n_max at fixed ell and stop at the first witness."""
    for n in range(3, n_max + 1):
        witness = find_statistic_counterexample(TrapezoidParams(n, ell), pairing)
        if witness is not None:
            return witness
    return None


def stat_pairs(trapezoids: Iterable[MagogTrapezoid], pairing: StatPairing | str) -> Iterable[tuple[StatVector, StatVector]]:
    pairing = get_pairing(pairing)
    for magog in trapezoids:
        yield pairing.magog(magog), pairing.gog(magog_to_gog(magog, check=False))
