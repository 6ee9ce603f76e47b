"""
Domain types for (ell, n, 2) Magog and Gog trapezoids, per-cell bounds and
validation.

Every interface speaks 1-based coordinates: ``(i, j)`` is row ``i`` and
column ``j``. Rows are stored as plain tuples (0-based internally).

A Magog trapezoid has rows of lengths n-1 and n:

    m[1,1] <= ... <= m[1,n-1]
    m[2,1] <= ... <= m[2,n-1] <= m[2,n]
    m[1,j] <= m[2,j] <= j + ell            (1 <= j <= n-1)
    m[2,n] <= n + ell

A Gog trapezoid has rows of lengths n and n-1:

    g[1,1] <= ... <= g[1,n]
    g[2,1] <= ... <= g[2,n-1]
    g[1,j] < g[2,j] < j + 2 + ell          (1 <= j <= n-1)
    g[1,j+1] <= g[2,j]                     (1 <= j <= n-1)
"""
import enum
import sys
from dataclasses import dataclass
from typing import ClassVar, Iterable, Sequence
from trapezoids.exceptions import CellIndexError, InvalidParamsError, InvalidTrapezoidError

if sys.version_info >= (3, 11):
    StrEnum = enum.StrEnum
else:  # Python 3.10 backport of enum.StrEnum's str()/format() behaviour
    class StrEnum(str, enum.Enum):
        __str__ = str.__str__
        __format__ = str.__format__


class Kind(StrEnum):
    MAGOG = 'magog'
    GOG = 'gog'


class Rule(StrEnum):
    M1 = 'M1'
    M2 = 'M2'
    M3 = 'M3'
    G1 = 'G1'
    G2 = 'G2'
    G3 = 'G3'
    POS = 'POS'
    SHAPE = 'SHAPE'


@dataclass(frozen=True)
class TrapezoidParams:
    n: int
    ell: int = 0

    def problems(self) -> list[str]:
        problems = []
        if self.n < 3:
            problems.append(f'n must be at least 3, got {self.n}')
        if self.ell < 0:
            problems.append(f'ell must be non-negative, got {self.ell}')
        return problems

    @property
    def is_valid(self) -> bool:
        return not self.problems()

    def ensure_valid(self) -> 'TrapezoidParams':
        problems = self.problems()
        if problems:
            raise InvalidParamsError(self.n, self.ell, problems)
        return self

    @property
    def max_value(self) -> int:
        # No entry of either family can exceed n + ell.
        return self.n + self.ell

    def __str__(self) -> str:
        return f'(ell={self.ell}, n={self.n})'


@dataclass(frozen=True)
class Violation:
    rule: Rule
    cell: tuple[int, int]
    values: tuple[tuple[str, int], ...] = ()

    def to_dict(self) -> dict:
        return {
            'rule': str(self.rule),
            'cell': list(self.cell),
            'values': dict(self.values),
        }

    def __str__(self) -> str:
        observed = ', '.join(f'{label}={value}' for label, value in self.values)
        return f'{self.rule} at {self.cell}: {observed}'


@dataclass(frozen=True)
class ValidationReport:
    kind: Kind
    violations: tuple[Violation, ...] = ()

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def rules(self) -> list[tuple[str, tuple[int, int]]]:
        return [(str(v.rule), v.cell) for v in self.violations]

    def summary(self) -> str:
        if self.is_valid:
            return 'valid'
        return '; '.join(str(v) for v in self.violations)

    def to_dict(self) -> dict:
        return {
            'kind': str(self.kind),
            'valid': self.is_valid,
            'violations': [v.to_dict() for v in self.violations],
        }


@dataclass(frozen=True)
class Trapezoid:
    """Two rows of positive integers plus the (n, ell) they are read against.

    Construction never checks the trapezoid rules; ``validate`` reports them.
    """
    params: TrapezoidParams
    row1: tuple[int, ...]
    row2: tuple[int, ...]

    kind: ClassVar[Kind]
    symbol: ClassVar[str]
    # Row lengths relative to n.
    row_offsets: ClassVar[tuple[int, int]]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'row1', tuple(map(int, self.row1)))
        object.__setattr__(self, 'row2', tuple(map(int, self.row2)))

    @classmethod
    def build(cls, n: int, ell: int, row1: Iterable[int], row2: Iterable[int]) -> 'Trapezoid':
        return cls(TrapezoidParams(n, ell), tuple(row1), tuple(row2))

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def ell(self) -> int:
        return self.params.ell

    @classmethod
    def expected_lengths(cls, n: int) -> tuple[int, int]:
        return (n + cls.row_offsets[0], n + cls.row_offsets[1])

    def row(self, i: int) -> tuple[int, ...]:
        if i == 1:
            return self.row1
        if i == 2:
            return self.row2
        raise CellIndexError(f'Row must be 1 or 2, got {i}')

    def entry(self, i: int, j: int) -> int:
        row = self.row(i)
        if not 1 <= j <= len(row):
            raise CellIndexError(f'Column {j} is outside row {i} of length {len(row)}')
        return row[j - 1]

    def label(self, i: int, j: int) -> str:
        return f'{self.symbol}[{i},{j}]'

    def cells(self) -> Iterable[tuple[int, int, int]]:
        for i, row in ((1, self.row1), (2, self.row2)):
            for j, value in enumerate(row, start=1):
                yield i, j, value

    def columns(self) -> tuple[tuple[int, ...], ...]:
        """Canonical column-major view: (top, bottom) for columns 1..n-1, then
        the single entry of column n."""
        n = self.n
        paired = tuple(zip(self.row1[:n - 1], self.row2[:n - 1]))
        return paired + ((self.end_entry,),)

    @property
    def end_entry(self) -> int:
        raise NotImplementedError

    @classmethod
    def from_columns(cls, params: TrapezoidParams, tops: Sequence[int], bottoms: Sequence[int], end: int) -> 'Trapezoid':
        raise NotImplementedError

    def sort_key(self) -> tuple[int, ...]:
        return tuple(value for column in self.columns() for value in column)

    def upper_bound(self, i: int, j: int) -> int:
        return cell_upper_bound(self.kind, i, j, self.params)

    def validate(self) -> ValidationReport:
        return VALIDATORS[self.kind](self)

    def ensure_valid(self) -> 'Trapezoid':
        report = self.validate()
        if not report.is_valid:
            raise InvalidTrapezoidError(report)
        return self


class MagogTrapezoid(Trapezoid):
    kind: ClassVar[Kind] = Kind.MAGOG
    symbol: ClassVar[str] = 'm'
    row_offsets: ClassVar[tuple[int, int]] = (-1, 0)

    @property
    def end_entry(self) -> int:
        return self.row2[-1]

    @classmethod
    def from_columns(cls, params, tops, bottoms, end) -> 'MagogTrapezoid':
        return cls(params, tuple(tops), tuple(bottoms) + (end,))


class GogTrapezoid(Trapezoid):
    kind: ClassVar[Kind] = Kind.GOG
    symbol: ClassVar[str] = 'g'
    row_offsets: ClassVar[tuple[int, int]] = (0, -1)

    @property
    def end_entry(self) -> int:
        return self.row1[-1]

    @classmethod
    def from_columns(cls, params, tops, bottoms, end) -> 'GogTrapezoid':
        return cls(params, tuple(tops) + (end,), tuple(bottoms))


TRAPEZOID_CLASSES: dict[Kind, type[Trapezoid]] = {
    Kind.MAGOG: MagogTrapezoid,
    Kind.GOG: GogTrapezoid,
}


def trapezoid_class(kind: Kind | str) -> type[Trapezoid]:
    return TRAPEZOID_CLASSES[Kind(kind)]


def cell_upper_bound(kind: Kind | str, row: int, j: int, params: TrapezoidParams) -> int:
    """The largest value cell (row, j) takes over the whole family.

    Magog: j + ell in both rows (row 1 through m[1,j] <= m[2,j]; the last
    cell of row 2 included). Gog: j + 1 + ell in row 2 (strict ceiling
    j + 2 + ell), j + ell in row 1 for j < n (strictly under g[2,j]) and
    n + ell for g[1,n] (under g[2,n-1]).
    """
    kind = Kind(kind)
    if row not in (1, 2):
        raise CellIndexError(f'Row must be 1 or 2, got {row}')
    length = trapezoid_class(kind).expected_lengths(params.n)[row - 1]
    if not 1 <= j <= length:
        raise CellIndexError(f'Column {j} is outside {kind} row {row} of length {length}')
    if kind is Kind.MAGOG:
        return j + params.ell
    if row == 2:
        return j + 1 + params.ell
    return j + params.ell


def _shape_violations(trapezoid: Trapezoid) -> list[Violation]:
    params = trapezoid.params
    if not params.is_valid:
        return [Violation(Rule.SHAPE, (0, 0), (('n', params.n), ('ell', params.ell)))]
    violations = []
    for i, expected in enumerate(trapezoid.expected_lengths(params.n), start=1):
        actual = len(trapezoid.row(i))
        if actual != expected:
            violations.append(Violation(Rule.SHAPE, (i, 0), (('length', actual), ('expected', expected))))
    return violations


def _positivity_violations(trapezoid: Trapezoid) -> list[Violation]:
    return [
        Violation(Rule.POS, (i, j), ((trapezoid.label(i, j), value),))
        for i, j, value in trapezoid.cells() if value < 1
    ]


def _monotonicity_violations(trapezoid: Trapezoid, rule: Rule) -> list[Violation]:
    violations = []
    for i in (1, 2):
        row = trapezoid.row(i)
        for j in range(1, len(row)):
            left, right = row[j - 1], row[j]
            if left > right:
                values = ((trapezoid.label(i, j), left), (trapezoid.label(i, j + 1), right))
                violations.append(Violation(rule, (i, j), values))
    return violations


def validate_magog(magog: MagogTrapezoid) -> ValidationReport:
    """Report every broken Magog rule; an empty report means membership."""
    shape = _shape_violations(magog)
    if shape:
        return ValidationReport(Kind.MAGOG, tuple(shape))
    n, ell = magog.n, magog.ell
    m1, m2 = magog.row1, magog.row2
    violations = _positivity_violations(magog)
    violations += _monotonicity_violations(magog, Rule.M1)
    for j in range(1, n):
        if m1[j - 1] > m2[j - 1]:
            values = ((magog.label(1, j), m1[j - 1]), (magog.label(2, j), m2[j - 1]))
            violations.append(Violation(Rule.M2, (1, j), values))
    for j in range(1, n + 1):
        ceiling = j + ell
        if m2[j - 1] > ceiling:
            values = ((magog.label(2, j), m2[j - 1]), ('ceiling', ceiling))
            violations.append(Violation(Rule.M3, (2, j), values))
    return ValidationReport(Kind.MAGOG, tuple(violations))


def validate_gog(gog: GogTrapezoid) -> ValidationReport:
    """Report every broken Gog rule; an empty report means membership."""
    shape = _shape_violations(gog)
    if shape:
        return ValidationReport(Kind.GOG, tuple(shape))
    n, ell = gog.n, gog.ell
    g1, g2 = gog.row1, gog.row2
    violations = _positivity_violations(gog)
    violations += _monotonicity_violations(gog, Rule.G1)
    for j in range(1, n):
        top, bottom = g1[j - 1], g2[j - 1]
        if top >= bottom:
            values = ((gog.label(1, j), top), (gog.label(2, j), bottom))
            violations.append(Violation(Rule.G2, (1, j), values))
        limit = j + 2 + ell
        if bottom >= limit:
            values = ((gog.label(2, j), bottom), ('strict ceiling', limit))
            violations.append(Violation(Rule.G2, (2, j), values))
    for j in range(1, n):
        if g1[j] > g2[j - 1]:
            values = ((gog.label(1, j + 1), g1[j]), (gog.label(2, j), g2[j - 1]))
            violations.append(Violation(Rule.G3, (1, j + 1), values))
    return ValidationReport(Kind.GOG, tuple(violations))


def _non_decreasing(row: tuple[int, ...]) -> bool:
    return all(left <= right for left, right in zip(row, row[1:]))


def is_magog(magog: MagogTrapezoid) -> bool:
    """Same verdict as ``validate_magog(magog).is_valid`` without building a report."""
    n, ell = magog.n, magog.ell
    m1, m2 = magog.row1, magog.row2
    if n < 3 or ell < 0 or len(m1) != n - 1 or len(m2) != n:
        return False
    return (
        m1[0] >= 1 and m2[0] >= 1
        and _non_decreasing(m1) and _non_decreasing(m2)
        and all(top <= bottom for top, bottom in zip(m1, m2))
        and all(value <= j + ell for j, value in enumerate(m2, start=1))
    )


def is_gog(gog: GogTrapezoid) -> bool:
    """Same verdict as ``validate_gog(gog).is_valid`` without building a report."""
    n, ell = gog.n, gog.ell
    g1, g2 = gog.row1, gog.row2
    if n < 3 or ell < 0 or len(g1) != n or len(g2) != n - 1:
        return False
    # g1 positive and strictly under g2 already makes g2 positive
    return (
        g1[0] >= 1
        and _non_decreasing(g1) and _non_decreasing(g2)
        and all(top < bottom for top, bottom in zip(g1, g2))
        and all(value < j + 2 + ell for j, value in enumerate(g2, start=1))
        and all(top <= bottom for top, bottom in zip(g1[1:], g2))
    )


VALIDATORS = {
    Kind.MAGOG: validate_magog,
    Kind.GOG: validate_gog,
}


def validate(trapezoid: Trapezoid) -> ValidationReport:
    return VALIDATORS[trapezoid.kind](trapezoid)
