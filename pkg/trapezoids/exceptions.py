class TrapezoidError(Exception):
    """Base class for every error raised by the trapezoid library."""


class InvalidParamsError(TrapezoidError, ValueError):

    def __init__(self, n, ell, problems: list[str]) -> None:
        self.n = n
        self.ell = ell
        self.problems = problems
        super().__init__(f'Invalid parameters (n={n}, ell={ell}): {"; ".join(problems)}')


class InvalidTrapezoidError(TrapezoidError, ValueError):

    def __init__(self, report) -> None:
        self.report = report
        super().__init__(f'Invalid {report.kind} trapezoid: {report.summary()}')


class CellIndexError(TrapezoidError, IndexError):
    pass


class RankOutOfRangeError(TrapezoidError, IndexError):

    def __init__(self, rank: int, total: int) -> None:
        self.rank = rank
        self.total = total
        super().__init__(f'Rank {rank} is outside [0, {total})')


class FormatError(TrapezoidError, ValueError):
    pass


class UnknownStatisticError(TrapezoidError, ValueError):
    pass
