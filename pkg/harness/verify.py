"""
Exhaustive verification of the bijection at desk scale.

Every verifier takes a ``TrapezoidParams`` and returns a ``VerifyReport``.
Enumeration-backed checks run only when the family is at most
``enumeration_cap`` large; above that they are reported as skipped, never as
passed. At most ``failure_cap`` failures are kept with full detail (the
first ones in canonical order); ``failure_total`` always counts all of them.

Check ids used in failures:

    phi-membership, psi-phi-identity      Magog side of the round trip
    psi-membership, phi-psi-identity      Gog side of the round trip
    exception                             a map raised on a valid input
    case-correspondence, pivot-agreement  case and k carried across the map
    dp-equality, dp-vs-enumeration        counts
    transport-stray, transport-collision, transport-miss
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable
from trapezoids.bijection import (
    classify_gog, classify_magog, compute_pivot, gog_to_magog, magog_to_gog,
)
from trapezoids.core import Kind, Trapezoid, TrapezoidParams, is_gog, is_magog
from trapezoids.enumeration import count, enumerate_trapezoids
from trapezoids.formats import to_dict
from trapezoids.utils import run_sharded

logger = logging.getLogger(__name__)

ENUMERATION_CAP = 10_000_000
FAILURE_CAP = 100


@dataclass(frozen=True)
class Failure:
    check: str
    instance: Trapezoid | None
    detail: str

    def sort_key(self) -> tuple:
        if self.instance is None:
            return (0, (), self.check)
        return (1 if self.instance.kind is Kind.MAGOG else 2, self.instance.sort_key(), self.check)

    def to_dict(self) -> dict:
        return {
            'check': self.check,
            'instance': to_dict(self.instance) if self.instance is not None else None,
            'detail': self.detail,
        }


@dataclass
class VerifyReport:
    check: str
    params: TrapezoidParams
    counts: dict[str, int] = field(default_factory=dict)
    instances_checked: dict[str, int] = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)
    failure_total: int = 0
    skipped: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_total == 0

    @property
    def status(self) -> str:
        if not self.passed:
            return 'failed'
        if self.skipped:
            return 'skipped'
        return 'passed'

    def add_failures(self, failures: Iterable[Failure], total: int, cap: int) -> None:
        merged = sorted([*self.failures, *failures], key=Failure.sort_key)
        self.failures = merged[:cap]
        self.failure_total += total

    def to_dict(self) -> dict:
        return {
            'check': self.check,
            'n': self.params.n,
            'ell': self.params.ell,
            'status': self.status,
            'counts': dict(self.counts),
            'instances_checked': dict(self.instances_checked),
            'failure_total': self.failure_total,
            'failures': [failure.to_dict() for failure in self.failures],
            'skipped': list(self.skipped),
            'elapsed': round(self.elapsed, 6),
        }

    def summary(self) -> str:
        checked = ', '.join(f'{kind} {total}' for kind, total in self.instances_checked.items()) or 'nothing'
        line = f'{self.check} {self.params}: {self.status}, checked {checked}'
        if self.failure_total:
            line += f', {self.failure_total} failure(s)'
        if self.skipped:
            line += f', skipped {", ".join(self.skipped)}'
        return line


class _Collector:
    """Per-shard failure list that keeps only the first ``cap`` entries."""

    def __init__(self, cap: int) -> None:
        self.cap = cap
        self.kept: list[Failure] = []
        self.total = 0

    def add(self, check: str, instance: Trapezoid | None, detail: str) -> None:
        self.total += 1
        if len(self.kept) < self.cap:
            self.kept.append(Failure(check, instance, detail))


def _rows(trapezoid: Trapezoid) -> str:
    return f'{trapezoid.kind} row1={list(trapezoid.row1)} row2={list(trapezoid.row2)}'


def _roundtrip_shard(params: TrapezoidParams, failure_cap: int, partition: tuple[int, int]):
    collector = _Collector(failure_cap)
    checked = {str(Kind.MAGOG): 0, str(Kind.GOG): 0}
    sides = (
        (Kind.MAGOG, magog_to_gog, gog_to_magog, is_gog, 'phi-membership', 'psi-phi-identity'),
        (Kind.GOG, gog_to_magog, magog_to_gog, is_magog, 'psi-membership', 'phi-psi-identity'),
    )
    for kind, forward, backward, is_member, membership, identity in sides:
        for trapezoid in enumerate_trapezoids(kind, params, partition):
            checked[str(kind)] += 1
            try:
                image = forward(trapezoid, check=False)
                if not is_member(image):
                    collector.add(membership, trapezoid, f'image {_rows(image)}: {image.validate().summary()}')
                    continue
                back = backward(image, check=False)
                if back != trapezoid:
                    collector.add(identity, trapezoid, f'came back as {_rows(back)}')
            except Exception as e:
                logger.exception(f'Map raised on {_rows(trapezoid)}: {e}')
                collector.add('exception', trapezoid, repr(e))
    return checked, collector.kept, collector.total


def _case_shard(params: TrapezoidParams, failure_cap: int, partition: tuple[int, int]):
    collector = _Collector(failure_cap)
    checked = 0
    for magog in enumerate_trapezoids(Kind.MAGOG, params, partition):
        checked += 1
        try:
            gog = magog_to_gog(magog, check=False)
            magog_tag = classify_magog(magog, check=False)
            # Case1 carries the smallest bug; bug-free trapezoids expect pivot n-1.
            expected = magog_tag.k if magog_tag.number == 1 else params.n - 1
            gog_tag = classify_gog(gog, check=False)
            if magog_tag != gog_tag:
                collector.add('case-correspondence', magog, f'{magog_tag} on the Magog side, {gog_tag} on the Gog side')
            pivot = compute_pivot(gog, check=False)
            if pivot != expected:
                collector.add('pivot-agreement', magog, f'pivot {pivot}, expected {expected}')
        except Exception as e:
            logger.exception(f'Map raised on {_rows(magog)}: {e}')
            collector.add('exception', magog, repr(e))
    return {str(Kind.MAGOG): checked}, collector.kept, collector.total


def _enumeration_count_shard(kind: Kind, params: TrapezoidParams, partition: tuple[int, int]) -> int:
    return sum(1 for _ in enumerate_trapezoids(kind, params, partition))


def _family_counts(params: TrapezoidParams) -> dict[str, int]:
    return {str(kind): count(kind, params) for kind in Kind}


def _too_large(report: VerifyReport, enumeration_cap: int) -> bool:
    return max(report.counts.values()) > enumeration_cap


def _run_sharded_check(report: VerifyReport, shard: Callable, failure_cap: int, workers: int) -> None:
    for checked, kept, total in run_sharded(shard, (report.params, failure_cap), workers):
        for kind, amount in checked.items():
            report.instances_checked[kind] = report.instances_checked.get(kind, 0) + amount
        report.add_failures(kept, total, failure_cap)


def _finish(report: VerifyReport, started: float) -> VerifyReport:
    report.elapsed = time.perf_counter() - started
    log = logger.info if report.status != 'failed' else logger.warning
    log(report.summary())
    return report


def verify_roundtrip(params: TrapezoidParams, enumeration_cap: int = ENUMERATION_CAP, failure_cap: int = FAILURE_CAP, workers: int = 1) -> VerifyReport:
    """psi(phi(M)) = M and phi(psi(G)) = G, with every image in its family."""
    started = time.perf_counter()
    params.ensure_valid()
    report = VerifyReport('roundtrip', params, counts=_family_counts(params))
    if _too_large(report, enumeration_cap):
        report.skipped.append('roundtrip')
    else:
        _run_sharded_check(report, _roundtrip_shard, failure_cap, workers)
    return _finish(report, started)


def verify_case_correspondence(params: TrapezoidParams, enumeration_cap: int = ENUMERATION_CAP, failure_cap: int = FAILURE_CAP, workers: int = 1) -> VerifyReport:
    """A Magog trapezoid and its image fall in the same case with the same k,
    and the pivot of the image is the smallest bug (n-1 when there is none)."""
    started = time.perf_counter()
    params.ensure_valid()
    report = VerifyReport('case-correspondence', params, counts=_family_counts(params))
    if _too_large(report, enumeration_cap):
        report.skipped.append('case-correspondence')
    else:
        _run_sharded_check(report, _case_shard, failure_cap, workers)
    return _finish(report, started)


def verify_equinumerosity(params: TrapezoidParams, enumeration_cap: int = ENUMERATION_CAP, failure_cap: int = FAILURE_CAP, workers: int = 1) -> VerifyReport:
    """Equal counts by the transfer-matrix sweep and, below the cap, agreement
    of the sweep with plain enumeration."""
    started = time.perf_counter()
    params.ensure_valid()
    report = VerifyReport('equinumerosity', params, counts=_family_counts(params))
    collector = _Collector(failure_cap)
    magog_total, gog_total = report.counts[str(Kind.MAGOG)], report.counts[str(Kind.GOG)]
    if magog_total != gog_total:
        collector.add('dp-equality', None, f'magog {magog_total} != gog {gog_total}')

    if _too_large(report, enumeration_cap):
        report.skipped.append('dp-vs-enumeration')
    else:
        for kind in Kind:
            enumerated = sum(run_sharded(_enumeration_count_shard, (kind, params), workers))
            report.instances_checked[str(kind)] = enumerated
            if enumerated != report.counts[str(kind)]:
                collector.add('dp-vs-enumeration', None, f'{kind}: sweep {report.counts[str(kind)]}, enumeration {enumerated}')
    report.add_failures(collector.kept, collector.total, failure_cap)
    return _finish(report, started)


def verify_transport(params: TrapezoidParams, enumeration_cap: int = ENUMERATION_CAP, failure_cap: int = FAILURE_CAP, workers: int = 1) -> VerifyReport:
    """The images of all Magog trapezoids are exactly the Gog family, each hit once.

    Needs every image in one place, so it ignores ``workers``.
    """
    started = time.perf_counter()
    params.ensure_valid()
    report = VerifyReport('transport', params, counts=_family_counts(params))
    if _too_large(report, enumeration_cap):
        report.skipped.append('transport')
        return _finish(report, started)

    collector = _Collector(failure_cap)
    images: dict[Trapezoid, Trapezoid] = {}
    checked = 0
    for magog in enumerate_trapezoids(Kind.MAGOG, params):
        checked += 1
        gog = magog_to_gog(magog, check=False)
        if not is_gog(gog):
            collector.add('transport-stray', magog, f'image {_rows(gog)} is not a Gog trapezoid')
            continue
        if gog in images:
            collector.add('transport-collision', magog, f'shares its image {_rows(gog)} with {_rows(images[gog])}')
            continue
        images[gog] = magog
    report.instances_checked[str(Kind.MAGOG)] = checked

    checked = 0
    for gog in enumerate_trapezoids(Kind.GOG, params):
        checked += 1
        if gog not in images:
            collector.add('transport-miss', gog, 'is not the image of any Magog trapezoid')
    report.instances_checked[str(Kind.GOG)] = checked
    report.add_failures(collector.kept, collector.total, failure_cap)
    return _finish(report, started)


CHECKS: dict[str, Callable[..., VerifyReport]] = {
    'roundtrip': verify_roundtrip,
    'case-correspondence': verify_case_correspondence,
    'equinumerosity': verify_equinumerosity,
    'transport': verify_transport,
}
DEFAULT_CHECKS = ('roundtrip', 'case-correspondence', 'equinumerosity')


Job = tuple[str, TrapezoidParams]
Progress = Callable[[list[Job]], Iterable[Job]]


def _run_jobs(jobs: list[Job], progress: Progress | None, options: dict) -> list[VerifyReport]:
    iterator = progress(jobs) if progress is not None else jobs
    return [CHECKS[check](params, **options) for check, params in iterator]


def verify(params: TrapezoidParams, checks: Iterable[str] = DEFAULT_CHECKS, progress: Progress | None = None, **options) -> list[VerifyReport]:
    """Run the named checks on one family. ``progress`` wraps the job list
    (a tqdm bar in the ``verify`` command)."""
    return _run_jobs([(check, params) for check in checks], progress, options)


def grid(n_max: int, ell_max: int) -> list[TrapezoidParams]:
    return [TrapezoidParams(n, ell) for n in range(3, n_max + 1) for ell in range(ell_max + 1)]


def verify_grid(n_max: int, ell_max: int, checks: Iterable[str] = DEFAULT_CHECKS, progress: Progress | None = None, **options) -> list[VerifyReport]:
    """Every check over {3..n_max} x {0..ell_max}, in grid order."""
    checks = tuple(checks)
    jobs = [(check, params) for params in grid(n_max, ell_max) for check in checks]
    return _run_jobs(jobs, progress, options)
