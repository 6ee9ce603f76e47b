"""
Exhaustive verification of the Magog/Gog bijection.

Usage:
    python manage.py verify --n 8
    python manage.py verify --n 3 --ell 1 --check roundtrip --check transport
    python manage.py verify --grid --n 8 --ell 2 --workers 4 --save
    python manage.py verify --n 200 --check equinumerosity --format json

Exits with status 1 when any check fails. Skipped checks (family larger than
TRAPEZOID_ENUMERATION_CAP) do not fail the run.
"""
import json
import time
from typing import Iterable
from django.conf import settings
from django.core.management.base import CommandError
from harness.forms import VerifyForm
from harness.models import VerificationRun
from harness.verify import CHECKS, DEFAULT_CHECKS, verify, verify_grid
from trapezoids.management.base import INVALID, TrapezoidCommand

# Optional fancy output
try:
    from tqdm import tqdm
    from colorama import init, Fore, Style
    init(autoreset=True)
    HAS_FANCY_OUTPUT = True
except ImportError:
    HAS_FANCY_OUTPUT = False
    tqdm = None

STATUS_COLORS = {
    'passed': 'GREEN',
    'skipped': 'YELLOW',
    'failed': 'RED',
}


class Command(TrapezoidCommand):
    help = 'Checks the bijection exhaustively: round trip, case correspondence, counts and transport'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help='Shape size; the largest one with --grid')
        parser.add_argument('--ell', type=int, default=0, help='Bound offset; the largest one with --grid (default: 0)')
        parser.add_argument('--grid', action='store_true', help='Run every n in 3..N and every ell in 0..ELL')
        parser.add_argument('--check', action='append', choices=list(CHECKS), help=f'Check to run, repeatable (default: {", ".join(DEFAULT_CHECKS)})')
        parser.add_argument('--format', choices=['text', 'json'], default='text')
        parser.add_argument('--save', action='store_true', help='Store every report in the database')
        parser.add_argument('--workers', type=int, default=settings.TRAPEZOID_WORKERS)
        parser.add_argument('--enumeration-cap', type=int, default=settings.TRAPEZOID_ENUMERATION_CAP)
        parser.add_argument('--failure-cap', type=int, default=settings.TRAPEZOID_FAILURE_CAP)
        parser.add_argument('--no-progress', action='store_true', help='Do not draw a progress bar')

    def _paint(self, text: str, status: str, options) -> str:
        if not HAS_FANCY_OUTPUT or options['no_color'] or options['format'] == 'json':
            return text
        return f'{getattr(Fore, STATUS_COLORS[status])}{Style.BRIGHT}{text}{Style.RESET_ALL}'

    def _progress(self, jobs: list) -> Iterable:
        if len(jobs) < 2:
            return jobs
        return tqdm(jobs, desc='Verifying', colour='green')

    def handle(self, *args, **options):
        form = self.clean(VerifyForm, {
            'n': options['n'],
            'ell': options['ell'],
            'checks': options['check'] or list(DEFAULT_CHECKS),
            'workers': options['workers'],
            'enumeration_cap': options['enumeration_cap'],
            'failure_cap': options['failure_cap'],
        })
        data = form.cleaned_data
        params = form.params()
        verifier_options = {
            'checks': data['checks'],
            'progress': self._progress if HAS_FANCY_OUTPUT and not options['no_progress'] else None,
            'enumeration_cap': data['enumeration_cap'],
            'failure_cap': data['failure_cap'],
            'workers': data['workers'],
        }

        started = time.perf_counter()
        if options['grid']:
            reports = verify_grid(params.n, params.ell, **verifier_options)
        else:
            reports = verify(params, **verifier_options)
        duration = time.perf_counter() - started

        if options['save']:
            for report in reports:
                VerificationRun.from_report(report)

        failed = [report for report in reports if not report.passed]
        if options['format'] == 'json':
            self.stdout.write(json.dumps({
                'passed': not failed,
                'reports': [report.to_dict() for report in reports],
            }))
        else:
            for report in reports:
                self.stdout.write(self._paint(report.summary(), report.status, options))
                for failure in report.failures:
                    self.stdout.write(f'  {failure.check}: {failure.detail}')
            status = 'failed' if failed else 'passed'
            self.stdout.write(self._paint(f'{len(reports)} report(s), {len(failed)} failed, {duration:.2f}s', status, options))
        if options['save']:
            self.stderr.write(f'Saved {len(reports)} verification run(s)')
        if failed:
            raise CommandError(f'{len(failed)} of {len(reports)} verification report(s) failed', returncode=INVALID)
