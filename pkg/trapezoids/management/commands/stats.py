"""
Statistics over trapezoids.

Usage:
    python manage.py stats --kind magog --n 5 --stat ones_row2,maxed_row2
    python manage.py stats --kind gog --n 6 --ell 1 --format json --workers 4
    python manage.py stats --input witness.txt
    python manage.py stats --counterexample mrr --n-max 6
"""
import json
import logging
from django.conf import settings
from django.core.management.base import CommandError
from trapezoids.exceptions import InvalidTrapezoidError, UnknownStatisticError
from trapezoids.formats import to_text
from trapezoids.forms import FamilyForm, ParamsForm
from trapezoids.management.base import INVALID, USAGE, TrapezoidCommand
from trapezoids.statistics import (
    PAIRINGS, all_stats, distribution, distribution_to_csv, distribution_to_json, scan_statistic_counterexample,
)

logger = logging.getLogger(__name__)


class Command(TrapezoidCommand):
    help = 'Prints statistic distributions, the statistics of one instance, or a non-preservation witness'

    def add_arguments(self, parser):
        self.add_family_arguments(parser, kind_required=False)
        parser.add_argument('--stat', help='Comma-separated components (default: all for the kind)')
        parser.add_argument('--format', choices=['text', 'csv', 'json'], help='Output format (default: csv for tables, text otherwise)')
        parser.add_argument('--workers', type=int, default=settings.TRAPEZOID_WORKERS)
        parser.add_argument('--input', help='Print the full statistic vector of the instance in this file ("-" for stdin)')
        parser.add_argument('--counterexample', choices=list(PAIRINGS), help='Search for an instance whose paired statistic changes under the bijection')
        parser.add_argument('--n-max', type=int, default=6, help='Largest n tried by --counterexample (default: 6)')

    def handle(self, *args, **options):
        if options['input'] and options['counterexample']:
            raise CommandError('--input and --counterexample are exclusive', returncode=USAGE)
        try:
            if options['input']:
                self.single(options)
            elif options['counterexample']:
                self.counterexample(options)
            else:
                self.table(options)
        except UnknownStatisticError as e:
            raise CommandError(str(e), returncode=USAGE)

    def single(self, options):
        trapezoid, _ = self.read_instance(options['input'])
        try:
            vector = all_stats(trapezoid)
        except InvalidTrapezoidError as e:
            raise CommandError(str(e), returncode=INVALID)
        if options['format'] == 'json':
            self.stdout.write(json.dumps(vector.as_dict()))
            return
        for name, value in vector.components:
            self.stdout.write(f'{name}={value}')

    def counterexample(self, options):
        form = self.clean(ParamsForm, {'n': options['n_max'], 'ell': options['ell']})
        n_max, ell = form.cleaned_data['n'], form.cleaned_data['ell']
        witness = scan_statistic_counterexample(options['counterexample'], ell=ell, n_max=n_max)
        if witness is None:
            logger.info(f'No witness for {options["counterexample"]} up to n={n_max}, ell={ell}')
            if options['format'] == 'json':
                self.stdout.write('null')
            else:
                self.stdout.write(f'preserved: {options["counterexample"]} up to n={n_max} (ell={ell})')
            return
        if options['format'] == 'json':
            self.stdout.write(json.dumps(witness.to_dict()))
            return
        self.stdout.write(f'pairing: {witness.pairing}')
        self.stdout.write(to_text(witness.magog), ending='')
        self.stdout.write(to_text(witness.gog), ending='')
        self.stdout.write(f'magog stats: {witness.magog_stats}')
        self.stdout.write(f'gog stats: {witness.gog_stats}')

    def table(self, options):
        form = self.clean(FamilyForm, {'kind': options['kind'], 'n': options['n'], 'ell': options['ell']})
        names = [name.strip() for name in options['stat'].split(',')] if options['stat'] else None
        table = distribution(
            form.cleaned_data['kind'], form.params(), names, workers=max(1, options['workers'])
        )
        if options['format'] == 'json':
            self.stdout.write(distribution_to_json(table))
        else:
            self.stdout.write(distribution_to_csv(table), ending='')
