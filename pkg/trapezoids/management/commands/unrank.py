from django.core.management.base import CommandError
from trapezoids.enumeration import unrank
from trapezoids.exceptions import RankOutOfRangeError
from trapezoids.formats import serialize
from trapezoids.forms import FamilyForm
from trapezoids.management.base import USAGE, TrapezoidCommand


class Command(TrapezoidCommand):
    help = 'Prints the trapezoid at a given 0-based position of the canonical order'

    def add_arguments(self, parser):
        parser.add_argument('position', type=int)
        self.add_family_arguments(parser)
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        form = self.clean(FamilyForm, {
            'kind': options['kind'],
            'n': options['n'],
            'ell': options['ell'],
            'format': options['format'],
        })
        data = form.cleaned_data
        try:
            trapezoid = unrank(data['kind'], form.params(), options['position'])
        except RankOutOfRangeError as e:
            raise CommandError(str(e), returncode=USAGE)
        self.stdout.write(serialize(trapezoid, data['format']), ending='')
