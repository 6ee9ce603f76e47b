from trapezoids.enumeration import count
from trapezoids.forms import FamilyForm
from trapezoids.management.base import TrapezoidCommand


class Command(TrapezoidCommand):
    help = 'Prints the exact number of trapezoids in a family'

    def add_arguments(self, parser):
        self.add_family_arguments(parser)

    def handle(self, *args, **options):
        form = self.clean(FamilyForm, {'kind': options['kind'], 'n': options['n'], 'ell': options['ell']})
        self.stdout.write(str(count(form.cleaned_data['kind'], form.params())))
