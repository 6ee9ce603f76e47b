from itertools import islice
from trapezoids.enumeration import enumerate_trapezoids
from trapezoids.formats import serialize_stream
from trapezoids.forms import EnumerateForm
from trapezoids.management.base import TrapezoidCommand


class Command(TrapezoidCommand):
    help = 'Streams every trapezoid of a family in canonical order (text blocks or JSON lines)'

    def add_arguments(self, parser):
        self.add_family_arguments(parser)
        self.add_format_argument(parser)
        parser.add_argument('--limit', type=int, help='Stop after this many instances')
        parser.add_argument('--partition', help='Only shard i of p, given as i/p')

    def handle(self, *args, **options):
        form = self.clean(EnumerateForm, {
            'kind': options['kind'],
            'n': options['n'],
            'ell': options['ell'],
            'format': options['format'],
            'limit': options['limit'],
            'partition': options['partition'],
        })
        data = form.cleaned_data
        stream = enumerate_trapezoids(data['kind'], form.params(), data['partition'])
        if data['limit'] is not None:
            stream = islice(stream, data['limit'])
        for chunk in serialize_stream(stream, data['format']):
            self.stdout.write(chunk, ending='')
