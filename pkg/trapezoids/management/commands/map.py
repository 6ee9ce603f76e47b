from django.core.management.base import CommandError
from trapezoids.bijection import classify, apply
from trapezoids.core import Kind
from trapezoids.formats import serialize
from trapezoids.management.base import USAGE, TrapezoidCommand

DIRECTIONS = {
    'magog-to-gog': Kind.MAGOG,
    'gog-to-magog': Kind.GOG,
    'auto': None,
}


class Command(TrapezoidCommand):
    help = 'Sends a Magog trapezoid to its Gog partner or back, and reports the case of the bijection'

    def add_arguments(self, parser):
        self.add_input_argument(parser)
        parser.add_argument('--direction', choices=list(DIRECTIONS), default='auto')
        self.add_format_argument(parser, default=None)
        parser.add_argument(
            '--show-case',
            action='store_true',
            help='Print the case tag on stdout after the instance instead of on stderr'
        )

    def handle(self, *args, **options):
        trapezoid, fmt = self.read_instance(options['input'], options['format'])
        expected = DIRECTIONS[options['direction']]
        if expected is not None and trapezoid.kind is not expected:
            raise CommandError(
                f'--direction {options["direction"]} needs a {expected} trapezoid, got {trapezoid.kind}',
                returncode=USAGE
            )
        self.require_valid(trapezoid)

        tag = classify(trapezoid, check=False)
        image = apply(trapezoid, check=False)
        self.stdout.write(serialize(image, fmt), ending='')
        if options['show_case']:
            self.stdout.write(f'case: {tag}')
        else:
            self.stderr.write(f'case: {tag}')
