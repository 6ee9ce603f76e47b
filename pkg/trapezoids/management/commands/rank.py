from trapezoids.enumeration import rank
from trapezoids.management.base import TrapezoidCommand


class Command(TrapezoidCommand):
    help = "Prints the 0-based position of a trapezoid in its family's canonical order"

    def add_arguments(self, parser):
        self.add_input_argument(parser)
        self.add_format_argument(parser, default=None)

    def handle(self, *args, **options):
        trapezoid, _ = self.read_instance(options['input'], options['format'])
        self.require_valid(trapezoid)
        self.stdout.write(str(rank(trapezoid)))
