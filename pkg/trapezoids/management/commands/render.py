from trapezoids.management.base import TrapezoidCommand
from trapezoids.render import RenderSpec, render_ascii


class Command(TrapezoidCommand):
    help = 'Draws a trapezoid as two aligned rows, optionally marking the bug or the pivot'

    def add_arguments(self, parser):
        self.add_input_argument(parser)
        self.add_format_argument(parser, default=None)
        parser.add_argument('--mark-bug', action='store_true', help='Mark the smallest bug (Magog only)')
        parser.add_argument('--mark-pivot', action='store_true', help='Mark the pivot (Gog only)')
        parser.add_argument('--show-bounds', action='store_true', help='Print the per-cell upper bounds below')

    def handle(self, *args, **options):
        trapezoid, _ = self.read_instance(options['input'], options['format'])
        self.require_valid(trapezoid)
        spec = RenderSpec(
            trapezoid,
            mark_bug=options['mark_bug'],
            mark_pivot=options['mark_pivot'],
            show_bounds=options['show_bounds'],
        )
        self.stdout.write(render_ascii(spec), ending='')
