import json
from django.core.management.base import CommandError
from trapezoids.management.base import INVALID, TrapezoidCommand


class Command(TrapezoidCommand):
    help = 'Checks one trapezoid against the rules of its family and lists every violation'

    def add_arguments(self, parser):
        self.add_input_argument(parser)
        self.add_format_argument(parser, default=None)
        parser.add_argument('--json', action='store_true', help='Print the report as JSON')

    def handle(self, *args, **options):
        trapezoid, _ = self.read_instance(options['input'], options['format'])
        report = trapezoid.validate()
        if options['json']:
            self.stdout.write(json.dumps(report.to_dict()))
        elif report.is_valid:
            self.stdout.write('valid')
        else:
            for violation in report.violations:
                self.stdout.write(str(violation))
        if not report.is_valid:
            raise CommandError(
                f'{len(report.violations)} violation(s) in {report.kind} trapezoid', returncode=INVALID
            )
