import sys
from django import forms
from django.core.management.base import BaseCommand, CommandError
from trapezoids.core import Kind, Trapezoid
from trapezoids.exceptions import FormatError
from trapezoids.formats import FORMATS, detect_format, parse
from trapezoids.forms import form_errors

# Exit codes: 0 success, 1 invalid instance or failed check, 2 usage or parse error.
INVALID = 1
USAGE = 2


class TrapezoidCommand(BaseCommand):
    """Shared argument and input handling for the trapezoid commands."""

    def add_family_arguments(self, parser, kind_required: bool = True) -> None:
        parser.add_argument('--kind', choices=[str(kind) for kind in Kind], required=kind_required)
        parser.add_argument('--n', type=int, help='Shape size, at least 3')
        parser.add_argument('--ell', type=int, default=0, help='Bound offset (default: 0)')

    def add_format_argument(self, parser, default: str | None = 'text') -> None:
        parser.add_argument(
            '--format',
            choices=FORMATS,
            default=default,
            help='Instance format' + (f' (default: {default})' if default else ' (default: same as input)')
        )

    def add_input_argument(self, parser) -> None:
        parser.add_argument('input', nargs='?', default='-', help='Instance file, "-" for stdin (default)')

    def clean(self, form_class: type[forms.Form], data: dict) -> forms.Form:
        form = form_class(data={key: value for key, value in data.items() if value is not None})
        if not form.is_valid():
            raise CommandError(form_errors(form), returncode=USAGE)
        return form

    def read_text(self, path: str) -> str:
        source = 'stdin' if path == '-' else path
        try:
            if path == '-':
                return sys.stdin.read()
            with open(path, encoding='utf-8') as handle:
                return handle.read()
        except UnicodeDecodeError as e:
            raise CommandError(f'Cannot read {source}: not UTF-8 text ({e.reason} at byte {e.start})', returncode=USAGE)
        except OSError as e:
            raise CommandError(f'Cannot read {source}: {e.strerror}', returncode=USAGE)

    def read_instance(self, path: str, fmt: str | None = None) -> tuple[Trapezoid, str]:
        """Parse one instance; returns it with the format it was read in."""
        text = self.read_text(path)
        fmt = fmt or detect_format(text)
        try:
            trapezoid = parse(text, fmt)
        except FormatError as e:
            raise CommandError(str(e), returncode=USAGE)
        return trapezoid, fmt

    def require_valid(self, trapezoid: Trapezoid) -> None:
        report = trapezoid.validate()
        if not report.is_valid:
            raise CommandError(f'Invalid {report.kind} trapezoid: {report.summary()}', returncode=INVALID)
