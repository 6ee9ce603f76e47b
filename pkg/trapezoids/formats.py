"""
Canonical text and JSON codecs for single trapezoids and streams of them.

Text (one instance, three lines, row 1 first regardless of drawing order):

    magog 8 0
    1 1 2 4 4 5 7
    1 2 2 4 4 6 7 7

JSON: {"kind": "magog", "n": 8, "ell": 0, "row1": [...], "row2": [...]}.
Streams are JSON-lines, or text blocks written back to back.

Both serializers are canonical: parsing their output and serializing again
gives the same bytes.
"""
import json
from typing import Iterable, Iterator
from trapezoids.core import Kind, Trapezoid, TrapezoidParams, trapezoid_class
from trapezoids.exceptions import FormatError

FORMATS = ('text', 'json')
JSON_FIELDS = ('kind', 'n', 'ell', 'row1', 'row2')


def _parse_ints(line: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(token) for token in line.split())
    except ValueError:
        raise FormatError(f'{what} must be space-separated integers, got {line!r}') from None


def _parse_kind(token: str) -> Kind:
    try:
        return Kind(token)
    except ValueError:
        raise FormatError(f'Unknown trapezoid kind {token!r}, expected one of {[str(k) for k in Kind]}') from None


def to_text(trapezoid: Trapezoid) -> str:
    return (
        f'{trapezoid.kind} {trapezoid.n} {trapezoid.ell}\n'
        f'{" ".join(map(str, trapezoid.row1))}\n'
        f'{" ".join(map(str, trapezoid.row2))}\n'
    )


def from_text(text: str) -> Trapezoid:
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) != 3:
        raise FormatError(f'Expected a header and two rows, got {len(lines)} non-empty lines')
    return _from_text_lines(lines)


def _from_text_lines(lines: list[str]) -> Trapezoid:
    header = lines[0].split()
    if len(header) != 3:
        raise FormatError(f'Header must read "<kind> <n> <ell>", got {lines[0]!r}')
    kind = _parse_kind(header[0])
    n, ell = _parse_ints(' '.join(header[1:]), 'n and ell')
    row1 = _parse_ints(lines[1], 'Row 1')
    row2 = _parse_ints(lines[2], 'Row 2')
    return trapezoid_class(kind)(TrapezoidParams(n, ell), row1, row2)


def to_dict(trapezoid: Trapezoid) -> dict:
    return {
        'kind': str(trapezoid.kind),
        'n': trapezoid.n,
        'ell': trapezoid.ell,
        'row1': list(trapezoid.row1),
        'row2': list(trapezoid.row2),
    }


def to_json(trapezoid: Trapezoid) -> str:
    return json.dumps(to_dict(trapezoid))


def from_dict(data) -> Trapezoid:
    if not isinstance(data, dict):
        raise FormatError('A trapezoid must be a JSON object')
    missing = [name for name in JSON_FIELDS if name not in data]
    if missing:
        raise FormatError(f'Missing fields: {", ".join(missing)}')
    if not isinstance(data['kind'], str):
        raise FormatError('Field "kind" must be a string')
    kind = _parse_kind(data['kind'])
    for name in ('n', 'ell'):
        if not _is_int(data[name]):
            raise FormatError(f'Field "{name}" must be an integer')
    for name in ('row1', 'row2'):
        if not isinstance(data[name], list) or not all(_is_int(v) for v in data[name]):
            raise FormatError(f'Field "{name}" must be an array of integers')
    return trapezoid_class(kind)(TrapezoidParams(data['n'], data['ell']), data['row1'], data['row2'])


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def from_json(text: str) -> Trapezoid:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f'Malformed JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})') from None
    return from_dict(data)


def serialize(trapezoid: Trapezoid, fmt: str = 'text') -> str:
    if fmt == 'json':
        return to_json(trapezoid) + '\n'
    if fmt == 'text':
        return to_text(trapezoid)
    raise FormatError(f'Unknown format {fmt!r}, expected one of {FORMATS}')


def detect_format(text: str) -> str:
    return 'json' if text.lstrip().startswith('{') else 'text'


def parse(text: str, fmt: str | None = None) -> Trapezoid:
    """Parse one instance; the format is sniffed when not given."""
    fmt = fmt or detect_format(text)
    if fmt == 'json':
        return from_json(text)
    if fmt == 'text':
        return from_text(text)
    raise FormatError(f'Unknown format {fmt!r}, expected one of {FORMATS}')


def parse_stream(text: str, fmt: str | None = None) -> Iterator[Trapezoid]:
    fmt = fmt or detect_format(text)
    lines = [line for line in text.splitlines() if line.strip()]
    if fmt == 'json':
        for line in lines:
            yield from_json(line)
        return
    if len(lines) % 3:
        raise FormatError(f'A text stream holds blocks of three lines, got {len(lines)} lines')
    for start in range(0, len(lines), 3):
        yield _from_text_lines(lines[start:start + 3])


def serialize_stream(trapezoids: Iterable[Trapezoid], fmt: str = 'text') -> Iterator[str]:
    for trapezoid in trapezoids:
        yield serialize(trapezoid, fmt)
