from django.test import SimpleTestCase
from trapezoids.core import GogTrapezoid, Kind, MagogTrapezoid, TrapezoidParams
from trapezoids.enumeration import enumerate_trapezoids
from trapezoids.exceptions import FormatError
from trapezoids.formats import (
    detect_format, from_dict, parse, parse_stream, serialize, serialize_stream, to_json, to_text,
)
from trapezoids.tests.fixtures import FIGURE1_GOG, FIGURE1_MAGOG, MINIMAL_GOG, MINIMAL_MAGOG

FIGURE1_MAGOG_TEXT = 'magog 8 0\n1 1 2 4 4 5 7\n1 2 2 4 4 6 7 7\n'
FIGURE1_GOG_JSON = '{"kind": "gog", "n": 8, "ell": 0, "row1": [1, 1, 2, 4, 4, 5, 7, 7], "row2": [2, 2, 4, 5, 6, 7, 8]}'


class TextFormatTests(SimpleTestCase):

    def test_serialize(self):
        self.assertEqual(to_text(FIGURE1_MAGOG), FIGURE1_MAGOG_TEXT)

    def test_parse(self):
        parsed = parse(FIGURE1_MAGOG_TEXT)
        self.assertIsInstance(parsed, MagogTrapezoid)
        self.assertEqual(parsed, FIGURE1_MAGOG)

    def test_blank_lines_are_ignored(self):
        self.assertEqual(parse('\nmagog 3 0\n\n1 1\n1 1 1\n\n'), MINIMAL_MAGOG)

    def test_malformed_input(self):
        for text in ('magog 3\n1 1\n1 1 1\n', 'magog 3 0\n1 x\n1 1 1\n', 'trapezoid 3 0\n1 1\n1 1 1\n', 'magog 3 0\n1 1\n'):
            with self.subTest(text=text), self.assertRaises(FormatError):
                parse(text, 'text')

    def test_invalid_instance_still_parses(self):
        parsed = parse('magog 3 0\n2 2\n1 1 1\n')
        self.assertFalse(parsed.validate().is_valid)


class JsonFormatTests(SimpleTestCase):

    def test_serialize(self):
        self.assertEqual(to_json(FIGURE1_GOG), FIGURE1_GOG_JSON)
        self.assertEqual(serialize(FIGURE1_GOG, 'json'), FIGURE1_GOG_JSON + '\n')

    def test_parse(self):
        self.assertEqual(detect_format(FIGURE1_GOG_JSON), 'json')
        self.assertEqual(parse(FIGURE1_GOG_JSON), FIGURE1_GOG)

    def test_type_errors(self):
        broken = [
            '{"kind": "gog", "n": 3, "ell": 0, "row1": [1, 1, 2]}',
            '{"kind": 1, "n": 3, "ell": 0, "row1": [1, 1, 2], "row2": [2, 2]}',
            '{"kind": "gog", "n": "3", "ell": 0, "row1": [1, 1, 2], "row2": [2, 2]}',
            '{"kind": "gog", "n": 3, "ell": true, "row1": [1, 1, 2], "row2": [2, 2]}',
            '{"kind": "gog", "n": 3, "ell": 0, "row1": [1, 1.5, 2], "row2": [2, 2]}',
            '[1, 2]',
            '{"kind": "gog",',
        ]
        for text in broken:
            with self.subTest(text=text), self.assertRaises(FormatError):
                parse(text, 'json')

    def test_from_dict(self):
        data = {'kind': 'gog', 'n': 3, 'ell': 0, 'row1': [1, 1, 2], 'row2': [2, 2]}
        self.assertEqual(from_dict(data), MINIMAL_GOG)

    def test_unknown_format(self):
        with self.assertRaises(FormatError):
            serialize(MINIMAL_GOG, 'yaml')


class StreamTests(SimpleTestCase):

    def test_text_stream(self):
        text = ''.join(serialize_stream([MINIMAL_MAGOG, MINIMAL_GOG]))
        self.assertEqual(list(parse_stream(text)), [MINIMAL_MAGOG, MINIMAL_GOG])

    def test_json_lines(self):
        text = ''.join(serialize_stream([MINIMAL_MAGOG, FIGURE1_GOG], 'json'))
        self.assertEqual(text.count('\n'), 2)
        self.assertEqual(list(parse_stream(text)), [MINIMAL_MAGOG, FIGURE1_GOG])

    def test_incomplete_text_stream(self):
        with self.assertRaises(FormatError):
            list(parse_stream('magog 3 0\n1 1\n1 1 1\ngog 3 0\n'))


class CanonicalFormTests(SimpleTestCase):

    def test_serialize_parse_serialize_is_stable(self):
        for n in range(3, 6):
            for kind in Kind:
                for trapezoid in enumerate_trapezoids(kind, TrapezoidParams(n)):
                    for fmt in ('text', 'json'):
                        text = serialize(trapezoid, fmt)
                        self.assertEqual(serialize(parse(text, fmt), fmt), text)
