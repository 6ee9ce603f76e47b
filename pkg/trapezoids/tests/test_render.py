from django.test import SimpleTestCase
from trapezoids.core import MagogTrapezoid
from trapezoids.exceptions import InvalidTrapezoidError
from trapezoids.render import RenderSpec, render_ascii
from trapezoids.tests.fixtures import CASE1_GOG, CASE2_MAGOG, FIGURE1_MAGOG, MINIMAL_GOG, MINIMAL_MAGOG


class RenderTests(SimpleTestCase):

    def test_all_minimal(self):
        self.assertEqual(render_ascii(RenderSpec(MINIMAL_MAGOG)), '1 1\n1 1 1\n')

    def test_gog_first_row_is_longer(self):
        self.assertEqual(render_ascii(RenderSpec(MINIMAL_GOG)), '1 1 2\n2 2\n')

    def test_bug_marker(self):
        self.assertEqual(
            render_ascii(RenderSpec(FIGURE1_MAGOG, mark_bug=True)),
            '1 1 2 4 4 5 7\n'
            '     \\\n'
            '1 2 2 4 4 6 7 7\n'
            'bug: 3\n'
        )

    def test_bug_free(self):
        self.assertEqual(render_ascii(RenderSpec(CASE2_MAGOG, mark_bug=True)).splitlines()[-1], 'bug: none')

    def test_pivot_marker(self):
        lines = render_ascii(RenderSpec(CASE1_GOG, mark_pivot=True)).splitlines()
        self.assertEqual(lines, ['1 1 2 2 2 2 4 5', '     \\', '2 3 4 4 6 7 7', 'pivot: 3'])

    def test_marks_only_apply_to_their_kind(self):
        self.assertEqual(render_ascii(RenderSpec(MINIMAL_MAGOG, mark_pivot=True)), '1 1\n1 1 1\n')
        self.assertEqual(render_ascii(RenderSpec(MINIMAL_GOG, mark_bug=True)), '1 1 2\n2 2\n')

    def test_bounds(self):
        self.assertEqual(
            render_ascii(RenderSpec(MINIMAL_MAGOG, show_bounds=True)),
            '1 1\n1 1 1\nbounds:\n1 2\n1 2 3\n'
        )

    def test_wide_entries_are_padded(self):
        magog = MagogTrapezoid.build(3, 8, [1, 10], [1, 10, 11])
        self.assertEqual(render_ascii(RenderSpec(magog)), '1  10\n1  10 11\n')

    def test_refuses_invalid(self):
        with self.assertRaises(InvalidTrapezoidError):
            render_ascii(RenderSpec(MagogTrapezoid.build(3, 0, [2, 2], [1, 1, 1])))
