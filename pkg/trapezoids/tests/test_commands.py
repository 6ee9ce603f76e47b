import json
import tempfile
from io import BytesIO, StringIO, TextIOWrapper
from pathlib import Path
from unittest.mock import patch
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from trapezoids.formats import parse_stream, to_json, to_text
from trapezoids.tests import fixtures


class CommandTestCase(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write(self, name: str, text: str) -> str:
        path = Path(self.tmp.name) / name
        path.write_text(text, encoding='utf-8')
        return str(path)

    def run_command(self, *args, **options) -> tuple[str, str]:
        out, err = StringIO(), StringIO()
        call_command(*args, stdout=out, stderr=err, **options)
        return out.getvalue(), err.getvalue()

    def assertExitCode(self, code: int, *args, **options) -> CommandError:
        with self.assertRaises(CommandError) as ctx:
            self.run_command(*args, **options)
        self.assertEqual(ctx.exception.returncode, code)
        return ctx.exception


class ValidateCommandTests(CommandTestCase):

    def test_valid(self):
        out, _ = self.run_command('validate', self.write('m.txt', to_text(fixtures.FIGURE1_MAGOG)))
        self.assertEqual(out, 'valid\n')

    def test_invalid_lists_violations(self):
        path = self.write('broken.txt', 'magog 3 0\n2 2\n1 1 1\n')
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('validate', path, stdout=out)
        self.assertEqual(ctx.exception.returncode, 1)
        lines = out.getvalue().splitlines()
        self.assertEqual(len(lines), 2)
        self.assertTrue(lines[0].startswith('M2 at (1, 1)'))
        self.assertTrue(lines[1].startswith('M2 at (1, 2)'))

    def test_json_report(self):
        out, _ = self.run_command('validate', self.write('g.json', to_json(fixtures.MINIMAL_GOG)), '--json')
        self.assertEqual(json.loads(out), {'kind': 'gog', 'valid': True, 'violations': []})

    def test_malformed(self):
        self.assertExitCode(2, 'validate', self.write('bad.txt', 'magog 3 0\n1 one\n1 1 1\n'))

    def test_missing_file(self):
        self.assertExitCode(2, 'validate', str(Path(self.tmp.name) / 'missing.txt'))

    def test_non_utf8_input(self):
        path = Path(self.tmp.name) / 'latin1.txt'
        path.write_bytes(b'magog 3 0\n1 1\n1 1 \xff\n')
        error = self.assertExitCode(2, 'validate', str(path))
        self.assertIn('not UTF-8', str(error))

    def test_non_utf8_stdin(self):
        with patch('sys.stdin', TextIOWrapper(BytesIO(b'\xfe\xff'), encoding='utf-8')):
            self.assertExitCode(2, 'validate')


class MapCommandTests(CommandTestCase):

    def test_first_case(self):
        out, err = self.run_command('map', self.write('m.txt', to_text(fixtures.CASE1_MAGOG)))
        self.assertEqual(out, to_text(fixtures.CASE1_GOG))
        self.assertEqual(err.strip(), 'case: Case1(3)')

    def test_map_back_is_byte_identical(self):
        original = to_text(fixtures.CASE3_MAGOG)
        image, _ = self.run_command('map', self.write('m.txt', original), '--direction', 'magog-to-gog')
        back, _ = self.run_command('map', self.write('g.txt', image), '--direction', 'gog-to-magog')
        self.assertEqual(back, original)

    def test_json_in_json_out(self):
        out, _ = self.run_command('map', self.write('g.json', to_json(fixtures.CASE2_GOG)))
        self.assertEqual(out, to_json(fixtures.CASE2_MAGOG) + '\n')

    def test_show_case(self):
        out, err = self.run_command('map', self.write('m.txt', to_text(fixtures.CASE2_MAGOG)), '--show-case')
        self.assertEqual(out, to_text(fixtures.CASE2_GOG) + 'case: Case2\n')
        self.assertEqual(err, '')

    def test_wrong_direction(self):
        self.assertExitCode(2, 'map', self.write('m.txt', to_text(fixtures.CASE1_MAGOG)), '--direction', 'gog-to-magog')

    def test_invalid_instance(self):
        self.assertExitCode(1, 'map', self.write('g.txt', 'gog 3 0\n1 3 3\n2 3\n'))


class FamilyCommandTests(CommandTestCase):

    def test_count(self):
        out, _ = self.run_command('count', '--kind', 'gog', '--n', '3', '--ell', '0')
        self.assertEqual(out, '7\n')

    def test_count_rejects_small_n(self):
        error = self.assertExitCode(2, 'count', '--kind', 'gog', '--n', '2')
        self.assertIn('n must be at least 3', str(error))

    def test_enumerate_limit(self):
        out, _ = self.run_command('enumerate', '--kind', 'magog', '--n', '3', '--ell', '0', '--limit', '1')
        self.assertEqual(out, 'magog 3 0\n1 1\n1 1 1\n')

    def test_enumerate_json_lines(self):
        out, _ = self.run_command('enumerate', '--kind', 'gog', '--n', '3', '--format', 'json')
        self.assertEqual(len(out.splitlines()), 7)
        self.assertEqual(list(parse_stream(out))[0], fixtures.MINIMAL_GOG)

    def test_enumerate_partitions(self):
        whole, _ = self.run_command('enumerate', '--kind', 'magog', '--n', '4')
        shards = [self.run_command('enumerate', '--kind', 'magog', '--n', '4', '--partition', f'{i}/2')[0] for i in range(2)]
        members = [t for shard in shards for t in parse_stream(shard)]
        self.assertEqual(sorted(members, key=lambda t: t.sort_key()), list(parse_stream(whole)))

    def test_enumerate_bad_partition(self):
        self.assertExitCode(2, 'enumerate', '--kind', 'magog', '--n', '4', '--partition', '2/2')
        self.assertExitCode(2, 'enumerate', '--kind', 'magog', '--n', '4', '--partition', 'half')

    def test_rank_and_unrank(self):
        out, _ = self.run_command('unrank', '6', '--kind', 'gog', '--n', '3')
        self.assertEqual(out, 'gog 3 0\n1 2 3\n2 3\n')
        out, _ = self.run_command('rank', self.write('g.txt', out))
        self.assertEqual(out, '6\n')

    def test_unrank_out_of_range(self):
        self.assertExitCode(2, 'unrank', '7', '--kind', 'gog', '--n', '3')

    def test_rank_invalid_instance(self):
        self.assertExitCode(1, 'rank', self.write('m.txt', 'magog 3 0\n2 2\n1 1 1\n'))


class StatsCommandTests(CommandTestCase):

    def test_distribution_csv(self):
        out, _ = self.run_command('stats', '--kind', 'magog', '--n', '3', '--stat', 'ones_row2')
        self.assertEqual(out, 'ones_row2,count\n1,4\n2,2\n3,1\n')

    def test_distribution_json(self):
        out, _ = self.run_command('stats', '--kind', 'gog', '--n', '3', '--format', 'json')
        self.assertEqual(sum(row['count'] for row in json.loads(out)), 7)

    def test_unknown_stat(self):
        self.assertExitCode(2, 'stats', '--kind', 'gog', '--n', '3', '--stat', 'bogus')

    def test_single_instance(self):
        out, _ = self.run_command('stats', '--input', self.write('g.txt', to_text(fixtures.FIGURE1_GOG)))
        self.assertIn('ones_row1=2', out.splitlines())
        self.assertIn('row2_last=8', out.splitlines())

    def test_counterexample_is_reverifiable(self):
        out, _ = self.run_command('stats', '--counterexample', 'mrr', '--format', 'json')
        witness = json.loads(out)
        magog_path = self.write('m.json', json.dumps(witness['magog']))
        image, _ = self.run_command('map', magog_path)
        self.assertEqual(json.loads(image), witness['gog'])
        stats, _ = self.run_command('stats', '--input', self.write('g.json', image), '--format', 'json')
        gog_stats = json.loads(stats)
        self.assertEqual({name: gog_stats[name] for name in witness['gog_stats']}, witness['gog_stats'])
        self.assertNotEqual(list(witness['magog_stats'].values()), list(witness['gog_stats'].values()))

    def test_counterexample_text(self):
        out, _ = self.run_command('stats', '--counterexample', 'bc', '--n-max', '4')
        self.assertTrue(out.startswith('pairing: bc\nmagog 3 0\n'))

    def test_constant_is_preserved(self):
        out, _ = self.run_command('stats', '--counterexample', 'constant', '--n-max', '4')
        self.assertEqual(out, 'preserved: constant up to n=4 (ell=0)\n')


class RenderCommandTests(CommandTestCase):

    def test_render_with_bug(self):
        out, _ = self.run_command('render', self.write('m.txt', to_text(fixtures.FIGURE1_MAGOG)), '--mark-bug')
        self.assertEqual(out.splitlines()[1], '     \\')
        self.assertEqual(out.splitlines()[-1], 'bug: 3')

    def test_render_invalid(self):
        self.assertExitCode(1, 'render', self.write('m.txt', 'magog 3 0\n2 2\n1 1 1\n'))
