import contextlib
import io
import json
import os
import tempfile
import unittest

import pwh
from pwh import Hw, MapLeaf, simplex
from pwh.cli import main
from test_utils import SAMPLES_DIR

FIGURE_TXT = os.path.join(SAMPLES_DIR, 'figure.txt')


def read(path):
    with open(path) as f:
        return f.read()


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        status = main(list(argv))
    return status, out.getvalue(), err.getvalue()


class TestComplexCommand(unittest.TestCase):
    def test_missing_faces(self):
        status, out, _ = run('complex', 'mf', '--in', FIGURE_TXT)
        self.assertEqual(0, status)
        self.assertEqual([['1', '2', '3'], ['1', '4'], ['2', '3', '4']],
                         json.loads(out)['minimal_missing_faces'])

    def test_fold(self):
        status, out, _ = run('complex', 'fold', '--in', FIGURE_TXT, '--map', '4->1', '--format', 'text')
        self.assertEqual(0, status)
        self.assertEqual('vertices: 1 2 3\nfaces: {1 2} {1 3} {2 3}\n\n', out)

    def test_wrong_input_count(self):
        status, _, err = run('complex', 'join', '--in', FIGURE_TXT)
        self.assertEqual(2, status)
        self.assertIn('takes 2 input(s)', err)

    def test_missing_file(self):
        status, _, err = run('--json-errors', 'complex', 'dual', '--in', 'no-such-file.txt')
        self.assertEqual(2, status)
        self.assertEqual('bad-file', json.loads(err)['code'])

    def test_dual_of_void(self):
        status, _, err = run('--json-errors', 'complex', 'dual', '--in', os.path.join(SAMPLES_DIR, 'void.txt'))
        self.assertEqual(1, status)
        self.assertEqual('void-dual', json.loads(err)['code'])

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, 'k.json')
            status, out, _ = run('--out', path, 'complex', 'dual', '--in', FIGURE_TXT)
            self.assertEqual(0, status)
            self.assertEqual('', out)
            with open(path) as f:
                self.assertEqual(pwh.loads_any(read(FIGURE_TXT)).alexander_dual(), pwh.loads(f.read()))


class TestRelationCommands(unittest.TestCase):
    def test_identity(self):
        status, out, _ = run('identity', '--partition', '1|2,3|4', '--format', 'text')
        self.assertEqual(0, status)
        self.assertEqual(read(FIGURE_TXT).strip(), out.strip())

    def test_bad_partition(self):
        self.assertEqual(2, run('identity', '--partition', '1|2,1|3')[0])
        # a well-formed partition with too few blocks
        self.assertEqual(1, run('identity', '--partition', '1|2')[0])

    def test_relation_text(self):
        status, out, _ = run('relation', '--partition', '1|2|3', '--dims', '2,2,2', '--format', 'text')
        self.assertEqual(0, status)
        lines = out.splitlines()
        self.assertEqual(4, len(lines))
        self.assertEqual('= 0', lines[-1])
        self.assertTrue(all(line[0] in '+-' for line in lines[:3]))

    def test_relation_json(self):
        status, out, _ = run('relation', 'fold', '--partition', '1|2,3|4', '--map', '4->1')
        self.assertEqual(0, status)
        summands = json.loads(out)['summands']
        self.assertEqual(3, len(summands))
        self.assertEqual(1, sum(s['triviality']['status'] == 'trivial' for s in summands))

    def test_fold_needs_map(self):
        self.assertEqual(2, run('relation', 'fold', '--partition', '1|2|3')[0])

    def test_triviality(self):
        leaves = tuple(MapLeaf(f'f{n}', sphere_dim=2) for n in (1, 2, 3))
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, 'e.json')
            with open(path, 'w') as f:
                f.write(pwh.dumps_expr(Hw(leaves, simplex([1, 2, 3]))))
            status, out, _ = run('triviality', '--in', path)
        self.assertEqual(0, status)
        self.assertEqual({'status': 'trivial', 'rule': 'R2'}, json.loads(out)['verdict'])


class TestMiscCommands(unittest.TestCase):
    def test_eta(self):
        status, out, _ = run('eta', '--k', '3', '--check')
        self.assertEqual(0, status)
        self.assertEqual('∗ 1 1\n1 ∗ −\n− − ∗\nseparation: ok\n', out)
        self.assertEqual(1, run('eta', '--k', '2')[0])

    def test_verify(self):
        status, out, _ = run('verify', '--suite', 'eta')
        self.assertEqual(0, status)
        self.assertTrue(out.endswith('all checks passed\n'))
        self.assertEqual(1, run('verify', '--suite', 'nothing')[0])

    def test_version(self):
        with self.assertRaises(SystemExit), contextlib.redirect_stdout(io.StringIO()):
            main(['--version'])


if __name__ == '__main__':
    unittest.main()
