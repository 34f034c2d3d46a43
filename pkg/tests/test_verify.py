import os
import time
import unittest

from pwh import Partition, VerifyError, vertex
from pwh.verify import (ORDER, Budget, check_eta_separation, enumerate_complexes, enumerate_folds,
                        enumerate_partition_shapes, enumerate_partitions, eta_matrix,
                        fold_orbit_representatives, random_complex, random_fold, random_partition,
                        run_suite)
from pwh.complex import vertex_range
from test_utils import FIGURE

SMALL = Budget(max_vertices=3, samples=10, seed=7)

# seconds per suite at the default budget
TIME_LIMITS = {'identity': 10, 'pjoin': 20, 'fold-classify': 30}
DEFAULT_TIME_LIMIT = 60


class TestEta(unittest.TestCase):
    def test_small(self):
        self.assertEqual('∗ 1 1\n1 ∗ −\n− − ∗', eta_matrix(3).render())

    def test_drawn(self):
        eta = eta_matrix(8)
        self.assertEqual('1 1 − 1 ∗ − − −', ' '.join(eta.entries[4]))
        self.assertEqual('1', eta(5, 4))
        self.assertEqual('−', eta(5, 3))
        self.assertEqual('1 1 1 ∗ − − −', ' '.join(eta_matrix(7).entries[3]))

    def test_separation(self):
        for k in range(3, 13):
            with self.subTest(k=k):
                self.assertTrue(check_eta_separation(k))

    def test_too_small(self):
        with self.assertRaises(VerifyError):
            eta_matrix(2)


class TestGenerators(unittest.TestCase):
    def test_enumerate_complexes(self):
        # antichains of subsets, void and the ghost-only complex included
        self.assertEqual([2, 3, 6, 20, 168], [sum(1 for _ in enumerate_complexes(n)) for n in range(5)])

    def test_enumeration_cap(self):
        with self.assertRaises(VerifyError):
            next(enumerate_complexes(6))

    def test_enumerate_partitions(self):
        partitions = list(enumerate_partitions(4))
        self.assertEqual(7, len(partitions))
        self.assertTrue(all(p.k >= 3 for p in partitions))

    def test_enumerate_folds(self):
        self.assertEqual(2, len(list(enumerate_folds(vertex_range(2)))))
        self.assertEqual(9, len(list(enumerate_folds(vertex_range(3)))))

    def test_partition_shapes(self):
        # integer partitions of m with at least three parts
        self.assertEqual([1, 2, 4, 7, 11], [len(list(enumerate_partition_shapes(m))) for m in range(3, 8)])
        self.assertEqual(['1,2|3|4', '1|2|3|4'], [str(p) for p in enumerate_partition_shapes(4)])

    def test_fold_orbits_of_singletons(self):
        # i->j, and two vertices onto the third
        self.assertEqual(['2->1', '2->1;3->1'],
                         [str(f) for f in fold_orbit_representatives(Partition.singletons(3))])

    def test_fold_orbits_cover_every_fold_once(self):
        partition = Partition.parse('1|2,3|4')
        swap = {vertex(2): vertex(3), vertex(3): vertex(2)}
        reps = {frozenset(f.pairs) for f in fold_orbit_representatives(partition)}
        for fold in enumerate_folds(partition.vertices):
            key = frozenset(fold.pairs)
            image = frozenset((swap.get(i, i), swap.get(j, j)) for i, j in fold.pairs)
            with self.subTest(fold=str(fold)):
                self.assertEqual(1, len({key, image} & reps))

    def test_random_is_seeded(self):
        self.assertEqual(random_complex(4, 11), random_complex(4, 11))
        self.assertEqual(random_partition(6, 3, 5), random_partition(6, 3, 5))
        self.assertEqual(3, random_partition(6, 3, 5).k)
        self.assertEqual(random_fold(FIGURE, 3), random_fold(FIGURE, 3))
        self.assertEqual((), random_complex(4, 11, ghosts=False).ghosts)


class TestSuites(unittest.TestCase):
    def test_each_suite(self):
        for name in ORDER:
            with self.subTest(suite=name):
                report = run_suite(name, SMALL)
                self.assertTrue(report.ok, report.to_text())

    def test_unknown_suite(self):
        with self.assertRaises(VerifyError):
            run_suite('everything')

    def test_report(self):
        report = run_suite('eta', SMALL)
        self.assertTrue(report.to_text().endswith('all checks passed'))
        d = report.to_dict()
        self.assertTrue(d['ok'])
        self.assertEqual({'eta'}, {r['suite'] for r in d['results']})

    def test_default_budget(self):
        self.assertEqual(Budget(7, 200, 42), Budget())

    def test_fold_classify_on_six_vertices(self):
        start_time = time.time()
        report = run_suite('fold-classify', Budget(max_vertices=6, samples=20, seed=3))
        self.assertLess(time.time() - start_time, TIME_LIMITS['fold-classify'])
        self.assertTrue(report.ok, report.to_text())
        self.assertTrue(all(r.cases > 0 for r in report.results))


@unittest.skipUnless(os.environ.get('PWH_ACCEPTANCE') == '1', 'set PWH_ACCEPTANCE=1 to run')
class TestDefaultBudget(unittest.TestCase):
    def check(self, name):
        start_time = time.time()
        report = run_suite(name)
        elapsed = time.time() - start_time
        self.assertTrue(report.ok, report.to_text())
        self.assertLess(elapsed, TIME_LIMITS.get(name, DEFAULT_TIME_LIMIT))

    def test_mf(self):
        self.check('mf')

    def test_dual(self):
        self.check('dual')

    def test_pjoin(self):
        self.check('pjoin')

    def test_folds(self):
        self.check('folds')

    def test_lpsi(self):
        self.check('lpsi')

    def test_identity(self):
        self.check('identity')

    def test_fold_classify(self):
        self.check('fold-classify')

    def test_eta(self):
        self.check('eta')

    def test_signs(self):
        self.check('signs')

    def test_relations(self):
        self.check('relations')


if __name__ == '__main__':
    unittest.main()
