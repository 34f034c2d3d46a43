import os
import unittest
from unittest import mock

import pwh
from pwh import (ComplexError, InputError, SimplicialComplex, VertexId, boundary_simplex, face,
                 simplex)
from pwh.complex import vertex_range
from test_utils import FIGURE, MISSING_FACES, SAMPLES_DATA


class TestVertices(unittest.TestCase):
    def test_labels(self):
        for label, path in [('1', (1,)), ('1_2', (1, 2)), ('3_1_2', (3, 1, 2))]:
            with self.subTest(label=label):
                v = VertexId.parse(label)
                self.assertEqual(path, v.path)
                self.assertEqual(label, str(v))

    def test_order(self):
        labels = ['2', '1_2', '10', '1', '1_1']
        self.assertEqual(['1', '1_1', '1_2', '2', '10'],
                         [str(v) for v in sorted(VertexId.parse(s) for s in labels)])

    def test_bad_labels(self):
        for label in ['', '0', 'a', '1__2', '-1']:
            with self.subTest(label=label):
                with self.assertRaises(InputError):
                    VertexId.parse(label)


class TestComplex(unittest.TestCase):
    def test_minimal_missing_faces(self):
        for name, expected in MISSING_FACES.items():
            with self.subTest(sample_name=name):
                self.assertEqual(expected, list(SAMPLES_DATA[name].minimal_missing_faces()))

    def test_void_has_no_missing_faces(self):
        with self.assertRaises(ComplexError):
            SAMPLES_DATA['void'].minimal_missing_faces()

    def test_rebuilt_from_missing_faces(self):
        for name, k in SAMPLES_DATA.items():
            if k.is_void:
                continue
            with self.subTest(sample_name=name):
                rebuilt = SimplicialComplex.from_minimal_missing_faces(k.vertices, k.minimal_missing_faces())
                self.assertEqual(k, rebuilt)

    def test_void_and_empty(self):
        void, empty = SAMPLES_DATA['void'], SAMPLES_DATA['empty']
        self.assertTrue(void.is_void)
        self.assertFalse(void.is_empty)
        self.assertTrue(empty.is_empty)
        self.assertEqual(frozenset([frozenset()]), empty.faces)
        self.assertEqual(frozenset(), void.faces)
        self.assertIsNone(void.dim)
        self.assertEqual(-1, empty.dim)

    def test_ghosts(self):
        self.assertEqual(('3',), tuple(str(v) for v in SAMPLES_DATA['ghost'].ghosts))
        self.assertEqual((), FIGURE.ghosts)

    def test_f_vector(self):
        self.assertEqual((1, 4, 5), FIGURE.f_vector)
        self.assertEqual((1, 3, 3), boundary_simplex([1, 2, 3]).f_vector)

    def test_alexander_dual(self):
        dual = FIGURE.alexander_dual()
        self.assertEqual(SimplicialComplex([1, 2, 3, 4], [{1}, {2, 3}, {4}]), dual)
        self.assertEqual(FIGURE, dual.alexander_dual())

    def test_dual_of_simplex_is_void(self):
        full = simplex([1, 2, 3])
        self.assertTrue(full.alexander_dual().is_void)

    def test_void_has_no_dual(self):
        with self.assertRaises(ComplexError) as cm:
            SAMPLES_DATA['void'].alexander_dual()
        self.assertEqual('void-dual', cm.exception.code)
        with self.assertRaises(ComplexError):
            simplex([1, 2, 3]).alexander_dual().alexander_dual()

    def test_dual_of_boundary(self):
        # ∂Δ[V] and the ghost-only complex are dual to each other
        self.assertEqual(pwh.empty_complex([1, 2, 3]), boundary_simplex([1, 2, 3]).alexander_dual())

    def test_skeleton(self):
        self.assertEqual(SimplicialComplex([1, 2, 3, 4], [{1}, {2}, {3}, {4}]), FIGURE.skeleton(0))
        self.assertEqual(boundary_simplex([1, 2, 3]), simplex([1, 2, 3]).skeleton(1))
        self.assertEqual(FIGURE, FIGURE.skeleton(5))
        with self.assertRaises(ComplexError):
            FIGURE.skeleton(-2)

    def test_stray_vertex(self):
        with self.assertRaises(ComplexError) as cm:
            SimplicialComplex([1, 2], [{1, 3}])
        self.assertEqual('stray-vertex', cm.exception.code)

    def test_vertex_cap(self):
        with mock.patch.dict(os.environ, {'PWH_MAX_VERTICES': '3'}):
            with self.assertRaises(ComplexError) as cm:
                simplex(vertex_range(4))
            self.assertEqual('too-many-vertices', cm.exception.code)
            simplex(vertex_range(3))

    def test_bad_cap(self):
        with mock.patch.dict(os.environ, {'PWH_MAX_VERTICES': 'lots'}):
            with self.assertRaises(InputError):
                simplex([1])

    def test_contains(self):
        self.assertIn(face(2, 3), FIGURE)
        self.assertNotIn(face(1, 4), FIGURE)
        self.assertIn(boundary_simplex([2, 3, 4]), FIGURE)
        self.assertNotIn(simplex([2, 3, 4]), FIGURE)


class TestOperations(unittest.TestCase):
    def test_join(self):
        self.assertEqual(simplex([1, 2]), pwh.join(simplex([1]), simplex([2])))
        self.assertEqual(SimplicialComplex([1, 2, 3], [{1, 3}, {2, 3}]),
                         pwh.join(boundary_simplex([1, 2]), simplex([3])))

    def test_join_with_empty_and_void(self):
        k = boundary_simplex([1, 2])
        self.assertEqual(k.with_vertices([3]), pwh.join(k, pwh.empty_complex([3])))
        self.assertTrue(pwh.join(k, pwh.void_complex([3])).is_void)

    def test_join_overlap(self):
        with self.assertRaises(ComplexError) as cm:
            pwh.join(simplex([1, 2]), simplex([2, 3]))
        self.assertEqual('overlap', cm.exception.code)

    def test_union_and_intersection(self):
        a, b = simplex([1, 2]), simplex([2, 3])
        self.assertEqual(SimplicialComplex([1, 2, 3], [{1, 2}, {2, 3}]), pwh.union(a, b))
        self.assertEqual(simplex([2]), pwh.intersection(a, b))

    def test_full_subcomplex(self):
        self.assertEqual(boundary_simplex([1, 2, 3]),
                         pwh.full_subcomplex(FIGURE, [1, 2, 3]))
        self.assertTrue(pwh.is_full_subcomplex(FIGURE, simplex([1, 2])))
        self.assertFalse(pwh.is_full_subcomplex(FIGURE, boundary_simplex([1, 2])))
        self.assertFalse(pwh.is_full_subcomplex(FIGURE, simplex([4, 5])))

    def test_isomorphism(self):
        moved = FIGURE.relabel({VertexId((1,)): VertexId((7,))})
        witness = pwh.isomorphism(FIGURE, moved)
        self.assertIsNotNone(witness)
        self.assertEqual({frozenset(witness[v] for v in m) for m in FIGURE.maximal_faces},
                         set(moved.maximal_faces))

    def test_not_isomorphic(self):
        path = SimplicialComplex([1, 2, 3, 4], [{1, 2}, {2, 3}, {3, 4}])
        self.assertFalse(pwh.is_isomorphic(FIGURE, path))
        self.assertFalse(pwh.is_isomorphic(boundary_simplex([1, 2, 3]), simplex([1, 2, 3])))
        # same f-vector, different incidences
        star = SimplicialComplex([1, 2, 3, 4], [{1, 2}, {1, 3}, {1, 4}])
        self.assertFalse(pwh.is_isomorphic(star, path))

    def test_relabel_not_injective(self):
        with self.assertRaises(ComplexError):
            FIGURE.relabel({VertexId((1,)): VertexId((2,))})


if __name__ == '__main__':
    unittest.main()
