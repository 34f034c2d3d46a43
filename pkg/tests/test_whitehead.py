import unittest

from pwh import (ExprError, Fold, Folded, Hw, MapLeaf, Mode, Permutation, SimplicialComplex, SpaceRef,
                 Status, Sum, boundary_simplex, face, koszul_sign, render, simplex, triviality, vertex)
from pwh.whitehead import (check_fold_space, codomain_complex, degree, domain, expand_linear,
                          normalize_spherical)
from test_utils import FIGURE

H = SpaceRef('Y', is_h_space=True, is_associative=True)
THREE_POINTS = SimplicialComplex([1, 2, 3], [{1}, {2}, {3}])


def leaf(n, p=2, space=H, **kwargs):
    return MapLeaf(f'f{n}', sphere_dim=p, codomain=space, **kwargs)


def nested(ambient, space=H):
    """hw^K(hw(f1, f4), f2, f3), the middle summand over the complex of 1|2,3|4."""
    return Hw((Hw((leaf(1, space=space), leaf(4, space=space))), leaf(2, space=space),
               leaf(3, space=space)), ambient)


class TestLeaves(unittest.TestCase):
    def test_vertex_from_name(self):
        self.assertEqual('4', str(MapLeaf('f4').vertex))
        self.assertEqual('1_2', str(MapLeaf('g1_2').vertex))
        self.assertEqual('7', str(MapLeaf('g', vertex=7).vertex))

    def test_bad_leaves(self):
        for kwargs in [dict(name='g'), dict(name='f1', sphere_dim=0),
                       dict(name='f1', sphere_dim=3, domain_is_suspension=False)]:
            with self.subTest(**kwargs):
                with self.assertRaises(ExprError):
                    MapLeaf(**kwargs)

    def test_suspension_from_sphere(self):
        self.assertTrue(leaf(1, p=2).domain_is_suspension)
        self.assertFalse(leaf(1, p=1).domain_is_suspension)

    def test_space(self):
        with self.assertRaises(ExprError):
            SpaceRef('Y', is_associative=True)

    def test_sum_needs_one_cell(self):
        with self.assertRaises(ExprError):
            Sum((leaf(1), leaf(2)))
        self.assertEqual(2, len(Sum((leaf(1), MapLeaf('g1', sphere_dim=2))).terms))


class TestHw(unittest.TestCase):
    def test_shape(self):
        self.assertEqual(boundary_simplex([1, 2, 3]), Hw((leaf(1), leaf(2), leaf(3))).shape)
        inner = Hw((leaf(2), leaf(3)))
        self.assertEqual(THREE_POINTS, Hw((inner, leaf(1))).shape)

    def test_bad_maps(self):
        with self.assertRaises(ExprError):
            Hw((leaf(1),))
        with self.assertRaises(ExprError) as cm:
            Hw((leaf(1), leaf(1)))
        self.assertEqual('overlap', cm.exception.code)
        with self.assertRaises(ExprError) as cm:
            Hw((leaf(1), leaf(2), leaf(3)), THREE_POINTS)
        self.assertEqual('ambient-too-small', cm.exception.code)

    def test_domain_and_degree(self):
        e = Hw((Hw((leaf(2), leaf(3, p=3))), leaf(1)))
        self.assertEqual(5, degree(e))
        self.assertEqual(('f2', 'f3', 'f1'), domain(e).smash_factors)
        self.assertIsNone(degree(Hw((MapLeaf('f1', domain_is_suspension=True), leaf(2)))))

    def test_render(self):
        e = Hw((Hw((leaf(2), leaf(3))), leaf(1)), THREE_POINTS)
        self.assertEqual('hw^{K}(hw(f2,f3),f1)', render(e))
        self.assertEqual('nabla[4->1]hw^{K}(hw(f1,f4),f2,f3)', render(Folded(nested(FIGURE), Fold.parse('4->1'))))


class TestSigns(unittest.TestCase):
    def test_koszul(self):
        self.assertEqual(-1, koszul_sign(Permutation((2, 1)), (1, 1)))
        self.assertEqual(1, koszul_sign(Permutation((2, 1)), (2, 3)))
        self.assertEqual(-1, koszul_sign(Permutation((3, 1, 2)), (2, 3, 3)))
        with self.assertRaises(ExprError):
            koszul_sign(Permutation((2, 1)), (1, 1, 1))

    def test_permutation(self):
        self.assertEqual(-1, Permutation((2, 1, 3)).sign)
        self.assertEqual(['b', 'c', 'a'], Permutation((2, 3, 1)).apply(['a', 'b', 'c']))
        with self.assertRaises(ExprError):
            Permutation((1, 1))

    def test_normalize(self):
        e, sign = normalize_spherical(Hw((leaf(2, p=3), leaf(1, p=3))))
        self.assertEqual('hw(f1,f2)', render(e))
        self.assertEqual(-1, sign)
        e, sign = normalize_spherical(Hw((leaf(2, p=3), leaf(1, p=2))))
        self.assertEqual(1, sign)
        with self.assertRaises(ExprError):
            normalize_spherical(Hw((MapLeaf('f2', domain_is_suspension=True), leaf(1))))

    def test_expand_linear(self):
        e = Hw((Sum((leaf(1), MapLeaf('g1', sphere_dim=2))), leaf(2)))
        self.assertEqual(['hw(f1,f2)', 'hw(g1,f2)'], [render(t) for t in expand_linear(e)])
        with self.assertRaises(ExprError):
            expand_linear(Hw((leaf(1), leaf(2))))
        with self.assertRaises(ExprError):
            expand_linear(Hw((Sum((leaf(1, p=1), MapLeaf('g1', sphere_dim=1))), leaf(2))))


class TestTriviality(unittest.TestCase):
    def test_null_leaf(self):
        e = Hw((leaf(1, is_null=True), leaf(2)))
        self.assertEqual(Status.TRIVIAL, triviality(e).status)
        self.assertEqual('R1', triviality(e).rule)

    def test_full_simplex(self):
        e = Hw((leaf(1), leaf(2), leaf(3)), simplex([1, 2, 3]))
        self.assertEqual('R2', triviality(e).rule)
        self.assertEqual(Status.UNKNOWN, triviality(Hw((leaf(1), leaf(2), leaf(3)))).status)

    def test_filled_slot(self):
        inner = Hw((leaf(2), leaf(3)))
        e = Hw((inner, leaf(1)), SimplicialComplex([1, 2, 3], [{2, 3}, {1}]))
        self.assertEqual('R3', triviality(e).rule)
        e = Hw((inner, leaf(1)), simplex([1, 2, 3]))
        self.assertEqual('R2', triviality(e).rule)

    def test_dj(self):
        e = Hw((Hw((leaf(2), leaf(3))), leaf(1)), THREE_POINTS)
        self.assertEqual(Status.UNKNOWN, triviality(e).status)
        verdict = triviality(e, Mode.DJ)
        self.assertEqual(Status.NONTRIVIAL, verdict.status)
        self.assertEqual('R5', verdict.rule)
        self.assertEqual([['1', '2'], ['1', '3']], verdict.to_dict()['certificate'])
        e = Hw((Hw((leaf(2), leaf(3))), leaf(1, p=3)), THREE_POINTS)
        self.assertEqual(Status.UNKNOWN, triviality(e, Mode.DJ).status)

    def test_folded(self):
        e = Folded(nested(FIGURE), Fold.parse('4->1'))
        self.assertEqual(boundary_simplex([1, 2, 3]), codomain_complex(e))
        verdict = triviality(e)
        self.assertEqual(Status.TRIVIAL, verdict.status)
        self.assertEqual('R4b', verdict.rule)

    def test_single_map(self):
        with self.assertRaises(ExprError):
            triviality(leaf(1))

    def test_fold_needs_h_space(self):
        with self.assertRaises(ExprError) as cm:
            Folded(nested(FIGURE, SpaceRef('Y')), Fold.parse('3->2'))
        self.assertEqual('h-space', cm.exception.code)
        Folded(nested(FIGURE, SpaceRef('Y', is_h_space=True)), Fold.parse('3->2'))
        # 1 and 4 span no edge, so no multiplication is needed
        Folded(nested(FIGURE, SpaceRef('Y')), Fold.parse('4->1'))

    def test_fibre_size_decides_associativity(self):
        magma = SpaceRef('M', is_h_space=True)
        check_fold_space(magma, simplex([1, 2, 3]), vertex(1), face(2))
        with self.assertRaises(ExprError) as cm:
            check_fold_space(magma, simplex([1, 2, 3]), vertex(1), face(2, 3))
        self.assertEqual('h-space', cm.exception.code)
        check_fold_space(H, simplex([1, 2, 3]), vertex(1), face(2, 3))
        with self.assertRaises(ExprError):
            check_fold_space(SpaceRef('Y'), simplex([1, 2]), vertex(1), face(2))


if __name__ == '__main__':
    unittest.main()
