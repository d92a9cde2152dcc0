# Test Suite for the metaplectic torus: cocycle, centrality and normal form

import unittest
import sys
import os
import random
from itertools import product

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from metaplectic_whittaker.arithmetic.field_arith import TRIVIAL, U0, FieldConfig, SquareClassElement
from metaplectic_whittaker.groups.metaplectic_torus import (
    CentralScope,
    CoverTorusElement,
    TorusElement,
    cocycle,
    commutes,
    conjugate,
    conjugate_by_iota,
    enumerate_square_class_torus,
    inverse,
    is_central,
    is_central_brute_force,
    mul,
    mul_all,
    normal_form,
    normal_form_with_b,
    scalar_conjugation_sign,
)
from metaplectic_whittaker.utils.errors import DimensionMismatch, InvalidInput


def random_class(rng, spread=3):
    return SquareClassElement(rng.randint(-spread, spread), rng.randint(0, 1))


def random_torus(rng, n):
    return TorusElement(tuple(random_class(rng) for _ in range(n)), random_class(rng))


class TestTorusElement(unittest.TestCase):
    """Square-class torus elements"""

    def test_constructors(self):
        """scalar, iota and from_orders"""
        u0 = SquareClassElement.u0()
        self.assertEqual(TorusElement.scalar(u0, 2), TorusElement((u0, u0), SquareClassElement()))
        self.assertEqual(TorusElement.iota(u0, 2).y, u0)
        self.assertEqual(TorusElement.from_orders((1, 3)).orders(), (1, 3))
        self.assertEqual(TorusElement.scalar(SquareClassElement.pi(), 3).scalar_value(),
                         SquareClassElement.pi())
        self.assertIsNone(TorusElement.from_orders((0, 1)).scalar_value())

    def test_str_lists_diagonal_in_reverse(self):
        """entries are (a_1, ..., a_n); the diagonal reads a_n first"""
        g = TorusElement((SquareClassElement.one(), SquareClassElement.pi()), SquareClassElement.u0())
        self.assertEqual(str(g), "[diag(pi, 1), u0]")

    def test_validation(self):
        """Empty tori, bad signs and rank mismatches are rejected"""
        with self.assertRaises(InvalidInput):
            TorusElement((), SquareClassElement())
        with self.assertRaises(InvalidInput):
            CoverTorusElement(TorusElement.identity(1), 0)
        with self.assertRaises(DimensionMismatch):
            TorusElement.identity(1) * TorusElement.identity(2)


class TestCocycle(unittest.TestCase):
    """Cover multiplication"""

    def setUp(self):
        self.rng = random.Random(11)

    def test_cocycle_identity_exhaustive_rank_one(self):
        """c(g1, g2) c(g1 g2, g3) = c(g2, g3) c(g1, g2 g3) over all class triples"""
        elements = list(enumerate_square_class_torus(1))
        for q in (3, 5):
            cfg = FieldConfig(q)
            for g1, g2, g3 in product(elements, repeat=3):
                self.assertEqual(cocycle(g1, g2, cfg) * cocycle(g1 * g2, g3, cfg),
                                 cocycle(g2, g3, cfg) * cocycle(g1, g2 * g3, cfg))

    def test_associativity_random(self):
        """(h1 h2) h3 = h1 (h2 h3) for random rank-3 elements"""
        cfg = FieldConfig(7)
        for _ in range(300):
            h1, h2, h3 = (CoverTorusElement(random_torus(self.rng, 3), self.rng.choice([1, -1]))
                          for _ in range(3))
            self.assertEqual(mul(mul(h1, h2, cfg), h3, cfg), mul(h1, mul(h2, h3, cfg), cfg))
            self.assertEqual(mul_all([h1, h2, h3], cfg), mul(mul(h1, h2, cfg), h3, cfg))

    def test_identity_and_inverse(self):
        """(I, 1) is neutral and inverse() inverts"""
        cfg = FieldConfig(3)
        for _ in range(100):
            h = CoverTorusElement(random_torus(self.rng, 2), self.rng.choice([1, -1]))
            identity = CoverTorusElement.identity(2)
            self.assertEqual(mul(identity, h, cfg), h)
            self.assertEqual(mul(h, identity, cfg), h)
            self.assertEqual(mul(h, inverse(h, cfg), cfg), identity)
            self.assertEqual(mul(inverse(h, cfg), h, cfg), identity)

    def test_scalar_conjugation(self):
        """Closed-form sign for conjugation by and of scalars"""
        cfg = FieldConfig(3)
        for _ in range(200):
            g = random_torus(self.rng, 3)
            a = random_class(self.rng)
            h = CoverTorusElement(g, self.rng.choice([1, -1]))
            z = CoverTorusElement(TorusElement.scalar(a, 3), self.rng.choice([1, -1]))
            sign = scalar_conjugation_sign(g, a, cfg)
            self.assertEqual(conjugate(h, z, cfg), h.with_eps(h.eps * sign))
            self.assertEqual(conjugate(z, h, cfg), z.with_eps(z.eps * sign))

    def test_conjugate_by_iota(self):
        """Special case of conjugate"""
        cfg = FieldConfig(5)
        h = CoverTorusElement(random_torus(self.rng, 2), -1)
        c = SquareClassElement(1, U0)
        expected = conjugate(h, CoverTorusElement(TorusElement.iota(c, 2)), cfg)
        self.assertEqual(conjugate_by_iota(h, c, cfg), expected)


class TestCentrality(unittest.TestCase):
    """Closed forms against brute-force commutation"""

    def test_torus_centre_matches_brute_force(self):
        """Centre of the torus cover: y and det t are squares"""
        for q in (3, 5):
            cfg = FieldConfig(q)
            for n in (1, 2):
                for g in enumerate_square_class_torus(n):
                    h = CoverTorusElement(g)
                    self.assertEqual(is_central(h, CentralScope.COVER_TORUS, cfg),
                                     is_central_brute_force(h, cfg), str(g))

    def test_sp_torus_cover_is_abelian(self):
        """Elements with y = 1 commute pairwise"""
        cfg = FieldConfig(3)
        elements = list(enumerate_square_class_torus(2, similitude_free=False))
        for g1 in elements:
            for g2 in elements:
                self.assertTrue(commutes(CoverTorusElement(g1), CoverTorusElement(g2), cfg))

    def test_square_similitude_centralises_sp_torus(self):
        """y in F*^2 commutes with every y = 1 element"""
        cfg = FieldConfig(7)
        sp_elements = list(enumerate_square_class_torus(2, similitude_free=False))
        for g in enumerate_square_class_torus(2):
            if not g.y.is_square():
                continue
            for s in sp_elements:
                self.assertTrue(commutes(CoverTorusElement(g), CoverTorusElement(s), cfg))

    def test_group_centre(self):
        """Scalars: any a for n even, squares only for n odd"""
        cfg = FieldConfig(3)
        u0_scalar_even = CoverTorusElement(TorusElement.scalar(SquareClassElement.u0(), 2))
        u0_scalar_odd = CoverTorusElement(TorusElement.scalar(SquareClassElement.u0(), 1))
        pi2_scalar_odd = CoverTorusElement(TorusElement.scalar(SquareClassElement.pi(2), 3))
        self.assertTrue(is_central(u0_scalar_even, CentralScope.COVER_GSP, cfg))
        self.assertFalse(is_central(u0_scalar_odd, CentralScope.COVER_GSP, cfg))
        self.assertTrue(is_central(pi2_scalar_odd, CentralScope.COVER_GSP, cfg))
        self.assertTrue(is_central(u0_scalar_odd, CentralScope.COVER_GSP_PLUS, cfg))
        self.assertFalse(is_central(CoverTorusElement(TorusElement.from_orders((0, 1))),
                                    CentralScope.COVER_GSP_PLUS, cfg))

    def test_central_sign(self):
        """(I, -1) is central in every scope"""
        cfg = FieldConfig(5)
        h = CoverTorusElement.central_sign(3)
        for scope in CentralScope:
            self.assertTrue(is_central(h, scope, cfg))
        self.assertTrue(is_central_brute_force(h, cfg))


class TestNormalForm(unittest.TestCase):
    """h = (i(pi^-m), 1)(bI, 1)([t, 1], 1)(i(u), eps)"""

    def setUp(self):
        self.rng = random.Random(5)

    def test_recompose_exhaustive(self):
        """Recomposition reproduces h for every class element and both signs"""
        for q in (3, 5):
            cfg = FieldConfig(q)
            for n in (1, 2):
                for g in enumerate_square_class_torus(n):
                    for eps in (1, -1):
                        h = CoverTorusElement(g, eps)
                        nf = normal_form(h, cfg)
                        self.assertEqual(nf.recompose(cfg), h)
                        self.assertIn(nf.m, (0, 1))
                        self.assertEqual(nf.b.unit_class, TRIVIAL)
                        self.assertTrue(nf.u.is_unit())

    def test_recompose_random_valuations(self):
        """Larger valuations, both choices of the unit class of b"""
        cfg = FieldConfig(7)
        for _ in range(200):
            h = CoverTorusElement(random_torus(self.rng, 3), self.rng.choice([1, -1]))
            for b_unit in (TRIVIAL, U0):
                nf = normal_form_with_b(h, b_unit, cfg)
                self.assertEqual(nf.recompose(cfg), h)
                self.assertEqual(2 * nf.l - nf.m, h.base.y.ord)

    def test_orders(self):
        """k = ord(t) after dividing out b"""
        cfg = FieldConfig(3)
        y = SquareClassElement(3, U0)
        h = CoverTorusElement(TorusElement(tuple(SquareClassElement(k) for k in (2, 4, 5)), y))
        nf = normal_form(h, cfg)
        self.assertEqual((nf.m, nf.l), (1, 2))
        self.assertEqual(nf.k, (0, 2, 3))
        self.assertEqual(nf.u, SquareClassElement.u0())


if __name__ == "__main__":
    unittest.main(verbosity=2)
