# Test Suite for the span of the k-functions and central characters

import unittest
import sys
import os
from fractions import Fraction

import numpy as np

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from metaplectic_whittaker.arithmetic.exact_scalars import GaussianRational
from metaplectic_whittaker.arithmetic.field_arith import FieldConfig
from metaplectic_whittaker.representations.characters import UnramifiedData
from metaplectic_whittaker.representations.spanning import (
    central_equivariance_check,
    default_probes,
    dominant_orders,
    equivariance_probes,
    evaluation_matrix,
    functions_coincide,
    rank_of_matrix,
    rank_of_span,
)
from metaplectic_whittaker.representations.whittaker import spanning_set
from metaplectic_whittaker.utils.errors import UnsupportedRank

A = GaussianRational(Fraction(3, 5), Fraction(4, 5))


class TestProbes(unittest.TestCase):
    """Probe sets on the torus cover"""

    def test_dominant_orders(self):
        """Non-decreasing tuples with bounded sum"""
        self.assertEqual(dominant_orders(1, 2), [(0,), (1,), (2,)])
        self.assertEqual(dominant_orders(2, 2), [(0, 0), (0, 1), (0, 2), (1, 1)])
        self.assertEqual(dominant_orders(3, 0), [(0, 0, 0)])

    def test_probe_counts(self):
        """Both parities and both unit classes for every k"""
        cfg = FieldConfig(3)
        self.assertEqual(len(default_probes(2, cfg, k_budget=2)), 4 * 4)
        self.assertEqual(len(equivariance_probes(1, 0, cfg, k_budget=2)), 3 * 8)
        self.assertTrue(all(h.n == 2 for h in default_probes(2, cfg, k_budget=1)))


class TestSpanRank(unittest.TestCase):
    """dim span of the four k-functions"""

    def setUp(self):
        self.cfg = FieldConfig(3)
        self.probes = default_probes(2, self.cfg, k_budget=3)

    def test_generic_data_full_rank(self):
        """Generic alpha: the four functions are independent"""
        self.assertEqual(rank_of_span(UnramifiedData(2, (2, 3), 1), self.probes, self.cfg), 4)

    def test_paired_data_rank_two(self):
        """(a, -a): plus and minus pairs coincide"""
        for a in (GaussianRational(0, 1), A):
            d = UnramifiedData(2, (a, -a), 1)
            self.assertEqual(rank_of_span(d, self.probes, self.cfg), 2)
            functions = spanning_set(d)
            self.assertTrue(functions_coincide(functions[0], functions[2], self.probes, self.cfg))
            self.assertTrue(functions_coincide(functions[1], functions[3], self.probes, self.cfg))
            self.assertFalse(functions_coincide(functions[0], functions[1], self.probes, self.cfg))

    def test_rank_agrees_with_r_omega(self):
        """rank = 4 / |R(omega)| on unitary examples"""
        cases = [((GaussianRational(0, 1), 2), 4), ((A, -A), 2), ((GaussianRational(0, 1), A), 4)]
        for alpha, expected in cases:
            d = UnramifiedData(2, alpha, 1)
            self.assertEqual(rank_of_span(d, self.probes, self.cfg), expected, str(alpha))

    def test_evaluation_matrix_shape(self):
        """One row per k-function, one column per probe"""
        d = UnramifiedData(1, (2,), 1)
        probes = default_probes(1, self.cfg, k_budget=2)
        matrix = evaluation_matrix(d, probes, self.cfg)
        self.assertEqual(matrix.shape, (4, len(probes)))

    def test_empty_matrix(self):
        """No probes, rank 0"""
        self.assertEqual(rank_of_matrix(np.empty((4, 0), dtype=object)), 0)
        self.assertEqual(rank_of_span(UnramifiedData(1, (2,), 1), [], self.cfg), 0)


class TestCentralEquivariance(unittest.TestCase):
    """Measured central characters against the closed form"""

    def test_rank_one(self):
        """Four distinct characters, constant in h"""
        d = UnramifiedData(1, (2,), 3)
        report = central_equivariance_check(d, FieldConfig(3), k_budget=3, min_probes=10)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(len(report.characters), 4)

    def test_too_few_probes(self):
        """A starved probe set is reported, not passed"""
        d = UnramifiedData(1, (2,), 3)
        report = central_equivariance_check(d, FieldConfig(5), k_budget=0, min_probes=50)
        self.assertFalse(report.passed)
        self.assertTrue(report.failures)

    def test_even_rank_unsupported(self):
        """n even raises UnsupportedRank"""
        with self.assertRaises(UnsupportedRank):
            central_equivariance_check(UnramifiedData(2, (2, 3), 1), FieldConfig(3))


if __name__ == "__main__":
    unittest.main(verbosity=2)
