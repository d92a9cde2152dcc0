# Test Suite for square classes, Hilbert symbol and Weil index
# Exhaustive over the 16 class pairs for several residue fields

import unittest
import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from metaplectic_whittaker.arithmetic.field_arith import (
    TRIVIAL,
    U0,
    FieldConfig,
    Phase,
    SquareClassElement,
    eta,
    gamma_weil,
    hilbert,
    minus_one_class,
    square_classes,
    unit_character_value,
)
from metaplectic_whittaker.utils.errors import InvalidFieldConfig, InvalidInput

Q_VALUES = [3, 5, 7, 9]


class TestFieldConfig(unittest.TestCase):
    """Residue field validation"""

    def test_accepts_odd_prime_powers(self):
        """Odd primes and their powers are valid residue fields"""
        for q in [3, 5, 7, 9, 11, 25, 27, 49, 121]:
            self.assertEqual(FieldConfig(q).q, q)

    def test_rejects_bad_q(self):
        """Even, composite and too-small q are rejected"""
        for q in [1, 2, 4, 6, 15, 21, 45]:
            with self.assertRaises(InvalidFieldConfig):
                FieldConfig(q)

    def test_rejects_non_integer(self):
        """q must be an integer"""
        with self.assertRaises(InvalidFieldConfig):
            FieldConfig(3.0)

    def test_minus_one_class(self):
        """-1 is a square iff q = 1 mod 4"""
        self.assertEqual(minus_one_class(FieldConfig(3)), SquareClassElement.u0())
        self.assertEqual(minus_one_class(FieldConfig(5)), SquareClassElement.one())
        self.assertEqual(minus_one_class(FieldConfig(9)), SquareClassElement.one())
        self.assertEqual(FieldConfig(7).g_squared, -1)
        self.assertEqual(FieldConfig(13).g_squared, 1)


class TestSquareClassElement(unittest.TestCase):
    """Square-class tokens and the group law"""

    def test_parse_tokens(self):
        """All documented token forms parse"""
        self.assertEqual(SquareClassElement.parse('1'), SquareClassElement(0, TRIVIAL))
        self.assertEqual(SquareClassElement.parse('u0'), SquareClassElement(0, U0))
        self.assertEqual(SquareClassElement.parse('pi'), SquareClassElement(1, TRIVIAL))
        self.assertEqual(SquareClassElement.parse('piu0'), SquareClassElement(1, U0))
        self.assertEqual(SquareClassElement.parse('pi^3*u0'), SquareClassElement(3, U0))
        self.assertEqual(SquareClassElement.parse('u0*pi^-2'), SquareClassElement(-2, U0))

    def test_parse_rejects_garbage(self):
        """Unknown tokens raise InvalidInput"""
        for token in ['2', 'pi^x', 'u1', 'sqrt']:
            with self.assertRaises(InvalidInput):
                SquareClassElement.parse(token)

    def test_token_round_trip(self):
        """token() is parseable back"""
        for ord_ in range(-3, 4):
            for unit in (TRIVIAL, U0):
                element = SquareClassElement(ord_, unit)
                self.assertEqual(SquareClassElement.parse(element.token()), element)

    def test_group_law(self):
        """Valuations add and unit classes multiply"""
        piu0 = SquareClassElement(1, U0)
        self.assertEqual(piu0 * piu0, SquareClassElement(2, TRIVIAL))
        self.assertEqual(piu0 * piu0.inverse(), SquareClassElement.one())
        self.assertEqual(piu0 ** 3, SquareClassElement(3, U0))
        self.assertTrue((piu0 ** 2).is_square())
        self.assertFalse(SquareClassElement.u0().is_square())
        self.assertTrue(SquareClassElement(3, U0).same_class(piu0))

    def test_invalid_unit_class(self):
        """Only 0 and 1 are unit classes"""
        with self.assertRaises(InvalidInput):
            SquareClassElement(0, 2)


class TestHilbertSymbol(unittest.TestCase):
    """Tame Hilbert symbol"""

    def setUp(self):
        self.classes = square_classes()
        self.u0 = SquareClassElement.u0()
        self.pi = SquareClassElement.pi()

    def test_known_values(self):
        """(u0, pi) = -1 and (pi, pi) = (-1, pi)"""
        self.assertEqual(hilbert(self.u0, self.pi, FieldConfig(5)), -1)
        self.assertEqual(hilbert(self.u0, self.u0, FieldConfig(5)), 1)
        self.assertEqual(hilbert(self.pi, self.pi, FieldConfig(3)), -1)
        self.assertEqual(hilbert(self.pi, self.pi, FieldConfig(5)), 1)

    def test_symmetry(self):
        """(a, b) = (b, a) exhaustively"""
        for q in Q_VALUES:
            cfg = FieldConfig(q)
            for a in self.classes:
                for b in self.classes:
                    self.assertEqual(hilbert(a, b, cfg), hilbert(b, a, cfg))

    def test_bilinearity(self):
        """(ab, c) = (a, c)(b, c) exhaustively"""
        for q in Q_VALUES:
            cfg = FieldConfig(q)
            for a in self.classes:
                for b in self.classes:
                    for c in self.classes:
                        self.assertEqual(hilbert(a * b, c, cfg),
                                         hilbert(a, c, cfg) * hilbert(b, c, cfg))

    def test_nondegenerate(self):
        """Every non-square pairs to -1 with some class"""
        for q in Q_VALUES:
            cfg = FieldConfig(q)
            for a in self.classes[1:]:
                self.assertIn(-1, [hilbert(a, b, cfg) for b in self.classes])

    def test_a_minus_a(self):
        """(a, -a) = 1"""
        for q in Q_VALUES:
            cfg = FieldConfig(q)
            for a in self.classes:
                self.assertEqual(hilbert(a, minus_one_class(cfg) * a, cfg), 1)

    def test_depends_only_on_class(self):
        """Shifting valuations by even amounts changes nothing"""
        cfg = FieldConfig(7)
        for a in self.classes:
            for b in self.classes:
                shifted = a * SquareClassElement.pi(4)
                self.assertEqual(hilbert(shifted, b, cfg), hilbert(a, b, cfg))

    def test_eta_u0_is_parity_of_ord(self):
        """eta_u0(b) = (-1)^ord b"""
        cfg = FieldConfig(3)
        for ord_ in range(-3, 4):
            b = SquareClassElement(ord_, U0)
            self.assertEqual(eta(self.u0, b, cfg), -1 if ord_ % 2 else 1)

    def test_unit_characters(self):
        """Trivial and ramified characters of O*"""
        self.assertEqual(unit_character_value(U0, ramified=False), 1)
        self.assertEqual(unit_character_value(U0, ramified=True), -1)
        self.assertEqual(unit_character_value(TRIVIAL, ramified=True), 1)


class TestWeilIndex(unittest.TestCase):
    """gamma_psi and the phase group"""

    def test_values(self):
        """1, u0 -> 1; pi -> g; pi u0 -> -g"""
        cfg = FieldConfig(3)
        self.assertTrue(gamma_weil(SquareClassElement.one(), cfg).is_identity())
        self.assertTrue(gamma_weil(SquareClassElement.u0(), cfg).is_identity())
        self.assertEqual(gamma_weil(SquareClassElement.pi(), cfg), Phase.g(cfg))
        self.assertEqual(gamma_weil(SquareClassElement(1, U0), cfg), -Phase.g(cfg))

    def test_multiplicativity(self):
        """gamma(ab) = gamma(a) gamma(b) (a, b) exhaustively"""
        for q in Q_VALUES:
            cfg = FieldConfig(q)
            for a in square_classes():
                for b in square_classes():
                    self.assertEqual(gamma_weil(a * b, cfg),
                                     gamma_weil(a, cfg) * gamma_weil(b, cfg) * hilbert(a, b, cfg))

    def test_g_squared(self):
        """g^2 = (pi, pi)"""
        for q in Q_VALUES:
            cfg = FieldConfig(q)
            g = Phase.g(cfg)
            pi = SquareClassElement.pi()
            self.assertEqual(g * g, Phase.from_sign(hilbert(pi, pi, cfg), cfg))
            self.assertTrue((g ** 4).is_identity())
            self.assertTrue((g * g.inverse()).is_identity())

    def test_phase_parse(self):
        """Phase text round trip"""
        cfg = FieldConfig(5)
        for text in ['+1', '-1', '+g', '-g']:
            self.assertEqual(str(Phase.parse(text, cfg)), text)
        with self.assertRaises(InvalidInput):
            Phase.parse('2g', cfg)

    def test_mixed_fields_rejected(self):
        """Phases of different residue fields do not multiply"""
        with self.assertRaises(InvalidInput):
            Phase.g(FieldConfig(3)) * Phase.g(FieldConfig(5))


if __name__ == "__main__":
    unittest.main(verbosity=2)
