# Test Suite for unramified data, R(omega) and classification

import unittest
import sys
import os
import random
from fractions import Fraction

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from metaplectic_whittaker.arithmetic.exact_scalars import GaussianRational, PhasedScalar, SurdScalar
from metaplectic_whittaker.arithmetic.field_arith import U0, FieldConfig, Phase, SquareClassElement
from metaplectic_whittaker.groups.laurent import LaurentPoly
from metaplectic_whittaker.groups.metaplectic_torus import CoverTorusElement, TorusElement
from metaplectic_whittaker.groups.signed_permutations import hyperoctahedral_group
from metaplectic_whittaker.groups.weyl_laurent import act
from metaplectic_whittaker.representations.characters import (
    Branch,
    Eta,
    ExtensionLabel,
    UnramifiedData,
    Verdict,
    canonical_alpha,
    central_character,
    chi_psi_eval,
    classify,
    extension_set,
    is_unitary,
    quadratic_twist,
    r_omega,
    weyl_act_alpha,
)
from metaplectic_whittaker.representations.intertwining import (
    intertwining_eigenvalue,
    l_ratio,
    l_ratio_eigenvalues,
    local_l_factor,
)
from metaplectic_whittaker.utils.errors import (
    DimensionMismatch,
    InvalidInput,
    TwistNotUnramified,
    UnsupportedRank,
)

I = GaussianRational(0, 1)
A = GaussianRational(Fraction(3, 5), Fraction(4, 5))


def random_scalar(rng):
    while True:
        value = GaussianRational(Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                                 rng.choice([0, 0, 1, -1]))
        if not value.is_zero():
            return value


class TestUnramifiedData(unittest.TestCase):
    """Construction and twists"""

    def test_coercion(self):
        """Strings and ints are coerced to Gaussian rationals"""
        d = UnramifiedData(2, ('i', '-i'), 1, 'minus', 'pi')
        self.assertEqual(d.alpha, (I, -I))
        self.assertEqual(d.beta, GaussianRational(1))
        self.assertEqual(d.branch, Branch.MINUS)
        self.assertEqual(d.eta, Eta.ETA_PI)

    def test_validation(self):
        """Length, zero entries and zero beta are rejected"""
        with self.assertRaises(DimensionMismatch):
            UnramifiedData(2, (1,), 1)
        with self.assertRaises(InvalidInput):
            UnramifiedData(1, (0,), 1)
        with self.assertRaises(InvalidInput):
            UnramifiedData(1, (2,), 0)
        with self.assertRaises(ValueError):
            UnramifiedData(1, (2,), 1, branch='sideways')

    def test_enum_helpers(self):
        """Branch parity and eta values"""
        self.assertEqual((Branch.PLUS.m, Branch.MINUS.m), (0, 1))
        self.assertEqual(Eta.ETA_1(U0), 1)
        self.assertEqual(Eta.ETA_PI(U0), -1)

    def test_quadratic_twist(self):
        """u0 twist negates alpha and multiplies beta by (-1)^n"""
        for n, sign in ((1, -1), (2, 1), (3, -1)):
            d = UnramifiedData(n, tuple(range(2, n + 2)), 5)
            twisted = quadratic_twist(d, SquareClassElement.u0())
            self.assertEqual(twisted.alpha, tuple(-a for a in d.alpha))
            self.assertEqual(twisted.beta, d.beta * sign)
            self.assertEqual(quadratic_twist(d, SquareClassElement.pi(2)), d)

    def test_ramified_twist_rejected(self):
        """Classes with odd valuation leave the unramified family"""
        d = UnramifiedData(1, (2,), 1)
        with self.assertRaises(TwistNotUnramified):
            quadratic_twist(d, SquareClassElement.pi())

    def test_extension_set(self):
        """Four labels, plus labels first"""
        d = UnramifiedData(2, ('i', 2), 3)
        labels = extension_set(d)
        self.assertEqual(len(labels), 4)
        self.assertEqual([label.sign for label in labels],
                         [Branch.PLUS, Branch.MINUS, Branch.PLUS, Branch.MINUS])
        self.assertEqual(str(labels[0]), "(i, 2; 3)^+")
        self.assertEqual(str(labels[3]), "(-i, -2; 3)^-")
        self.assertEqual(d.label(), labels[0])


class TestWeylActionOnAlpha(unittest.TestCase):
    """W acting on Satake parameters"""

    def setUp(self):
        self.alpha = (GaussianRational(2), GaussianRational(Fraction(1, 3)), I)

    def test_compatible_with_action_on_monomials(self):
        """p(alpha) = (w . p)(w . alpha)"""
        p = LaurentPoly.monomial((1, -2, 3)) + LaurentPoly.monomial((0, 1, 1), coeff=2)
        for w in hyperoctahedral_group(3):
            moved = weyl_act_alpha(w, self.alpha)
            self.assertEqual(act(w, p).evaluate(moved, 3), p.evaluate(self.alpha, 3))

    def test_composition(self):
        """(w1 w2) . alpha = w1 . (w2 . alpha)"""
        group = hyperoctahedral_group(3)
        for w1 in group[::6]:
            for w2 in group[::11]:
                self.assertEqual(weyl_act_alpha(w1 * w2, self.alpha),
                                 weyl_act_alpha(w1, weyl_act_alpha(w2, self.alpha)))

    def test_canonical_alpha_is_orbit_invariant(self):
        """Every element of the orbit has the same representative"""
        expected = canonical_alpha(self.alpha)
        for w in hyperoctahedral_group(3):
            self.assertEqual(canonical_alpha(weyl_act_alpha(w, self.alpha)), expected)
        label = ExtensionLabel(self.alpha, GaussianRational(1), Branch.PLUS)
        swapped = ExtensionLabel(tuple(reversed(self.alpha)), GaussianRational(1), Branch.PLUS)
        self.assertEqual(label.canonical(), swapped.canonical())

    def test_dimension_mismatch(self):
        """Rank of W must match alpha"""
        with self.assertRaises(DimensionMismatch):
            weyl_act_alpha(hyperoctahedral_group(2)[0], self.alpha)


class TestROmega(unittest.TestCase):
    """R(omega) by search and by the pairing criterion"""

    def test_known_cases(self):
        """Pairs (a, -a) give order 2, generic data order 1"""
        cases = [
            ((I, -I), 2),
            ((I, I), 2),
            ((A, -A), 2),
            ((2, Fraction(-1, 2)), 2),
            ((2, 3), 1),
            ((I, 2), 1),
            ((I, -I, 2, -2), 2),
            ((I, -I, 2, 3), 1),
        ]
        for alpha, expected in cases:
            d = UnramifiedData(len(alpha), alpha, 1)
            self.assertEqual(len(r_omega(d)), expected, str(alpha))

    def test_odd_rank_trivial(self):
        """R(omega) is trivial for n odd"""
        for alpha in [(I,), (I, -I, 1), (A, -A, I)]:
            self.assertEqual(len(r_omega(UnramifiedData(len(alpha), alpha, 1))), 1)

    def test_search_equals_criterion_random(self):
        """Both methods agree on random data, including paired entries"""
        rng = random.Random(3)
        for _ in range(60):
            n = rng.choice([1, 2, 3, 4])
            alpha = [random_scalar(rng) for _ in range(n)]
            if n % 2 == 0 and rng.random() < 0.5:
                alpha[1] = -alpha[0] if rng.random() < 0.5 else -alpha[0].inverse()
            d = UnramifiedData(n, tuple(alpha), random_scalar(rng))
            self.assertEqual(r_omega(d, method='brute_force'), r_omega(d, method='criterion'))


class TestClassification(unittest.TestCase):
    """Verdicts and eigenvalues"""

    def setUp(self):
        self.cfg = FieldConfig(3)

    def test_verdicts(self):
        """Unitary data are classified, others are Unknown"""
        result = classify(UnramifiedData(2, ('i', '-i'), 1))
        self.assertEqual(result.verdict, Verdict.TWO_GENERIC_SUMMANDS)
        self.assertEqual(result.r_omega_order, 2)
        self.assertTrue(result.unitary)
        self.assertEqual(classify(UnramifiedData(2, (I, A), 1)).verdict, Verdict.IRREDUCIBLE)
        self.assertEqual(classify(UnramifiedData(1, (I,), 1)).verdict, Verdict.IRREDUCIBLE)
        self.assertEqual(classify(UnramifiedData(2, (2, Fraction(-1, 2)), 1)).verdict,
                         Verdict.UNKNOWN)

    def test_is_unitary(self):
        """|alpha_i|^2 = 1 exactly"""
        self.assertTrue(is_unitary(UnramifiedData(2, (A, -I), 1)))
        self.assertFalse(is_unitary(UnramifiedData(2, (A, 2), 1)))

    def test_l_factors(self):
        """L(eta_u0, 0) = 1/2 and L(eta_u0, 1) = q/(q+1)"""
        self.assertEqual(local_l_factor(-1, 0, 3), Fraction(1, 2))
        self.assertEqual(local_l_factor(-1, 1, 3), Fraction(3, 4))
        self.assertEqual(local_l_factor(1, 1, 5), Fraction(5, 4))
        self.assertEqual(l_ratio(self.cfg), Fraction(2, 3))

    def test_eigenvalues(self):
        """+-(1 + 1/q)/2 for n = 2, squared for n = 4"""
        self.assertEqual(l_ratio_eigenvalues(2, self.cfg), (Fraction(2, 3), Fraction(-2, 3)))
        self.assertEqual(l_ratio_eigenvalues(4, FieldConfig(5)), (Fraction(9, 25), Fraction(-9, 25)))
        self.assertEqual(intertwining_eigenvalue(2, Eta.ETA_PI, self.cfg), Fraction(-2, 3))

    def test_eigenvalues_need_even_rank(self):
        """Odd n raises UnsupportedRank"""
        with self.assertRaises(UnsupportedRank):
            l_ratio_eigenvalues(3, self.cfg)


class TestTorusCharacters(unittest.TestCase):
    """chi_psi and central characters"""

    def setUp(self):
        self.cfg = FieldConfig(3)

    def test_chi_psi_eval(self):
        """eps * alpha^k * gamma(det t) on the Sp torus"""
        d = UnramifiedData(2, (2, 3), 1)
        ct = CoverTorusElement(TorusElement.from_orders((1, 2)), -1)
        expected = PhasedScalar(Phase.g(self.cfg), SurdScalar(-18, 0, 3))
        self.assertEqual(chi_psi_eval(d, ct, self.cfg), expected)

    def test_chi_psi_needs_sp_torus(self):
        """Elements with nontrivial similitude are rejected"""
        d = UnramifiedData(1, (2,), 1)
        ct = CoverTorusElement(TorusElement.iota(SquareClassElement.pi(), 1))
        with self.assertRaises(InvalidInput):
            chi_psi_eval(d, ct, self.cfg)

    def test_central_character_special_values(self):
        """(I, -1) acts by -1; squares a = c^2 act by beta^{ord a}"""
        label = ExtensionLabel((I, 2), GaussianRational(5), Branch.MINUS)
        minus_one = central_character(label, SquareClassElement.one(), -1, self.cfg)
        self.assertEqual(minus_one, PhasedScalar(Phase.identity(self.cfg), SurdScalar(-1, 0, 3)))
        square = central_character(label, SquareClassElement.pi(2), 1, self.cfg)
        self.assertEqual(square, PhasedScalar(Phase.identity(self.cfg), SurdScalar(25, 0, 3)))

    def test_central_character_distinguishes_branches(self):
        """For n odd, a = u0 separates plus from minus labels"""
        plus = ExtensionLabel((I,), GaussianRational(1), Branch.PLUS)
        minus = ExtensionLabel((I,), GaussianRational(1), Branch.MINUS)
        u0 = SquareClassElement.u0()
        self.assertNotEqual(central_character(plus, u0, 1, self.cfg),
                            central_character(minus, u0, 1, self.cfg))


if __name__ == "__main__":
    unittest.main(verbosity=2)
