"""
Tests for Bernoulli numbers and special values.
"""
from fractions import Fraction

from django.test import SimpleTestCase
from sympy import primerange

from core.exceptions import PoleError, PreconditionError
from special_values.models import KroneckerChar, bernoulli_table
from special_values.zeta import L_neg, Z_norm, bernoulli, fundamental_discriminant, zeta_at, zeta_neg


class TestBernoulli(SimpleTestCase):
    """Test the Bernoulli table."""

    def test_first_values(self):
        """Test B_0..B_4 with B_1 = -1/2."""
        self.assertEqual(bernoulli(0), 1)
        self.assertEqual(bernoulli(1), Fraction(-1, 2))
        self.assertEqual(bernoulli(2), Fraction(1, 6))
        self.assertEqual(bernoulli(4), Fraction(-1, 30))
        self.assertEqual(bernoulli(12), Fraction(-691, 2730))

    def test_odd_vanish(self):
        """Test B_n = 0 for odd n >= 3."""
        for n in range(3, 40, 2):
            self.assertEqual(bernoulli(n), 0)

    def test_von_staudt_clausen(self):
        """Test the denominator of B_k is the product of p with (p - 1) | k."""
        for k in range(2, 41, 2):
            expected = 1
            for p in primerange(2, k + 2):
                if k % (p - 1) == 0:
                    expected *= p
            self.assertEqual(bernoulli(k).denominator, expected)

    def test_polynomial_at_one(self):
        """Test B_n(1) = B_n for n >= 2 and B_1(1) = 1/2."""
        self.assertEqual(bernoulli_table.polynomial(1, 1), Fraction(1, 2))
        for n in range(2, 12):
            self.assertEqual(bernoulli_table.polynomial(n, 1), bernoulli(n))


class TestZetaValues(SimpleTestCase):
    """Test zeta(1 - k)."""

    def test_zeta_neg(self):
        samples = [
            (12, Fraction(691, 32760)),
            (2, Fraction(-1, 12)),
            (1, Fraction(-1, 2)),
            (4, Fraction(1, 120)),
            (3, 0),
        ]
        for k, expected in samples:
            self.assertEqual(zeta_neg(k), expected)

    def test_zeta_neg_domain(self):
        for k in (0, -2):
            with self.assertRaises(PreconditionError):
                zeta_neg(k)

    def test_zeta_at_pole(self):
        with self.assertRaises(PoleError):
            zeta_at(1)
        self.assertEqual(zeta_at(-11), Fraction(691, 32760))


class TestCharacters(SimpleTestCase):
    """Test Kronecker characters and fundamental discriminants."""

    def test_fundamental_discriminant(self):
        samples = [(12, (12, 1)), (9, (1, 3)), (5, (5, 1)), (-4, (-4, 1)), (-16, (-4, 2)), (20, (5, 2))]
        for D, expected in samples:
            self.assertEqual(fundamental_discriminant(D), expected)

    def test_fundamental_discriminant_invalid(self):
        for D in (0, 2, 3, -1):
            with self.assertRaises(PreconditionError):
                fundamental_discriminant(D)

    def test_character_properties(self):
        """Test multiplicativity, support and periodicity."""
        for d in (-4, 5, 8, -3, 12, -7):
            chi = KroneckerChar(d)
            for m in range(1, 30):
                self.assertEqual(chi(m + chi.conductor), chi(m))
                self.assertEqual(chi(m) == 0, any(m % p == 0 for p in primerange(2, abs(d) + 1) if d % p == 0))
                for n in range(1, 10):
                    self.assertEqual(chi(m * n), chi(m) * chi(n))

    def test_not_fundamental(self):
        for d in (0, 2, 9, -8 * 4, 3):
            with self.assertRaises(PreconditionError):
                KroneckerChar(d)


class TestLValues(SimpleTestCase):
    """Test L(1 - m, chi)."""

    def test_examples(self):
        self.assertEqual(L_neg(1, KroneckerChar(-4)), Fraction(1, 2))
        self.assertEqual(L_neg(2, KroneckerChar(-4)), 0)
        self.assertEqual(L_neg(4, KroneckerChar(1)), zeta_neg(4))
        self.assertEqual(L_neg(1, KroneckerChar(-3)), Fraction(1, 3))

    def test_parity_vanishing(self):
        """Test L(1 - m, chi) = 0 exactly when chi(-1) != (-1)**m."""
        for d in (-4, -3, 5, 8, 12, -7):
            chi = KroneckerChar(d)
            for m in range(1, 9):
                self.assertEqual(L_neg(m, chi) == 0, chi.parity != (-1) ** m)


class TestZNorm(SimpleTestCase):
    """Test the normalizer Z(n, l)."""

    def test_values(self):
        self.assertEqual(Z_norm(1, 12), zeta_neg(12))
        self.assertEqual(Z_norm(4, 6), zeta_neg(6) * zeta_neg(10) * zeta_neg(8))
        self.assertEqual(Z_norm(8, 16) / Z_norm(4, 16), zeta_neg(26) * zeta_neg(24))

    def test_pole(self):
        with self.assertRaises(PoleError):
            Z_norm(4, 2)
