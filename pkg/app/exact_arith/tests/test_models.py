"""
Tests for quadratic and biquadratic field elements.
"""
import random
from fractions import Fraction

from django.test import SimpleTestCase

from core.exceptions import PreconditionError
from exact_arith.models import QuadFieldElem, TowerElem
from exact_arith.primes import field_norm


def random_quad(rng, D):
    return QuadFieldElem(rng.randint(-50, 50), rng.randint(-50, 50), D, rng.randint(1, 12))


def random_tower(rng, D1, D2):
    return TowerElem(D1, D2, [Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(4)])


class TestQuadFieldElem(SimpleTestCase):
    """Test QuadFieldElem normalization and arithmetic."""

    def test_normalization(self):
        x = QuadFieldElem(4, 6, 12, 2)
        self.assertEqual((x.a, x.b, x.c, x.D), (2, 6, 1, 3))
        self.assertEqual(str(x), '2+6*sqrt(3)')
        self.assertTrue(QuadFieldElem(3, 5, 1).is_rational)
        self.assertEqual(QuadFieldElem(3, 5, 1), 8)
        self.assertEqual(QuadFieldElem(3, 2, 9), 9)

    def test_string_form(self):
        samples = [
            (QuadFieldElem(4320, 96, 51349), '4320+96*sqrt(51349)'),
            (QuadFieldElem(1, -1, 5, 2), '(1-1*sqrt(5))/2'),
            (QuadFieldElem(0, -2, 7), '-2*sqrt(7)'),
            (QuadFieldElem(-3, 0, 1, 4), '-3/4'),
        ]
        for value, text in samples:
            self.assertEqual(str(value), text)

    def test_field_axioms(self):
        rng = random.Random(7)
        for _ in range(40):
            x, y, z = (random_quad(rng, 51349) for _ in range(3))
            self.assertEqual((x * y) * z, x * (y * z))
            self.assertEqual(x * (y + z), x * y + x * z)
            if x:
                self.assertEqual(x * x.inverse(), 1)
                self.assertEqual((y / x) * x, y)

    def test_norm_multiplicative(self):
        rng = random.Random(11)
        for _ in range(40):
            x, y = random_quad(rng, 18209), random_quad(rng, 18209)
            self.assertEqual(field_norm(x * y), field_norm(x) * field_norm(y))

    def test_norm_examples(self):
        self.assertEqual(QuadFieldElem(4320, 96, 51349).norm(), 4320 ** 2 - 96 ** 2 * 51349)
        self.assertEqual(field_norm(Fraction(3, 5)), Fraction(9, 25))
        self.assertEqual(QuadFieldElem.from_parts(Fraction(3, 5)).norm(), Fraction(9, 25))

    def test_mixed_fields_rejected(self):
        with self.assertRaises(PreconditionError):
            QuadFieldElem(1, 1, 2) + QuadFieldElem(1, 1, 3)


class TestTowerElem(SimpleTestCase):
    """Test TowerElem arithmetic and degeneration."""

    def test_field_axioms(self):
        rng = random.Random(3)
        for _ in range(25):
            x, y, z = (random_tower(rng, 18209, 51349) for _ in range(3))
            self.assertEqual((x * y) * z, x * (y * z))
            self.assertEqual(x * (y + z), x * y + x * z)
            if x:
                self.assertEqual(x * x.inverse(), 1)

    def test_norm_multiplicative(self):
        rng = random.Random(5)
        for _ in range(25):
            x, y = random_tower(rng, 2, 3), random_tower(rng, 2, 3)
            self.assertEqual(field_norm(x * y), field_norm(x) * field_norm(y))

    def test_norm_of_product_of_roots(self):
        """Test N(sqrt(D1)*sqrt(D2)) = (D1*D2)**2 through all four embeddings."""
        x = TowerElem(5, 13, (0, 0, 0, 1))
        self.assertEqual(field_norm(x), 65 ** 2)
        product = 1
        for s1 in (1, -1):
            for s2 in (1, -1):
                product *= x.embed(s1, s2)
        self.assertAlmostEqual(float(product), 65.0 ** 2, places=6)

    def test_degenerates_to_quadratic(self):
        q = QuadFieldElem(33566721 * 53472, 33566721, 51349)
        t = TowerElem.from_quad(q, 18209, 51349)
        self.assertEqual(t.to_quad(), q)
        self.assertEqual(t.norm(), q.norm() ** 2)
        self.assertEqual(t, q)
        mixed = TowerElem.from_quad(QuadFieldElem(0, 1, 6), 2, 3)
        self.assertEqual(mixed.coords, (0, 0, 0, 1))

    def test_difference_across_subfields(self):
        a = QuadFieldElem(12960 * 67989, 12960 * 443, 18209)
        b = QuadFieldElem(33566721 * 53472, 33566721, 51349)
        diff = TowerElem.from_quad(a, 18209, 51349) - b
        self.assertEqual(diff.coords[1], 12960 * 443)
        self.assertEqual(diff.coords[2], -33566721)
        with self.assertRaises(PreconditionError):
            diff.to_quad()
