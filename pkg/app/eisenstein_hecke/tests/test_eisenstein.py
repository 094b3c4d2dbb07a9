"""
Tests for Siegel Eisenstein coefficients and the degree two Hecke action.
"""
import json
from fractions import Fraction
from io import StringIO

from django.core.management import call_command
from django.test import SimpleTestCase, tag

from core.exceptions import MissingCoefficient, NotEigenformError, PreconditionError
from eisenstein_hecke.coefficients import eisenstein_coeff, eisenstein_table, psd_indices, table_for
from eisenstein_hecke.models import CoeffTable, EisensteinSpec
from eisenstein_hecke.operators import coset_representatives, eigenvalue_extract, hecke_Tp_deg2, phi_operator
from local_siegel.models import HalfIntegralMat
from qexp_elliptic.series import eisenstein_q
from special_values.models import KroneckerChar
from special_values.zeta import L_neg, Z_norm

HEXAGONAL = HalfIntegralMat([[2, 1], [1, 2]])


class TestEisensteinSpec(SimpleTestCase):
    """Test the weight hypotheses."""

    def test_valid(self):
        for n, k in ((1, 4), (2, 4), (2, 16), (4, 12), (6, 4)):
            EisensteinSpec(n, k)

    def test_rejected(self):
        for n, k in ((2, 3), (1, 2), (2, 2), (5, 2), (6, 2), (0, 4)):
            with self.assertRaises(PreconditionError, msg=f'n={n}, k={k}'):
                EisensteinSpec(n, k)


class TestCoefficients(SimpleTestCase):
    """Test a(T, E_{n,k}) and a(T, E~_{n,k})."""

    def test_constant_term(self):
        for n, k in ((1, 12), (2, 4), (2, 16), (3, 12), (4, 12)):
            T = HalfIntegralMat.zero(n)
            self.assertEqual(eisenstein_coeff(EisensteinSpec(n, k, normalized=True), T), Z_norm(n, k))
            self.assertEqual(eisenstein_coeff(EisensteinSpec(n, k), T), 1)

    def test_degree_one(self):
        for k in (4, 12, 16):
            expected = eisenstein_q(k, 6)
            for t in range(1, 7):
                self.assertEqual(eisenstein_coeff(EisensteinSpec(1, k), HalfIntegralMat.diagonal(t)), expected[t])

    def test_weight_four(self):
        spec = EisensteinSpec(2, 4)
        samples = [
            (HalfIntegralMat.diagonal(1, 0), 240),
            (HEXAGONAL, 13440),
            (HalfIntegralMat.diagonal(1, 1), 30240),
        ]
        for T, expected in samples:
            self.assertEqual(eisenstein_coeff(spec, T), expected, msg=str(T))

    def test_rank_one_weight_sixteen(self):
        value = eisenstein_coeff(EisensteinSpec(2, 16), HalfIntegralMat.diagonal(1, 0))
        self.assertEqual(value, eisenstein_q(16, 1)[1])

    def test_hexagonal_uses_three_only(self):
        """det 2T = 3 and F_3 of the hexagonal form is 1, so only the L-value remains."""
        spec = EisensteinSpec(2, 16, normalized=True)
        value = eisenstein_coeff(spec, HEXAGONAL)
        self.assertNotEqual(value, 0)
        self.assertEqual(value, 2 * L_neg(15, KroneckerChar(-3)))

    def test_class_invariance(self):
        unimodular = ([[1, 1], [0, 1]], [[2, 1], [1, 1]], [[0, 1], [-1, 3]], [[5, 2], [2, 1]])
        for k in (12, 16):
            spec = EisensteinSpec(2, k)
            for T in (HEXAGONAL, HalfIntegralMat([[2, 1], [1, 4]]), HalfIntegralMat.diagonal(2, 0)):
                expected = eisenstein_coeff(spec, T)
                for U in unimodular:
                    self.assertEqual(eisenstein_coeff(spec, T.transform(U)), expected)
        spec = EisensteinSpec(3, 12)
        T = HalfIntegralMat([[2, 1, 0], [1, 2, 0], [0, 0, 0]])
        U = [[1, 0, 1], [1, 1, 0], [0, 0, 1]]
        self.assertEqual(eisenstein_coeff(spec, T.transform(U)), eisenstein_coeff(spec, T))

    def test_not_psd(self):
        with self.assertRaises(PreconditionError):
            eisenstein_coeff(EisensteinSpec(2, 12), HalfIntegralMat([[2, 3], [3, 2]]))

    def test_wrong_size(self):
        with self.assertRaises(PreconditionError):
            eisenstein_coeff(EisensteinSpec(2, 12), HalfIntegralMat.diagonal(1))


class TestPhi(SimpleTestCase):
    """Test the Siegel Phi operator."""

    def test_phi_degree_two(self):
        for k in (12, 16):
            phi = phi_operator(table_for(EisensteinSpec(2, k), 6))
            expected = eisenstein_q(k, 6)
            for t in range(7):
                self.assertEqual(phi[HalfIntegralMat.diagonal(t)], expected[t], msg=f'k={k}, t={t}')

    def test_phi_twice(self):
        table = phi_operator(phi_operator(table_for(EisensteinSpec(2, 12), 1)))
        self.assertEqual(table.degree, 0)
        self.assertEqual(table[HalfIntegralMat.zero(0)], 1)

    def test_phi_of_definite_support(self):
        table = CoeffTable(2, 12, {HEXAGONAL: 5, HalfIntegralMat.diagonal(1, 1): 7})
        phi = phi_operator(table)
        self.assertEqual(len(phi), 0)
        self.assertTrue(phi.is_zero)

    def test_compatibility_across_degrees(self):
        samples = [HalfIntegralMat.diagonal(1), HalfIntegralMat.diagonal(3), HEXAGONAL,
                   HalfIntegralMat([[2, 1], [1, 4]]), HalfIntegralMat.diagonal(1, 0)]
        for k in (12, 16):
            for T in samples:
                for n in range(T.n + 1, 5):
                    lower = T.with_zeros(n - 1 - T.n)
                    self.assertEqual(eisenstein_coeff(EisensteinSpec(n, k), lower.with_zeros(1)),
                                     eisenstein_coeff(EisensteinSpec(n - 1, k), lower), msg=f'{lower} n={n}')

    @tag('slow')
    def test_compatibility_rank_three(self):
        T = HalfIntegralMat.diagonal(1, 1, 1)
        for k in (12, 16):
            self.assertEqual(eisenstein_coeff(EisensteinSpec(4, k), T.with_zeros(1)),
                             eisenstein_coeff(EisensteinSpec(3, k), T))

    def test_lazy_phi(self):
        phi = phi_operator(eisenstein_table(EisensteinSpec(2, 12)))
        self.assertEqual(phi[HalfIntegralMat.diagonal(5)], eisenstein_q(12, 5)[5])


class TestHecke(SimpleTestCase):
    """Test the T(p) action and eigenvalue extraction."""

    def test_cosets(self):
        self.assertEqual(len(coset_representatives(2)), 3)
        self.assertEqual(len(coset_representatives(5)), 6)

    def test_zero_index(self):
        k, p = 12, 2
        table = eisenstein_table(EisensteinSpec(2, k))
        expected = (1 + p ** (2 * k - 3) + (p + 1) * p ** (k - 2)) * table[HalfIntegralMat.zero(2)]
        self.assertEqual(hecke_Tp_deg2(table, k, p, HalfIntegralMat.zero(2)), expected)

    def test_hexagonal_at_two(self):
        """T/2 and every T[D]/2 fail to be half-integral, leaving a(2T)."""
        table = eisenstein_table(EisensteinSpec(2, 16))
        self.assertEqual(hecke_Tp_deg2(table, 16, 2, HEXAGONAL), table[HEXAGONAL.scaled(2)])
        for D in coset_representatives(2):
            self.assertIsNone(HEXAGONAL.transform(D).divided(2))

    def test_eigenvalues(self):
        samples = [(16, 2), (12, 2), (16, 3)]
        for k, p in samples:
            table = eisenstein_table(EisensteinSpec(2, k))
            expected = (1 + p ** (k - 2)) * (1 + p ** (k - 1))
            self.assertEqual(eigenvalue_extract(table, k, p), expected, msg=f'k={k}, p={p}')

    def test_eigenvalue_two_sixteen(self):
        table = eisenstein_table(EisensteinSpec(2, 16, normalized=True))
        self.assertEqual(eigenvalue_extract(table, 16, 2), 536920065)

    def test_missing_coefficient(self):
        table = CoeffTable(2, 12, {HEXAGONAL: 1})
        with self.assertRaises(MissingCoefficient):
            hecke_Tp_deg2(table, 12, 2, HEXAGONAL)

    def test_not_eigenform(self):
        constant = CoeffTable(2, 12, source=lambda T: Fraction(1))
        with self.assertRaises(NotEigenformError):
            eigenvalue_extract(constant, 12, 2)
        zero = CoeffTable(2, 12, source=lambda T: Fraction(0))
        with self.assertRaises(NotEigenformError):
            eigenvalue_extract(zero, 12, 2)

    def test_degree_two_only(self):
        table = eisenstein_table(EisensteinSpec(3, 12))
        with self.assertRaises(PreconditionError):
            hecke_Tp_deg2(table, 12, 2, HalfIntegralMat.zero(3))


class TestTable(SimpleTestCase):
    """Test table population."""

    def test_indices(self):
        indices = list(psd_indices(2, 1))
        self.assertEqual(len(indices), 8)
        self.assertTrue(all(T.is_psd for T in indices))

    def test_canonical_keys(self):
        table = table_for(EisensteinSpec(2, 12), 1)
        self.assertEqual(len(table), 4)
        self.assertEqual(table[HalfIntegralMat([[2, -1], [-1, 2]])], table[HEXAGONAL])

    def test_parallel_matches_serial(self):
        spec = EisensteinSpec(2, 12)
        serial = table_for(spec, 2, workers=1)
        parallel = table_for(spec, 2, workers=2)
        self.assertEqual(dict(serial.items()), dict(parallel.items()))


class TestCommand(SimpleTestCase):
    """Test the eisenstein command."""

    def _run(self, *args):
        out = StringIO()
        call_command('eisenstein', *args, stdout=out)
        return json.loads(out.getvalue())

    def test_coefficient(self):
        data = self._run('--degree', '2', '--weight', '4', '--twoT', '[[2, 1], [1, 2]]')
        self.assertEqual(data['value'], '13440')
        self.assertEqual(data['rank'], 2)

    def test_normalized_constant(self):
        data = self._run('--degree', '2', '--weight', '4', '--twoT', '[[0, 0], [0, 0]]', '--normalized')
        self.assertEqual(data['value'], '-1/30240')

    def test_hecke(self):
        data = self._run('--degree', '2', '--weight', '12', '--hecke', '2')
        self.assertEqual(data['eigenvalue'], str((1 + 2 ** 10) * (1 + 2 ** 11)))
