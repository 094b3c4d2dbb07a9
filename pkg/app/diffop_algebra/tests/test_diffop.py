"""
Tests for bideterminants, the kernels Q_l and the delta-calculus.
"""
import json
from fractions import Fraction
from io import StringIO
from math import prod

from django.core.management import call_command
from django.test import SimpleTestCase, tag
from sympy import Integer, Rational, expand, factorial, pi, rf

from core.exceptions import PreconditionError
from diffop_algebra.constants import c0_rho2, constant_c, d_kl, tilde_c2, verify_constants
from diffop_algebra.delta import DeltaCalculus, delta_reduce
from diffop_algebra.identities import (
    FUNDAMENTAL_TABLE, action_coefficient, action_on_delta, composition_consistent, evaluate_identity, lemma_f3,
    lemma_f3_coefficient, verify_fundamental_table,
)
from diffop_algebra.kernels import (
    K, Ql_kernel, equivariance_check, generating_function_check, kernel_variables, pluriharmonic_check, ql_terms,
)
from diffop_algebra.models import Bideterminant, PiMultiple, pochhammer
from diffop_algebra.tableaux import bidet_straighten, expand_bideterminant, minor_ring, semistandard_tableaux


def bidet(*columns, n=4):
    return Bideterminant(n, columns)


class TestTableaux(SimpleTestCase):
    """Test the semistandard basis and straightening."""

    def test_basis_size(self):
        samples = [((1, 1, 0, 0), 4, 6), ((1, 0, 0, 0), 4, 4), ((2, 2, 0, 0), 4, 20), ((1, 1, 0), 3, 3)]
        for weight, n, expected in samples:
            self.assertEqual(len(semistandard_tableaux(weight, n)), expected, msg=weight)

    def test_basis_columns(self):
        columns = sorted(b.columns for b in semistandard_tableaux((1, 1, 0, 0)))
        self.assertEqual(columns, [((1, 2),), ((1, 3),), ((1, 4),), ((2, 3),), ((2, 4),), ((3, 4),)])

    def test_pluecker(self):
        result = bidet_straighten(bidet((1, 4), (2, 3)))
        self.assertEqual(result, {bidet((1, 3), (2, 4)): 1, bidet((1, 2), (3, 4)): -1})

    def test_factors(self):
        self.assertEqual(bidet_straighten([bidet((1, 4)), bidet((2, 3))]), bidet_straighten(bidet((1, 4), (2, 3))))

    def test_semistandard_fixed(self):
        for b in semistandard_tableaux((2, 1, 0, 0)):
            self.assertEqual(bidet_straighten(b), {b: 1})

    def test_expansion_preserved(self):
        samples = [bidet((1, 4), (2, 3)), bidet((2, 3), (1,)), bidet((1, 4), (2, 3), (1, 2)), bidet((2, 3, 4), (1,))]
        for sample in samples:
            result = bidet_straighten(sample)
            _, U = minor_ring(sample.depth, sample.n)
            total = sum((c * expand_bideterminant(b, U) for b, c in result.items()), U[0][0].ring.zero)
            self.assertEqual(total, expand_bideterminant(sample, U), msg=str(sample))
            self.assertTrue(all(b.is_semistandard() and isinstance(c, int) for b, c in result.items()))

    def test_weight(self):
        self.assertEqual(bidet((1, 2), (3, 4), (2,)).weight, (3, 2, 0, 0))

    def test_bad_columns(self):
        with self.assertRaises(PreconditionError):
            bidet((2, 1))
        with self.assertRaises(PreconditionError):
            bidet((1, 5))
        with self.assertRaises(PreconditionError):
            bidet((1, 2)) * Bideterminant(3, ((1, 2),))


class TestKernels(SimpleTestCase):
    """Test Q_l and its generating function."""

    def test_low_terms(self):
        self.assertEqual(ql_terms(0), {(0, 0, 0): 1})
        self.assertEqual(ql_terms(1), {(1, 0, 0): 2 * K - 3})
        terms = ql_terms(2)
        self.assertEqual(set(terms), {(2, 0, 0), (0, 1, 0), (0, 0, 1)})
        expected = {(2, 0, 0): 2 * K ** 2 - 4 * K + Rational(3, 2), (0, 1, 0): Rational(3, 2) - K,
                    (0, 0, 1): K - Rational(1, 2)}
        for key, value in expected.items():
            self.assertEqual(expand(terms[key] - value), 0, msg=key)

    def test_q0_q1(self):
        var = kernel_variables(2, 2)
        self.assertEqual(Ql_kernel(0, 2, 2), var.ring.one)
        F1 = var.invariants()['f1']
        self.assertEqual(Ql_kernel(1, 2, 2), F1 * var.constant(2 * K - 3))

    def test_generating_function(self):
        for l in range(4):
            self.assertTrue(generating_function_check(l), msg=l)
        self.assertTrue(generating_function_check(3, 8))

    def test_homogeneity(self):
        var = kernel_variables(2, 3, 10)
        t_count = len(var.T) * (len(var.T) + 1) // 2
        for l in (1, 2):
            Q = Ql_kernel(l, 2, 3, 10)
            for monomial in Q.keys():
                self.assertEqual(sum(monomial[:t_count]), 2 * l)
                self.assertEqual(sum(monomial[t_count:t_count + 4]), 2 * l)
                self.assertEqual(sum(monomial[t_count + 4:]), 2 * l)

    def test_small_n(self):
        with self.assertRaises(PreconditionError):
            Ql_kernel(1, 1, 2)

    def test_pluriharmonic(self):
        self.assertTrue(pluriharmonic_check(1, 2, 2, 4))
        self.assertTrue(pluriharmonic_check(2, 2, 2, 6))

    def test_not_pluriharmonic(self):
        var = kernel_variables(2, 2, 4)
        perturbed = Ql_kernel(1, 2, 2, 4) + var.invariants()['f2']
        self.assertFalse(pluriharmonic_check(1, 2, 2, 4, kernel=perturbed))

    def test_pluriharmonic_weight(self):
        with self.assertRaises(PreconditionError):
            pluriharmonic_check(1, 2, 2, 5)

    def test_equivariance(self):
        identity = [[1, 0], [0, 1]]
        samples = [
            (1, identity, identity),
            (1, [[1, 0], [0, 2]], identity),
            (2, [[1, 1], [0, 1]], [[2, 1], [1, 1]]),
        ]
        for l, A1, A2 in samples:
            self.assertTrue(equivariance_check(l, 2, 2, A1, A2), msg=(l, A1, A2))

    def test_equivariance_sizes(self):
        with self.assertRaises(PreconditionError):
            equivariance_check(1, 2, 2, [[1]], [[1, 0], [0, 1]])


class TestDeltaCalculus(SimpleTestCase):
    """Test the d[u_a, u_b]-calculus."""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.calculus = DeltaCalculus()

    def test_constants_vanish(self):
        one = self.calculus.delta(0)
        self.assertTrue(self.calculus.derive(one, 1, 2).is_zero())

    def test_rules(self):
        c = self.calculus
        self.assertEqual(c.derive(c.delta(), 1, 2).poly, -c.k * c.entry(1, 2))
        got = c.derive(c.delta(0) * c.entry(3, 4), 1, 2).poly
        self.assertEqual(got, (c.entry(1, 3) * c.entry(2, 4) + c.entry(1, 4) * c.entry(2, 3)) * Rational(-1, 2))

    def test_first_formulas(self):
        c = self.calculus
        self.assertEqual(c.apply('F1', c.delta()), c.from_expr('k*(2*k-1)/2*C1*D'))
        self.assertEqual(c.apply('F4', c.delta()), c.from_expr('k*(2*k-1)/2*C4*D'))

    def test_lemma_f3(self):
        self.assertTrue(lemma_f3(self.calculus, 0))
        self.assertTrue(lemma_f3(self.calculus, 1))
        self.assertTrue(lemma_f3(DeltaCalculus(6), 1))

    @tag('slow')
    def test_lemma_f3_formal_square(self):
        """F3(delta^-k C3^2) = (k+1)(k+2)(2k+1)(2k+3)/4 delta^-k C3^3."""
        self.assertEqual(expand(lemma_f3_coefficient(2) - (K + 1) * (K + 2) * (2 * K + 1) * (2 * K + 3) / 4), 0)
        self.assertTrue(lemma_f3(self.calculus, 2))

    def test_reduce(self):
        c = self.calculus
        reduced = delta_reduce(c, c.apply('F1', c.delta()))
        self.assertEqual(reduced.power, 1)
        self.assertEqual(list(reduced.terms), [(1, 0, 0, 0, 0)])
        self.assertEqual(expand(reduced.terms[1, 0, 0, 0, 0] - K * (2 * K - 1) / 2), 0)

    def test_reduce_regroups(self):
        c = self.calculus
        reduced = delta_reduce(c, c.c(4) * c.c(5) + c.c(1) ** 2)
        self.assertEqual(set(reduced.terms), {(0, 1, 0, 0, 0), (2, 0, 0, 0, 0)})

    def test_table_entries(self):
        c = self.calculus
        self.assertEqual(evaluate_identity(c, 'F1', ('C3', 'C3')), c.from_expr('2*C1*C3**2'))
        self.assertEqual(evaluate_identity(c, 'F4', ('D', 'C2')), c.from_expr('k*C4*(C1**2+3*C2-C3)*D'))

    def test_fundamental_table(self):
        report = verify_fundamental_table(calculus=self.calculus)
        self.assertEqual(len(report.assertions), len(FUNDAMENTAL_TABLE))
        failures = [str(a) for a in report.assertions if not a.passed]
        self.assertEqual(failures, [])

    def test_composition(self):
        self.assertTrue(composition_consistent(self.calculus))

    def test_action_on_delta(self):
        self.assertEqual(action_on_delta(0, calculus=self.calculus), 1)
        got = action_on_delta(1, calculus=self.calculus)
        self.assertEqual(expand(got - (2 * K - 3) * (2 * K - 1) * 2 * K / 4), 0)
        self.assertEqual(action_on_delta(2, 8), 417690)

    @tag('slow')
    def test_action_on_delta_formal(self):
        got = action_on_delta(2, calculus=self.calculus)
        self.assertEqual(expand(got - action_coefficient(2)), 0)


class TestConstants(SimpleTestCase):
    """Test the pullback constants."""

    def test_pochhammer(self):
        self.assertEqual(pochhammer(3, 2), 12)
        self.assertEqual(pochhammer(5, 0), 1)
        self.assertEqual(pochhammer(5, -1), Fraction(1, 4))
        self.assertEqual(pochhammer(5, -3), Fraction(1, 24))

    def test_pi_multiple(self):
        value = PiMultiple.of(Fraction(-12, 5), 1, 3)
        self.assertEqual((value.sign, value.two_power, value.rational), (-1, 3, Fraction(3, 5)))
        self.assertEqual(value.as_expr(), Rational(-24, 5) * pi ** 3)

    def test_degree_two_constant(self):
        expected = Integer(2) ** -39 * pi ** 3 * rf(21, 6) * rf(23, 9) / factorial(6)
        self.assertEqual(c0_rho2(12, 6).as_expr(), expected)

    def test_c2(self):
        for k, l in [(4, 1), (6, 3), (12, 6), (20, 2), (8, 9)]:
            self.assertEqual(constant_c(2, k, l), c0_rho2(k, l), msg=(k, l))
            self.assertEqual(tilde_c2(k, l) * d_kl(k, l), c0_rho2(k, l), msg=(k, l))

    def test_l_zero(self):
        self.assertEqual(c0_rho2(4, 0).as_expr(), pi ** 3 / 60)
        self.assertEqual(constant_c(2, 4, 0), c0_rho2(4, 0))

    def test_higher_r(self):
        value = constant_c(3, 10, 2)
        self.assertEqual(value.pi_power, 6)
        denominator = factorial(2) * prod(24 - nu for nu in range(2, 5)) * 18 * 17 * 14
        numerator = -rf(17, 2) * rf(19, 4)
        self.assertEqual(value.as_expr(), Integer(2) ** (16 - 34 - 4) * pi ** 6 * numerator / denominator)

    def test_range(self):
        for args in [(2, 7, 1), (1, 8, 1), (2, 2, 1), (2, 8, -1)]:
            with self.assertRaises(PreconditionError, msg=args):
                constant_c(*args)

    def test_report(self):
        self.assertTrue(verify_constants().passed)


class TestCommand(SimpleTestCase):
    """Test the diffop command."""

    def test_ql(self):
        out = StringIO()
        call_command('diffop', 'ql', '--l', '1', stdout=out)
        data = json.loads(out.getvalue())
        self.assertEqual(data['terms'], {'F1^1 F2^0 F3^0': '2*k - 3'})
        self.assertTrue(data['generating_function'])

    def test_ql_numeric(self):
        out = StringIO()
        call_command('diffop', 'ql', '--l', '2', '--k', '6', stdout=out)
        data = json.loads(out.getvalue())
        self.assertEqual(data['terms']['F1^0 F2^0 F3^1'], '11/2')

    def test_verify(self):
        out = StringIO()
        call_command('diffop', 'verify-identities', '--l', '1', '--k', '8', stdout=out)
        self.assertTrue(out.getvalue().startswith('differential operator identities: pass'))
