"""
Tests for lift weights, sign conditions, lift eigenvalues and the incongruence table.
"""
import json
from fractions import Fraction
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from core.exceptions import PreconditionError
from exact_arith.models import QuadFieldElem
from lift_calculus.eigenvalues import (
    LiftKind,
    euler_valuations,
    harder_euler_congruence,
    harder_euler_factor,
    lift_eigenvalue_Tp,
    spin_euler_deg2,
)
from lift_calculus.incongruence import incongruence_table, recomputed_eigenvalues
from lift_calculus.models import AParameter, InfChar, Piece
from lift_calculus.parameters import (
    inf_char,
    rs_root_number,
    scalar_lift_condition,
    scalar_lift_parameter,
    sign_condition,
    sign_table,
    vector_lift_conditions,
    vector_lift_parameter,
    weight_from_infchar,
    weight_from_scalar_lift,
    weight_from_vector_lift,
)
from lift_calculus.serializers import AParameterSerializer, parse_parameter
from qexp_elliptic.eigen import eigenform

VECTOR_SPEC = {'pieces': [{'kind': 'trivial'}, {'kind': 'siegel2', 'k': 10, 'j': 4, 'd': 2}]}


class TestPieces(SimpleTestCase):
    """Test pieces and A-parameters."""

    def test_eigenvalues(self):
        self.assertEqual(Piece.elliptic(12).eigenvalues, (Fraction(11, 2), Fraction(-11, 2)))
        self.assertEqual(Piece.siegel2(10, 4).weights, (Fraction(21, 2), Fraction(5, 2)))
        self.assertEqual(Piece.trivial().eigenvalues, (0,))
        self.assertEqual(Piece.rankin(16, 12).weights, (13, 2))

    def test_invalid_pieces(self):
        for build in (lambda: Piece.elliptic(11), lambda: Piece.siegel2(4, 3), lambda: Piece.siegel2(3, 4),
                      lambda: Piece.rankin(12, 16), lambda: Piece.trivial(0),
                      lambda: Piece.generic(3, [Fraction(1, 3)])):
            with self.assertRaises(PreconditionError):
                build()

    def test_parameter(self):
        psi = vector_lift_parameter(10, 4)
        self.assertEqual(psi.rank, 9)
        self.assertEqual(psi.degree, 4)
        self.assertEqual(psi.i0, 0)

    def test_even_rank(self):
        with self.assertRaises(PreconditionError):
            AParameter((Piece.elliptic(12),))

    def test_no_i0(self):
        psi = AParameter((Piece.trivial(3),))
        self.assertIsNone(psi.i0)
        with self.assertRaises(PreconditionError):
            sign_table(psi)

    def test_inf_char(self):
        c = inf_char(vector_lift_parameter(10, 4))
        self.assertEqual(c.eigenvalues, (11, 10, 3, 2, 0, -2, -3, -10, -11))
        self.assertTrue(c.is_regular)
        self.assertFalse(InfChar((Fraction(1, 2), Fraction(-1, 2))).is_regular)
        self.assertFalse(InfChar((2, 1, -1)).is_symmetric)


class TestWeights(SimpleTestCase):
    """Test the weights of lifts of type A^(I)."""

    def test_vector_lifts(self):
        samples = {(10, 4): (12, 12, 6, 6), (14, 4): (16, 16, 6, 6), (4, 24): (16, 16, 16, 16)}
        for (k, j), expected in samples.items():
            self.assertEqual(weight_from_vector_lift(k, j), expected, msg=f'(k, j) = ({k}, {j})')

    def test_round_trip(self):
        for k in range(4, 21, 2):
            for j in range(2, 25, 2):
                weight = weight_from_vector_lift(k, j)
                self.assertEqual(weight_from_infchar(inf_char(vector_lift_parameter(k, j))), weight)

    def test_failed_conditions(self):
        self.assertEqual(vector_lift_conditions(5, 4), {'a': False, 'b': True, 'c': True})
        for k, j, d in ((5, 4, 1), (4, 2, 2), (10, 3, 1)):
            with self.assertRaises(PreconditionError, msg=f'{(k, j, d)}'):
                weight_from_vector_lift(k, j, d=d)

    def test_scalar_lift(self):
        self.assertEqual(scalar_lift_condition(13, 1), 1)
        self.assertEqual(weight_from_scalar_lift(13, 1), (14, 14))
        self.assertEqual(weight_from_scalar_lift(14, 2), (16, 16, 16, 16))
        self.assertIsNone(scalar_lift_condition(13, 2))
        self.assertEqual(weight_from_infchar(inf_char(scalar_lift_parameter(13))), (14, 14))
        self.assertIsNone(scalar_lift_condition(14, 1))
        with self.assertRaises(PreconditionError):
            weight_from_scalar_lift(14, 1)

    def test_bad_base(self):
        with self.assertRaises(PreconditionError):
            weight_from_vector_lift(10, 4, base_weights=(12, 14))

    def test_scalar_lift_over_base(self):
        """f in S_26 over a degree two form of weight 16 lands in weight 16 on degree four."""
        self.assertEqual(scalar_lift_condition(13, 1, (16, 16)), 2)
        self.assertEqual(weight_from_scalar_lift(13, 1, (16, 16)), (16, 16, 16, 16))

    def test_degenerate_multiplier(self):
        self.assertIsNone(scalar_lift_condition(2, 2))
        with self.assertRaises(PreconditionError):
            weight_from_scalar_lift(2, 2)


class TestSignCondition(SimpleTestCase):
    """Test the sign condition of the multiplicity formula."""

    def test_vector_lifts(self):
        for k in range(4, 21, 2):
            for j in range(2, 25, 2):
                self.assertTrue(sign_condition(vector_lift_parameter(k, j)), msg=f'(k, j) = ({k}, {j})')

    def test_scalar_lifts(self):
        """f in S_2k lifts to degree two exactly when k is odd."""
        for k in range(6, 20):
            self.assertEqual(sign_condition(scalar_lift_parameter(k)), k % 2 == 1, msg=f'k = {k}')

    def test_table(self):
        rows = sign_table(vector_lift_parameter(10, 4))
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0]['piece'], 'G10,4[2]')
        self.assertEqual((rows[0]['lhs'], rows[0]['rhs']), (1, 1))

    def test_root_number_same_parity(self):
        self.assertEqual(rs_root_number(Piece.elliptic(12), Piece.elliptic(16)), 1)

    def test_root_number_symmetric(self):
        a, b = Piece.elliptic(12, d=2), Piece.siegel2(10, 4)
        self.assertEqual(rs_root_number(a, b), rs_root_number(b, a))

    def test_scalar_inf_char(self):
        c = inf_char(scalar_lift_parameter(15))
        self.assertEqual(c.eigenvalues, (15, 14, 0, -14, -15))
        self.assertEqual(weight_from_infchar(c), weight_from_scalar_lift(15, 1))


class TestLiftEigenvalues(SimpleTestCase):
    """Test lambda(T(p)) of Saito-Kurokawa, Klingen-Eisenstein and Eisenstein lifts."""

    def test_saito_kurokawa(self):
        self.assertEqual(lift_eigenvalue_Tp(LiftKind.SAITO_KUROKAWA, 16, 2, Fraction(10)), 10 + 2 ** 14 + 2 ** 15)
        expected = QuadFieldElem.from_parts(53472, -96, 51349)
        self.assertEqual(lift_eigenvalue_Tp(LiftKind.SAITO_KUROKAWA, 16, 2, eigenform(30, '-')), expected)

    def test_klingen(self):
        phi16 = eigenform(16)
        self.assertEqual(lift_eigenvalue_Tp(LiftKind.KLINGEN, 16, 2, phi16), 216 * 16385)
        self.assertEqual(lift_eigenvalue_Tp(LiftKind.KLINGEN, 16, 2, phi16, degree=4), 118797996294360)

    def test_eisenstein(self):
        self.assertEqual(lift_eigenvalue_Tp(LiftKind.EISENSTEIN, 16, 2), 536920065)
        self.assertEqual(lift_eigenvalue_Tp(LiftKind.EISENSTEIN, 16, 2, degree=4), 18022646021156865)

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            lift_eigenvalue_Tp(LiftKind.SAITO_KUROKAWA, 16, 2, Fraction(1), degree=4)
        with self.assertRaises(PreconditionError):
            lift_eigenvalue_Tp(LiftKind.KLINGEN, 16, 2, Fraction(1), degree=2, base_degree=2)
        with self.assertRaises(PreconditionError):
            lift_eigenvalue_Tp(LiftKind.SAITO_KUROKAWA, 16, 2)


class TestEulerFactors(SimpleTestCase):
    """Test the degree two spinor Euler factor against the shape of a lift."""

    k, j, p, a = 10, 4, 2, 7

    def _matching(self, shift=0):
        w = self.p ** (2 * self.k + self.j - 3)
        s = self.p ** (self.k - 2) + self.p ** (self.j + self.k - 1)
        return spin_euler_deg2(self.a + s + shift, 2 * w + self.a * s, self.k, self.j, self.p)

    def test_palindromic(self):
        spin = spin_euler_deg2(5, 11, 16, 0, 3)
        w = 3 ** 29
        self.assertEqual(spin[4], w * w)
        self.assertEqual(spin[3], spin[1] * w)

    def test_lift_shape(self):
        harder = harder_euler_factor(self.a, self.k, self.j, self.p)
        self.assertEqual(harder, self._matching())
        self.assertEqual(harder.source, 'harder')

    def test_saito_kurokawa_coefficient(self):
        harder = harder_euler_factor(Fraction(10), 16, 0, 2)
        self.assertEqual(-harder[1], lift_eigenvalue_Tp(LiftKind.SAITO_KUROKAWA, 16, 2, Fraction(10)))

    def test_congruence(self):
        harder = harder_euler_factor(self.a, self.k, self.j, self.p)
        self.assertTrue(harder_euler_congruence(self._matching(97 * 5), harder, 97))
        self.assertFalse(harder_euler_congruence(self._matching(1), harder, 97))
        self.assertEqual(euler_valuations(self._matching(97), harder, 97)[0], 1)

    def test_incomparable(self):
        with self.assertRaises(PreconditionError):
            harder_euler_congruence(spin_euler_deg2(1, 1, 10, 4, 2), spin_euler_deg2(1, 1, 10, 4, 3), 97)


class TestIncongruence(SimpleTestCase):
    """Test the T(2) eigenvalue table of weight 16 in degree four."""

    def test_recomputed(self):
        values = recomputed_eigenvalues()
        self.assertEqual(values[8], 18022646021156865)
        self.assertEqual(values[9], 118797996294360)
        self.assertEqual(values[14], QuadFieldElem.from_parts(33566721 * 53472, 33566721 * 96, 51349))
        self.assertEqual(values[13], values[14].conjugate())

    def test_table(self):
        report = incongruence_table()
        self.assertTrue(report.passed, msg=str(report))
        self.assertTrue(any('h14' in note and 'differs' in note for note in report.notes))

    def test_ratio(self):
        self.assertTrue(incongruence_table(ratio=Fraction(97)).passed)
        self.assertFalse(incongruence_table(ratio=Fraction(1)).passed)


class TestSerializers(SimpleTestCase):
    """Test the A-parameter serializers."""

    def test_parse(self):
        psi = parse_parameter(json.dumps(VECTOR_SPEC))
        self.assertEqual(psi, vector_lift_parameter(10, 4))
        data = AParameterSerializer(psi).data
        self.assertEqual(data['rank'], 9)
        self.assertEqual(data['i0'], 0)
        self.assertEqual(data['pieces'][1]['weights'], ['21/2', '5/2'])

    def test_invalid(self):
        for text in ('{"pieces": [', '{"pieces": [{"kind": "siegel2", "k": 10}]}',
                     '{"pieces": [{"kind": "elliptic", "weight": 12}]}'):
            with self.assertRaises(PreconditionError, msg=text):
                parse_parameter(text)


class TestCommand(SimpleTestCase):
    """Test the lifts management command."""

    def _run(self, *args):
        out = StringIO()
        call_command('lifts', *args, stdout=out)
        return out.getvalue()

    def test_weights(self):
        data = json.loads(self._run('weights', '--lift', 'vector', '--k', '10', '--j', '4'))
        self.assertEqual(data['weight'], [12, 12, 6, 6])
        self.assertTrue(data['round_trip'])
        data = json.loads(self._run('weights', '--lift', 'scalar', '--k', '13'))
        self.assertEqual(data['weight'], [14, 14])

    def test_weights_needs_j(self):
        with self.assertRaises(CommandError):
            self._run('weights', '--lift', 'vector', '--k', '10')

    def test_sign_check(self):
        data = json.loads(self._run('sign-check', '--spec', json.dumps(VECTOR_SPEC)))
        self.assertTrue(data['sign_condition'])

    def test_eigenvalue(self):
        data = json.loads(self._run('eigenvalue', '--kind', 'eisenstein', '--k', '16', '--p', '2'))
        self.assertEqual(data['value'], '536920065')
        data = json.loads(self._run('eigenvalue', '--kind', 'saito-kurokawa', '--k', '16', '--p', '2',
                                    '--value', '10'))
        self.assertEqual(data['value'], str(10 + 2 ** 14 + 2 ** 15))

    def test_incongruence(self):
        self.assertIn('incongruence-4-24: pass', self._run('incongruence'))
