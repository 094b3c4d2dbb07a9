"""
Django command for lift weights, sign conditions and lift eigenvalues.
"""
import json

from core.exceptions import PreconditionError
from core.management.base import HarderLabCommand
from core.utils import format_exact, parse_exact
from lift_calculus.eigenvalues import LiftKind, lift_eigenvalue_Tp
from lift_calculus.incongruence import incongruence_table
from lift_calculus.parameters import (
    inf_char,
    scalar_lift_condition,
    scalar_lift_parameter,
    sign_table,
    vector_lift_conditions,
    vector_lift_parameter,
    weight_from_infchar,
    weight_from_scalar_lift,
    weight_from_vector_lift,
)
from lift_calculus.serializers import AParameterSerializer, parse_parameter
from qexp_elliptic.eigen import eigenform


def _base_weights(text):
    try:
        weights = json.loads(text) if text else []
    except ValueError as exc:
        raise PreconditionError(f'Base weight JSON is malformed: {exc}') from exc
    if not isinstance(weights, list) or not all(isinstance(k, int) for k in weights):
        raise PreconditionError('Base weights must be a JSON list of integers')
    return tuple(weights)


class Command(HarderLabCommand):
    help = 'Weights and sign conditions of lifts from A-parameters, and T(p) eigenvalues of lifts.'

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='action', required=True)
        weights = self.add_subcommand(
            subparsers, 'weights', 'Weight k\' of a lift of type A^(I) or of an elliptic form')
        weights.add_argument('--lift', choices=['vector', 'scalar'], required=True,
                             help='vector: F in S_(k+j,k); scalar: f in S_2k.')
        weights.add_argument('--k', type=int, required=True)
        weights.add_argument('--j', type=int, default=None)
        weights.add_argument('--d', type=int, default=1)
        weights.add_argument('--base', default=None, help='JSON list of the base weights k_1 >= ... >= k_n.')
        sign = self.add_subcommand(subparsers, 'sign-check', 'Sign condition of an A-parameter')
        sign.add_argument('--spec', required=True, help='JSON {"pieces": [{"kind": ..., "d": ...}, ...]}')
        eigen = self.add_subcommand(subparsers, 'eigenvalue', 'lambda(T(p)) of a lift')
        eigen.add_argument('--kind', choices=LiftKind.values, required=True)
        eigen.add_argument('--k', type=int, required=True)
        eigen.add_argument('--p', type=int, required=True)
        eigen.add_argument('--degree', type=int, default=2)
        eigen.add_argument('--base-degree', type=int, default=1)
        eigen.add_argument('--form-weight', type=int, default=None, help='Weight of the elliptic form lifted.')
        eigen.add_argument('--label', default='+')
        eigen.add_argument('--value', default=None, help='The eigenvalue of the form lifted, as an exact string.')
        table = self.add_subcommand(subparsers, 'incongruence', 'T(2) eigenvalues of weight 16 in degree 4 mod 97')
        table.add_argument('--fixtures', default=None)

    def run(self, **options):
        action = options['action']
        if action == 'weights':
            return self._weights(options)
        if action == 'sign-check':
            psi = parse_parameter(options['spec'])
            rows = sign_table(psi)
            return {'parameter': AParameterSerializer(psi).data,
                    'inf_char': [str(x) for x in inf_char(psi).eigenvalues],
                    'sign_table': rows, 'sign_condition': all(row['holds'] for row in rows)}
        if action == 'eigenvalue':
            f = None
            if options['value'] is not None:
                f = parse_exact(options['value'])
            elif options['form_weight'] is not None:
                f = eigenform(options['form_weight'], options['label'])
            value = lift_eigenvalue_Tp(options['kind'], options['k'], options['p'], f,
                                       options['degree'], options['base_degree'])
            return {'kind': options['kind'], 'k': options['k'], 'p': options['p'], 'value': format_exact(value)}
        return incongruence_table(options['fixtures'])

    def _weights(self, options):
        k, d, base = options['k'], options['d'], _base_weights(options['base'])
        if options['lift'] == 'vector':
            j = options['j']
            if j is None:
                raise PreconditionError('A vector valued lift needs --j')
            conditions = vector_lift_conditions(k, j, base, d)
            weight = weight_from_vector_lift(k, j, base, d)
            psi = vector_lift_parameter(k, j, d) if not base else None
        else:
            conditions = {'condition': scalar_lift_condition(k, d, base)}
            weight = weight_from_scalar_lift(k, d, base)
            psi = scalar_lift_parameter(k, d) if not base else None
        result = {'lift': options['lift'], 'k': k, 'd': d, 'base': list(base), 'conditions': conditions,
                  'weight': list(weight)}
        if psi is not None:
            result['parameter'] = str(psi)
            result['round_trip'] = list(weight_from_infchar(inf_char(psi))) == list(weight)
        return result
