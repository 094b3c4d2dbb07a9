"""
Django command for pullback coefficients epsilon and the congruence cases.
"""
import json

from core.exceptions import PreconditionError
from core.management.base import HarderLabCommand
from core.utils import format_exact
from local_siegel.backends import BruteForceBackend, FixtureBackend
from local_siegel.serializers import MatrixSerializer, parse_matrix
from pullback_epsilon.congruence_cases import CASES, verify_case
from pullback_epsilon.epsilon import epsilon, epsilon_24_closedform
from pullback_epsilon.hecke import hecke_expand


def _rows(text, name):
    if text is None:
        return None
    try:
        rows = json.loads(text)
    except ValueError as exc:
        raise PreconditionError(f'{name} JSON is malformed: {exc}') from exc
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise PreconditionError(f'{name} must be a JSON list of rows')
    return rows


class Command(HarderLabCommand):
    help = 'epsilon_{k,l,n1,n2}(T1, T2) of the pullback of E~_{n1+n2,l}, T^(m) expansions and the congruence cases.'

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='action', required=True)
        eps = self.add_subcommand(subparsers, 'epsilon', 'epsilon(T1, T2) by summation over R')
        eps.add_argument('--k', type=int, required=True)
        eps.add_argument('--l', type=int, required=True)
        eps.add_argument('--n1', type=int, required=True)
        eps.add_argument('--n2', type=int, required=True)
        eps.add_argument('--t1', required=True, help='2T1 as JSON rows or {"n": n, "twoT": [...]}.')
        eps.add_argument('--t2', required=True, help='2T2 as JSON rows or {"n": n, "twoT": [...]}.')
        eps.add_argument('--u1', default=None, help='U (2 x n1) as JSON rows; symbolic in U and V when omitted.')
        eps.add_argument('--u2', default=None, help='V (2 x n2) as JSON rows.')
        eps.add_argument('--closed-form', action='store_true',
                         help='n1 = 2, n2 = 4: use the rank-split closed form instead.')
        eps.add_argument('--fixtures', default=None)
        hecke = self.add_subcommand(subparsers, 'hecke', 'epsilon(T, N)|T^(m) as a combination of epsilon(T\', N)')
        hecke.add_argument('--m', type=int, required=True)
        hecke.add_argument('--t', required=True)
        hecke.add_argument('--k', type=int, required=True)
        verify = self.add_subcommand(subparsers, 'verify', 'Check one congruence case against its fixtures')
        verify.add_argument('--case', choices=list(CASES), required=True)
        verify.add_argument('--fixtures', default=None)
        verify.add_argument('--recompute', action='store_true',
                            help='Also recompute epsilon where the local series are available.')

    def run(self, **options):
        action = options['action']
        if action == 'verify':
            backends = [BruteForceBackend(self.workers(options)), FixtureBackend(options['fixtures'])]
            return verify_case(options['case'], options['fixtures'], options['recompute'], backends)
        if action == 'hecke':
            T = parse_matrix(options['t'])
            expansion = hecke_expand(options['m'], T, options['k'])
            return {'m': options['m'], 'k': options['k'], 'T': MatrixSerializer(T).data,
                    'terms': [{'T': MatrixSerializer(S).data, 'coefficient': c}
                              for S, c in sorted(expansion.terms.items(), key=lambda item: item[0].G)]}
        return self._epsilon(options)

    def _epsilon(self, options):
        T1, T2 = parse_matrix(options['t1']), parse_matrix(options['t2'])
        U, V = _rows(options['u1'], '--u1'), _rows(options['u2'], '--u2')
        backends = [BruteForceBackend(self.workers(options)), FixtureBackend(options['fixtures'])]
        k, l, n1, n2 = options['k'], options['l'], options['n1'], options['n2']
        if options['closed_form']:
            if (n1, n2) != (2, 4) or U is None or V is None:
                raise PreconditionError('The closed form is for n1 = 2, n2 = 4 at numeric U and V')
            value = epsilon_24_closedform(k, l, T1, T2, U, V, backends)
        else:
            value = epsilon(k, l, n1, n2, T1, T2, U, V, backends, self.workers(options))
        result = {'k': k, 'l': l, 'n1': n1, 'n2': n2, 'T1': MatrixSerializer(T1).data,
                  'T2': MatrixSerializer(T2).data, 'terms': value.terms}
        result['value'] = format_exact(value.value) if value.is_numeric else str(value.value.as_expr())
        return result
