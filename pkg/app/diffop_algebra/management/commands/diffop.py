"""
Django command for the kernels Q_l and the differential operator identities.
"""
from core.management.base import HarderLabCommand
from diffop_algebra.identities import verify_identities
from diffop_algebra.kernels import Ql_kernel, generating_function_check, ql_terms


class Command(HarderLabCommand):
    help = 'Q_l(T, U, V) of the depth two pullback operators, and the verification of their calculus.'

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='action', required=True)
        ql = self.add_subcommand(subparsers, 'ql', 'Q_l as a polynomial in F1, F2, F3 and in T, U, V')
        ql.add_argument('--l', type=int, required=True)
        ql.add_argument('--n1', type=int, default=2)
        ql.add_argument('--n2', type=int, default=2)
        ql.add_argument('--k', type=int, default=None, help='Numeric weight; formal k when omitted.')
        ql.add_argument('--expand', action='store_true', help='Also print Q_l in the entries of T, U, V.')
        verify = self.add_subcommand(subparsers, 'verify-identities',
                                     'Fundamental formulas, lemmas, D_l(delta^-k) and the pullback constants')
        verify.add_argument('--l', type=int, default=2, help='Largest l for D_l(delta^-k).')
        verify.add_argument('--k', type=int, default=None, help='Numeric weight; formal k when omitted.')

    def run(self, **options):
        if options['action'] == 'verify-identities':
            return verify_identities(options['l'], options['k'])
        l, n1, n2, k = options['l'], options['n1'], options['n2'], options['k']
        Q = Ql_kernel(l, n1, n2, k)
        result = {
            'l': l,
            'n1': n1,
            'n2': n2,
            'k': 'k' if k is None else k,
            'terms': {f'F1^{a} F2^{b} F3^{c}': str(coefficient)
                      for (a, b, c), coefficient in ql_terms(l, k).items()},
            'monomials': len(Q),
            'generating_function': generating_function_check(l, k),
        }
        if options['expand']:
            result['polynomial'] = str(Q.as_expr())
        return result
