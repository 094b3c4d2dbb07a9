"""
Django command for zeta and L-values at non-positive integers.
"""
from core.management.base import HarderLabCommand
from core.utils import format_exact
from special_values.models import KroneckerChar
from special_values.zeta import L_neg, Z_norm, bernoulli, fundamental_discriminant, zeta_neg


class Command(HarderLabCommand):
    help = 'Bernoulli numbers, zeta(1-k), L(1-m, chi_D) and the normalizer Z(n, l).'

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='action', required=True)
        zeta = self.add_subcommand(subparsers, 'zeta-neg', 'zeta(1 - k)')
        zeta.add_argument('--k', type=int, required=True)
        lneg = self.add_subcommand(subparsers, 'l-neg', 'L(1 - m, chi) for the character of Q(sqrt(D))')
        lneg.add_argument('--m', type=int, required=True)
        lneg.add_argument('--disc', type=int, required=True)
        znorm = self.add_subcommand(subparsers, 'z-norm', 'Z(n, l)')
        znorm.add_argument('--n', type=int, required=True)
        znorm.add_argument('--l', type=int, required=True)
        bern = self.add_subcommand(subparsers, 'bernoulli', 'B_n with B_1 = -1/2')
        bern.add_argument('--n', type=int, required=True)

    def run(self, **options):
        action = options['action']
        if action == 'zeta-neg':
            return {'k': options['k'], 'value': format_exact(zeta_neg(options['k']))}
        if action == 'l-neg':
            d, f = fundamental_discriminant(options['disc'])
            chi = KroneckerChar(d)
            return {'m': options['m'], 'disc': d, 'conductor_index': f,
                    'value': format_exact(L_neg(options['m'], chi))}
        if action == 'z-norm':
            return {'n': options['n'], 'l': options['l'], 'value': format_exact(Z_norm(options['n'], options['l']))}
        return {'n': options['n'], 'value': format_exact(bernoulli(options['n']))}
