"""
Django command for local Siegel series polynomials.
"""
from core.management.base import HarderLabCommand, add_common_arguments
from local_siegel.backends import BruteForceBackend, FixtureBackend, local_series
from local_siegel.characters import chi_T_star, gamma_p, xi_p
from local_siegel.matrices import nondegenerate_part
from local_siegel.serializers import LocalSeriesSerializer, MatrixSerializer, parse_matrix
from local_siegel.series import local_series_bruteforce


class Command(HarderLabCommand):
    help = 'F_p(B, X) and gamma_p(B, X) of a half-integral matrix; degenerate input uses its nondegenerate part.'

    def add_arguments(self, parser):
        parser.add_argument('--p', type=int, required=True)
        parser.add_argument('--twoT', required=True, help='Matrix JSON {"n": n, "twoT": [[...]]} or the rows of 2T.')
        parser.add_argument('--depth', type=int, default=None, help='Also print the brute-force series at this depth.')
        parser.add_argument('--budget', type=int, default=None)
        parser.add_argument('--fixtures', default=None)
        add_common_arguments(parser)

    def run(self, **options):
        p = options['p']
        T = parse_matrix(options['twoT'])
        B = T if T.is_nondegenerate else nondegenerate_part(T)[0]
        backends = [BruteForceBackend(self.workers(options), options['budget']), FixtureBackend(options['fixtures'])]
        F = local_series(B, p, backends)
        result = {
            'p': p,
            'matrix': MatrixSerializer(T).data,
            'rank': B.n,
            'gamma': str(gamma_p(B, p).as_expr()) if B.n else '1',
            'F': str(F.as_expr()),
            'local_series': LocalSeriesSerializer(F).data,
            'depth_used': F.depth,
        }
        if B.n and B.n % 2 == 0:
            result['xi'] = xi_p(B, p)
            result['chi_star'] = str(chi_T_star(T))
        if options['depth'] is not None:
            result['series'] = local_series_bruteforce(T, p, options['depth'], self.workers(options), options['budget'])
        return result
