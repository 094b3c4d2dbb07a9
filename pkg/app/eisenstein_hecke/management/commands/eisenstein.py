"""
Django command for Siegel Eisenstein Fourier coefficients.
"""
from core.management.base import HarderLabCommand, add_common_arguments
from core.utils import format_exact
from eisenstein_hecke.coefficients import eisenstein_coeff, eisenstein_table
from eisenstein_hecke.models import EisensteinSpec
from eisenstein_hecke.operators import eigenvalue_extract, hecke_Tp_deg2
from local_siegel.backends import BruteForceBackend, FixtureBackend
from local_siegel.serializers import MatrixSerializer, parse_matrix


class Command(HarderLabCommand):
    help = 'a(T, E_{n,k}) of a Siegel Eisenstein series; in degree two also the T(p) action.'

    def add_arguments(self, parser):
        parser.add_argument('--degree', type=int, required=True)
        parser.add_argument('--weight', type=int, required=True)
        parser.add_argument('--twoT', default=None, help='Matrix JSON {"n": n, "twoT": [[...]]} or the rows of 2T.')
        parser.add_argument('--normalized', action='store_true', help='Use the Z(n, k)-normalized series.')
        parser.add_argument('--hecke', type=int, metavar='P', default=None,
                            help='Degree two: a(T, E|T(p)) and the T(p) eigenvalue.')
        parser.add_argument('--fixtures', default=None)
        add_common_arguments(parser)

    def run(self, **options):
        spec = EisensteinSpec(options['degree'], options['weight'], options['normalized'])
        backends = [BruteForceBackend(self.workers(options)), FixtureBackend(options['fixtures'])]
        result = {'series': str(spec), 'degree': spec.n, 'weight': spec.k, 'normalized': spec.normalized}
        T = parse_matrix(options['twoT']) if options['twoT'] else None
        if T is not None:
            result['matrix'] = MatrixSerializer(T).data
            result['rank'] = T.rank
            result['value'] = format_exact(eisenstein_coeff(spec, T, backends))
        p = options['hecke']
        if p is not None:
            table = eisenstein_table(spec, backends)
            result['p'] = p
            if T is not None:
                result['hecke_value'] = format_exact(hecke_Tp_deg2(table, spec.k, p, T))
            result['eigenvalue'] = format_exact(eigenvalue_extract(table, spec.k, p))
        return result
