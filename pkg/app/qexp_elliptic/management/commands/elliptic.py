"""
Django command for level-one elliptic eigenforms.
"""
from core.management.base import HarderLabCommand
from qexp_elliptic.eigen import eigenforms
from qexp_elliptic.serializers import PrimitiveFormSerializer, QExpansionSerializer
from qexp_elliptic.series import cusp_basis, cusp_dimension


class Command(HarderLabCommand):
    help = 'Cusp-form bases and primitive forms of level one.'

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='action', required=True)
        for name, help_text in (('eigenform', 'Primitive forms with exact coefficients'),
                                ('basis', 'Echelon basis of S_k')):
            sub = self.add_subcommand(subparsers, name, help_text)
            sub.add_argument('--weight', type=int, required=True)
            sub.add_argument('--prec', type=int, default=None)

    def run(self, **options):
        k, N = options['weight'], options['prec']
        if options['action'] == 'basis':
            basis = cusp_basis(k, N or max(cusp_dimension(k) + 1, 10))
            return {'weight': k, 'dimension': len(basis), 'basis': QExpansionSerializer(basis, many=True).data}
        return {'weight': k, 'forms': PrimitiveFormSerializer(eigenforms(k, N), many=True).data}
