"""
Django command for critical L-value ratios and their prime scan.
"""
from core.management.base import HarderLabCommand, add_common_arguments
from core.utils import format_exact
from lvalue_engine.ratios import harder_prime_scan, k_j


class Command(HarderLabCommand):
    help = 'L(k+j, f)/L(k_j, f) for the eigenforms f of weight 2k+j-2 and the primes dividing it.'

    def add_arguments(self, parser):
        parser.add_argument('--k', type=int, required=True)
        parser.add_argument('--j', type=int, required=True)
        parser.add_argument('--pmax', type=int, default=200)
        parser.add_argument('--prec', type=int, default=None, help='Starting working precision in bits.')
        add_common_arguments(parser)

    def run(self, **options):
        k, j = options['k'], options['j']
        results = harder_prime_scan(k, j, options['pmax'], options['prec'])
        return {
            'k': k,
            'j': j,
            'weight': 2 * k + j - 2,
            'k_j': k_j(k, j),
            'forms': [
                {
                    'form': result.form,
                    'ratio': format_exact(result.ratio.value),
                    'norm': format_exact(result.ratio.norm),
                    'prec_bits': result.ratio.prec_bits,
                    'factorization': {str(q): e for q, e in sorted(result.factorization.items())},
                    'qualifying_primes': [
                        {'p': hit.p, 'splitting': hit.splitting, 'valuations': list(hit.valuations)}
                        for hit in result.hits
                    ],
                }
                for result in results
            ],
        }
