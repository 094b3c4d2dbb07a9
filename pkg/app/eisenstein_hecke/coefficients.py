"""
Fourier coefficients of Siegel Eisenstein series

For T of rank m with nondegenerate part T~,

    a(T, E~_{n,k}) = 2^[(m+1)/2] * prod_{p | det 2T~} F_p(T~, p^(k-m-1)) * tail

where the tail is prod_{i=m/2+1..[n/2]} zeta(1+2i-2k) * L(1+m/2-k, chi_T*) for m even
and prod_{i=(m+1)/2..[n/2]} zeta(1+2i-2k) for m odd. a(0, E~_{n,k}) = Z(n, k), and the
classical series E_{n,k} = E~_{n,k} / Z(n, k) has constant term 1.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
from itertools import product
from math import isqrt

from django.conf import settings
from sympy import primefactors

from core.exceptions import PoleError, PreconditionError
from eisenstein_hecke.models import CoeffTable
from local_siegel.backends import local_series
from local_siegel.characters import chi_T_star
from local_siegel.matrices import canonical_binary, nondegenerate_part
from local_siegel.models import HalfIntegralMat
from special_values.zeta import L_neg, Z_norm, zeta_at

logger = logging.getLogger(__name__)


def _zeta_tail(n, k, start):
    value = Fraction(1)
    for i in range(start, n // 2 + 1):
        value *= zeta_at(1 + 2 * i - 2 * k)
    return value


def eisenstein_coeff(spec, T, backends=None):
    """a(T, E) for the Eisenstein series described by spec."""
    if T.n != spec.n:
        raise PreconditionError(f'{T!r} is not an index of degree {spec.n}')
    n, k = spec.n, spec.k
    Z = Z_norm(n, k)
    m = T.rank
    if m == 0:
        value = Z
    else:
        reduced, _ = nondegenerate_part(T)
        value = Fraction(2 ** ((m + 1) // 2))
        for p in primefactors(reduced.det2T):
            value *= local_series(reduced, p, backends)(Fraction(p) ** (k - m - 1))
        if m % 2:
            value *= _zeta_tail(n, k, (m + 1) // 2)
        else:
            if 1 + m // 2 - k > 0:
                raise PoleError(f'L({1 + m // 2 - k}, chi_T*) at {T}')
            value *= _zeta_tail(n, k, m // 2 + 1) * L_neg(k - m // 2, chi_T_star(T))
    logger.debug('a(%s, %s) = %s', T, spec, value)
    return value if spec.normalized else value / Z


def canonical_form(n):
    """Class representative used to key tables of degree n."""
    return canonical_binary if n == 2 else None


def eisenstein_table(spec, backends=None):
    """Lazily filled coefficient table of the Eisenstein series."""
    return CoeffTable(spec.n, spec.k, canonical=canonical_form(spec.n),
                      source=partial(eisenstein_coeff, spec, backends=backends))


def psd_indices(n, bound):
    """Every psd half-integral T of size n with diagonal entries at most bound."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for diagonal in product(range(bound + 1), repeat=n):
        ranges = []
        for i, j in pairs:
            limit = isqrt(4 * diagonal[i] * diagonal[j])
            ranges.append(range(-limit, limit + 1))
        for off in product(*ranges):
            G = [[2 * diagonal[i] if i == j else 0 for j in range(n)] for i in range(n)]
            for (i, j), x in zip(pairs, off):
                G[i][j] = G[j][i] = x
            T = HalfIntegralMat(G)
            if T.is_psd:
                yield T


def table_for(spec, bound, workers=None, backends=None):
    """CoeffTable over every psd T with diagonal entries at most bound."""
    table = CoeffTable(spec.n, spec.k, canonical=canonical_form(spec.n))
    keys = list(dict.fromkeys(table.canonical(T) if table.canonical else T for T in psd_indices(spec.n, bound)))
    workers = workers or settings.HARDERLAB['WORKERS']
    compute = partial(eisenstein_coeff, spec, backends=backends)
    logger.info('Filling %s over %d classes with %d worker(s)', spec, len(keys), workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(compute, keys))
    else:
        values = [compute(T) for T in keys]
    for T, value in zip(keys, values):
        table[T] = value
    return table
