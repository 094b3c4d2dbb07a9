"""
Siegel Phi operator and the degree two Hecke operator T(p)
"""
import logging
from fractions import Fraction

from core.exceptions import MissingCoefficient, NotEigenformError, PreconditionError
from eisenstein_hecke.models import CoeffTable
from local_siegel.models import HalfIntegralMat

logger = logging.getLogger(__name__)

INDEX_MATRICES = [
    HalfIntegralMat.diagonal(1, 0),
    HalfIntegralMat([[2, 1], [1, 2]]),
    HalfIntegralMat.diagonal(1, 1),
    HalfIntegralMat([[2, 1], [1, 4]]),
    HalfIntegralMat.diagonal(2, 0),
]


def phi_operator(table):
    """Table of Phi(F): a(T, Phi F) = a(T + 0, F)."""
    n = table.degree
    if n < 1:
        raise PreconditionError('Phi needs a table of degree >= 1')
    result = CoeffTable(n - 1, table.weight)
    for T, value in table.items():
        if all(x == 0 for x in T.G[n - 1]):
            result[T.block(range(n - 1))] = value
    if table.source is not None:
        result.source = lambda T: table[T.with_zeros(1)]
    return result


def coset_representatives(p):
    """The p + 1 matrices D whose columns span the sublattices of index p in Z^2."""
    return [[[1, 0], [j, p]] for j in range(p)] + [[[p, 0], [0, 1]]]


def hecke_Tp_deg2(coeffs, k, p, T):
    """a(T, F|T(p)) = a(pT) + p^(2k-3) a(T/p) + p^(k-2) sum_D a(T[D]/p)."""
    if coeffs.degree != 2 or T.n != 2:
        raise PreconditionError('T(p) is implemented in degree two only')
    value = Fraction(coeffs[T.scaled(p)])
    divided = T.divided(p)
    if divided is not None:
        value += Fraction(p) ** (2 * k - 3) * coeffs[divided]
    inner = Fraction(0)
    for D in coset_representatives(p):
        index = T.transform(D).divided(p)
        if index is not None:
            inner += coeffs[index]
    return value + Fraction(p) ** (k - 2) * inner


def eigenvalue_extract(coeffs, k, p, indices=None, minimum=3):
    """lambda(T(p)) from a(T, F|T(p)) / a(T, F), agreeing across at least minimum index matrices."""
    ratios = {}
    for T in indices or INDEX_MATRICES:
        try:
            a = coeffs[T]
            if a == 0:
                continue
            ratios[T] = hecke_Tp_deg2(coeffs, k, p, T) / a
        except MissingCoefficient as exc:
            logger.debug('Index matrix %s skipped: %s', T, exc)
    if not ratios:
        raise NotEigenformError(f'No index matrix with a nonzero coefficient in {coeffs!r}')
    values = set(ratios.values())
    if len(values) > 1:
        raise NotEigenformError(
            f'T({p}) ratios disagree: ' + ', '.join(f'{T}: {r}' for T, r in ratios.items()))
    if len(ratios) < minimum:
        raise MissingCoefficient(f'Only {len(ratios)} index matrix(es) available for T({p}), {minimum} needed')
    eigenvalue = values.pop()
    logger.info('lambda(T(%d)) = %s from %d index matrices', p, eigenvalue, len(ratios))
    return eigenvalue
