"""
Fourier coefficients of the pullback of the Eisenstein series by D_{k-l}

    epsilon(T1, T2)(U, V) = (k - l)! sum_R a(B_R, E~_{n1+n2,l}) Q_{k-l}(B_R, U, V)

over R in M_{n1,n2}(Z) with B_R = (T1, R/2; R^t/2, T2) positive semidefinite.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
from itertools import product
from math import factorial, isqrt

from django.conf import settings
from sympy import Rational, primefactors

from core.exceptions import PreconditionError
from diffop_algebra.kernels import block_invariants, det, kernel_variables, ql_terms
from eisenstein_hecke.coefficients import eisenstein_coeff
from eisenstein_hecke.models import EisensteinSpec
from local_siegel.backends import Fp_star
from local_siegel.characters import chi_T_star
from local_siegel.matrices import nondegenerate_part
from local_siegel.models import HalfIntegralMat
from pullback_epsilon.models import EpsilonValue
from special_values.zeta import L_neg, zeta_at

logger = logging.getLogger(__name__)


def is_psd(M):
    """Exact test by symmetric elimination: a zero pivot must sit on a zero row."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    for k in range(n):
        pivot = A[k][k]
        if pivot < 0:
            return False
        if pivot == 0:
            if any(A[k][j] for j in range(k + 1, n)):
                return False
            continue
        for i in range(k + 1, n):
            factor = A[i][k] / pivot
            if factor:
                for j in range(k + 1, n):
                    A[i][j] -= factor * A[k][j]
    return True


def block_rows(T1, T2, R):
    """The rows of 2B_R."""
    n1 = T1.n
    return ([list(T1.G[i]) + list(R[i]) for i in range(n1)]
            + [[R[i][j] for i in range(n1)] + list(T2.G[j]) for j in range(T2.n)])


def pullback_block(T1, T2, R):
    return HalfIntegralMat(block_rows(T1, T2, R))


def _candidate_rows(T1, T2, i):
    """Rows r of R for which (T1_ii, r/2; r^t/2, T2) is positive semidefinite."""
    t = T1.G[i][i] // 2
    ranges = [range(-isqrt(4 * t * (T2.G[j][j] // 2)), isqrt(4 * t * (T2.G[j][j] // 2)) + 1) for j in range(T2.n)]
    rows = []
    for r in product(*ranges):
        M = [[2 * t] + list(r)] + [[r[j]] + list(T2.G[j]) for j in range(T2.n)]
        if is_psd(M):
            rows.append(r)
    return rows


def enumerate_R(T1, T2):
    """Every integral n1 x n2 matrix R with B_R positive semidefinite, in lexicographic order.

    |R_ij| <= 2 sqrt(T1_ii T2_jj) bounds the entries; each row is filtered on its own
    principal block before the whole block is tested.
    """
    if not (T1.is_psd and T2.is_psd):
        raise PreconditionError(f'{T1!r} and {T2!r} must be positive semidefinite')
    if T1.n == 0 or T2.n == 0:
        return [tuple(tuple() for _ in range(T1.n))]
    candidates = [_candidate_rows(T1, T2, i) for i in range(T1.n)]
    result = []
    for R in product(*candidates):
        if is_psd(block_rows(T1, T2, R)):
            result.append(tuple(R))
    logger.debug('%d matrices R for %s, %s', len(result), T1, T2)
    return result


def _fraction(x):
    x = Rational(x)
    return Fraction(int(x.p), int(x.q))


def _numeric_matrix(M, rows, cols):
    if len(M) != rows or any(len(row) != cols for row in M):
        raise PreconditionError(f'Expected a {rows} x {cols} matrix, got {M}')
    return tuple(tuple(Fraction(x) for x in row) for row in M)


def _gram(T, X):
    """X T X^t over the rationals."""
    n = len(T)
    return [[sum((x[i] * T[i][j] * y[j] for i in range(n) for j in range(n)), Fraction(0)) for y in X] for x in X]


def kernel_value(terms, invariants):
    """Q = sum of coefficient * f1^a f2^b f3^c at the given invariants."""
    f1, f2, f3 = invariants['f1'], invariants['f2'], invariants['f3']
    total = 0
    for (a, b, c), coefficient in terms.items():
        total = total + coefficient * f1 ** a * f2 ** b * f3 ** c
    return total


def _check_weights(k, l, n1, n2):
    if k % 2 or l % 2 or k < l:
        raise PreconditionError(f'(k, l) = ({k}, {l}) must be even with k >= l')
    if n1 < 2 or n2 < 2:
        raise PreconditionError(f'n1 = {n1} and n2 = {n2} must both be at least 2')
    return EisensteinSpec(n1 + n2, l, normalized=True)


def _coefficients(spec, blocks, backends, workers):
    compute = partial(eisenstein_coeff, spec, backends=backends)
    if workers > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(compute, blocks, chunksize=max(1, len(blocks) // (4 * workers))))
    return [compute(B) for B in blocks]


def epsilon(k, l, n1, n2, T1, T2, U=None, V=None, backends=None, workers=None):
    """epsilon_{k,l,n1,n2}(T1, T2), as a polynomial in U and V or at numeric U and V."""
    spec = _check_weights(k, l, n1, n2)
    if T1.n != n1 or T2.n != n2:
        raise PreconditionError(f'T1 and T2 must have sizes {n1} and {n2}')
    numeric = U is not None or V is not None
    if numeric:
        U, V = _numeric_matrix(U, 2, n1), _numeric_matrix(V, 2, n2)
    workers = workers or settings.HARDERLAB['WORKERS']
    Rs = enumerate_R(T1, T2)
    blocks = [pullback_block(T1, T2, R) for R in Rs]
    coefficients = _coefficients(spec, blocks, backends, workers)
    logger.info('epsilon_%d,%d,%d,%d(%s, %s): %d blocks', k, l, n1, n2, T1, T2, len(blocks))
    if numeric:
        terms = {abc: _fraction(c) for abc, c in ql_terms(k - l, l).items()}
        X = [list(row) + [0] * n2 for row in U] + [[0] * n1 + list(row) for row in V]
        total = Fraction(0)
        for B, a in zip(blocks, coefficients):
            if a:
                total += a * kernel_value(terms, block_invariants(_gram(B.T, X)))
    else:
        var = kernel_variables(n1, n2, l)
        terms = {abc: var.constant(c) for abc, c in ql_terms(k - l, l).items()}
        total = var.ring.zero
        for B, a in zip(blocks, coefficients):
            if a:
                T = [[var.constant(Rational(x, 2)) for x in row] for row in B.G]
                total += kernel_value(terms, var.invariants(T=T)) * var.constant(Rational(a.numerator, a.denominator))
    value = total * factorial(k - l)
    return EpsilonValue(k, l, n1, n2, T1, T2, value, len(blocks), U, V)


def zeta_factor(block, A1, l):
    """The zeta and L-value factor of a (2, 4) block according to its rank."""
    r = block.rank
    if r == 6:
        return L_neg(l - 3, chi_T_star(block))
    if r == 5:
        return zeta_at(7 - 2 * l)
    if r == 4:
        return zeta_at(7 - 2 * l) * L_neg(l - 2, chi_T_star(A1))
    raise PreconditionError(f'{block!r} has rank {r}, outside 4..6')


def _closed_form_kernel(k, l, A0, A1, R, U1, U2):
    """P(B_R)(U1, U2) by its determinantal expansion."""
    RU = [[sum(R[i][m] * U2[j][m] for m in range(4)) for j in range(2)] for i in range(2)]
    W = _gram(A1.T, U2)
    half = [[x / 2 for x in row] for row in RU]
    inner = [list(A0.T[i]) + half[i] for i in range(2)] + [[half[0][j], half[1][j]] + W[j] for j in range(2)]
    f1, f2, f3 = det(RU) / 4, det(W) * A0.det, det(inner)
    total = Fraction(0)
    for (a, b, c), coefficient in ql_terms(k - l, l).items():
        total += _fraction(coefficient) * f1 ** a * f2 ** b * f3 ** c
    return factorial(k - l) * total * det(U1) ** (k - l)


def epsilon_24_closedform(k, l, A0, A1, U1, U2, backends=None):
    """epsilon_{k,l,2,4}(A0, A1)(U1, U2) with the rank-split zeta factors and local factors F_p*."""
    _check_weights(k, l, 2, 4)
    if A0.n != 2 or A1.n != 4 or not A1.is_positive_definite:
        raise PreconditionError('The closed form needs A0 of size 2 and A1 positive definite of size 4')
    U1, U2 = _numeric_matrix(U1, 2, 2), _numeric_matrix(U2, 2, 4)
    total = Fraction(0)
    Rs = enumerate_R(A0, A1)
    for R in Rs:
        block = pullback_block(A0, A1, R)
        r = block.rank
        value = Fraction(2 ** ((r + 1) // 2)) * zeta_factor(block, A1, l)
        reduced, _ = nondegenerate_part(block)
        for p in primefactors(reduced.det2T):
            value *= Fp_star(block, p, backends)(Fraction(p) ** (l - r - 1))
        if value:
            total += value * _closed_form_kernel(k, l, A0, A1, R, U1, U2)
    logger.info('closed form over %d matrices R', len(Rs))
    return EpsilonValue(k, l, 2, 4, A0, A1, total, len(Rs), U1, U2)
