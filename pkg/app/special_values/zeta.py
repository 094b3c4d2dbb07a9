"""
Zeta and Dirichlet L-values at non-positive integers
"""
from fractions import Fraction
from math import isqrt

from core.exceptions import PoleError, PreconditionError
from exact_arith.models import squarefree_decomposition
from special_values.models import KroneckerChar, bernoulli_table


def bernoulli(n):
    return bernoulli_table.number(n)


def fundamental_discriminant(D):
    """Pair (d, f) with d the discriminant of Q(sqrt(D)) (1 for squares) and D = d*f**2."""
    if D == 0 or D % 4 not in (0, 1):
        raise PreconditionError(f'{D} is not congruent to 0 or 1 modulo 4')
    s, kernel = squarefree_decomposition(D)
    if kernel == 1:
        return 1, s
    d = kernel if kernel % 4 == 1 else 4 * kernel
    f = isqrt(D // d)
    assert d * f * f == D
    return d, f


def zeta_neg(k):
    """zeta(1 - k) = -B_k / k, with zeta(0) = -1/2."""
    if k <= 0:
        raise PreconditionError('zeta_neg needs a positive integer')
    if k == 1:
        return Fraction(-1, 2)
    return -bernoulli(k) / k


def L_neg(m, chi):
    """L(1 - m, chi) = -B_{m,chi} / m."""
    if m < 1:
        raise PreconditionError('L_neg needs a positive integer')
    if not isinstance(chi, KroneckerChar):
        chi = KroneckerChar(chi)
    if chi.is_trivial:
        return zeta_neg(m)
    return -bernoulli_table.generalized(m, chi) / m


def zeta_at(s):
    """zeta(s) for a negative odd integer s, or s = 0."""
    if s > 0 or (s < 0 and s % 2 == 0):
        raise PoleError(f'zeta({s}) is not a rational special value here')
    return zeta_neg(1 - s)


def Z_norm(n, l):
    """Z(n, l) = zeta(1 - l) * prod_{j=1..[n/2]} zeta(1 + 2j - 2l)."""
    if n < 1 or l < 1 or l % 2:
        raise PreconditionError('Z_norm needs n >= 1 and a positive even l')
    value = zeta_neg(l)
    for j in range(1, n // 2 + 1):
        arg = 1 + 2 * j - 2 * l
        if arg >= 0:
            raise PoleError(f'Z({n}, {l}) meets zeta({arg})')
        value *= zeta_neg(1 - arg)
    return value
