"""
Local quadratic characters attached to half-integral matrices
"""
from fractions import Fraction

from sympy import legendre_symbol

from core.exceptions import PreconditionError
from exact_arith.primes import ord_p
from local_siegel.matrices import nondegenerate_part
from local_siegel.models import GammaFactor
from special_values.models import KroneckerChar
from special_values.zeta import fundamental_discriminant


def chi_p(a, p):
    """+1, -1 or 0 as Q_p(sqrt(a)) is Q_p, unramified quadratic or ramified quadratic."""
    a = Fraction(a)
    if a == 0:
        raise PreconditionError('chi_p is undefined at 0')
    e = ord_p(a, p)
    if e % 2:
        return 0
    u = a / Fraction(p) ** e
    unit = u.numerator * u.denominator
    if p == 2:
        unit %= 8
        if unit % 4 != 1:
            return 0
        return 1 if unit == 1 else -1
    return legendre_symbol(unit % p, p)


def _signed_det(B):
    if B.n % 2:
        raise PreconditionError(f'Size {B.n} is odd')
    if not B.is_nondegenerate:
        raise PreconditionError(f'{B!r} is degenerate')
    return (-1) ** (B.n // 2) * B.det


def xi_p(B, p):
    """chi_p((-1)^(n/2) det B) for B of even size."""
    return chi_p(_signed_det(B), p)


def chi_B(B):
    """Kronecker character of Q(sqrt((-1)^(n/2) det B))."""
    _signed_det(B)
    # same square class as (-1)^(n/2) det B, and divisible by 4
    d, _ = fundamental_discriminant(4 * (-1) ** (B.n // 2) * B.det2T)
    return KroneckerChar(d)


def chi_T_star(T):
    """chi of the nondegenerate part of T; trivial at rank 0."""
    rank = T.rank
    if rank % 2:
        raise PreconditionError(f'chi_T* needs even rank, {T!r} has rank {rank}')
    if rank == 0:
        return KroneckerChar(1)
    reduced, _ = nondegenerate_part(T)
    return chi_B(reduced)


def gamma_p(B, p):
    return GammaFactor(p, B.n, xi_p(B, p) if B.n % 2 == 0 else None)
