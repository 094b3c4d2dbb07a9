"""
Hecke operators on level-one q-expansions
"""
from math import gcd

from sympy import divisors

from core.exceptions import PreconditionError
from qexp_elliptic.models import QExpansion


def hecke_T_deg1(m, k, f, N_out=None):
    """f|T(m) with a(n, f|T(m)) = sum_{d | (m, n)} d^(k-1) a(mn/d^2)."""
    if m < 1:
        raise PreconditionError('T(m) needs m >= 1')
    if N_out is None:
        N_out = f.precision // m
    if m * N_out > f.precision:
        raise PreconditionError(f'T({m}) up to q^{N_out} needs precision {m * N_out}, have {f.precision}')
    coeffs = []
    for n in range(N_out + 1):
        g = gcd(m, n)
        coeffs.append(sum(d ** (k - 1) * f[m * n // (d * d)] for d in divisors(g)))
    return QExpansion(k, coeffs)


def coordinates(f, basis):
    """Coordinates of a cusp form on an echelon basis, read off a(1)..a(d)."""
    return [f[i + 1] for i in range(len(basis))]


def hecke_matrix(m, k, basis):
    """Matrix of T(m) on an echelon basis; column j holds the image of basis[j]."""
    images = [hecke_T_deg1(m, k, f) for f in basis]
    d = len(basis)
    return [[images[j][i + 1] for j in range(d)] for i in range(d)]
