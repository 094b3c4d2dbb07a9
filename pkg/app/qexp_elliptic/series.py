"""
Level-one Eisenstein series and echelon cusp-form bases
"""
from fractions import Fraction
from functools import lru_cache

from sympy import divisor_sigma

from core.exceptions import PreconditionError
from qexp_elliptic.models import QExpansion
from special_values.zeta import bernoulli


def eisenstein_q(k, N):
    """E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n."""
    if k < 4 or k % 2:
        raise PreconditionError(f'E_{k} needs an even weight k >= 4')
    factor = -Fraction(2 * k) / bernoulli(k)
    return QExpansion(k, [Fraction(1)] + [factor * int(divisor_sigma(n, k - 1)) for n in range(1, N + 1)])


def delta_q(N):
    """Ramanujan's Delta = (E_4**3 - E_6**2)/1728."""
    return (eisenstein_q(4, N) ** 3 - eisenstein_q(6, N) ** 2).scale(Fraction(1, 1728))


def cusp_dimension(k):
    """Dimension of S_k(SL_2(Z)) for even k."""
    if k % 2 or k < 0:
        return 0
    if k % 12 == 2:
        return max(k // 12 - 1, 0)
    return k // 12


def _exponents(weight):
    """A pair (a, b) with 4a + 6b = weight."""
    for b in range(weight // 6 + 1):
        if (weight - 6 * b) % 4 == 0:
            return (weight - 6 * b) // 4, b
    raise PreconditionError(f'No modular form monomial of weight {weight}')


@lru_cache(maxsize=64)
def cusp_basis(k, N):
    """Echelon basis f_1..f_d of S_k with a(i, f_j) = delta_ij for 1 <= i, j <= d.

    Built from the monomials Delta^c E_4^a E_6^b, c = 1..d, which start at q^c.
    """
    if k < 12 or k % 2:
        if k % 2 == 0 and k >= 0:
            return ()
        raise PreconditionError(f'No cusp forms of weight {k}')
    d = cusp_dimension(k)
    if N < d + 1:
        raise PreconditionError(f'Precision {N} is too small for dimension {d}')
    delta, e4, e6 = delta_q(N), eisenstein_q(4, N), eisenstein_q(6, N)
    forms = []
    for c in range(1, d + 1):
        a, b = _exponents(k - 12 * c)
        forms.append(delta ** c * e4 ** a * e6 ** b)
    for i in reversed(range(d)):
        for j in range(i + 1, d):
            forms[i] = forms[i] - forms[j].scale(forms[i][j + 1])
    return tuple(QExpansion(k, [Fraction(x) for x in f.coeffs]) for f in forms)
