"""
Constants c_r of the explicit pullback formula for the depth two operators D_l
"""
import random
from fractions import Fraction
from math import comb, factorial, prod

from core.exceptions import PreconditionError
from core.models import Report
from diffop_algebra.models import PiMultiple, pochhammer

HALF = Fraction(1, 2)


def _check(k, l, r=2):
    if k % 2 or k <= r + 1:
        raise PreconditionError(f'k = {k} must be even with k > {r + 1}')
    if l < 0 or r < 2:
        raise PreconditionError(f'l = {l} and r = {r} must satisfy l >= 0 and r >= 2')


def constant_c(r, k, l):
    """c_r for the weight k and the operator D_l, 2 <= r <= min(n1, n2)."""
    _check(k, l, r)
    denominator = (factorial(l) * prod(2 * k + 2 * l - nu for nu in range(2, 5))
                   * prod(2 * k + l - mu - nu for mu in (1, 2) for nu in range(3, r + 1))
                   * prod(2 * k - mu - nu for mu in range(3, r + 1) for nu in range(mu, r + 1)))
    value = (-1) ** (r * k // 2 + l) * pochhammer(2 * k - 3, l) * pochhammer(2 * k - 1, 2 * l) / denominator
    return PiMultiple.of(value, (r + 1) ** 2 - (r * k + 2 * l) - 2 * l, r * (r + 1) // 2)


def c0_rho2(k, l):
    """The degree two constant c(0, rho_2) in closed form."""
    _check(k, l)
    value = (-1) ** (k + l) * pochhammer(2 * k - 3, l) * pochhammer(2 * k - 1, 2 * l - 3) / factorial(l)
    return PiMultiple.of(value, 9 - 2 * (k + 2 * l), 3)


def tilde_c2(k, l):
    """(-1)^(k+l) 2^(6-2(k+l)) pi^3 Gamma(k+l-1) Gamma(k+l-3/2)^2 Gamma(k+l-2)

    divided by Gamma(k) Gamma(k-1/2) Gamma(k-1) Gamma(k-3/2).
    """
    _check(k, l)
    k = Fraction(k)
    value = ((-1) ** int(k + l) * pochhammer(k, l - 1) * pochhammer(k - HALF, l - 1)
             * pochhammer(k - 3 * HALF, l) * pochhammer(k - 1, l - 1))
    return PiMultiple.of(value, 6 - 2 * int(k + l), 3)


def d_kl(k, l):
    """Ratio of D_l to the normalized degree two holomorphic operator of the same weight."""
    _check(k, l)
    denominator = prod((k + l - 2 - i * HALF) * (k + l - 3 * HALF - i * HALF) for i in range(1, l + 1))
    return Fraction(comb(2 * k + 2 * l - 5, l)) / denominator


def verify_constants(report=None, samples=5, seed=0):
    """c_2 against c(0, rho_2), and c(0, rho_2) against d_kl * tilde_c2 for l >= 1."""
    report = report or Report('pullback constants')
    rng = random.Random(seed)
    for _ in range(samples):
        k, l = 2 * rng.randint(3, 15), rng.randint(1, 10)
        report.check(f'c_2 = c(0, rho_2) at (k, l) = ({k}, {l})', str(c0_rho2(k, l)), str(constant_c(2, k, l)))
        report.check(f'd_kl tilde_c2 = c(0, rho_2) at (k, l) = ({k}, {l})', str(c0_rho2(k, l)),
                     str(tilde_c2(k, l) * d_kl(k, l)))
    for k in (4, 6, 12):
        report.check(f'c_2 = c(0, rho_2) at (k, l) = ({k}, 0)', str(c0_rho2(k, 0)), str(constant_c(2, k, 0)))
    return report
