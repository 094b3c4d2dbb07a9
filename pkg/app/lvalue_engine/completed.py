"""
Completed L-functions of level one eigenforms at integer arguments

Lambda(s, f) = sum_n a(n) [(2 pi n)^-s Gamma(s, 2 pi n) + (-1)^(k/2) (2 pi n)^(s-k) Gamma(k-s, 2 pi n)]

with the incomplete gamma function at a positive integer s given by the finite sum
Gamma(s, x) = (s-1)! e^-x sum_{i<s} x^i / i!.
"""
import logging
from functools import lru_cache

import mpmath

from core.exceptions import PrecisionError
from lvalue_engine.models import CompletedL, check_critical
from qexp_elliptic.eigen import eigenforms

logger = logging.getLogger(__name__)

GUARD_BITS = 32
MAX_TERMS = 4000


def incomplete_gamma(s, x):
    """Gamma(s, x) for a positive integer s."""
    term = mpmath.mpf(1)
    total = mpmath.mpf(1)
    for i in range(1, s):
        term = term * x / i
        total += term
    return mpmath.factorial(s - 1) * mpmath.exp(-x) * total


def terms_needed(k, s, prec_bits):
    """Number of q-coefficients after which the tail is below 2^-(prec_bits + GUARD_BITS).

    Uses |a(n)| <= 2 n^(k/2) and Gamma(s, x) x^-s <= e^(1-x) (s-1)! for x >= 1; past
    n = k consecutive bounds shrink by a factor below 1/100.
    """
    with mpmath.workprec(64):
        target = -(prec_bits + GUARD_BITS + 2) * mpmath.log(2)
        factorials = mpmath.log(mpmath.factorial(s - 1) + mpmath.factorial(k - s - 1))
        n = k
        while mpmath.log(2) + (k / 2) * mpmath.log(n) + 1 - 2 * mpmath.pi * n + factorials > target:
            n += 1
            if n > MAX_TERMS:
                raise PrecisionError(f'{prec_bits} bits need more than {MAX_TERMS} coefficients')
    return n


def form_at_precision(f, N):
    """f itself, or the same primitive form recomputed with at least N coefficients."""
    if f.precision >= N:
        return f
    for form in eigenforms(f.weight, N):
        if form.label == f.label:
            return form
    raise PrecisionError(f'No primitive form {f.name} at precision {N}')


def lambda_complete(f, s, prec_bits, sign=1):
    """Lambda(s, f) under sqrt(D) -> sign * sqrt(D), accurate to 2^-prec_bits."""
    k = f.weight
    check_critical(k, s)
    N = terms_needed(k, s, prec_bits)
    f = form_at_precision(f, N)
    value = _lambda_sum(f.name, tuple(f.coeffs[:N + 1]), k, s, prec_bits, sign)
    logger.debug('Lambda(%d, %s) with %d terms at %d bits', s, f.name, N, prec_bits)
    return CompletedL(f.name, sign, s, value, prec_bits)


@lru_cache(maxsize=512)
def _lambda_sum(name, coeffs, k, s, prec_bits, sign):
    epsilon = -1 if (k // 2) % 2 else 1
    with mpmath.workprec(prec_bits + GUARD_BITS):
        two_pi = 2 * mpmath.pi
        total = mpmath.mpf(0)
        for n in range(1, len(coeffs)):
            if not coeffs[n]:
                continue
            x = two_pi * n
            term = x ** (-s) * incomplete_gamma(s, x) + epsilon * x ** (s - k) * incomplete_gamma(k - s, x)
            total += coeffs[n].embed(sign) * term
    return total


def functional_equation_residual(f, s, prec_bits, sign=1):
    """|Lambda(s) - (-1)^(k/2) Lambda(k - s)|."""
    k = f.weight
    epsilon = -1 if (k // 2) % 2 else 1
    with mpmath.workprec(prec_bits + GUARD_BITS):
        return abs(lambda_complete(f, s, prec_bits, sign).value
                   - epsilon * lambda_complete(f, k - s, prec_bits, sign).value)
