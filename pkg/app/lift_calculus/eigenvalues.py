"""
Hecke eigenvalues of lifts and the degree two spinor Euler factor
"""
import logging

from django.db import models

from core.exceptions import PreconditionError
from exact_arith.models import QuadFieldElem
from exact_arith.primes import ord_frkp, ord_p
from lift_calculus.models import SpinEuler

logger = logging.getLogger(__name__)


class LiftKind(models.TextChoices):
    SAITO_KUROKAWA = 'saito-kurokawa', 'Saito-Kurokawa lift to degree two'
    KLINGEN = 'klingen', 'Klingen-Eisenstein series'
    EISENSTEIN = 'eisenstein', 'Siegel Eisenstein series'


def _coefficient(f, p):
    if f is None:
        raise PreconditionError('This lift needs the eigenvalue of the form it is built from')
    return f.a(p) if hasattr(f, 'a') else f


def lift_eigenvalue_Tp(kind, k, p, f=None, degree=2, base_degree=1):
    """lambda(T(p)) of a scalar weight k lift to the given degree.

    f is the form lifted, or directly its T(p) eigenvalue. The Klingen-Eisenstein
    series multiplies lambda_f(T(p)) by prod (1 + p^(k-i)) over base_degree < i <= degree.
    """
    if kind == LiftKind.SAITO_KUROKAWA:
        if degree != 2:
            raise PreconditionError('The Saito-Kurokawa lift has degree two')
        return _coefficient(f, p) + p ** (k - 2) + p ** (k - 1)
    if kind == LiftKind.KLINGEN:
        if not 0 < base_degree < degree:
            raise PreconditionError(f'Cannot lift from degree {base_degree} to degree {degree}')
        value = _coefficient(f, p)
        for i in range(base_degree + 1, degree + 1):
            value = value * (1 + p ** (k - i))
        return value
    if kind == LiftKind.EISENSTEIN:
        value = 1
        for i in range(1, degree + 1):
            value *= 1 + p ** (k - i)
        return value
    raise PreconditionError(f'Unsupported lift kind {kind!r}')


def _multiply(a, b):
    product = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            product[i + j] = product[i + j] + x * y
    return product


def spin_euler_deg2(lam_T, lam_rho, k, j, p):
    """1 - lambda(T(p)) X + lambda(rho(p)) X^2 - lambda(T(p)) p^(2k+j-3) X^3 + p^(4k+2j-6) X^4."""
    w = p ** (2 * k + j - 3)
    return SpinEuler((1, -lam_T, lam_rho, -lam_T * w, w * w), k, j, p)


def harder_euler_factor(a_p, k, j, p):
    """L_p(X, f)(1 - p^(k-2) X)(1 - p^(j+k-1) X) with L_p(X, f) = 1 - a(p) X + p^(2k+j-3) X^2."""
    coeffs = _multiply(_multiply([1, -a_p, p ** (2 * k + j - 3)], [1, -p ** (k - 2)]), [1, -p ** (j + k - 1)])
    return SpinEuler(tuple(coeffs), k, j, p, source='harder')


def _valuation(x, prime):
    if isinstance(prime, int):
        return ord_p(QuadFieldElem.coerce(x).norm(), prime) if isinstance(x, QuadFieldElem) else ord_p(x, prime)
    return ord_frkp(x, prime)


def euler_valuations(spin, other, prime):
    """ord of the difference of every non-constant coefficient."""
    return [_valuation(spin[i] - other[i], prime) for i in range(1, 5)]


def harder_euler_congruence(spin, other, prime):
    """Whether the two quartics agree coefficientwise modulo prime."""
    if (spin.k, spin.j, spin.p) != (other.k, other.j, other.p):
        raise PreconditionError('Euler factors at different (k, j, p) are not comparable')
    valuations = euler_valuations(spin, other, prime)
    logger.debug('Euler factor valuations at %s: %s', prime, valuations)
    return all(v >= 1 for v in valuations)
