"""
Recognition of rationals from high-precision approximations
"""
import logging
from decimal import Decimal
from fractions import Fraction

import mpmath

from core.exceptions import PrecisionError, ReconstructionError

logger = logging.getLogger(__name__)


def height_for_precision(prec_bits):
    """Largest denominator bound that prec_bits of accuracy can certify."""
    return 2 ** max((prec_bits - 32) // 2, 1)


def tolerance_for_precision(prec_bits, magnitude=1):
    return Fraction(max(1.0, abs(float(magnitude)))) / 2 ** (prec_bits - 10)


def to_fraction(x):
    """Exact rational value of a float, mpf, Decimal, or decimal string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, float)):
        return Fraction(x)
    if isinstance(x, mpmath.mpf):
        man, exp = x.man_exp
        return Fraction(int(man)) * Fraction(2) ** int(exp)
    return Fraction(Decimal(str(x).strip()))


def _default_tolerance(x):
    if isinstance(x, float):
        return Fraction(1, 2 ** 40)
    if isinstance(x, mpmath.mpf):
        return tolerance_for_precision(mpmath.mp.prec, x)
    text = str(x).strip().lstrip('+-')
    digits = len(text.split('.', 1)[1]) if '.' in text else 0
    return Fraction(1, 10 ** max(digits - 3, 0))


def rational_reconstruct(x, H, tol=None):
    """The rational p/q with q <= H closest to x, required to lie within tol.

    Continued-fraction convergents via Fraction.limit_denominator; returns the
    pair (value, residual).
    """
    value = to_fraction(x)
    tol = _default_tolerance(x) if tol is None else Fraction(tol)
    if 2 * H * H * tol >= 1:
        raise PrecisionError(f'Tolerance {float(tol):.3g} cannot separate rationals of height {H}')
    candidate = value.limit_denominator(H)
    residual = abs(value - candidate)
    if residual > tol:
        raise ReconstructionError(
            f'No rational of height <= {H} within {float(tol):.3g} (best {candidate}, residual {float(residual):.3g})')
    logger.debug('Reconstructed %s with residual %.3g', candidate, float(residual))
    return candidate, residual
