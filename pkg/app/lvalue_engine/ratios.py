"""
Exact critical L-value ratios and the prime scan over them
"""
import logging
from fractions import Fraction
from math import isqrt

import mpmath
from django.conf import settings
from sympy import factorint, primerange

from core.exceptions import PreconditionError, PrecisionError, ReconstructionError
from exact_arith.models import QuadFieldElem
from exact_arith.primes import prime_split, valuations_above
from exact_arith.reconstruct import height_for_precision, rational_reconstruct, tolerance_for_precision
from lvalue_engine.completed import GUARD_BITS, lambda_complete
from lvalue_engine.models import CriticalRatio, PrimeHit, ScanResult, check_critical
from qexp_elliptic.eigen import eigenforms

logger = logging.getLogger(__name__)

FACTOR_LIMIT = 10 ** 6


def k_j(k, j):
    """Second argument of the ratio: k + j/2 when 4 | j, else k + j/2 + 1."""
    if j % 2:
        raise PreconditionError(f'j = {j} must be even')
    return k + j // 2 if j % 4 == 0 else k + j // 2 + 1


def _rational(x, prec_bits):
    tol = tolerance_for_precision(prec_bits, x)
    H = min(height_for_precision(prec_bits), isqrt(int(1 / (4 * tol))))
    return rational_reconstruct(x, H, tol)[0]


def _square_root(q):
    """Rational square root of q, or None."""
    if q < 0:
        return None
    num, den = isqrt(q.numerator), isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        return None
    return Fraction(num, den)


def _from_trace_norm(trace, norm, D, approx):
    """The root of X^2 - trace X + norm in Q(sqrt(D)) whose first embedding is nearest approx."""
    disc = trace * trace - 4 * norm
    root = _square_root(disc / D)
    if root is None:
        raise ReconstructionError(f'Discriminant {disc} of the recognized quadratic is not in Q(sqrt({D}))^2')
    candidates = [QuadFieldElem.from_parts(trace / 2, sign * root / 2, D) for sign in (1, -1)]
    return min(candidates, key=lambda x: abs(x.embed(1) - approx))


def _recognize(f, l1, l2, prec_bits):
    D = f.hecke_field_D
    signs = (1, -1) if D else (1,)
    with mpmath.workprec(prec_bits + GUARD_BITS):
        ratios = []
        for sign in signs:
            denominator = lambda_complete(f, l2, prec_bits, sign).value
            if abs(denominator) < mpmath.mpf(2) ** (-(prec_bits // 2)):
                raise PreconditionError(f'L({l2}, {f.name}) vanishes to working precision')
            ratios.append(lambda_complete(f, l1, prec_bits, sign).value / denominator)
        if D:
            value = _from_trace_norm(_rational(ratios[0] + ratios[1], prec_bits),
                                     _rational(ratios[0] * ratios[1], prec_bits), D, ratios[0])
        else:
            value = QuadFieldElem.from_parts(_rational(ratios[0], prec_bits))
        for sign, approx in zip(signs, ratios):
            tol = tolerance_for_precision(prec_bits, approx)
            if abs(value.embed(sign) - approx) > mpmath.mpf(tol.numerator) / tol.denominator:
                raise ReconstructionError(f'{value} does not re-embed onto the computed ratio')
    return value


def critical_ratio(f, l1, l2, prec_bits=None):
    """L(l1, f)/L(l2, f) with its Gamma_C factors, as an exact element of the Hecke field."""
    if (l1 - l2) % 2:
        raise PreconditionError(f'l1 = {l1} and l2 = {l2} differ in parity')
    check_critical(f.weight, l1)
    check_critical(f.weight, l2)
    if l1 == l2:
        return CriticalRatio(f, l1, l2, QuadFieldElem(1))
    prec = prec_bits or settings.HARDERLAB['PREC_BITS']
    ceiling = max(prec, settings.HARDERLAB['MAX_PREC_BITS'])
    while True:
        try:
            value = _recognize(f, l1, l2, prec)
        except ReconstructionError as exc:
            if 2 * prec > ceiling:
                raise PrecisionError(f'{f.name}: no exact ratio L({l1})/L({l2}) up to {prec} bits') from exc
            logger.info('%s: raising precision to %d bits (%s)', f.name, 2 * prec, exc)
            prec *= 2
            continue
        logger.debug('%s: L(%d)/L(%d) = %s at %d bits', f.name, l1, l2, value, prec)
        return CriticalRatio(f, l1, l2, value, prec)


def factorization(x):
    """Factorization of the numerator of the norm; a composite cofactor is kept as one key."""
    numerator = abs(Fraction(QuadFieldElem.coerce(x).norm()).numerator)
    if numerator < 2:
        return {}
    return {int(q): int(e) for q, e in factorint(numerator, limit=FACTOR_LIMIT).items()}


def harder_prime_scan(k, j, p_max, prec_bits=None):
    """Primes 2k+j-2 < p <= p_max with an ideal above p dividing L(k+j, f)/L(k_j, f).

    f runs over the primitive forms of weight 2k+j-2, one per Galois orbit.
    """
    weight = 2 * k + j - 2
    second = k_j(k, j)
    results = []
    for f in eigenforms(weight):
        if f.label == '-':
            continue
        ratio = critical_ratio(f, k + j, second, prec_bits)
        value = QuadFieldElem.coerce(ratio.value)
        # an ideal above p divides (a + b sqrt(D))/c only if p divides N(a + b sqrt(D))
        integral_norm = value.a ** 2 - value.D * value.b ** 2
        hits = []
        for p in primerange(weight + 1, p_max + 1):
            if integral_norm % p:
                continue
            valuations = tuple(valuations_above(ratio.value, p))
            if any(v > 0 for v in valuations):
                splitting = prime_split(p, f.hecke_field_D).value if f.hecke_field_D else 'rational'
                hits.append(PrimeHit(p, splitting, valuations))
        logger.info('%s: qualifying primes %s', f.name, [hit.p for hit in hits])
        results.append(ScanResult(f.name, second, ratio, factorization(ratio.value), hits))
    return results
