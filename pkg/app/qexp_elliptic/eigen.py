"""
Splitting cusp-form spaces of dimension at most two into eigenforms
"""
import logging
from fractions import Fraction
from functools import lru_cache

from django.conf import settings

from core.exceptions import CapabilityError
from exact_arith.models import QuadFieldElem, squarefree_decomposition
from qexp_elliptic.hecke import hecke_matrix
from qexp_elliptic.models import PrimitiveForm, QExpansion
from qexp_elliptic.series import cusp_basis, cusp_dimension

logger = logging.getLogger(__name__)


def eigenforms(k, N=None):
    """Primitive forms of weight k, '+' first when the Hecke field is quadratic."""
    return _eigenforms(k, max(N or settings.HARDERLAB['QEXP_PRECISION'], 4))


@lru_cache(maxsize=32)
def _eigenforms(k, N):
    d = cusp_dimension(k)
    if d > 2:
        raise CapabilityError(f'dim S_{k} = {d}; only quadratic eigenform splitting is supported')
    if d == 0:
        return ()
    basis = cusp_basis(k, N)
    if d == 1:
        return (PrimitiveForm(k, 0, basis[0]),)
    f1, f2 = basis
    # With f = f1 + x f2, T(2)f = a(2, f) f and a(2, f) = x give x^2 - t x - c = 0.
    matrix = hecke_matrix(2, k, basis)
    t, c = matrix[1][1], matrix[1][0]
    disc = t * t + 4 * c
    assert disc.denominator == 1
    s, D = squarefree_decomposition(int(disc))
    if D == 1:
        roots = [(t + s) / 2, (t - s) / 2]
        return tuple(_combine(k, f1, f2, QuadFieldElem.from_parts(x), '') for x in sorted(roots, reverse=True))
    logger.debug('S_%d splits over Q(sqrt(%d))', k, D)
    forms = []
    for label, sign in (('+', 1), ('-', -1)):
        x = QuadFieldElem.from_parts(t / 2, Fraction(sign * s, 2), D)
        forms.append(_combine(k, f1, f2, x, label))
    return tuple(forms)


def _combine(k, f1, f2, x, label):
    coeffs = [QuadFieldElem.coerce(a) + x * b for a, b in zip(f1.coeffs, f2.coeffs)]
    return PrimitiveForm(k, 0 if x.is_rational else x.D, QExpansion(k, coeffs), label)


def eigenform(k, label='+', N=None):
    """The primitive form of weight k with the given label."""
    for form in eigenforms(k, N):
        if form.label == label or not form.label:
            return form
    raise CapabilityError(f'No primitive form of weight {k} labelled {label!r}')
