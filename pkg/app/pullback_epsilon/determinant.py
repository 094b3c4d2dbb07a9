"""
The determinant method for Fourier coefficients of Klingen-Eisenstein lifts
"""
import logging
from fractions import Fraction

from core.exceptions import PreconditionError
from diffop_algebra.kernels import det

logger = logging.getLogger(__name__)


def det_method(tableau):
    """The bordered determinant |e_i, lambda_{2, m_i}, ..., lambda_{d, m_i}|."""
    value = det(tableau.rows())
    logger.debug('det of a %d x %d tableau: %s', tableau.size, tableau.size, value)
    return value


def delta(tableau):
    """Delta(m_1, ..., m_d) = |lambda_{j, m_i}|; nonzero exactly when the m_i separate the forms."""
    return det(tableau.delta_rows())


def first_component(tableau):
    """The share of the first form in e_1 = sum_j c_j, recovered as det_method / Delta."""
    denominator = delta(tableau)
    if not denominator:
        raise PreconditionError(f'Delta vanishes for m = {tableau.m}; the forms are not separated')
    if isinstance(denominator, int):
        denominator = Fraction(denominator)
    return det_method(tableau) / denominator
