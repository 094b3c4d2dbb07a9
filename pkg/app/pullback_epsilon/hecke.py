"""
Formal action of T^(m) on the first slot of epsilon(T, N)
"""
import logging

from sympy import factorint

from core.exceptions import PreconditionError
from eisenstein_hecke.operators import coset_representatives
from pullback_epsilon.models import HeckeSymbolic

logger = logging.getLogger(__name__)


def _apply_Tp(symbolic, k, p):
    """epsilon(T) -> epsilon(pT) + p^(2k-3) epsilon(T/p) + p^(k-2) sum_D epsilon(T[D]/p)."""
    result = HeckeSymbolic()
    for T, c in symbolic.terms.items():
        result.add(T.scaled(p), c)
        divided = T.divided(p)
        if divided is not None:
            result.add(divided, c * p ** (2 * k - 3))
        for D in coset_representatives(p):
            index = T.transform(D).divided(p)
            if index is not None:
                result.add(index, c * p ** (k - 2))
    return result


def hecke_expand(m, T, k):
    """epsilon(T)|T^(m) as a combination of epsilon(T'), with T^(m) = T(p_1) ... T(p_r) over the primes of m."""
    if m < 1:
        raise PreconditionError(f'm = {m} must be positive')
    if T.n != 2:
        raise PreconditionError(f'The first slot must be 2 x 2, got {T!r}')
    symbolic = HeckeSymbolic({T: 1})
    for p, e in sorted(factorint(m).items()):
        for _ in range(e):
            symbolic = _apply_Tp(symbolic, k, p)
    logger.debug('T^(%d) on eps(%s): %s', m, T, symbolic)
    return symbolic
