"""
Weights of lifts from their A-parameters, and the sign condition of the multiplicity formula
"""
import logging
from fractions import Fraction

from core.exceptions import PreconditionError
from lift_calculus.models import AParameter, InfChar, Piece

logger = logging.getLogger(__name__)


def inf_char(psi):
    """Eigenvalues of the sum of c_i tensor e_{d_i}, with e_d = diag((d-1)/2, ..., -(d-1)/2)."""
    values = []
    for piece in psi.pieces:
        shift = Fraction(piece.d - 1, 2)
        for w in piece.eigenvalues:
            values.extend(w + shift - t for t in range(piece.d))
    return InfChar(tuple(values))


def weight_from_infchar(c):
    """k'_i = w_i + i over the positive eigenvalues w_1 > ... > w_n."""
    if not c.is_regular or len(c) % 2 == 0:
        raise PreconditionError(f'{c} is not a set of distinct integers symmetric about 0')
    return tuple(int(w) + i for i, w in enumerate(c.positive, start=1))


def _check_base(base_weights):
    n = len(base_weights)
    if any(a < b for a, b in zip(base_weights, base_weights[1:])) or (n and base_weights[-1] <= n):
        raise PreconditionError(f'Base weight {tuple(base_weights)} must be non-increasing with k_n > {n}')
    return [k - i for i, k in enumerate(base_weights, start=1)]


def _merge(values):
    if len(set(values)) != len(values):
        raise PreconditionError(f'The eigenvalues {sorted(values, reverse=True)} collide')
    return tuple(v + i for i, v in enumerate(sorted(values, reverse=True), start=1))


def vector_lift_conditions(k, j, base_weights=(), d=1):
    """Which of the parity, size and interlacing conditions for a lift of type A^(I) hold."""
    shifted = _check_base(base_weights)
    n = len(base_weights)
    return {
        'a': k % 2 == n % 2 and j % 2 == 0,
        'b': k > 2 * d + 1 and j > 2 * d - 1,
        'c': all(Fraction(j, 2) + d < v < Fraction(j, 2) + k - d - 1 for v in shifted),
    }


def weight_from_vector_lift(k, j, base_weights=(), d=1):
    """Weight k' of the lift of F in S_(k+j,k) and G of weight base_weights to degree n + 4d.

    {k'_i - i} is {k_i - i} together with j/2+k+d-2, ..., j/2+k-d-1 and j/2+d, ..., j/2-d+1.
    """
    if k < 4 or j <= 0 or d <= 0:
        raise PreconditionError(f'(k, j, d) = ({k}, {j}, {d}) needs k >= 4, j > 0 and d > 0')
    conditions = vector_lift_conditions(k, j, base_weights, d)
    failed = [name for name, holds in conditions.items() if not holds]
    if failed:
        raise PreconditionError(f'Condition(s) {", ".join(failed)} fail for (k, j, d) = ({k}, {j}, {d})')
    half = j // 2
    values = (_check_base(base_weights)
              + list(range(half + k - d - 1, half + k + d - 1))
              + list(range(half - d + 1, half + d + 1)))
    return _merge(values)


def scalar_lift_condition(k, d, base_weights=()):
    """1 or 2 for the condition under which f in S_2k lifts with multiplier 2d, None when neither holds."""
    shifted = _check_base(base_weights)
    n = len(base_weights)
    if k <= d:
        return None
    if (not shifted or k - d > shifted[0]) and (k - d) % 2 == 0:
        return 1
    if (not shifted or k + d - 1 < shifted[-1]) and (k - d - n) % 2 == 0:
        return 2
    return None


def weight_from_scalar_lift(k, d, base_weights=()):
    """Weight k' for f in S_2k over G: {k'_i - i} is {k_i - i} together with k+d-1, ..., k-d."""
    if scalar_lift_condition(k, d, base_weights) is None:
        raise PreconditionError(f'Neither lifting condition holds for (k, d) = ({k}, {d})')
    return _merge(_check_base(base_weights) + list(range(k - d, k + d)))


def vector_lift_parameter(k, j, d=1, base=None):
    """psi_G + pi_F[2d]; psi_G = 1[1] without a base form."""
    return (base or AParameter((Piece.trivial(),))) + AParameter((Piece.siegel2(k, j, 2 * d),))


def scalar_lift_parameter(k, d=1, base=None):
    """psi_G + pi_f[2d] for f of weight 2k."""
    return (base or AParameter((Piece.trivial(),))) + AParameter((Piece.elliptic(2 * k, 2 * d),))


def rs_root_number(a, b, a_is_i0=False, b_is_i0=False):
    """Rankin-Selberg root number eps(pi_a x pi_b) from the positive eigenvalues of the two pieces."""
    if a.d % 2 == b.d % 2:
        return 1
    if a_is_i0:
        a, b, a_is_i0, b_is_i0 = b, a, b_is_i0, a_is_i0
    exponent = sum(1 + max(2 * wa, 2 * wb) for wa in a.weights for wb in b.weights)
    if b_is_i0:
        exponent += sum((1 + 2 * w) / 2 for w in a.weights)
    return -1 if int(exponent) % 2 else 1


def sign_table(psi):
    """Both sides of the sign condition for every piece other than i0."""
    i0 = psi.i0
    if i0 is None:
        raise PreconditionError(f'{psi} has no piece i0 with d = 1 and odd n')
    shifted = [w for w in inf_char(psi).positive]
    rows = []
    for i, piece in enumerate(psi.pieces):
        if i == i0:
            continue
        lhs = 1
        for j, other in enumerate(psi.pieces):
            if j != i:
                lhs *= rs_root_number(piece, other, b_is_i0=j == i0) ** min(piece.d, other.d)
        if piece.d % 2 == 0:
            rhs = (-1) ** (piece.n * piece.d // 4)
        else:
            own = set(piece.eigenvalues)
            K = [m for m, w in enumerate(shifted, start=1) if m % 2 == 1 and w in own]
            rhs = (-1) ** len(K)
        rows.append({'piece': str(piece), 'lhs': lhs, 'rhs': rhs, 'holds': lhs == rhs})
    return rows


def sign_condition(psi):
    rows = sign_table(psi)
    logger.debug('Sign condition for %s: %s', psi, rows)
    return all(row['holds'] for row in rows)
