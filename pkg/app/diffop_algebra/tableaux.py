"""
Semistandard bideterminant basis and straightening
"""
import logging
from functools import lru_cache, reduce
from itertools import combinations
from operator import mul

from sympy import ZZ, Matrix
from sympy.polys.rings import ring

from core.exceptions import OracleFailure, PreconditionError
from diffop_algebra.kernels import det
from diffop_algebra.models import Bideterminant

logger = logging.getLogger(__name__)


def column_lengths(weight):
    weight = tuple(weight)
    if any(a < b for a, b in zip(weight, weight[1:])) or any(l < 0 for l in weight):
        raise PreconditionError(f'{weight} is not a dominant integral weight')
    return [sum(1 for l in weight if l > c) for c in range(weight[0] if weight else 0)]


def semistandard_tableaux(weight, n=None):
    """All P_T for T semistandard of shape weight with entries in 1..n."""
    n = n or len(weight)
    lengths = column_lengths(weight)
    if lengths and lengths[0] > n:
        raise PreconditionError(f'{weight} has depth {lengths[0]} > n = {n}')
    tableaux = []

    def extend(columns):
        if len(columns) == len(lengths):
            tableaux.append(Bideterminant(n, columns))
            return
        length = lengths[len(columns)]
        for J in combinations(range(1, n + 1), length):
            if not columns or all(columns[-1][i] <= J[i] for i in range(length)):
                extend(columns + [J])

    extend([])
    return tableaux


@lru_cache(maxsize=16)
def minor_ring(m, n):
    """The ring Z[u_ij] of an m x n matrix of variables."""
    R, *gens = ring([f'u{i}_{j}' for i in range(1, m + 1) for j in range(1, n + 1)], ZZ)
    return R, tuple(tuple(gens[i * n:(i + 1) * n]) for i in range(m))


def expand_bideterminant(bidet, U):
    """prod_J U_J with U_J the minor on the first |J| rows and the columns J."""
    poly = U[0][0].ring.one
    for J in bidet.columns:
        poly *= det([[U[i][j - 1] for j in J] for i in range(len(J))])
    return poly


def bidet_straighten(factors):
    """{P_T: c} with T semistandard and integers c such that the product equals sum c P_T."""
    bidet = factors if isinstance(factors, Bideterminant) else reduce(mul, factors)
    if bidet.is_semistandard():
        return {bidet: 1}
    basis = semistandard_tableaux(bidet.weight, bidet.n)
    _, U = minor_ring(bidet.depth, bidet.n)
    target = expand_bideterminant(bidet, U)
    expansions = [expand_bideterminant(b, U) for b in basis]
    monomials = sorted(set(target).union(*expansions))
    A = Matrix([[int(e.get(m, 0)) for e in expansions] for m in monomials])
    rhs = Matrix([int(target.get(m, 0)) for m in monomials])
    try:
        solution, params = A.gauss_jordan_solve(rhs)
    except ValueError as exc:
        raise OracleFailure(f'{bidet} is not in the span of the semistandard basis') from exc
    if params:
        raise OracleFailure(f'Semistandard expansions of weight {bidet.weight} are dependent')
    result = {}
    for b, c in zip(basis, solution):
        if c == 0:
            continue
        if not c.is_integer:
            raise OracleFailure(f'Non-integral coefficient {c} of {b} in {bidet}')
        result[b] = int(c)
    logger.debug('%s = %s', bidet, result)
    return result
