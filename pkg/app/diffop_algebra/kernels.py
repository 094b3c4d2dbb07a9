"""
Kernels Q_l of the depth two pullback differential operators

Q_l(T, U, V) = sum over a + 2b + 2c = l of
    (-1)^b 2^a / (a! b! c!) (k + c - 3/2)_{a+b+c} F1^a F2^b F3^c

where F_i(T, U, V) = f_i(UU T UU^t) for UU = diag(U, V), U of size 2 x n1 and V of size
2 x n2, and for a symmetric 4 x 4 matrix S with 2 x 2 blocks S_ij

    f1 = det S12,  f2 = det S11 det S22,  f3 = det S.

The same Q_l are the coefficients of t^l in

    1 / (R^(k - 5/2) sqrt(D0^2 - 4 f3 t^2)),  D0 = 1 - 2 f1 t + f2 t^2,  R = (D0 + sqrt(D0^2 - 4 f3 t^2)) / 2.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from sympy import QQ, Integer, Rational, Symbol, expand, factorial, ff, rf, symbols
from sympy.combinatorics import Permutation
from sympy.polys.rings import ring

from core.exceptions import BudgetExceeded, PreconditionError

logger = logging.getLogger(__name__)

K = Symbol('k')
TERM_BUDGET = 200000


def det(rows):
    """Leibniz determinant over any commutative ring."""
    total = 0
    for perm in permutations(range(len(rows))):
        term = Permutation(list(perm)).signature()
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total + term
    return total


def block_invariants(S):
    """f1, ..., f5 of a symmetric 4 x 4 matrix; f4 and f5 are the diagonal block determinants."""
    f1 = det([row[2:] for row in S[:2]])
    f4 = det([row[:2] for row in S[:2]])
    f5 = det([row[2:] for row in S[2:]])
    return {'f1': f1, 'f2': f4 * f5, 'f3': det(S), 'f4': f4, 'f5': f5}


def coefficient_domain(k=None):
    """Q[k] for a formal weight, Q for a numeric one."""
    return QQ[K] if k is None else QQ


@dataclass(frozen=True)
class KernelVariables:
    """The polynomial ring in the entries of a symmetric n x n T and of U, V."""
    n1: int
    n2: int
    ring: object
    T: tuple
    U: tuple
    V: tuple

    @property
    def n(self):
        return self.n1 + self.n2

    def constant(self, value):
        return self.ring.ground_new(self.ring.domain.from_sympy(value))

    def partial(self, P, a, b):
        """(1 + delta_ab)/2 d/dt_ab."""
        derivative = P.diff(self.T[a][b])
        return derivative if a == b else derivative * Rational(1, 2)

    def block_matrix(self, U, V):
        """UU = diag(U, V) as a 4 x n matrix."""
        zero = self.ring.zero
        return ([list(row) + [zero] * self.n2 for row in U]
                + [[zero] * self.n1 + list(row) for row in V])

    def gram(self, T, X):
        """X T X^t."""
        n = len(T)
        return [[sum((x[i] * T[i][j] * y[j] for i in range(n) if x[i] for j in range(n) if y[j]), self.ring.zero)
                 for y in X] for x in X]

    def invariants(self, T=None, U=None, V=None):
        """F1, ..., F5 at (T, U, V), by default at the generic point."""
        T, U, V = T or self.T, U or self.U, V or self.V
        return block_invariants(self.gram(T, self.block_matrix(U, V)))


@lru_cache(maxsize=32)
def kernel_variables(n1, n2, k=None):
    n = n1 + n2
    pairs = [(a, b) for a in range(n) for b in range(a, n)]
    names = ([f't{a + 1}_{b + 1}' for a, b in pairs]
             + [f'u{i + 1}_{j + 1}' for i in range(2) for j in range(n1)]
             + [f'v{i + 1}_{j + 1}' for i in range(2) for j in range(n2)])
    R, *gens = ring(names, coefficient_domain(k))
    t = dict(zip(pairs, gens))
    T = tuple(tuple(t[min(a, b), max(a, b)] for b in range(n)) for a in range(n))
    u, v = gens[len(pairs):len(pairs) + 2 * n1], gens[len(pairs) + 2 * n1:]
    U = tuple(tuple(u[i * n1:(i + 1) * n1]) for i in range(2))
    V = tuple(tuple(v[i * n2:(i + 1) * n2]) for i in range(2))
    return KernelVariables(n1, n2, R, T, U, V)


def ql_terms(l, k=None):
    """{(a, b, c): coefficient of F1^a F2^b F3^c} in Q_l."""
    if l < 0:
        raise PreconditionError(f'l = {l} must be non-negative')
    k = K if k is None else Integer(k)
    terms = {}
    for c in range(l // 2 + 1):
        for b in range((l - 2 * c) // 2 + 1):
            a = l - 2 * b - 2 * c
            coefficient = Rational((-1) ** b * 2 ** a, factorial(a) * factorial(b) * factorial(c))
            terms[a, b, c] = expand(coefficient * rf(k + c - Rational(3, 2), a + b + c))
    return terms


def Ql_kernel(l, n1, n2, k=None):
    """Q_l(T, U, V) over Q[k], or over Q when the weight k is numeric."""
    if n1 < 2 or n2 < 2:
        raise PreconditionError(f'n1 = {n1} and n2 = {n2} must both be at least 2')
    var = kernel_variables(n1, n2, k)
    F = var.invariants()
    Q = var.ring.zero
    for (a, b, c), coefficient in ql_terms(l, k).items():
        Q += F['f1'] ** a * F['f2'] ** b * F['f3'] ** c * var.constant(coefficient)
    logger.debug('Q_%d for (%d, %d): %d terms', l, n1, n2, len(Q))
    return Q


def _truncate(expr, t, order):
    expr = expand(expr)
    return sum((expr.coeff(t, i) * t ** i for i in range(order + 1)), Integer(0))


def _binomial_series(y, alpha, t, order):
    """(1 + y)^alpha to O(t^(order+1)) for y without constant term."""
    total, power = Integer(1), Integer(1)
    for j in range(1, order + 1):
        power = _truncate(power * y, t, order)
        total += ff(alpha, j) / factorial(j) * power
    return _truncate(total, t, order)


def generating_series(l, k=None):
    """[Q_0, ..., Q_l] as polynomials in formal f1, f2, f3 from the generating function."""
    k = K if k is None else Integer(k)
    t, f1, f2, f3 = symbols('t f1 f2 f3')
    D0 = 1 - 2 * f1 * t + f2 * t ** 2
    root = _binomial_series(expand(D0 ** 2 - 4 * f3 * t ** 2) - 1, Rational(1, 2), t, l)
    R = expand((D0 + root) / 2)
    series = _truncate(_binomial_series(R - 1, -(k - Rational(5, 2)), t, l)
                       * _binomial_series(expand(D0 ** 2 - 4 * f3 * t ** 2) - 1, Rational(-1, 2), t, l), t, l)
    return [expand(series.coeff(t, i)) for i in range(l + 1)], (f1, f2, f3)


def generating_function_check(l, k=None):
    """True iff the closed sum for Q_0..Q_l matches the generating function."""
    coefficients, (f1, f2, f3) = generating_series(l, k)
    for m, series_term in enumerate(coefficients):
        closed = sum((c * f1 ** a * f2 ** b * f3 ** e for (a, b, e), c in ql_terms(m, k).items()), Integer(0))
        if expand(series_term - closed) != 0:
            logger.warning('Q_%d differs from its generating function coefficient', m)
            return False
    return True


def gram_laplacian(var, P, i, j, m):
    """Delta_ij(X) applied to P(X X^t) for X with m columns, written in T.

    sum_nu d^2/dx_i,nu dx_j,nu P(X X^t) = 2m d_ij P + 4 sum_{a,b} t_ab d_ia d_jb P
    with d_ab = (1 + delta_ab)/2 d/dt_ab.
    """
    result = var.partial(P, i, j) * (2 * m)
    for a in range(var.n):
        first = var.partial(P, i, a)
        if not first:
            continue
        for b in range(var.n):
            second = var.partial(first, j, b)
            if second:
                result += var.T[a][b] * second * 4
    return result


def pluriharmonic_check(l, n1, n2, k, kernel=None):
    """True iff Q_l (or the given kernel) is pluriharmonic in X1 and X2 for T = (X1; X2)(X1; X2)^t.

    X1 and X2 have 2k columns.
    """
    if k % 2 or 2 * k < n1 + n2:
        raise PreconditionError(f'k = {k} must be even with 2k >= {n1 + n2}')
    var = kernel_variables(n1, n2, k)
    Q = kernel if kernel is not None else Ql_kernel(l, n1, n2, k)
    if len(Q) * (n1 * n1 + n2 * n2) > TERM_BUDGET:
        raise BudgetExceeded(f'Q_{l} for ({n1}, {n2}) has {len(Q)} terms')
    for block in (range(n1), range(n1, n1 + n2)):
        for i in block:
            for j in block:
                if j < i:
                    continue
                if gram_laplacian(var, Q, i, j, 2 * k):
                    logger.info('Delta_%d%d does not annihilate the kernel', i + 1, j + 1)
                    return False
    return True


def _product(A, B):
    return [[sum((A[i][r] * B[r][j] for r in range(len(B))), 0) for j in range(len(B[0]))]
            for i in range(len(A))]


def equivariance_check(l, n1, n2, A1, A2, k=None):
    """Q_l(A T A^t, U, V) == Q_l(T, U A1, V A2) for A = diag(A1, A2)."""
    A1, A2 = [list(row) for row in A1], [list(row) for row in A2]
    if len(A1) != n1 or len(A2) != n2 or any(len(row) != n1 for row in A1) or any(len(row) != n2 for row in A2):
        raise PreconditionError(f'A1 and A2 must be {n1} x {n1} and {n2} x {n2}')
    var = kernel_variables(n1, n2, k)
    n = var.n
    A = [row + [0] * n2 for row in A1] + [[0] * n1 + row for row in A2]
    Q = Ql_kernel(l, n1, n2, k)
    ATA = _product(_product(A, var.T), [list(col) for col in zip(*A)])
    lhs = Q.compose([(var.T[a][b], var.ring(ATA[a][b])) for a in range(n) for b in range(a, n)])
    UA, VA = _product(var.U, A1), _product(var.V, A2)
    replacements = [(var.U[i][j], var.ring(UA[i][j])) for i in range(2) for j in range(n1)]
    replacements += [(var.V[i][j], var.ring(VA[i][j])) for i in range(2) for j in range(n2)]
    return lhs == Q.compose(replacements)
