"""
Local Siegel series by enumeration of symmetric residue matrices

b_p(B, s) = sum over R in Sym_n(Q_p)/Sym_n(Z_p) of e_p(tr(BR)) nu(R)^(-s).
Writing R = A/p^j with A primitive modulo p^j splits the sum by depth j; a
primitive A contributes only to X^e with e >= j, and at e = j exactly the
rank-one residues u w w^t appear. Sums of roots of unity are collapsed by
averaging over the unit orbit A -> uA, which turns every phase into a
Ramanujan sum.
"""
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import product, repeat

from django.conf import settings
from sympy import isprime

from core.exceptions import BudgetExceeded, CapabilityError, OracleFailure, PreconditionError
from exact_arith.primes import ord_p
from local_siegel.characters import gamma_p
from local_siegel.models import LocalSeriesPoly, poly_mul, series_div

logger = logging.getLogger(__name__)

MAX_SIZE = 4
# F is accepted once this many top coefficients vanish at consecutive depths
STABLE_WINDOW = 2


def _valuation(x, p):
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def elementary_exponent_sum(A, p, m):
    """Sum of min(s_i, m) over the elementary divisors p^(s_i) of A over Z_p."""
    q = p ** m
    n = len(A)
    M = [[x % q for x in row] for row in A]
    total = 0
    for k in range(n):
        best = None
        for i in range(k, n):
            for j in range(k, n):
                if M[i][j]:
                    v = _valuation(M[i][j], p)
                    if best is None or v < best[0]:
                        best = (v, i, j)
            if best is not None and best[0] == 0:
                break
        if best is None:
            return total + m * (n - k)
        v, i, j = best
        M[k], M[i] = M[i], M[k]
        for row in M:
            row[k], row[j] = row[j], row[k]
        scale = p ** v
        inverse = pow(M[k][k] // scale, -1, q)
        for i in range(k + 1, n):
            if M[i][k]:
                f = (M[i][k] // scale) * inverse % q
                M[i] = [(a - f * b) % q for a, b in zip(M[i], M[k])]
        for j in range(k + 1, n):
            M[k][j] = 0
        total += v
    return total


def ramanujan_weight(t, p, m):
    """Sum of exp(2 pi i u t / p^m) over units u modulo p^m."""
    q = p ** m
    t %= q
    if t == 0:
        return q - q // p
    if t % (q // p) == 0:
        return -(q // p)
    return 0


def _coordinates(n):
    return [(i, i) for i in range(n)] + [(i, j) for i in range(n) for j in range(i + 1, n)]


def _phase_coefficients(G):
    """c with tr(B A) = sum c_k a_k over the upper-triangular coordinates of A."""
    return [G[i][i] // 2 if i == j else G[i][j] for i, j in _coordinates(len(G))]


def _pivot(coefficients, p):
    for k, c in enumerate(coefficients):
        if c % p:
            return k
    return None


def visit_count(G, p, j):
    """Residue matrices visited at depth j."""
    N = len(G) * (len(G) + 1) // 2
    if _pivot(_phase_coefficients(G), p) is None:
        return p ** (j * N)
    return p ** (j * (N - 1) + 1)


def _check_budget(G, p, j, budget):
    count = visit_count(G, p, j)
    if count > budget:
        logger.warning('Depth %d at p=%d needs %d residue matrices, budget is %d', j, p, count, budget)
        raise BudgetExceeded(f'depth {j} at p={p} needs {count} residue matrices (budget {budget})')


def _primitive_chunk(G, p, j, first_values=None):
    """Weighted counts by exponent over primitive A mod p^j whose phase survives the unit average.

    A phase survives only when p^(j-1) divides tr(BA); when some phase coefficient
    is a unit the congruence is solved for that coordinate.
    """
    n = len(G)
    coords = _coordinates(n)
    c = _phase_coefficients(G)
    q, r = p ** j, p ** (j - 1)
    pivot = _pivot(c, p)
    free = [k for k in range(len(coords)) if k != pivot]
    inverse = pow(c[pivot], -1, r) if pivot is not None and r > 1 else 0
    ranges = [range(q)] * len(free)
    if free and first_values is not None:
        ranges[0] = first_values
    counts = Counter()
    a = [0] * len(coords)
    for values in product(*ranges):
        for k, x in zip(free, values):
            a[k] = x
        if pivot is None:
            solutions = (None,)
        else:
            s = sum(c[k] * a[k] for k in free)
            solutions = range((-s * inverse) % r if r > 1 else 0, q, r)
        for x in solutions:
            if x is not None:
                a[pivot] = x
            if not any(v % p for v in a):
                continue
            weight = ramanujan_weight(sum(ck * ak for ck, ak in zip(c, a)), p, j)
            if not weight:
                continue
            A = [[0] * n for _ in range(n)]
            for (i, k), v in zip(coords, a):
                A[i][k] = A[k][i] = v
            counts[n * j - elementary_exponent_sum(A, p, j)] += weight
    return dict(counts)


@lru_cache(maxsize=256)
def primitive_counts(G, p, j, workers=1):
    """Exact contribution of depth j to each X^e: a map e -> integer."""
    q = p ** j
    has_free = len(G) * (len(G) + 1) // 2 > (0 if _pivot(_phase_coefficients(G), p) is None else 1)
    if workers > 1 and has_free:
        chunks = [range(w, q, workers) for w in range(min(workers, q))]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            results = list(pool.map(_primitive_chunk, repeat(G), repeat(p), repeat(j), chunks))
    else:
        results = [_primitive_chunk(G, p, j)]
    total = Counter()
    for result in results:
        total.update(result)
    phi = q - q // p
    counts = {}
    for e, s in sorted(total.items()):
        if s % phi:
            raise OracleFailure(f'Root-of-unity sum {s}/{phi} at depth {j}, X^{e} does not collapse to an integer')
        if s:
            counts[e] = s // phi
    return counts


def rank_one_sum(G, p, m):
    """Contribution of the rank-one residues u w w^t modulo p^m, all with exponent m."""
    q = p ** m
    n = len(G)
    total = 0
    for lead in range(n):
        ranges = [range(0, q, p)] * lead + [range(1, 2)] + [range(q)] * (n - lead - 1)
        for w in product(*ranges):
            value = sum(G[i][i] // 2 * w[i] * w[i] for i in range(n))
            value += sum(G[i][k] * w[i] * w[k] for i in range(n) for k in range(i + 1, n))
            total += ramanujan_weight(value, p, m)
    return total


def _resolve(workers, budget):
    workers = workers or settings.HARDERLAB['WORKERS']
    budget = budget or settings.HARDERLAB['ENUMERATION_BUDGET']
    return workers, budget


def _check_input(B, p):
    if not isprime(p):
        raise PreconditionError(f'{p} is not prime')
    if B.n > MAX_SIZE:
        raise CapabilityError(f'Enumeration supports size <= {MAX_SIZE}, got {B.n}')


def local_series_bruteforce(B, p, m, workers=None, budget=None):
    """Coefficients of the depth-m truncation of b_p(B, s) as a polynomial in X = p^(-s)."""
    _check_input(B, p)
    if m < 0:
        raise PreconditionError('Depth must be non-negative')
    workers, budget = _resolve(workers, budget)
    coeffs = [0] * (B.n * m + 1)
    coeffs[0] = 1
    for j in range(1, m + 1):
        _check_budget(B.G, p, j, budget)
        for e, s in primitive_counts(B.G, p, j, workers).items():
            coeffs[e] += s
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def series_coefficients(B, p, E, workers=None, budget=None):
    """The exact coefficients of X^0..X^E in b_p(B, X)."""
    _check_input(B, p)
    workers, budget = _resolve(workers, budget)
    coeffs = [1] + [0] * E
    for j in range(1, E):
        _check_budget(B.G, p, j, budget)
        for e, s in primitive_counts(B.G, p, j, workers).items():
            if e <= E:
                coeffs[e] += s
    if E >= 1:
        coeffs[E] += rank_one_sum(B.G, p, E)
    return coeffs


def _strip(coeffs):
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def Fp(B, p, workers=None, budget=None):
    """F_p(B, X) for nondegenerate B of size at most four."""
    _check_input(B, p)
    if not B.is_nondegenerate:
        raise PreconditionError(f'{B!r} is degenerate')
    return _stable_series(B, p, *_resolve(workers, budget))


@lru_cache(maxsize=1024)
def _stable_series(B, p, workers, budget):
    d = ord_p(B.det2T, p)
    if d == 0:
        return LocalSeriesPoly(p, [1], depth=0)
    gamma = gamma_p(B, p)
    cap = d + B.n + 2
    previous = None
    for depth in range(1, cap + 1):
        c = series_coefficients(B, p, depth, workers, budget)
        F = _strip(series_div(poly_mul(c, gamma.denominator, depth), gamma.numerator, depth))
        logger.debug('F_%d of %s at depth %d: %s', p, B, depth, F)
        if F == previous and len(F) - 1 <= depth - STABLE_WINDOW:
            if F[0] != 1:
                raise OracleFailure(f'F_{p} of {B!r} has constant term {F[0]}')
            return LocalSeriesPoly(p, F, depth=depth)
        previous = F
    raise OracleFailure(f'F_{p} of {B!r} did not stabilize by depth {cap}')
