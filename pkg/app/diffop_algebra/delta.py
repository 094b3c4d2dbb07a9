"""
Calculus of the operators d[u_a, u_b] on delta^-k times polynomials in the Delta_ij

For u_1, ..., u_4 the rows of UU and Delta = (u_a Delta^t u_b) the symmetric 4 x 4 matrix, every
d[u_a, u_b] is a derivation with

    d[a, b](delta^-k)    = -k delta^-k Delta_ab
    d[a, b](Delta_cd)    = -1/2 (Delta_ac Delta_bd + Delta_ad Delta_bc)

The operators F_i = f_i(d_Z, U, V) are the block invariants of the matrix (d[a, b]); their values
are read in C1 = f1(Delta), C2 = f2(Delta), C3 = det Delta, C4 and C5 the diagonal block determinants.
"""
import logging
import random
from functools import lru_cache
from itertools import chain

from sympy import QQ, Integer, Matrix, Poly, Rational, Symbol, expand, symbols, sympify
from sympy.polys.rings import ring

from core.exceptions import ReductionError
from diffop_algebra.kernels import K, block_invariants, coefficient_domain
from diffop_algebra.models import DeltaExpr, ReducedDelta

logger = logging.getLogger(__name__)

INDICES = (1, 2, 3, 4)
PAIRS = tuple((a, b) for a in INDICES for b in INDICES if a <= b)
OPERATORS = ('F1', 'F2', 'F3', 'F4', 'F5')
C_SYMBOLS = symbols('C1:6')
DELTA = Symbol('D')
SAMPLE_MARGIN = 6


def pair(a, b):
    return (a, b) if a <= b else (b, a)


@lru_cache(maxsize=1)
def operator_polynomials():
    """f1, ..., f5 as polynomials in the ten symbols S_ab, a <= b."""
    R, *gens = ring([f'S{a}{b}' for a, b in PAIRS], QQ)
    s = dict(zip(PAIRS, gens))
    invariants = block_invariants([[s[pair(a, b)] for b in INDICES] for a in INDICES])
    return {f'F{name[1]}': poly for name, poly in invariants.items()}


class DeltaCalculus:
    """d[u_a, u_b]-calculus for a formal weight k (k=None) or a numeric one."""

    def __init__(self, k=None):
        self.formal = k is None
        self.weight = K if k is None else Integer(k)
        self.domain = coefficient_domain(k)
        self.ring, *gens = ring([f'Delta{a}{b}' for a, b in PAIRS], self.domain)
        self.symbols = dict(zip(PAIRS, gens))
        self.k = self.constant(self.weight)
        matrix = [[self.entry(a, b) for b in INDICES] for a in INDICES]
        invariants = block_invariants(matrix)
        self.C = {i: invariants[f'f{i}'] for i in range(1, 6)}
        half = self.constant(Rational(-1, 2))
        self.partials = {
            (ab, cd): half * (self.entry(ab[0], cd[0]) * self.entry(ab[1], cd[1])
                              + self.entry(ab[0], cd[1]) * self.entry(ab[1], cd[0]))
            for ab in PAIRS for cd in PAIRS
        }
        self.operators = operator_polynomials()

    def constant(self, value):
        value = sympify(value)
        if not self.formal:
            value = value.subs(K, self.weight)
        return self.ring.ground_new(self.domain.from_sympy(expand(value)))

    def entry(self, a, b):
        return self.symbols[pair(a, b)]

    def delta(self, power=1):
        """delta^(-power k)."""
        return DeltaExpr(power, self.ring.one)

    def c(self, i):
        return DeltaExpr(0, self.C[i])

    def _derive(self, poly, power, ab):
        """(D1)-(D3) for d[a, b] on delta^(-power k) * poly; the delta factor is left implicit."""
        result = self.k * self.entry(*ab) * poly * (-power) if power else self.ring.zero
        for cd, gen in self.symbols.items():
            derivative = poly.diff(gen)
            if derivative:
                result += derivative * self.partials[ab, cd]
        return result

    def derive(self, expr, a, b):
        return DeltaExpr(expr.power, self._derive(expr.poly, expr.power, pair(a, b)))

    def apply(self, operator, expr):
        """A polynomial in the d[a, b] (a ring element in the S_ab) applied to expr."""
        if isinstance(operator, str):
            operator = self.operators[operator]
        cache = {(): expr.poly}

        def word_value(word):
            if word not in cache:
                cache[word] = self._derive(word_value(word[:-1]), expr.power, word[-1])
            return cache[word]

        total = self.ring.zero
        for monomial, coefficient in operator.terms():
            word = tuple(chain.from_iterable([PAIRS[i]] * e for i, e in enumerate(monomial)))
            total += word_value(word) * self.constant(QQ.to_sympy(coefficient))
        return DeltaExpr(expr.power, total)

    def power(self, name, exponent):
        return self.operators[name] ** exponent

    def bracket(self, operator, A, B):
        """{A, B} = F(AB) - F(A) B - A F(B)."""
        return self.apply(operator, A * B) - self.apply(operator, A) * B - A * self.apply(operator, B)

    def from_expr(self, expr):
        """A DeltaExpr from a sympy expression in D = delta^-k, C1, ..., C5 and k."""
        poly = Poly(sympify(expr, locals={'k': K, 'D': DELTA, **{str(c): c for c in C_SYMBOLS}}),
                    DELTA, *C_SYMBOLS)
        powers = {monomial[0] for monomial in poly.monoms()}
        if len(powers) > 1:
            raise ReductionError(f'{expr} mixes powers of delta')
        result = self.ring.zero
        for monomial, coefficient in poly.terms():
            term = self.constant(coefficient)
            for i, e in enumerate(monomial[1:], 1):
                term *= self.C[i] ** e
            result += term
        return DeltaExpr(powers.pop() if powers else 0, result)


def _candidates(degree):
    """Exponents (e1, e3, e4, e5) with C1^e1 C3^e3 C4^e4 C5^e5 of degree `degree` in the Delta_ij."""
    half = degree // 2
    return [(e1, e3, e4, half - e1 - 2 * e3 - e4)
            for e3 in range(half // 2 + 1) for e1 in range(half - 2 * e3 + 1)
            for e4 in range(half - 2 * e3 - e1 + 1)]


def _regroup(e1, e3, e4, e5):
    m = min(e4, e5)
    return (e1, m, e3, e4 - m, e5 - m)


def delta_reduce(calculus, expr):
    """Normal form of expr in C1, ..., C5, with C4 C5 regrouped into C2.

    Raises ReductionError when some homogeneous part is not a polynomial in the C_i.
    """
    by_degree = {}
    for monomial, coefficient in expr.poly.terms():
        by_degree.setdefault(sum(monomial), {})[monomial] = coefficient
    terms = {}
    for degree, part in sorted(by_degree.items()):
        part = calculus.ring.from_dict(part)
        if degree % 2:
            raise ReductionError(f'Term of odd degree {degree} is not in the C-basis: {part.as_expr()}')
        candidates = _candidates(degree)
        rng = random.Random(degree)
        rows, values = [], []
        for _ in range(len(candidates) + SAMPLE_MARGIN):
            point = [rng.randint(-7, 7) for _ in PAIRS]
            c = {i: calculus.domain.to_sympy(calculus.C[i](*point)) for i in (1, 3, 4, 5)}
            rows.append([c[1] ** e1 * c[3] ** e3 * c[4] ** e4 * c[5] ** e5 for e1, e3, e4, e5 in candidates])
            values.append(Poly(calculus.domain.to_sympy(part(*point)), K))
        # one rational system per power of k
        top = max([v.degree() for v in values if not v.is_zero] or [0])
        rhs = Matrix([[v.coeff_monomial(K ** j) for j in range(top + 1)] for v in values])
        try:
            solution, params = Matrix(rows).gauss_jordan_solve(rhs)
        except ValueError as exc:
            raise ReductionError(f'Degree {degree} part is not a polynomial in C1, ..., C5') from exc
        solution = solution.subs({p: 0 for p in params})
        rebuilt = calculus.ring.zero
        for index, (e1, e3, e4, e5) in enumerate(candidates):
            coefficient = expand(sum(solution[index, j] * K ** j for j in range(top + 1)))
            if coefficient == 0:
                continue
            rebuilt += (calculus.constant(coefficient) * calculus.C[1] ** e1 * calculus.C[3] ** e3
                        * calculus.C[4] ** e4 * calculus.C[5] ** e5)
            terms[_regroup(e1, e3, e4, e5)] = coefficient
        if rebuilt != part:
            raise ReductionError(f'Degree {degree} part has a residual outside the C-basis')
    return ReducedDelta(expr.power, terms)


def reduced(calculus, expr):
    """delta_reduce rendered as a sympy expression in D, C1, ..., C5."""
    return delta_reduce(calculus, expr).as_expr(C_SYMBOLS, DELTA)
