"""
Local Siegel series models
"""
from fractions import Fraction
from math import gcd

from sympy import Matrix, Poly, symbols

from core.exceptions import PreconditionError

X = symbols('X')


class HalfIntegralMat:
    """Symmetric half-integral matrix T, stored as the even integral matrix G = 2T."""
    __slots__ = ('n', 'G')

    def __init__(self, G):
        rows = tuple(tuple(int(x) for x in row) for row in G)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise PreconditionError('2T must be a square matrix')
        for i in range(n):
            if rows[i][i] % 2:
                raise PreconditionError(f'2T has odd diagonal entry {rows[i][i]}')
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise PreconditionError('2T must be symmetric')
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'G', rows)

    def __setattr__(self, name, value):
        raise AttributeError('HalfIntegralMat is immutable')

    def __reduce__(self):
        return (HalfIntegralMat, (self.G,))

    @classmethod
    def from_half(cls, T):
        """From the entries of T itself, given as rationals with denominator at most 2."""
        G = []
        for row in T:
            doubled = [2 * Fraction(x) for x in row]
            if any(x.denominator != 1 for x in doubled):
                raise PreconditionError('T is not half-integral')
            G.append([int(x) for x in doubled])
        return cls(G)

    @classmethod
    def diagonal(cls, *entries):
        n = len(entries)
        return cls([[2 * entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n):
        return cls([[0] * n for _ in range(n)])

    def entry(self, i, j):
        return Fraction(self.G[i][j], 2)

    @property
    def T(self):
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    @property
    def matrix(self):
        return Matrix(self.G)

    @property
    def det2T(self):
        return 1 if self.n == 0 else int(self.matrix.det())

    @property
    def det(self):
        return Fraction(self.det2T, 2 ** self.n)

    @property
    def rank(self):
        return 0 if self.n == 0 else self.matrix.rank()

    @property
    def is_psd(self):
        return self.n == 0 or bool(self.matrix.is_positive_semidefinite)

    @property
    def is_positive_definite(self):
        return self.n == 0 or bool(self.matrix.is_positive_definite)

    @property
    def is_nondegenerate(self):
        return self.det2T != 0

    def transform(self, U):
        """T[U] = U^t T U."""
        U = Matrix(U)
        return HalfIntegralMat((U.T * self.matrix * U).tolist())

    def direct_sum(self, other):
        n, m = self.n, other.n
        G = [list(row) + [0] * m for row in self.G] + [[0] * n + list(row) for row in other.G]
        return HalfIntegralMat(G)

    def with_zeros(self, k):
        """T + 0_k, the orthogonal sum with a zero block."""
        return self.direct_sum(HalfIntegralMat.zero(k)) if k else self

    def scaled(self, c):
        return HalfIntegralMat([[c * x for x in row] for row in self.G])

    def divided(self, p):
        """T/p when it is again half-integral, otherwise None."""
        if any(x % p for row in self.G for x in row):
            return None
        if any((self.G[i][i] // p) % 2 for i in range(self.n)):
            return None
        return HalfIntegralMat([[x // p for x in row] for row in self.G])

    def block(self, indices):
        return HalfIntegralMat([[self.G[i][j] for j in indices] for i in indices])

    def content(self):
        """Largest c with T/c half-integral."""
        g = 0
        for i in range(self.n):
            g = gcd(g, self.G[i][i] // 2)
            for j in range(i + 1, self.n):
                g = gcd(g, self.G[i][j])
        return g

    def key(self):
        return self.G

    def __eq__(self, other):
        return isinstance(other, HalfIntegralMat) and self.G == other.G

    def __hash__(self):
        return hash(('T', self.G))

    def __repr__(self):
        return f'HalfIntegralMat(twoT={[list(row) for row in self.G]})'

    def __str__(self):
        return str([list(row) for row in self.G]).replace(' ', '')


class LocalSeriesPoly:
    """F_p(B, X): integer coefficients, constant term 1.

    depth records the enumeration depth that certified the polynomial and is not
    part of its value.
    """
    __slots__ = ('p', 'coeffs', 'depth')

    def __init__(self, p, coeffs, depth=None):
        coeffs = [int(c) for c in coeffs]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs or coeffs[0] != 1:
            raise PreconditionError(f'F_p must have constant term 1, got {coeffs}')
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'coeffs', tuple(coeffs))
        object.__setattr__(self, 'depth', depth)

    def __setattr__(self, name, value):
        raise AttributeError('LocalSeriesPoly is immutable')

    def __reduce__(self):
        return (LocalSeriesPoly, (self.p, self.coeffs, self.depth))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        return _evaluate(self.coeffs, Fraction(x))

    def as_expr(self):
        return Poly.from_list(list(reversed(self.coeffs)), X).as_expr()

    def __eq__(self, other):
        return isinstance(other, LocalSeriesPoly) and (self.p, self.coeffs) == (other.p, other.coeffs)

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f'LocalSeriesPoly(p={self.p}, {self.as_expr()})'


class GammaFactor:
    """gamma_p(B, X) as numerator / denominator.

    numerator is (1 - X) prod (1 - p^(2i) X^2); the denominator is
    1 - xi p^(n/2) X for even n and 1 for odd n.
    """

    def __init__(self, p, n, xi=None):
        if n % 2 == 0 and xi not in (-1, 0, 1):
            raise PreconditionError('Even size needs xi in {-1, 0, 1}')
        self.p = p
        self.n = n
        self.xi = xi if n % 2 == 0 else None
        numerator = [1, -1]
        for i in range(1, n // 2 + 1):
            numerator = poly_mul(numerator, [1, 0, -p ** (2 * i)])
        self.numerator = numerator
        self.denominator = [1, -self.xi * p ** (n // 2)] if n % 2 == 0 and self.xi else [1]

    def __call__(self, x):
        x = Fraction(x)
        return _evaluate(self.numerator, x) / _evaluate(self.denominator, x)

    def as_expr(self):
        numerator = Poly.from_list(list(reversed(self.numerator)), X).as_expr()
        denominator = Poly.from_list(list(reversed(self.denominator)), X).as_expr()
        return numerator / denominator

    def __repr__(self):
        return f'GammaFactor(p={self.p}, n={self.n}, xi={self.xi})'


def _evaluate(coeffs, x):
    value = Fraction(0)
    for c in reversed(coeffs):
        value = value * x + c
    return value


def poly_mul(a, b, limit=None):
    """Product of coefficient lists, truncated after degree limit when given."""
    size = len(a) + len(b) - 1
    if limit is not None:
        size = min(size, limit + 1)
    out = [0] * size
    for i, x in enumerate(a):
        if not x or i >= size:
            continue
        for j, y in enumerate(b[:size - i]):
            out[i + j] += x * y
    return out


def series_div(a, b, limit):
    """Power series a/b up to degree limit, for b with constant term 1."""
    if b[0] != 1:
        raise PreconditionError('Series division needs a unit constant term')
    a = list(a) + [0] * max(0, limit + 1 - len(a))
    out = []
    for d in range(limit + 1):
        c = a[d] - sum(out[i] * b[d - i] for i in range(max(0, d - len(b) + 1), d))
        out.append(c)
    return out
