"""
Special values models
"""
import threading
from fractions import Fraction
from math import comb

from core.exceptions import PreconditionError
from exact_arith.models import squarefree_decomposition
from exact_arith.primes import kronecker


class KroneckerChar:
    """Kronecker character m -> (d/m) of a fundamental discriminant d, or d = 1."""
    __slots__ = ('d',)

    def __init__(self, d):
        if not is_fundamental(d):
            raise PreconditionError(f'{d} is not a fundamental discriminant')
        object.__setattr__(self, 'd', d)

    def __setattr__(self, name, value):
        raise AttributeError('KroneckerChar is immutable')

    @property
    def conductor(self):
        return abs(self.d)

    @property
    def is_trivial(self):
        return self.d == 1

    @property
    def parity(self):
        """chi(-1)."""
        return -1 if self.d < 0 else 1

    def __call__(self, m):
        return kronecker(self.d, m)

    def __eq__(self, other):
        return isinstance(other, KroneckerChar) and other.d == self.d

    def __hash__(self):
        return hash(('chi', self.d))

    def __repr__(self):
        return f'KroneckerChar({self.d})'

    def __str__(self):
        return f'chi_{self.d}'


def is_fundamental(d):
    if d == 1:
        return True
    if d == 0:
        return False
    if d % 4 == 1:
        return squarefree_decomposition(d)[0] == 1
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and squarefree_decomposition(m)[0] == 1
    return False


class BernoulliTable:
    """Cached Bernoulli numbers with B_1 = -1/2 and generalized Bernoulli numbers.

    Both caches are filled under one lock so concurrent readers see complete rows.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._numbers = [Fraction(1)]
        self._generalized = {}

    def number(self, n):
        if n < 0:
            raise PreconditionError('Bernoulli index must be non-negative')
        with self._lock:
            numbers = self._numbers
            while len(numbers) <= n:
                m = len(numbers)
                total = sum(comb(m + 1, j) * numbers[j] for j in range(m))
                numbers.append(-total / (m + 1))
            return numbers[n]

    def polynomial(self, n, x):
        """Bernoulli polynomial B_n(x) at a rational point."""
        x = Fraction(x)
        return sum(comb(n, j) * self.number(j) * x ** (n - j) for j in range(n + 1))

    def generalized(self, n, chi):
        """B_{n,chi} = f**(n-1) * sum_{a=1..f} chi(a) B_n(a/f)."""
        key = (n, chi.d)
        with self._lock:
            if key in self._generalized:
                return self._generalized[key]
        f = chi.conductor
        value = Fraction(f) ** (n - 1) * sum(chi(a) * self.polynomial(n, Fraction(a, f)) for a in range(1, f + 1))
        with self._lock:
            self._generalized[key] = value
        return value


bernoulli_table = BernoulliTable()
