"""
Exact arithmetic models
"""
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import gcd, lcm

import mpmath
from django.db import models
from sympy import factorint

from core.exceptions import PreconditionError


class Splitting(models.TextChoices):
    """Decomposition type of a rational prime in a quadratic field."""
    SPLIT = 'split', 'Split'
    INERT = 'inert', 'Inert'
    RAMIFIED = 'ramified', 'Ramified'


@lru_cache(maxsize=None)
def squarefree_decomposition(n):
    """Write a nonzero integer as s**2 * d with d squarefree and s > 0."""
    if n == 0:
        raise PreconditionError('Zero has no squarefree decomposition')
    s, d = 1, -1 if n < 0 else 1
    for p, e in factorint(abs(n)).items():
        s *= p ** (e // 2)
        d *= p ** (e % 2)
    return s, d


def is_squarefree(n):
    return n != 0 and all(e == 1 for e in factorint(abs(n)).values())


def as_fraction(value):
    """Coerce int, Fraction or rational-valued field elements to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (QuadFieldElem, TowerElem)) and value.is_rational:
        return value.rational_part
    raise TypeError(f'{value!r} is not rational')


class QuadFieldElem:
    """Element (a + b*sqrt(D))/c of Q(sqrt(D)) kept in lowest terms.

    D = 1 stands for the rational numbers; b is then folded into a.
    """
    __slots__ = ('a', 'b', 'c', 'D')

    def __init__(self, a, b=0, D=1, c=1):
        if c == 0:
            raise ZeroDivisionError('Denominator must be nonzero')
        if D <= 0:
            raise PreconditionError('Radicand must be a positive integer')
        s, D = squarefree_decomposition(D)
        b *= s
        if D == 1:
            a, b = a + b, 0
        if b == 0:
            D = 1
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(a, b), c)
        object.__setattr__(self, 'a', a // g)
        object.__setattr__(self, 'b', b // g)
        object.__setattr__(self, 'c', c // g)
        object.__setattr__(self, 'D', D)

    def __setattr__(self, name, value):
        raise AttributeError('QuadFieldElem is immutable')

    def __reduce__(self):
        return (QuadFieldElem, (self.a, self.b, self.D, self.c))

    @classmethod
    def from_parts(cls, r, s=0, D=1):
        """Build r + s*sqrt(D) from rational r, s."""
        r, s = Fraction(r), Fraction(s)
        c = lcm(r.denominator, s.denominator)
        return cls(int(r * c), int(s * c), D, c)

    @classmethod
    def coerce(cls, value, D=1):
        if isinstance(value, cls):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.from_parts(value, 0, D)
        if isinstance(value, TowerElem):
            return value.to_quad()
        raise TypeError(f'Cannot coerce {value!r} to a quadratic field element')

    @property
    def rational_part(self):
        return Fraction(self.a, self.c)

    @property
    def irrational_part(self):
        return Fraction(self.b, self.c)

    @property
    def is_rational(self):
        return self.b == 0

    def _common_field(self, other):
        if self.D == other.D or other.is_rational:
            return self.D
        if self.is_rational:
            return other.D
        raise PreconditionError(
            f'Elements of Q(sqrt({self.D})) and Q(sqrt({other.D})) need a TowerElem')

    def __add__(self, other):
        if isinstance(other, TowerElem):
            return NotImplemented
        other = QuadFieldElem.coerce(other)
        D = self._common_field(other)
        return QuadFieldElem.from_parts(
            self.rational_part + other.rational_part, self.irrational_part + other.irrational_part, D)

    __radd__ = __add__

    def __neg__(self):
        return QuadFieldElem(-self.a, -self.b, self.D, self.c)

    def __sub__(self, other):
        if isinstance(other, TowerElem):
            return NotImplemented
        return self + (-QuadFieldElem.coerce(other))

    def __rsub__(self, other):
        return QuadFieldElem.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, TowerElem):
            return NotImplemented
        other = QuadFieldElem.coerce(other)
        D = self._common_field(other)
        r1, s1, r2, s2 = self.rational_part, self.irrational_part, other.rational_part, other.irrational_part
        return QuadFieldElem.from_parts(r1 * r2 + s1 * s2 * D, r1 * s2 + r2 * s1, D)

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError('Inverse of zero')
        return QuadFieldElem.from_parts(self.rational_part / n, -self.irrational_part / n, self.D)

    def __truediv__(self, other):
        if isinstance(other, TowerElem):
            return NotImplemented
        return self * QuadFieldElem.coerce(other).inverse()

    def __rtruediv__(self, other):
        return QuadFieldElem.coerce(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = QuadFieldElem(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self):
        return QuadFieldElem(self.a, -self.b, self.D, self.c)

    def norm(self):
        r, s = self.rational_part, self.irrational_part
        return r * r - s * s * self.D

    def trace(self):
        return 2 * self.rational_part

    def embed(self, sign=1):
        """Real embedding sending sqrt(D) to sign*sqrt(D), at the current mpmath precision."""
        return (mpmath.mpf(self.a) + sign * self.b * mpmath.sqrt(self.D)) / self.c

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and Fraction(self.a, self.c) == other
        if isinstance(other, QuadFieldElem):
            return (self.a, self.b, self.c, self.D) == (other.a, other.b, other.c, other.D)
        if isinstance(other, TowerElem):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.c))
        return hash((self.a, self.b, self.c, self.D))

    def __str__(self):
        if self.b == 0:
            return str(Fraction(self.a, self.c))
        sign = '+' if self.b > 0 else '-'
        b = abs(self.b)
        body = f'{self.a}{sign}{b}*sqrt({self.D})' if self.a else f'{"-" if self.b < 0 else ""}{b}*sqrt({self.D})'
        if self.c == 1:
            return body
        return f'({body})/{self.c}'

    def __repr__(self):
        return f'QuadFieldElem({self})'


class TowerElem:
    """Element of Q(sqrt(D1), sqrt(D2)) on the basis 1, sqrt(D1), sqrt(D2), sqrt(D1)*sqrt(D2)."""
    __slots__ = ('D1', 'D2', 'coords')

    def __init__(self, D1, D2, coords):
        if D1 == D2 or not (is_squarefree(D1) and is_squarefree(D2)) or 1 in (D1, D2):
            raise PreconditionError('Tower radicands must be distinct squarefree integers other than 1')
        coords = tuple(Fraction(x) for x in coords)
        if len(coords) != 4:
            raise PreconditionError('A tower element has four coordinates')
        object.__setattr__(self, 'D1', D1)
        object.__setattr__(self, 'D2', D2)
        object.__setattr__(self, 'coords', coords)

    def __setattr__(self, name, value):
        raise AttributeError('TowerElem is immutable')

    @classmethod
    def from_quad(cls, x, D1, D2):
        x = QuadFieldElem.coerce(x)
        r, s = x.rational_part, x.irrational_part
        if x.is_rational:
            return cls(D1, D2, (r, 0, 0, 0))
        if x.D == D1:
            return cls(D1, D2, (r, s, 0, 0))
        if x.D == D2:
            return cls(D1, D2, (r, 0, s, 0))
        t, d = squarefree_decomposition(D1 * D2)
        if x.D == d:
            return cls(D1, D2, (r, 0, 0, s / t))
        raise PreconditionError(f'Q(sqrt({x.D})) is not a subfield of this tower')

    def _coerce(self, other):
        if isinstance(other, TowerElem):
            if (other.D1, other.D2) != (self.D1, self.D2):
                raise PreconditionError('Tower elements live in different towers')
            return other
        return TowerElem.from_quad(other, self.D1, self.D2)

    @property
    def is_rational(self):
        return not any(self.coords[1:])

    @property
    def rational_part(self):
        return self.coords[0]

    def to_quad(self):
        """Degenerate to a QuadFieldElem when at most one irrational coordinate survives."""
        c0, c1, c2, c3 = self.coords
        nonzero = [i for i in (1, 2, 3) if (c1, c2, c3)[i - 1]]
        if not nonzero:
            return QuadFieldElem.from_parts(c0)
        if len(nonzero) > 1:
            raise PreconditionError('Tower element does not lie in a quadratic subfield')
        i = nonzero[0]
        if i == 1:
            return QuadFieldElem.from_parts(c0, c1, self.D1)
        if i == 2:
            return QuadFieldElem.from_parts(c0, c2, self.D2)
        t, d = squarefree_decomposition(self.D1 * self.D2)
        return QuadFieldElem.from_parts(c0, c3 * t, d)

    def __add__(self, other):
        other = self._coerce(other)
        return TowerElem(self.D1, self.D2, [x + y for x, y in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return TowerElem(self.D1, self.D2, [-x for x in self.coords])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        D1, D2 = self.D1, self.D2
        a0, a1, a2, a3 = self.coords
        b0, b1, b2, b3 = other.coords
        return TowerElem(D1, D2, (
            a0 * b0 + D1 * a1 * b1 + D2 * a2 * b2 + D1 * D2 * a3 * b3,
            a0 * b1 + a1 * b0 + D2 * (a2 * b3 + a3 * b2),
            a0 * b2 + a2 * b0 + D1 * (a1 * b3 + a3 * b1),
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        ))

    __rmul__ = __mul__

    def conjugate(self, first=False, second=False):
        """Apply sqrt(D1) -> -sqrt(D1) and/or sqrt(D2) -> -sqrt(D2)."""
        s1, s2 = (-1 if first else 1), (-1 if second else 1)
        c0, c1, c2, c3 = self.coords
        return TowerElem(self.D1, self.D2, (c0, s1 * c1, s2 * c2, s1 * s2 * c3))

    def norm(self):
        product = self * self.conjugate(first=True) * self.conjugate(second=True) * self.conjugate(True, True)
        assert product.is_rational, 'norm of a tower element must be rational'
        return product.rational_part

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError('Inverse of zero')
        others = self.conjugate(first=True) * self.conjugate(second=True) * self.conjugate(True, True)
        return TowerElem(self.D1, self.D2, [x / n for x in others.coords])

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def split(self):
        """Write x = u + v*sqrt(D1) with u, v in Q(sqrt(D2))."""
        c0, c1, c2, c3 = self.coords
        return QuadFieldElem.from_parts(c0, c2, self.D2), QuadFieldElem.from_parts(c1, c3, self.D2)

    def embed(self, s1=1, s2=1):
        c0, c1, c2, c3 = (mpmath.mpf(x.numerator) / x.denominator for x in self.coords)
        r1, r2 = s1 * mpmath.sqrt(self.D1), s2 * mpmath.sqrt(self.D2)
        return c0 + c1 * r1 + c2 * r2 + c3 * r1 * r2

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (PreconditionError, TypeError):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        if self.is_rational:
            return hash(self.coords[0])
        return hash((self.D1, self.D2, self.coords))

    def __str__(self):
        names = ('', f'sqrt({self.D1})', f'sqrt({self.D2})', f'sqrt({self.D1})*sqrt({self.D2})')
        terms = [f'({c})*{n}' if n else f'{c}' for c, n in zip(self.coords, names) if c]
        return '+'.join(terms) if terms else '0'

    def __repr__(self):
        return f'TowerElem({self})'


@dataclass(frozen=True)
class PrimeIdealSpec:
    """A prime ideal above p in Q(sqrt(D)), given by a p-adic square root of D.

    The root r is correct modulo p**e (modulo 2**(e-2) when p = 2); the prime is
    the kernel of sqrt(D) -> r.
    """
    p: int
    D: int
    root: int
    e: int
    splitting: str = Splitting.SPLIT

    def __post_init__(self):
        if self.splitting == Splitting.INERT:
            raise PreconditionError(f'{self.p} is inert in Q(sqrt({self.D})); no embedding into Q_p')
        modulus = self.p ** self.e
        if self.splitting == Splitting.SPLIT and (self.root * self.root - self.D) % modulus:
            raise PreconditionError('root does not square to D at the stated precision')

    @property
    def reliable_exponent(self):
        """Exponent up to which the truncated root agrees with a true p-adic root."""
        return self.e - 2 if self.p == 2 else self.e

    def __str__(self):
        return f'({self.p}, sqrt({self.D}) - {self.root})'
