"""
Diffop algebra models
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from operator import mul

from sympy import Rational, pi

from core.exceptions import PreconditionError


def pochhammer(x, m):
    """Rising factorial (x)_m, with (x)_m = 1/((x-1)(x-2)...(x+m)) for m < 0."""
    if isinstance(x, int):
        x = Fraction(x)
    if m >= 0:
        return reduce(mul, (x + i for i in range(m)), 1)
    return 1 / reduce(mul, (x - i for i in range(1, 1 - m)))


@dataclass(frozen=True)
class PiMultiple:
    """sign * 2^two_power * rational * pi^pi_power with rational a positive odd fraction."""
    sign: int
    two_power: int
    pi_power: int
    rational: Fraction

    @classmethod
    def of(cls, value, two_power=0, pi_power=0):
        value = Fraction(value)
        if not value:
            raise PreconditionError('PiMultiple of zero')
        sign = 1 if value > 0 else -1
        num, den = abs(value.numerator), value.denominator
        while num % 2 == 0:
            num //= 2
            two_power += 1
        while den % 2 == 0:
            den //= 2
            two_power -= 1
        return cls(sign, two_power, pi_power, Fraction(num, den))

    def __mul__(self, other):
        if isinstance(other, PiMultiple):
            return PiMultiple.of(self.sign * other.sign * self.rational * other.rational,
                                 self.two_power + other.two_power, self.pi_power + other.pi_power)
        return PiMultiple.of(self.sign * self.rational * Fraction(other), self.two_power, self.pi_power)

    __rmul__ = __mul__

    @property
    def coefficient(self):
        """The rational factor sign * 2^two_power * rational."""
        return self.sign * self.rational * Fraction(2) ** self.two_power

    def as_expr(self):
        return Rational(self.coefficient.numerator, self.coefficient.denominator) * pi ** self.pi_power

    def __str__(self):
        sign = '-' if self.sign < 0 else ''
        return f'{sign}2^{self.two_power} * {self.rational} * pi^{self.pi_power}'


@dataclass(frozen=True)
class Bideterminant:
    """Product of the leading minors U_J of an m x n matrix of variables.

    The columns are kept longest first and lexicographically within a length, which
    is the column order of the tableau they fill.
    """
    n: int
    columns: tuple = field(default=())

    def __post_init__(self):
        columns = []
        for J in self.columns:
            J = tuple(J)
            if not J or any(a >= b for a, b in zip(J, J[1:])) or J[0] < 1 or J[-1] > self.n:
                raise PreconditionError(f'{J} is not a strictly increasing subset of 1..{self.n}')
            columns.append(J)
        object.__setattr__(self, 'columns', tuple(sorted(columns, key=lambda J: (-len(J), J))))

    @property
    def weight(self):
        """(l_1, ..., l_n): l_i is the number of columns of length at least i."""
        return tuple(sum(1 for J in self.columns if len(J) >= i) for i in range(1, self.n + 1))

    @property
    def depth(self):
        return max((len(J) for J in self.columns), default=0)

    def rows(self):
        return [[J[i] for J in self.columns if len(J) > i] for i in range(self.depth)]

    def is_semistandard(self):
        """Rows non-decreasing; columns are strictly increasing already."""
        return all(a <= b for row in self.rows() for a, b in zip(row, row[1:]))

    def __mul__(self, other):
        if self.n != other.n:
            raise PreconditionError(f'Bideterminants in {self.n} and {other.n} columns')
        return Bideterminant(self.n, self.columns + other.columns)

    def __str__(self):
        if not self.columns:
            return '1'
        return ' '.join('U_' + ''.join(map(str, J)) for J in self.columns)


class DeltaExpr:
    """delta^(-power k) times a polynomial in the Delta_ij over Q or Q[k]."""
    __slots__ = ('power', 'poly')

    def __init__(self, power, poly):
        self.power = power
        self.poly = poly

    @property
    def ring(self):
        return self.poly.ring

    def is_zero(self):
        return not self.poly

    def _check(self, other):
        if self.power != other.power and self.poly and other.poly:
            raise PreconditionError(f'Cannot add delta^-{self.power}k and delta^-{other.power}k terms')

    def __add__(self, other):
        self._check(other)
        return DeltaExpr(self.power if self.poly else other.power, self.poly + other.poly)

    def __sub__(self, other):
        self._check(other)
        return DeltaExpr(self.power if self.poly else other.power, self.poly - other.poly)

    def __neg__(self):
        return DeltaExpr(self.power, -self.poly)

    def __mul__(self, other):
        if isinstance(other, DeltaExpr):
            return DeltaExpr(self.power + other.power, self.poly * other.poly)
        return DeltaExpr(self.power, self.poly * other)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        return DeltaExpr(self.power * exponent, self.poly ** exponent)

    def __eq__(self, other):
        if not isinstance(other, DeltaExpr):
            return NotImplemented
        if not self.poly and not other.poly:
            return True
        return self.power == other.power and self.poly == other.poly

    __hash__ = None

    def __repr__(self):
        return f'DeltaExpr(delta^-{self.power}k * ({self.poly.as_expr()}))'


@dataclass
class ReducedDelta:
    """A DeltaExpr in the C-basis: terms maps (e1, ..., e5) to the coefficient of C1^e1...C5^e5."""
    power: int
    terms: dict

    def modulo(self, *generators):
        """Drop the terms in the ideal generated by the given C-indices."""
        return ReducedDelta(self.power, {e: c for e, c in self.terms.items()
                                         if not any(e[i - 1] for i in generators)})

    def as_expr(self, symbols, delta=None):
        total = sum(coeff * reduce(mul, (s ** e for s, e in zip(symbols, exps)), 1)
                    for exps, coeff in self.terms.items())
        return total * delta ** self.power if delta is not None else total

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for exps, coeff in sorted(self.terms.items(), reverse=True):
            monomial = '*'.join(f'C{i}^{e}' if e > 1 else f'C{i}' for i, e in enumerate(exps, 1) if e)
            parts.append(f'({coeff})' + (f'*{monomial}' if monomial else ''))
        body = ' + '.join(parts)
        return f'delta^-{self.power}k * ({body})' if self.power else body
