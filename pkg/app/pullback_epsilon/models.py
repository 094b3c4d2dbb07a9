"""
Pullback epsilon models
"""
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import Rational, factorint

from core.exceptions import MissingCoefficient, PreconditionError
from local_siegel.matrices import canonical_binary


@dataclass
class EpsilonValue:
    """epsilon_{k,l,n1,n2}(T1, T2): a polynomial in the entries of U (2 x n1) and V (2 x n2).

    value is a Fraction when U and V were given numerically, otherwise an element
    of the kernel ring whose t-variables have been specialized.
    """
    k: int
    l: int
    n1: int
    n2: int
    T1: object
    T2: object
    value: object
    terms: int = 0
    U: tuple = None
    V: tuple = None

    @property
    def is_numeric(self):
        return isinstance(self.value, Fraction)

    def at(self, U, V):
        """The value at numeric U and V."""
        if self.is_numeric:
            if (tuple(map(tuple, U)), tuple(map(tuple, V))) != (self.U, self.V):
                raise PreconditionError('epsilon was evaluated at other U, V')
            return self.value
        ring = self.value.ring
        point = [0] * ring.ngens
        names = [str(g) for g in ring.gens]
        for prefix, M in (('u', U), ('v', V)):
            for i, row in enumerate(M):
                for j, x in enumerate(row):
                    x = Fraction(x)
                    position = names.index(f'{prefix}{i + 1}_{j + 1}')
                    point[position] = ring.domain.from_sympy(Rational(x.numerator, x.denominator))
        value = ring.domain.to_sympy(self.value(*point))
        return Fraction(int(value.p), int(value.q))

    def __str__(self):
        value = self.value if self.is_numeric else self.value.as_expr()
        return f'epsilon_{self.k},{self.l},{self.n1},{self.n2}({self.T1}, {self.T2}) = {value}'


class HeckeSymbolic:
    """Formal Z-linear combination of symbols epsilon(T, N), T up to GL_2(Z)-equivalence."""

    def __init__(self, terms=None):
        self.terms = {}
        for T, c in (terms or {}).items():
            self.add(T, c)

    @staticmethod
    def key(T):
        if T.n != 2:
            raise PreconditionError(f'Hecke symbols are indexed by 2 x 2 matrices, got {T!r}')
        return canonical_binary(T)

    def add(self, T, coefficient):
        key = self.key(T)
        total = self.terms.get(key, 0) + coefficient
        if total:
            self.terms[key] = total
        else:
            self.terms.pop(key, None)

    def __add__(self, other):
        result = HeckeSymbolic(self.terms)
        for T, c in other.terms.items():
            result.add(T, c)
        return result

    def scaled(self, c):
        return HeckeSymbolic({T: c * v for T, v in self.terms.items()})

    def evaluate(self, values):
        """Bind the symbols: values is a mapping or CoeffTable indexed by T, or a callable."""
        lookup = values if callable(values) else values.__getitem__
        total = 0
        for T, c in sorted(self.terms.items(), key=lambda item: item[0].G):
            try:
                total = total + c * lookup(T)
            except KeyError as exc:
                raise MissingCoefficient(f'No value bound to epsilon({T}): {exc}') from None
        return total

    def __eq__(self, other):
        return isinstance(other, HeckeSymbolic) and self.terms == other.terms

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        if not self.terms:
            return '0'
        return ' + '.join(f'{c}*eps({T})' for T, c in sorted(self.terms.items(), key=lambda item: item[0].G))


@dataclass(frozen=True)
class DetTableau:
    """Square matrix whose first column holds e_1..e_d and whose other columns hold lambda_{j, m_i}.

    first, when known, holds lambda_{1, m_i} of the form singled out by the first column.
    """
    e: tuple
    eigenvalues: tuple
    first: tuple = field(default=None)
    m: tuple = field(default=None)

    def __post_init__(self):
        d = len(self.e)
        if d == 0 or len(self.eigenvalues) != d or any(len(row) != d - 1 for row in self.eigenvalues):
            raise PreconditionError(f'A tableau with {d} values of e needs a {d} x {d - 1} eigenvalue block')
        if self.first is not None and len(self.first) != d:
            raise PreconditionError('first must have one eigenvalue per row')

    @classmethod
    def assemble(cls, e, ms, others, first=None):
        """From T(p) eigenvalues: others (and first) are dicts p -> lambda(T(p)).

        lambda_{j, m} is the eigenvalue of T^(m) = T(p_1) ... T(p_r), the product over
        the prime factors of m with multiplicity.
        """
        rows = tuple(tuple(_eigenvalue(table, m) for table in others) for m in ms)
        column = tuple(_eigenvalue(first, m) for m in ms) if first is not None else None
        return cls(tuple(e), rows, column, tuple(ms))

    @property
    def size(self):
        return len(self.e)

    def rows(self):
        return [[e, *row] for e, row in zip(self.e, self.eigenvalues)]

    def delta_rows(self):
        if self.first is None:
            raise PreconditionError('Delta needs the eigenvalues of the first form')
        return [[x, *row] for x, row in zip(self.first, self.eigenvalues)]


def _eigenvalue(table, m):
    value = 1
    for p, e in factorint(m).items():
        if p not in table:
            raise MissingCoefficient(f'No T({p}) eigenvalue for T^({m})')
        value = value * table[p] ** e
    return value
