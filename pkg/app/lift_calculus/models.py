"""
A-parameters, infinitesimal characters and spinor Euler factors
"""
from dataclasses import dataclass, field
from fractions import Fraction

from django.db import models

from core.exceptions import PreconditionError


class PieceKind(models.TextChoices):
    ELLIPTIC = 'elliptic', 'Cusp form of level one'
    SIEGEL2 = 'siegel2', 'Vector valued degree two form'
    RANKIN = 'rankin', 'Tensor product of two cusp forms'
    TRIVIAL = 'trivial', 'Trivial representation of GL_1'
    GENERIC = 'generic', 'Given infinitesimal character'


@dataclass(frozen=True)
class Piece:
    """pi[d]: a cuspidal self-dual pi of PGL_n with the multiplier d.

    weights holds the positive eigenvalues of the infinitesimal character of pi;
    odd n adds the eigenvalue 0.
    """
    kind: str
    n: int
    weights: tuple
    d: int = 1
    label: str = ''

    def __post_init__(self):
        if self.d < 1:
            raise PreconditionError(f'Multiplier d = {self.d} must be positive')
        if 2 * len(self.weights) + self.n % 2 != self.n:
            raise PreconditionError(f'{self.n} eigenvalues needed, {self.weights} given')
        if any(2 * w != int(2 * w) or w <= 0 for w in self.weights):
            raise PreconditionError(f'Eigenvalues {self.weights} must be positive half-integers')

    @classmethod
    def elliptic(cls, weight, d=1, label=''):
        """pi_f for f of the given even weight: eigenvalues +-(weight - 1)/2."""
        if weight <= 0 or weight % 2:
            raise PreconditionError(f'Weight {weight} must be positive and even')
        return cls(PieceKind.ELLIPTIC, 2, (Fraction(weight - 1, 2),), d, label or f'f{weight}')

    @classmethod
    def siegel2(cls, k, j, d=1, label=''):
        """pi_F for F of weight det^k Sym^j: eigenvalues +-(j + 2k - 3)/2 and +-(j + 1)/2."""
        if j <= 0 or j % 2 or k < 4:
            raise PreconditionError(f'(k, j) = ({k}, {j}) needs j > 0 even and k >= 4')
        return cls(PieceKind.SIEGEL2, 4, (Fraction(j + 2 * k - 3, 2), Fraction(j + 1, 2)), d, label or f'G{k},{j}')

    @classmethod
    def rankin(cls, k1, k2, d=1, label=''):
        if k1 < k2 or k1 % 2 or k2 % 2:
            raise PreconditionError(f'Weights ({k1}, {k2}) must be even with k1 >= k2')
        return cls(PieceKind.RANKIN, 4, (Fraction(k1 + k2 - 2, 2), Fraction(k1 - k2, 2)), d, label or f'f{k1}xf{k2}')

    @classmethod
    def trivial(cls, d=1):
        return cls(PieceKind.TRIVIAL, 1, (), d, '1')

    @classmethod
    def generic(cls, n, weights, d=1, label=''):
        return cls(PieceKind.GENERIC, n, tuple(sorted((Fraction(w) for w in weights), reverse=True)), d, label)

    @property
    def eigenvalues(self):
        """Every eigenvalue of the infinitesimal character, in decreasing order."""
        middle = (Fraction(0),) if self.n % 2 else ()
        return tuple(sorted(self.weights, reverse=True)) + middle + tuple(-w for w in sorted(self.weights))

    def __str__(self):
        return f'{self.label}[{self.d}]'


@dataclass(frozen=True)
class AParameter:
    """psi = pi_1[d_1] + ... + pi_t[d_t] with sum n_i d_i = 2n + 1."""
    pieces: tuple

    def __post_init__(self):
        if not self.pieces:
            raise PreconditionError('An A-parameter needs at least one piece')
        if self.rank % 2 == 0:
            raise PreconditionError(f'sum n_i d_i = {self.rank} must be odd')

    @property
    def rank(self):
        return sum(piece.n * piece.d for piece in self.pieces)

    @property
    def degree(self):
        return (self.rank - 1) // 2

    @property
    def i0(self):
        """Index of the piece with d = 1 and odd n, the others having n_i d_i divisible by 4; None if absent."""
        for i, piece in enumerate(self.pieces):
            if piece.d == 1 and piece.n % 2 == 1:
                others = [q for j, q in enumerate(self.pieces) if j != i]
                if all((q.n * q.d) % 4 == 0 for q in others):
                    return i
        return None

    def __add__(self, other):
        return AParameter(self.pieces + other.pieces)

    def __str__(self):
        return ' + '.join(str(piece) for piece in self.pieces)


@dataclass(frozen=True)
class InfChar:
    """Multiset of half-integers, sorted decreasingly."""
    eigenvalues: tuple

    def __post_init__(self):
        values = tuple(sorted((Fraction(x) for x in self.eigenvalues), reverse=True))
        object.__setattr__(self, 'eigenvalues', values)

    @property
    def is_symmetric(self):
        return self.eigenvalues == tuple(-x for x in reversed(self.eigenvalues))

    @property
    def is_regular(self):
        """Distinct integers, symmetric about 0."""
        values = self.eigenvalues
        return (self.is_symmetric and len(set(values)) == len(values)
                and all(x.denominator == 1 for x in values))

    @property
    def positive(self):
        return tuple(x for x in self.eigenvalues if x > 0)

    def __len__(self):
        return len(self.eigenvalues)

    def __str__(self):
        return '{' + ', '.join(str(x) for x in self.eigenvalues) + '}'


@dataclass(frozen=True)
class SpinEuler:
    """1 + c_1 X + c_2 X^2 + c_3 X^3 + c_4 X^4 with exact coefficients."""
    coeffs: tuple
    k: int
    j: int
    p: int
    source: str = field(default='spinor', compare=False)

    def __post_init__(self):
        if len(self.coeffs) != 5 or self.coeffs[0] != 1:
            raise PreconditionError(f'A degree-four Euler factor has constant term 1, got {self.coeffs}')

    def __getitem__(self, i):
        return self.coeffs[i]

    def __str__(self):
        return ' + '.join(f'({c})X^{i}' if i else str(c) for i, c in enumerate(self.coeffs))
