"""
Elliptic modular form models
"""

from core.exceptions import MissingCoefficient, PreconditionError
from exact_arith.models import QuadFieldElem


class QExpansion:
    """Truncated q-expansion a(0) + a(1)q + ... + a(N)q^N with exact coefficients."""
    __slots__ = ('weight', 'coeffs')

    def __init__(self, weight, coeffs):
        object.__setattr__(self, 'weight', weight)
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError('QExpansion is immutable')

    @property
    def precision(self):
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        if n < 0 or n > self.precision:
            raise MissingCoefficient(f'a({n}) is beyond precision {self.precision}')
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def truncate(self, N):
        if N > self.precision:
            raise PreconditionError(f'Cannot extend precision {self.precision} to {N}')
        return QExpansion(self.weight, self.coeffs[:N + 1])

    def __add__(self, other):
        if other.weight != self.weight:
            raise PreconditionError('Cannot add forms of different weights')
        N = min(self.precision, other.precision)
        return QExpansion(self.weight, [self.coeffs[n] + other.coeffs[n] for n in range(N + 1)])

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return QExpansion(self.weight, [c * x for x in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, QExpansion):
            return self.scale(other)
        N = min(self.precision, other.precision)
        a, b = self.coeffs, other.coeffs
        product = [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(N + 1)]
        return QExpansion(self.weight + other.weight, product)

    def __pow__(self, e):
        result = QExpansion(0, [1] + [0] * self.precision)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        return isinstance(other, QExpansion) and (self.weight, self.coeffs) == (other.weight, other.coeffs)

    def __hash__(self):
        return hash((self.weight, self.coeffs))

    def __repr__(self):
        shown = ', '.join(str(c) for c in self.coeffs[:6])
        return f'QExpansion(weight={self.weight}, [{shown}, ...])'


class PrimitiveForm:
    """Normalized Hecke eigenform of level one with coefficients in Q or Q(sqrt(D)).

    label is '+' or '-' according to the sign of the sqrt(D) part of a(2), and
    empty for rational forms.
    """

    def __init__(self, weight, hecke_field_D, eigen_coeffs, label=''):
        self.weight = weight
        self.hecke_field_D = hecke_field_D
        self.eigen_coeffs = eigen_coeffs
        self.label = label
        if eigen_coeffs[1] != 1:
            raise PreconditionError('A primitive form has a(1) = 1')

    def a(self, n):
        return QuadFieldElem.coerce(self.eigen_coeffs[n])

    @property
    def precision(self):
        return self.eigen_coeffs.precision

    @property
    def coeffs(self):
        return [QuadFieldElem.coerce(c) for c in self.eigen_coeffs.coeffs]

    @property
    def name(self):
        return f'phi_{self.weight}{self.label}'

    def conjugate(self):
        if not self.hecke_field_D:
            return self
        label = {'+': '-', '-': '+'}.get(self.label, '')
        coeffs = [QuadFieldElem.coerce(c).conjugate() for c in self.eigen_coeffs.coeffs]
        return PrimitiveForm(self.weight, self.hecke_field_D, QExpansion(self.weight, coeffs), label)

    def embedded_coeffs(self, sign=1, count=None):
        """Real coefficients under sqrt(D) -> sign*sqrt(D), at the current mpmath precision."""
        coeffs = self.coeffs if count is None else self.coeffs[:count + 1]
        return [c.embed(sign) for c in coeffs]

    def __repr__(self):
        return f'PrimitiveForm({self.name}, a(2)={self.a(2)})'
