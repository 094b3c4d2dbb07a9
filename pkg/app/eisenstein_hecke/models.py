"""
Siegel Eisenstein series models
"""
from dataclasses import dataclass

from core.exceptions import MissingCoefficient, PreconditionError


@dataclass(frozen=True)
class EisensteinSpec:
    """Degree n, even weight k; normalized selects the Z(n, k)-normalized series."""
    n: int
    k: int
    normalized: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError('Eisenstein series need degree n >= 1')
        if self.k % 2 or 2 * self.k < self.n + 1:
            raise PreconditionError(f'Weight {self.k} is not an even weight >= (n+1)/2 for n = {self.n}')
        for excluded in (self.n + 2, self.n + 3):
            if 2 * self.k == excluded and self.k % 4 == 2:
                raise PreconditionError(f'Weight {self.k} is an excluded case for degree {self.n}')

    def __str__(self):
        return f'{"E~" if self.normalized else "E"}_{self.n},{self.k}'


class CoeffTable:
    """Fourier coefficients a(T, F) indexed by half-integral matrices.

    canonical maps T to its class representative before lookup. source, when
    set, computes a missing coefficient on demand and stores it.
    """

    def __init__(self, degree, weight, entries=None, canonical=None, source=None):
        self.degree = degree
        self.weight = weight
        self.canonical = canonical
        self.source = source
        self._entries = {}
        for T, value in (entries or {}).items():
            self[T] = value

    def _key(self, T):
        if T.n != self.degree:
            raise PreconditionError(f'Index of size {T.n} in a degree {self.degree} table')
        return self.canonical(T) if self.canonical else T

    def __getitem__(self, T):
        key = self._key(T)
        if key not in self._entries:
            if self.source is None:
                raise MissingCoefficient(f'No coefficient at {T} in degree {self.degree} weight {self.weight}')
            self._entries[key] = self.source(key)
        return self._entries[key]

    def __setitem__(self, T, value):
        self._entries[self._key(T)] = value

    def __contains__(self, T):
        return self._key(T) in self._entries

    def __len__(self):
        return len(self._entries)

    def get(self, T, default=None):
        try:
            return self[T]
        except MissingCoefficient:
            return default

    def keys(self):
        return self._entries.keys()

    def items(self):
        return self._entries.items()

    @property
    def is_zero(self):
        return all(value == 0 for value in self._entries.values())

    def __repr__(self):
        return f'CoeffTable(degree={self.degree}, weight={self.weight}, entries={len(self)})'
