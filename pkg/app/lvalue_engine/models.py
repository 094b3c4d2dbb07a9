"""
L-value models
"""
from dataclasses import dataclass

import mpmath

from core.exceptions import PreconditionError
from exact_arith.models import QuadFieldElem


def check_critical(k, s):
    if not 1 <= s <= k - 1:
        raise PreconditionError(f's = {s} is outside the critical strip 1 <= s <= {k - 1}')


@dataclass(frozen=True)
class CompletedL:
    """Lambda(s, f) = (2 pi)^-s Gamma(s) L(s, f) under one real embedding of the Hecke field."""
    form: str
    sign: int
    s: int
    value: mpmath.mpf
    prec_bits: int

    def __str__(self):
        return f'Lambda({self.s}, {self.form}, sign={self.sign}) = {mpmath.nstr(self.value, 30)}'


@dataclass(frozen=True)
class CriticalRatio:
    """Gamma_C(l1) L(l1, f) / Gamma_C(l2) L(l2, f), independent of the periods of f."""
    form: object
    l1: int
    l2: int
    value: QuadFieldElem
    prec_bits: int = 0

    def __post_init__(self):
        if (self.l1 - self.l2) % 2:
            raise PreconditionError(f'l1 = {self.l1} and l2 = {self.l2} differ in parity')
        check_critical(self.form.weight, self.l1)
        check_critical(self.form.weight, self.l2)

    @property
    def norm(self):
        return self.value.norm()

    def __str__(self):
        return f'L({self.l1}, {self.form.name}) / L({self.l2}, {self.form.name}) = {self.value}'


@dataclass(frozen=True)
class PrimeHit:
    """A prime p with some prime ideal above it dividing a critical ratio."""
    p: int
    splitting: str
    valuations: tuple


@dataclass
class ScanResult:
    form: str
    k_j: int
    ratio: CriticalRatio
    factorization: dict
    hits: list

    @property
    def primes(self):
        return [hit.p for hit in self.hits]
