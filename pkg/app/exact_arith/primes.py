"""
Prime splitting, p-adic embeddings and valuations in quadratic fields
"""
import logging
import math
from fractions import Fraction

from sympy import isprime, jacobi_symbol, multiplicity, sqrt_mod

from core.exceptions import DegenerateFieldError, PreconditionError
from exact_arith.models import PrimeIdealSpec, QuadFieldElem, Splitting, TowerElem, is_squarefree

logger = logging.getLogger(__name__)


def kronecker(d, n):
    """Kronecker symbol (d/n) built on the Jacobi symbol."""
    if n == 0:
        return 1 if d in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if d < 0:
            result = -result
    v = multiplicity(2, n)
    if v:
        if d % 2 == 0:
            return 0
        if v % 2 and d % 8 in (3, 5):
            result = -result
        n >>= v
    if n == 1:
        return result
    return result * jacobi_symbol(d % n, n)


def field_discriminant(D):
    """Discriminant of Q(sqrt(D)) for squarefree D."""
    return D if D % 4 == 1 else 4 * D


def _check_field(p, D):
    if not isprime(p):
        raise PreconditionError(f'{p} is not prime')
    if D == 0 or not is_squarefree(D):
        raise PreconditionError(f'{D} is not a nonzero squarefree integer')
    if D == 1:
        raise DegenerateFieldError('Q(sqrt(1)) is Q; splitting is undefined')


def prime_split(p, D):
    """Decomposition of p in Q(sqrt(D)) via the Kronecker symbol of the field discriminant."""
    _check_field(p, D)
    symbol = kronecker(field_discriminant(D), p)
    if symbol == 1:
        return Splitting.SPLIT
    if symbol == -1:
        return Splitting.INERT
    return Splitting.RAMIFIED


def _hensel_root(D, p, seed, e):
    """Square root of D modulo p**e congruent to seed (mod p, or mod 4 when p = 2)."""
    if p == 2:
        r = seed
        for i in range(3, e):
            if (r * r - D) % 2 ** (i + 1):
                r += 2 ** (i - 1)
        return r % 2 ** e
    r, k = seed % p, 1
    while k < e:
        k = min(2 * k, e)
        modulus = p ** k
        r = (r - (r * r - D) * pow(2 * r, -1, modulus)) % modulus
    return r


def prime_above(p, D, residue=None, e=16):
    """PrimeIdealSpec for a prime of Q(sqrt(D)) above a split or ramified p.

    residue selects the prime by the image of sqrt(D) modulo p (modulo 4 when
    p = 2); the smallest root is used when it is omitted.
    """
    splitting = prime_split(p, D)
    if splitting == Splitting.INERT:
        raise PreconditionError(f'{p} is inert in Q(sqrt({D}))')
    if splitting == Splitting.RAMIFIED:
        return PrimeIdealSpec(p, D, D % p, 1, Splitting.RAMIFIED)
    if p == 2:
        seed = 1 if residue is None else residue % 4
        if seed not in (1, 3):
            raise PreconditionError('A 2-adic square root of D is odd')
        e = max(e, 4)
    else:
        roots = sqrt_mod(D, p, all_roots=True)
        seed = min(roots) if residue is None else residue % p
        if seed not in roots:
            raise PreconditionError(f'{residue} is not a square root of {D} modulo {p}')
    return PrimeIdealSpec(p, D, _hensel_root(D, p, seed, e), e, Splitting.SPLIT)


def with_precision(prime, e):
    """The same prime ideal with the root lifted to precision p**e."""
    if prime.splitting != Splitting.SPLIT:
        return prime
    seed = prime.root % (4 if prime.p == 2 else prime.p)
    return PrimeIdealSpec(prime.p, prime.D, _hensel_root(prime.D, prime.p, seed, e), e, Splitting.SPLIT)


def ord_p(q, p):
    """p-adic valuation of a rational; math.inf at zero."""
    q = Fraction(q)
    if q == 0:
        return math.inf
    return multiplicity(p, q.numerator) - multiplicity(p, q.denominator)


def field_norm(x):
    """Product of all conjugates of x over Q."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x) ** 2
    return x.norm()


def ord_frkp(x, prime):
    """Normalized valuation of x at the prime ideal described by prime.

    Split primes are handled through the embedding sqrt(D) -> root in Z_p; the
    root is lifted further whenever the valuation reaches its precision.
    """
    x = QuadFieldElem.coerce(x)
    if not x:
        return math.inf
    if not x.is_rational and x.D != prime.D:
        raise PreconditionError(f'{x} does not lie in Q(sqrt({prime.D}))')
    p = prime.p
    if prime.splitting == Splitting.RAMIFIED:
        return ord_p(x.norm(), p)
    if x.is_rational:
        return ord_p(x.rational_part, p)
    while True:
        reliable = prime.reliable_exponent
        image = (x.a + x.b * prime.root) % p ** reliable
        if image:
            return multiplicity(p, image) - multiplicity(p, x.c)
        logger.debug('Raising precision of %s to %d', prime, 2 * prime.e)
        prime = with_precision(prime, 2 * prime.e)


def residue(x, prime):
    """Image of x in the residue field F_p of a degree-one prime."""
    x = QuadFieldElem.coerce(x)
    p = prime.p
    if x.c % p == 0:
        raise PreconditionError(f'{x} is not integral at {prime}')
    root = 0 if x.is_rational else prime.root
    return (x.a + x.b * root) * pow(x.c, -1, p) % p


def vanishes_above(x, prime):
    """Whether a tower element lies in some prime of the tower above prime.

    prime is a degree-one prime of the subfield Q(sqrt(D2)) over an odd p.
    """
    if not isinstance(x, TowerElem):
        return residue(x, prime) == 0
    if prime.D != x.D2:
        raise PreconditionError('prime must lie in the second tower subfield')
    p = prime.p
    if p == 2:
        raise PreconditionError('Reduction above 2 in a tower is not supported')
    u, v = (residue(part, prime) for part in x.split())
    splitting = prime_split(p, x.D1)
    if splitting == Splitting.RAMIFIED:
        return u == 0
    if splitting == Splitting.INERT:
        return u == 0 and v == 0
    r = sqrt_mod(x.D1, p)
    return (u + v * r) % p == 0 or (u - v * r) % p == 0


def primes_above(p, D):
    """All primes of Q(sqrt(D)) above p, as PrimeIdealSpecs; empty when p is inert."""
    splitting = prime_split(p, D)
    if splitting == Splitting.INERT:
        return []
    if splitting == Splitting.RAMIFIED:
        return [prime_above(p, D)]
    if p == 2:
        return [prime_above(2, D, 1), prime_above(2, D, 3)]
    r = min(sqrt_mod(D, p, all_roots=True))
    return [prime_above(p, D, r), prime_above(p, D, p - r)]


def valuations_above(x, p):
    """Valuations of x at every prime above p; the inert prime gets ord_p(N(x))/2."""
    x = QuadFieldElem.coerce(x)
    if x.is_rational:
        return [ord_p(x.rational_part, p)]
    if prime_split(p, x.D) == Splitting.INERT:
        return [ord_p(x.norm(), p) // 2]
    return [ord_frkp(x, prime) for prime in primes_above(p, x.D)]
