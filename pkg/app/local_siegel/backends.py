"""
Sources of F_p polynomials: enumeration for small sizes, fixtures beyond
"""
import logging

from core.exceptions import CapabilityError, FixtureError
from core.fixtures import fixture_store
from exact_arith.primes import ord_p
from local_siegel.matrices import nondegenerate_part
from local_siegel.models import LocalSeriesPoly
from local_siegel.series import MAX_SIZE, Fp

logger = logging.getLogger(__name__)


def fixture_key(B, p):
    return f'Fp:{p}:{B}'


class LocalSeriesBackend:
    """Produces F_p(B, X) for the nondegenerate matrices it supports."""
    name = None

    def supports(self, B, p):
        raise NotImplementedError

    def local_series(self, B, p):
        raise NotImplementedError


class BruteForceBackend(LocalSeriesBackend):
    name = 'bruteforce'

    def __init__(self, workers=None, budget=None):
        self.workers = workers
        self.budget = budget

    def supports(self, B, p):
        return B.n <= MAX_SIZE

    def local_series(self, B, p):
        return Fp(B, p, workers=self.workers, budget=self.budget)


class FixtureBackend(LocalSeriesBackend):
    """Stored polynomials under the key Fp:<p>:<2T>."""
    name = 'fixture'

    def __init__(self, directory=None):
        self.directory = directory

    def _store(self):
        try:
            return fixture_store(self.directory)
        except FixtureError:
            return None

    def supports(self, B, p):
        store = self._store()
        return store is not None and fixture_key(B, p) in store

    def local_series(self, B, p):
        entry = self._store().entry(fixture_key(B, p))
        if 'coeffs' not in entry:
            raise FixtureError(f'Fixture {entry["key"]} has no polynomial coefficients')
        logger.info('F_%d of %s taken from fixture %s', p, B, entry.get('source', ''))
        return LocalSeriesPoly(p, entry['coeffs'])


def default_backends():
    return [BruteForceBackend(), FixtureBackend()]


def local_series(B, p, backends=None):
    """F_p(B, X) from the first backend that supports B."""
    if ord_p(B.det2T, p) == 0:
        return LocalSeriesPoly(p, [1], depth=0)
    for backend in backends or default_backends():
        if backend.supports(B, p):
            return backend.local_series(B, p)
    raise CapabilityError(
        f'F_{p} at size {B.n} needs the fixture extension point: no entry {fixture_key(B, p)}')


def Fp_star(T, p, backends=None):
    """F_p*(T, X) = F_p(T~, X); the constant 1 at rank zero."""
    if T.rank == 0:
        return LocalSeriesPoly(p, [1], depth=0)
    reduced, _ = nondegenerate_part(T)
    return local_series(reduced, p, backends)


def Fp_star_eval(T, p, x, backends=None):
    return Fp_star(T, p, backends)(x)
