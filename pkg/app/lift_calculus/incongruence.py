"""
T(2) eigenvalues of the Hecke eigenforms of weight 16 and degree 4, compared modulo a prime above 97
"""
import logging

from core.fixtures import fixture_store
from core.models import Report
from exact_arith.models import QuadFieldElem, TowerElem
from exact_arith.primes import ord_frkp, primes_above, residue, vanishes_above
from lift_calculus.eigenvalues import LiftKind, lift_eigenvalue_Tp
from qexp_elliptic.eigen import eigenform

logger = logging.getLogger(__name__)

WEIGHT = 16
DEGREE = 4
MODULUS = 97
HECKE_D = 51349
OTHER_D = 18209
LIFT_SLOT = 7
REFERENCE_SLOT = 14
BASIS = {
    1: 'I_4(phi28+)',
    2: 'I_4(phi28-)',
    3: 'A_4^(II)(phi30+, G16,2)',
    4: 'A_4^(II)(phi30-, G16,2)',
    5: 'M^(I)(phi26, I_2(phi30+))',
    6: 'M^(I)(phi26, I_2(phi30-))',
    7: 'A_4^(I)(G4,24)',
    8: 'E_4,16',
    9: '[phi16]^k',
    10: '[M^(I)(phi16, phi28+)]^k',
    11: '[M^(I)(phi16, phi28-)]^k',
    12: '[H16]^k',
    13: '[I_2(phi30-)]^k',
    14: '[I_2(phi30+)]^k',
}


def fixture_key(i):
    return f'lambda:T(2):h{i}'


def recomputed_eigenvalues():
    """The T(2) eigenvalues of the Eisenstein and Klingen-Eisenstein members of the basis."""
    values = {8: lift_eigenvalue_Tp(LiftKind.EISENSTEIN, WEIGHT, 2, degree=DEGREE)}
    values[9] = lift_eigenvalue_Tp(LiftKind.KLINGEN, WEIGHT, 2, eigenform(WEIGHT), degree=DEGREE, base_degree=1)
    for i, label in ((13, '-'), (14, '+')):
        sk = lift_eigenvalue_Tp(LiftKind.SAITO_KUROKAWA, WEIGHT, 2, eigenform(2 * WEIGHT - 2, label))
        values[i] = lift_eigenvalue_Tp(LiftKind.KLINGEN, WEIGHT, 2, sk, degree=DEGREE, base_degree=2)
    return values


def _difference(x, y):
    x, y = QuadFieldElem.coerce(x), QuadFieldElem.coerce(y)
    if OTHER_D in (x.D, y.D):
        return TowerElem.from_quad(x, OTHER_D, HECKE_D) - TowerElem.from_quad(y, OTHER_D, HECKE_D)
    return x - y


def _congruent(x, y, prime):
    return vanishes_above(_difference(x, y), prime)


def incongruence_table(directory=None, report=None, ratio=None):
    """Check that exactly one prime above 97 makes lambda(h_i) congruent to the reference for i = 7 only.

    The reference is lambda(T(2)) of [I_2(phi30+)]^k, recomputed from a(2, phi30+).
    ratio, when given, is L(28, phi30+)/L(16, phi30+); the singled out prime must divide it.
    """
    report = report or Report('incongruence-4-24')
    store = fixture_store(directory)
    published = {i: store.get(fixture_key(i)) for i in BASIS}
    recomputed = recomputed_eigenvalues()
    report.uses('fixture:published-table')
    for i, value in sorted(recomputed.items()):
        if published[i] == value:
            report.check(f'lambda(T(2)) of h{i} = {BASIS[i]} recomputed', published[i], value)
        else:
            report.note(f'published lambda(T(2)) of h{i} = {published[i]} differs from the recomputed {value}; '
                        'the recomputed value is used')
    eigenvalues = {**published, **recomputed}
    reference = eigenvalues[REFERENCE_SLOT]
    candidates = [prime for prime in primes_above(MODULUS, HECKE_D)
                  if _congruent(eigenvalues[LIFT_SLOT], reference, prime)]
    report.check(f'primes above {MODULUS} with h{LIFT_SLOT} congruent to the reference', 1, len(candidates))
    if len(candidates) != 1:
        return report
    prime = candidates[0]
    report.note(f'prime ideal {prime}: reference eigenvalue reduces to {residue(reference, prime)}')
    for i in sorted(BASIS):
        if i in (LIFT_SLOT, REFERENCE_SLOT):
            continue
        congruent = _congruent(eigenvalues[i], reference, prime)
        report.check(f'lambda(T(2)) of h{i} = {BASIS[i]} incongruent mod {prime}', False, congruent)
    if ratio is not None:
        order = ord_frkp(ratio, prime)
        report.check(f'{prime} divides L(28, phi30+)/L(16, phi30+)', True, order >= 1)
    logger.info('Incongruence table over %s: %s', prime, report.status)
    return report
