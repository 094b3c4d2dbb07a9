"""
Utils functions
"""
from fractions import Fraction

from sympy import Integer, Rational, S, SympifyError, sympify

from core.exceptions import PreconditionError
from exact_arith.models import QuadFieldElem, TowerElem, squarefree_decomposition


def format_exact(value):
    """Exact string form: "p/q", "(a+b*sqrt(D))/c", or the tower basis expansion."""
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    if isinstance(value, (QuadFieldElem, TowerElem)):
        return str(value)
    return str(value)


def _as_fraction(number):
    number = Rational(number)
    return Fraction(int(number.p), int(number.q))


def parse_exact(text):
    """Parse an exact expression in integers and sqrt(D) into Fraction, QuadFieldElem or TowerElem."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        expr = sympify(str(text), rational=True).expand()
    except (SympifyError, TypeError, SyntaxError) as exc:
        raise PreconditionError(f'{text!r} is not an exact expression') from exc
    parts = {}
    for term, coeff in expr.as_coefficients_dict().items():
        if not coeff.is_Rational:
            raise PreconditionError(f'{text!r} has a non-rational coefficient')
        if term == S.One:
            radicand = 1
        elif term.is_Pow and term.exp == S.Half and isinstance(term.base, Integer):
            radicand = int(term.base)
        else:
            raise PreconditionError(f'{text!r} is not a combination of square roots of integers')
        parts[radicand] = parts.get(radicand, Fraction(0)) + _as_fraction(coeff)
    rational = parts.pop(1, Fraction(0))
    radicands = sorted(d for d, c in parts.items() if c)
    if not radicands:
        return rational
    if len(radicands) == 1:
        return QuadFieldElem.from_parts(rational, parts[radicands[0]], radicands[0])
    D1, D2 = radicands[0], radicands[1]
    mixed = squarefree_decomposition(D1 * D2)[1]
    extra = [d for d in radicands[2:] if d != mixed]
    if extra or len(radicands) > 3:
        raise PreconditionError(f'{text!r} needs more than two independent square roots')
    value = TowerElem(D1, D2, (rational, parts[D1], parts[D2], 0))
    if mixed in parts and len(radicands) == 3:
        value = value + TowerElem.from_quad(QuadFieldElem.from_parts(0, parts[mixed], mixed), D1, D2)
    return value
