"""
Harderlab exceptions
"""


class HarderLabError(Exception):
    """Base class for every computation error raised by harderlab."""
    exit_code = 1


class PreconditionError(HarderLabError, ValueError):
    """An operation was called outside its stated domain."""


class DegenerateFieldError(PreconditionError):
    """A square radicand was used where a quadratic field is required."""


class CapabilityError(HarderLabError):
    """The request is valid but outside what the configured backends can do."""
    exit_code = 3


class BudgetExceeded(CapabilityError):
    """An enumeration would visit more classes than the configured budget."""


class ReconstructionError(HarderLabError, ArithmeticError):
    """No rational of bounded height lies within tolerance of the numeric value."""


class PrecisionError(ReconstructionError):
    """The working precision cannot support the requested height bound."""


class PoleError(HarderLabError, ArithmeticError):
    """A zeta or L factor was requested at a non-negative argument."""


class OracleFailure(HarderLabError):
    """An internal consistency check of a brute-force oracle failed."""


class NotEigenformError(HarderLabError):
    """Hecke eigenvalue ratios disagree, or the table has no nonzero entry."""


class MissingCoefficient(HarderLabError, KeyError):
    """A coefficient table does not cover an index that is needed."""

    def __str__(self):
        return Exception.__str__(self)


class FixtureError(HarderLabError):
    """A fixture is missing, malformed, or disagrees with a recomputed value."""


class ReductionError(HarderLabError):
    """A Delta-expression has no normal form in the C-basis."""
