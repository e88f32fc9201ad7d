"""Exception hierarchy shared by all modules."""


class IwagrowthError(Exception):
    """Base class for all library errors."""


class ValidationError(IwagrowthError):
    """Malformed or inconsistent input data."""


class DivisionByZero(IwagrowthError):
    """Inversion of an exact zero."""


class IndeterminateValuation(IwagrowthError):
    """Cancellation pushed the valuation beyond the known precision."""


class PrecisionExhausted(IwagrowthError):
    """A result cannot be decided at the working modulus p^N."""


class NonUnitLeadingCoefficient(IwagrowthError):
    """Polynomial division needs an invertible leading coefficient."""


class ZeroPolynomial(IwagrowthError):
    """Operation undefined for the zero polynomial."""


class PhiDividesF(IwagrowthError):
    """The closed-form rank formula requires the cyclotomic factor not to divide f."""


class NotFinite(IwagrowthError):
    """An oracle restricted to finite modules was asked about an infinite one."""


class AmbiguousSignature(IwagrowthError):
    """Neither first-row valuation strictly dominates."""


class NonUnit(IwagrowthError):
    """A p-adic unit was required."""


class InfiniteTerm(IwagrowthError):
    """A growth summand is infinite (inconsistent signature choice)."""


class NonIntegerResult(IwagrowthError):
    """An exact-rational computation that must be integral failed to be."""


class NotAvZero(IwagrowthError):
    """Closed form only valid when every trace of Frobenius is zero."""
