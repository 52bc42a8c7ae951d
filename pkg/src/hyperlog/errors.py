"""Exception hierarchy shared by all hyperlog modules."""


class HyperlogError(Exception):
    """Base class for every error raised by the toolkit."""


class ParseError(HyperlogError, ValueError):
    pass


class ModulusMismatch(HyperlogError, ValueError):
    """A unit class was applied to a rational whose denominator does not divide its modulus."""


class InvalidInput(HyperlogError, ValueError):
    pass


class TieObserved(HyperlogError, RuntimeError):
    """Two fractional parts coincided where the preconditions rule that out.

    Signals an internal bug (usually a wrong modulus), never a legitimate answer.
    """


class NotGaussType(HyperlogError, ValueError):
    pass


class BadLowerParameter(HyperlogError, ValueError):
    pass


class DivergentArgument(HyperlogError, ValueError):
    pass


class NotConvergentAt1(HyperlogError, ValueError):
    pass


class BranchCut(HyperlogError, ValueError):
    pass


class DomainError(HyperlogError, ValueError):
    pass


class NoConvergence(HyperlogError, RuntimeError):
    pass


class DegenerateDenominator(HyperlogError, ZeroDivisionError):
    pass


class ZeroPrefactor(HyperlogError, ZeroDivisionError):
    pass


class InsufficientOrder(HyperlogError, ValueError):
    pass


class NoValidPlan(HyperlogError, ValueError):
    pass


class PoleAtShift(HyperlogError, ZeroDivisionError):
    pass
