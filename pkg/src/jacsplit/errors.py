"""Exception hierarchy.

Every error carries a stable ``code`` (the class name) so the CLI can emit
machine-readable failures.
"""


class JacsplitError(Exception):
    @property
    def code(self) -> str:
        return type(self).__name__


# ff
class DivisionByZero(JacsplitError, ZeroDivisionError):
    pass


class NonSquare(JacsplitError, ValueError):
    pass


class BadModulus(JacsplitError, ValueError):
    pass


# poly
class ZeroPolynomial(JacsplitError, ValueError):
    pass


# jacobian
class RepeatedRoot(JacsplitError, ValueError):
    pass


class WrongRootCount(JacsplitError, ValueError):
    pass


class RootNotRational(JacsplitError, ValueError):
    pass


class NotOnCurve(JacsplitError, ValueError):
    pass


class OddSupport(JacsplitError, ValueError):
    pass


class RootNotInR(JacsplitError, ValueError):
    pass


# halving
class InfinitePoint(JacsplitError, ValueError):
    pass


class BadSquareRoot(JacsplitError, ValueError):
    pass


class BadProduct(JacsplitError, ValueError):
    pass


class NotAHalf(JacsplitError, ValueError):
    pass


class ThetaDegenerate(JacsplitError, ValueError):
    pass


class WeierstrassInSupport(JacsplitError, ValueError):
    pass


class InternalInconsistency(JacsplitError, RuntimeError):
    """A result violated a guaranteed postcondition: a bug, not bad input."""


class DegenerateDenominator(InternalInconsistency):
    pass


# oracle / cli
class TooLarge(JacsplitError, ValueError):
    pass


class InvalidGrid(JacsplitError, ValueError):
    pass


class BadInput(JacsplitError, ValueError):
    pass
