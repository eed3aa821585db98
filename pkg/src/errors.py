"""Exception hierarchy.

Every error carries the family it belongs to so the runner can map it to an
exit code: input problems exit 2, numerical failures exit 3. Each class also
derives from the closest builtin so plain ``except ValueError`` still works.
"""

from __future__ import annotations


class GfcError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


# ---------------------------------------------------------------------------
# Input / usage (exit 2)
# ---------------------------------------------------------------------------

class InputError(GfcError, ValueError):
    exit_code = 2


class LiteralParseError(InputError):
    pass


class InvalidRunConfig(InputError):
    pass


class SchemaError(InputError):
    pass


class DegenerateConfiguration(InputError):
    pass


class InvalidLambda(InputError):
    pass


class NonHyperbolic(InputError):
    pass


# ---------------------------------------------------------------------------
# Numerical failures (exit 3)
# ---------------------------------------------------------------------------

class NumericalFailure(GfcError):
    exit_code = 3


class DegenerateTriple(NumericalFailure, ValueError):
    pass


class NotFiniteOrder(NumericalFailure, ArithmeticError):
    pass


class NotAnticonformal(NumericalFailure, ValueError):
    pass


class InconsistentOrbitLengths(NumericalFailure, ArithmeticError):
    pass


class GenusOverflow(NumericalFailure, OverflowError):
    pass


class NotOnCurve(NumericalFailure, ValueError):
    pass


class RamifiedFiber(NumericalFailure, ValueError):
    pass


class NoLift(NumericalFailure, ArithmeticError):
    pass


class CapExceeded(NumericalFailure, RuntimeError):
    pass


class NotAMapToConjugate(NumericalFailure, ValueError):
    pass
