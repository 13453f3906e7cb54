"""

Exceptions raised by the engine.

Every error derives from SkeinError and from the builtin it refines, so a
caller that only knows about ValueError or ZeroDivisionError still catches
it. The ``kind`` is what the command line reports in its error JSON.

"""

import re


class SkeinError(Exception):
    """Base class of all engine errors."""

    @property
    def kind(self) -> str:
        return re.sub(r"(?<!^)(?=[A-Z])", "_", type(self).__name__).lower()


class ParseError(SkeinError, ValueError):
    """Malformed braid text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class GeneratorIndexError(SkeinError, IndexError):
    """A braid letter names a generator outside 1..n-1."""


class WidthMismatch(SkeinError, ValueError):
    """Strands of one component were given different cable widths."""


class ScalarDivisionError(SkeinError, ZeroDivisionError):
    """Division of a Scalar by zero."""


class SpecializationPole(SkeinError, ZeroDivisionError):
    """A denominator specializes to the zero q-polynomial."""


class PoleAtRoot(SkeinError, ZeroDivisionError):
    """A denominator vanishes at the chosen root of unity."""


class DegenerateIdempotent(SkeinError, ArithmeticError):
    """E squared is not a nonzero multiple of E."""


class NotRepresentable(SkeinError, ValueError):
    """No partition realizes the requested highest weight."""


class MixedColors(SkeinError, ValueError):
    """Unframing asked for a link whose components carry different colors."""


class IntegralityViolation(SkeinError, ArithmeticError):
    """A value that must be a Laurent polynomial kept a denominator."""


class BudgetExceeded(SkeinError, RuntimeError):
    """The computation is larger than the configured ceiling."""


class NotAKnot(SkeinError, ValueError):
    """A knot-only operation received a link with several components."""


class FramingError(SkeinError, ArithmeticError):
    """A framing-degree postcondition does not hold."""
