"""Exception hierarchy shared across the package."""

from __future__ import annotations


class NewtonPlacesError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateInput(NewtonPlacesError):
    """Input outside an operation's domain (both-zero gcd, empty scan, ...)."""


class ParseError(NewtonPlacesError):
    """Malformed problem text; carries the offending position."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} (at position {pos}: {text[pos:pos + 12]!r})")


class NotSquarefree(NewtonPlacesError):
    """gcd(f, f') != 1, so the Newton map is not defined / not simple-rooted."""


class DegreeTooSmall(NewtonPlacesError):
    """Newton-map construction requires deg f >= 2."""


class BadPlace(NewtonPlacesError):
    """A reduction step was attempted at a place that fails good-reduction."""


class IndeterminateEvaluation(NewtonPlacesError):
    """Both homogeneous coordinates vanished; the place should have been bad."""


class NonRootFixedTrap(NewtonPlacesError):
    """Residue orbit hit a finite fixed point that is not a root of f.

    Unreachable at good places (the reduced map's finite fixed points are
    exactly the roots of the reduced f); raised loudly as a soundness tripwire.
    """


class CapExceeded(NewtonPlacesError):
    """Cycle detection exhausted its step budget without finding a repeat."""


class EventuallyPeriodic(NewtonPlacesError):
    """The exact orbit repeated a value: no Newton approximation sequence."""

    def __init__(self, message: str, orbit=None):
        self.orbit = orbit
        super().__init__(message)


class HeightOverflow(NewtonPlacesError):
    """Exact orbit values outgrew the configured size bound."""

    def __init__(self, message: str, orbit=None, heights=None):
        self.orbit = orbit
        self.heights = heights
        super().__init__(message)


class PrecisionExhausted(NewtonPlacesError):
    """Renormalization in the truncated local iteration consumed every digit."""


class InseparableMap(NewtonPlacesError):
    """Critical-point analysis needs a separable map (nonzero Wronskian)."""


class NotNewtonConjugate(NewtonPlacesError):
    """The rational map could not be conjugated to a Newton map over K."""


class InternalCheckFailed(NewtonPlacesError):
    """A structural identity the theory guarantees failed to hold."""
