"""The projective line: a point-at-infinity sentinel and canonical points.

A ProjectivePoint is stored in canonical form (b = 1, or a = 1 and b = 0 for
infinity), so equality and hashing are structural.
"""

from __future__ import annotations


class _Infinity:
    """Singleton marker for the point at infinity on P^1."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"

    def __reduce__(self):  # picklable across process pools, stays a singleton
        return (_Infinity, ())


INFINITY = _Infinity()


class ProjectivePoint:
    """Canonicalized point of P^1 over a coefficient field."""

    __slots__ = ("domain", "value", "infinite")

    def __init__(self, domain, value, infinite: bool):
        self.domain = domain
        self.value = value
        self.infinite = infinite

    @classmethod
    def finite(cls, domain, value) -> "ProjectivePoint":
        return cls(domain, value, False)

    @classmethod
    def infinity(cls, domain) -> "ProjectivePoint":
        return cls(domain, None, True)

    @classmethod
    def from_pair(cls, domain, a, b) -> "ProjectivePoint":
        """Canonicalize homogeneous coordinates (a : b), not both zero."""
        if b == domain.zero:
            if a == domain.zero:
                raise ValueError("(0 : 0) is not a projective point")
            return cls.infinity(domain)
        return cls.finite(domain, a / b)

    @classmethod
    def from_value(cls, domain, x) -> "ProjectivePoint":
        """Wrap a field element or the INFINITY sentinel."""
        if x is INFINITY:
            return cls.infinity(domain)
        return cls.finite(domain, x)

    def unwrap(self):
        """The field element, or the INFINITY sentinel."""
        return INFINITY if self.infinite else self.value

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        if self.domain != other.domain:
            return False
        if self.infinite or other.infinite:
            return self.infinite and other.infinite
        return self.value == other.value

    def __hash__(self) -> int:
        return hash((self.infinite, None if self.infinite else self.value))

    def to_string(self) -> str:
        if self.infinite:
            return "inf"
        return self.domain.format_scalar(self.value)

    def __repr__(self) -> str:
        return f"P1({self.to_string()})"
