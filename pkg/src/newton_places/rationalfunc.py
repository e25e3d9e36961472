"""Elements of the rational function field F_p(T).

Canonical form: denominator monic and coprime to the numerator; zero is 0/1.
Hashable value objects with operator overloading, so the generic polynomial
code treats them like any other field scalar.
"""

from __future__ import annotations

from .errors import DegenerateInput
from .fppoly import FpPoly


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num: FpPoly, den: FpPoly | None = None, *, _reduced: bool = False):
        if den is None:
            den = FpPoly.one(num.p)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in F_p(T)")
        if not _reduced:
            if num.is_zero():
                den = FpPoly.one(num.p)
            else:
                g = num.gcd(den)
                if g.degree >= 1:
                    num, den = num // g, den // g
                if den.lc() != 1:
                    inv = pow(den.lc(), num.p - 2, num.p)
                    num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    # --- constructors ---------------------------------------------------

    @classmethod
    def from_int(cls, p: int, n: int) -> "RationalFunction":
        return cls(FpPoly.constant(p, n), FpPoly.one(p), _reduced=True)

    @classmethod
    def t(cls, p: int) -> "RationalFunction":
        return cls(FpPoly.x(p), FpPoly.one(p), _reduced=True)

    @classmethod
    def zero(cls, p: int) -> "RationalFunction":
        return cls(FpPoly.zero(p), FpPoly.one(p), _reduced=True)

    @classmethod
    def one(cls, p: int) -> "RationalFunction":
        return cls(FpPoly.one(p), FpPoly.one(p), _reduced=True)

    # --- structure --------------------------------------------------------

    @property
    def p(self) -> int:
        return self.num.p

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_one()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RationalFunction.from_int(self.p, other)
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # --- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, int):
            return RationalFunction.from_int(self.p, other)
        if isinstance(other, FpPoly):
            return RationalFunction(other)
        return NotImplemented

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalFunction.zero(self.p)
        if other.is_constant() and other.den.is_one() and other.num.is_constant():
            return RationalFunction(self.num.scale(other.num.coeffs[0] if other.num.coeffs else 0), self.den, _reduced=True)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in F_p(T)")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        return self.inverse() * other

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n, _reduced=True)

    # --- valuations ---------------------------------------------------------

    def valuation_at(self, pi: FpPoly) -> int:
        """Order of vanishing at the finite place pi (monic irreducible)."""
        if self.is_zero():
            raise DegenerateInput("valuation of zero")
        v = 0
        g = self.num
        q, r = g.divmod(pi)
        while r.is_zero():
            v += 1
            g = q
            q, r = g.divmod(pi)
        if v:
            return v
        g = self.den
        q, r = g.divmod(pi)
        while r.is_zero():
            v -= 1
            g = q
            q, r = g.divmod(pi)
        return v

    def valuation_at_infinity(self) -> int:
        """deg(den) - deg(num): the degree valuation (uniformizer 1/T)."""
        if self.is_zero():
            raise DegenerateInput("valuation of zero")
        return self.den.degree - self.num.degree

    # --- rendering ----------------------------------------------------------

    def to_string(self) -> str:
        num = self.num.to_string()
        if self.den.is_one():
            return num
        return f"({num})/({self.den.to_string()})"

    def __repr__(self) -> str:
        return f"RF(p={self.p}, {self.to_string()})"
