"""Finite fields F_{p^k} as quotients F_p[T]/(pi).

A context object carries (p, pi); elements hold their reduced coefficient
tuple.  k = 1 uses pi = T, so F_p elements are just length-<=1 tuples.  The
orbit engine bypasses these wrappers for prime residue fields and works with
raw ints; this module is the general path for extension residue fields and
for polynomials with finite-field coefficients.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import DegenerateInput
from .fppoly import FpPoly, irreducible_test


class FFContext:
    """Immutable description of F_{p^k} = F_p[T]/(pi)."""

    __slots__ = ("p", "modulus", "degree", "order", "_zero", "_one")

    def __init__(self, p: int, modulus: FpPoly | None = None):
        if modulus is None:
            modulus = FpPoly.x(p)
        if modulus.p != p:
            raise DegenerateInput("modulus characteristic mismatch")
        if modulus.degree >= 2 and not irreducible_test(modulus):
            raise DegenerateInput(f"{modulus!r} is not irreducible")
        if modulus.lc() != 1:
            raise DegenerateInput("modulus must be monic")
        self.p = p
        self.modulus = modulus
        self.degree = modulus.degree
        self.order = p ** modulus.degree
        self._zero = FFElem(self, ())
        self._one = FFElem(self, (1,))

    @property
    def zero(self) -> "FFElem":
        return self._zero

    @property
    def one(self) -> "FFElem":
        return self._one

    def elem(self, value: FpPoly | int) -> "FFElem":
        if isinstance(value, int):
            value = FpPoly.constant(self.p, value)
        return FFElem(self, (value % self.modulus).coeffs)

    def from_int(self, n: int) -> "FFElem":
        n %= self.p
        return FFElem(self, (n,) if n else ())

    def generator(self) -> "FFElem":
        """The class of T (a field generator when k >= 2, 0 when k = 1)."""
        return self.elem(FpPoly.x(self.p))

    def elements(self) -> Iterator["FFElem"]:
        for code in range(self.order):
            coeffs = []
            rem = code
            for _ in range(self.degree):
                coeffs.append(rem % self.p)
                rem //= self.p
            yield FFElem(self, _trim_tuple(tuple(coeffs)))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FFContext)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        if self.degree == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.degree}; {self.modulus.to_string()})"


def _trim_tuple(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


@lru_cache(maxsize=None)
def gf(p: int, modulus: FpPoly | None = None) -> FFContext:
    return FFContext(p, modulus)


class FFElem:
    """An element of F_{p^k}, reduced mod the context's pi."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FFContext, coeffs: tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    def _poly(self) -> FpPoly:
        return FpPoly(self.ctx.p, self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == self.ctx.from_int(other).coeffs
        return (
            isinstance(other, FFElem)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> "FFElem":
        if isinstance(other, FFElem):
            return other
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other) -> "FFElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.ctx.p
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return FFElem(self.ctx, _trim_tuple(tuple(out)))

    __radd__ = __add__

    def __neg__(self) -> "FFElem":
        p = self.ctx.p
        return FFElem(self.ctx, tuple((-c) % p for c in self.coeffs))

    def __sub__(self, other) -> "FFElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "FFElem":
        return (-self) + other

    def __mul__(self, other) -> "FFElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self.ctx._zero
        prod = FpPoly(self.ctx.p, a) * FpPoly(self.ctx.p, b)
        if prod.degree >= self.ctx.degree:
            prod = prod % self.ctx.modulus
        return FFElem(self.ctx, prod.coeffs)

    __rmul__ = __mul__

    def inverse(self) -> "FFElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        inv = self._poly().inverse_mod(self.ctx.modulus)
        return FFElem(self.ctx, inv.coeffs)

    def __truediv__(self, other) -> "FFElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "FFElem":
        return self.inverse() * other

    # exact division in a field is plain division; the generic resultant
    # routine relies on this
    __floordiv__ = __truediv__

    def __pow__(self, n: int) -> "FFElem":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ctx._one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def to_int(self) -> int:
        """Base-p packed integer code (coeff order c_0 + c_1 p + ...)."""
        code = 0
        for c in reversed(self.coeffs):
            code = code * self.ctx.p + c
        return code

    def __repr__(self) -> str:
        return f"FF({self._poly().to_string('t')} in {self.ctx!r})"

    def to_string(self) -> str:
        if not self.coeffs:
            return "0"
        if self.ctx.degree == 1:
            return str(self.coeffs[0])
        return self._poly().to_string("t")
