"""Coefficient-field descriptors.

A domain bundles the identity elements, the characteristic, and scalar
conversion/rendering for one coefficient field.  Three concrete kinds cover
the package: the rationals (stdlib Fraction), a rational function field
F_p(T), and a finite field F_{p^k}.  The first two are also the ground
fields problems live over.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .finitefield import FFContext, FFElem, gf
from .fppoly import FpPoly
from .rationalfunc import RationalFunction


class RationalDomain:
    """The field of rational numbers; scalars are fractions.Fraction."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)
    name = "Q"

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def format_scalar(self, c: Fraction) -> str:
        return str(c)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalDomain)

    def __hash__(self) -> int:
        return hash("RationalDomain")

    def __repr__(self) -> str:
        return "Q"


class FunctionFieldDomain:
    """The rational function field F_p(T)."""

    def __init__(self, p: int):
        self.p = p
        self.characteristic = p
        self.zero = RationalFunction.zero(p)
        self.one = RationalFunction.one(p)
        self.name = f"F{p}(T)"

    def from_int(self, n: int) -> RationalFunction:
        return RationalFunction.from_int(self.p, n)

    def t(self) -> RationalFunction:
        return RationalFunction.t(self.p)

    def format_scalar(self, c: RationalFunction) -> str:
        return c.to_string()

    def __eq__(self, other) -> bool:
        return isinstance(other, FunctionFieldDomain) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("FunctionFieldDomain", self.p))

    def __repr__(self) -> str:
        return self.name


class FiniteFieldDomain:
    """A finite field F_{p^k} used as a coefficient field (residue fields)."""

    def __init__(self, ctx: FFContext):
        self.ctx = ctx
        self.p = ctx.p
        self.characteristic = ctx.p
        self.order = ctx.order
        self.zero = ctx.zero
        self.one = ctx.one
        self.name = repr(ctx)

    def from_int(self, n: int) -> FFElem:
        return self.ctx.from_int(n)

    def format_scalar(self, c: FFElem) -> str:
        return c.to_string()

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteFieldDomain) and self.ctx == other.ctx

    def __hash__(self) -> int:
        return hash(("FiniteFieldDomain", self.ctx))

    def __repr__(self) -> str:
        return self.name


QQ = RationalDomain()


@lru_cache(maxsize=None)
def fpt(p: int) -> FunctionFieldDomain:
    return FunctionFieldDomain(p)


@lru_cache(maxsize=None)
def finite_field_domain(p: int, modulus: FpPoly | None = None) -> FiniteFieldDomain:
    return FiniteFieldDomain(gf(p, modulus))


def parse_field_spec(spec: str):
    """`Q` or `Fp(T)` with p a decimal prime, e.g. `F5(T)`."""
    from .errors import ParseError
    from .intfactor import is_prime

    s = spec.strip()
    if s == "Q":
        return QQ
    if s.startswith("F") and s.endswith("(T)"):
        digits = s[1:-3]
        if digits.isdigit():
            p = int(digits)
            if not is_prime(p):
                raise ParseError(f"field characteristic {p} is not prime", s, 1)
            return fpt(p)
    raise ParseError(f"unrecognized field spec {spec!r}; expected Q or Fp(T)", s, 0)
