"""Finite places of Q and F_p(T): enumeration, reduction, bad sets, heights.

A place is a rational prime, a monic irreducible in F_p[T], or the degree
valuation at infinity of F_p(T) (uniformizer 1/T).  Norm = order of the
residue field; places stream in (norm, tie-break) order with the infinite
place first among norm-p places and finite places ordered lexicographically
by coefficients.

The archimedean place of Q is deliberately absent from enumeration: density
statements concern the finite places only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional

from .domains import (
    FiniteFieldDomain,
    FunctionFieldDomain,
    RationalDomain,
    finite_field_domain,
)
from .errors import BadPlace, DegenerateInput, InternalCheckFailed, ParseError
from .fppoly import FpPoly, fp_factor, irreducible_test, monic_irreducibles
from .intfactor import factorint, primes_up_to
from .newton import RationalMap, newton_map_pair
from .parsing import parse_poly
from .poly import Poly, formal_derivative, resultant
from .projective import INFINITY, ProjectivePoint
from .rationalfunc import RationalFunction


class PlaceKind(Enum):
    Q_PRIME = "p"
    FF_FINITE = "pi"
    FF_INFINITY = "inf"


@dataclass(frozen=True)
class Place:
    kind: PlaceKind
    p: int
    pi: Optional[FpPoly] = None

    @property
    def norm(self) -> int:
        if self.kind is PlaceKind.FF_FINITE:
            return self.p ** self.pi.degree
        return self.p

    def sort_key(self):
        if self.kind is PlaceKind.FF_FINITE:
            return (self.norm, 1, self.pi.coeffs)
        return (self.norm, 0, ())

    def render(self) -> str:
        if self.kind is PlaceKind.Q_PRIME:
            return f"p:{self.p}"
        if self.kind is PlaceKind.FF_FINITE:
            return f"pi:{self.pi.to_string()}"
        return "inf"

    def __repr__(self) -> str:
        return f"Place({self.render()})"


def place_of_prime(p: int) -> Place:
    return Place(PlaceKind.Q_PRIME, p)


def place_of_irreducible(pi: FpPoly) -> Place:
    return Place(PlaceKind.FF_FINITE, pi.p, pi)


def place_at_infinity(p: int) -> Place:
    return Place(PlaceKind.FF_INFINITY, p)


def parse_place(text: str, field) -> Place:
    """`p:7`, `pi:T^2+1`, or `inf` (the latter two for Fp(T) only)."""
    s = text.strip()
    if isinstance(field, RationalDomain):
        if s.startswith("p:") and s[2:].isdigit():
            from .intfactor import is_prime

            p = int(s[2:])
            if not is_prime(p):
                raise ParseError(f"{p} is not prime", s, 2)
            return place_of_prime(p)
        raise ParseError("expected a place of the form p:<prime>", s, 0)
    if not isinstance(field, FunctionFieldDomain):
        raise ParseError("places exist only over Q and Fp(T)", s, 0)
    if s == "inf":
        return place_at_infinity(field.p)
    if s.startswith("pi:"):
        body = parse_scalar_poly(s[3:], field.p)
        if body.degree < 1 or body.lc() != 1 or not irreducible_test(body):
            raise ParseError("place polynomial must be monic irreducible", s, 3)
        return place_of_irreducible(body)
    raise ParseError("expected inf, pi:<poly>, or p:<prime>", s, 0)


def parse_scalar_poly(text: str, p: int) -> FpPoly:
    """Parse a polynomial in T over F_p (used for place names)."""
    from .domains import fpt

    as_scalar = parse_poly(text.replace("T", "x"), _PLAIN_FF_DOMAIN(p))
    coeffs = [c.coeffs[0] if c.coeffs else 0 for c in as_scalar.coeffs]
    return FpPoly(p, coeffs)


def _PLAIN_FF_DOMAIN(p: int):
    return finite_field_domain(p)


# --- enumeration -----------------------------------------------------------------


def enumerate_places(field, max_norm: int) -> Iterator[Place]:
    """All finite places with norm <= max_norm, sorted by (norm, tie-break)."""
    if max_norm < 2:
        raise DegenerateInput("max_norm must be at least 2")
    if isinstance(field, RationalDomain):
        for p in primes_up_to(max_norm):
            yield place_of_prime(p)
        return
    if not isinstance(field, FunctionFieldDomain):
        raise DegenerateInput(f"no places over {field!r}")
    p = field.p
    norm = p
    degree = 1
    while norm <= max_norm:
        if degree == 1:
            yield place_at_infinity(p)
        for pi in monic_irreducibles(p, degree):
            yield place_of_irreducible(pi)
        degree += 1
        norm *= p


def count_places_up_to(field, max_norm: int) -> int:
    return sum(1 for _ in enumerate_places(field, max_norm))


# --- valuations and reduction -------------------------------------------------


def valuation(x, place: Place) -> int:
    """v(x) for a nonzero element of the ground field."""
    if place.kind is PlaceKind.Q_PRIME:
        if x == 0:
            raise DegenerateInput("valuation of zero")
        p = place.p
        v = 0
        num, den = x.numerator, x.denominator
        while num % p == 0:
            v += 1
            num //= p
        while den % p == 0:
            v -= 1
            den //= p
        return v
    if place.kind is PlaceKind.FF_FINITE:
        return x.valuation_at(place.pi)
    return x.valuation_at_infinity()


def residue_domain(place: Place) -> FiniteFieldDomain:
    if place.kind is PlaceKind.FF_FINITE:
        return finite_field_domain(place.p, place.pi)
    return finite_field_domain(place.p)


def reduce_point(x, place: Place) -> ProjectivePoint:
    """Reduce a P^1(K) point (field element or INFINITY) to the residue field.

    Always defined: x is written in v-coprime coordinates first, so a pole
    reduces to the point at infinity.
    """
    dom = residue_domain(place)
    if x is INFINITY:
        return ProjectivePoint.infinity(dom)
    if place.kind is PlaceKind.Q_PRIME:
        p = place.p
        num, den = x.numerator % p, x.denominator % p
        if den == 0:
            if num == 0:
                raise InternalCheckFailed("coprime pair reduced to (0, 0)")
            return ProjectivePoint.infinity(dom)
        return ProjectivePoint.finite(
            dom, dom.from_int(num * pow(den, p - 2, p))
        )
    if place.kind is PlaceKind.FF_FINITE:
        pi = place.pi
        num, den = x.num % pi, x.den % pi
        if den.is_zero():
            if num.is_zero():
                raise InternalCheckFailed("coprime pair reduced to (0, 0)")
            return ProjectivePoint.infinity(dom)
        inv = den.inverse_mod(pi)
        return ProjectivePoint.finite(dom, dom.ctx.elem(num * inv % pi))
    # infinite place: valuation by degrees, residue via leading coefficients
    if x.is_zero():
        return ProjectivePoint.finite(dom, dom.zero)
    v = x.valuation_at_infinity()
    if v > 0:
        return ProjectivePoint.finite(dom, dom.zero)
    if v < 0:
        return ProjectivePoint.infinity(dom)
    ratio = x.num.lc() * pow(x.den.lc(), place.p - 2, place.p)
    return ProjectivePoint.finite(dom, dom.from_int(ratio))


def _scalar_min_valuation(values, place: Place) -> int:
    vmin = None
    for c in values:
        if c == 0 or (hasattr(c, "is_zero") and c.is_zero()):
            continue
        v = valuation(c, place)
        vmin = v if vmin is None else min(vmin, v)
    if vmin is None:
        raise DegenerateInput("no nonzero coefficients to normalize")
    return vmin


def _uniformizer_power(field, place: Place, k: int):
    if place.kind is PlaceKind.Q_PRIME:
        return Fraction(place.p) ** k
    if place.kind is PlaceKind.FF_FINITE:
        return RationalFunction(place.pi) ** k
    return RationalFunction(FpPoly.x(place.p)) ** (-k)  # 1/T is the uniformizer


def reduce_scalar(c, place: Place):
    """Residue of a v-integral scalar (raises on negative valuation)."""
    pt = reduce_point(c, place)
    if pt.infinite:
        raise BadPlace(f"{place.render()}: scalar has negative valuation")
    return pt.value


def reduce_map(m: RationalMap, place: Place, bad_set: "BadPlaceSet | None" = None) -> RationalMap:
    """Coefficientwise reduction of a rational map at a good place.

    The pair is first v-normalized (both parts divided by a common power of
    the uniformizer so some coefficient is a unit); the reduction must keep
    the degree and stay coprime, otherwise the place was bad and BadPlace is
    raised.
    """
    if bad_set is not None:
        reason = bad_set.reason_for(place)
        if reason is not None:
            raise BadPlace(f"{place.render()} is bad: {reason.value}")
    dom = m.domain
    coeffs = list(m.num.coeffs) + list(m.den.coeffs)
    vmin = _scalar_min_valuation(coeffs, place)
    if vmin != 0:
        scale = _uniformizer_power(dom, place, -vmin)
        num = m.num.scale(scale)
        den = m.den.scale(scale)
    else:
        num, den = m.num, m.den
    rdom = residue_domain(place)
    try:
        rnum = num.map_coefficients(lambda c: reduce_scalar(c, place), rdom)
        rden = den.map_coefficients(lambda c: reduce_scalar(c, place), rdom)
    except BadPlace:
        raise BadPlace(f"{place.render()}: map coefficients are not v-integral")
    if rden.is_zero():
        raise BadPlace(f"{place.render()}: denominator vanishes mod v")
    reduced = RationalMap(rnum, rden)
    if reduced.degree != m.degree:
        raise BadPlace(f"{place.render()}: reduction drops the map degree")
    return reduced


def reduce_poly(f: Poly, place: Place) -> Poly:
    rdom = residue_domain(place)
    return f.map_coefficients(lambda c: reduce_scalar(c, place), rdom)


# --- bad places ---------------------------------------------------------------


class BadReason(Enum):
    COEFFICIENT_DENOMINATOR = "CoefficientDenominator"
    LEADING_COEFFICIENT = "LeadingCoefficient"
    RESULTANT_F_FPRIME = "ResultantFFprime"
    RESULTANT_MAP_PAIR = "ResultantMapPair"
    DEGREE_PAIR = "DividesDegreePair"
    START_DENOMINATOR = "StartDenominator"


_REASON_ORDER = (
    BadReason.COEFFICIENT_DENOMINATOR,
    BadReason.LEADING_COEFFICIENT,
    BadReason.RESULTANT_F_FPRIME,
    BadReason.RESULTANT_MAP_PAIR,
    BadReason.DEGREE_PAIR,
    BadReason.START_DENOMINATOR,
)


@dataclass
class BadPlaceSet:
    """Finite set of places violating a good-reduction condition.

    Membership tests are divisibility checks against precomputed certificate
    values; the explicit list is materialized on demand by factoring them.
    """

    field: object
    fingerprint: str
    # Q: reason -> positive int certificate.  Fp(T): reason -> (FpPoly
    # certificate for finite places, bool flag for the infinite place).
    q_certificates: dict
    ff_certificates: dict

    def reason_for(self, place: Place) -> Optional[BadReason]:
        if place.kind is PlaceKind.Q_PRIME:
            for reason in _REASON_ORDER:
                value = self.q_certificates.get(reason)
                if value is not None and value % place.p == 0:
                    return reason
            return None
        if place.kind is PlaceKind.FF_FINITE:
            for reason in _REASON_ORDER:
                entry = self.ff_certificates.get(reason)
                if entry is None:
                    continue
                poly_cert = entry[0]
                if poly_cert is not None and (poly_cert % place.pi).is_zero():
                    return reason
            return None
        for reason in _REASON_ORDER:
            entry = self.ff_certificates.get(reason)
            if entry is not None and entry[1]:
                return reason
        return None

    def __contains__(self, place: Place) -> bool:
        return self.reason_for(place) is not None

    def places(self) -> list[tuple[Place, BadReason]]:
        """The explicit finite list, sorted by (norm, tie-break)."""
        out: dict[Place, BadReason] = {}
        if isinstance(self.field, RationalDomain):
            primes: set[int] = set()
            for value in self.q_certificates.values():
                if value not in (0, 1):
                    primes.update(factorint(value))
            for p in primes:
                place = place_of_prime(p)
                out[place] = self.reason_for(place)
        else:
            pirs: set[FpPoly] = set()
            infinity_bad = False
            for entry in self.ff_certificates.values():
                poly_cert, inf_flag = entry
                if poly_cert is not None and poly_cert.degree >= 1:
                    pirs.update(fp_factor(poly_cert))
                infinity_bad = infinity_bad or inf_flag
            if infinity_bad:
                place = place_at_infinity(self.field.p)
                out[place] = self.reason_for(place)
            for pi in pirs:
                place = place_of_irreducible(pi)
                reason = self.reason_for(place)
                if reason is not None:
                    out[place] = reason
        return sorted(out.items(), key=lambda item: item[0].sort_key())


def _q_numerator(c: Fraction) -> int:
    return abs(c.numerator)


def bad_places(f: Poly, x0, newton_map: RationalMap | None = None) -> BadPlaceSet:
    """Conservative finite superset of the places with defective reduction.

    Conditions: a coefficient of f (or x0) has negative valuation; the
    leading coefficient of f is a non-unit; v(Res(f, f')) > 0;
    v(Res(x f' - f, f')) > 0; v(d(d-1)) > 0 for d = deg f (guards the
    residue multiplier at infinity -- skipped in characteristic p when d or
    d-1 vanishes identically, where the purely-inseparable/critical analysis
    applies instead).
    """
    del newton_map  # derivable from f; accepted for interface parity
    dom = f.domain
    d = int(f.degree)
    fp_ = formal_derivative(f)
    u = Poly.x(dom) * fp_ - f
    res_ff = resultant(f, fp_)
    res_pair = resultant(u, fp_)
    fingerprint = f"{f!r}; x0={x0!r}"
    if isinstance(dom, RationalDomain):
        lcm_f = 1
        for c in f.coeffs:
            lcm_f = lcm_f * c.denominator // math.gcd(lcm_f, c.denominator)
        certs = {
            BadReason.COEFFICIENT_DENOMINATOR: lcm_f,
            BadReason.LEADING_COEFFICIENT: _q_numerator(f.lc()),
            BadReason.RESULTANT_F_FPRIME: _q_numerator(res_ff),
            BadReason.RESULTANT_MAP_PAIR: _q_numerator(res_pair),
            BadReason.DEGREE_PAIR: d * (d - 1),
            BadReason.START_DENOMINATOR: x0.denominator,
        }
        certs = {k: v for k, v in certs.items() if v not in (0, 1)}
        return BadPlaceSet(dom, fingerprint, certs, {})
    if not isinstance(dom, FunctionFieldDomain):
        raise DegenerateInput("bad places are defined over Q and Fp(T) only")
    p = dom.p
    lcm_f = FpPoly.one(p)
    worst_inf = False
    for c in f.coeffs:
        if c.is_zero():
            continue
        g = lcm_f.gcd(c.den)
        lcm_f = lcm_f * (c.den // g)
        worst_inf = worst_inf or c.valuation_at_infinity() < 0
    certs = {}
    if lcm_f.degree >= 1 or worst_inf:
        certs[BadReason.COEFFICIENT_DENOMINATOR] = (
            lcm_f if lcm_f.degree >= 1 else None,
            worst_inf,
        )
    lead = f.lc()
    lead_fin = lead.num if lead.num.degree >= 1 else None
    lead_inf = lead.valuation_at_infinity() > 0
    if lead_fin is not None or lead_inf:
        certs[BadReason.LEADING_COEFFICIENT] = (lead_fin, lead_inf)
    for reason, value in (
        (BadReason.RESULTANT_F_FPRIME, res_ff),
        (BadReason.RESULTANT_MAP_PAIR, res_pair),
    ):
        fin = value.num if value.num.degree >= 1 else None
        inf = value.valuation_at_infinity() > 0
        if fin is not None or inf:
            certs[reason] = (fin, inf)
    # degree guard: in char p both d and d-1 are constants (units or zero);
    # the zero case disables the guard by design
    if not x0.is_zero():
        x0_fin = x0.den if x0.den.degree >= 1 else None
        x0_inf = x0.valuation_at_infinity() < 0
        if x0_fin is not None or x0_inf:
            certs[BadReason.START_DENOMINATOR] = (x0_fin, x0_inf)
    return BadPlaceSet(dom, fingerprint, {}, certs)


# --- heights -----------------------------------------------------------------


@dataclass(frozen=True)
class HeightValue:
    """Logarithmic height: exact integer data plus a float view in nats."""

    field_kind: str  # "Q" | "FF"
    raw: int  # max(|a|, |b|) over Q; degree units over Fp(T)
    p: int = 0

    @property
    def nats(self) -> float:
        if self.field_kind == "Q":
            return math.log(self.raw)
        return self.raw * math.log(self.p)

    def __repr__(self) -> str:
        if self.field_kind == "Q":
            return f"h(log {self.raw})"
        return f"h({self.raw} deg)"


def height(pt: ProjectivePoint) -> HeightValue:
    """Absolute logarithmic height of a P^1(K) point.

    Q with coprime coordinates (a, b): log max(|a|, |b|); F_p(T): the max
    degree of the coprime polynomial pair, in degree units (multiply by
    log p only when a real number is required).
    """
    dom = pt.domain
    if isinstance(dom, RationalDomain):
        if pt.infinite:
            return HeightValue("Q", 1)
        x = pt.value
        return HeightValue("Q", max(abs(x.numerator), abs(x.denominator), 1))
    if isinstance(dom, FunctionFieldDomain):
        if pt.infinite:
            return HeightValue("FF", 0, dom.p)
        x = pt.value
        if x.is_zero():
            return HeightValue("FF", 0, dom.p)
        return HeightValue("FF", max(x.num.degree, x.den.degree, 0), dom.p)
    raise DegenerateInput("height is defined on P^1 over Q and Fp(T)")


def height_of_value(field, x) -> HeightValue:
    return height(ProjectivePoint.from_value(field, x))
