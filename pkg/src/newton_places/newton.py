"""Geometry of Newton maps.

Construction of N_f = (x f' - f)/f', degree and fixed-point data, the
(in)separability trichotomy in characteristic p, the dynamically exceptional
root locus (computed as a gcd against divided-power derivative conditions,
never by factoring f), the all-roots-exceptional normal forms, and the
recognizer that conjugates a rational map with enough critical fixed points
back to a Newton map.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import (
    DegenerateInput,
    DegreeTooSmall,
    IndeterminateEvaluation,
    InseparableMap,
    InternalCheckFailed,
    NotNewtonConjugate,
    NotSquarefree,
)
from .poly import (
    Poly,
    distinct_root_count,
    exponent_depth,
    formal_derivative,
    hasse_derivative,
    p_power_stretch,
    poly_gcd,
    rational_roots,
)
from .projective import INFINITY


# --- rational maps and fractional-linear transformations ---------------------


class RationalMap:
    """A/B with A, B coprime and B monic; degree = max(deg A, deg B)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly, *, _canonical: bool = False):
        if den.is_zero():
            raise DegenerateInput("rational map with zero denominator")
        if not _canonical:
            if num.is_zero():
                den = Poly.one(den.domain)
            else:
                g = poly_gcd(num, den)
                if g.degree >= 1:
                    num, den = num // g, den // g
            lead = den.lc()
            if lead != den.domain.one:
                inv = den.domain.one / lead
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @property
    def domain(self):
        return self.den.domain

    @property
    def degree(self) -> int:
        return int(max(self.num.degree, self.den.degree))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMap)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def evaluate(self, x):
        """Evaluate at a field element or INFINITY; returns element or INFINITY."""
        if x is INFINITY:
            dn, dd = self.num.degree, self.den.degree
            if dn > dd:
                return INFINITY
            if dn < dd:
                return self.domain.zero
            return self.num.lc() / self.den.lc()
        a = self.num.evaluate(x)
        b = self.den.evaluate(x)
        if b == self.domain.zero:
            if a == self.domain.zero:
                raise IndeterminateEvaluation(
                    "both map coordinates vanished at a field point"
                )
            return INFINITY
        return a / b

    def homogeneous_forms(self) -> tuple[list, list, int]:
        """Coefficient lists (ascending in X, implicit Y-power) of the degree-D
        homogenizations of numerator and denominator."""
        d = self.degree
        fnum = [self.num.coeff(i) for i in range(d + 1)]
        fden = [self.den.coeff(i) for i in range(d + 1)]
        return fnum, fden, d

    def to_strings(self) -> tuple[str, str]:
        from .parsing import poly_to_string

        return poly_to_string(self.num), poly_to_string(self.den)

    def __repr__(self) -> str:
        n, d = self.to_strings()
        return f"RationalMap(({n})/({d}))"


@dataclass(frozen=True)
class Mobius:
    """sigma(x) = (a x + b)/(c x + d), det != 0."""

    a: object
    b: object
    c: object
    d: object
    domain: object

    @classmethod
    def identity(cls, domain) -> "Mobius":
        return cls(domain.one, domain.zero, domain.zero, domain.one, domain)

    @classmethod
    def affine(cls, domain, scale, shift) -> "Mobius":
        return cls(scale, shift, domain.zero, domain.one, domain)

    @classmethod
    def to_infinity(cls, domain, pole) -> "Mobius":
        """x -> 1/(x - pole): moves `pole` to infinity."""
        return cls(domain.zero, domain.one, domain.one, -pole, domain)

    def det(self):
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "Mobius":
        # adjugate; projectively the inverse
        return Mobius(self.d, -self.b, -self.c, self.a, self.domain)

    def apply(self, x):
        if x is INFINITY:
            if self.c == self.domain.zero:
                return INFINITY
            return self.a / self.c
        den = self.c * x + self.d
        if den == self.domain.zero:
            return INFINITY
        return (self.a * x + self.b) / den

    def is_affine(self) -> bool:
        return self.c == self.domain.zero

    def __repr__(self) -> str:
        fs = self.domain.format_scalar
        return f"Mobius(({fs(self.a)})x + ({fs(self.b)}) / ({fs(self.c)})x + ({fs(self.d)}))"


def _form_substitute(coeffs: list, total_degree: int, m: Mobius) -> Poly:
    """Substitute (X, Y) -> (aX + bY, cX + dY) into the degree-`total_degree`
    form with the given ascending X-coefficients; result as ascending list."""
    domain = m.domain
    lin1 = Poly(domain, (m.b, m.a))  # aX + bY  with Y = 1 slot
    lin2 = Poly(domain, (m.d, m.c))  # cX + dY
    # precompute powers
    pow1 = [Poly.one(domain)]
    pow2 = [Poly.one(domain)]
    for _ in range(total_degree):
        pow1.append(pow1[-1] * lin1)
        pow2.append(pow2[-1] * lin2)
    acc = Poly.zero(domain)
    for i, c in enumerate(coeffs):
        if c != domain.zero:
            acc = acc + (pow1[i] * pow2[total_degree - i]).scale(c)
    return acc


def mobius_conjugate(m: RationalMap, sigma: Mobius) -> RationalMap:
    """Return sigma^{-1} ∘ m ∘ sigma."""
    if sigma.det() == sigma.domain.zero:
        raise DegenerateInput("singular fractional-linear transformation")
    fnum, fden, d = m.homogeneous_forms()
    num_sub = _form_substitute(fnum, d, sigma)
    den_sub = _form_substitute(fden, d, sigma)
    inv = sigma.inverse()
    new_num = num_sub.scale(inv.a) + den_sub.scale(inv.b)
    new_den = num_sub.scale(inv.c) + den_sub.scale(inv.d)
    return RationalMap(new_num, new_den)


# --- Newton map construction ------------------------------------------------


def newton_map_pair(f: Poly) -> tuple[Poly, Poly]:
    """The raw (x f' - f, f') pair before canonicalization."""
    fp = formal_derivative(f)
    num = Poly.x(f.domain) * fp - f
    return num, fp


def _require_newton_input(f: Poly) -> Poly:
    if f.is_zero() or f.degree < 2:
        raise DegreeTooSmall("Newton map needs deg f >= 2")
    fp = formal_derivative(f)
    if fp.is_zero() or poly_gcd(f, fp).degree != 0:
        raise NotSquarefree("f must satisfy gcd(f, f') = 1")
    return fp


def make_newton_map(f: Poly) -> RationalMap:
    """N_f = (x f' - f)/f' in lowest terms.

    The pair is automatically coprime for squarefree f; this is asserted
    rather than silently repaired.
    """
    fp = _require_newton_input(f)
    num = Poly.x(f.domain) * fp - f
    m = RationalMap(num, fp)
    if m.degree != int(max(num.degree, fp.degree)):
        raise InternalCheckFailed("Newton map pair unexpectedly shared a factor")
    return m


def newton_degree(f: Poly) -> int:
    """deg N_f: d unless d = 1 in the coefficient field, else d - 1."""
    _require_newton_input(f)
    d = int(f.degree)
    dom = f.domain
    if dom.from_int(d) != dom.one:
        return d
    return d - 1


@dataclass
class FixedPointData:
    finite_fixed_locus: Poly
    infinity_fixed: bool
    infinity_multiplier: Optional[object]


def fixed_point_data(f: Poly) -> FixedPointData:
    """Fixed points of N_f: the roots of f, plus infinity iff d != 1 in the field.

    When fixed, infinity carries multiplier d/(d-1); the roots are critical
    (multiplier 0).
    """
    _require_newton_input(f)
    dom = f.domain
    d = int(f.degree)
    d_elem = dom.from_int(d)
    if d_elem == dom.one:
        return FixedPointData(f.monic(), False, None)
    multiplier = d_elem / (d_elem - dom.one)
    return FixedPointData(f.monic(), True, multiplier)


# --- separability ------------------------------------------------------------


class SeparabilityKind(Enum):
    SEPARABLE = "Separable"
    INSEPARABLE = "Inseparable"
    PURELY_INSEPARABLE = "PurelyInseparable"


@dataclass
class SeparabilityClass:
    kind: SeparabilityKind
    r: int = 0
    g: Optional[Poly] = None
    h: Optional[Poly] = None
    eta: Optional[Mobius] = None

    @property
    def is_purely_inseparable(self) -> bool:
        return self.kind is SeparabilityKind.PURELY_INSEPARABLE


def separability_class(f: Poly) -> SeparabilityClass:
    """Trichotomy for N_f in characteristic p.

    N_f is inseparable iff f = x g(x^(p^r)) + h(x^(p^r)) (equivalently f' is
    a polynomial in x^p); purely inseparable iff additionally deg g <= 1 and
    deg h <= 1 at the maximal common depth r, with h/g fractional-linear
    nonconstant.  Characteristic 0 is always separable.
    """
    fp_ = _require_newton_input(f)
    dom = f.domain
    p = dom.characteristic
    if p == 0:
        return SeparabilityClass(SeparabilityKind.SEPARABLE)
    depth_g = exponent_depth(fp_)  # None means f' is constant
    if depth_g == 0:
        return SeparabilityClass(SeparabilityKind.SEPARABLE)
    h_part = f - Poly.x(dom) * fp_
    if h_part.is_zero():
        raise InternalCheckFailed("x f' - f = x f' forces f inseparable-degenerate")
    depth_h = exponent_depth(h_part)
    # f' in K[x^p] forces (f - x f')' = -x f'' = 0, so depth_h >= 1 or constant
    candidates = [e for e in (depth_g, depth_h) if e is not None]
    if not candidates:
        raise InternalCheckFailed("deg f >= 2 with f' and f - x f' both constant")
    r = min(candidates)
    q = p ** r
    g_w = Poly(dom, fp_.coeffs[::q])
    h_w = Poly(dom, h_part.coeffs[::q])
    kind = SeparabilityKind.INSEPARABLE
    eta = None
    if g_w.degree <= 1 and h_w.degree <= 1:
        g1, g0 = g_w.coeff(1), g_w.coeff(0)
        h1, h0 = h_w.coeff(1), h_w.coeff(0)
        det = h0 * g1 - h1 * g0
        if det != dom.zero:
            kind = SeparabilityKind.PURELY_INSEPARABLE
            eta = Mobius(-h1, -h0, g1, g0, dom)
    return SeparabilityClass(kind, r, g_w, h_w, eta)


# --- dynamically exceptional roots --------------------------------------------


class NormalForm(Enum):
    QUADRATIC = "Quadratic"
    ADDITIVE = "AdditiveForm"
    LAMBDA = "LambdaForm"
    NONE_OF_THESE = "NoneOfThese"


@dataclass
class ExceptionalReport:
    locus: Poly
    all_exceptional: bool
    normal_form: NormalForm
    r: Optional[int] = None
    lam: Optional[object] = None
    params_in_extension: bool = False


def exceptional_locus(f: Poly) -> Poly:
    """Monic divisor of f whose roots are exactly the exceptional roots.

    A root alpha is exceptional iff the numerator of N_f(x) - alpha, namely
    P_alpha(x) = x f'(x) - f(x) - alpha f'(x), vanishes at alpha to order
    >= D = deg N_f (it then equals c (x - alpha)^D, total ramification).
    Writing P_t = U - t V with U = x f' - f and V = f', the order conditions
    are divided-power derivative equations Q_j(t) = (D_j U)(t) - t (D_j V)(t)
    for j = 1..D-1, and the locus is gcd(f, Q_1, ..., Q_{D-1}).  Everything
    stays in K[t]: no factorization of f.
    """
    _require_newton_input(f)
    d_newton = newton_degree(f)
    u, v = newton_map_pair(f)
    locus = f.monic()
    for j in range(1, d_newton):
        qj = hasse_derivative(u, j) - Poly.x(f.domain) * hasse_derivative(v, j)
        if qj.is_zero():
            continue
        locus = poly_gcd(locus, qj)
        if locus.degree == 0:
            break
    return locus


def classify_all_exceptional(f: Poly) -> ExceptionalReport:
    """Full exceptional-root report with normal-form recognition.

    For d > 2 the all-exceptional condition must coincide with N_f being
    purely inseparable; that identity is enforced as an internal check.
    Normal-form parameters are extracted only when they exist in K under the
    (B, C) = (1, 0) normalization; otherwise the case tag is reported with
    params_in_extension set.
    """
    locus = exceptional_locus(f)
    all_exc = locus == f.monic()
    d = int(f.degree)
    dom = f.domain
    if d == 2:
        if not all_exc:
            raise InternalCheckFailed("both roots of a quadratic are exceptional")
        return ExceptionalReport(locus, True, NormalForm.QUADRATIC)
    sep = separability_class(f)
    if all_exc != sep.is_purely_inseparable:
        raise InternalCheckFailed(
            "for d > 2, all-exceptional must match purely inseparable"
        )
    if not all_exc:
        return ExceptionalReport(locus, False, NormalForm.NONE_OF_THESE)
    p = dom.characteristic
    r = sep.r
    q = p ** r
    if dom.from_int(d) != dom.one:
        # d = q: affinely equivalent to x^q - x over the closure
        if d != q:
            raise InternalCheckFailed("purely inseparable degree must be p^r here")
        a, b, c = f.coeff(d), f.coeff(1), f.coeff(0)
        in_field = b == -a and c == dom.zero
        return ExceptionalReport(
            locus, True, NormalForm.ADDITIVE, r=r, params_in_extension=not in_field
        )
    # d = q + 1: lambda family x^(q+1) - (lam+1) x^q + lam x
    if d != q + 1:
        raise InternalCheckFailed("purely inseparable degree must be p^r + 1 here")
    lam = None
    in_field = False
    if f.coeff(0) == dom.zero and f.evaluate(dom.one) == dom.zero:
        g1 = f.coeff(d)
        lam_candidate = f.coeff(1) / g1
        model = _lambda_model(dom, q, lam_candidate)
        if f.scale(dom.one / g1) == model:
            lam = lam_candidate
            in_field = True
    return ExceptionalReport(
        locus, True, NormalForm.LAMBDA, r=r, lam=lam, params_in_extension=not in_field
    )


def _lambda_model(dom, q: int, lam) -> Poly:
    """x^(q+1) - (lam+1) x^q + lam x."""
    zero = dom.zero
    coeffs = [zero] * (q + 2)
    coeffs[q + 1] = dom.one
    coeffs[q] = -(lam + dom.one)
    coeffs[1] = lam
    return Poly(dom, coeffs)


def additive_model(dom, q: int) -> Poly:
    """x^q - x."""
    zero = dom.zero
    coeffs = [zero] * (q + 1)
    coeffs[q] = dom.one
    coeffs[1] = -dom.one
    return Poly(dom, coeffs)


def lambda_model(dom, q: int, lam) -> Poly:
    return _lambda_model(dom, q, lam)


# --- dynamical characterization of Newton maps --------------------------------


def _wronskian(m: RationalMap) -> Poly:
    a, b = m.num, m.den
    return b * formal_derivative(a) - a * formal_derivative(b)


def _fixed_point_poly(m: RationalMap) -> Poly:
    return Poly.x(m.domain) * m.den - m.num


def _infinity_fixed(m: RationalMap) -> bool:
    return m.num.degree > m.den.degree


def _infinity_critical(m: RationalMap) -> bool:
    # ramification index of the map at a fixed infinity is deg(num) - deg(den)
    return int(m.num.degree) - int(m.den.degree) >= 2


def critical_fixed_point_count(m: RationalMap) -> int:
    """Number of distinct critical fixed points in P^1 over the closure.

    Finite criticals are the roots of the Wronskian B A' - A B'; finite fixed
    points are the roots of x B - A; infinity is checked explicitly.  A zero
    Wronskian means the map is inseparable and has no well-defined critical
    divisor, which is rejected.
    """
    if m.degree < 2:
        raise DegenerateInput("critical fixed points need deg >= 2")
    w = _wronskian(m)
    if w.is_zero():
        raise InseparableMap("B A' - A B' vanishes identically")
    phi = _fixed_point_poly(m)
    count = 0
    if not phi.is_zero():
        g = poly_gcd(phi, w)
        if g.degree >= 1:
            count += distinct_root_count(g)
    if _infinity_fixed(m) and _infinity_critical(m):
        count += 1
    return count


def recover_polynomial(m: RationalMap) -> tuple[Poly, Mobius]:
    """Invert f -> N_f up to conjugation.

    Requires at least deg(m) critical fixed points.  A K-rational fixed point
    is conjugated to infinity (preferring a non-critical one, so sigma = id
    whenever m already fixes a non-critical infinity); then f = x B - A for
    the conjugated map A/B, with the identities A' = x B', f' = B and
    gcd(f, f') = 1 verified before returning.
    """
    d = m.degree
    if critical_fixed_point_count(m) < d:
        raise NotNewtonConjugate(f"fewer than {d} critical fixed points")
    dom = m.domain
    w = _wronskian(m)
    phi = _fixed_point_poly(m)
    finite_fixed = rational_roots(phi) if not phi.is_zero() else []
    candidates: list[tuple[bool, object]] = []
    if _infinity_fixed(m):
        candidates.append((_infinity_critical(m), INFINITY))
    for rho in finite_fixed:
        candidates.append((w.evaluate(rho) == dom.zero, rho))
    noncritical = [pt for crit, pt in candidates if not crit]
    critical = [pt for crit, pt in candidates if crit]
    pool = noncritical or critical
    if not pool:
        raise NotNewtonConjugate("no K-rational fixed point to send to infinity")
    # prefer infinity so that sigma = id when possible
    chosen = INFINITY if INFINITY in pool else pool[0]
    if chosen is INFINITY:
        sigma = Mobius.identity(dom)
        psi = m
    else:
        sigma = Mobius.to_infinity(dom, chosen)
        psi = mobius_conjugate(m, sigma.inverse())
    a, b = psi.num, psi.den
    if not a.degree > b.degree:
        raise NotNewtonConjugate("conjugated map does not fix infinity")
    f = Poly.x(dom) * b - a
    # structural identities from the critical-fixed-point hypothesis
    if formal_derivative(a) != Poly.x(dom) * formal_derivative(b):
        raise NotNewtonConjugate("A' = x B' identity failed")
    fp_ = formal_derivative(f)
    if fp_.is_zero() or poly_gcd(f, fp_).degree != 0:
        raise NotNewtonConjugate("recovered polynomial is not squarefree")
    f = f.monic()
    if make_newton_map(f) != psi:
        raise NotNewtonConjugate("recovered polynomial does not reproduce the map")
    return f, sigma


def conjugate_check(f: Poly, a, b, c) -> bool:
    """Verify N_g = sigma^{-1} N_f sigma for g = a*f(b x + c), sigma = b x + c.

    Holds identically whenever a*b != 0; exposed as a self-test.
    """
    dom = f.domain
    if a == dom.zero or b == dom.zero:
        raise DegenerateInput("conjugate_check needs a*b != 0")
    g = f.compose_affine(b, c).scale(a)
    n_g = make_newton_map(g)
    sigma = Mobius.affine(dom, b, c)
    expected = mobius_conjugate(make_newton_map(f), sigma)
    return n_g == expected


def newton_analysis(f: Poly) -> dict:
    """Structured geometric report for one polynomial (JSON-ready)."""
    from .parsing import poly_to_string

    dom = f.domain
    n_map = make_newton_map(f)
    fixed = fixed_point_data(f)
    sep = separability_class(f)
    exc = classify_all_exceptional(f)
    num_s, den_s = n_map.to_strings()
    return {
        "degree_f": int(f.degree),
        "degree_newton": newton_degree(f),
        "infinity_fixed": fixed.infinity_fixed,
        "infinity_multiplier": (
            None
            if fixed.infinity_multiplier is None
            else dom.format_scalar(fixed.infinity_multiplier)
        ),
        "separability": {"class": sep.kind.value, "r": sep.r},
        "exceptional": {
            "locus": poly_to_string(exc.locus),
            "all_exceptional": exc.all_exceptional,
            "normal_form": exc.normal_form.value,
            "lambda": None if exc.lam is None else dom.format_scalar(exc.lam),
            "params_in_extension": exc.params_in_extension,
        },
        "numerator": num_s,
        "denominator": den_s,
    }
