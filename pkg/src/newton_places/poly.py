"""Dense univariate polynomials over an abstract coefficient field.

One Poly class serves Q, F_p(T) and finite-field coefficients; the module
functions are the arithmetic toolbox the rest of the package builds on:
gcd, resultants (subresultant pseudo-remainder sequences over the cleared
coefficient ring), formal and divided-power (Hasse) derivatives, squarefree
tests, p-power decomposition, distinct-root counts and rational root search.

Degree of the zero polynomial is the -infinity sentinel, so comparisons such
as ``f.degree >= 1`` behave without special cases.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .domains import FiniteFieldDomain, FunctionFieldDomain, QQ, RationalDomain
from .errors import DegenerateInput
from .fppoly import FpPoly, monic_divisors
from .intfactor import positive_divisors
from .rationalfunc import RationalFunction

NEG_INF = float("-inf")


class Poly:
    """Immutable dense polynomial; coefficients ascending, trailing zeros trimmed."""

    __slots__ = ("domain", "coeffs")

    def __init__(self, domain, coeffs: Iterable = ()):
        coeffs = tuple(coeffs)
        n = len(coeffs)
        zero = domain.zero
        while n and coeffs[n - 1] == zero:
            n -= 1
        self.domain = domain
        self.coeffs = coeffs[:n]

    # --- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, domain) -> "Poly":
        return cls(domain, ())

    @classmethod
    def one(cls, domain) -> "Poly":
        return cls(domain, (domain.one,))

    @classmethod
    def x(cls, domain) -> "Poly":
        return cls(domain, (domain.zero, domain.one))

    @classmethod
    def constant(cls, domain, c) -> "Poly":
        return cls(domain, (c,))

    @classmethod
    def from_ints(cls, domain, int_coeffs: Sequence[int]) -> "Poly":
        return cls(domain, tuple(domain.from_int(n) for n in int_coeffs))

    @classmethod
    def monomial(cls, domain, c, k: int) -> "Poly":
        if c == domain.zero:
            return cls.zero(domain)
        return cls(domain, (domain.zero,) * k + (c,))

    # --- structure ------------------------------------------------------------

    @property
    def degree(self):
        """Index of the last nonzero coefficient; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self):
        if not self.coeffs:
            raise DegenerateInput("leading coefficient of zero polynomial")
        return self.coeffs[-1]

    def coeff(self, k: int):
        return self.coeffs[k] if k < len(self.coeffs) else self.domain.zero

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.domain == other.domain
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.coeffs))

    # --- arithmetic -------------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.domain, out)

    def __neg__(self) -> "Poly":
        return Poly(self.domain, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.domain)
        zero = self.domain.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai != zero:
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
        return Poly(self.domain, out)

    def scale(self, c) -> "Poly":
        if isinstance(c, int):
            c = self.domain.from_int(c)
        if c == self.domain.zero:
            return Poly.zero(self.domain)
        return Poly(self.domain, tuple(a * c for a in self.coeffs))

    def __pow__(self, n: int) -> "Poly":
        result = Poly.one(self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        dom = self.domain
        db = len(other.coeffs) - 1
        if len(self.coeffs) - 1 < db:
            return Poly.zero(dom), self
        inv_lc = dom.one / other.lc()
        rem = list(self.coeffs)
        b = other.coeffs
        zero = dom.zero
        quo = [zero] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c != zero:
                q = c * inv_lc
                quo[i - db] = q
                for j in range(db + 1):
                    rem[i - db + j] = rem[i - db + j] - q * b[j]
        return Poly(dom, quo), Poly(dom, rem[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.lc()
        if lead == self.domain.one:
            return self
        inv = self.domain.one / lead
        return Poly(self.domain, tuple(c * inv for c in self.coeffs))

    def evaluate(self, point):
        """Horner evaluation at a scalar of the coefficient field."""
        acc = self.domain.zero
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly.zero(self.domain)
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(self.domain, c)
        return acc

    def compose_affine(self, b, c) -> "Poly":
        """f(b*x + c) by Horner; b, c scalars."""
        inner = Poly(self.domain, (c, b))
        return self.compose(inner)

    def map_coefficients(self, fn: Callable, new_domain) -> "Poly":
        return Poly(new_domain, tuple(fn(c) for c in self.coeffs))

    def support(self) -> tuple[int, ...]:
        zero = self.domain.zero
        return tuple(i for i, c in enumerate(self.coeffs) if c != zero)

    def __repr__(self) -> str:
        from .parsing import poly_to_string

        return f"Poly[{self.domain!r}]({poly_to_string(self)})"


# --- spec operations -----------------------------------------------------------


def formal_derivative(a: Poly) -> Poly:
    """Coefficientwise n * a_n shift; char-p terms with p | n vanish."""
    dom = a.domain
    return Poly(
        dom,
        tuple(a.coeffs[n] * dom.from_int(n) for n in range(1, len(a.coeffs))),
    )


def hasse_derivative(a: Poly, j: int) -> Poly:
    """Divided-power derivative: x^n maps to C(n, j) x^(n-j).

    Satisfies a(x) = sum_j (D_j a)(alpha) (x - alpha)^j over any coefficient
    field, which is what vanishing-order tests in characteristic p need.
    Binomials are taken exactly and reduced into the field (contract:
    C(n, j) mod char).
    """
    if j < 0:
        raise DegenerateInput("hasse_derivative needs j >= 0")
    if j == 0:
        return a
    dom = a.domain
    return Poly(
        dom,
        tuple(
            a.coeffs[n] * dom.from_int(math.comb(n, j))
            for n in range(j, len(a.coeffs))
        ),
    )


def is_squarefree(f: Poly) -> bool:
    """gcd(f, f') = 1: distinct roots in the algebraic closure.

    This deliberately rejects inseparable-irreducible inputs such as
    x^p - T over F_p(T) (their derivative vanishes, so the gcd is f itself).
    """
    if f.is_constant():
        raise DegenerateInput("is_squarefree requires a nonconstant polynomial")
    g = poly_gcd(f, formal_derivative(f))
    return g.degree == 0


def p_power_decompose(g: Poly) -> tuple[int, Poly]:
    """Maximal r with g(x) = G(x^(p^r)); G not a polynomial in x^p.

    Constants return (0, g): every r works, so no maximal one exists.
    """
    if g.is_zero():
        raise DegenerateInput("p_power_decompose requires a nonzero polynomial")
    p = g.domain.characteristic
    if p == 0:
        return 0, g
    r = 0
    G = g
    while G.degree >= 1 and all(n % p == 0 for n in G.support()):
        G = Poly(G.domain, G.coeffs[::p])
        r += 1
    return r, G


def p_power_stretch(G: Poly, r: int) -> Poly:
    """Return G(x^(p^r)) for the domain's characteristic p."""
    p = G.domain.characteristic
    if r == 0 or G.is_constant():
        return G
    q = p ** r
    zero = G.domain.zero
    out = [zero] * ((len(G.coeffs) - 1) * q + 1) if G.coeffs else []
    for i, c in enumerate(G.coeffs):
        out[i * q] = c
    return Poly(G.domain, out)


def exponent_depth(g: Poly) -> int | None:
    """Largest e with support(g) inside p^e * Z; None (infinite) for constants."""
    if g.is_zero():
        raise DegenerateInput("exponent_depth of zero")
    if g.is_constant():
        return None
    p = g.domain.characteristic
    if p == 0:
        return 0
    e = 0
    support = [n for n in g.support() if n]
    while all(n % p == 0 for n in support):
        support = [n // p for n in support]
        e += 1
    return e


# --- gcd / resultant over the cleared coefficient ring ---------------------


class _IntRing:
    one = 1

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def divexact(a, b):
        return a // b

    @staticmethod
    def gcd(a, b):
        return math.gcd(a, b)


class _FpPolyRing:
    def __init__(self, p: int):
        self.one = FpPoly.one(p)

    @staticmethod
    def is_zero(a) -> bool:
        return a.is_zero()

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def divexact(a, b):
        return a // b

    @staticmethod
    def gcd(a, b):
        return a.gcd(b)


class _FieldRing:
    """Any coefficient field acts as a trivial UFD (units everywhere)."""

    def __init__(self, domain):
        self.domain = domain
        self.one = domain.one

    def is_zero(self, a) -> bool:
        return a == self.domain.zero

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def divexact(a, b):
        return a / b

    def gcd(self, a, b):
        return self.one if (a != self.domain.zero or b != self.domain.zero) else self.domain.zero


def _clear_denominators(f: Poly):
    """Return (ring, list of ring coefficients, scaling s) with s*f integral.

    Over Q the ring is int and s is the lcm of coefficient denominators; over
    F_p(T) the ring is FpPoly likewise; over a finite field the scaling is 1.
    """
    dom = f.domain
    if isinstance(dom, RationalDomain):
        lcm = 1
        for c in f.coeffs:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        coeffs = [int(c * lcm) for c in f.coeffs]
        return _IntRing(), coeffs, lcm
    if isinstance(dom, FunctionFieldDomain):
        lcm = FpPoly.one(dom.p)
        for c in f.coeffs:
            g = lcm.gcd(c.den)
            lcm = lcm * (c.den // g)
        coeffs = [c.num * (lcm // c.den) for c in f.coeffs]
        return _FpPolyRing(dom.p), coeffs, lcm
    return _FieldRing(dom), list(f.coeffs), dom.one


def _rp_trim(coeffs: list, ring) -> list:
    n = len(coeffs)
    while n and ring.is_zero(coeffs[n - 1]):
        n -= 1
    return coeffs[:n]


def _rp_scale(coeffs: list, c, ring) -> list:
    return [ring.mul(a, c) for a in coeffs]


def _rp_pseudo_rem(a: list, b: list, ring) -> list:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, in the ring."""
    da, db = len(a) - 1, len(b) - 1
    lead = b[-1]
    r = list(a)
    steps = da - db + 1
    while r and len(r) - 1 >= db:
        top = r[-1]
        r = _rp_scale(r, lead, ring)
        shift = len(r) - 1 - db
        for j in range(db + 1):
            r[shift + j] = ring.sub(r[shift + j], ring.mul(top, b[j]))
        r = _rp_trim(r, ring)
        steps -= 1
    if steps > 0:
        factor = lead
        for _ in range(steps - 1):
            factor = ring.mul(factor, lead)
        r = _rp_scale(r, factor, ring)
    return r


def _rp_content(coeffs: list, ring):
    content = None
    for c in coeffs:
        if ring.is_zero(c):
            continue
        content = c if content is None else ring.gcd(content, c)
    return content


def _rp_primitive(coeffs: list, ring) -> list:
    content = _rp_content(coeffs, ring)
    if content is None:
        return coeffs
    return [
        c if ring.is_zero(c) else ring.divexact(c, content) for c in coeffs
    ]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via a primitive pseudo-remainder sequence.

    Clearing denominators keeps all intermediate arithmetic in Z or F_p[T],
    which controls coefficient growth; the result is re-monicized over the
    coefficient field.
    """
    if a.domain != b.domain:
        raise DegenerateInput("gcd of polynomials over different fields")
    if a.is_zero() and b.is_zero():
        raise DegenerateInput("gcd(0, 0) is undefined")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    dom = a.domain
    if isinstance(dom, FiniteFieldDomain):
        # plain Euclid; every nonzero scalar is a unit
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()
    ring, ca, _ = _clear_denominators(a)
    _, cb, _ = _clear_denominators(b)
    ca = _rp_primitive(_rp_trim(ca, ring), ring)
    cb = _rp_primitive(_rp_trim(cb, ring), ring)
    if len(ca) < len(cb):
        ca, cb = cb, ca
    while cb:
        r = _rp_pseudo_rem(ca, cb, ring)
        ca, cb = cb, _rp_primitive(_rp_trim(r, ring), ring)
    return _ring_poly_to_field(ca, dom).monic()


def _ring_poly_to_field(coeffs: list, dom) -> Poly:
    if isinstance(dom, RationalDomain):
        return Poly(dom, tuple(Fraction(c) for c in coeffs))
    if isinstance(dom, FunctionFieldDomain):
        return Poly(dom, tuple(RationalFunction(c) for c in coeffs))
    return Poly(dom, tuple(coeffs))


def poly_gcd_many(polys: Iterable[Poly]) -> Poly:
    """Monic gcd of several polynomials, ignoring zero entries."""
    acc = None
    for f in polys:
        if f.is_zero():
            continue
        acc = f.monic() if acc is None else poly_gcd(acc, f)
        if acc.degree == 0:
            return acc
    if acc is None:
        raise DegenerateInput("gcd of an all-zero family")
    return acc


def resultant(a: Poly, b: Poly):
    """Res(a, b) via the subresultant pseudo-remainder sequence.

    Over Q (resp. F_p(T)) denominators are cleared first and the exact
    scaling Res(a, b) = Res(A, B) / (s_a^deg b * s_b^deg a) is applied at the
    end.  Returns a scalar of the coefficient field; nonzero iff a, b coprime.
    """
    if a.domain != b.domain:
        raise DegenerateInput("resultant of polynomials over different fields")
    if a.is_zero() or b.is_zero():
        raise DegenerateInput("resultant requires nonzero polynomials")
    dom = a.domain
    ring, ca, sa = _clear_denominators(a)
    _, cb, sb = _clear_denominators(b)
    res = _subresultant_prs(ca, cb, ring)
    da, db = len(ca) - 1, len(cb) - 1
    if isinstance(dom, RationalDomain):
        return Fraction(res) / (Fraction(sa) ** db * Fraction(sb) ** da)
    if isinstance(dom, FunctionFieldDomain):
        return RationalFunction(res) / (
            RationalFunction(sa) ** db * RationalFunction(sb) ** da
        )
    return res


def _subresultant_prs(a: list, b: list, ring):
    """Resultant of two nonzero ring polynomials (lists, ascending)."""
    a = _rp_trim(list(a), ring)
    b = _rp_trim(list(b), ring)
    sign = 1
    if len(a) - 1 < len(b) - 1:
        a, b = b, a
        if ((len(a) - 1) % 2) and ((len(b) - 1) % 2):
            sign = -sign
    if len(b) - 1 == 0:
        # Res(a, const) = const^(deg a)
        result = ring.one
        for _ in range(len(a) - 1):
            result = ring.mul(result, b[0])
        return result if sign == 1 else ring.neg(result)
    g = ring.one
    h = ring.one
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if (da % 2) and (db % 2):
            sign = -sign
        rem = _rp_pseudo_rem(a, b, ring)
        rem = _rp_trim(rem, ring)
        if not rem:
            # positive-degree common factor: resultant vanishes
            return ring.sub(ring.one, ring.one)
        divisor = g
        for _ in range(delta):
            divisor = ring.mul(divisor, h)
        a, b = b, [c if ring.is_zero(c) else ring.divexact(c, divisor) for c in rem]
        g = a[-1]
        if delta >= 1:
            num = g
            for _ in range(delta - 1):
                num = ring.mul(num, g)
            den = h
            for _ in range(delta - 2):
                den = ring.mul(den, h)
            h = num if delta == 1 else ring.divexact(num, den)
        if len(b) - 1 == 0:
            da = len(a) - 1
            num = b[0]
            for _ in range(da - 1):
                num = ring.mul(num, b[0])
            den = h
            for _ in range(da - 2):
                den = ring.mul(den, h)
            result = num if da == 1 else ring.divexact(num, den)
            return result if sign == 1 else ring.neg(result)


# --- root structure ---------------------------------------------------------


def distinct_root_count(g: Poly) -> int:
    """Number of distinct roots in an algebraic closure (any characteristic)."""
    total = 0
    p = g.domain.characteristic
    while g.degree >= 1:
        gp = formal_derivative(g)
        if gp.is_zero():
            # g = H(x^p); x -> x^p is injective on roots
            g = Poly(g.domain, g.coeffs[::p])
            continue
        t = poly_gcd(g, gp)
        s = g // t
        total += int(s.degree)
        rest = t
        c = poly_gcd(rest, s) if not rest.is_constant() else Poly.one(g.domain)
        while c.degree >= 1:
            rest = rest // c
            c = poly_gcd(rest, s) if not rest.is_constant() else Poly.one(g.domain)
        g = rest
    return total


def rational_roots(f: Poly) -> list:
    """Roots of f lying in the (rational or rational-function) base field."""
    if f.is_zero():
        raise DegenerateInput("rational_roots of the zero polynomial")
    dom = f.domain
    roots = []
    # strip x^v, recording the root 0
    k = 0
    while k < len(f.coeffs) and f.coeffs[k] == dom.zero:
        k += 1
    if k:
        roots.append(dom.zero)
        f = Poly(dom, f.coeffs[k:])
    if f.degree < 1:
        return roots
    if isinstance(dom, RationalDomain):
        _, coeffs, _ = _clear_denominators(f)
        c0, lead = abs(coeffs[0]), abs(coeffs[-1])
        for num in positive_divisors(c0):
            for den in positive_divisors(lead):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if f.evaluate(cand) == dom.zero and cand not in roots:
                        roots.append(cand)
    elif isinstance(dom, FunctionFieldDomain):
        _, coeffs, _ = _clear_denominators(f)
        p = dom.p
        units = range(1, p)
        for u in monic_divisors(coeffs[0]):
            for w in monic_divisors(coeffs[-1]):
                for c in units:
                    cand = RationalFunction(u.scale(c), w)
                    if f.evaluate(cand) == dom.zero and cand not in roots:
                        roots.append(cand)
    elif isinstance(dom, FiniteFieldDomain):
        for elem in dom.ctx.elements():
            if f.evaluate(elem) == dom.zero and elem not in roots:
                roots.append(elem)
    else:  # pragma: no cover
        raise DegenerateInput(f"no rational-root search over {dom!r}")
    return roots
