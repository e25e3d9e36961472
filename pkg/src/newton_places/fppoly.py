"""Dense univariate polynomials over a prime field F_p.

These carry the whole function-field side of the package: elements of F_p[T]
(numerators/denominators of F_p(T) scalars), the monic irreducibles that name
finite places, moduli of residue fields F_{p^k}, and the truncated local rings
F_p[T]/pi^k.  Coefficients are ints in [0, p), stored ascending with trailing
zeros trimmed; the zero polynomial is the empty tuple and has degree -1 here
(the generic coefficient-field polynomial in :mod:`poly` exposes the -inf
sentinel instead).
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DegenerateInput


def _trim(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


class FpPoly:
    """A polynomial over F_p with value semantics (immutable, hashable)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        self.p = p
        self.coeffs = _trim(tuple(c % p for c in coeffs))

    @classmethod
    def _raw(cls, p: int, coeffs: tuple[int, ...]) -> "FpPoly":
        # trusted constructor: coeffs already reduced and trimmed
        obj = object.__new__(cls)
        obj.p = p
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, p: int) -> "FpPoly":
        return cls._raw(p, ())

    @classmethod
    def one(cls, p: int) -> "FpPoly":
        return cls._raw(p, (1,))

    @classmethod
    def constant(cls, p: int, c: int) -> "FpPoly":
        c %= p
        return cls._raw(p, (c,) if c else ())

    @classmethod
    def x(cls, p: int) -> "FpPoly":
        return cls._raw(p, (0, 1))

    @classmethod
    def monomial(cls, p: int, c: int, k: int) -> "FpPoly":
        c %= p
        if c == 0:
            return cls.zero(p)
        return cls._raw(p, (0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def lc(self) -> int:
        if not self.coeffs:
            raise DegenerateInput("leading coefficient of the zero polynomial")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpPoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __neg__(self) -> "FpPoly":
        p = self.p
        return FpPoly._raw(p, tuple((-c) % p for c in self.coeffs))

    def __add__(self, other: "FpPoly") -> "FpPoly":
        p = self.p
        a, b = self.coeffs, other.coeffs
        if not a:
            return other
        if not b:
            return self
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return FpPoly._raw(p, _trim(tuple(out)))

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        return self + (-other)

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        p = self.p
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FpPoly.zero(p)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return FpPoly._raw(p, _trim(tuple(c % p for c in out)))

    def scale(self, c: int) -> "FpPoly":
        p = self.p
        c %= p
        if c == 0:
            return FpPoly.zero(p)
        if c == 1:
            return self
        return FpPoly._raw(p, tuple(a * c % p for a in self.coeffs))

    def shift(self, k: int) -> "FpPoly":
        """Multiply by T^k."""
        if not self.coeffs or k == 0:
            return self
        return FpPoly._raw(self.p, (0,) * k + self.coeffs)

    def divmod(self, other: "FpPoly") -> tuple["FpPoly", "FpPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        db = other.degree
        if self.degree < db:
            return FpPoly.zero(p), self
        inv_lc = pow(other.lc(), p - 2, p)
        rem = list(self.coeffs)
        b = other.coeffs
        quo = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] % p
            if c:
                q = c * inv_lc % p
                quo[i - db] = q
                for j in range(db + 1):
                    rem[i - db + j] = (rem[i - db + j] - q * b[j]) % p
        return (
            FpPoly._raw(p, _trim(tuple(quo))),
            FpPoly._raw(p, _trim(tuple(c % p for c in rem[:db]))),
        )

    def __floordiv__(self, other: "FpPoly") -> "FpPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return self.divmod(other)[1]

    def __pow__(self, n: int) -> "FpPoly":
        result = FpPoly.one(self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def pow_mod(self, n: int, modulus: "FpPoly") -> "FpPoly":
        result = FpPoly.one(self.p)
        base = self % modulus
        while n:
            if n & 1:
                result = result * base % modulus
            base = base * base % modulus
            n >>= 1
        return result

    def monic(self) -> "FpPoly":
        if self.is_zero():
            return self
        return self.scale(pow(self.lc(), self.p - 2, self.p))

    def gcd(self, other: "FpPoly") -> "FpPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def ext_gcd(self, other: "FpPoly") -> tuple["FpPoly", "FpPoly", "FpPoly"]:
        """Return (g, u, v) with u*self + v*other = g, g monic."""
        p = self.p
        r0, r1 = self, other
        s0, s1 = FpPoly.one(p), FpPoly.zero(p)
        t0, t1 = FpPoly.zero(p), FpPoly.one(p)
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        inv = pow(r0.lc(), p - 2, p)
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    def inverse_mod(self, modulus: "FpPoly") -> "FpPoly":
        g, u, _ = self.ext_gcd(modulus)
        if not g.is_one():
            raise ZeroDivisionError(f"{self} is not invertible mod {modulus}")
        return u % modulus

    def derivative(self) -> "FpPoly":
        p = self.p
        return FpPoly._raw(
            p, _trim(tuple(i * self.coeffs[i] % p for i in range(1, len(self.coeffs))))
        )

    def evaluate(self, a: int) -> int:
        p = self.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % p
        return acc

    def reverse(self) -> "FpPoly":
        """Coefficient reversal T^deg * f(1/T); used at the infinite place."""
        return FpPoly._raw(self.p, _trim(tuple(reversed(self.coeffs))))

    def to_string(self, var: str = "T") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                xp = var if i == 1 else f"{var}^{i}"
                parts.append(xp if c == 1 else f"{c}*{xp}")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"FpPoly(p={self.p}, {self.to_string()})"


# --- enumeration and irreducibility -----------------------------------------

def monic_polys(p: int, degree: int) -> Iterator[FpPoly]:
    """All monic degree-`degree` polynomials in lexicographic coefficient order.

    Lex order on (c_0, c_1, ..., c_{degree-1}) matches the place tie-break used
    by enumerate_places.
    """
    if degree == 0:
        yield FpPoly.one(p)
        return
    total = p ** degree
    for code in range(total):
        coeffs = []
        rem = code
        for _ in range(degree):
            coeffs.append(rem % p)
            rem //= p
        # interpret code digits most-significant-first as (c_0, ..., c_{d-1})
        coeffs.reverse()
        yield FpPoly(p, tuple(coeffs) + (1,))


@lru_cache(maxsize=None)
def monic_irreducibles(p: int, degree: int) -> tuple[FpPoly, ...]:
    """All monic irreducibles of the given degree, lex-ordered by coefficients."""
    if degree == 1:
        return tuple(FpPoly(p, (a, 1)) for a in range(p))
    out = []
    for f in monic_polys(p, degree):
        if _trial_division_irreducible(f):
            out.append(f)
    return tuple(out)


def _trial_division_irreducible(f: FpPoly) -> bool:
    p, d = f.p, f.degree
    for k in range(1, d // 2 + 1):
        for q in monic_irreducibles(p, k):
            if (f % q).is_zero():
                return False
    return True


def irreducible_test(pi: FpPoly) -> bool:
    """Deterministic irreducibility test by trial division (desk-scale degrees).

    Requires a monic input of degree >= 1.
    """
    if pi.is_zero() or pi.degree < 1 or pi.lc() != 1:
        raise DegenerateInput("irreducible_test requires a monic polynomial of degree >= 1")
    if pi.degree == 1:
        return True
    return _trial_division_irreducible(pi)


def count_monic_irreducibles(p: int, degree: int) -> int:
    """Necklace count (1/n) * sum_{d | n} mu(d) p^(n/d)."""
    total = 0
    for d in range(1, degree + 1):
        if degree % d == 0:
            total += _moebius(d) * p ** (degree // d)
    return total // degree


def _moebius(n: int) -> int:
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


# --- factorization (squarefree / distinct-degree / equal-degree) ------------

def fp_factor(f: FpPoly) -> dict[FpPoly, int]:
    """Factor into monic irreducibles, {factor: multiplicity}.

    The unit (leading coefficient) is dropped.  Deterministically seeded
    Cantor-Zassenhaus under the hood, so repeated runs agree.
    """
    if f.is_zero():
        raise DegenerateInput("cannot factor the zero polynomial")
    f = f.monic()
    out: dict[FpPoly, int] = {}
    for irr in _distinct_irreducible_factors(f):
        m = 0
        g = f
        while True:
            q, r = g.divmod(irr)
            if not r.is_zero():
                break
            m += 1
            g = q
        out[irr] = m
    return out


def _distinct_irreducible_factors(f: FpPoly) -> set[FpPoly]:
    p = f.p
    result: set[FpPoly] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if g.degree < 1:
            continue
        gp = g.derivative()
        if gp.is_zero():
            # g = h(T^p) = h^p over F_p: same irreducible factors as h
            stack.append(FpPoly(p, g.coeffs[::p]))
            continue
        squarefree = g // g.gcd(gp)
        for degree_part, k in _distinct_degree(squarefree):
            result.update(_equal_degree(degree_part, k))
        # factors whose multiplicity is divisible by p hide entirely in the
        # cofactor; strip the squarefree part's roots and recurse on the rest
        rest = g // squarefree
        c = rest.gcd(squarefree)
        while c.degree >= 1:
            rest = rest // c
            c = rest.gcd(squarefree)
        stack.append(rest)
    return result


def _distinct_degree(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """Split a monic squarefree f into (product of degree-k irreducibles, k)."""
    p = f.p
    out = []
    x = FpPoly.x(p)
    h = x
    k = 0
    rest = f
    while rest.degree >= 2 * (k + 1):
        k += 1
        h = h.pow_mod(p, rest)
        g = rest.gcd(h - x)
        if g.degree >= 1:
            out.append((g, k))
            rest = rest // g
            h = h % rest
    if rest.degree >= 1:
        out.append((rest, rest.degree))
    return out


def _equal_degree(f: FpPoly, k: int) -> list[FpPoly]:
    """Split a product of degree-k irreducibles into its factors."""
    p = f.p
    if f.degree == k:
        return [f]
    rng = random.Random(0xC0FFEE ^ f.degree)
    todo = [f]
    done: list[FpPoly] = []
    while todo:
        g = todo.pop()
        if g.degree == k:
            done.append(g)
            continue
        h = FpPoly(p, tuple(rng.randrange(p) for _ in range(g.degree)) + (1,))
        if p == 2:
            t = FpPoly.zero(p)
            acc = h % g
            for _ in range(k):
                t = t + acc
                acc = acc.pow_mod(2, g)
            split = g.gcd(t)
        else:
            e = (p ** k - 1) // 2
            t = h.pow_mod(e, g) - FpPoly.one(p)
            split = g.gcd(t)
        if 0 < split.degree < g.degree:
            todo.append(split)
            todo.append(g // split)
        else:
            todo.append(g)
    done.sort(key=lambda q: (q.degree, q.coeffs))
    return done


def monic_divisors(f: FpPoly) -> list[FpPoly]:
    """All monic divisors of f (desk-scale; used for rational-root search)."""
    factors = fp_factor(f)
    divisors = [FpPoly.one(f.p)]
    for irr, mult in factors.items():
        powers = [irr ** e for e in range(mult + 1)]
        divisors = [d * q for d in divisors for q in powers]
    return divisors
