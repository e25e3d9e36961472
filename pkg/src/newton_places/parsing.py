"""Text grammar for polynomials, scalars and places.

Terms are `c*x^k` joined by + and -; coefficients are decimal rationals
(`3/2`) over Q, or rational functions in T (`(T^2+1)/(T+3)`, `T`, `2*T^2`)
over Fp(T).  Whitespace is insignificant.  Parsing is a small Pratt
expression parser whose values are polynomials in x, so inputs like
`(x-1)^2` work; `/` is only allowed between x-free operands.  Errors carry
the offending position.

Emitted strings round-trip: `parse_poly(poly_to_string(f)) == f`.
"""

from __future__ import annotations

from fractions import Fraction

from .domains import FunctionFieldDomain, RationalDomain
from .errors import ParseError
from .poly import Poly
from .rationalfunc import RationalFunction

_BIN_PRECEDENCE = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 30}


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int]] = []
        i = 0
        n = len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.items.append(("int", text[i:j], i))
                i = j
                continue
            if ch.isalpha():
                self.items.append(("name", ch, i))
                i += 1
                continue
            if ch in "+-*/^()":
                self.items.append((ch, ch, i))
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", text, i)
        self.pos = 0

    def peek(self):
        if self.pos < len(self.items):
            return self.items[self.pos]
        return ("end", "", len(self.text))

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok


class _PolyParser:
    """Evaluates the expression grammar directly into Poly values."""

    def __init__(self, text: str, domain):
        self.toks = _Tokens(text)
        self.domain = domain
        self.text = text

    def parse(self) -> Poly:
        value = self.expression(0)
        kind, _, pos = self.toks.peek()
        if kind != "end":
            raise ParseError("trailing input", self.text, pos)
        return value

    def expression(self, min_prec: int) -> Poly:
        left = self.atom()
        while True:
            kind, _, pos = self.toks.peek()
            prec = _BIN_PRECEDENCE.get(kind)
            if prec is None or prec < min_prec:
                return left
            self.toks.next()
            if kind == "^":
                expo = self.exponent(pos)
                left = left ** expo
                continue
            right = self.expression(prec + 1)
            if kind == "+":
                left = left + right
            elif kind == "-":
                left = left - right
            elif kind == "*":
                left = left * right
            else:  # "/"
                if right.degree > 0 or left.degree > 0:
                    raise ParseError("division involving x is not allowed", self.text, pos)
                if right.is_zero():
                    raise ParseError("division by zero", self.text, pos)
                left = left.scale(self.domain.one / right.coeff(0))
        # not reached

    def exponent(self, pos: int) -> int:
        kind, text, p2 = self.toks.next()
        if kind != "int":
            raise ParseError("exponent must be a nonnegative integer", self.text, p2)
        return int(text)

    def atom(self) -> Poly:
        kind, text, pos = self.toks.next()
        if kind == "int":
            return Poly.constant(self.domain, self.domain.from_int(int(text)))
        if kind == "name":
            if text == "x":
                return Poly.x(self.domain)
            if text == "T" and isinstance(self.domain, FunctionFieldDomain):
                return Poly.constant(self.domain, self.domain.t())
            raise ParseError(f"unknown symbol {text!r} over {self.domain!r}", self.text, pos)
        if kind == "-":
            return -self.expression(25)  # binds tighter than * but looser than ^
        if kind == "+":
            return self.expression(25)
        if kind == "(":
            inner = self.expression(0)
            kind2, _, pos2 = self.toks.next()
            if kind2 != ")":
                raise ParseError("expected ')'", self.text, pos2)
            return inner
        raise ParseError(f"unexpected token {text or kind!r}", self.text, pos)


def parse_poly(text: str, domain) -> Poly:
    """Parse a polynomial in x over the given ground field."""
    if not text.strip():
        raise ParseError("empty polynomial", text, 0)
    return _PolyParser(text, domain).parse()


def parse_scalar(text: str, domain):
    """Parse an element of the ground field (an x-free expression)."""
    value = parse_poly(text, domain)
    if value.degree > 0:
        raise ParseError("expected a scalar, found x", text, 0)
    return value.coeff(0)


# --- rendering -----------------------------------------------------------------


def scalar_to_string(domain, c) -> str:
    return domain.format_scalar(c)


def _coeff_factor(domain, c) -> tuple[str, bool]:
    """Render c as a multiplicative factor; bool = needs '*' separator."""
    if isinstance(domain, RationalDomain):
        return str(c), True
    s = c.to_string()
    if not c.is_polynomial():
        return f"({c.num.to_string()})/({c.den.to_string()})", True
    if "+" in s or s.count("*") > 0 or (s.count("-") > 0):
        return f"({s})", True
    return s, True


def poly_to_string(f: Poly, var: str = "x") -> str:
    if f.is_zero():
        return "0"
    domain = f.domain
    parts: list[str] = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if c == domain.zero:
            continue
        xpow = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if k == 0:
            term = _wrap_scalar_term(domain, c)
        elif c == domain.one:
            term = xpow
        elif c == domain.from_int(-1) and domain.characteristic != 2:
            term = f"-{xpow}"
        else:
            factor, _ = _coeff_factor(domain, c)
            term = f"{factor}*{xpow}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        if term.startswith("-"):
            out += term
        else:
            out += "+" + term
    return out


def _wrap_scalar_term(domain, c) -> str:
    if isinstance(domain, RationalDomain):
        return str(c)
    s = c.to_string()
    if not c.is_polynomial():
        return f"({c.num.to_string()})/({c.den.to_string()})"
    if "+" in s[1:] or "-" in s[1:]:
        return f"({s})"
    return s
