"""Multivariate polynomials over F_p and sparse free-module vectors.

Raw representations used throughout the package:

* polynomial: ``dict`` monomial -> nonzero coefficient in [0, p)
* vector:     ``dict`` (component, monomial) -> nonzero coefficient

``Polynomial`` is the immutable public wrapper around the raw form.
"""
from __future__ import annotations

from functools import cached_property
from operator import add
from typing import Iterable, Mapping

from .field import PrimeField
from .monomials import GREVLEX, MonomialOrder, MonomialPacker, monomials_of_degree

# -- raw polynomial helpers ------------------------------------------------


def p_add(f: dict, g: dict, p: int, sign: int = 1) -> dict:
    out = dict(f)
    for m, c in g.items():
        v = (out.get(m, 0) + sign * c) % p
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def p_scale(f: dict, c: int, p: int) -> dict:
    c %= p
    if not c:
        return {}
    return {m: (a * c) % p for m, a in f.items()}


def p_mul(f: dict, g: dict, p: int) -> dict:
    out: dict = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = tuple(map(add, m1, m2))
            v = (out.get(m, 0) + c1 * c2) % p
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def p_degree(f: dict) -> int | None:
    """Common total degree of a homogeneous polynomial, None if inhomogeneous or zero."""
    degs = {sum(m) for m in f}
    return degs.pop() if len(degs) == 1 else None


# -- raw vector helpers ----------------------------------------------------


def v_add(a: dict, b: dict, p: int, sign: int = 1) -> dict:
    out = dict(a)
    for k, c in b.items():
        v = (out.get(k, 0) + sign * c) % p
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def v_iadd(out: dict, b: dict, p: int, scale: int = 1) -> None:
    for k, c in b.items():
        v = (out.get(k, 0) + scale * c) % p
        if v:
            out[k] = v
        else:
            out.pop(k, None)


def v_scale(a: dict, c: int, p: int) -> dict:
    c %= p
    if not c:
        return {}
    return {k: (x * c) % p for k, x in a.items()}


def v_mul_poly(f: dict, a: dict, p: int) -> dict:
    out: dict = {}
    for m1, c1 in f.items():
        for (i, m2), c2 in a.items():
            k = (i, tuple(map(add, m1, m2)))
            v = (out.get(k, 0) + c1 * c2) % p
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def v_component(a: dict, i: int) -> dict:
    return {m: c for (j, m), c in a.items() if j == i}


def v_from_components(polys: Iterable[dict], offset: int = 0) -> dict:
    out = {}
    for i, f in enumerate(polys):
        for m, c in f.items():
            out[(i + offset, m)] = c
    return out


def v_reindex(a: dict, mapping) -> dict:
    """Rename components with ``mapping`` (a callable or a sequence)."""
    get = mapping if callable(mapping) else mapping.__getitem__
    return {(get(i), m): c for (i, m), c in a.items()}


def v_degree(a: dict, degrees) -> int | None:
    degs = {sum(m) + degrees[i] for (i, m) in a}
    return degs.pop() if len(degs) == 1 else None


def v_is_homogeneous(a: dict, degrees, d: int | None = None) -> bool:
    if not a:
        return True
    got = v_degree(a, degrees)
    return got is not None and (d is None or got == d)


def combine(columns, x: dict, p: int) -> dict:
    """Sum of x_j * columns[j] where x is a vector indexed by column number."""
    out: dict = {}
    for (j, m1), c1 in x.items():
        col = columns[j]
        for (i, m2), c2 in col.items():
            k = (i, tuple(map(add, m1, m2)))
            v = (out.get(k, 0) + c1 * c2) % p
            if v:
                out[k] = v
            else:
                del out[k]
    return out


# -- rings -----------------------------------------------------------------


class PolyRing:
    """Polynomial ring F_p[x_1..x_n], standard graded."""

    def __init__(self, p: int | PrimeField = 32003, names: Iterable[str] = ("x", "y"),
                 order: MonomialOrder = GREVLEX):
        self.field = p if isinstance(p, PrimeField) else PrimeField(p)
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.order = order
        self.packer = MonomialPacker(len(self.names), order)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.p == other.p
                and self.names == other.names and self.order == other.order)

    def __hash__(self):
        return hash((self.p, self.names, self.order))

    def __repr__(self):
        return f"PolyRing(F_{self.p}, {list(self.names)})"

    def one_monomial(self) -> tuple:
        return (0,) * self.nvars

    def var_monomial(self, i: int) -> tuple:
        return tuple(1 if j == i else 0 for j in range(self.nvars))

    def __call__(self, obj) -> "Polynomial":
        if isinstance(obj, Polynomial):
            if obj.ring != self:
                raise ValueError("polynomial from a different ring")
            return obj
        if isinstance(obj, int):
            c = obj % self.p
            return Polynomial(self, {self.one_monomial(): c} if c else {})
        if isinstance(obj, str):
            return Polynomial(self, parse_polynomial(obj, self))
        if isinstance(obj, Mapping):
            return Polynomial(self, {tuple(m): c % self.p for m, c in obj.items() if c % self.p})
        raise TypeError(f"cannot build a polynomial from {type(obj).__name__}")

    def gens(self) -> list["Polynomial"]:
        return [Polynomial(self, {self.var_monomial(i): 1}) for i in range(self.nvars)]

    def monomials(self, d: int):
        return list(monomials_of_degree(self.nvars, d))

    def format_monomial(self, m) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def format_raw(self, f: dict) -> str:
        if not f:
            return "0"
        okey = self.order.key
        out = []
        for m in sorted(f, key=okey, reverse=True):
            c = self.field.signed(f[m])
            mon = self.format_monomial(m)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mon:
                body = mon if a == 1 else f"{a}*{mon}"
            else:
                body = str(a)
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


class Polynomial:
    """Immutable element of a PolyRing."""

    __slots__ = ("ring", "terms", "__dict__")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def _coerce(self, other) -> dict:
        if isinstance(other, Polynomial):
            if other.ring.p != self.ring.p:
                raise ValueError("field mismatch between polynomials")
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other.terms
        if isinstance(other, int):
            c = other % self.ring.p
            return {self.ring.one_monomial(): c} if c else {}
        return NotImplemented

    def __add__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return g
        return Polynomial(self.ring, p_add(self.terms, g, self.ring.p))

    __radd__ = __add__

    def __sub__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return g
        return Polynomial(self.ring, p_add(self.terms, g, self.ring.p, -1))

    def __rsub__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return g
        return Polynomial(self.ring, p_add(g, self.terms, self.ring.p, -1))

    def __neg__(self):
        return Polynomial(self.ring, p_scale(self.terms, -1, self.ring.p))

    def __mul__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return g
        return Polynomial(self.ring, p_mul(self.terms, g, self.ring.p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = self.ring(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        g = self._coerce(other) if isinstance(other, (Polynomial, int)) else NotImplemented
        if g is NotImplemented:
            return NotImplemented
        return self.terms == g

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @cached_property
    def degree(self) -> int:
        """Total degree (max over terms); -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def leading_monomial(self):
        if not self.terms:
            return None
        return max(self.terms, key=self.ring.order.key)

    def leading_coefficient(self) -> int:
        m = self.leading_monomial()
        return 0 if m is None else self.terms[m]

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return self.ring.format_raw(self.terms)


# -- expression parsing ------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


def _tokenize(text: str, line: int, col0: int):
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        start = i
        if ch.isdigit():
            while i < len(text) and text[i].isdigit():
                i += 1
            toks.append(("num", int(text[start:i]), col0 + start))
            continue
        if ch.isalpha() or ch == "_":
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            toks.append(("name", text[start:i], col0 + start))
            continue
        if ch in "+-*^()":
            toks.append((ch, ch, col0 + i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col0 + i)
    toks.append(("end", None, col0 + len(text)))
    return toks


class _ExprParser:
    """Recursive descent over + - * ^ ( ) producing polynomials or vectors.

    A value is ("p", polydict) or ("v", vectordict); generator names
    evaluate to basis vectors, variables to polynomials.
    """

    def __init__(self, text, ring: PolyRing, generators: Mapping[str, int] | None, line, col0):
        self.toks = _tokenize(text, line, col0)
        self.pos = 0
        self.ring = ring
        self.gens = dict(generators or {})
        self.line = line
        self.p = ring.p
        self.var_index = {n: i for i, n in enumerate(ring.names)}

    def err(self, msg, tok=None):
        tok = tok or self.toks[self.pos]
        raise ParseError(msg, self.line, tok[2] + 1)

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def parse(self):
        if self.peek()[0] == "end":
            self.err("empty expression")
        v = self.expr()
        if self.peek()[0] != "end":
            self.err(f"unexpected {self.peek()[1]!r}")
        return v

    def _addsub(self, a, b, sign, tok):
        if a[0] == "p" and b[0] == "p":
            return ("p", p_add(a[1], b[1], self.p, sign))
        if a[0] == "v" and b[0] == "v":
            return ("v", v_add(a[1], b[1], self.p, sign))
        # a scalar 0 is compatible with vectors
        if a[0] == "p" and not a[1]:
            return ("v", v_scale(b[1], sign, self.p))
        if b[0] == "p" and not b[1]:
            return a
        self.err("cannot add a polynomial and a generator combination", tok)

    def expr(self):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        v = self.term()
        if sign < 0:
            v = self._neg(v)
        while self.peek()[0] in ("+", "-"):
            tok = self.take()
            w = self.term()
            v = self._addsub(v, w, 1 if tok[0] == "+" else -1, tok)
        return v

    def _neg(self, v):
        return (v[0], {k: (-c) % self.p for k, c in v[1].items()})

    def term(self):
        v = self.factor()
        while self.peek()[0] == "*":
            tok = self.take()
            w = self.factor()
            if v[0] == "p" and w[0] == "p":
                v = ("p", p_mul(v[1], w[1], self.p))
            elif v[0] == "p":
                v = ("v", v_mul_poly(v[1], w[1], self.p))
            elif w[0] == "p":
                v = ("v", v_mul_poly(w[1], v[1], self.p))
            else:
                self.err("product of two generators", tok)
        return v

    def factor(self):
        v = self.atom()
        if self.peek()[0] == "^":
            tok = self.take()
            t = self.take()
            if t[0] != "num":
                self.err("exponent must be a non-negative integer", t)
            if v[0] != "p":
                self.err("cannot raise a generator to a power", tok)
            out = {self.ring.one_monomial(): 1}
            for _ in range(t[1]):
                out = p_mul(out, v[1], self.p)
            v = ("p", out)
        return v

    def atom(self):
        t = self.take()
        if t[0] == "num":
            c = t[1] % self.p
            return ("p", {self.ring.one_monomial(): c} if c else {})
        if t[0] == "name":
            if t[1] in self.var_index:
                return ("p", {self.ring.var_monomial(self.var_index[t[1]]): 1})
            if t[1] in self.gens:
                return ("v", {(self.gens[t[1]], self.ring.one_monomial()): 1})
            self.pos -= 1
            self.err(f"unknown symbol {t[1]!r}")
        if t[0] == "(":
            v = self.expr()
            if self.peek()[0] != ")":
                self.err("expected ')'")
            self.take()
            return v
        self.pos -= 1
        self.err("expected a number, a name or '('")


def parse_polynomial(text: str, ring: PolyRing, line: int = 1, col0: int = 0) -> dict:
    kind, val = _ExprParser(text, ring, None, line, col0).parse()
    if kind != "p":
        raise ParseError("expected a polynomial", line, col0 + 1)
    return val


def parse_vector(text: str, ring: PolyRing, generators: Mapping[str, int],
                 line: int = 1, col0: int = 0) -> dict:
    parser = _ExprParser(text, ring, generators, line, col0)
    kind, val = parser.parse()
    if kind == "p":
        if val:
            raise ParseError("relation is a bare polynomial, expected generators", line, col0 + 1)
        return {}
    return val
