"""Monomials, monomial orders and the packed integer term keys used by the
Groebner engine.

A monomial is a tuple of non-negative exponents.  For the inner loops every
term (component, monomial) is packed into a single Python int such that
integer comparison is the module order and multiplying by a monomial is
integer addition.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from operator import add
from typing import Sequence

Monomial = tuple  # tuple[int, ...]

FIELD_BITS = 16
_FIELD_MASK = (1 << FIELD_BITS) - 1


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(add, a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def monomials_of_degree(nvars: int, d: int):
    """All exponent tuples of total degree d, in lex-descending order."""
    if d < 0:
        return
    if nvars == 0:
        if d == 0:
            yield ()
        return
    if nvars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            yield (first,) + rest


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "grevlex"

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, m: Monomial) -> tuple:
        if self.kind == "lex":
            return tuple(m)
        return (sum(m),) + tuple(-e for e in reversed(m))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def monomial_compare(a: Sequence[int], b: Sequence[int], order: MonomialOrder = GREVLEX) -> Ordering:
    if len(a) != len(b):
        raise ValueError(f"variable count mismatch: {len(a)} vs {len(b)}")
    ka, kb = order.key(tuple(a)), order.key(tuple(b))
    if ka == kb:
        return Ordering.EQ
    return Ordering.GT if ka > kb else Ordering.LT


class MonomialPacker:
    """Additive, order-preserving packing of monomials into ints."""

    def __init__(self, nvars: int, order: MonomialOrder = GREVLEX):
        self.nvars = nvars
        self.order = order
        self.bits = FIELD_BITS * max(nvars, 1)
        self._unpack_cache: dict[int, Monomial] = {}

    def pack(self, m: Monomial) -> int:
        n = self.nvars
        if n == 0:
            return 0
        key = 0
        if self.order.kind == "lex":
            for e in m:
                key = (key << FIELD_BITS) | e
            return key
        d = sum(m)
        if d > _FIELD_MASK:
            raise OverflowError("monomial degree exceeds packing width")
        key = d
        for i in range(n - 1, 0, -1):
            key = (key << FIELD_BITS) | (d - m[i])
        return key

    def unpack(self, key: int) -> Monomial:
        try:
            return self._unpack_cache[key]
        except KeyError:
            pass
        n = self.nvars
        fields = [0] * n
        k = key
        for j in range(n - 1, -1, -1):
            fields[j] = k & _FIELD_MASK
            k >>= FIELD_BITS
        if self.order.kind == "lex" or n == 0:
            m = tuple(fields)
        else:
            d = fields[0]
            e = [0] * n
            for j in range(1, n):
                e[n - j] = d - fields[j]
            e[0] = d - sum(e[1:])
            m = tuple(e)
        self._unpack_cache[key] = m
        return m


class TermEncoder:
    """Packs module terms (component, monomial) into ints.

    position: "top" (term over position), "pot" (position over term) or
    "schreyer", in which case ``parent`` and ``offsets`` give the parent
    encoder and the packed leading terms of the parent basis elements.
    Lower component indices rank higher on ties.
    """

    def __init__(self, packer: MonomialPacker, ncomp: int, position: str = "top",
                 parent: "TermEncoder | None" = None, offsets: Sequence[int] | None = None):
        if position not in ("top", "pot", "schreyer"):
            raise ValueError(f"unknown position rule {position!r}")
        if position == "schreyer" and (parent is None or offsets is None or len(offsets) != ncomp):
            raise ValueError("schreyer order needs a parent encoder and one offset per component")
        self.packer = packer
        self.ncomp = ncomp
        self.position = position
        self.parent = parent
        self.offsets = list(offsets) if offsets is not None else None
        self.cbits = max(8, ncomp.bit_length() + 1)
        self.cmask = (1 << self.cbits) - 1
        self._decode_cache: dict[int, tuple] = {}

    def shift(self, m: Monomial) -> int:
        """Integer added to a key to multiply the term by monomial m."""
        if self.position == "pot":
            return self.packer.pack(m)
        if self.position == "top":
            return self.packer.pack(m) << self.cbits
        return self.parent.shift(m) << self.cbits

    def unshift(self, s: int) -> Monomial:
        if self.position == "pot":
            return self.packer.unpack(s)
        if self.position == "top":
            return self.packer.unpack(s >> self.cbits)
        return self.parent.unshift(s >> self.cbits)

    def encode(self, comp: int, m: Monomial) -> int:
        c = self.cmask - comp
        if self.position == "top":
            return (self.packer.pack(m) << self.cbits) | c
        if self.position == "pot":
            return (c << self.packer.bits) | self.packer.pack(m)
        return ((self.parent.shift(m) + self.offsets[comp]) << self.cbits) | c

    def decode(self, key: int) -> tuple:
        try:
            return self._decode_cache[key]
        except KeyError:
            pass
        if self.position == "top":
            comp = self.cmask - (key & self.cmask)
            m = self.packer.unpack(key >> self.cbits)
        elif self.position == "pot":
            comp = self.cmask - (key >> self.packer.bits)
            m = self.packer.unpack(key & ((1 << self.packer.bits) - 1))
        else:
            comp = self.cmask - (key & self.cmask)
            m = self.parent.unshift((key >> self.cbits) - self.offsets[comp])
        out = (comp, m)
        self._decode_cache[key] = out
        return out
