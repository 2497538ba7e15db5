"""Standard graded quotient rings R = S/I of a polynomial ring over F_p."""
from __future__ import annotations

import threading
from typing import Iterable, Sequence

from .groebner import Engine, buchberger
from .monomials import mono_divides, monomials_of_degree
from .polynomials import Polynomial, PolyRing, p_degree


class QuotientRing:
    """R = S/I with I homogeneous and proper.

    ``ideal_gb`` holds the reduced Groebner basis of I as raw polynomials.
    The ring profile (depth, dimension, canonical module, ...) is filled in
    lazily by the invariants module and cached on the instance.
    """

    def __init__(self, cover: PolyRing, ideal: Iterable = (), name: str | None = None):
        self.cover = cover
        gens = []
        for f in ideal:
            if isinstance(f, str):
                f = cover(f)
            raw = f.terms if isinstance(f, Polynomial) else dict(f)
            if raw and p_degree(raw) is None:
                raise ValueError("defining ideal must be homogeneous")
            if raw:
                gens.append(raw)
        self.ideal_gens = gens
        if gens:
            gb = buchberger([Polynomial(cover, g) for g in gens], cover)
            self.ideal_gb = [{m: c for (_, m), c in v.items()} for v in gb.generators]
        else:
            self.ideal_gb = []
        for g in self.ideal_gb:
            if all(e == 0 for m in g for e in m):
                raise ValueError("defining ideal is the unit ideal")
        self.ideal_leads = [max(g, key=cover.order.key) for g in self.ideal_gb]
        self.name = name
        self._engine = None
        self._lock = threading.Lock()
        self._profile = None
        self.cache: dict = {}

    @classmethod
    def polynomial(cls, p: int, names: Sequence[str], ideal: Iterable[str] = (), name=None):
        S = PolyRing(p, names)
        return cls(S, [S(f) for f in ideal], name=name)

    # -- basic data -------------------------------------------------------------
    @property
    def p(self) -> int:
        return self.cover.p

    @property
    def nvars(self) -> int:
        return self.cover.nvars

    @property
    def names(self):
        return self.cover.names

    @property
    def is_polynomial_ring(self) -> bool:
        return not self.ideal_gb

    def key(self):
        return (self.p, self.names,
                tuple(sorted(tuple(sorted(g.items())) for g in self.ideal_gb)))

    def same_as(self, other: "QuotientRing") -> bool:
        return self is other or self.key() == other.key()

    def __repr__(self):
        if self.name:
            return f"QuotientRing({self.name})"
        ideal = ", ".join(self.cover.format_raw(g) for g in self.ideal_gb)
        return f"QuotientRing(F_{self.p}[{','.join(self.names)}]/({ideal}))"

    def cover_ring(self) -> "QuotientRing":
        """The polynomial cover S as a QuotientRing with I = 0."""
        c = self.cache.get("cover")
        if c is None:
            c = QuotientRing(self.cover, (), name=f"F_{self.p}[{','.join(self.names)}]")
            self.cache["cover"] = c
        return c

    # -- reduction ----------------------------------------------------------------
    def _ideal_engine(self) -> Engine:
        if self._engine is None:
            eng = Engine(self.cover, [0])
            for g in self.ideal_gb:
                eng._insert(eng.pack({(0, m): c for m, c in g.items()}), None, p_degree(g))
            eng.pairs.clear()
            eng.pending.clear()
            eng.done = 10**9
            self._engine = eng
        return self._engine

    def reduce(self, f: dict) -> dict:
        """Normal form of a raw polynomial modulo I."""
        if not self.ideal_gb or not f:
            return dict(f)
        out = {}
        by_deg: dict = {}
        for m, c in f.items():
            by_deg.setdefault(sum(m), {})[m] = c
        eng = self._ideal_engine()
        for part in by_deg.values():
            r, _ = eng._reduce(eng.pack({(0, m): c for m, c in part.items()}), None, True)
            for k, c in r.items():
                out[eng.enc.decode(k)[1]] = c
        return out

    def reduce_vector(self, v: dict) -> dict:
        if not self.ideal_gb or not v:
            return dict(v)
        comps: dict = {}
        for (i, m), c in v.items():
            comps.setdefault(i, {})[m] = c
        out = {}
        for i, f in comps.items():
            for m, c in self.reduce(f).items():
                out[(i, m)] = c
        return out

    def element(self, f) -> Polynomial:
        if isinstance(f, str):
            f = self.cover(f)
        raw = f.terms if isinstance(f, Polynomial) else dict(f)
        return Polynomial(self.cover, self.reduce(raw))

    def in_ideal(self, f: dict) -> bool:
        return not self.reduce(f)

    # -- Hilbert function --------------------------------------------------------
    def standard_monomials(self, d: int) -> list:
        if d < 0:
            return []
        return [m for m in monomials_of_degree(self.nvars, d)
                if not any(mono_divides(l, m) for l in self.ideal_leads)]

    def hilbert_function(self, d: int) -> int:
        return len(self.standard_monomials(d))
