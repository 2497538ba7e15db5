"""Groebner bases, normal forms and syzygies for graded submodules of S^m.

The engine works degree by degree (normal selection on homogeneous input),
so a basis computed through degree d already gives correct normal forms for
all elements of degree <= d.  Cofactor tracking expresses every basis
element in terms of the tracked input generators; S-pairs (and inputs) that
reduce to zero then yield syzygies, which by Schreyer's theorem generate the
full syzygy module.  Inputs added as *base* carry no cofactor, which yields
syzygies modulo the base submodule directly.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Sequence

from . import _runtime
from .kernels import reduce_packed
from .matrices import GradedFreeModule
from .monomials import GREVLEX, MonomialOrder, TermEncoder, mono_divides, mono_lcm
from .polynomials import Polynomial, PolyRing, v_degree


@dataclass(frozen=True)
class ModuleOrder:
    """Order on module terms x^a e_i.

    position: "top" (term over position), "pot" (position over term) or
    "schreyer"; the Schreyer order compares x^a e_i by x^a * LT(g_i) in the
    parent order, ties broken by component index.
    """
    base: MonomialOrder = GREVLEX
    position: str = "top"
    parent: "ModuleOrder | None" = None
    parent_leads: tuple = ()          # ((comp, exps), ...) leading terms of the parent basis

    def __post_init__(self):
        if self.position not in ("top", "pot", "schreyer"):
            raise ValueError(f"unknown position rule {self.position!r}")
        if self.position == "schreyer" and self.parent is None:
            raise ValueError("schreyer order requires a parent order")

    def encoder(self, ring: PolyRing, ncomp: int) -> TermEncoder:
        packer = ring.packer if ring.order == self.base else _packer(ring, self.base)
        if self.position != "schreyer":
            return TermEncoder(packer, ncomp, self.position)
        pcomps = max((c for c, _ in self.parent_leads), default=-1) + 1
        penc = self.parent.encoder(ring, pcomps)
        offsets = [penc.encode(c, m) for c, m in self.parent_leads]
        if len(offsets) != ncomp:
            raise ValueError("schreyer order: one parent leading term per component required")
        return TermEncoder(packer, ncomp, "schreyer", parent=penc, offsets=offsets)

    def compare(self, ring: PolyRing, ncomp: int, a: tuple, b: tuple) -> int:
        enc = self.encoder(ring, ncomp)
        ka, kb = enc.encode(*a), enc.encode(*b)
        return (ka > kb) - (ka < kb)


def _packer(ring, order):
    from .monomials import MonomialPacker
    return MonomialPacker(ring.nvars, order)


DEFAULT_ORDER = ModuleOrder()


class _Element:
    __slots__ = ("poly", "lead", "comp", "lexps", "deg", "rep", "alive")

    def __init__(self, poly, lead, comp, lexps, deg, rep):
        self.poly = poly
        self.lead = lead
        self.comp = comp
        self.lexps = lexps
        self.deg = deg
        self.rep = rep
        self.alive = True


class Engine:
    """Incremental homogeneous Buchberger engine over S = ring (no quotient).

    ``degrees`` are the generator degrees of the ambient free module.  With
    ``ntracked`` set, inputs added through :meth:`add` with an index carry a
    cofactor vector in S^ntracked and zero reductions are recorded as
    syzygies.
    """

    def __init__(self, ring: PolyRing, degrees: Sequence[int], order: ModuleOrder = DEFAULT_ORDER,
                 ntracked: int | None = None):
        self.ring = ring
        self.p = ring.p
        self.degrees = tuple(degrees)
        self.enc = order.encoder(ring, len(self.degrees))
        self.order = order
        self.track = ntracked is not None
        self.ntracked = ntracked or 0
        if self.track:
            self.renc = TermEncoder(ring.packer, max(self.ntracked, 1), "top")
        self.basis: list[_Element] = []
        self.by_comp: dict[int, list[int]] = {}
        self.pairs: list = []            # heap of (deg, lcm_key, i, j)
        self.pending: set = set()
        self.inputs: list = []           # heap of (deg, seq, packed, rep)
        self._seq = itertools.count()
        self.done = -10**9               # all work of degree <= done is finished
        self.syz: list[dict] = []        # packed cofactor syzygies

    # -- conversion -------------------------------------------------------
    def pack(self, vec: dict) -> dict:
        enc = self.enc.encode
        return {enc(i, m): c for (i, m), c in vec.items()}

    def unpack(self, packed: dict) -> dict:
        dec = self.enc.decode
        return {dec(k): c for k, c in packed.items()}

    def unpack_rep(self, packed: dict) -> dict:
        dec = self.renc.decode
        return {dec(k): c for k, c in packed.items()}

    def _rep_shift(self, shift: int) -> int:
        return self.renc.shift(self.enc.unshift(shift))

    # -- input ------------------------------------------------------------
    def add(self, vec: dict, index: int | None = None) -> None:
        """Queue a homogeneous generator; ``index`` marks it as tracked."""
        if not vec:
            if self.track and index is not None:
                self.syz.append({self.renc.encode(index, self.ring.one_monomial()): 1})
            return
        d = v_degree(vec, self.degrees)
        if d is None:
            raise ValueError("inhomogeneous generator")
        rep = None
        if self.track:
            rep = {} if index is None else {self.renc.encode(index, self.ring.one_monomial()): 1}
        if d <= self.done:
            # late input below the finished degree: handle immediately
            self._insert_input(self.pack(vec), rep, d)
            return
        heapq.heappush(self.inputs, (d, next(self._seq), self.pack(vec), rep))

    # -- core loop ----------------------------------------------------------
    def run(self, max_degree: int | None = None) -> None:
        while True:
            nd = None
            if self.pairs:
                nd = self.pairs[0][0]
            if self.inputs and (nd is None or self.inputs[0][0] < nd):
                nd = self.inputs[0][0]
            if nd is None or (max_degree is not None and nd > max_degree):
                break
            _runtime.check_deadline()
            while self.pairs and self.pairs[0][0] == nd:
                _, _, i, j = heapq.heappop(self.pairs)
                self.pending.discard((i, j))
                self._process_pair(i, j, nd)
            while self.inputs and self.inputs[0][0] == nd:
                _, _, packed, rep = heapq.heappop(self.inputs)
                self._insert_input(packed, rep, nd)
        if max_degree is None:
            self.done = 10**9
        else:
            self.done = max(self.done, max_degree)

    def _insert_input(self, packed, rep, d):
        r, rep = self._reduce(packed, rep, full=True)
        if r:
            self._insert(r, rep, d)
        elif rep:
            self.syz.append(rep)

    def _process_pair(self, i, j, d):
        bi, bj = self.basis[i], self.basis[j]
        L = mono_lcm(bi.lexps, bj.lexps)
        if self._chain_criterion(i, j, bi.comp, L):
            return
        if not self.track and self.enc.ncomp == 1 and all(
                a == 0 or b == 0 for a, b in zip(bi.lexps, bj.lexps)):
            return  # coprime leading monomials
        enc = self.enc
        Lkey = enc.encode(bi.comp, L)
        si, sj = Lkey - bi.lead, Lkey - bj.lead
        p = self.p
        f = {}
        for k, c in bi.poly.items():
            f[k + si] = c
        for k, c in bj.poly.items():
            kk = k + sj
            v = (f.get(kk, 0) - c) % p
            if v:
                f[kk] = v
            else:
                f.pop(kk, None)
        rep = None
        if self.track:
            rep = {}
            ri, rj = self._rep_shift(si), self._rep_shift(sj)
            for k, c in bi.rep.items():
                rep[k + ri] = c
            for k, c in bj.rep.items():
                kk = k + rj
                v = (rep.get(kk, 0) - c) % p
                if v:
                    rep[kk] = v
                else:
                    rep.pop(kk, None)
        r, rep = self._reduce(f, rep, full=True)
        if r:
            self._insert(r, rep, d)
        elif rep:
            self.syz.append(rep)

    def _chain_criterion(self, i, j, comp, L) -> bool:
        pend = self.pending
        for k in self.by_comp.get(comp, ()):
            if k == i or k == j:
                continue
            if not mono_divides(self.basis[k].lexps, L):
                continue
            a, b = (i, k) if i < k else (k, i)
            c, e = (j, k) if j < k else (k, j)
            if (a, b) not in pend and (c, e) not in pend:
                return True
        return False

    def _insert(self, r: dict, rep, d):
        lead = max(r)
        c = r[lead]
        p = self.p
        if c != 1:
            inv = pow(c, -1, p)
            r = {k: (v * inv) % p for k, v in r.items()}
            if rep is not None:
                rep = {k: (v * inv) % p for k, v in rep.items()}
        comp, lexps = self.enc.decode(lead)
        idx = len(self.basis)
        el = _Element(r, lead, comp, lexps, d, rep)
        self.basis.append(el)
        peers = self.by_comp.setdefault(comp, [])
        for k in peers:
            L = mono_lcm(self.basis[k].lexps, lexps)
            pd = sum(L) + self.degrees[comp]
            heapq.heappush(self.pairs, (pd, self.enc.encode(comp, L), k, idx))
            self.pending.add((k, idx))
        peers.append(idx)

    def _reduce(self, f: dict, rep, full: bool = True):
        return reduce_packed(f, rep, self, full)

    # -- queries -------------------------------------------------------------
    def find_divisor(self, lead: int):
        """Index of a basis element whose leading term divides ``lead``."""
        comp, exps = self.enc.decode(lead)
        basis = self.basis
        for k in self.by_comp.get(comp, ()):
            le = basis[k].lexps
            for x, y in zip(le, exps):
                if x > y:
                    break
            else:
                return k
        return None

    def normal_form(self, vec: dict) -> dict:
        if not vec:
            return {}
        d = v_degree(vec, self.degrees)
        if d is None:
            raise ValueError("inhomogeneous element")
        self.run(d)
        r, _ = self._reduce(self.pack(vec), None, full=True)
        return self.unpack(r)

    def contains(self, vec: dict) -> bool:
        if not vec:
            return True
        d = v_degree(vec, self.degrees)
        if d is None:
            raise ValueError("inhomogeneous element")
        self.run(d)
        r, _ = self._reduce(self.pack(vec), None, full=False)
        return not r

    def lift(self, vec: dict):
        """Cofactors c (over the tracked inputs) with vec ≡ Σ c_i g_i modulo the base, or None."""
        if not vec:
            return {}
        d = v_degree(vec, self.degrees)
        if d is None:
            raise ValueError("inhomogeneous element")
        self.run(d)
        r, rep = self._reduce(self.pack(vec), {}, full=False)
        if r:
            return None
        # vec - Σ q_b b = 0, so vec = Σ q_b rep_b; _reduce accumulated -Σ q_b rep_b
        p = self.p
        return {k: (-c) % p for k, c in self.unpack_rep(rep).items()}

    def leading_terms(self) -> list[tuple]:
        return [(b.comp, b.lexps) for b in self.basis]

    def gb_vectors(self) -> list[dict]:
        return [self.unpack(b.poly) for b in self.basis]

    def syzygies(self) -> list[dict]:
        return [self.unpack_rep(s) for s in self.syz]

    def reduced_basis(self) -> list[dict]:
        """Reduced Groebner basis (requires a completed run)."""
        basis = self.basis
        keep = []
        for idx, b in enumerate(basis):
            redundant = False
            for k in self.by_comp.get(b.comp, ()):
                if k == idx:
                    continue
                o = basis[k]
                if mono_divides(o.lexps, b.lexps) and (o.lexps != b.lexps or k < idx):
                    redundant = True
                    break
            if not redundant:
                keep.append(idx)
        sub = Engine(self.ring, self.degrees, self.order)
        for idx in keep:
            b = basis[idx]
            sub._insert(dict(b.poly), None, b.deg)
        sub.pairs.clear()
        sub.pending.clear()
        out = []
        for k, b in enumerate(sub.basis):
            lead = b.lead
            tail = dict(b.poly)
            del tail[lead]
            sub.basis[k].alive = False
            r, _ = _reduce_excluding(sub, tail, k)
            r[lead] = 1
            out.append((lead, self.unpack(r)))
        out.sort(key=lambda t: t[0], reverse=True)
        return [v for _, v in out]


def _reduce_excluding(engine: Engine, f: dict, skip: int):
    saved = engine.by_comp
    engine.by_comp = {c: [k for k in ks if k != skip] for c, ks in saved.items()}
    try:
        return engine._reduce(f, None, full=True)
    finally:
        engine.by_comp = saved


# -- public API ---------------------------------------------------------------


def _as_vectors(gens, ring: PolyRing):
    out = []
    for g in gens:
        if isinstance(g, Polynomial):
            out.append({(0, m): c for m, c in g.terms.items()})
        else:
            out.append(dict(g))
    return out


class GroebnerBasis:
    """Reduced Groebner basis of a graded submodule of a free S-module."""

    def __init__(self, ring: PolyRing, ambient: GradedFreeModule, generators, order: ModuleOrder,
                 engine: Engine):
        self.ring = ring
        self.ambient = ambient
        self.generators = generators
        self.order = order
        self._engine = engine

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def normal_form(self, vec) -> dict:
        return normal_form(vec, self)

    def contains(self, vec) -> bool:
        return not normal_form(vec, self)

    def leading_terms(self) -> list[tuple]:
        enc = self._engine.enc
        return [enc.decode(max(self._engine.pack(g))) for g in self.generators]

    def as_polynomials(self) -> list[Polynomial]:
        return [Polynomial(self.ring, {m: c for (_, m), c in g.items()}) for g in self.generators]


def buchberger(gens, ring: PolyRing, ambient: GradedFreeModule | None = None,
               order: ModuleOrder = DEFAULT_ORDER) -> GroebnerBasis:
    """Reduced Groebner basis of the submodule generated by ``gens``.

    ``gens`` are Polynomials (ideal case, ambient S) or raw vectors.
    """
    vecs = _as_vectors(gens, ring)
    if ambient is None:
        ambient = GradedFreeModule([0])
    for v in vecs:
        if v and v_degree(v, ambient.degrees) is None:
            raise ValueError("buchberger: inhomogeneous generator")
    eng = Engine(ring, ambient.degrees, order)
    for v in vecs:
        eng.add(v)
    eng.run()
    red = eng.reduced_basis()
    final = Engine(ring, ambient.degrees, order)
    for v in red:
        final._insert(final.pack(v), None, v_degree(v, ambient.degrees))
    final.pairs.clear()
    final.pending.clear()
    final.done = 10**9
    return GroebnerBasis(ring, ambient, red, order, final)


def normal_form(vec, gb: GroebnerBasis) -> dict:
    v = _as_vectors([vec], gb.ring)[0]
    for (i, _m) in v:
        if i >= gb.ambient.rank:
            raise ValueError("element outside the ambient free module")
    if not v:
        return {}
    return gb._engine.normal_form(v)


def syzygy_basis(gens, ring: PolyRing, ambient: GradedFreeModule | None = None,
                 minimal: bool = True) -> list[dict]:
    """Generators of the syzygy module of ``gens`` over S (vectors indexed by gens)."""
    vecs = _as_vectors(gens, ring)
    if ambient is None:
        ambient = GradedFreeModule([0])
    return _syzygies(vecs, ring, ambient.degrees, [], minimal)


def quotient_syzygies(gens, qring, ambient: GradedFreeModule | None = None,
                      minimal: bool = True) -> list[dict]:
    """Syzygies over R = S/I of elements of R^m.

    Lifts to S^m, augments with f_t e_j for the defining relations, computes
    syzygies over S and keeps the block of the original generators reduced
    modulo I.
    """
    ring = qring.cover
    vecs = _as_vectors(gens, ring)
    if ambient is None:
        ambient = GradedFreeModule([0])
    base = ideal_block(qring, ambient.degrees)
    return _syzygies(vecs, ring, ambient.degrees, base, minimal, qring=qring)


def ideal_block(qring, degrees) -> list[dict]:
    """The vectors f_t e_j spanning I·S^m."""
    out = []
    for j in range(len(degrees)):
        for f in qring.ideal_gb:
            out.append({(j, m): c for m, c in f.items()})
    return out


def _gen_degrees(vecs, degrees):
    out = []
    for v in vecs:
        d = v_degree(v, degrees) if v else None
        if v and d is None:
            raise ValueError("inhomogeneous generator")
        out.append(d)
    return out


def _syzygies(vecs, ring, degrees, base, minimal, qring=None):
    gdeg = _gen_degrees(vecs, degrees)
    eng = Engine(ring, degrees, ntracked=len(vecs))
    for v in base:
        eng.add(v)
    for i, v in enumerate(vecs):
        eng.add(v, index=i)
    eng.run()
    syz = eng.syzygies()
    # zero generators: e_i is a syzygy, degree unknown -> assign 0
    sdeg = [d if d is not None else 0 for d in gdeg]
    if qring is not None:
        syz = [qring.reduce_vector(s) for s in syz]
    syz = [s for s in syz if s]
    if not minimal:
        return syz
    keep = minimal_generators(syz, ring, sdeg, qring=qring)
    return [syz[i] for i in keep]


def minimal_generators(cands: Sequence[dict], ring: PolyRing, degrees: Sequence[int],
                       base: Sequence[dict] = (), qring=None) -> list[int]:
    """Indices of a minimal homogeneous generating set of ⟨cands⟩ modulo ⟨base⟩ (+ I).

    Candidates are processed by degree; one is kept iff its normal form modulo
    the already kept ones (and the base) in its degree is nonzero.
    """
    eng = Engine(ring, degrees)
    for b in base:
        eng.add(b)
    if qring is not None:
        for b in ideal_block(qring, degrees):
            eng.add(b)
    order = []
    for i, c in enumerate(cands):
        if not c:
            continue
        d = v_degree(c, degrees)
        if d is None:
            raise ValueError("inhomogeneous candidate")
        order.append((d, i))
    order.sort()
    keep = []
    for d, i in order:
        eng.run(d)
        r, _ = eng._reduce(eng.pack(cands[i]), None, full=True)
        if r:
            keep.append(i)
            eng._insert(r, None, d)
    keep.sort()
    return keep
