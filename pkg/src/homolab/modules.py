"""Finitely generated graded modules over R = S/I given by presentations.

A module M = coker(A: F1 -> F0) is stored as the generator degrees of F0
and the relation columns of A (raw vectors over S, reduced modulo I).
Maps between modules are given on generators: column j is the image of
the j-th source generator, written in the target generators.

Everything is reduced to the Groebner engine: kernels and homology use
syzygies modulo a base submodule, minimal presentations use degree-wise
minimal generator selection.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .groebner import Engine, ideal_block, minimal_generators
from .matrices import PolyMatrix
from .monomials import mono_divides, monomials_of_degree
from .polynomials import combine, v_add, v_degree, v_mul_poly, v_reindex, v_scale
from .rings import QuotientRing


class ModuleError(ValueError):
    pass


def _check_ring(a, b):
    if not a.same_as(b):
        raise ModuleError("modules over different rings")


class GradedModule:
    """M = coker(A) with A homogeneous; relation columns reduced modulo I."""

    def __init__(self, ring: QuotientRing, gen_degrees: Sequence[int], relations: Sequence[dict] = (),
                 name: str | None = None):
        self.ring = ring
        self.gen_degrees = tuple(int(d) for d in gen_degrees)
        rels = []
        rdeg = []
        n = len(self.gen_degrees)
        for r in relations:
            for (i, _m) in r:
                if not 0 <= i < n:
                    raise ModuleError("relation refers to a missing generator")
            d = v_degree(r, self.gen_degrees) if r else None
            if r and d is None:
                raise ModuleError("inhomogeneous relation")
            r = ring.reduce_vector(r)
            if r:
                rels.append(r)
                rdeg.append(d)
        self.relations = rels
        self.rel_degrees = tuple(rdeg)
        self.name = name
        self._engine = None
        self.cache: dict = {}

    # -- constructors -------------------------------------------------------
    @classmethod
    def free(cls, ring: QuotientRing, degrees: Sequence[int] = (0,), name=None):
        return cls(ring, degrees, (), name=name)

    @classmethod
    def cyclic(cls, ring: QuotientRing, ideal: Sequence, degree: int = 0, name=None):
        """R/J(-degree) for homogeneous generators of J."""
        rels = []
        for f in ideal:
            if isinstance(f, str):
                f = ring.cover(f)
            raw = f.terms if hasattr(f, "terms") else dict(f)
            rels.append({(0, m): c for m, c in raw.items()})
        return cls(ring, [degree], rels, name=name)

    @classmethod
    def residue_field(cls, ring: QuotientRing, name="k"):
        return cls.cyclic(ring, ring.cover.gens(), name=name)

    @classmethod
    def from_matrix(cls, ring: QuotientRing, A: PolyMatrix, name=None):
        return cls(ring, A.row_degrees, list(A.cols), name=name)

    # -- basic data -----------------------------------------------------------
    @property
    def ngens(self) -> int:
        return len(self.gen_degrees)

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def presentation(self) -> PolyMatrix:
        return PolyMatrix(self.ring.cover, self.gen_degrees, self.rel_degrees, self.relations)

    def __repr__(self):
        label = self.name or "M"
        return f"GradedModule({label}: {self.ngens} gens, {len(self.relations)} rels)"

    def twist(self, a: int) -> "GradedModule":
        """M(a): generator degrees decrease by a."""
        return GradedModule(self.ring, [d - a for d in self.gen_degrees], self.relations,
                            name=self.name and f"{self.name}({a})")

    def direct_sum(self, other: "GradedModule") -> "GradedModule":
        _check_ring(self.ring, other.ring)
        n = self.ngens
        rels = list(self.relations) + [v_reindex(r, lambda i: i + n) for r in other.relations]
        return GradedModule(self.ring, self.gen_degrees + other.gen_degrees, rels)

    # -- Groebner data -----------------------------------------------------------
    def engine(self) -> Engine:
        """Completed Groebner basis of the relation submodule plus I·F0."""
        if self._engine is None:
            eng = Engine(self.ring.cover, self.gen_degrees or (0,))
            for r in self.relations:
                eng.add(r)
            for b in ideal_block(self.ring, self.gen_degrees):
                eng.add(b)
            eng.run()
            self._engine = eng
        return self._engine

    def normal_form(self, vec: dict) -> dict:
        if not vec:
            return {}
        return self.engine().normal_form(vec)

    def is_zero_element(self, vec: dict) -> bool:
        return not vec or self.engine().contains(vec)

    def is_zero(self) -> bool:
        one = self.ring.cover.one_monomial()
        return all(self.is_zero_element({(j, one): 1}) for j in range(self.ngens))

    def hilbert_function(self, d: int) -> int:
        """dim_k M_d, counted as standard terms of the relation Groebner basis."""
        if not self.ngens:
            return 0
        leads: dict = {}
        for comp, lex in self.engine().leading_terms():
            leads.setdefault(comp, []).append(lex)
        total = 0
        n = self.ring.nvars
        for j, a in enumerate(self.gen_degrees):
            ls = leads.get(j, [])
            for m in monomials_of_degree(n, d - a):
                if not any(mono_divides(l, m) for l in ls):
                    total += 1
        return total

    def hilbert_vector(self, lo: int, hi: int) -> list[int]:
        return [self.hilbert_function(d) for d in range(lo, hi + 1)]

    def basis_in_degree(self, d: int) -> list[tuple]:
        """Standard terms (comp, monomial) forming a k-basis of M_d."""
        leads: dict = {}
        for comp, lex in self.engine().leading_terms():
            leads.setdefault(comp, []).append(lex)
        out = []
        for j, a in enumerate(self.gen_degrees):
            ls = leads.get(j, [])
            for m in monomials_of_degree(self.ring.nvars, d - a):
                if not any(mono_divides(l, m) for l in ls):
                    out.append((j, m))
        return out


class ModuleMap:
    """Homogeneous R-linear map of degree ``degree`` given on generators."""

    def __init__(self, source: GradedModule, target: GradedModule, columns: Sequence[dict],
                 degree: int = 0, check: bool = False):
        _check_ring(source.ring, target.ring)
        if len(columns) != source.ngens:
            raise ModuleError("one image per source generator required")
        self.source = source
        self.target = target
        self.degree = degree
        cols = []
        for j, c in enumerate(columns):
            c = source.ring.reduce_vector(c)
            if c and v_degree(c, target.gen_degrees) != source.gen_degrees[j] + degree:
                raise ModuleError("map is not homogeneous of the stated degree")
            cols.append(c)
        self.columns = cols
        if check and not self.is_well_defined():
            raise ModuleError("map does not respect the source relations")

    @classmethod
    def identity(cls, M: GradedModule):
        one = M.ring.cover.one_monomial()
        return cls(M, M, [{(j, one): 1} for j in range(M.ngens)])

    @classmethod
    def zero(cls, M: GradedModule, N: GradedModule, degree: int = 0):
        return cls(M, N, [{} for _ in range(M.ngens)], degree)

    @property
    def matrix(self) -> PolyMatrix:
        return PolyMatrix(self.source.ring.cover, self.target.gen_degrees,
                          [d + self.degree for d in self.source.gen_degrees], self.columns)

    def apply(self, vec: dict) -> dict:
        """Image of an element written in source generators."""
        return self.source.ring.reduce_vector(combine(self.columns, vec, self.source.p))

    def is_well_defined(self) -> bool:
        return all(self.target.is_zero_element(self.apply(r)) for r in self.source.relations)

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self ∘ other."""
        return ModuleMap(other.source, self.target, [self.apply(c) for c in other.columns],
                         self.degree + other.degree)

    def is_zero(self) -> bool:
        return all(self.target.is_zero_element(c) for c in self.columns)

    def scaled(self, c: int) -> "ModuleMap":
        p = self.source.p
        return ModuleMap(self.source, self.target, [v_scale(col, c, p) for col in self.columns],
                         self.degree)

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        p = self.source.p
        return ModuleMap(self.source, self.target,
                         [v_add(a, b, p) for a, b in zip(self.columns, other.columns)], self.degree)


# -- lifting -------------------------------------------------------------------


class Lifter:
    """Expresses elements of F0 in terms of ``gens`` modulo ``base`` + I·F0."""

    def __init__(self, ring: QuotientRing, degrees: Sequence[int], gens: Sequence[dict],
                 base: Sequence[dict] = ()):
        self.ring = ring
        self.ngens = len(gens)
        eng = Engine(ring.cover, degrees or (0,), ntracked=len(gens))
        for b in base:
            eng.add(b)
        for b in ideal_block(ring, degrees):
            eng.add(b)
        for i, g in enumerate(gens):
            eng.add(g, index=i)
        self.engine = eng

    def lift(self, vec: dict):
        """Coefficient vector c with vec ≡ Σ c_i gens_i, or None if not in the span."""
        c = self.engine.lift(vec)
        if c is None:
            return None
        return self.ring.reduce_vector(c)


@dataclass
class Subquotient:
    """Module K = (P + Q)/Q inside F0/Q with K's generators given in F0."""
    module: GradedModule
    ambient_degrees: tuple
    gens: list          # vectors in F0, one per generator of module
    base: list          # Q
    _lifter: Lifter | None = None

    def coordinates(self, vec: dict):
        """Write an element of (P+Q)/Q in the generators of ``module``."""
        if self._lifter is None:
            self._lifter = Lifter(self.module.ring, self.ambient_degrees, self.gens, self.base)
        return self._lifter.lift(vec)


def subquotient(ring: QuotientRing, degrees: Sequence[int], P: Sequence[dict], Q: Sequence[dict],
                name=None) -> Subquotient:
    """Minimal presentation of (⟨P⟩ + ⟨Q⟩)/⟨Q⟩ ⊂ F0/⟨Q⟩ (everything modulo I)."""
    degrees = tuple(degrees)
    P = [ring.reduce_vector(v) for v in P]
    keep = minimal_generators(P, ring.cover, degrees or (0,), base=Q, qring=ring)
    gens = [P[i] for i in keep]
    gdeg = [v_degree(g, degrees) for g in gens]
    if not gens:
        return Subquotient(GradedModule(ring, [], [], name=name), degrees, [], list(Q))
    eng = Engine(ring.cover, degrees, ntracked=len(gens))
    for b in Q:
        eng.add(b)
    for b in ideal_block(ring, degrees):
        eng.add(b)
    for i, g in enumerate(gens):
        eng.add(g, index=i)
    eng.run()
    syz = [ring.reduce_vector(s) for s in eng.syzygies()]
    syz = [s for s in syz if s]
    ks = minimal_generators(syz, ring.cover, gdeg, qring=ring)
    module = GradedModule(ring, gdeg, [syz[i] for i in ks], name=name)
    return Subquotient(module, degrees, gens, list(Q))


def _map_syzygies(f: ModuleMap) -> list[dict]:
    """Vectors w over source generators with Σ w_j f(e_j) = 0 in the target."""
    M, N = f.source, f.target
    ring = M.ring
    tdeg = N.gen_degrees or (0,)
    eng = Engine(ring.cover, tdeg, ntracked=M.ngens)
    for r in N.relations:
        eng.add(r)
    for b in ideal_block(ring, N.gen_degrees):
        eng.add(b)
    one = ring.cover.one_monomial()
    zero_syz = []
    for j, c in enumerate(f.columns):
        if c:
            eng.add(c, index=j)
        else:
            zero_syz.append({(j, one): 1})
    eng.run()
    out = zero_syz + [ring.reduce_vector(s) for s in eng.syzygies()]
    return [s for s in out if s]


def kernel(f: ModuleMap) -> Subquotient:
    """ker f as a submodule of the source; ``gens`` are the inclusion columns."""
    M = f.source
    if not M.ngens:
        return subquotient(M.ring, M.gen_degrees, [], [])
    return subquotient(M.ring, M.gen_degrees, _map_syzygies(f), M.relations)


def kernel_module(f: ModuleMap) -> tuple[GradedModule, ModuleMap]:
    sq = kernel(f)
    return sq.module, ModuleMap(sq.module, f.source, sq.gens)


def image(f: ModuleMap) -> Subquotient:
    N = f.target
    return subquotient(N.ring, N.gen_degrees, f.columns, N.relations)


# -- minimal presentations ----------------------------------------------------------


@dataclass
class Minimalization:
    module: GradedModule
    to_new: list        # image of each old generator, in new generators
    to_old: list        # image of each new generator, in old generators


def minimal_presentation(M: GradedModule) -> Minimalization:
    """Prune unit entries, then keep minimal generators of the relations."""
    ring = M.ring
    p = ring.p
    one = ring.cover.one_monomial()
    rels = [dict(r) for r in M.relations]
    exprs = [{(j, one): 1} for j in range(M.ngens)]
    alive = [True] * M.ngens
    while True:
        hit = None
        for ri, r in enumerate(rels):
            for j in range(M.ngens):
                if alive[j] and (j, one) in r:
                    hit = (ri, j)
                    break
            if hit:
                break
        if hit is None:
            break
        ri, j = hit
        r = rels.pop(ri)
        c = r[(j, one)]
        inv = pow(c, -1, p)
        # e_j = sub, with sub free of component j
        sub = {k: (-v * inv) % p for k, v in r.items() if k[0] != j}

        def substitute(v, j=j, sub=sub):
            g = {m: cc for (i, m), cc in v.items() if i == j}
            if not g:
                return v
            rest = {k: cc for k, cc in v.items() if k[0] != j}
            return ring.reduce_vector(v_add(rest, v_mul_poly(g, sub, p), p))

        rels = [substitute(v) for v in rels]
        rels = [v for v in rels if v]
        exprs = [substitute(v) for v in exprs]
        alive[j] = False
    newidx = {}
    degs = []
    for j in range(M.ngens):
        if alive[j]:
            newidx[j] = len(degs)
            degs.append(M.gen_degrees[j])
    rels = [v_reindex(r, newidx) for r in rels]
    exprs = [v_reindex(e, newidx) for e in exprs]
    keep = minimal_generators(rels, ring.cover, degs or (0,), qring=ring)
    module = GradedModule(ring, degs, [rels[i] for i in keep], name=M.name)
    to_old = [{(j, one): 1} for j in range(M.ngens) if alive[j]]
    return Minimalization(module, exprs, to_old)


def minimalize(M: GradedModule) -> GradedModule:
    cached = M.cache.get("minimal")
    if cached is None:
        cached = minimal_presentation(M).module
        M.cache["minimal"] = cached
    return cached


def cokernel(f: ModuleMap) -> tuple[GradedModule, ModuleMap]:
    """coker f with the projection from the target."""
    N = f.target
    C = GradedModule(N.ring, N.gen_degrees, list(N.relations) + list(f.columns))
    mp = minimal_presentation(C)
    return mp.module, ModuleMap(N, mp.module, mp.to_new)


# -- Hom and tensor --------------------------------------------------------------------


def power(N: GradedModule, shifts: Sequence[int]) -> GradedModule:
    """⊕_j N(shifts[j]); generator (j, l) has index j*n + l."""
    n = N.ngens
    degs = []
    rels = []
    for j, a in enumerate(shifts):
        degs.extend(b - a for b in N.gen_degrees)
        rels.extend(v_reindex(r, lambda i, j=j: j * n + i) for r in N.relations)
    return GradedModule(N.ring, degs, rels)


def _dual_action(M: GradedModule, N: GradedModule) -> ModuleMap:
    """N^{F0(M)} -> N^{F1(M)}, φ ↦ φ∘A."""
    n = N.ngens
    src = power(N, M.gen_degrees)
    tgt = power(N, M.rel_degrees)
    p = M.p
    # rows[j] = [(k, m, c)] for A_{jk} = Σ c x^m
    rows: dict = {}
    for k, r in enumerate(M.relations):
        for (j, m), c in r.items():
            rows.setdefault(j, []).append((k, m, c))
    cols = []
    for j in range(M.ngens):
        for l in range(n):
            v = {}
            for k, m, c in rows.get(j, ()):
                key = (k * n + l, m)
                v[key] = (v.get(key, 0) + c) % p
            cols.append({k: c for k, c in v.items() if c})
    return ModuleMap(src, tgt, cols)


@dataclass
class HomModule:
    """Hom(M, N) with, for each generator, the images of M's generators in N."""
    module: GradedModule
    source: GradedModule
    target: GradedModule
    sub: Subquotient

    def to_map(self, vec: dict) -> ModuleMap:
        """The homomorphism M -> N represented by an element of Hom(M, N)."""
        n = self.target.ngens
        amb = combine(self.sub.gens, vec, self.source.p) if vec else {}
        cols = [dict() for _ in range(self.source.ngens)]
        for (i, m), c in amb.items():
            cols[i // n][(i % n, m)] = c
        d = v_degree(vec, self.module.gen_degrees) if vec else 0
        return ModuleMap(self.source, self.target, cols, d)

    def generator_map(self, i: int) -> ModuleMap:
        return self.to_map({(i, self.source.ring.cover.one_monomial()): 1})

    def coordinates(self, phi: ModuleMap):
        """Element of Hom(M, N) representing phi (None if phi is not a homomorphism)."""
        n = self.target.ngens
        amb = {}
        for j, col in enumerate(phi.columns):
            for (l, m), c in col.items():
                amb[(j * n + l, m)] = c
        return self.sub.coordinates(amb)


def hom(M: GradedModule, N: GradedModule) -> HomModule:
    _check_ring(M.ring, N.ring)
    psi = _dual_action(M, N)
    if not M.relations:
        src = psi.source
        one = M.ring.cover.one_monomial()
        gens = [{(i, one): 1} for i in range(src.ngens)]
        sub = Subquotient(src, src.gen_degrees, gens, list(src.relations))
        return HomModule(src, M, N, sub)
    sub = kernel(psi)
    return HomModule(sub.module, M, N, sub)


def hom_module(M: GradedModule, N: GradedModule) -> GradedModule:
    return hom(M, N).module


def tensor(M: GradedModule, N: GradedModule) -> GradedModule:
    """M ⊗ N with generators e_j ⊗ f_l (index j*n + l), not minimalized."""
    _check_ring(M.ring, N.ring)
    n = N.ngens
    degs = [a + b for a in M.gen_degrees for b in N.gen_degrees]
    rels = []
    for r in M.relations:
        for l in range(n):
            rels.append({(j * n + l, m): c for (j, m), c in r.items()})
    for j in range(M.ngens):
        for s in N.relations:
            rels.append({(j * n + l, m): c for (l, m), c in s.items()})
    return GradedModule(M.ring, degs, rels)


# -- diagnostics -----------------------------------------------------------------------


@dataclass(frozen=True)
class MapDiagnostics:
    is_zero: bool
    is_injective: bool
    is_surjective: bool

    @property
    def is_isomorphism(self) -> bool:
        return self.is_injective and self.is_surjective

    def as_dict(self) -> dict:
        return {"isZero": self.is_zero, "isInjective": self.is_injective,
                "isSurjective": self.is_surjective, "isIsomorphism": self.is_isomorphism}


def is_surjective(f: ModuleMap) -> bool:
    N = f.target
    if not N.ngens:
        return True
    eng = Engine(N.ring.cover, N.gen_degrees)
    for r in N.relations:
        eng.add(r)
    for b in ideal_block(N.ring, N.gen_degrees):
        eng.add(b)
    for c in f.columns:
        if c:
            eng.add(c)
    one = N.ring.cover.one_monomial()
    return all(eng.contains({(l, one): 1}) for l in range(N.ngens))


def is_injective(f: ModuleMap) -> bool:
    return kernel(f).module.ngens == 0


def map_diagnostics(f: ModuleMap) -> MapDiagnostics:
    return MapDiagnostics(f.is_zero(), is_injective(f), is_surjective(f))
