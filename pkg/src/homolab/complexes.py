"""Bounded complexes of graded modules (homological indexing, ∂_i: X_i -> X_{i-1})."""
from __future__ import annotations

from itertools import combinations
from typing import Mapping, Sequence

from .modules import (GradedModule, HomModule, ModuleError, ModuleMap, Subquotient, _check_ring,
                      _map_syzygies, hom, subquotient, tensor)
from .polynomials import v_iadd
from .rings import QuotientRing


class BoundedComplex:
    """Terms X_i for lo <= i <= hi (zero elsewhere) and differentials ∂_i."""

    def __init__(self, ring: QuotientRing, terms: Mapping[int, GradedModule],
                 diffs: Mapping[int, ModuleMap] | None = None, check: bool = True):
        self.ring = ring
        self.terms = {i: M for i, M in terms.items()}
        for M in self.terms.values():
            _check_ring(ring, M.ring)
        self.diffs = {}
        for i, d in (diffs or {}).items():
            if i in self.terms and i - 1 in self.terms:
                if d.source is not self.terms[i] or d.target is not self.terms[i - 1]:
                    raise ModuleError(f"differential {i} does not match the terms")
                self.diffs[i] = d
        if check and not self.is_complex():
            raise ModuleError("∂∘∂ ≠ 0")

    @property
    def lo(self) -> int:
        return min(self.terms, default=0)

    @property
    def hi(self) -> int:
        return max(self.terms, default=-1)

    def term(self, i: int) -> GradedModule:
        M = self.terms.get(i)
        if M is None:
            M = GradedModule(self.ring, [])
        return M

    def diff(self, i: int) -> ModuleMap:
        d = self.diffs.get(i)
        if d is None:
            d = ModuleMap.zero(self.term(i), self.term(i - 1))
        return d

    def is_complex(self) -> bool:
        for i in self.terms:
            if i in self.diffs and i - 1 in self.diffs:
                if not self.diffs[i - 1].compose(self.diffs[i]).is_zero():
                    return False
        return True

    @classmethod
    def module(cls, M: GradedModule, at: int = 0) -> "BoundedComplex":
        """M[at]: the module concentrated in homological degree ``at``."""
        return cls(M.ring, {at: M}, {})

    @classmethod
    def from_matrices(cls, ring: QuotientRing, degrees: Mapping[int, Sequence[int]],
                      maps: Mapping[int, Sequence[dict]], check: bool = True) -> "BoundedComplex":
        """Complex of free modules: ``degrees[i]`` generator degrees of X_i, ``maps[i]`` columns of ∂_i."""
        terms = {i: GradedModule.free(ring, d) for i, d in degrees.items()}
        diffs = {}
        for i, cols in maps.items():
            if i in terms and i - 1 in terms:
                diffs[i] = ModuleMap(terms[i], terms[i - 1], cols)
        return cls(ring, terms, diffs, check)

    def __repr__(self):
        ranks = {i: self.terms[i].ngens for i in sorted(self.terms)}
        return f"BoundedComplex({ranks})"


class ComplexMap:
    """Levelwise maps f_i: X_i -> Y_i commuting with the differentials."""

    def __init__(self, source: BoundedComplex, target: BoundedComplex, maps: Mapping[int, ModuleMap],
                 check: bool = True):
        self.source = source
        self.target = target
        self.maps = dict(maps)
        if check and not self.is_chain_map():
            raise ModuleError("levelwise maps do not commute with the differentials")

    def at(self, i: int) -> ModuleMap:
        f = self.maps.get(i)
        if f is None:
            f = ModuleMap.zero(self.source.term(i), self.target.term(i))
        return f

    def is_chain_map(self) -> bool:
        idx = set(self.source.terms) | set(self.target.terms)
        for i in idx:
            a = self.target.diff(i).compose(self.at(i))
            b = self.at(i - 1).compose(self.source.diff(i))
            if not (a.columns == b.columns or (a + b.scaled(-1)).is_zero()):
                return False
        return True


# -- direct sums of modules with block bookkeeping -----------------------------------


class _Blocks:
    """Direct sum ⊕ M_k with generator offsets per summand key."""

    def __init__(self, ring, summands: list):
        self.keys = [k for k, _ in summands]
        self.offsets = {}
        degs = []
        rels = []
        for k, M in summands:
            off = len(degs)
            self.offsets[k] = off
            degs.extend(M.gen_degrees)
            rels.extend({(i + off, m): c for (i, m), c in r.items()} for r in M.relations)
        self.module = GradedModule(ring, degs, rels)
        self.summands = dict(summands)

    def embed(self, key, vec: dict) -> dict:
        off = self.offsets[key]
        return {(i + off, m): c for (i, m), c in vec.items()}


def shift(X: BoundedComplex, n: int) -> BoundedComplex:
    """Σⁿ X: (ΣⁿX)_i = X_{i-n}, ∂ = (-1)^n ∂_{i-n}."""
    if n == 0:
        return X
    terms = {i + n: M for i, M in X.terms.items()}
    sign = -1 if n % 2 else 1
    diffs = {i + n: (d if sign == 1 else d.scaled(-1)) for i, d in X.diffs.items()}
    return BoundedComplex(X.ring, terms, diffs, check=False)


def hom_complex(X: BoundedComplex, Y: BoundedComplex) -> BoundedComplex:
    """Hom(X, Y)_i = ⊕_j Hom(X_j, Y_{i+j}); ∂ψ = ∂^Y∘ψ - (-1)^i ψ∘∂^X."""
    _check_ring(X.ring, Y.ring)
    ring = X.ring
    p = ring.p
    homs: dict = {}

    def H(j, k) -> HomModule:
        key = (j, k)
        if key not in homs:
            homs[key] = hom(X.term(j), Y.term(k))
        return homs[key]

    lo = Y.lo - X.hi
    hi = Y.hi - X.lo
    blocks = {}
    for i in range(lo - 1, hi + 2):
        summands = [((j, i + j), H(j, i + j).module) for j in sorted(X.terms) if (i + j) in Y.terms]
        blocks[i] = _Blocks(ring, summands)
    terms = {i: b.module for i, b in blocks.items() if lo <= i <= hi}
    diffs = {}
    for i in range(lo, hi + 1):
        if i - 1 not in terms:
            continue
        src, tgt = blocks[i], blocks[i - 1]
        sgn = -1 if i % 2 else 1
        cols = []
        for (j, k) in src.keys:
            Hjk = H(j, k)
            for g in range(Hjk.module.ngens):
                phi = Hjk.generator_map(g)
                out: dict = {}
                if (j, k - 1) in tgt.offsets:
                    comp = Y.diff(k).compose(phi)
                    c = H(j, k - 1).coordinates(comp)
                    if c is None:
                        raise ModuleError("induced map not representable")
                    v_iadd(out, tgt.embed((j, k - 1), c), p)
                if (j + 1, k) in tgt.offsets:
                    comp = phi.compose(X.diff(j + 1))
                    c = H(j + 1, k).coordinates(comp)
                    if c is None:
                        raise ModuleError("induced map not representable")
                    v_iadd(out, tgt.embed((j + 1, k), c), p, -sgn)
                cols.append(out)
        diffs[i] = ModuleMap(terms[i], terms[i - 1], cols, 0)
    return BoundedComplex(ring, terms, diffs, check=True)


def tensor_complex(X: BoundedComplex, Y: BoundedComplex) -> BoundedComplex:
    """(X⊗Y)_i = ⊕_j X_j ⊗ Y_{i-j}; ∂(x⊗y) = ∂x⊗y + (-1)^j x⊗∂y."""
    _check_ring(X.ring, Y.ring)
    ring = X.ring
    p = ring.p
    tens: dict = {}

    def T(j, k):
        if (j, k) not in tens:
            tens[(j, k)] = tensor(X.term(j), Y.term(k))
        return tens[(j, k)]

    lo, hi = X.lo + Y.lo, X.hi + Y.hi
    blocks = {}
    for i in range(lo - 1, hi + 1):
        summands = [((j, i - j), T(j, i - j)) for j in sorted(X.terms) if (i - j) in Y.terms]
        blocks[i] = _Blocks(ring, summands)
    terms = {i: blocks[i].module for i in range(lo, hi + 1)}
    diffs = {}
    for i in range(lo + 1, hi + 1):
        src, tgt = blocks[i], blocks[i - 1]
        cols = []
        for (j, k) in src.keys:
            A, B = X.term(j), Y.term(k)
            n = B.ngens
            dX, dY = X.diff(j), Y.diff(k)
            sgn = -1 if j % 2 else 1
            for a in range(A.ngens):
                for b in range(n):
                    out: dict = {}
                    if (j - 1, k) in tgt.offsets:
                        v = {(a2 * n + b, m): c for (a2, m), c in dX.columns[a].items()}
                        v_iadd(out, tgt.embed((j - 1, k), v), p)
                    if (j, k - 1) in tgt.offsets:
                        n2 = Y.term(k - 1).ngens
                        v = {(a * n2 + b2, m): c for (b2, m), c in dY.columns[b].items()}
                        v_iadd(out, tgt.embed((j, k - 1), v), p, sgn)
                    cols.append(out)
        diffs[i] = ModuleMap(terms[i], terms[i - 1], cols)
    return BoundedComplex(ring, terms, diffs, check=True)


def koszul_complex(ring: QuotientRing, seq: Sequence) -> BoundedComplex:
    """Koszul complex K(f_1..f_n): K_i = ⊕_{|J|=i} R(-deg f_J)."""
    polys = []
    for f in seq:
        if isinstance(f, str):
            f = ring.cover(f)
        raw = f.terms if hasattr(f, "terms") else dict(f)
        degs = {sum(m) for m in raw}
        if len(degs) != 1 or degs.pop() <= 0:
            raise ModuleError("Koszul complex needs homogeneous elements of positive degree")
        polys.append(raw)
    n = len(polys)
    fdeg = [sum(next(iter(f))) for f in polys]
    subsets = {i: list(combinations(range(n), i)) for i in range(n + 1)}
    index = {i: {J: k for k, J in enumerate(subsets[i])} for i in subsets}
    degrees = {i: [sum(fdeg[t] for t in J) for J in subsets[i]] for i in subsets}
    maps = {}
    for i in range(1, n + 1):
        cols = []
        for J in subsets[i]:
            col: dict = {}
            for s, t in enumerate(J):
                rest = J[:s] + J[s + 1:]
                sign = 1 if s % 2 == 0 else -1
                r = index[i - 1][rest]
                v_iadd(col, {(r, m): c for m, c in polys[t].items()}, ring.p, sign)
            cols.append(col)
        maps[i] = cols
    return BoundedComplex.from_matrices(ring, degrees, maps)


def homology(X: BoundedComplex, i: int) -> Subquotient:
    """H_i = ker ∂_i / im ∂_{i+1}, with cycle representatives in X_i."""
    Xi = X.term(i)
    if not Xi.ngens:
        return subquotient(X.ring, [], [], [])
    cycles = _map_syzygies(X.diff(i))
    bound = list(Xi.relations) + [c for c in X.diff(i + 1).columns if c]
    return subquotient(X.ring, Xi.gen_degrees, cycles, bound)


def homology_at(X: BoundedComplex, i: int) -> GradedModule:
    return homology(X, i).module
