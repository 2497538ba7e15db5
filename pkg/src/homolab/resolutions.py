"""Minimal graded free resolutions, Betti tables, syzygy modules, the
Auslander transpose and the Ext/Tor bifunctors."""
from __future__ import annotations

import json
from typing import Sequence

from .complexes import BoundedComplex, homology
from .groebner import ideal_block, quotient_syzygies
from .matrices import GradedFreeModule, PolyMatrix
from .modules import (GradedModule, ModuleMap, Subquotient, _check_ring, _map_syzygies,
                      minimal_presentation, minimalize, power, subquotient)
from .rings import QuotientRing


class FreeResolution:
    """Minimal free resolution computed lazily step by step.

    ``degrees[i]`` are the generator degrees of F_i and ``maps[i]`` (i >= 1)
    the columns of ∂_i: F_i -> F_{i-1}.  ``complete`` is set once a step has
    zero source.
    """

    def __init__(self, M: GradedModule, minimal: GradedModule | None = None):
        self.module = M
        self.ring = M.ring
        M0 = minimal if minimal is not None else minimalize(M)
        self.minimal_module = M0
        self.degrees = [tuple(M0.gen_degrees)]
        self.maps: list = [None]
        self.complete = False
        if not M0.ngens:
            self.complete = True
            return
        self._push(list(M0.relations))

    @classmethod
    def from_data(cls, ring: QuotientRing, degrees: Sequence[Sequence[int]], maps: Sequence[Sequence[dict]],
                  complete: bool = True) -> "FreeResolution":
        """Wrap an explicitly known resolution (maps[0] is ignored)."""
        self = cls.__new__(cls)
        self.ring = ring
        M = GradedModule(ring, degrees[0], list(maps[1]) if len(maps) > 1 else [])
        self.module = M
        self.minimal_module = M
        self.degrees = [tuple(d) for d in degrees]
        self.maps = [None] + [list(m) for m in maps[1:]]
        self.complete = complete
        return self

    def _push(self, cols):
        prev = self.degrees[-1]
        degs = []
        for c in cols:
            degs.append(min(sum(m) + prev[i] for (i, m) in c))
        self.degrees.append(tuple(degs))
        self.maps.append(cols)
        if not cols:
            self.complete = True

    @property
    def length(self) -> int:
        """Number of computed differentials."""
        return len(self.maps) - 1

    def ensure(self, L: int) -> "FreeResolution":
        """Compute ∂_1..∂_L (or until the resolution terminates)."""
        while not self.complete and self.length < L:
            i = self.length
            syz = quotient_syzygies(self.maps[i], self.ring, GradedFreeModule(self.degrees[i - 1]))
            # syzygies are indexed by the generators of F_i
            prev = self.degrees[i]
            cols = []
            for s in syz:
                cols.append(s)
            self.degrees.append(tuple(min(sum(m) + prev[k] for (k, m) in c) for c in cols))
            self.maps.append(cols)
            if not cols:
                self.complete = True
        return self

    def rank(self, i: int) -> int:
        self.ensure(i)
        if i < len(self.degrees):
            return len(self.degrees[i])
        return 0

    def matrix(self, i: int) -> PolyMatrix:
        self.ensure(i)
        return PolyMatrix(self.ring.cover, self.degrees[i - 1], self.degrees[i], self.maps[i])

    def differential(self, i: int) -> list:
        self.ensure(i)
        if i < len(self.maps):
            return self.maps[i]
        return []

    def free_degrees(self, i: int) -> tuple:
        self.ensure(i)
        if i < len(self.degrees):
            return self.degrees[i]
        return ()

    def projective_dimension(self):
        """max{i : F_i ≠ 0} if complete, else None."""
        if not self.complete:
            return None
        return max((i for i, d in enumerate(self.degrees) if d), default=0)

    def betti(self, upto: int | None = None) -> "BettiTable":
        if upto is not None:
            self.ensure(upto)
        table = {}
        for i, degs in enumerate(self.degrees):
            if upto is not None and i > upto:
                break
            for d in degs:
                table[(i, d)] = table.get((i, d), 0) + 1
        return BettiTable(table)

    def as_complex(self, upto: int) -> BoundedComplex:
        """F_0 <- ... <- F_upto as a bounded complex of free modules."""
        self.ensure(upto)
        degrees = {i: self.free_degrees(i) for i in range(upto + 1)}
        maps = {i: self.differential(i) for i in range(1, upto + 1)}
        return BoundedComplex.from_matrices(self.ring, degrees, maps)

    def is_exact_at(self, i: int) -> bool:
        """Columns of ∂_{i+1} generate the syzygies of ∂_i (Groebner check)."""
        self.ensure(i + 1)
        src = GradedModule.free(self.ring, self.free_degrees(i))
        tgt = GradedModule.free(self.ring, self.free_degrees(i - 1))
        f = ModuleMap(src, tgt, self.differential(i))
        syz = _map_syzygies(f)
        sub = subquotient(self.ring, src.gen_degrees, syz, self.differential(i + 1))
        return sub.module.ngens == 0

    def is_minimal(self) -> bool:
        for i in range(1, len(self.maps)):
            for c in self.maps[i]:
                for (_k, m) in c:
                    if not any(m):
                        return False
        return True


def minimal_free_resolution(M: GradedModule, max_length: int) -> FreeResolution:
    if max_length < 0:
        raise ValueError("max_length must be non-negative")
    return resolution(M).ensure(max_length)


def resolution(M: GradedModule) -> FreeResolution:
    """Cached lazily extended minimal resolution of M."""
    res = M.cache.get("resolution")
    if res is None:
        res = FreeResolution(M)
        M.cache["resolution"] = res
    return res


def over_cover(M: GradedModule) -> GradedModule:
    """M regarded as a module over the polynomial cover S."""
    C = M.cache.get("over_cover")
    if C is None:
        S = M.ring.cover_ring()
        rels = list(M.relations) + ideal_block(M.ring, M.gen_degrees)
        C = GradedModule(S, M.gen_degrees, rels, name=M.name)
        M.cache["over_cover"] = C
    return C


def cover_resolution(M: GradedModule) -> FreeResolution:
    """Complete minimal resolution of M over S (finite by Hilbert's syzygy theorem)."""
    res = resolution(over_cover(M))
    res.ensure(M.ring.nvars + 1)
    return res


class BettiTable:
    """Graded Betti numbers β_{i,j} (homological degree i, internal degree j)."""

    def __init__(self, table: dict):
        self.table = {k: v for k, v in table.items() if v}

    def __getitem__(self, key):
        return self.table.get(key, 0)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.table.items() if a == i)

    def totals(self) -> list[int]:
        if not self.table:
            return []
        top = max(i for i, _ in self.table)
        return [self.total(i) for i in range(top + 1)]

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.table == other.table

    def to_json(self) -> str:
        rows = [{"i": i, "j": j, "beta": v} for (i, j), v in sorted(self.table.items())]
        return json.dumps({"betti": rows, "totals": self.totals()}, sort_keys=True)

    def __str__(self):
        """Text grid in the usual layout: column i, row j - i."""
        if not self.table:
            return "total:\n"
        cols = max(i for i, _ in self.table) + 1
        rows = sorted({j - i for i, j in self.table})
        lo, hi = rows[0], rows[-1]
        width = max(len(str(v)) for v in list(self.table.values()) + self.totals())
        width = max(width, len(str(cols - 1)))
        lab = max(len("total:"), len(f"{lo}:"), len(f"{hi}:"))
        lines = [" " * lab + " " + " ".join(str(i).rjust(width) for i in range(cols))]
        lines.append("total:".rjust(lab) + " " + " ".join(str(t).rjust(width) for t in self.totals()))
        for r in range(lo, hi + 1):
            cells = []
            for i in range(cols):
                v = self.table.get((i, i + r), 0)
                cells.append((str(v) if v else ".").rjust(width))
            lines.append(f"{r}:".rjust(lab) + " " + " ".join(cells))
        return "\n".join(lines)


def syzygy_module(M: GradedModule, i: int) -> GradedModule:
    """Ω^i(M): image of ∂_i, presented by ∂_{i+1}; Ω^0 is the minimal presentation of M."""
    if i < 0:
        raise ValueError("syzygy index must be non-negative")
    if i == 0:
        return minimalize(M)
    res = resolution(M).ensure(i + 1)
    return GradedModule(M.ring, res.free_degrees(i), res.differential(i + 1))


def transpose(M: GradedModule) -> GradedModule:
    """Auslander transpose coker(∂_1^*: F_0^* -> F_1^*) of the minimal presentation."""
    M0 = minimalize(M)
    F1 = M0.rel_degrees
    cols = [dict() for _ in range(M0.ngens)]
    for k, r in enumerate(M0.relations):
        for (j, m), c in r.items():
            cols[j][(k, m)] = c
    T = GradedModule(M.ring, [-d for d in F1], cols)
    return minimal_presentation(T).module


def dual_module(M: GradedModule) -> GradedModule:
    """M* = Hom(M, R)."""
    from .modules import hom_module
    return hom_module(M, GradedModule.free(M.ring))


# -- Ext and Tor ------------------------------------------------------------------------


def _cochain_map(res: FreeResolution, N: GradedModule, i: int) -> ModuleMap:
    """Hom(F_i, N) -> Hom(F_{i+1}, N), φ ↦ φ∘∂_{i+1}."""
    n = N.ngens
    src = power(N, res.free_degrees(i))
    tgt = power(N, res.free_degrees(i + 1))
    p = N.p
    rows: dict = {}
    for k2, col in enumerate(res.differential(i + 1)):
        for (k, m), c in col.items():
            rows.setdefault(k, []).append((k2, m, c))
    cols = []
    for k in range(len(res.free_degrees(i))):
        for l in range(n):
            v: dict = {}
            for k2, m, c in rows.get(k, ()):
                key = (k2 * n + l, m)
                v[key] = (v.get(key, 0) + c) % p
            cols.append({kk: c for kk, c in v.items() if c})
    return ModuleMap(src, tgt, cols)


def ext_subquotient(M: GradedModule, N: GradedModule, i: int,
                    res: FreeResolution | None = None) -> Subquotient:
    """Ext^i(M, N) = H^i(Hom(F, N)) with cocycle representatives in N^{F_i}."""
    _check_ring(M.ring, N.ring)
    if res is None:
        res = resolution(M)
    res.ensure(i + 1)
    key = ("ext", id(res), i)
    cached = N.cache.get(key)
    if cached is not None and cached[0] is res:
        return cached[1]
    Ci = power(N, res.free_degrees(i))
    if not Ci.ngens:
        sq = subquotient(M.ring, [], [], [])
    else:
        d = _cochain_map(res, N, i)
        cycles = _map_syzygies(d)
        bound = list(Ci.relations)
        if i > 0:
            bound += [c for c in _cochain_map(res, N, i - 1).columns if c]
        sq = subquotient(M.ring, Ci.gen_degrees, cycles, bound)
    N.cache[key] = (res, sq)
    return sq


def ext_module(M: GradedModule, N: GradedModule, i: int, res: FreeResolution | None = None) -> GradedModule:
    return ext_subquotient(M, N, i, res).module


def ext_modules(M: GradedModule, N: GradedModule, max_i: int,
                res: FreeResolution | None = None) -> list[GradedModule]:
    return [ext_module(M, N, i, res) for i in range(max_i + 1)]


def ext_by_hom_complex(M: GradedModule, N: GradedModule, i: int) -> GradedModule:
    """Ext^i through the general Hom complex Hom(F, N[0]) and its homology."""
    from .complexes import hom_complex
    X = resolution(M).as_complex(i + 1)
    H = hom_complex(X, BoundedComplex.module(N))
    return homology(H, -i).module


def _tensor_chain_map(res: FreeResolution, N: GradedModule, i: int) -> ModuleMap:
    """F_i ⊗ N -> F_{i-1} ⊗ N."""
    n = N.ngens
    src = power(N, [-d for d in res.free_degrees(i)])
    tgt = power(N, [-d for d in res.free_degrees(i - 1)])
    cols = []
    for col in res.differential(i):
        for l in range(n):
            cols.append({(k * n + l, m): c for (k, m), c in col.items()})
    return ModuleMap(src, tgt, cols)


def tor_subquotient(M: GradedModule, N: GradedModule, i: int) -> Subquotient:
    _check_ring(M.ring, N.ring)
    res = resolution(M).ensure(i + 1)
    Ci = power(N, [-d for d in res.free_degrees(i)])
    if not Ci.ngens:
        return subquotient(M.ring, [], [], [])
    if i == 0:
        cycles = [{(j, M.ring.cover.one_monomial()): 1} for j in range(Ci.ngens)]
    else:
        cycles = _map_syzygies(_tensor_chain_map(res, N, i))
    bound = list(Ci.relations) + [c for c in _tensor_chain_map(res, N, i + 1).columns if c]
    return subquotient(M.ring, Ci.gen_degrees, cycles, bound)


def tor_modules(M: GradedModule, N: GradedModule, max_i: int) -> list[GradedModule]:
    return [tor_subquotient(M, N, i).module for i in range(max_i + 1)]


def tor_by_tensor_complex(M: GradedModule, N: GradedModule, i: int) -> GradedModule:
    from .complexes import tensor_complex
    X = resolution(M).as_complex(i + 1)
    return homology(tensor_complex(X, BoundedComplex.module(N)), i).module
