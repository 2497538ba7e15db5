"""Natural comparison maps built at cochain level, and the spherical-module
construction obtained by dualizing a truncated resolution."""
from __future__ import annotations

from dataclasses import dataclass, field

from .invariants import free_module, grade, proj_dim
from .modules import (GradedModule, MapDiagnostics, ModuleError, ModuleMap, _check_ring, hom,
                      map_diagnostics, minimalize, tensor)
from .resolutions import FreeResolution, ext_module, ext_subquotient, resolution


def phi_map(M: GradedModule, N: GradedModule, C: GradedModule) -> ModuleMap:
    """Φ: Hom(M,N) ⊗ C -> Hom(M, N⊗C), φ⊗c ↦ (m ↦ φ(m)⊗c)."""
    _check_ring(M.ring, N.ring)
    _check_ring(M.ring, C.ring)
    H = hom(M, N)
    NC = tensor(N, C)
    H2 = hom(M, NC)
    dom = tensor(H.module, C)
    nc = C.ngens
    cols = []
    for h in range(H.module.ngens):
        phi = H.generator_map(h)
        for c in range(nc):
            images = [{(l * nc + c, m): v for (l, m), v in col.items()} for col in phi.columns]
            f = ModuleMap(M, NC, images, phi.degree + C.gen_degrees[c])
            coords = H2.coordinates(f)
            if coords is None:
                raise ModuleError("Φ(φ⊗c) is not a homomorphism")
            cols.append(coords)
    return ModuleMap(dom, H2.module, cols)


@dataclass
class ComparisonBundle:
    i: int
    lhs: GradedModule
    rhs: GradedModule
    map: ModuleMap
    diagnostics: MapDiagnostics = field(default=None)

    def to_json(self) -> dict:
        return {"i": self.i, "lhsGens": self.lhs.ngens, "rhsGens": self.rhs.ngens,
                "diagnostics": self.diagnostics.as_dict()}


def ext_comparison(M: GradedModule, N: GradedModule, C: GradedModule, max_i: int,
                   res: FreeResolution | None = None) -> list[ComparisonBundle]:
    """Ext^i(M,N) ⊗ C -> Ext^i(M, N⊗C) induced by cocycle z ↦ z⊗c."""
    _check_ring(M.ring, N.ring)
    _check_ring(M.ring, C.ring)
    if res is None:
        res = resolution(M)
    NC = tensor(N, C)
    n, nc = N.ngens, C.ngens
    out = []
    for i in range(max_i + 1):
        E = ext_subquotient(M, N, i, res)
        E2 = ext_subquotient(M, NC, i, res)
        lhs = tensor(E.module, C)
        cols = []
        for z in E.gens:
            for c in range(nc):
                # z lives in N^{F_i}: index k*n + l; z⊗c lives in (N⊗C)^{F_i}
                w = {((idx // n) * (n * nc) + (idx % n) * nc + c, m): v for (idx, m), v in z.items()}
                coords = E2.coordinates(w)
                if coords is None:
                    raise ModuleError("z⊗c is not a cocycle class")
                cols.append(coords)
        f = ModuleMap(lhs, E2.module, cols)
        out.append(ComparisonBundle(i, lhs, E2.module, f, map_diagnostics(f)))
    return out


@dataclass
class SphericalReport:
    n: int
    module: GradedModule
    resolution: FreeResolution
    dual_sequence_exact: bool
    ext_vanishing: dict
    natural_map: ModuleMap
    natural_map_diagnostics: MapDiagnostics
    pd_bound_holds: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "generatorDegrees": list(self.module.gen_degrees),
            "relations": len(self.module.relations),
            "dualSequenceExact": self.dual_sequence_exact,
            "extVanishing": {str(i): v for i, v in sorted(self.ext_vanishing.items())},
            "naturalMap": self.natural_map_diagnostics.as_dict(),
            "pdBoundHolds": self.pd_bound_holds,
        }


def _transpose_columns(cols, nrows):
    """Columns of Aᵀ for A given by ``cols`` with ``nrows`` rows."""
    out = [dict() for _ in range(nrows)]
    for k, col in enumerate(cols):
        for (j, m), c in col.items():
            out[j][(k, m)] = c
    return out


def spherical_construction(M: GradedModule) -> tuple[GradedModule, SphericalReport]:
    """N = coker(∂_n^*) for n = grade M, with Ext^n(N, R) ≅ M."""
    n = grade(M)
    if n == 0:
        raise ModuleError("spherical construction needs grade(M) > 0")
    ring = M.ring
    F = resolution(M).ensure(n)
    # dual complex G_j = F_{n-j}^*, differential G_j -> G_{j-1} is ∂_{n-j+1}^T
    degrees = [tuple(-d for d in F.free_degrees(n - j)) for j in range(n + 1)]
    maps = [None]
    for j in range(1, n + 1):
        src_rank = len(F.free_degrees(n - j))
        maps.append(_transpose_columns(F.differential(n - j + 1), src_rank))
    G = FreeResolution.from_data(ring, degrees, maps, complete=True)
    N = G.module
    exact = all(_exact_at(G, j) for j in range(1, n + 1))
    R = free_module(ring)
    E = ext_subquotient(N, R, n, G)
    M0 = minimalize(M)
    # cocycles live in R^{G_n} = F_0; their classes map identically into M
    # F_0 of the resolution is the minimal presentation of M
    nat = ModuleMap(E.module, M0, [dict(z) for z in E.gens])
    diag = map_diagnostics(nat)
    vanish = {}
    for i in range(1, n):
        vanish[i] = ext_module(N, R, i).ngens == 0
    # G is a free resolution of N of length n, so this always holds
    pdN = proj_dim(N)
    pd_ok = pdN.is_finite and pdN.value <= n
    report = SphericalReport(n, N, G, exact, vanish, nat, diag, pd_ok)
    return N, report


def _exact_at(res: FreeResolution, i: int) -> bool:
    from .modules import _map_syzygies, subquotient
    src = GradedModule.free(res.ring, res.degrees[i])
    tgt = GradedModule.free(res.ring, res.degrees[i - 1])
    f = ModuleMap(src, tgt, res.maps[i])
    nxt = res.maps[i + 1] if i + 1 < len(res.maps) else []
    return subquotient(res.ring, src.gen_degrees, _map_syzygies(f), nxt).module.ngens == 0
