"""Numerical and finiteness invariants of graded modules.

pd and id are decided exactly; G-dimension and Gorenstein injective
dimension are reported as three-valued verdicts that carry the code of the
rule that produced them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .modules import (GradedModule, ModuleError, ModuleMap, hom, map_diagnostics, minimalize)
from .resolutions import (cover_resolution, ext_module, over_cover, resolution, syzygy_module)
from .rings import QuotientRing


class ZeroModuleError(ModuleError):
    """Raised where an invariant is undefined for the zero module."""


class UnsupportedError(ModuleError):
    pass


@dataclass(frozen=True)
class Verdict:
    """Three-valued answer for a homological dimension."""
    status: str                       # "finite" | "infinite" | "unknown"
    value: int | None = None
    bound: int | None = None
    certificate: str = ""

    @classmethod
    def finite(cls, value: int, cert: str):
        return cls("finite", value=value, certificate=cert)

    @classmethod
    def infinite(cls, cert: str):
        return cls("infinite", certificate=cert)

    @classmethod
    def unknown(cls, bound: int, cert: str = "bound-exhausted"):
        return cls("unknown", bound=bound, certificate=cert)

    @property
    def is_finite(self) -> bool:
        return self.status == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.status == "infinite"

    @property
    def is_unknown(self) -> bool:
        return self.status == "unknown"

    def finiteness(self):
        """True / False / None for finite / infinite / unknown."""
        return {"finite": True, "infinite": False}.get(self.status)

    def to_json(self) -> dict:
        out = {"status": self.status}
        if self.value is not None:
            out["value"] = self.value
        if self.bound is not None:
            out["bound"] = self.bound
        out["certificate"] = self.certificate
        return out


def _require_nonzero(M: GradedModule):
    if is_zero(M):
        raise ZeroModuleError("invariant undefined for the zero module")


def is_zero(M: GradedModule) -> bool:
    return minimalize(M).ngens == 0


# -- Hilbert series, dimension and depth -----------------------------------------------


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(t) / (1-t)^n with numerator a Laurent polynomial {exponent: coeff}."""
    numerator: dict
    n: int

    def coefficient(self, d: int) -> int:
        n = self.n
        total = 0
        for j, c in self.numerator.items():
            k = d - j
            if k < 0:
                continue
            total += c * (comb(k + n - 1, n - 1) if n > 0 else (1 if k == 0 else 0))
        return total

    def reduced(self) -> tuple[dict, int]:
        """Cancel common factors (1-t): returns (numerator, remaining exponent)."""
        num = dict(self.numerator)
        n = self.n
        while n > 0 and num and sum(num.values()) == 0:
            num = _divide_one_minus_t(num)
            n -= 1
        return num, n

    def pole_order(self) -> int:
        if not self.numerator:
            return -1
        return self.reduced()[1]


def _divide_one_minus_t(num: dict) -> dict:
    """Exact division of a Laurent polynomial by (1 - t)."""
    lo, hi = min(num), max(num)
    out = {}
    acc = 0
    for e in range(lo, hi):
        acc += num.get(e, 0)
        if acc:
            out[e] = acc
    return out


def hilbert_series(M: GradedModule) -> HilbertSeries:
    res = cover_resolution(M)
    num: dict = {}
    for i, degs in enumerate(res.degrees):
        sign = -1 if i % 2 else 1
        for d in degs:
            num[d] = num.get(d, 0) + sign
    return HilbertSeries({e: c for e, c in num.items() if c}, M.ring.nvars)


def dim_depth(M: GradedModule) -> tuple[int, int]:
    cached = M.cache.get("dim_depth")
    if cached is not None:
        return cached
    _require_nonzero(M)
    n = M.ring.nvars
    dim = hilbert_series(M).pole_order()
    pd = cover_resolution(M).projective_dimension()
    out = (dim, n - pd)
    M.cache["dim_depth"] = out
    return out


def depth(M: GradedModule) -> int:
    return dim_depth(M)[1]


def dimension(M: GradedModule) -> int:
    return dim_depth(M)[0]


def is_cohen_macaulay(M: GradedModule) -> bool:
    d, t = dim_depth(M)
    return d == t


def free_module(ring: QuotientRing) -> GradedModule:
    R = ring.cache.get("free")
    if R is None:
        R = GradedModule.free(ring, name="R")
        ring.cache["free"] = R
    return R


def residue_field(ring: QuotientRing) -> GradedModule:
    k = ring.cache.get("k")
    if k is None:
        k = GradedModule.residue_field(ring)
        ring.cache["k"] = k
    return k


def ring_depth(ring: QuotientRing) -> int:
    return depth(free_module(ring))


def ring_dim(ring: QuotientRing) -> int:
    return dimension(free_module(ring))


# -- Ext-derived numbers --------------------------------------------------------------------


def ext_vanishes(M: GradedModule, N: GradedModule, i: int) -> bool:
    return ext_module(M, N, i).ngens == 0


def grade(M: GradedModule) -> int:
    """Least i with Ext^i(M, R) ≠ 0."""
    _require_nonzero(M)
    R = free_module(M.ring)
    t = ring_depth(M.ring)
    for i in range(t + 1):
        if not ext_vanishes(M, R, i):
            return i
    raise AssertionError("Ext^i(M,R) vanished up to depth R")


def bass_number(M: GradedModule, i: int) -> int:
    """μ^i(M) = dim_k Ext^i(k, M)."""
    return ext_module(residue_field(M.ring), M, i).ngens


def type_and_mu(M: GradedModule) -> tuple[int, int]:
    _require_nonzero(M)
    return bass_number(M, depth(M)), minimalize(M).ngens


def module_type(M: GradedModule) -> int:
    return type_and_mu(M)[0]


def mu(M: GradedModule) -> int:
    return minimalize(M).ngens


# -- finiteness verdicts -----------------------------------------------------------------


def proj_dim(M: GradedModule) -> Verdict:
    _require_nonzero(M)
    s = ring_depth(M.ring) - depth(M)
    if s < 0:
        return Verdict.infinite("ab-bound")
    res = resolution(M).ensure(s + 1)
    if res.rank(s + 1) == 0:
        v = max(i for i in range(s + 2) if res.rank(i))
        return Verdict.finite(v, "ab-termination")
    return Verdict.infinite("ab-termination")


def inj_dim(M: GradedModule) -> Verdict:
    _require_nonzero(M)
    t = ring_depth(M.ring)
    B = max(t, depth(M))
    if bass_number(M, B + 1) == 0:
        return Verdict.finite(t, "bass-window")
    return Verdict.infinite("bass-window")


def biduality_map(G: GradedModule) -> ModuleMap:
    """θ: G -> G**, g ↦ (φ ↦ φ(g))."""
    R = free_module(G.ring)
    H1 = hom(G, R)
    H2 = hom(H1.module, R)
    phis = [H1.generator_map(s) for s in range(H1.module.ngens)]
    cols = []
    for j in range(G.ngens):
        ev = [phi.columns[j] for phi in phis]
        f = ModuleMap(H1.module, R, ev, G.gen_degrees[j])
        c = H2.coordinates(f)
        if c is None:
            raise ModuleError("evaluation map not representable")
        cols.append(c)
    return ModuleMap(G, H2.module, cols)


def is_gorenstein_ring(ring: QuotientRing) -> bool:
    return ring_profile(ring).is_gorenstein


def g_dim(M: GradedModule, bound: int = 6) -> Verdict:
    _require_nonzero(M)
    if bound < 1:
        raise ValueError("bound must be at least 1")
    pd = proj_dim(M)
    if pd.is_finite:
        return Verdict.finite(pd.value, "pd-finite")
    ring = M.ring
    t = ring_depth(ring)
    dm = depth(M)
    if dm > t:
        return Verdict.infinite("ab-bound")
    if is_gorenstein_ring(ring):
        return Verdict.finite(t - dm, "gorenstein-ring")
    R = free_module(ring)
    for i in range(t + 1, t + bound + 1):
        if not ext_vanishes(M, R, i):
            return Verdict.infinite("ext-nonvanishing")
    G = syzygy_module(M, t - dm)
    if not map_diagnostics(biduality_map(G)).is_isomorphism:
        return Verdict.infinite("not-reflexive")
    for i in range(1, bound + 1):
        if not ext_vanishes(G, R, i):
            return Verdict.infinite("not-totally-reflexive")
    Gs = hom(G, R).module
    for i in range(1, bound + 1):
        if not ext_vanishes(Gs, R, i):
            return Verdict.infinite("dual-not-totally-reflexive")
    return Verdict.unknown(bound)


def g_inj_dim(M: GradedModule, bound: int = 6) -> Verdict:
    _require_nonzero(M)
    prof = ring_profile(M.ring)
    if not prof.is_cm:
        raise UnsupportedError("Gorenstein injective dimension needs a Cohen-Macaulay ring")
    H = hom(prof.omega, M).module
    if is_zero(H):
        # finite Gid would give M ≅ ω ⊗ Hom(ω, M) = 0
        return Verdict.infinite("via-omega-reduction")
    v = g_dim(H, bound)
    if v.is_finite:
        return Verdict.finite(prof.depth, "via-omega-reduction")
    if v.is_infinite:
        return Verdict.infinite("via-omega-reduction")
    return Verdict.unknown(bound, "via-omega-reduction")


# -- canonical and deficiency modules ----------------------------------------------------


def _cover_ext_as_r_module(M: GradedModule, j: int, name=None) -> GradedModule:
    """Ext_S^j(M, S)(-n), regarded as an R-module."""
    ring = M.ring
    n = ring.nvars
    if j < 0 or j > n:
        return GradedModule(ring, [], [], name=name)
    MS = over_cover(M)
    S = free_module(MS.ring)
    E = ext_module(MS, S, j)
    return minimalize(GradedModule(ring, [d + n for d in E.gen_degrees], E.relations, name=name))


def deficiency(M: GradedModule, i: int) -> GradedModule:
    """K^i(M) = Ext_S^{n-i}(M, S)(-n)."""
    return _cover_ext_as_r_module(M, M.ring.nvars - i, name=f"K^{i}")


def canonical_module(ring: QuotientRing) -> GradedModule:
    prof = ring_profile(ring)
    if not prof.is_cm:
        raise UnsupportedError("canonical module requested for a non-Cohen-Macaulay ring")
    return prof.omega


@dataclass
class RingProfile:
    depth: int
    dim: int
    is_cm: bool
    is_gorenstein: bool
    type: int
    omega: GradedModule | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        return {"depth": self.depth, "dim": self.dim, "isCM": self.is_cm,
                "isGorenstein": self.is_gorenstein, "type": self.type}


def ring_profile(ring: QuotientRing) -> RingProfile:
    with ring._lock:
        prof = ring._profile
    if prof is not None:
        return prof
    R = free_module(ring)
    d, t = dim_depth(R)
    typ = bass_number(R, t)
    cm = d == t
    omega = None
    if cm:
        omega = _cover_ext_as_r_module(R, ring.nvars - d, name="omega")
    prof = RingProfile(t, d, cm, cm and typ == 1, typ, omega)
    with ring._lock:
        if ring._profile is None:
            ring._profile = prof
        return ring._profile
