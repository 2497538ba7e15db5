"""Built-in instance catalog and a seeded random instance generator."""
from __future__ import annotations

import random
from dataclasses import dataclass

from ..instancefile import Instance
from ..invariants import free_module, residue_field, ring_profile
from ..modules import GradedModule, ModuleMap, image, minimalize
from ..polynomials import PolyRing
from ..resolutions import syzygy_module, transpose
from ..rings import QuotientRing

# name -> (variables, ideal generators)
CATALOG_RINGS = {
    "S2": ("x y", []),
    "S3": ("x y z", []),
    "hyper-xy": ("x y", ["x*y"]),
    "hyper-x2": ("x y", ["x^2"]),
    "ci-x2y2": ("x y", ["x^2", "y^2"]),
    "artin-m2": ("x y", ["x^2", "x*y", "y^2"]),
    "axes": ("x y z", ["x*y", "x*z", "y*z"]),
    "noncm": ("x y", ["x^2", "x*y"]),
}

_RING_CACHE: dict = {}


def catalog_ring(name: str, p: int = 7) -> QuotientRing:
    key = (name, p)
    ring = _RING_CACHE.get(key)
    if ring is None:
        names, ideal = CATALOG_RINGS[name]
        ring = QuotientRing.polynomial(p, names.split(), ideal, name=name)
        _RING_CACHE[key] = ring
    return ring


def maximal_ideal(ring: QuotientRing) -> GradedModule:
    """m as a module: the image of R(-1)^n -> R given by the variables."""
    src = GradedModule.free(ring, [1] * ring.nvars)
    tgt = free_module(ring)
    cols = [{(0, ring.cover.var_monomial(i)): 1} for i in range(ring.nvars)]
    sq = image(ModuleMap(src, tgt, cols))
    M = sq.module
    M.name = "m"
    return M


def catalog_modules(ring: QuotientRing) -> dict:
    """R, k, m, R/(x), ω (Cohen-Macaulay rings only), Ω¹(k) and Tr(k)."""
    cached = ring.cache.get("catalog-modules")
    if cached is not None:
        return cached
    R = free_module(ring)
    k = residue_field(ring)
    mods = {"R": R, "k": k, "m": maximal_ideal(ring),
            "R/(x)": GradedModule.cyclic(ring, [ring.cover.gens()[0]], name="R/(x)")}
    prof = ring_profile(ring)
    if prof.is_cm:
        mods["omega"] = prof.omega
    syz = syzygy_module(k, 1)
    mods["syz1(k)"] = GradedModule(ring, syz.gen_degrees, syz.relations, name="syz1(k)")
    tr = transpose(k)
    mods["Tr(k)"] = GradedModule(ring, tr.gen_degrees, tr.relations, name="Tr(k)")
    ring.cache["catalog-modules"] = mods
    return mods


def catalog_instances(p: int = 7) -> list[Instance]:
    """One instance per (catalog ring, catalog module); partners R, k and ω ride along."""
    out = []
    for rname in CATALOG_RINGS:
        ring = catalog_ring(rname, p)
        mods = catalog_modules(ring)
        for mname, M in mods.items():
            named = {"M": M, "R": mods["R"], "k": mods["k"]}
            if "omega" in mods:
                named["omega"] = mods["omega"]
            out.append(Instance(f"{rname}:{mname}", ring, named, provenance="catalog", focus=("M",)))
    return out


@dataclass(frozen=True)
class RandomParams:
    vars: int = 3
    max_ideal_deg: int = 3
    max_module_gens: int = 3
    max_rel_deg: int = 3
    p: int = 7

    def check(self):
        if not (1 <= self.vars <= 3 and 1 <= self.max_ideal_deg <= 3
                and 1 <= self.max_module_gens <= 3 and 1 <= self.max_rel_deg <= 3):
            raise ValueError("random instance parameters outside the supported caps")


def _random_monomial(rng: random.Random, n: int, d: int) -> tuple:
    cuts = sorted(rng.randint(0, d) for _ in range(n - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [d])]
    return tuple(parts)


def _random_ideal(rng: random.Random, n: int, params: RandomParams) -> list:
    if n == 1:
        return [{(rng.randint(2, max(2, params.max_ideal_deg)),): 1}]
    gens = []
    for _ in range(rng.randint(0, 2)):
        d = rng.randint(2, max(2, params.max_ideal_deg))
        m1 = _random_monomial(rng, n, d)
        if rng.random() < 0.5:
            gens.append({m1: 1})
        else:
            m2 = _random_monomial(rng, n, d)
            if m2 == m1:
                gens.append({m1: 1})
            else:
                gens.append({m1: 1, m2: rng.randint(1, params.p - 1)})
    return gens


def random_module(rng: random.Random, ring: QuotientRing, params: RandomParams, name: str):
    """Random homogeneous presentation over ``ring``; may be zero."""
    n = ring.nvars
    ngens = rng.randint(1, params.max_module_gens)
    degs = [rng.randint(0, 1) for _ in range(ngens)]
    rels = []
    for _ in range(rng.randint(1, 3)):
        D = max(degs) + rng.randint(1, params.max_rel_deg)
        v = {}
        for j, dj in enumerate(degs):
            if rng.random() < 0.5:
                continue
            for _ in range(rng.randint(1, 2)):
                m = _random_monomial(rng, n, D - dj)
                v[(j, m)] = (v.get((j, m), 0) + rng.randint(1, params.p - 1)) % params.p
        v = {k: c for k, c in v.items() if c}
        if v:
            rels.append(v)
    return GradedModule(ring, degs, rels, name=name)


def random_instance(seed: int, params: RandomParams | None = None) -> Instance:
    """Deterministic in ``seed``: a monomial or binomial quotient with two nonzero modules."""
    params = params or RandomParams()
    params.check()
    rng = random.Random(seed)
    n = rng.randint(1, params.vars)
    names = ["x", "y", "z"][:n]
    cover = PolyRing(params.p, names)
    ring = QuotientRing(cover, _random_ideal(rng, n, params), name=f"rand{seed}")
    mods = {}
    for label in ("M", "N"):
        for _ in range(20):
            X = random_module(rng, ring, params, label)
            if minimalize(X).ngens:
                break
        else:
            X = free_module(ring)
        mods[label] = X
    mods["R"] = free_module(ring)
    return Instance(f"random-{seed}", ring, mods, provenance=f"random({seed})", focus=("M", "N"))
