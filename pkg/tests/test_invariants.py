import pytest
from hypothesis import given
from hypothesis import strategies as st

from homolab.invariants import (UnsupportedError, ZeroModuleError, bass_number, canonical_module,
                                deficiency, depth, dimension, g_dim, g_inj_dim, grade,
                                hilbert_series, inj_dim, is_cohen_macaulay, module_type,
                                proj_dim, ring_profile)
from homolab.modules import GradedModule
from homolab.verify.instances import CATALOG_RINGS, catalog_modules, catalog_ring, random_instance

# (depth, dim, CM, Gorenstein, type) of each catalog ring
PROFILES = {
    "S2": (2, 2, True, True, 1), "S3": (3, 3, True, True, 1),
    "hyper-xy": (1, 1, True, True, 1), "hyper-x2": (1, 1, True, True, 1),
    "ci-x2y2": (0, 0, True, True, 1), "artin-m2": (0, 0, True, False, 2),
    "axes": (1, 1, True, False, 2), "noncm": (0, 1, False, False, 1),
}

# finiteness pattern "pd id gd gid" per (ring, module); F finite, I infinite, U unsupported
PATTERNS = {
    ("hyper-xy", "R"): "FFFF", ("hyper-xy", "k"): "IIFF", ("hyper-xy", "R/(x)"): "IIFF",
    ("hyper-xy", "Tr(k)"): "FFFF", ("ci-x2y2", "m"): "IIFF",
    ("artin-m2", "R"): "FIFI", ("artin-m2", "k"): "IIII", ("artin-m2", "omega"): "IFIF",
    ("axes", "omega"): "IFIF", ("axes", "Tr(k)"): "FIFI", ("axes", "m"): "IIII",
    ("noncm", "R"): "FIFU", ("noncm", "R/(x)"): "IIIU", ("S3", "k"): "FFFF",
}


@pytest.mark.parametrize("rname", sorted(PROFILES))
def test_ring_profiles(rname):
    prof = ring_profile(catalog_ring(rname))
    assert (prof.depth, prof.dim, prof.is_cm, prof.is_gorenstein, prof.type) == PROFILES[rname]


def _code(fn):
    try:
        v = fn()
    except UnsupportedError:
        return "U"
    return "F" if v.is_finite else ("I" if v.is_infinite else "?")


@pytest.mark.parametrize("key", sorted(PATTERNS))
def test_dimension_patterns(key):
    rname, mname = key
    M = catalog_modules(catalog_ring(rname))[mname]
    got = "".join(_code(f) for f in (lambda: proj_dim(M), lambda: inj_dim(M),
                                     lambda: g_dim(M, 4), lambda: g_inj_dim(M, 4)))
    assert got == PATTERNS[key]


def test_koszul_numbers_over_s3():
    k = catalog_modules(catalog_ring("S3"))["k"]
    assert proj_dim(k).value == 3 and depth(k) == 0 and dimension(k) == 0
    assert grade(k) == 3


def test_hilbert_series_of_hypersurface():
    R = catalog_modules(catalog_ring("hyper-xy"))["R"]
    hs = hilbert_series(R)
    assert [hs.coefficient(d) for d in range(5)] == [1, 2, 2, 2, 2]
    assert hs.pole_order() == 1


def test_types_and_bass_numbers():
    mods = catalog_modules(catalog_ring("artin-m2"))
    assert module_type(mods["R"]) == 2
    assert module_type(mods["omega"]) == 1
    assert bass_number(mods["k"], 0) == 1


@pytest.mark.parametrize("rname", [r for r in CATALOG_RINGS if r != "noncm"])
def test_canonical_module_is_top_deficiency(rname):
    ring = catalog_ring(rname)
    w = canonical_module(ring)
    K = deficiency(GradedModule.free(ring), ring_profile(ring).dim)
    assert w.hilbert_vector(-4, 6) == K.hilbert_vector(-4, 6)
    assert module_type(w) == 1
    assert is_cohen_macaulay(w)


def test_canonical_module_needs_cm():
    with pytest.raises(UnsupportedError):
        canonical_module(catalog_ring("noncm"))


def test_zero_module_invariants_raise():
    Z = GradedModule(catalog_ring("S2"), [0], [{(0, (0, 0)): 1}])
    with pytest.raises(ZeroModuleError):
        depth(Z)


@pytest.mark.parametrize("rname", sorted(CATALOG_RINGS))
def test_deficiency_window(rname):
    for M in catalog_modules(catalog_ring(rname)).values():
        nz = [i for i in range(catalog_ring(rname).nvars + 1) if deficiency(M, i).ngens]
        assert min(nz) == depth(M) and max(nz) == dimension(M)


@given(st.integers(0, 60), st.sampled_from(["M", "N"]))
def test_gdim_bound_monotone(seed, which):
    """Raising the bound only resolves unknowns; it never flips finite and infinite."""
    M = random_instance(seed).modules[which]
    verdicts = [g_dim(M, b) for b in (1, 2, 4)]
    decided = {v.status for v in verdicts if not v.is_unknown}
    assert len(decided) <= 1
    seen_decided = False
    for v in verdicts:
        if seen_decided:
            assert not v.is_unknown
        seen_decided |= not v.is_unknown


@given(st.integers(0, 60))
def test_auslander_buchsbaum_on_random(seed):
    inst = random_instance(seed)
    t = ring_profile(inst.ring).depth
    for M in inst.modules.values():
        pd = proj_dim(M)
        if pd.is_finite:
            assert pd.value + depth(M) == t
