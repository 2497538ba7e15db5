import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homolab.instancefile import parse_instance
from homolab.modules import (GradedModule, ModuleError, ModuleMap, hom, image, kernel,
                             map_diagnostics, minimalize, tensor)
from homolab.verify.instances import catalog_modules, catalog_ring, random_instance

from helpers import presented
from oracle import hom_dim, map_rank

RINGS = ["S2", "hyper-xy", "artin-m2", "axes", "noncm"]
DEGS = range(-3, 5)


def hilb(M, lo=-3, hi=4):
    return M.hilbert_vector(lo, hi)


@pytest.mark.parametrize("rname", RINGS)
def test_catalog_hilbert_matches_oracle(rname):
    for M in catalog_modules(catalog_ring(rname)).values():
        P = presented(M)
        assert hilb(M) == [P.hilbert(d) for d in DEGS]


@pytest.mark.parametrize("rname", ["hyper-xy", "artin-m2", "noncm"])
def test_hom_matches_oracle(rname):
    mods = catalog_modules(catalog_ring(rname))
    for a in ("k", "m", "R/(x)"):
        for b in ("R", "k", "R/(x)"):
            H = hom(mods[a], mods[b]).module
            want = [hom_dim(presented(mods[a]), presented(mods[b]), d) for d in DEGS]
            assert hilb(H) == want, (a, b)


@pytest.mark.parametrize("seed", range(6))
def test_random_hom_and_tensor_match_oracle(seed):
    from oracle import tensor_presented
    inst = random_instance(seed)
    M, N = inst.modules["M"], inst.modules["N"]
    H = hom(M, N).module
    assert hilb(H) == [hom_dim(presented(M), presented(N), d) for d in DEGS]
    T = tensor(M, N)
    TP = tensor_presented(presented(M), presented(N))
    assert hilb(T) == [TP.hilbert(d) for d in DEGS]


@given(st.integers(0, 10**5))
def test_kernel_image_additivity(seed):
    """dim M_d = dim ker_d + dim im_d for the multiplication-by-a-form map."""
    rng = random.Random(seed)
    inst = random_instance(seed % 50)
    M = inst.modules["M"]
    ring = inst.ring
    n = ring.nvars
    e = rng.randrange(n)
    var = tuple(1 if i == e else 0 for i in range(n))
    cols = [{(j, var): 1} for j in range(M.ngens)]
    f = ModuleMap(M, M, cols, 1)
    K, I = kernel(f).module, image(f).module
    P = presented(M)
    for d in range(-1, 4):
        r = map_rank(P, P, cols, d, 1)
        assert K.hilbert_function(d) == P.hilbert(d) - r
        assert I.hilbert_function(d + 1) == r


def test_minimalize_is_isomorphic():
    ring = catalog_ring("hyper-xy")
    # redundant presentation of R/(x): extra generator equal to x*e0
    M = GradedModule(ring, [0, 1], [{(0, (1, 0)): 1}, {(1, (0, 0)): 1, (0, (1, 0)): 6}])
    M0 = minimalize(M)
    assert M0.ngens == 1 and hilb(M0) == hilb(M)


def test_map_diagnostics():
    ring = catalog_ring("S2")
    R = GradedModule.free(ring)
    k = GradedModule.residue_field(ring)
    proj = ModuleMap(R, k, [{(0, (0, 0)): 1}])
    d = map_diagnostics(proj)
    assert d.is_surjective and not d.is_injective and not d.is_isomorphism
    x = ModuleMap(R.twist(-1), R, [{(0, (1, 0)): 1}], 0)
    d = map_diagnostics(x)
    assert d.is_injective and not d.is_surjective


def test_hom_generator_maps_are_homomorphisms():
    mods = catalog_modules(catalog_ring("axes"))
    H = hom(mods["m"], mods["R/(x)"])
    for i in range(H.module.ngens):
        assert H.generator_map(i).is_well_defined()


def test_relation_checks():
    ring = catalog_ring("S2")
    with pytest.raises(ModuleError):
        GradedModule(ring, [0], [{(0, (1, 0)): 1, (0, (0, 2)): 1}])
    with pytest.raises(ModuleError):
        GradedModule(ring, [0], [{(3, (1, 0)): 1}])


def test_instance_modules_over_shared_ring():
    inst = parse_instance("field 7\nring x y\nmodule A\n  gens a:0\nmodule B\n  gens b:1\n")
    assert inst.modules["A"].ring is inst.modules["B"].ring
