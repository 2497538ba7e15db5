import pytest

from homolab.complexes import (BoundedComplex, ComplexMap, hom_complex, homology_at,
                               koszul_complex, shift, tensor_complex)
from homolab.modules import ModuleError, ModuleMap
from homolab.resolutions import resolution
from homolab.verify.instances import catalog_modules, catalog_ring

from helpers import presented
from oracle import TruncatedResolution


def test_koszul_on_regular_sequence_is_acyclic():
    ring = catalog_ring("S3")
    K = koszul_complex(ring, ["x", "y", "z"])
    assert K.is_complex()
    for i in (1, 2, 3):
        assert homology_at(K, i).ngens == 0
    assert homology_at(K, 0).hilbert_vector(0, 3) == [1, 0, 0, 0]


def test_koszul_homology_detects_zero_divisor():
    ring = catalog_ring("hyper-xy")
    K = koszul_complex(ring, ["x"])
    # H_1 = ann(x) = (y)(-1)
    assert homology_at(K, 1).hilbert_vector(0, 3) == [0, 0, 1, 1]


@pytest.mark.parametrize("rname,mname", [("S2", "m"), ("S2", "Tr(k)"), ("S3", "m"),
                                          ("S3", "syz1(k)"), ("S3", "R/(x)")])
def test_koszul_homology_is_tor_with_k(rname, mname):
    """Over S, H_i(K(x) ⊗ M)_j = β_{i,j}(M)."""
    ring = catalog_ring(rname)
    M = catalog_modules(ring)[mname]
    K = tensor_complex(koszul_complex(ring, list(ring.names)), BoundedComplex.module(M))
    want = TruncatedResolution(presented(M), ring.nvars, 7).betti_table(ring.nvars)
    for i in range(ring.nvars + 1):
        H = homology_at(K, i)
        for j in range(-2, 8):
            assert H.hilbert_function(j) == want.get((i, j), 0)


@pytest.mark.parametrize("rname", ["hyper-xy", "noncm", "axes"])
def test_hom_and_tensor_complexes_square_to_zero(rname):
    mods = catalog_modules(catalog_ring(rname))
    X = resolution(mods["k"]).as_complex(2)
    Y = resolution(mods["R/(x)"]).as_complex(2)
    for Z in (hom_complex(X, Y), tensor_complex(X, Y), shift(X, 1), hom_complex(Y, shift(X, -1))):
        assert Z.is_complex()


def test_shift_sign():
    X = resolution(catalog_modules(catalog_ring("S2"))["k"]).as_complex(2)
    Y = shift(X, 1)
    assert Y.term(1).gen_degrees == X.term(0).gen_degrees
    a, b = X.diff(1).columns, Y.diff(2).columns
    p = X.ring.p
    assert all({k: (-c) % p for k, c in ca.items()} == cb for ca, cb in zip(a, b))


def test_non_complex_rejected():
    ring = catalog_ring("S2")
    with pytest.raises(ModuleError):
        BoundedComplex.from_matrices(ring, {0: [0], 1: [1], 2: [2]},
                                     {1: [{(0, (1, 0)): 1}], 2: [{(0, (1, 0)): 1}]})


def test_chain_map_check():
    ring = catalog_ring("S2")
    X = koszul_complex(ring, ["x"])
    ident = {i: ModuleMap(X.term(i), X.term(i),
                          [{(j, (0, 0)): 1} for j in range(X.term(i).ngens)]) for i in (0, 1)}
    assert ComplexMap(X, X, ident).is_chain_map()
    bad = dict(ident)
    bad[0] = ModuleMap(X.term(0), X.term(0), [{(0, (0, 0)): 2}])
    with pytest.raises(ModuleError):
        ComplexMap(X, X, bad)
