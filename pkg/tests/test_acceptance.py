"""One check per acceptance criterion; each prints a single PASS/FAIL line.

Where a criterion asks for something that does not hold mathematically, the
faithful check lives in a strict xfail test and the criterion prints FAIL.
"""
import io
import json
import random
import time
from math import comb

import pytest

from homolab.cli import main
from homolab.complexes import hom_complex, koszul_complex, tensor_complex
from homolab.dualities import ext_comparison
from homolab.instancefile import parse_instance
from homolab.invariants import (bass_number, deficiency, depth, dimension, g_dim, g_inj_dim,
                                inj_dim, is_zero, module_type, proj_dim, ring_profile)
from homolab.modules import GradedModule, minimalize
from homolab.resolutions import dual_module, ext_by_hom_complex, ext_module, resolution
from homolab.verify import get_probe, random_instance, run_suite
from homolab.verify.instances import (CATALOG_RINGS, RandomParams, catalog_instances,
                                      catalog_modules, catalog_ring, random_module)

from test_groebner import membership_disagreements

HYPER = "field 7\nring x y\nideal x*y\nmodule M\n  gens e0:0\n  rels x*e0\n"


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} ({detail})")
    return emit


def total_dim(E, lo=-12, hi=12):
    return sum(E.hilbert_vector(lo, hi))


def test_criterion_1_koszul(report):
    t0 = time.perf_counter()
    ring = catalog_ring("S3")
    M = GradedModule.cyclic(ring, ["x", "y", "z"])
    k = GradedModule.residue_field(ring)
    dims = [total_dim(ext_module(M, k, i)) for i in range(4)]
    secs = time.perf_counter() - t0
    ok = dims == [comb(3, i) for i in range(4)] and secs < 5
    report(1, ok, f"dim Ext^i(M,k) = {dims}, {secs:.2f}s")
    assert ok


def _hyper_module():
    return parse_instance(HYPER).modules["M"]


def test_criterion_2_periodicity(report):
    t0 = time.perf_counter()
    M = _hyper_module()
    betti = resolution(M).ensure(10).betti(10).totals()
    pd = proj_dim(M)
    odd_ok = all(ext_module(M, M, 2 * i + 1).hilbert_vector(-6, 6) == M.hilbert_vector(-6, 6)
                 for i in range(3))
    secs = time.perf_counter() - t0
    attainable = betti == [1] * 11 and pd.is_infinite and secs < 30
    report(2, attainable and odd_ok,
           f"betti {betti[:3]}..., pd {pd.status}, Ext^odd(M,M) = M: {odd_ok}, {secs:.2f}s; "
           "Ext^odd(M,M) vanishes, see decisions ledger")
    assert attainable


@pytest.mark.xfail(strict=True, reason="Ext^{2i+1}(R/(x), R/(x)) = 0 over k[x,y]/(xy)")
def test_criterion_2_odd_ext_is_module():
    M = _hyper_module()
    for i in range(3):
        E = ext_module(M, M, 2 * i + 1)
        assert E.hilbert_vector(-6, 6) == M.hilbert_vector(-6, 6)


def _random_monomial_module(rng, ring):
    n = ring.nvars
    gens = []
    for _ in range(rng.randint(1, 4)):
        d = rng.randint(1, 4)
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        gens.append({(0, tuple(e)): 1})
    twist = rng.randint(0, 2)
    return GradedModule(ring, [twist], gens)


def test_criterion_3_auslander_buchsbaum(report):
    t0 = time.perf_counter()
    ring = parse_instance("field 101\nring x y z\n").ring
    rng = random.Random(2024)
    failures = 0
    for _ in range(50):
        M = _random_monomial_module(rng, ring)
        pd = proj_dim(M)
        # depth from Ext(k, M) rather than from the resolution of M
        dep = next(i for i in range(4) if bass_number(M, i))
        failures += not (pd.is_finite and pd.value + dep == 3)
    secs = time.perf_counter() - t0
    ok = failures == 0 and secs < 120
    report(3, ok, f"{failures} failures in 50 modules, {secs:.1f}s")
    assert ok


@pytest.mark.slow
def test_criterion_4_omega_comparison(report):
    t0 = time.perf_counter()
    checked = 0
    bad = []
    for rname in CATALOG_RINGS:
        ring = catalog_ring(rname)
        prof = ring_profile(ring)
        if not prof.is_cm:
            continue
        w = prof.omega
        mods = catalog_modules(ring)
        for a, M in mods.items():
            for b, N in mods.items():
                if is_zero(M) or is_zero(N):
                    continue
                exts = [ext_module(M, N, i) for i in range(4)]
                prem = [N] + [E for E in exts if not is_zero(E)]
                if not all(g_dim(X, 4).is_finite for X in prem):
                    continue
                checked += 1
                if not all(bd.diagnostics.is_isomorphism for bd in ext_comparison(M, N, w, 3)):
                    bad.append((rname, a, b))
    insts = [i for i in catalog_instances() if ring_profile(i.ring).is_cm]
    rep = run_suite([get_probe("P11"), get_probe("P12")], insts)
    refuted = rep.totals["Refuted"]
    secs = time.perf_counter() - t0
    ok = not bad and refuted == 0 and checked > 0 and secs < 300
    report(4, ok, f"{checked} pairs with certified premises, {len(bad)} non-isomorphisms, "
                  f"probe Refuted {refuted}, {secs:.1f}s")
    assert ok


def test_criterion_5_type_formula(report):
    t0 = time.perf_counter()
    ring = catalog_ring("ci-x2y2")
    R = catalog_modules(ring)["R"]
    mods = [M for M in catalog_modules(ring).values()]
    rng = random.Random(55)
    while len(mods) < 10:
        X = random_module(rng, ring, RandomParams(vars=2), "X")
        if not is_zero(X):
            mods.append(X)
    mismatches = 0
    for M in mods:
        g = g_dim(M, 6)
        mismatches += not (g.is_finite and module_type(M) == minimalize(ext_module(M, R, g.value)).ngens)
    secs = time.perf_counter() - t0
    ok = mismatches == 0 and secs < 60
    report(5, ok, f"{len(mods)} modules, {mismatches} mismatches, {secs:.1f}s")
    assert ok


def test_criterion_6_deficiency_support(report):
    t0 = time.perf_counter()
    bad = []
    count = 0
    for rname in CATALOG_RINGS:
        ring = catalog_ring(rname)
        for mname, M in catalog_modules(ring).items():
            count += 1
            dp, dm = depth(M), dimension(M)
            nz = [i for i in range(ring.nvars + 1) if not is_zero(deficiency(M, i))]
            if not nz or nz[0] != dp or nz[-1] != dm:
                bad.append((rname, mname, nz, dp, dm))
    secs = time.perf_counter() - t0
    ok = not bad and secs < 120
    report(6, ok, f"{count} modules, {len(bad)} violations, {secs:.1f}s")
    assert ok


def test_criterion_7_gorenstein_ladder(report):
    t0 = time.perf_counter()
    rows = {}
    for rname in CATALOG_RINGS:
        ring = catalog_ring(rname)
        prof = ring_profile(ring)
        if not prof.is_cm:
            continue
        mods = catalog_modules(ring)
        w = prof.omega
        flags = (prof.is_gorenstein,
                 g_inj_dim(mods["k"], 6).is_finite,
                 g_inj_dim(mods["R"], 6).is_finite,
                 g_dim(w, 6).is_finite,
                 g_dim(dual_module(w), 6).is_finite)
        rows[rname] = flags
    agree = all(len(set(f)) == 1 for f in rows.values())
    expected = {"hyper-xy": True, "hyper-x2": True, "ci-x2y2": True,
                "artin-m2": False, "axes": False}
    matches = all(rows[r][0] == v for r, v in expected.items())
    secs = time.perf_counter() - t0
    ok = agree and matches and secs < 120
    report(7, ok, f"{len(rows)} CM rings, characterizations agree: {agree}, {secs:.1f}s")
    assert ok


@pytest.mark.slow
def test_criterion_8_full_suite(report, tmp_path):
    t0 = time.perf_counter()
    out = io.StringIO()
    dest = tmp_path / "report.json"
    code = main(["verify", "--suite", "all", "--random", "30", "--seed", "0",
                 "--json", str(dest)], out=out)
    secs = time.perf_counter() - t0
    rep = json.loads(dest.read_text())
    nprobes = len({c["probe"] for c in rep["cells"]})
    ninst = len({c["instance"] for c in rep["cells"]})
    ok = code == 0 and rep["totals"]["Refuted"] == 0 and nprobes >= 24 and ninst >= 30 \
        and secs < 600
    report(8, ok, f"{nprobes} probes x {ninst} instances, totals {rep['totals']}, exit {code}, "
                  f"{secs:.1f}s")
    assert ok


def test_criterion_9_kernel_oracles(report):
    t0 = time.perf_counter()
    gb_bad = sum(membership_disagreements(seed) for seed in range(20))
    d2_bad = 0
    ncomplexes = 0
    for rname in CATALOG_RINGS:
        ring = catalog_ring(rname)
        mods = catalog_modules(ring)
        X = resolution(mods["k"]).as_complex(3)
        Y = resolution(mods["R/(x)"]).as_complex(3)
        for Z in (X, Y, koszul_complex(ring, list(ring.names)), hom_complex(X, Y),
                  tensor_complex(X, Y)):
            ncomplexes += 1
            d2_bad += not Z.is_complex()
    ext_bad = 0
    for seed in range(20):
        inst = random_instance(seed)
        M, N = inst.modules["M"], inst.modules["N"]
        for i in range(3):
            a = ext_module(M, N, i).hilbert_vector(-8, 8)
            b = ext_by_hom_complex(M, N, i).hilbert_vector(-8, 8)
            ext_bad += a != b
    secs = time.perf_counter() - t0
    ok = gb_bad == ext_bad == d2_bad == 0
    report(9, ok, f"membership {gb_bad}, d^2 {d2_bad} of {ncomplexes}, Ext {ext_bad} "
                  f"disagreements, {secs:.1f}s")
    assert ok


def _gorenstein_rings():
    return [r for r in CATALOG_RINGS if ring_profile(catalog_ring(r)).is_gorenstein]


def test_criterion_10_verdict_consistency(report):
    t0 = time.perf_counter()
    id_infinite = []
    for rname in _gorenstein_rings():
        for mname, M in catalog_modules(catalog_ring(rname)).items():
            if inj_dim(M).is_infinite:
                id_infinite.append(f"{rname}:{mname}")
    r_ok = all(inj_dim(catalog_modules(catalog_ring(r))["R"]).is_infinite
               for r in CATALOG_RINGS if not ring_profile(catalog_ring(r)).is_gorenstein)
    gd_ok = all(not g_dim(M, 6).is_unknown
                for r in _gorenstein_rings() for M in catalog_modules(catalog_ring(r)).values())
    secs = time.perf_counter() - t0
    report(10, r_ok and gd_ok and not id_infinite,
           f"id Infinite on {len(id_infinite)} modules over Gorenstein rings (e.g. "
           f"{', '.join(id_infinite[:2])}); R over non-Gorenstein: {r_ok}; "
           f"gdim decided: {gd_ok}; {secs:.1f}s; see decisions ledger")
    assert r_ok and gd_ok


@pytest.mark.xfail(strict=True, reason="id k is infinite over a singular Gorenstein ring")
def test_criterion_10_injdim_finite_over_gorenstein():
    for rname in _gorenstein_rings():
        for M in catalog_modules(catalog_ring(rname)).values():
            assert inj_dim(M).is_finite
