"""The probe catalog.

Each probe turns one implication about graded modules into premises and
conclusions that are evaluated on an instance. H-dim statements are checked
in both readings (projective / Gorenstein dimension) together with the
matching injective counterpart (injective / Gorenstein injective dimension).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

from ..complexes import homology_at, koszul_complex
from ..dualities import ext_comparison, spherical_construction
from ..instancefile import Instance
from ..invariants import deficiency, free_module, residue_field
from ..modules import GradedModule, ModuleMap, kernel, minimalize
from ..resolutions import (_cochain_map, dual_module, resolution, syzygy_module, tor_subquotient,
                           transpose)
from .core import READINGS, Case, Context, fold, ProbeOutcome, t_and, t_iff, t_implies



@dataclass(frozen=True)
class Probe:
    id: str
    title: str
    statement: str
    run: Callable[[Context, Instance], list]

    def evaluate(self, ctx: Context, inst: Instance) -> ProbeOutcome:
        return fold(self.run(ctx, inst))


# -- binding helpers ----------------------------------------------------------------


def _focus(inst: Instance):
    for name in inst.focus:
        yield name, inst.modules[name]


def _pairs(inst: Instance):
    for a, M in _focus(inst):
        for b, N in inst.modules.items():
            yield a, M, b, N


def _nonzero(case: Case, ctx: Context, *mods) -> bool:
    return case.require("modules nonzero", not any(ctx.zero(X) for X in mods))


def _cm_ring(case: Case, ctx: Context, M) -> bool:
    return case.require("ring Cohen-Macaulay", ctx.profile(M).is_cm)


def _ext_range_fin(ctx, M, N, lo, hi, which):
    return t_and(ctx.fin(ctx.ext(M, N, i), which) for i in range(lo, hi + 1))


def _linear_sequence(M0: GradedModule):
    """Linear forms x with M0 = R/(x)(-d), or None."""
    if M0.ngens != 1:
        return None
    d0 = M0.gen_degrees[0]
    seq = []
    for r, d in zip(M0.relations, M0.rel_degrees):
        if d != d0 + 1:
            return None
        seq.append({m: c for (_, m), c in r.items()})
    return seq


def _is_regular_sequence(ring, seq) -> bool:
    if not seq:
        return True
    K = koszul_complex(ring, seq)
    return minimalize(homology_at(K, 1)).ngens == 0


def _annihilator(ring, f: dict, deg: int) -> list:
    """Minimal generators of ann(f) for a homogeneous ring element f of degree ``deg``."""
    src = GradedModule.free(ring, [deg])
    tgt = free_module(ring)
    sq = kernel(ModuleMap(src, tgt, [{(0, m): c for m, c in f.items()}]))
    return [{m: c for (_, m), c in g.items()} for g in sq.gens]


def _scalar_multiple(f: dict, g: dict, p: int) -> bool:
    if not f or set(f) != set(g):
        return False
    m0 = next(iter(f))
    s = g[m0] * pow(f[m0], p - 2, p) % p
    return all(g[m] == s * f[m] % p for m in f)


# -- probes ---------------------------------------------------------------------------


def p1_koszul(ctx: Context, inst: Instance) -> list:
    cases = []
    ring = inst.ring
    for a, M, b, N in _pairs(inst):
        c = Case(f"M={a}, N={b}")
        cases.append(c)
        if not _nonzero(c, ctx, M, N):
            continue
        seq = _linear_sequence(minimalize(M))
        if not c.require("M is R modulo linear forms", seq is not None):
            continue
        if not c.require("the linear forms are R-regular", _is_regular_sequence(ring, seq)):
            continue
        kills = all(N.is_zero_element({(l, m): v for m, v in x.items()})
                    for x in seq for l in range(N.ngens))
        if not c.require("the forms annihilate N", kills) or not c.ready:
            continue
        n = len(seq)
        res = resolution(M).ensure(n + 1)
        c.conclude("betti numbers are binomial",
                   all(res.rank(i) == comb(n, i) for i in range(n + 2)))
        c.conclude("Hom(F, N) has zero differentials",
                   all(_cochain_map(res, N, i).is_zero() for i in range(n)))
        mu = ctx.mu(N)
        gens = [ctx.mu(ctx.ext(M, N, i)) for i in range(n + 1)]
        c.conclude("Ext^i(M,N) needs C(n,i)·μ(N) generators",
                   gens == [comb(n, i) * mu for i in range(n + 1)])
        c.data = {"n": n, "extGens": gens}
    return cases


def p2_periodic(ctx: Context, inst: Instance) -> list:
    cases = []
    ring = inst.ring
    p = ring.p
    for a, M in _focus(inst):
        c = Case(f"M={a}")
        cases.append(c)
        if not _nonzero(c, ctx, M):
            continue
        M0 = minimalize(M)
        seq = _linear_sequence(M0)
        if not c.require("M is R modulo one linear form", seq is not None and len(seq) == 1):
            continue
        f = seq[0]
        ann_f = _annihilator(ring, f, 1)
        g = ann_f[0] if len(ann_f) == 1 else None
        if not c.require("ann(a) is generated by one linear form b",
                         g is not None and len({sum(m) for m in g}) == 1
                         and sum(next(iter(g))) == 1):
            continue
        ann_g = _annihilator(ring, g, 1)
        if not c.require("ann(b) is generated by a",
                         len(ann_g) == 1 and _scalar_multiple(f, ann_g[0], p)):
            continue
        L = 10
        res = resolution(M).ensure(L)
        betti = [res.rank(i) for i in range(L + 1)]
        c.conclude("β_i = 1 for i ≤ 10", betti == [1] * (L + 1))
        alternating = True
        for i in range(1, L + 1):
            col = res.differential(i)[0] if res.rank(i) else {}
            entry = {m: v for (_, m), v in col.items()}
            want = f if i % 2 == 1 else g
            alternating &= _scalar_multiple(want, entry, p)
        c.conclude("differentials alternate between a and b", alternating)
        pd = ctx.verdict(M, "pd")
        c.conclude("projective dimension infinite", pd.is_infinite)
        # the Ext shape is recorded for the ledger, not asserted
        odd = []
        for i in range(3):
            E = ctx.ext(M, M, 2 * i + 1)
            odd.append({"i": 2 * i + 1, "gens": ctx.mu(E),
                        "hilbert": E.hilbert_vector(-1, 4),
                        "moduleHilbert": M.hilbert_vector(-1, 4)})
        c.data = {"betti": betti, "oddExt": odd}
    return cases


def p3_spherical(ctx: Context, inst: Instance) -> list:
    cases = []
    for a, M in _focus(inst):
        c = Case(f"M={a}")
        cases.append(c)
        if not _nonzero(c, ctx, M):
            continue
        n = ctx.grade(M)
        if not c.require("grade M > 0", n > 0):
            continue
        N, rep = spherical_construction(M)
        c.conclude("dualized truncation is exact", rep.dual_sequence_exact)
        c.conclude("Ext^i(N,R) = 0 for 1 ≤ i < n", all(rep.ext_vanishing.values()))
        c.conclude("natural map Ext^n(N,R) -> M is an isomorphism",
                   rep.natural_map_diagnostics.is_isomorphism)
        pdN = ctx.verdict(N, "pd")
        c.conclude("pd N ≤ n", pdN.is_finite and pdN.value <= n)
        pdM = ctx.verdict(M, "pd")
        if not pdM.is_finite or pdM.value > n:
            c.conclude("N is not perfect when pd M > grade M", ctx.grade(N) != pdN.value)
        c.data = {"n": n, "report": rep.to_json()}
    return cases


def p4_ab_formula(ctx, inst):
    cases = []
    for a, M in _focus(inst):
        for H, _ in READINGS:
            c = Case(f"M={a}, {H}")
            cases.append(c)
            if not _nonzero(c, ctx, M) or not c.require(f"{H}(M) finite", ctx.fin(M, H)):
                continue
            v = ctx.value(M, H)
            c.conclude(f"{H}(M) + depth M = depth R", v + ctx.depth(M) == ctx.t(M))
            c.data = {"value": v, "depth": ctx.depth(M), "t": ctx.t(M)}
    return cases


def p5_syzygy_shift(ctx, inst):
    cases = []
    for a, M in _focus(inst):
        for H, _ in READINGS:
            c = Case(f"M={a}, {H}")
            cases.append(c)
            if not _nonzero(c, ctx, M) or not c.require(f"{H}(M) finite", ctx.fin(M, H)):
                continue
            v = ctx.value(M, H)
            ok = []
            for n in range(1, 4):
                W = syzygy_module(M, n)
                if ctx.zero(W):
                    continue
                w = ctx.value(W, H)
                ok.append(w == max(v - n, 0))
            c.conclude(f"{H}(syz^n M) = max({H}(M) - n, 0)", all(ok))
    return cases


def p6_ext_forces_target(ctx, inst):
    cases = []
    for a, M, b, N in _pairs(inst):
        for H, _ in READINGS:
            c = Case(f"M={a}, N={b}, {H}")
            cases.append(c)
            if not _nonzero(c, ctx, M, N) or not c.require("pd M finite", ctx.fin(M, "pd")):
                continue
            pdm = ctx.value(M, "pd")
            if not c.require(f"{H}(Ext^i(M,N)) finite for i ≤ pd M",
                             _ext_range_fin(ctx, M, N, 0, pdm, H)):
                continue
            if c.ready:
                c.conclude(f"{H}(N) finite", ctx.fin(N, H))
    return cases


def p7_injective_target(ctx, inst):
    cases = []
    for a, M, b, N in _pairs(inst):
        for E, C in (("pd", "id"), ("gd", "gid"), ("gid", "gd")):
            c = Case(f"M={a}, N={b}, {E}->{C}")
            cases.append(c)
            if not _nonzero(c, ctx, M, N) or not _cm_ring(c, ctx, M):
                continue
            if not c.require("id N finite", ctx.fin(N, "id")):
                continue
            top = ctx.t(M) - ctx.depth(M)
            if not c.require(f"{E}(Ext^i(M,N)) finite for i ≤ t - depth M",
                             _ext_range_fin(ctx, M, N, 0, top, E)):
                continue
            if c.ready:
                c.conclude(f"{C}(M) finite", ctx.fin(M, C))
    return cases


def p8_deficiency(ctx, inst):
    cases = []
    for a, M in _focus(inst):
        for H, I in READINGS:
            for src, dst in ((H, I), (I, H)):
                c = Case(f"M={a}, {src}(K^i)->{dst}(M)")
                cases.append(c)
                if not _nonzero(c, ctx, M):
                    continue
                Ks = [deficiency(M, i) for i in range(ctx.depth(M), ctx.dim(M) + 1)]
                if not c.require(f"{src}(K^i(M)) finite in the window",
                                 t_and(ctx.fin(K, src) for K in Ks)):
                    continue
                if c.ready:
                    c.conclude(f"{dst}(M) finite", ctx.fin(M, dst))
    return cases


def p9_canonical_swap(ctx, inst):
    cases = []
    for a, M in _focus(inst):
        for H, I in READINGS:
            c = Case(f"M={a}, {H}/{I}")
            cases.append(c)
            if not _nonzero(c, ctx, M):
                continue
            if not c.require("M Cohen-Macaulay", ctx.depth(M) == ctx.dim(M)):
                continue
            K = deficiency(M, ctx.dim(M))
            c.conclude(f"{H}(K(M)) finite iff {I}(M) finite", t_iff(ctx.fin(K, H), ctx.fin(M, I)))
            c.conclude(f"{H}(M) finite iff {I}(K(M)) finite", t_iff(ctx.fin(M, H), ctx.fin(K, I)))
    return cases


def p10_omega_hom(ctx, inst):
    cases = []
    for a, M in _focus(inst):
        for H, I in READINGS:
            c = Case(f"M={a}, {H}/{I}")
            cases.append(c)
            if not _nonzero(c, ctx, M) or not _cm_ring(c, ctx, M):
                continue
            w = ctx.profile(M).omega
            HM = ctx.hom(w, M)
            c.conclude(f"{H}(Hom(ω,M)) finite iff {I}(M) finite",
                       t_iff(ctx.fin(HM, H), ctx.fin(M, I)))
            c.conclude(f"{H}(M) finite iff {I}(M⊗ω) finite",
                       t_iff(ctx.fin(M, H), ctx.fin(ctx.tensor(M, w), I)))
    return cases


def _prefix(values) -> tuple[int, bool | None]:
    """Length of the leading run of True, and what stopped it."""
    n = 0
    for v in values:
        if v is not True:
            return n, v
        n += 1
    return n, True


def p11_base_change(ctx, inst):
    cases = []
    for a, M, b, N in _pairs(inst):
        R = free_module(inst.ring)
        choices = [("R", R, None)]
        prof = ctx.profile(M)
        if prof.is_cm:
            choices.append(("omega", prof.omega, "gd"))
        for cname, C, proxy in choices:
            c = Case(f"M={a}, N={b}, C={cname}")
            cases.append(c)
            if not _nonzero(c, ctx, M, N):
                continue
            if proxy is None:
                memb = [True] * (ctx.max_i + 1)
                nmemb = True
            else:
                memb = [ctx.fin(ctx.ext(M, N, i), proxy) for i in range(ctx.max_i + 1)]
                nmemb = ctx.fin(N, proxy)
            if not c.require("N in the Auslander class", nmemb):
                continue
            n, stop = _prefix(memb)
            if n == 0:
                c.require("Ext^0(M,N) in the Auslander class", stop)
                continue
            if not c.ready:
                continue
            bundles = ext_comparison(M, N, C, n - 1)
            c.conclude(f"Ext^i(M,N)⊗C -> Ext^i(M,N⊗C) bijective for i < {n}",
                       all(bd.diagnostics.is_isomorphism for bd in bundles))
            c.data = {"range": n - 1}
    return cases


def p12_omega_duality(ctx, inst):
    cases = []
    for a, M, b, N in _pairs(inst):
        for H, I in READINGS:
            c = Case(f"M={a}, N={b}, {H}/{I}")
            cases.append(c)
            if not _nonzero(c, ctx, M, N) or not _cm_ring(c, ctx, M):
                continue
            if not c.require(f"{H}(N) finite", ctx.fin(N, H)):
                continue
            w = ctx.profile(M).omega
            Nw = ctx.tensor(N, w)
            lhs = [ctx.fin(ctx.ext(M, N, i), H) for i in range(ctx.max_i + 1)]
            rhs = [ctx.fin(ctx.ext(M, Nw, i), I) for i in range(ctx.max_i + 1)]
            for n in range(ctx.max_i + 1):
                c.conclude(f"conditions agree for n={n}",
                           t_iff(t_and(lhs[:n + 1]), t_and(rhs[:n + 1])))
            n, _ = _prefix(lhs)
            if n:
                bundles = ext_comparison(M, N, w, n - 1)
                c.conclude("natural maps Ext^i(M,N)⊗ω -> Ext^i(M,N⊗ω) bijective",
                           all(bd.diagnostics.is_isomorphism for bd in bundles))
            c.data = {"lhs": lhs, "rhs": rhs}
    return cases


def p13_pd_transfer(ctx, inst):
    cases = []
    for a, M, b, N in _pairs(inst):
        c = Case(f"M={a}, N={b}")
        cases.append(c)
        if not _nonzero(c, ctx, M, N) or not _cm_ring(c, ctx, M):
            continue
        top = ctx.t(M) - ctx.depth(M)
        if not c.require("pd(Ext^i(M,N)) finite for i ≤ t - depth M",
                         _ext_range_fin(ctx, M, N, 0, top, "pd")):
            continue
        c.conclude("pd M finite iff pd N finite", t_iff(ctx.fin(M, "pd"), ctx.fin(N, "pd")))
    return cases


def p14_vanishing_forces_zero(ctx, inst):
    cases = []
    for a, M, b, N in _pairs(inst):
        for H, _ in READINGS:
            c = Case(f"M={a}, N={b}, {H}")
            cases.append(c)
            if not _nonzero(c, ctx, M, N) or not _cm_ring(c, ctx, M):
                continue
            if not c.require("pd N finite", ctx.fin(N, "pd")):
                continue
            if not c.require(f"{H}(Hom(M,N)) finite", ctx.fin(ctx.hom(M, N), H)):
                continue
            top = ctx.t(M) - ctx.depth(M)
            if not c.require("Ext^i(M,N) = 0 for 1 ≤ i ≤ t - depth M",
                             all(ctx.zero(ctx.ext(M, N, i)) for i in range(1, top + 1))):
                continue
            if c.ready:
                v = ctx.verdict(M, H)
                c.conclude(f"{H}(M) = 0", v.is_finite and v.value == 0)
    return cases


def p15_omega_generators(ctx, inst):
    cases = []
    for a, M in _focus(inst):
        c = Case(f"M={a}")
        cases.append(c)
        if not _nonzero(c, ctx, M) or not _cm_ring(c, ctx, M):
            continue
        R = free_module(inst.ring)
        prof = ctx.profile(M)
        w = prof.omega
        fins = [ctx.fin(ctx.ext(M, R, i), "gd") for i in range(ctx.max_i + 1)]
        n, stop = _prefix(fins)
        if n == 0:
            c.require("gd(Hom(M,R)) finite", stop)
            continue
        bundles = ext_comparison(M, R, w, n - 1)
        c.conclude("Ext^i(M,R)⊗ω -> Ext^i(M,ω) bijective",
                   all(bd.diagnostics.is_isomorphism for bd in bundles))
        tor_ok = True
        mu_ok = True
        for i in range(n):
            T = transpose(syzygy_module(M, i))
            if T.ngens:
                tor_ok &= minimalize(tor_subquotient(T, w, 1).module).ngens == 0
            mu_ok &= ctx.mu(ctx.ext(M, w, i)) == ctx.mu(ctx.ext(M, R, i)) * prof.type
        c.conclude("Tor_1(Tr(syz^i M), ω) = 0", tor_ok)
        c.conclude("μ(Ext^i(M,ω)) = μ(Ext^i(M,R))·type R", mu_ok)
        c.data = {"range": n - 1}
    return cases


def p16_dual_dims_and_type(ctx, inst):
    cases = []
    for a, M in _focus(inst):
        for H, _ in READINGS:
            c = Case(f"M={a}, {H}")
            cases.append(c)
            if not _nonzero(c, ctx, M) or not _cm_ring(c, ctx, M):
                continue
            R = free_module(inst.ring)
            t, r, s = ctx.t(M), ctx.depth(M), ctx.dim(M)
            if not c.require(f"{H}(Ext^i(M,R)) finite for t-s ≤ i ≤ t-r",
                             _ext_range_fin(ctx, M, R, t - s, t - r, H)):
                continue
            if not c.ready:
                continue
            c.conclude(f"{H}(M) finite", ctx.fin(M, H))
            dims_ok = True
            for i in range(t + 1):
                E = ctx.ext(M, R, i)
                d = -1 if ctx.zero(E) else ctx.dim(E)
                dims_ok &= (d == s) if i == t - s else (d <= t - i)
            c.conclude("dim Ext^i(M,R) ≤ t - i, with equality s at i = t - s", dims_ok)
            typ = ctx.type(M)
            c.conclude("type M = μ(Ext^{t-r}(M,R))·type R",
                       typ == ctx.mu(ctx.ext(M, R, t - r)) * ctx.profile(M).type)
            c.conclude("type 1 forces a Gorenstein ring", t_implies(typ == 1, ctx.is_gorenstein(M)))
    return cases


def p17_gorenstein_type(ctx, inst):
    cases = []
    for a, M in _focus(inst):
        c = Case(f"M={a}")
        cases.append(c)
        if not _nonzero(c, ctx, M) or not c.require("ring Gorenstein", ctx.is_gorenstein(M)):
            continue
        g = ctx.verdict(M, "gd")
        if not c.require("gd(M) finite", g.is_finite):
            continue
        R = free_module(inst.ring)
        typ = ctx.type(M)
        mu = ctx.mu(ctx.ext(M, R, g.value))
        c.conclude("type M = μ(Ext^{gd M}(M,R))", typ == mu)
        c.data = {"type": typ, "mu": mu, "gd": g.value}
    return cases


def p18_perfect(ctx, inst):
    cases = []
    for a, M in _focus(inst):
        for H, _ in READINGS:
            c = Case(f"M={a}, {H}")
            cases.append(c)
            if not _nonzero(c, ctx, M) or not _cm_ring(c, ctx, M):
                continue
            if not c.require("M Cohen-Macaulay", ctx.depth(M) == ctx.dim(M)):
                continue
            g = ctx.grade(M)
            R = free_module(inst.ring)
            if not c.require(f"{H}(Ext^g(M,R)) finite", ctx.fin(ctx.ext(M, R, g), H)):
                continue
            if c.ready:
                v = ctx.verdict(M, H)
                c.conclude(f"M is {H}-perfect", v.is_finite and v.value == g)
    return cases


def p19_gorenstein_ladder(ctx, inst):
    ring = inst.ring
    R = free_module(ring)
    c = Case("ring")
    if not _cm_ring(c, ctx, R):
        return [c]
    prof = ctx.profile(R)
    w = prof.omega
    k = residue_field(ring)
    items = {
        "Gorenstein": prof.is_gorenstein,
        "Gid(k) finite": ctx.fin(k, "gid"),
        "Gid(R) finite": ctx.fin(R, "gid"),
        "gd(ω) finite": ctx.fin(w, "gd"),
        "gd(ω*) finite": ctx.fin(dual_module(w), "gd"),
    }
    for label, v in items.items():
        if label != "Gorenstein":
            c.conclude(f"{label} iff Gorenstein", t_iff(v, items["Gorenstein"]))
    c.data = {k2: v for k2, v in items.items()}
    return [c]


def p20_dual_ext_finite(ctx, inst):
    cases = []
    for a, M in _focus(inst):
        for H, _ in READINGS:
            c = Case(f"M={a}, {H}")
            cases.append(c)
            if not _nonzero(c, ctx, M):
                continue
            R = free_module(inst.ring)
            if not c.require(f"{H}(Ext^i(M,R)) finite for i ≤ t",
                             _ext_range_fin(ctx, M, R, 0, ctx.t(M), H)):
                continue
            if c.ready:
                c.conclude(f"{H}(M) finite", ctx.fin(M, H))
    return cases


def p21_single_nonvanishing(ctx, inst):
    cases = []
    for a, M in _focus(inst):
        for H, _ in READINGS:
            c = Case(f"M={a}, {H}")
            cases.append(c)
            if not _nonzero(c, ctx, M):
                continue
            R = free_module(inst.ring)
            nz = [i for i in range(ctx.t(M) + 1) if not ctx.zero(ctx.ext(M, R, i))]
            if not c.require("exactly one nonzero Ext^h(M,R) with h ≤ t", len(nz) == 1):
                continue
            h = nz[0]
            if not c.require(f"{H}(Ext^h(M,R)) finite", ctx.fin(ctx.ext(M, R, h), H)):
                continue
            if c.ready:
                v = ctx.verdict(M, H)
                c.conclude(f"{H}(M) = h", v.is_finite and v.value == h)
                c.data = {"h": h}
    return cases


def p22_condition_bound(ctx, inst):
    # only n = 0 is checked: the depth condition is then vacuous
    cases = []
    for a, M in _focus(inst):
        for H, _ in READINGS:
            c = Case(f"M={a}, {H}, n=0")
            cases.append(c)
            if not _nonzero(c, ctx, M):
                continue
            R = free_module(inst.ring)
            t = ctx.t(M)
            if not c.require(f"{H}(Ext^i(M,R)) finite for i ≤ t",
                             _ext_range_fin(ctx, M, R, 0, t, H)):
                continue
            if c.ready:
                v = ctx.verdict(M, H)
                c.conclude(f"{H}(M) ≤ t", v.is_finite and v.value <= t)
    return cases


def p23_pd_transfer_general(ctx, inst):
    cases = []
    for a, M, b, N in _pairs(inst):
        R = free_module(inst.ring)
        c = Case(f"M={a}, N={b}, vanishing")
        cases.append(c)
        if _nonzero(c, ctx, M, N):
            t = ctx.t(M)
            if (c.require("pd(Ext^i(M,N)) finite for i ≤ t", _ext_range_fin(ctx, M, N, 0, t, "pd"))
                    and c.require("Ext^i(M,R) = 0 for t < i ≤ 2t+1",
                                  all(ctx.zero(ctx.ext(M, R, i)) for i in range(t + 1, 2 * t + 2)))
                    and c.ready):
                c.conclude("pd M finite iff pd N finite", t_iff(ctx.fin(M, "pd"), ctx.fin(N, "pd")))
        c = Case(f"M={a}, N={b}, gd finite")
        cases.append(c)
        if not _nonzero(c, ctx, M, N) or not c.require("gd M finite", ctx.fin(M, "gd")):
            continue
        top = ctx.t(M) - ctx.depth(M)
        if (c.require("pd(Ext^i(M,N)) finite for i ≤ t - depth M",
                      _ext_range_fin(ctx, M, N, 0, top, "pd")) and c.ready):
            c.conclude("pd M finite iff pd N finite", t_iff(ctx.fin(M, "pd"), ctx.fin(N, "pd")))
    return cases


def p24_open_question(ctx, inst):
    cases = []
    for a, M, b, N in _pairs(inst):
        for H, _ in READINGS:
            c = Case(f"M={a}, N={b}, {H}")
            cases.append(c)
            if not _nonzero(c, ctx, M, N) or not c.require("pd N finite", ctx.fin(N, "pd")):
                continue
            t = ctx.t(M)
            q1 = _ext_range_fin(ctx, M, N, 0, t, H)
            vanish = all(ctx.zero(ctx.ext(M, N, i)) for i in range(1, t + 1))
            q2 = t_and([ctx.fin(ctx.hom(M, N), H), vanish])
            v = ctx.verdict(M, H)
            c.recorded = True
            c.data = {"extFinite": q1, "homFiniteAndVanishing": q2,
                      "conclusion": v.to_json(), "ringCM": ctx.profile(M).is_cm}
    return cases


def _gorenstein_from(which):
    def run(ctx, inst):
        cases = []
        for a, M in _focus(inst):
            c = Case(f"M={a}")
            cases.append(c)
            if not _nonzero(c, ctx, M):
                continue
            if which == "id" and not _cm_ring(c, ctx, M):
                continue
            if not c.require(f"{which} M finite", ctx.fin(M, which)):
                continue
            top = ctx.t(M) - ctx.depth(M)
            if not c.require("Gid(Ext^i(M,M)) finite for i ≤ t - depth M",
                             _ext_range_fin(ctx, M, M, 0, top, "gid")):
                continue
            if c.ready:
                c.conclude("ring Gorenstein", ctx.is_gorenstein(M))
        return cases
    return run


def p27_omega_hom_gorenstein(ctx, inst):
    cases = []
    for a, N in _focus(inst):
        for A, B in (("pd", "gd"), ("gd", "pd")):
            c = Case(f"N={a}, {A}(N) & {B}(Hom(ω,N))")
            cases.append(c)
            if not _nonzero(c, ctx, N) or not _cm_ring(c, ctx, N):
                continue
            w = ctx.profile(N).omega
            if (c.require(f"{A}(N) finite", ctx.fin(N, A))
                    and c.require(f"{B}(Hom(ω,N)) finite", ctx.fin(ctx.hom(w, N), B)) and c.ready):
                c.conclude("ring Gorenstein", ctx.is_gorenstein(N))
    return cases


_CATALOG = (
    Probe("P1", "Koszul quotient", "M = R/(x) for an R-regular sequence of linear forms and "
          "xN = 0 give Ext^i(M,N) = N^C(n,i)", p1_koszul),
    Probe("P2", "periodic resolution", "an exact pair of linear zero divisors gives a 2-periodic "
          "resolution of R/(a) and infinite pd", p2_periodic),
    Probe("P3", "spherical construction", "dualizing a truncated resolution of M of grade n>0 "
          "yields N with Ext^i(N,R)=0 for 0<i<n, Ext^n(N,R) = M and pd N ≤ n", p3_spherical),
    Probe("P4", "depth formula", "finite H-dim(M) plus depth M equals depth R", p4_ab_formula),
    Probe("P5", "syzygy shift", "H-dim(syz^n M) = max(H-dim(M) - n, 0)", p5_syzygy_shift),
    Probe("P6", "Ext finiteness passes to the target", "pd M finite and finite H-dim of "
          "Ext^i(M,N) for i ≤ pd M force finite H-dim(N)", p6_ext_forces_target),
    Probe("P7", "injective target", "over a CM ring with id N finite, finiteness of Ext^i(M,N) "
          "for i ≤ t - depth M passes to the injective dual dimension of M", p7_injective_target),
    Probe("P8", "deficiency modules", "finite dimensions of all K^i(M) pass to the dual "
          "dimension of M", p8_deficiency),
    Probe("P9", "canonical module of a CM module", "H-dim K(M) finite iff Hid M finite, and "
          "symmetrically", p9_canonical_swap),
    Probe("P10", "Hom from ω", "H-dim Hom(ω,M) finite iff Hid M finite; H-dim M finite iff "
          "Hid(M⊗ω) finite", p10_omega_hom),
    Probe("P11", "base change of Ext", "N and Ext^i(M,N) in the Auslander class of C give "
          "Ext^i(M,N)⊗C = Ext^i(M,N⊗C) naturally", p11_base_change),
    Probe("P12", "Ext duality through ω", "with H-dim N finite, H-dim Ext^i(M,N) finite for i ≤ n "
          "iff Hid Ext^i(M,N⊗ω) finite for i ≤ n, with natural isomorphisms", p12_omega_duality),
    Probe("P13", "pd transfer over CM rings", "pd Ext^i(M,N) finite for i ≤ t - depth M gives "
          "pd M finite iff pd N finite", p13_pd_transfer),
    Probe("P14", "vanishing forces H-dim zero", "pd N finite, H-dim Hom(M,N) finite and "
          "Ext^i(M,N)=0 for 1 ≤ i ≤ t - depth M give H-dim M = 0", p14_vanishing_forces_zero),
    Probe("P15", "ω-twisted duals", "gd Ext^i(M,R) finite gives Ext^i(M,R)⊗ω = Ext^i(M,ω), "
          "Tor_1(Tr syz^i M, ω) = 0 and μ(Ext^i(M,ω)) = μ(Ext^i(M,R))·type R", p15_omega_generators),
    Probe("P16", "dimensions of duals and type", "finite H-dim of Ext^i(M,R) on [t-s, t-r] "
          "bounds dim Ext^i(M,R) and gives type M = μ(Ext^{t-r}(M,R))·type R",
          p16_dual_dims_and_type),
    Probe("P17", "type over Gorenstein rings", "type M = μ(Ext^{gd M}(M,R))", p17_gorenstein_type),
    Probe("P18", "perfection criterion", "a CM module of grade g with H-dim Ext^g(M,R) finite "
          "is H-perfect", p18_perfect),
    Probe("P19", "Gorenstein ladder", "Gorenstein, Gid k, Gid R, gd ω and gd ω* finiteness all "
          "agree", p19_gorenstein_ladder),
    Probe("P20", "dual Ext finiteness", "H-dim Ext^i(M,R) finite for i ≤ t forces H-dim M finite",
          p20_dual_ext_finite),
    Probe("P21", "single nonvanishing dual", "one nonzero Ext^h(M,R) for h ≤ t with finite "
          "H-dim forces H-dim M = h", p21_single_nonvanishing),
    Probe("P22", "bound from dual Ext", "H-dim Ext^i(M,R) finite for i ≤ t - n and the depth "
          "condition S_n give H-dim M ≤ t - n (n = 0 checked)", p22_condition_bound),
    Probe("P23", "pd transfer without CM", "pd Ext^i(M,N) finite on a range plus either "
          "dual vanishing or gd M finite gives pd M finite iff pd N finite",
          p23_pd_transfer_general),
    Probe("P24", "open question record", "records pd N finite with finite H-dim of Ext^i(M,N) "
          "for i ≤ t against H-dim M; never adjudicated", p24_open_question),
    Probe("P25", "Gorenstein from pd", "pd M finite and Gid Ext^i(M,M) finite for "
          "i ≤ t - depth M force a Gorenstein ring", _gorenstein_from("pd")),
    Probe("P26", "Gorenstein from id", "over a CM ring, id M finite and Gid Ext^i(M,M) finite "
          "for i ≤ t - depth M force a Gorenstein ring", _gorenstein_from("id")),
    Probe("P27", "Gorenstein from Hom(ω,N)", "pd N and gd Hom(ω,N) finite, or gd N and "
          "pd Hom(ω,N) finite, force a Gorenstein ring", p27_omega_hom_gorenstein),
)


def probe_catalog() -> tuple[Probe, ...]:
    return _CATALOG


def get_probe(pid: str) -> Probe:
    for p in _CATALOG:
        if p.id == pid:
            return p
    raise KeyError(f"unknown probe {pid!r}")
