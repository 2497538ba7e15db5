import json
import time

import pytest

from homolab._runtime import check_deadline
from homolab.instancefile import parse_instance, serialize_instance
from homolab.verify import (INCONCLUSIVE, PREMISE_FAILED, REFUTED, VERIFIED, Bounds, Case,
                            Context, Probe, RandomParams, catalog_instances, get_probe,
                            probe_catalog, random_instance, run_suite)
from homolab.verify.core import fold, t_and, t_iff, t_implies
from homolab.verify.instances import CATALOG_RINGS


def test_three_valued_logic():
    assert t_and([True, None]) is None and t_and([None, False]) is False
    assert t_iff(True, None) is None and t_iff(False, False) is True
    assert t_implies(False, None) is True and t_implies(True, None) is None
    assert t_implies(True, False) is False


def test_case_outcomes():
    c = Case("a")
    c.require("p", True)
    c.conclude("q", True)
    assert c.outcome()[0] == VERIFIED
    c = Case("b")
    c.require("p", None)
    c.conclude("q", False)
    assert c.outcome() == (INCONCLUSIVE, "unknown premise: p")
    c = Case("c")
    c.require("p", False)
    assert c.outcome()[0] == PREMISE_FAILED
    c = Case("d")
    c.conclude("q", True, numeric_only=True)
    assert c.outcome() == (INCONCLUSIVE, "numerical-only")
    c = Case("e")
    c.conclude("q", False)
    assert fold([Case("x"), c]).kind == REFUTED
    assert fold([]).kind == PREMISE_FAILED


def test_catalog_shape():
    probes = probe_catalog()
    assert len(probes) >= 24
    assert len({p.id for p in probes}) == len(probes)
    insts = catalog_instances()
    assert len(insts) >= 30
    assert {i.name.split(":")[0] for i in insts} == set(CATALOG_RINGS)


def test_random_instances_deterministic_and_varied():
    a = [serialize_instance(random_instance(s)) for s in range(100)]
    b = [serialize_instance(random_instance(s)) for s in range(100)]
    assert a == b
    rings = {t.split("module")[0] for t in a}
    assert len(rings) >= 30
    for s in range(20):
        inst = random_instance(s)
        for M in inst.modules.values():
            assert M.ring is inst.ring


def test_random_params_checked():
    with pytest.raises(ValueError):
        RandomParams(vars=0).check()


def _cell(pid, name):
    inst = next(i for i in catalog_instances() if i.name == name)
    rep = run_suite([get_probe(pid)], [inst], Bounds())
    return rep.cells[0]


def test_periodic_probe_on_hypersurface():
    c = _cell("P2", "hyper-xy:R/(x)")
    assert c.outcome == VERIFIED
    data = c.detail["cases"][0]["data"]
    assert data["betti"] == [1] * 11


def test_koszul_probe_over_polynomial_ring():
    c = _cell("P1", "S3:k")
    assert c.outcome == VERIFIED
    datas = [x["data"] for x in c.detail["cases"] if x["outcome"] == VERIFIED]
    assert {"n": 3, "extGens": [1, 3, 3, 1]} in datas


def test_gorenstein_ladder_on_every_catalog_ring():
    for inst in catalog_instances():
        if inst.name.endswith(":R") and not inst.name.startswith("noncm"):
            assert _cell("P19", inst.name).outcome == VERIFIED


def test_open_question_is_never_adjudicated():
    c = _cell("P24", "S2:k")
    assert c.outcome == INCONCLUSIVE


def test_empty_selection():
    rep = run_suite([], [], Bounds())
    assert rep.cells == [] and set(rep.totals.values()) == {0}


def _boom(ctx, inst):
    raise RuntimeError("engine failure")


def _slow(ctx, inst):
    while True:
        time.sleep(0.01)
        check_deadline()


def _false(ctx, inst):
    c = Case("always")
    c.conclude("one equals two", False)
    return [c]


def test_failures_become_witnesses():
    inst = catalog_instances()[0]
    probes = [Probe("X1", "boom", "", _boom), Probe("X2", "slow", "", _slow),
              Probe("X3", "false", "", _false)]
    rep = run_suite(probes, [inst], Bounds(cell_seconds=0.2))
    kinds = [c.outcome for c in rep.cells]
    assert kinds == [REFUTED, INCONCLUSIVE, REFUTED]
    assert rep.cells[1].detail["reason"] == "timeout"
    w = rep.cells[2].detail["witness"]
    assert w["case"] == "always" and w["assertion"] == "one equals two"
    replay = parse_instance(w["instance"])
    assert replay.same_as(inst)


def test_report_schema_and_determinism():
    insts = catalog_instances()[:6] + [random_instance(3)]
    probes = [get_probe(p) for p in ("P4", "P5", "P19", "P21")]
    a = run_suite(probes, insts, Bounds())
    b = run_suite(probes, insts, Bounds(), workers=2)
    ja, jb = json.loads(a.dumps()), json.loads(b.dumps())
    assert set(ja) == {"suite", "cells", "totals", "engineVersion"}
    strip = lambda j: [(c["probe"], c["instance"], c["outcome"]) for c in j["cells"]]
    assert strip(ja) == strip(jb)
    assert [c["probe"] for c in ja["cells"]] == [p.id for p in probes for _ in insts]
    for c in ja["cells"]:
        assert set(c) == {"probe", "instance", "outcome", "detail", "millis"}
        assert isinstance(c["millis"], int)
    assert sum(ja["totals"].values()) == len(ja["cells"])


def test_context_memo_is_identity_safe():
    ctx = Context()
    inst = random_instance(1)
    M = inst.modules["M"]
    assert ctx.depth(M) == ctx.depth(M)
    assert ctx.fin(M, "pd") in (True, False)
