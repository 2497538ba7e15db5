"""Runs probes over instances and collects a deterministic report."""
from __future__ import annotations

import json
import os
import time
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .. import __version__
from .._runtime import DeadlineExceeded, deadline
from ..instancefile import Instance, parse_instance, serialize_instance
from ..invariants import UnsupportedError
from ..kernels import BACKEND
from .core import INCONCLUSIVE, OUTCOMES, REFUTED, Context, ProbeOutcome
from .probes import Probe, get_probe


@dataclass(frozen=True)
class Bounds:
    gdim_bound: int = 4
    max_i: int = 3
    cell_seconds: float = 60.0


@dataclass
class Cell:
    probe: str
    instance: str
    outcome: str
    detail: dict
    millis: int

    def to_json(self) -> dict:
        return {"probe": self.probe, "instance": self.instance, "outcome": self.outcome,
                "detail": self.detail, "millis": self.millis}


@dataclass
class Report:
    suite: str
    cells: list = field(default_factory=list)

    @property
    def totals(self) -> dict:
        out = {k: 0 for k in OUTCOMES}
        for c in self.cells:
            out[c.outcome] += 1
        return out

    @property
    def refuted(self) -> list:
        return [c for c in self.cells if c.outcome == REFUTED]

    def to_json(self) -> dict:
        return {"suite": self.suite, "cells": [c.to_json() for c in self.cells],
                "totals": self.totals, "engineVersion": engine_version()}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True, default=_jsonable)


def _jsonable(o):
    if isinstance(o, (set, frozenset, tuple)):
        return list(o)
    return str(o)


def engine_version() -> str:
    return f"homolab {__version__} ({BACKEND})"


def run_cell(probe: Probe, inst: Instance, ctx: Context, seconds: float | None) -> Cell:
    t0 = time.perf_counter()
    try:
        with deadline(seconds):
            out = probe.evaluate(ctx, inst)
    except DeadlineExceeded:
        out = ProbeOutcome(INCONCLUSIVE, "timeout")
    except UnsupportedError as e:
        out = ProbeOutcome(INCONCLUSIVE, f"unsupported: {e}")
    except Exception as e:  # an engine failure is a finding, not a crash
        out = ProbeOutcome(REFUTED, f"exception: {type(e).__name__}: {e}",
                           payload={"traceback": traceback.format_exc(limit=6)})
    if out.kind == REFUTED:
        case = next((c for c in out.cases if c.get("outcome") == REFUTED), None)
        out.witness = {"instance": serialize_instance(inst),
                       "case": case["case"] if case else None,
                       "assertion": out.reason}
    ms = int((time.perf_counter() - t0) * 1000)
    return Cell(probe.id, inst.name, out.kind, out.to_detail(), ms)


def _worker(args):
    pids, name, text, focus, bounds = args
    inst = parse_instance(text, name=name)
    inst.focus = focus
    ctx = Context(bounds.gdim_bound, bounds.max_i)
    return [run_cell(get_probe(pid), inst, ctx, bounds.cell_seconds) for pid in pids]


def default_workers() -> int:
    cap = os.environ.get("HOMOLAB_THREADS")
    n = os.cpu_count() or 1
    if cap:
        n = min(n, max(1, int(cap)))
    return n


def run_suite(probes, instances, bounds: Bounds = Bounds(), workers: int | None = None,
              suite: str = "all", progress=None) -> Report:
    """Evaluate every probe on every instance.

    Cells are ordered by probe, then by instance, whatever the worker count.
    With more than one worker, instances are shipped as text to a process
    pool; the result does not depend on scheduling.
    """
    probes = list(probes)
    instances = list(instances)
    workers = default_workers() if workers is None else max(1, workers)
    grid: dict = {}
    if workers == 1 or len(instances) < 2:
        ctx = Context(bounds.gdim_bound, bounds.max_i)
        for inst in instances:
            for pr in probes:
                grid[(pr.id, inst.name)] = run_cell(pr, inst, ctx, bounds.cell_seconds)
                if progress:
                    progress(grid[(pr.id, inst.name)])
    else:
        jobs = [([p.id for p in probes], inst.name, serialize_instance(inst), inst.focus, bounds)
                for inst in instances]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for cells in ex.map(_worker, jobs):
                for c in cells:
                    grid[(c.probe, c.instance)] = c
                    if progress:
                        progress(c)
    report = Report(suite)
    for pr in probes:
        for inst in instances:
            report.cells.append(grid[(pr.id, inst.name)])
    return report
