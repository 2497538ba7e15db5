"""Three-valued cases, probe outcomes and a memoizing evaluation context."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..invariants import (UnsupportedError, Verdict, depth, dimension, g_dim, g_inj_dim, grade,
                          inj_dim, is_zero, module_type, proj_dim, ring_profile)
from ..modules import GradedModule, hom_module, minimalize, tensor
from ..resolutions import ext_module

VERIFIED = "Verified"
PREMISE_FAILED = "PremiseFailed"
INCONCLUSIVE = "Inconclusive"
REFUTED = "Refuted"
OUTCOMES = (VERIFIED, PREMISE_FAILED, INCONCLUSIVE, REFUTED)
# when several cases are folded into one cell, the strongest signal wins
_RANK = {REFUTED: 3, VERIFIED: 2, INCONCLUSIVE: 1, PREMISE_FAILED: 0}


def t_and(values) -> bool | None:
    """Kleene conjunction over True/False/None."""
    out = True
    for v in values:
        if v is False:
            return False
        if v is None:
            out = None
    return out


def t_iff(a, b) -> bool | None:
    if a is None or b is None:
        return None
    return a == b


def t_implies(a, b) -> bool | None:
    if a is False or b is True:
        return True
    if a is None or b is None:
        return None
    return False


@dataclass
class ProbeOutcome:
    kind: str
    reason: str = ""
    witness: dict | None = None
    cases: list = field(default_factory=list)
    payload: dict = field(default_factory=dict)

    def to_detail(self) -> dict:
        out = {"cases": self.cases}
        if self.reason:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = self.witness
        if self.payload:
            out["payload"] = self.payload
        return out


class Case:
    """One binding of a probe's free variables (module choices and a reading).

    Premises are recorded in order; conclusions are only meaningful once
    every premise is True (check ``ready`` before computing them).
    """

    def __init__(self, label: str):
        self.label = label
        self.premises: list = []
        self.conclusions: list = []
        self.numeric_only: list = []
        self.data: dict = {}
        self.recorded = False

    def require(self, label: str, value) -> bool:
        """Record a premise; returns False when the case is already dead."""
        self.premises.append((label, value))
        return value is not False

    @property
    def ready(self) -> bool:
        return all(v is True for _, v in self.premises)

    def conclude(self, label: str, value, numeric_only: bool = False) -> None:
        self.conclusions.append((label, value))
        if numeric_only:
            self.numeric_only.append(label)

    def outcome(self) -> tuple[str, str]:
        for label, v in self.premises:
            if v is False:
                return PREMISE_FAILED, label
        for label, v in self.premises:
            if v is None:
                return INCONCLUSIVE, f"unknown premise: {label}"
        if self.recorded:
            return INCONCLUSIVE, "recorded"
        for label, v in self.conclusions:
            if v is False:
                return REFUTED, label
        for label, v in self.conclusions:
            if v is None:
                return INCONCLUSIVE, f"unknown conclusion: {label}"
        if self.numeric_only:
            return INCONCLUSIVE, "numerical-only"
        if not self.conclusions:
            return INCONCLUSIVE, "no conclusion evaluated"
        return VERIFIED, ""

    def to_json(self) -> dict:
        kind, reason = self.outcome()
        out = {"case": self.label, "outcome": kind}
        if reason:
            out["reason"] = reason
        if self.data:
            out["data"] = self.data
        return out


def fold(cases: list[Case]) -> ProbeOutcome:
    if not cases:
        return ProbeOutcome(PREMISE_FAILED, "no applicable binding")
    best = None
    for c in cases:
        kind, reason = c.outcome()
        if best is None or _RANK[kind] > _RANK[best[0]]:
            best = (kind, reason, c)
    kind, reason, c = best
    return ProbeOutcome(kind, reason if kind != VERIFIED else "",
                        cases=[x.to_json() for x in cases])


class Context:
    """Bounds plus memoized verdicts; values are keyed by object identity."""

    def __init__(self, gdim_bound: int = 4, max_i: int = 3):
        self.gdim_bound = gdim_bound
        self.max_i = max_i
        self._memo: dict = {}

    def memo(self, tag: str, objs: tuple, fn: Callable):
        key = (tag,) + tuple(id(o) for o in objs)
        hit = self._memo.get(key)
        if hit is not None and all(a is b for a, b in zip(hit[0], objs)):
            return hit[1]
        val = fn()
        self._memo[key] = (objs, val)
        return val

    # -- basic invariants ------------------------------------------------------------
    def zero(self, M: GradedModule) -> bool:
        return self.memo("zero", (M,), lambda: is_zero(M))

    def profile(self, M: GradedModule):
        return ring_profile(M.ring)

    def t(self, M: GradedModule) -> int:
        return self.profile(M).depth

    def depth(self, M):
        return self.memo("depth", (M,), lambda: depth(M))

    def dim(self, M):
        return self.memo("dim", (M,), lambda: dimension(M))

    def grade(self, M):
        return self.memo("grade", (M,), lambda: grade(M))

    def mu(self, M) -> int:
        return minimalize(M).ngens

    def type(self, M) -> int:
        return self.memo("type", (M,), lambda: module_type(M))

    def ext(self, M, N, i) -> GradedModule:
        return ext_module(M, N, i)

    def hom(self, M, N) -> GradedModule:
        return self.memo("hom", (M, N), lambda: hom_module(M, N))

    def tensor(self, M, N) -> GradedModule:
        return self.memo("tensor", (M, N), lambda: tensor(M, N))

    # -- verdicts --------------------------------------------------------------------
    def verdict(self, M: GradedModule, which: str) -> Verdict | None:
        """Verdict for pd/gd/id/gid; None for the zero module; raises UnsupportedError."""
        if self.zero(M):
            return None

        def run():
            if which == "pd":
                return proj_dim(M)
            if which == "gd":
                return g_dim(M, self.gdim_bound)
            if which == "id":
                return inj_dim(M)
            if which == "gid":
                return g_inj_dim(M, self.gdim_bound)
            raise ValueError(which)
        return self.memo("verdict-" + which, (M,), run)

    def fin(self, M: GradedModule, which: str) -> bool | None:
        """Is the dimension finite?  The zero module counts as finite (-∞)."""
        if self.zero(M):
            return True
        try:
            v = self.verdict(M, which)
        except UnsupportedError:
            return None
        return v.finiteness()

    def value(self, M: GradedModule, which: str) -> int | None:
        if self.zero(M):
            return None
        v = self.verdict(M, which)
        return v.value if v.is_finite else None

    def is_gorenstein(self, M) -> bool:
        return self.profile(M).is_gorenstein


# H-dim readings and their injective counterparts
READINGS = (("pd", "id"), ("gd", "gid"))
