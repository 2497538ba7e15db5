import importlib
import os
import random
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homolab import kernels
from homolab.groebner import Engine
from homolab.kernels import _pure
from homolab.polynomials import PolyRing

from helpers import random_form, random_ideal

S = PolyRing(32003, ["x", "y", "z"])

try:
    _compiled = importlib.import_module("homolab.kernels._ckernels")
except ImportError:
    _compiled = None


def _engine(seed):
    rng = random.Random(seed)
    eng = Engine(S, [0], ntracked=3)
    for i, g in enumerate(random_ideal(rng, 3, S.p, count=3)):
        eng.add({(0, m): c for m, c in g.items()}, index=i)
    eng.run(6)
    return eng, rng


@pytest.mark.skipif(_compiled is None, reason="compiled kernel not built")
@given(st.integers(0, 10**6), st.booleans(), st.booleans())
def test_backends_agree(seed, full, track):
    eng, rng = _engine(seed)
    d = rng.randint(2, 6)
    f = eng.pack({(0, m): c for m, c in random_form(rng, 3, d, S.p, 6).items()})
    a = _pure.reduce_packed(dict(f), {} if track else None, eng, full)
    b = _compiled.reduce_packed(dict(f), {} if track else None, eng, full)
    assert a == b


def test_backend_selection_honours_env():
    code = "import homolab.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, HOMOLAB_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "pure"
    assert kernels.BACKEND in ("pure", "compiled")
