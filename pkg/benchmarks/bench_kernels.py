"""Compare the compiled and pure-Python reduction kernels.

Each backend runs in its own interpreter (the backend is fixed at import),
on the same workload; the script checks that both produce identical
results and prints wall times.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, sys, time
from homolab.kernels import BACKEND
from homolab.rings import QuotientRing
from homolab.modules import GradedModule
from homolab.resolutions import resolution
from homolab.verify import random_instance

t0 = time.perf_counter()
out = []
R = QuotientRing.polynomial(32003, ["x", "y", "z", "w"],
                           ["x^2 + 3*y*z - w^2", "x*y - 5*z*w + y^2", "x*z + 2*y*w - z^2"])
k = GradedModule.residue_field(R)
out.append(resolution(k).ensure(7).betti(7).to_json())
for s in range(12):
    inst = random_instance(1000 + s)
    out.append(resolution(inst.modules["M"]).ensure(4).betti(4).to_json())
print(json.dumps({"backend": BACKEND, "seconds": time.perf_counter() - t0, "result": out}))
"""


def run(pure: bool) -> dict:
    env = dict(os.environ)
    env.pop("HOMOLAB_PURE", None)
    if pure:
        env["HOMOLAB_PURE"] = "1"
    proc = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True,
                          text=True, check=True)
    return json.loads(proc.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    best = {}
    results = {}
    for pure in (True, False):
        for _ in range(args.repeat):
            r = run(pure)
            b = r["backend"]
            best[b] = min(best.get(b, float("inf")), r["seconds"])
            results[b] = r["result"]
    for b, s in sorted(best.items()):
        print(f"{b:>9}: {s:.3f} s (best of {args.repeat})")
    if "compiled" not in best:
        print("compiled kernel not available; run `python3 setup.py build_ext --inplace`")
        return 0
    if results["compiled"] != results["pure"]:
        print("MISMATCH between backends")
        return 1
    print(f"results identical; speedup {best['pure'] / best['compiled']:.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
