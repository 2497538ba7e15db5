"""Command-line entry point: ``homolab <command> ...``.

Exit codes: 0 success, 1 usage or input errors, 2 when ``verify`` finds a
Refuted cell.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .instancefile import Instance, load_instance, serialize_instance
from .invariants import (UnsupportedError, ZeroModuleError, deficiency, depth, dimension,
                         g_dim, g_inj_dim, grade, inj_dim, is_zero, module_type, proj_dim)
from .modules import ModuleError
from .polynomials import ParseError
from .resolutions import ext_module, resolution

WHICH = ("pd", "id", "gdim", "gid", "depth", "dim", "grade", "type", "betti")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _module(args):
    inst = load_instance(args.file)
    return inst, inst.module(args.module)


def _module_json(M) -> dict:
    return {"generatorDegrees": list(M.gen_degrees), "relations": len(M.relations),
            "hilbert": M.hilbert_vector(min(M.gen_degrees, default=0),
                                        min(M.gen_degrees, default=0) + 6) if M.ngens else []}


def cmd_invariant(args, out):
    _, M = _module(args)
    wanted = [w.strip() for w in args.which.split(",") if w.strip()]
    for w in wanted:
        if w not in WHICH:
            raise UsageError(f"unknown invariant {w!r}; choose from {','.join(WHICH)}")
    result = {}
    zero = is_zero(M)
    for w in wanted:
        if zero and w != "betti":
            result[w] = None
            continue
        try:
            if w == "pd":
                result[w] = proj_dim(M).to_json()
            elif w == "id":
                result[w] = inj_dim(M).to_json()
            elif w == "gdim":
                result[w] = g_dim(M, args.bound).to_json()
            elif w == "gid":
                result[w] = g_inj_dim(M, args.bound).to_json()
            elif w == "depth":
                result[w] = depth(M)
            elif w == "dim":
                result[w] = dimension(M)
            elif w == "grade":
                result[w] = grade(M)
            elif w == "type":
                result[w] = module_type(M)
            elif w == "betti":
                res = resolution(M).ensure(args.length)
                result[w] = json.loads(res.betti(args.length).to_json())
        except UnsupportedError as e:
            result[w] = {"status": "unsupported", "reason": str(e)}
    if args.json:
        print(_dump(result), file=out)
    else:
        for k, v in result.items():
            print(f"{k}: {json.dumps(v, sort_keys=True)}", file=out)
    return 0


def cmd_ext(args, out):
    inst = load_instance(args.file)
    M, N = inst.module(args.M), inst.module(args.N)
    rows = []
    for i in range(args.max_i + 1):
        E = ext_module(M, N, i)
        rows.append({"i": i, "generators": E.ngens, **_module_json(E)})
    if args.json:
        print(_dump({"ext": rows}), file=out)
    else:
        for r in rows:
            print(f"Ext^{r['i']}: {r['generators']} generators in degrees "
                  f"{r['generatorDegrees']}, hilbert {r['hilbert']}", file=out)
    return 0


def cmd_resolve(args, out):
    _, M = _module(args)
    res = resolution(M).ensure(args.length)
    table = res.betti(args.length)
    if args.json:
        print(_dump({"betti": json.loads(table.to_json()), "complete": res.complete,
                     "projectiveDimension": res.projective_dimension()}), file=out)
    else:
        print(table, file=out)
        if res.complete:
            print(f"resolution terminates: pd = {res.projective_dimension()}", file=out)
    return 0


def cmd_deficiency(args, out):
    _, M = _module(args)
    rows = []
    for i in range(M.ring.nvars + 1):
        K = deficiency(M, i)
        rows.append({"i": i, "zero": K.ngens == 0, **_module_json(K)})
    if args.json:
        print(_dump({"deficiency": rows}), file=out)
    else:
        for r in rows:
            state = "0" if r["zero"] else f"gens in degrees {r['generatorDegrees']}"
            print(f"K^{r['i']}: {state}", file=out)
    return 0


def cmd_spherical(args, out):
    from .dualities import spherical_construction
    inst, M = _module(args)
    N, rep = spherical_construction(M)
    text = serialize_instance(Instance("spherical", inst.ring, {"N": N}))
    if args.json:
        print(_dump({"report": rep.to_json(), "instance": text}), file=out)
    else:
        print(_dump(rep.to_json()), file=out)
        print(text, end="", file=out)
    return 0


def cmd_verify(args, out):
    from .verify import (Bounds, catalog_instances, get_probe, probe_catalog, random_instance,
                         run_suite)
    from .verify.instances import RandomParams
    if args.suite == "all":
        probes = list(probe_catalog())
    else:
        try:
            probes = [get_probe(p.strip()) for p in args.suite.split(",") if p.strip()]
        except KeyError as e:
            raise UsageError(str(e.args[0])) from None
    if args.instances:
        d = Path(args.instances)
        if not d.is_dir():
            raise UsageError(f"{d} is not a directory")
        instances = [load_instance(f) for f in sorted(d.glob("*.inst"))]
    else:
        instances = catalog_instances()
    if args.random:
        params = RandomParams(p=args.p)
        instances += [random_instance(args.seed + k, params) for k in range(args.random)]
    bounds = Bounds(gdim_bound=args.bound, cell_seconds=args.timeout)
    report = run_suite(probes, instances, bounds, workers=args.workers, suite=args.suite)
    text = report.dumps()
    if args.json:
        Path(args.json).write_text(text + "\n", encoding="utf-8")
    totals = report.totals
    print(" ".join(f"{k}={totals[k]}" for k in sorted(totals)), file=out)
    for c in report.refuted:
        print(f"REFUTED {c.probe} on {c.instance}: {c.detail.get('reason', '')}", file=out)
    return 2 if report.refuted else 0


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="homolab", description="graded homological algebra toolkit")
    ap.add_argument("--version", action="version", version=f"homolab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariant", help="homological invariants of one module")
    p.add_argument("file")
    p.add_argument("--module", required=True)
    p.add_argument("--which", default="pd,id,gdim,gid,depth,dim,grade,type")
    p.add_argument("--bound", type=int, default=6, help="G-dimension search bound")
    p.add_argument("--length", type=int, default=5, help="resolution length for betti")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_invariant)

    p = sub.add_parser("ext", help="Ext^i(M, N) for i up to --max-i")
    p.add_argument("file")
    p.add_argument("-M", required=True)
    p.add_argument("-N", required=True)
    p.add_argument("--max-i", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_ext)

    p = sub.add_parser("resolve", help="minimal free resolution and Betti table")
    p.add_argument("file")
    p.add_argument("--module", required=True)
    p.add_argument("--length", type=int, default=5)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_resolve)

    p = sub.add_parser("deficiency", help="deficiency modules K^i(M)")
    p.add_argument("file")
    p.add_argument("--module", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_deficiency)

    p = sub.add_parser("construct-spherical", help="module N with Ext^n(N,R) = M, n = grade M")
    p.add_argument("file")
    p.add_argument("--module", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_spherical)

    p = sub.add_parser("verify", help="run probes over instances")
    p.add_argument("--suite", default="all", help="'all' or comma-separated probe ids")
    p.add_argument("--instances", help="directory of *.inst files (default: built-in catalog)")
    p.add_argument("--random", type=int, default=0, help="add N random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=int, default=7, help="characteristic for random instances")
    p.add_argument("--bound", type=int, default=4, help="G-dimension search bound")
    p.add_argument("--timeout", type=float, default=60.0, help="seconds per cell")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--json", metavar="OUT", help="write the report here")
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        if getattr(args, "length", 0) is not None and getattr(args, "length", 0) < 0:
            raise UsageError("--length must be non-negative")
        return args.fn(args, out)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return 1
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 1
    except (OSError, KeyError, ZeroModuleError, ModuleError, ValueError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return 1


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
