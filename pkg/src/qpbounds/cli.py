"""Command line front end.

Verbs: eval, roots, bounds, bench, verify.  Exit codes: 0 on success,
1 when a computation fails its own guarantees (soundness violation,
no convergence, inconsistent oracle), 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import best_bound, evaluate_all
from .errors import (NoConvergence, OracleInconsistent, QPBoundsError,
                     SoundnessViolation, SpecInvalid)
from .families import FamilySpec
from .harness import SOUNDNESS_SLACK, run_bench, run_verify
from .qpolynomial import QPolynomial
from .quaternion import Quaternion
from .roots import RESOLVE_TOL, all_zeros


def _load_polynomial(path) -> QPolynomial:
    with open(path, "r", encoding="utf-8") as fh:
        return QPolynomial.from_json(json.load(fh))


def _parse_point(text) -> Quaternion:
    try:
        return Quaternion(float(text))
    except ValueError:
        return Quaternion.from_json(json.loads(text))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qpbounds",
        description="Enclosing balls for the zeros of quaternion polynomials, "
                    "checked against an exact root oracle.")
    sub = ap.add_subparsers(dest="verb", required=True)

    ev = sub.add_parser("eval", help="evaluate a polynomial at a point")
    ev.add_argument("file", help="polynomial JSON file")
    ev.add_argument("point", help="real number or [w, x, y, z] JSON array")

    rt = sub.add_parser("roots", help="compute the full zero set")
    rt.add_argument("file", help="polynomial JSON file")

    bd = sub.add_parser("bounds", help="evaluate every bound at one rho")
    bd.add_argument("file", help="polynomial JSON file")
    bd.add_argument("--rho", type=float, default=1.0)
    bd.add_argument("--all-params", action="store_true",
                    help="include parameters and hypothesis details")

    bn = sub.add_parser("bench", help="seeded family sweep against the oracle")
    bn.add_argument("--family", required=True,
                    choices=[f.value for f in FamilySpec])
    bn.add_argument("--degree", type=int, required=True)
    bn.add_argument("--count", type=int, required=True)
    bn.add_argument("--seed", type=int, required=True)
    bn.add_argument("--out", required=True, help="CSV output path")
    bn.add_argument("--rho", type=float, default=1.0)
    bn.add_argument("--oracle-tol", type=float, default=RESOLVE_TOL)
    bn.add_argument("--soundness-slack", type=float, default=SOUNDNESS_SLACK)

    sub.add_parser("verify", help="run the built-in self checks")
    return ap


def _cmd_eval(args) -> int:
    p = _load_polynomial(args.file)
    value = p.evaluate(_parse_point(args.point))
    print(json.dumps({"value": value.to_json(), "modulus": value.modulus()},
                     indent=2))
    return 0


def _cmd_roots(args) -> int:
    p = _load_polynomial(args.file)
    print(json.dumps(all_zeros(p).to_json(), indent=2))
    return 0


def _cmd_bounds(args) -> int:
    p = _load_polynomial(args.file)
    reports = evaluate_all(p, args.rho, include_advisory=True)
    if args.all_params:
        shown = [r.to_json() for r in reports]
    else:
        shown = [{"name": r.name, "applicable": r.applicable, "radius": r.radius}
                 for r in reports]
    best = best_bound(p, (args.rho,))
    print(json.dumps({"rho": args.rho, "best": best.to_json(),
                      "reports": shown}, indent=2))
    return 0


def _cmd_bench(args) -> int:
    summary = run_bench(FamilySpec(args.family), args.degree, args.count,
                        args.seed, args.out, rho=args.rho,
                        oracle_tol=args.oracle_tol,
                        soundness_slack=args.soundness_slack)
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"eval": _cmd_eval, "roots": _cmd_roots, "bounds": _cmd_bounds,
                "bench": _cmd_bench, "verify": lambda a: run_verify()}
    try:
        return handlers[args.verb](args)
    except (SoundnessViolation, NoConvergence, OracleInconsistent,
            SpecInvalid) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except (QPBoundsError, ValueError, OSError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
