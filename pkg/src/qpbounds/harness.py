"""Benchmark sweeps: every bound against the exact oracle, row by row.

A sweep generates one seeded family, computes the oracle's largest zero
modulus per polynomial, evaluates all bounds at one rho, and emits a CSV
(one row per polynomial) plus an aggregate JSON summary next to it.  Any
certified radius that falls below the oracle modulus beyond the
soundness slack aborts the run with SoundnessViolation after writing a
reproduction bundle.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

from .bounds import BOUND_NAMES, evaluate_all
from .errors import SoundnessViolation
from .families import FamilySpec, generate_family
from .roots import RESOLVE_TOL, ZeroSet, all_zeros_batch

SOUNDNESS_SLACK = 1e-9

CSV_COLUMNS = (["family", "seed_index", "degree", "oracle_max_modulus"]
               + [col for name in BOUND_NAMES
                  for col in (name + "_radius", name + "_ratio")]
               + ["skipped"])


def bench_rows(family: FamilySpec, degree: int, count: int, seed: int,
               rho: float = 1.0, oracle_tol: float = RESOLVE_TOL,
               soundness_slack: float = SOUNDNESS_SLACK):
    """Returns (rows, violations); rows are dicts keyed by CSV_COLUMNS."""
    polys = generate_family(family, degree, count, seed, rho)
    zero_sets = all_zeros_batch(polys, oracle_tol)
    rows, violations = [], []
    for i, (p, zs) in enumerate(zip(polys, zero_sets)):
        row = {"family": family.value, "seed_index": i, "degree": p.degree}
        if isinstance(zs, ZeroSet):
            oracle = zs.max_modulus()
            row["oracle_max_modulus"] = oracle
            row["skipped"] = ""
        else:
            oracle = None
            row["oracle_max_modulus"] = None
            row["skipped"] = "no_convergence"
        for rep in evaluate_all(p, rho):
            radius = rep.radius if rep.applicable else None
            ratio = None
            if radius is not None and oracle is not None and oracle > 0.0:
                ratio = radius / oracle
                if radius * (1.0 + soundness_slack) < oracle:
                    violations.append({
                        "family": family.value, "seed_index": i,
                        "degree": p.degree, "seed": seed, "rho": rho,
                        "bound": rep.name, "radius": radius,
                        "oracle_max_modulus": oracle,
                        "polynomial": p.to_json(),
                    })
            row[rep.name + "_radius"] = radius
            row[rep.name + "_ratio"] = ratio
        rows.append(row)
    return rows, violations


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(rows, path):
    """Byte-deterministic: repr floats, LF endings, UTF-8."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow([_cell(row[col]) for col in CSV_COLUMNS])


def summarize(rows, meta):
    skipped = sum(1 for r in rows if r["skipped"])
    out = {"meta": meta, "rows": len(rows), "skipped": skipped, "bounds": {}}
    oracles = [r["oracle_max_modulus"] for r in rows
               if r["oracle_max_modulus"] is not None]
    if oracles:
        out["oracle_max_modulus_max"] = max(oracles)
    for name in BOUND_NAMES:
        radii = [r[name + "_radius"] for r in rows
                 if r[name + "_radius"] is not None]
        ratios = [r[name + "_ratio"] for r in rows
                  if r[name + "_ratio"] is not None]
        entry = {"applicable": len(radii)}
        if ratios:
            entry["ratio_min"] = min(ratios)
            entry["ratio_mean"] = math.fsum(ratios) / len(ratios)
            entry["ratio_max"] = max(ratios)
        out["bounds"][name] = entry
    return out


def summary_path(out_path) -> Path:
    return Path(out_path).with_suffix(".summary.json")


def run_bench(family: FamilySpec, degree: int, count: int, seed: int,
              out_path, rho: float = 1.0, oracle_tol: float = RESOLVE_TOL,
              soundness_slack: float = SOUNDNESS_SLACK):
    rows, violations = bench_rows(family, degree, count, seed, rho,
                                  oracle_tol, soundness_slack)
    write_csv(rows, out_path)
    meta = {"family": family.value, "degree": degree, "count": count,
            "seed": seed, "rho": rho, "oracle_tol": oracle_tol,
            "soundness_slack": soundness_slack}
    summary = summarize(rows, meta)
    with open(summary_path(out_path), "w", encoding="utf-8", newline="") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
    if violations:
        bundle = str(out_path) + ".violation.json"
        with open(bundle, "w", encoding="utf-8", newline="") as fh:
            json.dump({"violations": violations}, fh, indent=2, sort_keys=True)
            fh.write("\n")
        raise SoundnessViolation(
            "%d certified radius values fell below the oracle modulus; "
            "reproduction bundle at %s" % (len(violations), bundle))
    return summary


def run_verify(emit=print) -> int:
    """Fast self-checks with one pass/fail line each; exit-code style return."""
    from .bounds import bound_cauchy, greatest_root_K, optimize_r
    from .qpolynomial import from_real
    from .roots import all_zeros

    failures = 0

    def check(label, fn):
        nonlocal failures
        try:
            fn()
        except AssertionError as exc:
            failures += 1
            emit("FAIL - %s (%s)" % (label, exc))
        except Exception as exc:
            failures += 1
            emit("FAIL - %s (%s: %s)" % (label, type(exc).__name__, exc))
        else:
            emit("ok - %s" % label)

    def c_cauchy():
        r = bound_cauchy(from_real([1, 0, 1])).radius
        assert r == 2.0, "got %r" % r

    def c_k_root():
        phi = (1.0 + math.sqrt(5.0)) / 2.0
        k = greatest_root_K(2, 1)
        assert abs(k - phi) <= 1e-12, "got %r" % k

    def c_opt_r():
        r_star, radius = optimize_r(from_real([8, 0, 0, 1]))
        assert abs(r_star - 2.0) <= 1e-10, "r_star %r" % r_star
        assert abs(radius - 2.0) <= 1e-10, "radius %r" % radius

    def c_sphere():
        zs = all_zeros(from_real([1, 0, 1]))
        assert zs.isolated == [], "unexpected isolated zeros"
        assert len(zs.spheres) == 1, "expected one sphere"
        x, y = zs.spheres[0]
        assert abs(x) <= 1e-12 and abs(y - 1.0) <= 1e-12, "sphere %r" % (zs.spheres,)

    def c_sweep():
        rows, violations = bench_rows(FamilySpec.DENSE, 4, 25, 7)
        assert not violations, "%d violations" % len(violations)
        assert all(not r["skipped"] for r in rows), "skipped rows"

    check("cauchy bound on t^2 + 1 equals 2", c_cauchy)
    check("degree-2 chain constant equals the golden ratio", c_k_root)
    check("optimized lemma radius on t^3 + 8 equals 2", c_opt_r)
    check("zero set of t^2 + 1 is the unit imaginary sphere", c_sphere)
    check("mini dense sweep is sound and converges", c_sweep)
    return 0 if failures == 0 else 1
