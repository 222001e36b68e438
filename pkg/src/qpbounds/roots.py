"""Exact zero sets for quaternion polynomials.

Strategy: the product of P with its coefficient-conjugate has real
coefficients and keeps every zero of P, so its complex roots locate all
candidate spheres {x + y*I : I a unit imaginary}.  A batched
Aberth-Ehrlich iteration finds those roots; clusters of nearby roots are
sharpened with Newton steps on the appropriate derivative so multiple
zeros come out to machine accuracy; finally each candidate sphere is
resolved against P itself into a whole sphere of zeros, one isolated
zero, or nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npp

from .errors import NoConvergence, OracleInconsistent
from .qpolynomial import QPolynomial, Side
from .quaternion import (Quaternion, make_rng, random_unit_imaginary)

ABERTH_TOL = 1e-12
ABERTH_MAX_SWEEPS = 500
COMPACT_EVERY = 50
CLUSTER_BASE_REL = 1e-7
REAL_CLASS_REL = 1e-10
RESOLVE_TOL = 1e-10
SPHERE_SAMPLES = 16
SPHERE_SAMPLE_SEED = 1849


def _horner_pair(a, z):
    """Value and derivative of every row polynomial at its z; a ascending."""
    p = np.zeros_like(z)
    dp = np.zeros_like(z)
    for k in range(a.shape[1] - 1, -1, -1):
        dp = dp * z + p
        p = p * z + a[:, k]
    return p, dp


def _eval_abs(aabs, zabs):
    s = np.zeros_like(zabs)
    for k in range(aabs.shape[1] - 1, -1, -1):
        s = s * zabs + aabs[:, k]
    return s


def _aberth_batch(coeff_rows, tol=ABERTH_TOL):
    """All complex roots of a batch of equal-degree real polynomials.

    Returns (roots (B, m), error estimates (B, m), converged (B,)).
    Roots are updated Gauss-Seidel style in ascending index order; a root
    stops when its correction is below tol relative to its size or its
    residual reaches the evaluation noise floor (which is how stalls at
    multiple roots terminate).  Converged polynomials leave the working
    batch every COMPACT_EVERY sweeps.
    """
    a_full = np.array(coeff_rows, dtype=float)
    bsz, m1 = a_full.shape
    m = m1 - 1
    eps = np.finfo(float).eps
    a_full = a_full / a_full[:, -1:]
    z_full = np.empty((bsz, m), dtype=complex)
    conv_full = np.zeros(bsz, dtype=bool)

    a = a_full
    aabs = np.abs(a)
    r0 = 0.9 * (1.0 + np.max(aabs[:, :-1], axis=1)) if m > 0 else None
    angles = 2.0 * np.pi * np.arange(m) / m + 0.3
    z = r0[:, None] * np.exp(1j * angles)[None, :]
    done = np.zeros((bsz, m), dtype=bool)
    idx = np.arange(bsz)

    for sweep in range(ABERTH_MAX_SWEEPS):
        for s in range(m):
            act = ~done[:, s]
            if not act.any():
                continue
            zs = z[:, s]
            p, dp = _horner_pair(a, zs)
            dpa = np.abs(dp)
            floor = 4.0 * eps * _eval_abs(aabs, np.abs(zs))
            newton = np.where(dpa > 0.0, p / np.where(dpa > 0.0, dp, 1.0), 0.0)
            diff = zs[:, None] - z
            diff[:, s] = 1.0
            diff = np.where(np.abs(diff) < 1e-290, 1e-290, diff)
            recip = 1.0 / diff
            recip[:, s] = 0.0
            denom = 1.0 - newton * recip.sum(axis=1)
            bad = np.abs(denom) < 1e-290
            w = np.where(bad, newton, newton / np.where(bad, 1.0, denom))
            stop = (np.abs(w) <= tol * (1.0 + np.abs(zs))) | (np.abs(p) <= floor)
            move = act & ~stop
            z[move, s] = zs[move] - w[move]
            done[act & stop, s] = True
        if done.all():
            break
        if (sweep + 1) % COMPACT_EVERY == 0:
            finished = done.all(axis=1)
            if finished.any():
                z_full[idx[finished]] = z[finished]
                conv_full[idx[finished]] = True
                keep = ~finished
                idx, a, aabs, z, done = (idx[keep], a[keep], aabs[keep],
                                         z[keep], done[keep])

    z_full[idx] = z
    conv_full[idx] = done.all(axis=1)

    # short guarded Newton polish, then residual-based error estimates
    a, z = a_full, z_full
    for _ in range(3):
        for s in range(m):
            zs = z[:, s]
            p, dp = _horner_pair(a, zs)
            dpa = np.abs(dp)
            step = np.where(dpa > 0.0, p / np.where(dpa > 0.0, dp, 1.0), 0.0)
            zn = zs - step
            pn, _ = _horner_pair(a, zn)
            z[:, s] = np.where(np.abs(pn) < np.abs(p), zn, zs)
    errs = np.empty((bsz, m))
    for s in range(m):
        zs = z[:, s]
        p, dp = _horner_pair(a, zs)
        dpa = np.abs(dp)
        zsa = np.abs(zs)
        raw = np.where(dpa > 0.0, m * np.abs(p) / np.where(dpa > 0.0, dpa, 1.0),
                       np.inf)
        errs[:, s] = np.clip(raw, 4.0 * eps * (1.0 + zsa), 1e-2 * (1.0 + zsa))
    return z, errs, conv_full


def complex_roots(p: QPolynomial, tol: float = ABERTH_TOL):
    """All complex roots of a real-coefficient polynomial, sorted by
    (real, imag).  Raises NoConvergence with the best iterates attached."""
    if p.degree < 1 or p.is_zero():
        return []
    c = p.real_coeff_array()
    z, _, ok = _aberth_batch(c[None, :], tol)
    if not ok[0]:
        res = np.abs(npp.polyval(z[0], c))
        raise NoConvergence("root iteration did not converge",
                            roots=[complex(v) for v in z[0]],
                            residuals=[float(v) for v in res])
    return sorted((complex(v) for v in z[0]), key=lambda v: (v.real, v.imag))


@dataclass
class SphereResolution:
    kind: str  # "sphere" | "isolated" | "empty"
    x: float
    y: float
    point: Quaternion | None
    residual: float


def _sphere_scale(p: QPolynomial, x: float, y: float) -> float:
    return p.max_coeff_modulus() * max(1.0, math.hypot(x, y)) ** p.degree


def resolve_sphere(p: QPolynomial, x: float, y: float,
                   tol: float = RESOLVE_TOL) -> SphereResolution:
    """Decide what P does on the sphere {x + y*I : I unit imaginary}.

    Powers of x + y*I stay in the plane spanned by 1 and I, so
    P(x + y*I) = A + I*B (right side) or A + B*I (left side) with A, B
    independent of I.  Both negligible: the whole sphere consists of
    zeros.  B invertible: at most the single I solving the linear
    equation can work, and it does iff it lands on a unit imaginary and
    the residual of P there is negligible.
    """
    x, y = float(x), float(y)
    if y < 0.0:
        raise ValueError("sphere radius must be non-negative")
    n = p.degree
    alpha, beta = 1.0, 0.0
    acc_a = Quaternion()
    acc_b = Quaternion()
    for q in p.coeffs:
        acc_a = acc_a + q * alpha
        acc_b = acc_b + q * beta
        alpha, beta = x * alpha - y * beta, y * alpha + x * beta
    cut = tol * _sphere_scale(p, x, y)
    mod_a, mod_b = acc_a.modulus(), acc_b.modulus()
    if y > 0.0 and mod_a <= cut and mod_b <= cut:
        return SphereResolution("sphere", x, y, None, max(mod_a, mod_b))
    if y == 0.0:
        r = p.evaluate(Quaternion(x)).modulus()
        if r <= cut:
            return SphereResolution("isolated", x, 0.0, Quaternion(x), r)
        return SphereResolution("empty", x, y, None, r)
    if mod_b <= cut:
        return SphereResolution("empty", x, y, None, mod_a)
    if p.side is Side.RIGHT:
        cand = -(acc_a * acc_b.inverse())
    else:
        cand = -(acc_b.inverse() * acc_a)
    if abs(cand.w) > tol or abs(cand.modulus() - 1.0) > tol:
        return SphereResolution("empty", x, y, None, max(mod_a, mod_b))
    im = cand.im_modulus()
    unit = Quaternion(0.0, cand.x / im, cand.y / im, cand.z / im)
    t0 = Quaternion(x) + unit * y
    r = p.evaluate(t0).modulus()
    if r <= cut:
        return SphereResolution("isolated", x, y, t0, r)
    return SphereResolution("empty", x, y, None, r)


@dataclass
class ZeroSet:
    isolated: list
    isolated_mult: list
    spheres: list
    sphere_mult: list
    residual_max: float

    def total_multiplicity(self) -> int:
        return sum(self.isolated_mult) + sum(self.sphere_mult)

    def max_modulus(self):
        mods = [q.modulus() for q in self.isolated]
        mods.extend(math.hypot(x, y) for x, y in self.spheres)
        return max(mods) if mods else None

    def to_json(self):
        return {"isolated": [q.to_json() for q in self.isolated],
                "spheres": [[x, y] for x, y in self.spheres],
                "residual_max": self.residual_max}


def _union_groups(count, linked):
    parent = list(range(count))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in linked:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    groups = {}
    for i in range(count):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _cluster(roots, errs, base):
    # iterates around a multiple root sit at roughly err_i from it, so two on
    # opposite sides are err_i + err_j apart; the factor 2 buys slack there
    # without touching well-separated roots, whose errs are near machine eps
    linked = []
    m = len(roots)
    for i in range(m):
        for j in range(i + 1, m):
            if abs(roots[i] - roots[j]) <= 2.0 * (errs[i] + errs[j]) + base:
                linked.append((i, j))
    return _union_groups(m, linked)


def _derivative(c):
    return c[1:] * np.arange(1, c.size)


def _polish_newton(derivs, mean, size, extent):
    """Newton on the (size-1)-th derivative, where the cluster's root is
    simple; guarded so a diverging iteration cannot leave the cluster."""
    c = derivs[size - 1]
    dc = derivs[size]
    guard = max(10.0 * extent, 1e-3 * (1.0 + abs(mean)))
    z = mean
    fz = abs(npp.polyval(z, c))
    for _ in range(40):
        d = npp.polyval(z, dc)
        if d == 0.0:
            break
        step = npp.polyval(z, c) / d
        zn = z - step
        if abs(zn - mean) > guard:
            break
        fn = abs(npp.polyval(zn, c))
        if fn >= fz and abs(step) > 1e-15 * (1.0 + abs(z)):
            break
        z, fz = complex(zn), fn
        if abs(step) <= 1e-15 * (1.0 + abs(z)):
            break
    return z


@dataclass
class _Candidate:
    x: float
    y: float
    size: int
    err: float
    extent: float
    y_alt: float  # member-level mean |Im|, for clusters folded across the axis


def _cluster_candidates(roots, errs, scoeffs, base):
    clusters = _cluster(roots, errs, base)
    max_size = max(len(g) for g in clusters)
    derivs = [np.asarray(scoeffs, dtype=float)]
    for _ in range(max_size):
        derivs.append(_derivative(derivs[-1]))
    out = []
    for members in clusters:
        zs = [roots[i] for i in members]
        size = len(members)
        mean = sum(zs) / size
        if size >= 2:
            extent0 = max(abs(v - mean) for v in zs)
            center = _polish_newton(derivs, mean, size, extent0)
        else:
            center = zs[0]
        err = max(float(errs[i]) for i in members)
        extent = max(abs(v - center) for v in zs)
        y_alt = sum(abs(v.imag) for v in zs) / size
        out.append(_Candidate(float(center.real), abs(float(center.imag)),
                              size, err, float(extent), float(y_alt)))
    return out


def _fold_merge(cands, base):
    linked = []
    for i in range(len(cands)):
        for j in range(i + 1, len(cands)):
            cut = cands[i].err + cands[j].err + base
            if math.hypot(cands[i].x - cands[j].x,
                          cands[i].y - cands[j].y) <= cut:
                linked.append((i, j))
    merged = []
    for group in _union_groups(len(cands), linked):
        if len(group) == 1:
            merged.append(cands[group[0]])
            continue
        parts = [cands[i] for i in group]
        total = sum(c.size for c in parts)
        x = sum(c.size * c.x for c in parts) / total
        y = sum(c.size * c.y for c in parts) / total
        spread = max(math.hypot(c.x - x, c.y - y) for c in parts)
        merged.append(_Candidate(
            x, y, total,
            max(c.err for c in parts),
            max(c.extent for c in parts) + spread,
            sum(c.size * c.y_alt for c in parts) / total))
    return merged


def _resolve_ladder(p, cand, tol):
    real_like = cand.y <= max(REAL_CLASS_REL * (1.0 + abs(cand.x)),
                              cand.extent, cand.err)
    if real_like:
        res = resolve_sphere(p, cand.x, 0.0, tol)
        if res.kind != "empty":
            return res
        y = cand.y if cand.y > 0.0 else cand.y_alt
        if y > 0.0:
            res = resolve_sphere(p, cand.x, y, tol)
            if res.kind != "empty":
                return res
        return SphereResolution("empty", cand.x, cand.y, None, math.inf)
    res = resolve_sphere(p, cand.x, cand.y, tol)
    if res.kind != "empty":
        return res
    if cand.y <= cand.extent + cand.err + REAL_CLASS_REL * (1.0 + abs(cand.x)):
        res = resolve_sphere(p, cand.x, 0.0, tol)
        if res.kind != "empty":
            return res
    return SphereResolution("empty", cand.x, cand.y, None, math.inf)


def _verify_spheres(p, spheres, tol):
    """Deterministic sample check that claimed spheres really vanish."""
    if not spheres:
        return 0.0
    rng = make_rng(SPHERE_SAMPLE_SEED)
    worst = 0.0
    for x, y in spheres:
        scale = _sphere_scale(p, x, y)
        for _ in range(SPHERE_SAMPLES):
            u = random_unit_imaginary(rng)
            r = p.evaluate(Quaternion(x) + u * y).modulus()
            worst = max(worst, r)
            if r > 8.0 * tol * scale:
                raise OracleInconsistent(
                    "sphere (%.6g, %.6g) sample residual %.3e" % (x, y, r))
    return worst


def _resolve_candidates(p, roots, errs, scoeffs, tol):
    n = p.degree
    base = CLUSTER_BASE_REL * (1.0 + max(abs(v) for v in roots))
    cands = _fold_merge(_cluster_candidates(list(roots), list(errs),
                                            scoeffs, base), base)
    isolated, isolated_mult = [], []
    spheres, sphere_mult = [], []
    residual_max = 0.0
    total = 0
    for cand in cands:
        mult = cand.size // 2
        res = _resolve_ladder(p, cand, tol)
        if res.kind == "empty" or mult == 0:
            raise OracleInconsistent(
                "candidate near (%.6g, %.6g) matches no zero of the polynomial"
                % (cand.x, cand.y))
        residual_max = max(residual_max, res.residual)
        if res.kind == "sphere":
            spheres.append((res.x, res.y))
            sphere_mult.append(mult)
        else:
            isolated.append(res.point)
            isolated_mult.append(mult)
        total += mult
    if total != n:
        raise OracleInconsistent(
            "zero multiplicities sum to %d for a degree %d polynomial"
            % (total, n))
    residual_max = max(residual_max, _verify_spheres(p, spheres, tol))
    if isolated:
        order = sorted(range(len(isolated)),
                       key=lambda i: isolated[i].components())
        isolated = [isolated[i] for i in order]
        isolated_mult = [isolated_mult[i] for i in order]
    if spheres:
        order = sorted(range(len(spheres)), key=lambda i: spheres[i])
        spheres = [spheres[i] for i in order]
        sphere_mult = [sphere_mult[i] for i in order]
    return ZeroSet(isolated, isolated_mult, spheres, sphere_mult, residual_max)


def all_zeros(p: QPolynomial, tol: float = RESOLVE_TOL) -> ZeroSet:
    """The complete zero set of P: isolated points and whole spheres.

    Multiplicities are carried on the ZeroSet and always sum to the
    degree; OracleInconsistent signals that the accounting failed, which
    means a bug or an input far outside double precision comfort, never
    a silent wrong answer.
    """
    if p.is_zero():
        raise ValueError("zero polynomial: every quaternion is a zero")
    if p.degree == 0:
        return ZeroSet([], [], [], [], 0.0)
    s = p.symmetrize()
    c = s.real_coeff_array()
    z, errs, ok = _aberth_batch(c[None, :])
    if not ok[0]:
        res = np.abs(npp.polyval(z[0], c))
        raise NoConvergence("root iteration did not converge",
                            roots=[complex(v) for v in z[0]],
                            residuals=[float(v) for v in res])
    return _resolve_candidates(p, z[0], errs[0], c, tol)


def all_zeros_batch(polys, tol: float = RESOLVE_TOL):
    """all_zeros over many polynomials, sharing iteration work per degree.

    Returns a list aligned with the input; entries are ZeroSet objects
    except where iteration failed, which yields the NoConvergence
    instance instead of raising so one bad row cannot sink a sweep.
    """
    results = [None] * len(polys)
    groups = {}
    for i, p in enumerate(polys):
        if p.is_zero():
            raise ValueError("zero polynomial at index %d" % i)
        if p.degree == 0:
            results[i] = ZeroSet([], [], [], [], 0.0)
            continue
        c = p.symmetrize().real_coeff_array()
        groups.setdefault(len(c), []).append((i, c))
    for items in groups.values():
        arr = np.array([c for _, c in items])
        z, errs, ok = _aberth_batch(arr)
        for row, (i, c) in enumerate(items):
            if not ok[row]:
                res = np.abs(npp.polyval(z[row], c))
                results[i] = NoConvergence(
                    "root iteration did not converge",
                    roots=[complex(v) for v in z[row]],
                    residuals=[float(v) for v in res])
                continue
            results[i] = _resolve_candidates(polys[i], z[row], errs[row], c, tol)
    return results


def max_zero_modulus_batch(polys, tol: float = RESOLVE_TOL):
    """Largest zero modulus per polynomial; None where iteration failed."""
    out = []
    for r in all_zeros_batch(polys, tol):
        if isinstance(r, ZeroSet):
            out.append(r.max_modulus())
        else:
            out.append(None)
    return out
