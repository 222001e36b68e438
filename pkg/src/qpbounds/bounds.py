"""Radius bounds for the zeros of quaternion polynomials.

Every bound returns a BoundReport rather than raising when the
polynomial does not satisfy its hypotheses; exceptions are reserved for
malformed caller input (bad indices, non-positive scales, parameter
assertions that the data refutes).  All radii returned with
applicable=True are certified: every zero of the polynomial lies in the
closed ball of that radius about the origin.  The one exception is
gauss1849, kept for comparison only; its report says so and nothing in
this package treats it as a certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (BadIndices, DegenerateAllZero, HypothesisViolated,
                     NonPositiveScale)
from .qpolynomial import QPolynomial
from .quaternion import Quaternion, angle

CHAIN_SLACK = 1e-12
MODULI_SLACK = 1e-12
NEGLIGIBLE_REL = 1e-14

# Canonical report order; the bench CSV uses exactly these names.
BOUND_NAMES = ["theorem1", "corollary1", "lemma4", "cauchy", "gauss",
               "enestrom_kakeya", "theorem2", "remark1", "theorem3",
               "theorem4", "theorem5", "theorem6"]


@dataclass
class BoundReport:
    name: str
    applicable: bool
    radius: float | None
    parameters: dict = field(default_factory=dict)
    hypothesis_detail: str = ""

    def to_json(self):
        return {"name": self.name, "applicable": self.applicable,
                "radius": self.radius, "parameters": self.parameters,
                "hypothesis_detail": self.hypothesis_detail}


def _inapplicable(name, detail, **params):
    return BoundReport(name, False, None, dict(params), detail)


def _check_rho(rho) -> float:
    rho = float(rho)
    if not (rho > 0.0) or not math.isfinite(rho):
        raise NonPositiveScale("rho must be finite and positive, got %r" % rho)
    return rho


def _le(a: float, b: float) -> bool:
    return a <= b + CHAIN_SLACK * max(abs(a), abs(b))


def _chain_ok(m, k) -> str | None:
    """Up to index k, then down; endpoints non-negative.  None means ok."""
    scale = max((abs(v) for v in m), default=0.0)
    floor = -CHAIN_SLACK * scale
    if m[0] < floor or m[-1] < floor:
        return "chain endpoints must be non-negative"
    for j in range(k):
        if not _le(m[j], m[j + 1]):
            return "chain not ascending at index %d" % j
    for j in range(k, len(m) - 1):
        if not _le(m[j + 1], m[j]):
            return "chain not descending at index %d" % j
    return None


def _auto_peak(m) -> int:
    # Any maximizer works: valid peaks of an up-down chain share the
    # maximal value, so the resulting radius does not depend on the choice.
    return max(range(len(m)), key=lambda j: m[j])


def _resolve_peak(m, k):
    if k is None:
        k = _auto_peak(m)
    else:
        k = int(k)
        if not 0 <= k < len(m):
            raise BadIndices("peak index %d outside 0..%d" % (k, len(m) - 1))
    return k, _chain_ok(m, k)


def l_star(p: QPolynomial):
    """Largest index below the degree with a non-negligible coefficient."""
    mods = p.moduli()
    cut = NEGLIGIBLE_REL * max(mods)
    for j in range(p.degree - 1, -1, -1):
        if mods[j] > cut:
            return j
    return None


def _lacunary_gap_ok(p: QPolynomial, l: int) -> bool:
    mods = p.moduli()
    cut = NEGLIGIBLE_REL * max(mods)
    return all(mods[j] <= cut for j in range(l + 1, p.degree))


def greatest_root_K(n: int, l: int) -> float:
    """Largest real root > 1 of K^{n+1} - K^n - K^{l+1} + 1, or 1.0 if none.

    For l = 0 the polynomial factors as (K - 1)(K^n - 1) and has no root
    beyond 1; the limiting value 1.0 is returned.  For l >= 1 the root
    lies strictly inside (1, 2) and is found by bisection plus a Newton
    polish.
    """
    n, l = int(n), int(l)
    if n < 1 or not 0 <= l <= n - 1:
        raise BadIndices("need n >= 1 and 0 <= l <= n-1, got n=%d l=%d" % (n, l))
    if l == 0:
        return 1.0

    def f(k):
        return k ** (n + 1) - k ** n - k ** (l + 1) + 1.0

    def fp(k):
        return (n + 1) * k ** n - n * k ** (n - 1) - (l + 1) * k ** l

    lo, hi = 1.0 + 1e-12, 2.0
    while hi - lo > 1e-15 * hi:
        mid = 0.5 * (lo + hi)
        if f(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    for _ in range(4):
        d = fp(root)
        if d == 0.0:
            break
        root -= f(root) / d
    return root


def bound_theorem1(p: QPolynomial, rho: float, l=None) -> BoundReport:
    """Radius K(n, l) / rho for polynomials of shape q_n t^n + q_l t^l + ... + q_0
    whose lower moduli satisfy |q_j| rho^{n-j} <= |q_n|."""
    rho = _check_rho(rho)
    name = "theorem1"
    n = p.degree
    if n < 2:
        return _inapplicable(name, "degree below 2", rho=rho)
    if l is None:
        l = l_star(p)
        if l is None:
            return _inapplicable(name, "no coefficient below the leading one", rho=rho)
    else:
        l = int(l)
        if not 0 <= l <= n - 1:
            raise BadIndices("l=%d outside 0..%d" % (l, n - 1))
    mods = p.moduli()
    cut = NEGLIGIBLE_REL * max(mods)
    if mods[l] <= cut:
        return _inapplicable(name, "coefficient at index l=%d vanishes" % l,
                             rho=rho, l=l)
    if not _lacunary_gap_ok(p, l):
        return _inapplicable(name, "nonzero coefficient between index %d and the "
                             "degree" % l, rho=rho, l=l)
    lead = mods[n]
    for j in range(l + 1):
        if mods[j] * rho ** (n - j) > lead * (1.0 + MODULI_SLACK):
            return _inapplicable(name, "|q_%d| rho^%d exceeds |q_%d|" % (j, n - j, n),
                                 rho=rho, l=l)
    k_root = greatest_root_K(n, l)
    return BoundReport(name, True, k_root / rho,
                       {"rho": rho, "l": l, "K": k_root}, "hypotheses verified")


def bound_corollary1(p: QPolynomial, rho: float) -> BoundReport:
    """Theorem1 with l = n-1: no gap requirement, the largest K of the family."""
    rho = _check_rho(rho)
    name = "corollary1"
    n = p.degree
    if n < 2:
        return _inapplicable(name, "degree below 2", rho=rho)
    mods = p.moduli()
    lead = mods[n]
    for j in range(n):
        if mods[j] * rho ** (n - j) > lead * (1.0 + MODULI_SLACK):
            return _inapplicable(name, "|q_%d| rho^%d exceeds |q_%d|" % (j, n - j, n),
                                 rho=rho)
    k_root = greatest_root_K(n, n - 1)
    return BoundReport(name, True, k_root / rho,
                       {"rho": rho, "l": n - 1, "K": k_root}, "hypotheses verified")


def bound_lemma4(p: QPolynomial, r: float, l=None) -> BoundReport:
    """max(r, sum_{j<=l} (|q_j|/|q_n|) r^{-(n-j-1)}) for the gapped shape."""
    r = float(r)
    if not (r > 0.0) or not math.isfinite(r):
        raise NonPositiveScale("r must be finite and positive, got %r" % r)
    name = "lemma4"
    n = p.degree
    if n < 1 or p.is_zero():
        return _inapplicable(name, "degree below 1", r=r)
    if l is None:
        l = l_star(p)
        if l is None:
            return BoundReport(name, True, r, {"r": r, "l": None},
                               "pure monomial; only zero is the origin")
    else:
        l = int(l)
        if not 0 <= l <= n - 1:
            raise BadIndices("l=%d outside 0..%d" % (l, n - 1))
    if not _lacunary_gap_ok(p, l):
        return _inapplicable(name, "nonzero coefficient between index %d and the "
                             "degree" % l, r=r, l=l)
    mods = p.moduli()
    lead = mods[n]
    s = sum(mods[j] / lead * r ** (j + 1 - n) for j in range(l + 1))
    return BoundReport(name, True, max(r, s), {"r": r, "l": l, "sum": s},
                       "hypotheses verified")


def optimize_r(p: QPolynomial, l=None):
    """Pick r so that sum_{j<=l} |q_j| / (|q_n| r^{n-j}) crosses 1.

    At the crossing the two arms of the lemma4 maximum coincide, which is
    where the bound is smallest.  Returns (r_star, radius); the radius is
    evaluated through bound_lemma4 at r_star, so it stays certified even
    if the crossing is located only approximately.
    """
    n = p.degree
    if n < 1 or p.is_zero():
        raise DegenerateAllZero("need degree at least 1")
    if l is None:
        l = l_star(p)
        if l is None:
            raise DegenerateAllZero("all coefficients below the leading one vanish")
    else:
        l = int(l)
        if not 0 <= l <= n - 1:
            raise BadIndices("l=%d outside 0..%d" % (l, n - 1))
    mods = p.moduli()
    lead = mods[n]
    if all(mods[j] == 0.0 for j in range(l + 1)):
        raise DegenerateAllZero("all coefficients up to index %d vanish" % l)

    def g(r):
        return sum(mods[j] / (lead * r ** (n - j)) for j in range(l + 1))

    lo = 1e-8
    if g(lo) <= 1.0:
        r_star = lo
    else:
        hi = 1.0
        while g(hi) > 1.0:
            hi *= 2.0
        while hi - lo > 1e-12 * hi:
            mid = 0.5 * (lo + hi)
            if g(mid) > 1.0:
                lo = mid
            else:
                hi = mid
        r_star = 0.5 * (lo + hi)
    report = bound_lemma4(p, r_star, l)
    return r_star, report.radius


def bound_cauchy(p: QPolynomial) -> BoundReport:
    """1 + max_{j<n} |q_j| / |q_n|; no hypotheses beyond degree >= 1."""
    name = "cauchy"
    n = p.degree
    if n < 1 or p.is_zero():
        return _inapplicable(name, "degree below 1")
    mods = p.moduli()
    m = max(mods[j] for j in range(n)) / mods[n]
    return BoundReport(name, True, 1.0 + m, {"max_ratio": m}, "hypotheses verified")


def bound_gauss(p: QPolynomial) -> BoundReport:
    """max_k (n sqrt(2) |a_k|)^{1/k} over the normalized real coefficients
    a_k = q_{n-k} / q_n; real coefficients only."""
    name = "gauss"
    n = p.degree
    if n < 1 or p.is_zero():
        return _inapplicable(name, "degree below 1")
    if max(q.im_modulus() for q in p.coeffs) > NEGLIGIBLE_REL * p.max_coeff_modulus():
        return _inapplicable(name, "coefficients are not all real")
    lead = p.coeffs[n].w
    best = 0.0
    for k in range(1, n + 1):
        a = abs(p.coeffs[n - k].w / lead)
        if a > 0.0:
            best = max(best, (n * math.sqrt(2.0) * a) ** (1.0 / k))
    return BoundReport(name, True, best, {"n": n}, "hypotheses verified")


def bound_gauss1849(p: QPolynomial) -> BoundReport:
    """Positive root of z^n - sqrt(2) (r_1 + r_2 z + ... + r_n z^{n-1}),
    r_m = |q_{n-m}| / |q_n|.

    Comparison value only.  The construction undershoots on polynomials
    with a large subleading coefficient (already z^2 + 100 z + 1 has a
    zero of modulus near 100 against a value near 12.6), so no caller in
    this package uses it as a certificate.
    """
    name = "gauss1849"
    n = p.degree
    if n < 1 or p.is_zero():
        return _inapplicable(name, "degree below 1")
    mods = p.moduli()
    lead = mods[n]
    r = [mods[n - m] / lead for m in range(1, n + 1)]

    def g(z):
        return z ** n - math.sqrt(2.0) * sum(rm * z ** (m - 1)
                                             for m, rm in enumerate(r, start=1))

    if all(rm == 0.0 for rm in r):
        return BoundReport(name, True, 0.0, {"advisory": True},
                           "comparison value only, not certified")
    lo = 1e-12
    hi = 1.0
    while g(hi) <= 0.0:
        hi *= 2.0
    while hi - lo > 1e-12 * hi:
        mid = 0.5 * (lo + hi)
        if g(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
    return BoundReport(name, True, 0.5 * (lo + hi), {"advisory": True},
                       "comparison value only, not certified")


def check_enestrom_kakeya(p: QPolynomial) -> BoundReport:
    """Radius exactly 1.0 for real coefficients 0 <= q_0 <= ... <= q_n, q_n > 0."""
    name = "enestrom_kakeya"
    n = p.degree
    if n < 1 or p.is_zero():
        return _inapplicable(name, "degree below 1")
    if max(q.im_modulus() for q in p.coeffs) > NEGLIGIBLE_REL * p.max_coeff_modulus():
        return _inapplicable(name, "coefficients are not all real")
    w = [q.w for q in p.coeffs]
    if w[n] <= 0.0:
        return _inapplicable(name, "leading coefficient is not positive")
    scale = max(abs(v) for v in w)
    if w[0] < -CHAIN_SLACK * scale:
        return _inapplicable(name, "constant coefficient is negative")
    for j in range(n):
        if not _le(w[j], w[j + 1]):
            return _inapplicable(name, "coefficients not ascending at index %d" % j)
    return BoundReport(name, True, 1.0, {}, "hypotheses verified")


def _weighted(values, rho):
    return [rho ** j * v for j, v in enumerate(values)]


def bound_theorem2(p: QPolynomial, rho: float, k=None) -> BoundReport:
    """Moduli chain rho^j |q_j| up to k then down; the radius trades the
    chain profile against how far each coefficient sits from the positive
    real axis."""
    rho = _check_rho(rho)
    name = "theorem2"
    n = p.degree
    if n < 1 or p.is_zero():
        return _inapplicable(name, "degree below 1", rho=rho)
    mods = p.moduli()
    m = _weighted(mods, rho)
    k, why = _resolve_peak(m, k)
    if why is not None:
        return _inapplicable(name, why, rho=rho, k=k)
    correction = 0.0
    for j in range(n + 1):
        dist = (p.coeffs[j] - mods[j]).modulus()
        correction += dist * rho ** (j + 1 - n)
    correction *= 2.0 / mods[n]
    radius = rho * (2.0 * m[k] / m[n] - 1.0) + correction
    return BoundReport(name, True, radius,
                       {"rho": rho, "k": k, "correction": correction},
                       "hypotheses verified")


def _remark1_radius(p, rho, k, theta, m):
    n = p.degree
    mods = p.moduli()
    tail = sum(mods[j] * rho ** (j + 1 - n) for j in range(n)) / mods[n]
    return (rho * ((2.0 * m[k] / m[n] - 1.0) * math.cos(theta) + math.sin(theta))
            + 2.0 * math.sin(theta) * tail)


def bound_remark1(p: QPolynomial, rho: float, k=None, theta=None, gamma=None) -> BoundReport:
    """Variant of theorem2 for coefficients clustered in direction.

    A direction gamma and half-angle theta certify the bound when every
    nonzero coefficient lies within theta of gamma.  Callers may supply
    both (refuted assertions raise HypothesisViolated), just gamma, or
    neither; without a gamma the coefficients themselves and their sum
    are tried as directions and the smallest certified radius wins.
    """
    rho = _check_rho(rho)
    name = "remark1"
    n = p.degree
    if n < 1 or p.is_zero():
        return _inapplicable(name, "degree below 1", rho=rho)
    mods = p.moduli()
    cut = NEGLIGIBLE_REL * max(mods)
    live = [p.coeffs[j] for j in range(n + 1) if mods[j] > cut]
    m = _weighted(mods, rho)
    k, why = _resolve_peak(m, k)
    if why is not None:
        return _inapplicable(name, why, rho=rho, k=k)

    if theta is not None:
        theta = float(theta)
        if not 0.0 <= theta <= math.pi / 2 + 1e-12:
            raise HypothesisViolated("theta=%r outside [0, pi/2]" % theta)
        if gamma is None:
            raise HypothesisViolated("theta given without a direction gamma")
        worst = max(angle(q, gamma) for q in live)
        if worst > theta + 1e-9:
            raise HypothesisViolated(
                "coefficient at angle %.6f from gamma exceeds theta=%.6f"
                % (worst, theta))
        radius = _remark1_radius(p, rho, k, theta, m)
        return BoundReport(name, True, radius,
                           {"rho": rho, "k": k, "theta": theta,
                            "gamma": gamma.to_json()}, "hypotheses verified")

    candidates = [gamma] if gamma is not None else []
    if gamma is None:
        candidates.extend(live)
        total = Quaternion()
        for q in live:
            total = total + q
        if total.modulus() > cut:
            candidates.append(total)
    best = None
    for cand in candidates:
        worst = max(angle(q, cand) for q in live)
        if worst > math.pi / 2:
            continue
        radius = _remark1_radius(p, rho, k, worst, m)
        if best is None or radius < best[0]:
            best = (radius, worst, cand)
    if best is None:
        return _inapplicable(name, "no direction keeps all coefficients within "
                             "a quarter turn", rho=rho, k=k)
    radius, theta, cand = best
    return BoundReport(name, True, radius,
                       {"rho": rho, "k": k, "theta": theta,
                        "gamma": cand.to_json()}, "hypotheses verified")


def _components(p: QPolynomial):
    return ([q.w for q in p.coeffs], [q.x for q in p.coeffs],
            [q.y for q in p.coeffs], [q.z for q in p.coeffs])


def _peak_term(comp, rho, peak, n, lead_mod):
    return rho * (2.0 * rho ** peak * comp[peak] - rho ** n * comp[n]) \
        / (rho ** n * lead_mod)


def _printed_term(comp, rho, peak, n, lead_mod):
    return rho * (2.0 * rho ** peak * comp[peak] / (rho ** n * lead_mod) - 1.0)


def _component_chains(p, rho, comps, k):
    """Resolve one peak per listed component; returns (peaks, failure detail)."""
    n = p.degree
    if k is None:
        k = (None,) * len(comps)
    else:
        k = tuple(k)
        if len(k) != len(comps):
            raise BadIndices("expected %d peak indices, got %d" % (len(comps), len(k)))
    peaks = []
    for label, comp, kc in zip("abgd", comps, k):
        m = _weighted(comp, rho)
        kc, why = _resolve_peak(m, kc)
        if why is not None:
            return None, "component %s: %s" % (label, why)
        peaks.append(kc)
    return peaks, None


def bound_theorem3(p: QPolynomial, rho: float, k=None) -> BoundReport:
    """Chain on the real components alone; the three imaginary component
    magnitudes enter only through a correction sum."""
    rho = _check_rho(rho)
    name = "theorem3"
    n = p.degree
    if n < 1 or p.is_zero():
        return _inapplicable(name, "degree below 1", rho=rho)
    alpha, beta, gamma_c, delta = _components(p)
    if alpha[n] <= 0.0:
        return _inapplicable(name, "leading real component is not positive", rho=rho)
    m = _weighted(alpha, rho)
    k, why = _resolve_peak(m, k)
    if why is not None:
        return _inapplicable(name, why, rho=rho, k=k)
    correction = sum((abs(beta[j]) + abs(gamma_c[j]) + abs(delta[j]))
                     * rho ** (j + 1 - n) for j in range(n + 1))
    correction *= 2.0 / alpha[n]
    radius = rho * (2.0 * m[k] / m[n] - 1.0) + correction
    return BoundReport(name, True, radius,
                       {"rho": rho, "k": k, "correction": correction},
                       "hypotheses verified")


def bound_theorem4(p: QPolynomial, rho: float, k=None) -> BoundReport:
    """Chains on the real and first imaginary components; remaining two
    component magnitudes summed as a correction.

    Each chain contributes rho (2 rho^p c_p - rho^n c_n) / (rho^n |q_n|);
    subtracting the chain's own endpoint rather than the full leading
    modulus keeps the sum an upper bound (parameters carry the
    alternative radius_as_printed for comparison).
    """
    rho = _check_rho(rho)
    name = "theorem4"
    n = p.degree
    if n < 1 or p.is_zero():
        return _inapplicable(name, "degree below 1", rho=rho)
    alpha, beta, gamma_c, delta = _components(p)
    if alpha[n] <= 0.0:
        return _inapplicable(name, "leading real component is not positive", rho=rho)
    peaks, why = _component_chains(p, rho, [alpha, beta], k)
    if why is not None:
        return _inapplicable(name, why, rho=rho)
    lead = p.coeffs[n].modulus()
    correction = sum((abs(gamma_c[j]) + abs(delta[j])) * rho ** (j + 1 - n)
                     for j in range(n + 1)) * 2.0 / lead
    radius = sum(_peak_term(c, rho, pk, n, lead)
                 for c, pk in zip([alpha, beta], peaks)) + correction
    printed = sum(_printed_term(c, rho, pk, n, lead)
                  for c, pk in zip([alpha, beta], peaks)) + correction
    return BoundReport(name, True, radius,
                       {"rho": rho, "peaks": peaks, "correction": correction,
                        "radius_as_printed": printed}, "hypotheses verified")


def bound_theorem5(p: QPolynomial, rho: float, k=None) -> BoundReport:
    """Chains on three components, correction over the fourth."""
    rho = _check_rho(rho)
    name = "theorem5"
    n = p.degree
    if n < 1 or p.is_zero():
        return _inapplicable(name, "degree below 1", rho=rho)
    alpha, beta, gamma_c, delta = _components(p)
    if alpha[n] <= 0.0:
        return _inapplicable(name, "leading real component is not positive", rho=rho)
    peaks, why = _component_chains(p, rho, [alpha, beta, gamma_c], k)
    if why is not None:
        return _inapplicable(name, why, rho=rho)
    lead = p.coeffs[n].modulus()
    correction = sum(abs(delta[j]) * rho ** (j + 1 - n)
                     for j in range(n + 1)) * 2.0 / lead
    chains = [alpha, beta, gamma_c]
    radius = sum(_peak_term(c, rho, pk, n, lead)
                 for c, pk in zip(chains, peaks)) + correction
    printed = sum(_printed_term(c, rho, pk, n, lead)
                  for c, pk in zip(chains, peaks)) + correction
    return BoundReport(name, True, radius,
                       {"rho": rho, "peaks": peaks, "correction": correction,
                        "radius_as_printed": printed}, "hypotheses verified")


def bound_theorem6(p: QPolynomial, rho: float, k=None) -> BoundReport:
    """Chains on all four components; no correction term."""
    rho = _check_rho(rho)
    name = "theorem6"
    n = p.degree
    if n < 1 or p.is_zero():
        return _inapplicable(name, "degree below 1", rho=rho)
    comps = _components(p)
    if comps[0][n] <= 0.0:
        return _inapplicable(name, "leading real component is not positive", rho=rho)
    peaks, why = _component_chains(p, rho, list(comps), k)
    if why is not None:
        return _inapplicable(name, why, rho=rho)
    lead = p.coeffs[n].modulus()
    radius = sum(_peak_term(c, rho, pk, n, lead)
                 for c, pk in zip(comps, peaks))
    printed = sum(_printed_term(c, rho, pk, n, lead)
                  for c, pk in zip(comps, peaks))
    return BoundReport(name, True, radius,
                       {"rho": rho, "peaks": peaks, "radius_as_printed": printed},
                       "hypotheses verified")


def evaluate_all(p: QPolynomial, rho: float, include_advisory: bool = False):
    """All bounds at one rho, in BOUND_NAMES order."""
    reports = [bound_theorem1(p, rho), bound_corollary1(p, rho)]
    try:
        r_star, radius = optimize_r(p)
        reports.append(BoundReport("lemma4", True, radius,
                                   {"r_star": r_star}, "hypotheses verified"))
    except DegenerateAllZero as exc:
        reports.append(_inapplicable("lemma4", str(exc)))
    reports.extend([
        bound_cauchy(p), bound_gauss(p), check_enestrom_kakeya(p),
        bound_theorem2(p, rho), bound_remark1(p, rho), bound_theorem3(p, rho),
        bound_theorem4(p, rho), bound_theorem5(p, rho), bound_theorem6(p, rho),
    ])
    if include_advisory:
        reports.append(bound_gauss1849(p))
    return reports


def best_bound(p: QPolynomial, rho_grid=(1.0,)) -> BoundReport:
    """Smallest certified radius over a grid of rho values.

    The advisory gauss1849 value never participates.  The report names
    the winning bound and rho in its parameters.
    """
    rho_grid = [_check_rho(r) for r in rho_grid]
    if not rho_grid:
        raise NonPositiveScale("rho grid must not be empty")
    best = None
    for rho in rho_grid:
        for report in evaluate_all(p, rho):
            if report.applicable and (best is None or report.radius < best[0]):
                best = (report.radius, report.name, rho)
    if best is None:
        return _inapplicable("best_bound", "no bound applies",
                             grid=list(rho_grid))
    radius, winner, rho = best
    return BoundReport("best_bound", True, radius,
                       {"winner": winner, "rho": rho, "grid": list(rho_grid)},
                       "hypotheses verified")
