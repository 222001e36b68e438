import math

import pytest

from qpbounds.bounds import (BOUND_NAMES, best_bound, bound_cauchy,
                             bound_corollary1, bound_gauss, bound_gauss1849,
                             bound_lemma4, bound_remark1, bound_theorem1,
                             bound_theorem2, bound_theorem3, bound_theorem4,
                             bound_theorem5, bound_theorem6,
                             check_enestrom_kakeya, evaluate_all,
                             greatest_root_K, optimize_r)
from qpbounds.errors import (BadIndices, DegenerateAllZero, HypothesisViolated,
                             NonPositiveScale)
from qpbounds.families import FamilySpec, generate_one
from qpbounds.qpolynomial import QPolynomial, Side, from_real
from qpbounds.quaternion import I, J, Quaternion, make_rng
from qpbounds.roots import all_zeros

PHI = (1.0 + math.sqrt(5.0)) / 2.0


def test_greatest_root_values():
    assert abs(greatest_root_K(2, 1) - PHI) <= 1e-12
    # largest root of K^4 - 2K^3 + 1 beyond the factor K - 1
    assert abs(greatest_root_K(3, 2) - 1.839286755214161) <= 1e-12
    assert greatest_root_K(3, 0) == 1.0
    assert greatest_root_K(1, 0) == 1.0


def test_greatest_root_is_a_root():
    for n in range(2, 9):
        for l in range(1, n):
            k = greatest_root_K(n, l)
            assert abs(k ** (n + 1) - k ** n - k ** (l + 1) + 1) <= 1e-10
            assert 1.0 < k < 2.0


def test_greatest_root_bad_indices():
    with pytest.raises(BadIndices):
        greatest_root_K(2, 2)
    with pytest.raises(BadIndices):
        greatest_root_K(0, 0)
    with pytest.raises(BadIndices):
        greatest_root_K(3, -1)


def test_theorem1_golden_ratio():
    rep = bound_theorem1(from_real([-1, -1, 1]), 1.0)
    assert rep.applicable
    assert abs(rep.radius - PHI) <= 1e-12
    # sharp: the largest zero of t^2 - t - 1 is the golden ratio itself
    assert abs(all_zeros(from_real([-1, -1, 1])).max_modulus() - PHI) <= 1e-9


def test_theorem1_gap_case():
    rep = bound_theorem1(from_real([0.5, 0, 0, 1]), 1.0)
    assert rep.applicable and rep.radius == 1.0 and rep.parameters["l"] == 0


def test_theorem1_inapplicable_when_moduli_too_big():
    rep = bound_theorem1(from_real([1, 3, 1]), 1.0)
    assert not rep.applicable and rep.radius is None


def test_theorem1_argument_checks():
    p = from_real([-1, -1, 1])
    with pytest.raises(NonPositiveScale):
        bound_theorem1(p, 0.0)
    with pytest.raises(BadIndices):
        bound_theorem1(p, 1.0, l=2)


def test_corollary1_scaled():
    rep = bound_corollary1(from_real([0.0625, 0.25, 1]), 2.0)
    assert rep.applicable
    assert abs(rep.radius - PHI / 2.0) <= 1e-12


def test_lemma4_max_form():
    # sum arm: r small makes the coefficient sum dominate
    rep = bound_lemma4(from_real([8, 0, 0, 1]), 1.0)
    assert rep.applicable and rep.radius == 8.0
    rep = bound_lemma4(from_real([8, 0, 0, 1]), 10.0)
    assert rep.radius == 10.0
    with pytest.raises(NonPositiveScale):
        bound_lemma4(from_real([1, 1]), 0.0)
    with pytest.raises(BadIndices):
        bound_lemma4(from_real([1, 1, 1]), 1.0, l=5)


@pytest.mark.parametrize("n,c", [(2, 4.0), (3, 8.0), (4, 0.0625), (5, 1.0)])
def test_optimize_r_pure_power(n, c):
    coeffs = [c] + [0.0] * (n - 1) + [1.0]
    r_star, radius = optimize_r(from_real(coeffs))
    assert abs(r_star - c ** (1.0 / n)) <= 1e-10
    assert abs(radius - c ** (1.0 / n)) <= 1e-10


def test_optimize_r_golden():
    r_star, radius = optimize_r(from_real([-1, -1, 1]))
    assert abs(r_star - PHI) <= 1e-10
    assert abs(radius - PHI) <= 1e-10


def test_optimize_r_degenerate():
    with pytest.raises(DegenerateAllZero):
        optimize_r(from_real([0, 0, 1]))


def test_cauchy_values():
    assert bound_cauchy(from_real([1, 0, 1])).radius == 2.0
    p = QPolynomial([Quaternion(), Quaternion(0, 3, 4, 0), Quaternion(1)])
    assert bound_cauchy(p).radius == 6.0


def test_gauss_values():
    rep = bound_gauss(from_real([1, -2, 1]))
    assert abs(rep.radius - 4.0 * math.sqrt(2.0)) <= 1e-12
    assert bound_gauss(from_real([0, 0, 0, 1])).radius == 0.0
    assert not bound_gauss(QPolynomial([I, Quaternion(1)])).applicable


def test_gauss1849_is_advisory_only():
    """The historical construction undershoots; it is reported but never
    allowed to act as a certificate."""
    p = from_real([1, 100, 1])
    rep = bound_gauss1849(p)
    assert rep.applicable
    assert rep.radius < 13.0  # the actual largest zero modulus is near 100
    oracle = all_zeros(p).max_modulus()
    assert oracle > 99.0
    names = [r.name for r in evaluate_all(p, 1.0)]
    assert "gauss1849" not in names
    assert names == BOUND_NAMES
    with_adv = [r.name for r in evaluate_all(p, 1.0, include_advisory=True)]
    assert with_adv[-1] == "gauss1849"
    best = best_bound(p, (1.0,))
    assert best.radius >= oracle


def test_enestrom_kakeya():
    assert check_enestrom_kakeya(from_real([0.2, 0.5, 1.0])).radius == 1.0
    assert not check_enestrom_kakeya(from_real([1.0, 0.5, 0.2])).applicable
    assert not check_enestrom_kakeya(from_real([-0.1, 0.5, 1.0])).applicable
    assert not check_enestrom_kakeya(QPolynomial([I, Quaternion(1)])).applicable


def test_theorem2_frozen_value():
    p = QPolynomial([I, I * 2.0, I], Side.RIGHT)
    rep = bound_theorem2(p, 1.0, 1)
    assert rep.applicable
    assert abs(rep.radius - (3.0 + 8.0 * math.sqrt(2.0))) <= 1e-12


def test_theorem2_recovers_enestrom_kakeya_exactly():
    rng = make_rng(77)
    for _ in range(100):
        p = generate_one(FamilySpec.EK, 5, rng)
        rep = bound_theorem2(p, 1.0, k=5)
        assert rep.radius == 1.0


def test_theorem2_chain_violation():
    # moduli 1, 0, 1 cannot be unimodal with positive interior
    rep = bound_theorem2(from_real([1, 0, 1]), 1.0, k=1)
    assert not rep.applicable
    with pytest.raises(BadIndices):
        bound_theorem2(from_real([1, 1]), 1.0, k=7)


def test_theorem2_sound_on_its_family():
    rng = make_rng(17)
    for _ in range(25):
        p = generate_one(FamilySpec.THM2, 4, rng)
        rep = bound_theorem2(p, 1.0)
        oracle = all_zeros(p).max_modulus()
        assert rep.radius >= oracle * (1.0 - 1e-9)


def test_remark1_scan_and_explicit():
    rng = make_rng(19)
    p = generate_one(FamilySpec.REMARK1, 5, rng)
    scan = bound_remark1(p, 1.0)
    assert scan.applicable
    theta = scan.parameters["theta"]
    gamma = Quaternion(*scan.parameters["gamma"])
    explicit = bound_remark1(p, 1.0, k=scan.parameters["k"],
                             theta=theta + 1e-6, gamma=gamma)
    assert abs(explicit.radius - scan.radius) <= 1e-3


def test_remark1_rejects_false_assertions():
    p = QPolynomial([I, Quaternion(1)])
    with pytest.raises(HypothesisViolated):
        bound_remark1(p, 1.0, theta=0.1, gamma=Quaternion(1))  # angle is pi/2
    with pytest.raises(HypothesisViolated):
        bound_remark1(p, 1.0, theta=2.0, gamma=Quaternion(1))
    with pytest.raises(HypothesisViolated):
        bound_remark1(p, 1.0, theta=0.5)


def test_remark1_no_direction_certifies():
    # coefficients 1 and -1: no candidate direction is within a quarter
    # turn of both
    rep = bound_remark1(from_real([-1, 1]), 1.0)
    assert not rep.applicable


def test_remark1_aligned_coefficients_tighten_theorem2():
    # all coefficients share one direction: remark1 certifies theta ~ 0 and
    # drops the distance-from-real correction theorem2 pays
    p = QPolynomial([I * 0.5, I, I * 0.5], Side.RIGHT)
    r1 = bound_remark1(p, 1.0)
    r2 = bound_theorem2(p, 1.0)
    assert r1.applicable and r1.radius < r2.radius


def test_theorem3_requires_positive_real_lead():
    assert not bound_theorem3(QPolynomial([Quaternion(1), I]), 1.0).applicable
    rep = bound_theorem3(from_real([0.5, 1.0, 0.5]), 1.0)
    assert rep.applicable


def test_theorems_4_5_6_fixed_peak_terms():
    """Each chain term subtracts its own endpoint; on t + 1 every variant
    must cover the zero at -1 (the alternative printed form would not)."""
    p = from_real([1, 1])
    for fn in (bound_theorem4, bound_theorem5, bound_theorem6):
        rep = fn(p, 1.0)
        assert rep.applicable
        assert rep.radius >= 1.0
        assert rep.parameters["radius_as_printed"] < rep.radius


def test_theorem6_identical_component_chains():
    """q_j = (1+i+j+k) c_j makes all four component chains equal, so the
    radius splits into four equal peak terms; with rho = 1, c = (1, 2, 1)
    each term is 3/2 and the per-term printed variant sits exactly 2 lower."""
    u = Quaternion(1.0, 1.0, 1.0, 1.0)
    p = QPolynomial([u * c for c in (1.0, 2.0, 1.0)])
    rep = bound_theorem6(p, 1.0)
    assert rep.applicable
    assert rep.parameters["peaks"] == [1, 1, 1, 1]
    assert abs(rep.radius - 6.0) <= 1e-12
    assert abs(rep.parameters["radius_as_printed"] - 4.0) <= 1e-12
    # the only zero is -1, so the corrected value covers it with room
    assert all_zeros(p).max_modulus() == pytest.approx(1.0, abs=1e-9)


def test_theorems_4_5_6_sound_on_their_families():
    cases = [(FamilySpec.THM4, bound_theorem4), (FamilySpec.THM5, bound_theorem5),
             (FamilySpec.THM6, bound_theorem6)]
    rng = make_rng(23)
    for fam, fn in cases:
        for _ in range(15):
            p = generate_one(fam, 4, rng)
            rep = fn(p, 1.0)
            oracle = all_zeros(p).max_modulus()
            assert rep.radius >= oracle * (1.0 - 1e-9)
            assert rep.radius >= 1.0  # never shrinks below rho


def test_theorem456_explicit_peaks():
    p = from_real([0.2, 1.0, 0.5])
    rep = bound_theorem4(p, 1.0, k=(1, 0))
    assert rep.applicable and rep.parameters["peaks"] == [1, 0]
    with pytest.raises(BadIndices):
        bound_theorem4(p, 1.0, k=(1,))
    with pytest.raises(BadIndices):
        bound_theorem6(p, 1.0, k=(1, 1, 1, 9))


def test_evaluate_all_order_and_names():
    reports = evaluate_all(from_real([-1, -1, 1]), 1.0)
    assert [r.name for r in reports] == BOUND_NAMES
    for r in reports:
        assert (r.radius is not None) == r.applicable


def test_best_bound_picks_winner():
    rep = best_bound(from_real([1, 0, 1]), (1.0,))
    assert rep.applicable and rep.radius == 1.0
    assert rep.parameters["winner"] in BOUND_NAMES
    rep = best_bound(from_real([1, 0, 1]), (0.5, 1.0, 2.0))
    assert rep.radius <= 1.0 + 1e-12
    with pytest.raises(NonPositiveScale):
        best_bound(from_real([1, 1]), ())
    with pytest.raises(NonPositiveScale):
        best_bound(from_real([1, 1]), (-1.0,))


def test_report_json_shape():
    rep = bound_cauchy(from_real([1, 0, 1]))
    data = rep.to_json()
    assert set(data) == {"name", "applicable", "radius", "parameters",
                        "hypothesis_detail"}


def test_degenerate_inputs_are_inapplicable():
    constant = from_real([3.0])
    for rep in evaluate_all(constant, 1.0):
        assert not rep.applicable
    assert not best_bound(constant, (1.0,)).applicable
