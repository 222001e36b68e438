import math

import pytest

from qpbounds.errors import OracleInconsistent
from qpbounds.qpolynomial import QPolynomial, Side, from_real
from qpbounds.quaternion import (I, J, K, Quaternion, make_rng,
                                 random_quaternion, random_unit_imaginary)
from qpbounds.roots import (ZeroSet, all_zeros, all_zeros_batch, complex_roots,
                            max_zero_modulus_batch, resolve_sphere)


def test_complex_roots_simple():
    # (t - 1)(t - 2)(t - 3)
    roots = complex_roots(from_real([-6, 11, -6, 1]))
    assert len(roots) == 3
    for r, expect in zip(roots, (1.0, 2.0, 3.0)):
        assert abs(r - expect) <= 1e-9


def test_complex_roots_sorted_by_real_then_imag():
    roots = complex_roots(from_real([1, 0, 1]))  # +-i
    assert roots[0].imag < roots[1].imag
    assert roots == sorted(roots, key=lambda z: (z.real, z.imag))


def test_complex_roots_double_root():
    roots = complex_roots(from_real([1, -2, 1]))  # (t - 1)^2
    assert len(roots) == 2
    for r in roots:
        assert abs(r - 1.0) <= 1e-6


def test_complex_roots_trivial_cases():
    assert complex_roots(from_real([5.0])) == []
    roots = complex_roots(from_real([-3, 1]))
    assert len(roots) == 1 and abs(roots[0] - 3.0) <= 1e-12


def test_resolve_whole_sphere():
    res = resolve_sphere(from_real([1, 0, 1]), 0.0, 1.0)
    assert res.kind == "sphere" and (res.x, res.y) == (0.0, 1.0)
    assert res.residual <= 1e-14


def test_resolve_empty():
    res = resolve_sphere(from_real([1, 0, 1]), 0.0, 2.0)
    assert res.kind == "empty"
    res = resolve_sphere(from_real([1, 0, 1]), 3.0, 0.0)
    assert res.kind == "empty"


def test_resolve_isolated_right():
    # (t - i) star (t - j): the sphere through i holds exactly one zero
    p = QPolynomial([K, Quaternion(0, -1, -1, 0), Quaternion(1)], Side.RIGHT)
    res = resolve_sphere(p, 0.0, 1.0)
    assert res.kind == "isolated"
    assert (res.point - I).modulus() <= 1e-12


def test_resolve_isolated_left():
    # same coefficients on the left side pick the other factor's zero
    p = QPolynomial([K, Quaternion(0, -1, -1, 0), Quaternion(1)], Side.LEFT)
    res = resolve_sphere(p, 0.0, 1.0)
    assert res.kind == "isolated"
    assert (res.point - J).modulus() <= 1e-12


def test_resolve_real_point():
    res = resolve_sphere(from_real([-1, 1]), 1.0, 0.0)
    assert res.kind == "isolated" and res.point == Quaternion(1.0)
    with pytest.raises(ValueError):
        resolve_sphere(from_real([1, 1]), 0.0, -1.0)


def test_all_zeros_unit_sphere():
    zs = all_zeros(from_real([1, 0, 1]))
    assert zs.isolated == []
    assert len(zs.spheres) == 1
    x, y = zs.spheres[0]
    assert abs(x) <= 1e-12 and abs(y - 1.0) <= 1e-12
    assert zs.sphere_mult == [2]
    assert zs.total_multiplicity() == 2
    assert zs.max_modulus() == pytest.approx(1.0, abs=1e-12)


def test_all_zeros_spherical_pair_collapses():
    """(t - i) star (t - j) has a single zero: only i survives, with the
    full multiplicity of the pair."""
    p = QPolynomial([K, Quaternion(0, -1, -1, 0), Quaternion(1)], Side.RIGHT)
    zs = all_zeros(p)
    assert zs.spheres == []
    assert len(zs.isolated) == 1
    assert (zs.isolated[0] - I).modulus() <= 1e-10
    assert zs.isolated_mult == [2]


def test_all_zeros_triple_real_root():
    zs = all_zeros(from_real([-1, 3, -3, 1]))  # (t - 1)^3
    assert zs.spheres == []
    assert len(zs.isolated) == 1
    assert (zs.isolated[0] - Quaternion(1.0)).modulus() <= 1e-9
    assert zs.isolated_mult == [3]


def test_all_zeros_double_real_root():
    zs = all_zeros(from_real([1, -2, 1]))
    assert len(zs.isolated) == 1 and zs.isolated_mult == [2]
    assert (zs.isolated[0] - Quaternion(1.0)).modulus() <= 1e-9


def test_all_zeros_mixed_sphere_and_point():
    # (t^2 + 1) star (t - 2i): one whole sphere and one zero of modulus 2
    p = from_real([1, 0, 1]).star(QPolynomial([Quaternion(0, -2), Quaternion(1)]))
    zs = all_zeros(p)
    assert len(zs.spheres) == 1 and len(zs.isolated) == 1
    x, y = zs.spheres[0]
    assert abs(x) <= 1e-10 and abs(y - 1.0) <= 1e-10
    assert zs.sphere_mult == [1] or zs.sphere_mult == [2]
    assert abs(zs.isolated[0].modulus() - 2.0) <= 1e-10
    assert zs.total_multiplicity() == 3


def test_all_zeros_residuals_small():
    rng = make_rng(4)
    for _ in range(25):
        p = QPolynomial([random_quaternion(rng) for _ in range(5)]
                        + [Quaternion(1)])
        zs = all_zeros(p)
        assert zs.total_multiplicity() == 5
        scale = p.max_coeff_modulus()
        for q in zs.isolated:
            assert p.evaluate(q).modulus() <= 1e-9 * scale * max(1.0, q.modulus()) ** 5


def test_all_zeros_is_deterministic():
    p = from_real([2, 0, 0, 1])
    a = all_zeros(p).to_json()
    b = all_zeros(p).to_json()
    assert a == b


def test_all_zeros_edge_inputs():
    with pytest.raises(ValueError):
        all_zeros(QPolynomial([Quaternion()]))
    zs = all_zeros(from_real([3.0]))
    assert zs.total_multiplicity() == 0 and zs.max_modulus() is None


def test_zero_set_json_shape():
    data = all_zeros(from_real([1, 0, 1])).to_json()
    assert set(data) == {"isolated", "spheres", "residual_max"}
    assert data["spheres"] == [[0.0, 1.0]]


def test_batch_matches_single():
    rng = make_rng(6)
    polys = [QPolynomial([random_quaternion(rng) for _ in range(d + 1)])
             for d in (2, 3, 4, 2, 5)]
    polys = [p if p.degree >= 1 else from_real([1, 1]) for p in polys]
    batch = all_zeros_batch(polys)
    for p, zs in zip(polys, batch):
        assert isinstance(zs, ZeroSet)
        single = all_zeros(p)
        assert len(single.isolated) == len(zs.isolated)
        for a, b in zip(single.isolated, zs.isolated):
            assert (a - b).modulus() <= 1e-10
        assert single.spheres == pytest.approx(zs.spheres)


def test_max_zero_modulus_batch():
    polys = [from_real([1, 0, 1]), from_real([-6, 11, -6, 1])]
    mods = max_zero_modulus_batch(polys)
    assert mods[0] == pytest.approx(1.0, abs=1e-12)
    assert mods[1] == pytest.approx(3.0, abs=1e-9)


def test_conjugation_duality():
    rng = make_rng(12)
    for _ in range(10):
        p = QPolynomial([random_quaternion(rng) for _ in range(4)]
                        + [Quaternion(1)])
        zs = all_zeros(p)
        dual = all_zeros(p.side_dual())
        a = sorted(q.conj().components() for q in zs.isolated)
        b = sorted(q.components() for q in dual.isolated)
        assert len(a) == len(b)
        for qa, qb in zip(a, b):
            assert max(abs(u - v) for u, v in zip(qa, qb)) <= 1e-8


def test_sphere_invariance_under_unit_direction():
    # every point of a reported sphere really is a zero
    zs = all_zeros(from_real([4, 0, 4, 0, 1]))  # (t^2 + 2)^2
    assert len(zs.spheres) == 1
    x, y = zs.spheres[0]
    assert abs(y - math.sqrt(2.0)) <= 1e-9
    rng = make_rng(31)
    p = from_real([4, 0, 4, 0, 1])
    for _ in range(20):
        u = random_unit_imaginary(rng)
        assert p.evaluate(Quaternion(x) + u * y).modulus() <= 1e-9
