"""Quaternion arithmetic over double precision reals.

A quaternion is w + x i + y j + z k with the Hamilton rules
i^2 = j^2 = k^2 = ijk = -1.  All operations are pure functions on
immutable values; nothing here keeps state except the PRNG helpers,
which wrap numpy's PCG64 so that seeded draws are reproducible
bit-for-bit across runs and platforms.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DegenerateReal, HypothesisViolated

# Below this modulus, inversion is treated as division by zero (underflow
# guard).  Distinct from the 1e-14 degeneracy threshold of imaginary_unit:
# inversion failure is a hard error, degeneracy is a convention branch.
INVERSION_FLOOR = 1e-300
DEGENERACY_REL = 1e-14


class Quaternion:
    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0.0, x=0.0, y=0.0, z=0.0):
        self.w = float(w)
        self.x = float(x)
        self.y = float(y)
        self.z = float(z)

    def components(self):
        return (self.w, self.x, self.y, self.z)

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def modulus(self) -> float:
        # hypot is correctly rounded and exact when only one component is
        # nonzero; the Enestrom-Kakeya recovery test relies on that exactness.
        return math.hypot(self.w, self.x, self.y, self.z)

    def im_modulus(self) -> float:
        return math.hypot(self.x, self.y, self.z)

    def inverse(self) -> "Quaternion":
        m = self.modulus()
        if m < INVERSION_FLOOR:
            raise ZeroDivisionError("quaternion modulus below %.1e" % INVERSION_FLOOR)
        m2 = m * m
        return Quaternion(self.w / m2, -self.x / m2, -self.y / m2, -self.z / m2)

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x,
                              self.y + other.y, self.z + other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w - other.w, self.x - other.x,
                              self.y - other.y, self.z - other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w - other, self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a, b = self, other
            return Quaternion(
                a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
            )
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        # real * quaternion; reals are central so the order does not matter
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return self.components() == other.components()
        if isinstance(other, (int, float)):
            return self.components() == (float(other), 0.0, 0.0, 0.0)
        return NotImplemented

    def __hash__(self):
        return hash(self.components())

    def __abs__(self):
        return self.modulus()

    def __repr__(self):
        return "Quaternion(%r, %r, %r, %r)" % self.components()

    def to_json(self):
        return [self.w, self.x, self.y, self.z]

    @staticmethod
    def from_json(data) -> "Quaternion":
        if not (isinstance(data, (list, tuple)) and len(data) == 4):
            raise ValueError("quaternion JSON must be a [w, x, y, z] array")
        vals = [float(v) for v in data]
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("quaternion components must be finite")
        return Quaternion(*vals)


ZERO = Quaternion(0.0)
ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product a*b (non-commutative in general)."""
    return a * b


def inverse(q: Quaternion) -> Quaternion:
    """q^{-1} = conj(q) / |q|^2; raises ZeroDivisionError below the floor."""
    return q.inverse()


def angle(a: Quaternion, b: Quaternion) -> float:
    """Angle between two nonzero quaternions as 4-vectors, in [0, pi].

    arccos of the inner product over |a||b|; the cosine is clamped to
    [-1, 1] because rounding can push it marginally outside.
    """
    ma, mb = a.modulus(), b.modulus()
    if ma < INVERSION_FLOOR or mb < INVERSION_FLOOR:
        raise ZeroDivisionError("angle undefined for zero quaternion")
    dot = a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z
    c = dot / (ma * mb)
    c = max(-1.0, min(1.0, c))
    return math.acos(c)


def imaginary_unit(q: Quaternion) -> Quaternion:
    """Im(q)/|Im(q)|, the unit imaginary direction of q.

    Raises DegenerateReal when |Im(q)| < 1e-14 * max(1, |q|); the caller
    is then free to pick any unit imaginary direction.
    """
    im = q.im_modulus()
    if im < DEGENERACY_REL * max(1.0, q.modulus()):
        raise DegenerateReal("imaginary part below degeneracy threshold")
    return Quaternion(0.0, q.x / im, q.y / im, q.z / im)


def lemma3_rhs(q1: Quaternion, q2: Quaternion, theta: float) -> float:
    """(|q2| - |q1|) cos(theta) + (|q2| + |q1|) sin(theta).

    Preconditions are checked, not assumed: 0 <= theta <= pi/2,
    |q1| <= |q2|, and angle(q1, q2) <= 2*theta (tiny relative slack to
    absorb rounding).  Under them the value dominates |q2 - q1|.
    """
    if not (-1e-12 <= theta <= math.pi / 2 + 1e-12):
        raise HypothesisViolated("theta=%r outside [0, pi/2]" % theta)
    m1, m2 = q1.modulus(), q2.modulus()
    if m1 > m2 * (1.0 + 1e-12):
        raise HypothesisViolated("|q1|=%r exceeds |q2|=%r" % (m1, m2))
    ang = angle(q1, q2)
    if ang > 2.0 * theta + 1e-9:
        raise HypothesisViolated("angle %r exceeds 2*theta=%r" % (ang, 2 * theta))
    return (m2 - m1) * math.cos(theta) + (m2 + m1) * math.sin(theta)


def make_rng(seed: int) -> np.random.Generator:
    """Seeded PCG64 generator; the only stateful object in the package."""
    return np.random.Generator(np.random.PCG64(int(seed)))


def random_quaternion(rng: np.random.Generator) -> Quaternion:
    """Components independent uniform on [-1, 1]."""
    w, x, y, z = rng.uniform(-1.0, 1.0, size=4)
    return Quaternion(w, x, y, z)


def random_unit_quaternion(rng: np.random.Generator) -> Quaternion:
    """Uniform direction on the unit 3-sphere (normalized Gaussian draw)."""
    v = rng.standard_normal(4)
    n = math.hypot(*v)
    while n < 1e-12:
        v = rng.standard_normal(4)
        n = math.hypot(*v)
    return Quaternion(v[0] / n, v[1] / n, v[2] / n, v[3] / n)


def random_unit_imaginary(rng: np.random.Generator) -> Quaternion:
    """Uniform point of the imaginary unit sphere {q : q^2 = -1}."""
    v = rng.standard_normal(3)
    n = math.hypot(*v)
    while n < 1e-12:
        v = rng.standard_normal(3)
        n = math.hypot(*v)
    return Quaternion(0.0, v[0] / n, v[1] / n, v[2] / n)
