"""Polynomials with quaternion coefficients.

Because coefficients do not commute with the variable, a polynomial is
stored together with a side: RIGHT means sum_v t^v q_v (coefficients on
the right of the powers), LEFT means sum_v q_v t^v.  Multiplication is
the star product, plain coefficient convolution; it agrees with
pointwise multiplication only at arguments that commute with the
relevant coefficients, which is exactly what the zero-set machinery
exploits.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .errors import (NonPositiveScale, SideMismatch, SymmetrizationNotReal,
                     ZeroLeading)
from .quaternion import ZERO, Quaternion

TRIM_REL = 1e-14
SYMMETRIZE_REAL_REL = 1e-10


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


def _as_quaternion(value):
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float)):
        return Quaternion(float(value))
    raise TypeError("expected Quaternion or real, got %r" % type(value).__name__)


class QPolynomial:
    """Immutable; coefficients ascending by power, trailing near-zeros trimmed."""

    __slots__ = ("coeffs", "side")

    def __init__(self, coeffs, side=Side.RIGHT):
        if not isinstance(side, Side):
            raise TypeError("side must be a Side enum value")
        qs = [_as_quaternion(c) for c in coeffs]
        if not qs:
            qs = [ZERO]
        maxmod = max(q.modulus() for q in qs)
        cut = TRIM_REL * maxmod
        while len(qs) > 1 and qs[-1].modulus() <= cut:
            qs.pop()
        object.__setattr__(self, "coeffs", tuple(qs))
        object.__setattr__(self, "side", side)

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].modulus() == 0.0

    def leading(self) -> Quaternion:
        q = self.coeffs[-1]
        if q.modulus() == 0.0:
            raise ZeroLeading("zero polynomial has no leading coefficient")
        return q

    def max_coeff_modulus(self) -> float:
        return max(q.modulus() for q in self.coeffs)

    def moduli(self):
        return [q.modulus() for q in self.coeffs]

    def evaluate(self, t) -> Quaternion:
        """Horner; the accumulated factor multiplies on the side of the powers."""
        t = _as_quaternion(t)
        acc = self.coeffs[-1]
        if self.side is Side.RIGHT:
            for q in reversed(self.coeffs[:-1]):
                acc = t * acc + q
        else:
            for q in reversed(self.coeffs[:-1]):
                acc = acc * t + q
        return acc

    def conj_coeffs(self) -> "QPolynomial":
        """Conjugate every coefficient, keep the side."""
        return QPolynomial([q.conj() for q in self.coeffs], self.side)

    def side_dual(self) -> "QPolynomial":
        """Conjugate coefficients and flip the side.

        (sum t^v q_v) at conj(t0) conjugates to (sum conj(q_v) t0^v), so the
        dual's zero set is the conjugate of the original's.
        """
        other = Side.LEFT if self.side is Side.RIGHT else Side.RIGHT
        return QPolynomial([q.conj() for q in self.coeffs], other)

    def scale_argument(self, rho: float) -> "QPolynomial":
        """The polynomial t -> P(rho * t); coefficient v picks up rho^v."""
        rho = float(rho)
        if not (rho > 0.0) or not math.isfinite(rho):
            raise NonPositiveScale("argument scale must be finite and positive, got %r" % rho)
        return QPolynomial([q * rho ** v for v, q in enumerate(self.coeffs)], self.side)

    def star(self, other: "QPolynomial") -> "QPolynomial":
        """Coefficient convolution c_k = sum_i p_i q_{k-i}, order preserved."""
        if not isinstance(other, QPolynomial):
            raise TypeError("star expects a QPolynomial")
        if self.side is not other.side:
            raise SideMismatch("cannot star a %s with a %s polynomial"
                               % (self.side.value, other.side.value))
        p, q = self.coeffs, other.coeffs
        out = [ZERO] * (len(p) + len(q) - 1)
        for i, pi in enumerate(p):
            if pi.modulus() == 0.0:
                continue
            for j, qj in enumerate(q):
                out[i + j] = out[i + j] + pi * qj
        return QPolynomial(out, self.side)

    def symmetrize(self) -> "QPolynomial":
        """P star conj_coeffs(P); always has real coefficients.

        Coefficient k is sum_{i+j=k} q_i * conj(q_j), invariant under
        conjugation (swap i and j), hence real.  The imaginary residue of
        the computed product is checked against 1e-10 of the largest
        coefficient and then dropped, so callers get exactly real
        coefficients.  Zeros of P remain zeros of the result for either
        side.
        """
        product = self.star(self.conj_coeffs())
        scale = product.max_coeff_modulus()
        worst = max(q.im_modulus() for q in product.coeffs)
        if worst > SYMMETRIZE_REAL_REL * max(scale, 1e-300):
            raise SymmetrizationNotReal(
                "imaginary residue %.3e exceeds %.1e of scale %.3e"
                % (worst, SYMMETRIZE_REAL_REL, scale))
        return QPolynomial([Quaternion(q.w) for q in product.coeffs], self.side)

    def real_coeff_array(self) -> np.ndarray:
        """Real parts as a float array; only valid when coefficients are real."""
        worst = max(q.im_modulus() for q in self.coeffs)
        if worst > TRIM_REL * max(self.max_coeff_modulus(), 1e-300):
            raise ValueError("coefficients are not real")
        return np.array([q.w for q in self.coeffs], dtype=float)

    def __eq__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.side is other.side and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.side, self.coeffs))

    def __repr__(self):
        return "QPolynomial(%r, side=%s)" % (list(self.coeffs), self.side)

    def to_json(self):
        return {"side": self.side.value,
                "coeffs": [q.to_json() for q in self.coeffs]}

    @staticmethod
    def from_json(data) -> "QPolynomial":
        if not isinstance(data, dict):
            raise ValueError("polynomial JSON must be an object")
        try:
            side = Side(data["side"])
        except (KeyError, ValueError):
            raise ValueError('polynomial JSON needs "side": "left" or "right"')
        coeffs = data.get("coeffs")
        if not isinstance(coeffs, list) or not coeffs:
            raise ValueError('polynomial JSON needs a non-empty "coeffs" array')
        return QPolynomial([Quaternion.from_json(c) for c in coeffs], side)


def from_real(values, side=Side.RIGHT) -> QPolynomial:
    """Convenience wrapper for polynomials with real coefficients."""
    return QPolynomial([Quaternion(float(v)) for v in values], side)
