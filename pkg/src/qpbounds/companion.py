"""Companion matrices and Gershgorin enclosures for quaternion polynomials.

Matrices are plain nested lists of Quaternion.  Eigenvalues throughout
mean left eigenvalues, A v = t v with t applied on the left; for the
companion shapes built here the left spectrum equals the zero set of the
polynomial exactly, for either coefficient side.
"""

from __future__ import annotations

from .errors import NonPositiveDiagonal, ZeroLeading
from .qpolynomial import QPolynomial, Side
from .quaternion import ONE, ZERO, Quaternion

SINGULAR_TOL = 1e-10


def companion_matrix(p: QPolynomial):
    """n x n companion of a degree-n polynomial, shape chosen by side.

    LEFT (sum q_v t^v): ones on the superdiagonal, last row -q_n^{-1} q_v.
    An eigenvector is (1, t0, t0^2, ...), which needs the ones above the
    diagonal and the inverse on the left.
    RIGHT (sum t^v q_v): the transposed shape, ones on the subdiagonal and
    last column -q_v q_n^{-1}.  Transposing alone is not enough over the
    quaternions; the inverse has to move to the other side as well.
    """
    n = p.degree
    if n < 1:
        raise ValueError("companion matrix needs degree at least 1")
    if p.is_zero():
        raise ZeroLeading("zero polynomial has no companion matrix")
    lead_inv = p.leading().inverse()
    a = [[ZERO for _ in range(n)] for _ in range(n)]
    if p.side is Side.LEFT:
        for v in range(n - 1):
            a[v][v + 1] = ONE
        for v in range(n):
            a[n - 1][v] = -(lead_inv * p.coeffs[v])
    else:
        for v in range(n - 1):
            a[v + 1][v] = ONE
        for v in range(n):
            a[v][n - 1] = -(p.coeffs[v] * lead_inv)
    return a


def gershgorin_balls(a):
    """Row balls (center, radius); the left spectrum lies in their union."""
    balls = []
    for mu, row in enumerate(a):
        radius = 0.0
        for nu, entry in enumerate(row):
            if nu != mu:
                radius += entry.modulus()
        balls.append((row[mu], radius))
    return balls


def diag_similarity(a, d):
    """Conjugate by a positive real diagonal: entry (mu, nu) scales by d_nu / d_mu.

    Real scalars are central, so the left spectrum is unchanged while the
    off-diagonal masses (and with them the Gershgorin radii) rebalance.
    """
    n = len(a)
    d = [float(v) for v in d]
    if len(d) != n:
        raise ValueError("diagonal length %d does not match matrix order %d"
                         % (len(d), n))
    for v in d:
        if not v > 0.0:
            raise NonPositiveDiagonal("diagonal entries must be positive, got %r" % v)
    return [[a[mu][nu] * (d[nu] / d[mu]) for nu in range(n)] for mu in range(n)]


def shifted(a, t: Quaternion):
    """A - t I, the matrix whose singularity detects t as a left eigenvalue."""
    n = len(a)
    out = [row[:] for row in a]
    for mu in range(n):
        out[mu][mu] = out[mu][mu] - t
    return out


def is_singular(a, tol: float = SINGULAR_TOL) -> bool:
    """Rank test by quaternionic Gaussian elimination.

    Row operations multiply on the left, so the right null space (the home
    of left-eigenvectors) is preserved.  Pivots are chosen by modulus;
    singular means some pivot falls below tol times the largest entry of
    the input.
    """
    n = len(a)
    work = [row[:] for row in a]
    scale = max((work[mu][nu].modulus() for mu in range(n) for nu in range(n)),
                default=0.0)
    if scale == 0.0:
        return True
    cut = tol * scale
    for col in range(n):
        pivot_row = max(range(col, n), key=lambda r: work[r][col].modulus())
        if work[pivot_row][col].modulus() < cut:
            return True
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot_inv = work[col][col].inverse()
        for r in range(col + 1, n):
            factor = work[r][col] * pivot_inv
            if factor.modulus() == 0.0:
                continue
            for c in range(col, n):
                work[r][c] = work[r][c] - factor * work[col][c]
    return False
