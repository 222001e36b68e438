"""Guaranteed enclosing balls for zeros of quaternion polynomials,
validated against an exact root oracle."""

from .bounds import (BOUND_NAMES, BoundReport, best_bound, bound_cauchy,
                     bound_corollary1, bound_gauss, bound_gauss1849,
                     bound_lemma4, bound_remark1, bound_theorem1,
                     bound_theorem2, bound_theorem3, bound_theorem4,
                     bound_theorem5, bound_theorem6, check_enestrom_kakeya,
                     evaluate_all, greatest_root_K, optimize_r)
from .companion import (companion_matrix, diag_similarity, gershgorin_balls,
                        is_singular, shifted)
from .errors import (BadIndices, DegenerateAllZero, DegenerateReal,
                     HypothesisViolated, NoConvergence, NonPositiveDiagonal,
                     NonPositiveScale, OracleInconsistent, QPBoundsError,
                     SideMismatch, SoundnessViolation, SpecInvalid,
                     SymmetrizationNotReal, ZeroLeading)
from .families import FamilySpec, generate_family, generate_one
from .harness import bench_rows, run_bench, run_verify, summarize, write_csv
from .qpolynomial import QPolynomial, Side, from_real
from .quaternion import (Quaternion, angle, imaginary_unit, lemma3_rhs,
                         make_rng, random_quaternion, random_unit_imaginary,
                         random_unit_quaternion)
from .roots import (SphereResolution, ZeroSet, all_zeros, all_zeros_batch,
                    complex_roots, max_zero_modulus_batch, resolve_sphere)

__version__ = "0.1.0"
