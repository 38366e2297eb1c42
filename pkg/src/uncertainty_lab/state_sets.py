"""Classification of states by which parts of the correlation function vanish.

For a fixed non-commuting pair (A, B), a state with both spreads positive is
classified into three (overlapping) sets:

* ``s_ab``:   |C(A,B)| = 0 -- the deviation vectors are orthogonal, the lower
  bound on dA * dB is zero, and the observables are uncorrelated;
* ``s_comm``: Im C(A,B) = 0, equivalently <[A,B]> = 0 -- the commutator bound
  collapses while the correlation bound may stay positive;
* ``s_anti``: Re C(A,B) = 0 -- the classical covariance vanishes.

``s_ab`` is the intersection of the other two, and membership is always
relative to the zero tolerance recorded in the result.  Eigenstates of A or B
are excluded from all three sets by definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator

import numpy as np

from .core import (
    CommutingPair,
    DEFAULT_TOLERANCES,
    Observable,
    StateVector,
    Tolerances,
    _check_same_dim,
    commutator,
    haar_state,
)
from .correlations import correlation, pearson
from .moments import std_dev

__all__ = ["ClassificationResult", "ScanConfig", "classify", "membership_scan"]

_EQUIV_TOL = 1e-10


@dataclass(frozen=True)
class ClassificationResult:
    """Membership flags for one state, with the tolerances that produced them."""

    eigen_a: bool
    eigen_b: bool
    in_s_ab: bool
    in_s_comm: bool
    in_s_anti: bool
    pearson: float | None
    tolerances_used: Tolerances

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "eigen_a": self.eigen_a,
            "eigen_b": self.eigen_b,
            "in_s_ab": self.in_s_ab,
            "in_s_comm": self.in_s_comm,
            "in_s_anti": self.in_s_anti,
            "pearson": self.pearson,
            "tolerances_used": self.tolerances_used.to_json_dict(),
        }


@dataclass(frozen=True)
class ScanConfig:
    """Monte-Carlo scan over Haar-random states; deterministic per seed."""

    samples: int
    seed: int
    tolerances: Tolerances = DEFAULT_TOLERANCES

    def __post_init__(self) -> None:
        if self.samples < 0:
            raise ValueError(f"samples must be nonnegative, got {self.samples}")


def _noncommuting_commutator(a: Observable, b: Observable, tol: Tolerances) -> np.ndarray:
    comm = commutator(a, b)
    if float(np.linalg.norm(comm)) <= tol.tol_zero:
        raise CommutingPair(
            "the set definitions presuppose a non-commuting pair, but ||[A,B]|| "
            f"is below tol_zero = {tol.tol_zero:.3e}"
        )
    return comm


def classify(
    a: Observable, b: Observable, phi: StateVector, tol: Tolerances = DEFAULT_TOLERANCES
) -> ClassificationResult:
    """Classify one state for a non-commuting pair.

    Membership in ``s_comm`` is decided on Im C; the commutator expectation
    <[A,B]> = 2i Im C is computed independently and the two formulations are
    cross-checked against each other.  Deciding on Im C makes the inclusion
    s_ab => s_comm and s_anti hold structurally even at tolerance boundaries.
    """
    _check_same_dim(a.dim, b.dim)
    _check_same_dim(a.dim, phi.dim)
    comm = _noncommuting_commutator(a, b, tol)
    delta_a = std_dev(a, phi, tol)
    delta_b = std_dev(b, phi, tol)
    eigen_a = delta_a <= tol.eps_spread
    eigen_b = delta_b <= tol.eps_spread
    spreads_ok = not eigen_a and not eigen_b

    c = correlation(a, b, phi)
    comm_expect = abs(complex(np.vdot(phi.amps, comm @ phi.amps)))
    if abs(comm_expect - 2.0 * abs(c.imag)) > _EQUIV_TOL:
        raise ArithmeticError(
            f"|<[A,B]>| = {comm_expect!r} disagrees with 2|Im C| = {2.0 * abs(c.imag)!r}"
        )

    return ClassificationResult(
        eigen_a=eigen_a,
        eigen_b=eigen_b,
        in_s_ab=spreads_ok and abs(c) <= tol.tol_zero,
        in_s_comm=spreads_ok and abs(c.imag) <= tol.tol_zero,
        in_s_anti=spreads_ok and abs(c.real) <= tol.tol_zero,
        pearson=pearson(a, b, phi, tol) if spreads_ok else None,
        tolerances_used=tol,
    )


def membership_scan(
    a: Observable, b: Observable, config: ScanConfig
) -> Iterator[tuple[StateVector, ClassificationResult]]:
    """Classify Haar-random states drawn from the configured seed.

    Guards are checked eagerly; the rows stream lazily.  Sample i is
    generated from an RNG substream keyed by (seed, i), so the output is
    deterministic, independent of how the index range might be partitioned
    across workers, and ordered by sample index.
    """
    _check_same_dim(a.dim, b.dim)
    _noncommuting_commutator(a, b, config.tolerances)

    def rows() -> Iterator[tuple[StateVector, ClassificationResult]]:
        for index in range(config.samples):
            rng = np.random.default_rng((config.seed, index))
            phi = haar_state(a.dim, rng)
            yield phi, classify(a, b, phi, config.tolerances)

    return rows()
