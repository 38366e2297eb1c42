"""First and second moments of an observable in a pure state.

The standard deviation of ``F`` in ``phi`` is the norm of the deviation
vector ``(F - <F> I)|phi>``; it must agree with the moment form
``sqrt(<F^2> - <F>^2)``, and both routes are computed here so drift in
either one is caught immediately.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOLERANCES,
    Observable,
    StateVector,
    Tolerances,
    ValidationError,
    _check_same_dim,
    _freeze,
)

__all__ = [
    "DeviationVector",
    "deviation_vector",
    "expectation",
    "is_eigenstate",
    "orthogonal_unit",
    "std_dev",
]

# Agreement gate between the norm-form and moment-form variances, relative to
# the second moment (the natural scale of the computation).
_CROSS_CHECK_TOL = 1e-10


@dataclass(frozen=True)
class DeviationVector:
    """The vector (F - <F> I)|phi> together with its norm (the spread of F)."""

    vec: np.ndarray
    norm: float


def expectation(f: Observable, phi: StateVector, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Expectation value <phi|F|phi>, guaranteed real for a valid observable."""
    _check_same_dim(f.dim, phi.dim)
    val = complex(np.vdot(phi.amps, f.matrix @ phi.amps))
    if abs(val.imag) > tol.tol_zero:
        raise ValidationError(
            f"expectation has imaginary part {val.imag:.3e} beyond tol_zero; "
            "the observable is effectively non-Hermitian"
        )
    return val.real


def deviation_vector(f: Observable, phi: StateVector) -> DeviationVector:
    """(F - <F> I)|phi>.  Always orthogonal to |phi> up to roundoff."""
    _check_same_dim(f.dim, phi.dim)
    mean = complex(np.vdot(phi.amps, f.matrix @ phi.amps)).real
    vec = f.matrix @ phi.amps - mean * phi.amps
    return DeviationVector(vec=_freeze(vec), norm=float(np.linalg.norm(vec)))


def std_dev(f: Observable, phi: StateVector, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Standard deviation of F in phi, computed as the deviation-vector norm.

    The moment form sqrt(<F^2> - <F>^2) is evaluated as a cross-check; the
    comparison is made on the variances (scaled by the second moment) because
    the square root is ill-conditioned near eigenstates.
    """
    dv = deviation_vector(f, phi)
    f_phi = f.matrix @ phi.amps
    m1 = complex(np.vdot(phi.amps, f_phi)).real
    m2 = complex(np.vdot(phi.amps, f.matrix @ f_phi)).real
    var = m2 - m1 * m1
    if abs(dv.norm**2 - var) > _CROSS_CHECK_TOL * max(1.0, abs(m2)):
        raise ArithmeticError(
            f"norm-form variance {dv.norm ** 2!r} and moment-form variance {var!r} disagree"
        )
    return dv.norm


def orthogonal_unit(
    f: Observable, phi: StateVector, tol: Tolerances = DEFAULT_TOLERANCES
) -> np.ndarray | None:
    """Unit vector along the deviation vector, or None when the spread vanishes.

    The result is orthogonal to |phi>.  Its global phase is inherited from the
    raw deviation vector; every consumer uses moduli of inner products, which
    are phase-invariant.
    """
    dv = deviation_vector(f, phi)
    if dv.norm <= tol.eps_spread:
        return None
    return _freeze(dv.vec / dv.norm)


def is_eigenstate(f: Observable, phi: StateVector, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """True when the spread of F in phi is numerically zero (eps_spread)."""
    return std_dev(f, phi, tol) <= tol.eps_spread
