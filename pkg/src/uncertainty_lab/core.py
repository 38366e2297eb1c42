"""Validated complex linear-algebra primitives shared by every other module.

Conventions used throughout the package:

* vectors and matrices are dense ``numpy`` arrays of ``complex128``;
* the inner product ``inner(u, v)`` is conjugate-linear in its *first*
  argument;
* a complex scalar serializes to JSON as a two-element array ``[re, im]``,
  a matrix as ``{"dim": d, "entries": [[...d rows of d pairs...]]}`` and a
  state as ``{"dim": d, "amps": [...d pairs...]}``.

All wrapper objects are immutable after construction: the underlying numpy
buffers are private copies with the writeable flag cleared, so instances can
be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Any, Sequence

import numpy as np

__all__ = [
    "CommutingPair",
    "DEFAULT_TOLERANCES",
    "DegenerateSpread",
    "DimensionMismatch",
    "DimensionTooSmall",
    "Observable",
    "StateVector",
    "Tolerances",
    "ValidationError",
    "commutator",
    "complex_from_pair",
    "complex_to_pair",
    "haar_state",
    "identity",
    "inner",
    "observable_from_json_dict",
    "observable_to_json_dict",
    "state_from_json_dict",
    "state_to_json_dict",
    "validate_observable",
]


class ValidationError(ValueError):
    """Input fails a structural requirement (shape, finiteness, hermiticity, norm)."""


class DimensionMismatch(ValueError):
    """Operands live in spaces of different dimension."""


class DegenerateSpread(ValueError):
    """A correlation coefficient was requested where a standard deviation vanishes."""


class CommutingPair(ValueError):
    """An operation that presupposes a non-commuting pair got commuting observables."""


class DimensionTooSmall(ValueError):
    """The requested search needs dimension at least 3."""


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds used by validation and classification.

    tol_herm   -- admissible entrywise hermiticity defect of an observable
    tol_norm   -- admissible deviation of a state norm from 1
    tol_zero   -- threshold under which a scalar counts as (numerically) zero
    eps_spread -- threshold under which a standard deviation counts as zero
    """

    tol_herm: float = 1e-12
    tol_norm: float = 1e-12
    tol_zero: float = 1e-10
    eps_spread: float = 1e-6

    def __post_init__(self) -> None:
        for name, value in asdict(self).items():
            if not (np.isfinite(value) and value > 0.0):
                raise ValidationError(f"tolerance {name} must be strictly positive, got {value!r}")

    def to_json_dict(self) -> dict[str, float]:
        return {k: float(v) for k, v in asdict(self).items()}


DEFAULT_TOLERANCES = Tolerances()


def _as_complex_array(raw: Any, ndim: int) -> np.ndarray:
    arr = np.asarray(raw, dtype=np.complex128)
    if arr.ndim != ndim:
        raise ValidationError(f"expected a {ndim}-dimensional array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValidationError("entries must be finite (no NaN/Inf)")
    return arr


def _freeze(arr: np.ndarray) -> np.ndarray:
    out = arr.copy()
    out.flags.writeable = False
    return out


class Observable:
    """A d x d complex matrix, validated Hermitian at construction.

    Hermiticity is enforced once here rather than re-checked by every
    downstream formula.  Supports ``+``, ``-``, unary ``-`` and scaling by a
    real number, all of which preserve hermiticity.
    """

    __slots__ = ("_matrix",)

    def __init__(self, matrix: Any, tol: Tolerances = DEFAULT_TOLERANCES):
        arr = _as_complex_array(matrix, 2)
        n, m = arr.shape
        if n != m:
            raise ValidationError(f"matrix must be square, got shape {arr.shape}")
        if n < 2:
            raise ValidationError(f"observable dimension must be at least 2, got {n}")
        defect = float(np.max(np.abs(arr - arr.conj().T)))
        if defect > tol.tol_herm:
            raise ValidationError(
                f"matrix is not Hermitian: max |M[i,j] - conj(M[j,i])| = {defect:.3e} "
                f"> tol_herm = {tol.tol_herm:.3e}"
            )
        object.__setattr__(self, "_matrix", _freeze(arr))

    @classmethod
    def _wrap(cls, matrix: np.ndarray) -> "Observable":
        # Fast path for matrices that are Hermitian by construction (sums,
        # real scalings of already-validated observables).
        obj = object.__new__(cls)
        object.__setattr__(obj, "_matrix", _freeze(matrix))
        return obj

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("Observable is immutable")

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    def __add__(self, other: "Observable") -> "Observable":
        if not isinstance(other, Observable):
            return NotImplemented
        _check_same_dim(self.dim, other.dim)
        return Observable._wrap(self._matrix + other._matrix)

    def __sub__(self, other: "Observable") -> "Observable":
        if not isinstance(other, Observable):
            return NotImplemented
        _check_same_dim(self.dim, other.dim)
        return Observable._wrap(self._matrix - other._matrix)

    def __neg__(self) -> "Observable":
        return Observable._wrap(-self._matrix)

    def __mul__(self, scalar: float) -> "Observable":
        if isinstance(scalar, complex) and scalar.imag != 0.0:
            raise ValidationError("only real scalings preserve hermiticity")
        return Observable._wrap(self._matrix * float(scalar))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Observable(dim={self.dim})"


class StateVector:
    """A normalized complex d-vector representing a pure state."""

    __slots__ = ("_amps",)

    def __init__(self, amps: Any, tol: Tolerances = DEFAULT_TOLERANCES):
        arr = _as_complex_array(amps, 1)
        if arr.shape[0] < 1:
            raise ValidationError("state vector must have at least one amplitude")
        nrm = float(np.linalg.norm(arr))
        if abs(nrm - 1.0) > tol.tol_norm:
            raise ValidationError(f"state is not normalized: ||amps|| = {nrm!r}")
        object.__setattr__(self, "_amps", _freeze(arr))

    @classmethod
    def normalized(cls, raw: Any, tol: Tolerances = DEFAULT_TOLERANCES) -> "StateVector":
        """Normalize a nonzero raw vector and wrap it."""
        arr = _as_complex_array(raw, 1)
        nrm = float(np.linalg.norm(arr))
        if nrm == 0.0:
            raise ValidationError("cannot normalize the zero vector")
        return cls(arr / nrm, tol)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("StateVector is immutable")

    @property
    def amps(self) -> np.ndarray:
        return self._amps

    @property
    def dim(self) -> int:
        return self._amps.shape[0]

    def __repr__(self) -> str:
        return f"StateVector(dim={self.dim})"


def _check_same_dim(da: int, db: int) -> None:
    if da != db:
        raise DimensionMismatch(f"dimension mismatch: {da} != {db}")


def _vector_of(v: Any) -> np.ndarray:
    if isinstance(v, StateVector):
        return v.amps
    return _as_complex_array(v, 1)


def inner(u: Any, v: Any) -> complex:
    """Inner product <u|v>, conjugate-linear in the first argument."""
    ua, va = _vector_of(u), _vector_of(v)
    _check_same_dim(ua.shape[0], va.shape[0])
    return complex(np.vdot(ua, va))


def commutator(a: Observable, b: Observable) -> np.ndarray:
    """AB - BA as a raw matrix.  For Hermitian A, B the result is anti-Hermitian."""
    _check_same_dim(a.dim, b.dim)
    return a.matrix @ b.matrix - b.matrix @ a.matrix


def validate_observable(raw: Any, tol: Tolerances = DEFAULT_TOLERANCES) -> Observable:
    """Validate a raw square matrix and wrap it as an Observable."""
    return Observable(raw, tol)


def identity(dim: int) -> Observable:
    if dim < 2:
        raise ValidationError(f"observable dimension must be at least 2, got {dim}")
    return Observable._wrap(np.eye(dim, dtype=np.complex128))


def haar_state(dim: int, rng: np.random.Generator) -> StateVector:
    """Haar-random pure state: normalized vector of iid standard complex Gaussians."""
    raw = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return StateVector.normalized(raw)


# ---------------------------------------------------------------------------
# JSON encoding.  Complex scalars are [re, im] pairs; matrices are row-major.
# ---------------------------------------------------------------------------

def complex_to_pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def complex_from_pair(pair: Any) -> complex:
    if (
        not isinstance(pair, Sequence)
        or isinstance(pair, (str, bytes))
        or len(pair) != 2
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
    ):
        raise ValidationError(f"complex scalar must be a [re, im] pair of numbers, got {pair!r}")
    return complex(float(pair[0]), float(pair[1]))


def observable_to_json_dict(a: Observable) -> dict[str, Any]:
    return {
        "dim": a.dim,
        "entries": [[complex_to_pair(z) for z in row] for row in a.matrix.tolist()],
    }


def observable_from_json_dict(obj: Any, tol: Tolerances = DEFAULT_TOLERANCES) -> Observable:
    if not isinstance(obj, dict) or "dim" not in obj or "entries" not in obj:
        raise ValidationError('observable JSON must be an object with "dim" and "entries"')
    dim = obj["dim"]
    entries = obj["entries"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise ValidationError(f'"dim" must be an integer, got {dim!r}')
    if not isinstance(entries, list) or len(entries) != dim:
        raise ValidationError(f'"entries" must be a list of {dim} rows')
    rows = []
    for row in entries:
        if not isinstance(row, list) or len(row) != dim:
            raise ValidationError(f"each row must be a list of {dim} [re, im] pairs")
        rows.append([complex_from_pair(z) for z in row])
    return Observable(np.array(rows, dtype=np.complex128), tol)


def state_to_json_dict(phi: StateVector) -> dict[str, Any]:
    return {"dim": phi.dim, "amps": [complex_to_pair(z) for z in phi.amps.tolist()]}


def state_from_json_dict(obj: Any, tol: Tolerances = DEFAULT_TOLERANCES) -> StateVector:
    if not isinstance(obj, dict) or "dim" not in obj or "amps" not in obj:
        raise ValidationError('state JSON must be an object with "dim" and "amps"')
    dim = obj["dim"]
    amps = obj["amps"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise ValidationError(f'"dim" must be an integer, got {dim!r}')
    if not isinstance(amps, list) or len(amps) != dim:
        raise ValidationError(f'"amps" must be a list of {dim} [re, im] pairs')
    return StateVector(np.array([complex_from_pair(z) for z in amps]), tol)
