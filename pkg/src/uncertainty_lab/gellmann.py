"""Generalized Gell-Mann matrices and the reference example states.

``gell_mann(d)`` builds the d^2 - 1 traceless Hermitian generators in three
families, ordered as: all symmetric pairs (j < k, lexicographic), then all
antisymmetric pairs, then the diagonal matrices.  They satisfy
``trace(g_i g_j) = 2 delta_ij``, and at d = 2 reduce to the Pauli matrices
(sigma_x, sigma_y, sigma_z).

Sign convention: the antisymmetric generator for the pair (j, k) is
``-i |j><k| + i |k><j|``, except the (1, 3) generator at d = 3, which is
negated so that ``su3_lambda(5)`` is

    [[0, 0, i], [0, 0, 0], [-i, 0, 0]]

and the commutator identity reads [lambda_3, lambda_4] = -i lambda_5.  This
is the negative of the more common textbook matrix; the commutator golden
tests in this package are written against it, and the choice is recorded in
``GellMannBasis.note``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Observable, StateVector, ValidationError

__all__ = [
    "GellMannBasis",
    "gell_mann",
    "su3_lambda",
    "two_level_state",
    "uniform_superposition",
]

_D3_NOTE = (
    "antisymmetric generators use -i|j><k| + i|k><j| (j < k); at d = 3 the "
    "(1, 3) generator is negated, so lambda_5 = [[0,0,i],[0,0,0],[-i,0,0]], "
    "the negative of the common convention, and [lambda_3, lambda_4] = -i lambda_5"
)
_GENERIC_NOTE = "antisymmetric generators use -i|j><k| + i|k><j| (j < k)"


@dataclass(frozen=True)
class GellMannBasis:
    """Ordered basis: symmetric pairs, antisymmetric pairs, then diagonals."""

    dim: int
    matrices: tuple[Observable, ...]
    note: str

    def _pair_offset(self, j: int, k: int) -> int:
        d = self.dim
        if not (1 <= j < k <= d):
            raise ValidationError(f"need 1 <= j < k <= {d}, got ({j}, {k})")
        return (j - 1) * d - (j - 1) * j // 2 + (k - j - 1)

    def symmetric(self, j: int, k: int) -> Observable:
        """|j><k| + |k><j| for 1 <= j < k <= dim."""
        return self.matrices[self._pair_offset(j, k)]

    def antisymmetric(self, j: int, k: int) -> Observable:
        """The antisymmetric generator for the pair (j, k); see module note."""
        return self.matrices[self.dim * (self.dim - 1) // 2 + self._pair_offset(j, k)]

    def diagonal(self, l: int) -> Observable:
        """sqrt(2/(l(l+1))) diag(1, ..., 1, -l, 0, ..., 0) with l ones."""
        if not (1 <= l <= self.dim - 1):
            raise ValidationError(f"need 1 <= l <= {self.dim - 1}, got {l}")
        return self.matrices[self.dim * (self.dim - 1) + l - 1]


def gell_mann(dim: int) -> GellMannBasis:
    """Generalized Gell-Mann basis of dimension ``dim`` (at least 2)."""
    if dim < 2:
        raise ValidationError(f"Gell-Mann basis needs dimension >= 2, got {dim}")
    symmetric = []
    antisymmetric = []
    for j in range(dim - 1):
        for k in range(j + 1, dim):
            s = np.zeros((dim, dim), dtype=np.complex128)
            s[j, k] = 1.0
            s[k, j] = 1.0
            symmetric.append(s)
            a = np.zeros((dim, dim), dtype=np.complex128)
            a[j, k] = -1.0j
            a[k, j] = 1.0j
            if dim == 3 and (j, k) == (0, 2):
                a = -a
            antisymmetric.append(a)
    diagonals = []
    for l in range(1, dim):
        entries = np.zeros(dim, dtype=np.complex128)
        entries[:l] = 1.0
        entries[l] = -l
        diagonals.append(np.sqrt(2.0 / (l * (l + 1))) * np.diag(entries))
    matrices = tuple(Observable._wrap(m) for m in symmetric + antisymmetric + diagonals)
    return GellMannBasis(
        dim=dim, matrices=matrices, note=_D3_NOTE if dim == 3 else _GENERIC_NOTE
    )


# Standard numbering of the d = 3 matrices: lambda_1..lambda_8.
_SU3_INDEX = {
    1: ("symmetric", 1, 2),
    2: ("antisymmetric", 1, 2),
    3: ("diagonal", 1, None),
    4: ("symmetric", 1, 3),
    5: ("antisymmetric", 1, 3),
    6: ("symmetric", 2, 3),
    7: ("antisymmetric", 2, 3),
    8: ("diagonal", 2, None),
}


def su3_lambda(k: int) -> Observable:
    """The d = 3 matrix lambda_k (k = 1..8) in standard numbering.

    lambda_5 follows this package's sign convention (see module docstring).
    """
    if k not in _SU3_INDEX:
        raise ValidationError(f"lambda index must be 1..8, got {k}")
    family, i, j = _SU3_INDEX[k]
    basis = gell_mann(3)
    if family == "symmetric":
        return basis.symmetric(i, j)
    if family == "antisymmetric":
        return basis.antisymmetric(i, j)
    return basis.diagonal(i)


def two_level_state(a: complex, b: complex) -> StateVector:
    """Qutrit state (a, b, 0) / N supported on the first two basis vectors.

    For the pair (lambda_3, lambda_4) every such state with a != 0 and b != 0
    has zero correlation while both spreads stay positive.
    """
    if a == 0 and b == 0:
        raise ValidationError("two_level_state needs a and b not both zero")
    return StateVector.normalized(np.array([a, b, 0.0], dtype=np.complex128))


def uniform_superposition(dim: int = 3) -> StateVector:
    """The state (1, ..., 1) / sqrt(dim)."""
    if dim < 1:
        raise ValidationError(f"dimension must be positive, got {dim}")
    return StateVector.normalized(np.ones(dim, dtype=np.complex128))
