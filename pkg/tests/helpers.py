"""Shared test utilities: random instances and independent brute-force oracles.

The oracle functions work directly on raw numpy arrays via the moment
formulas, deliberately bypassing the package's validated objects and its
deviation-vector route, so that tests compare two independent computations.
"""

import numpy as np

import uncertainty_lab as ul


def rand_hermitian(rng: np.random.Generator, dim: int) -> ul.Observable:
    m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return ul.validate_observable((m + m.conj().T) / 2.0)


def rand_state(rng: np.random.Generator, dim: int) -> ul.StateVector:
    return ul.haar_state(dim, rng)


def oracle_expect(matrix: np.ndarray, vec: np.ndarray) -> complex:
    return complex(np.vdot(vec, matrix @ vec))


def oracle_std(matrix: np.ndarray, vec: np.ndarray) -> float:
    m1 = oracle_expect(matrix, vec).real
    m2 = oracle_expect(matrix @ matrix, vec).real
    return float(np.sqrt(max(m2 - m1 * m1, 0.0)))


def oracle_corr(mat_a: np.ndarray, mat_b: np.ndarray, vec: np.ndarray) -> complex:
    return (
        oracle_expect(mat_a @ mat_b, vec)
        - oracle_expect(mat_a, vec).real * oracle_expect(mat_b, vec).real
    )


def pauli_pair() -> tuple[ul.Observable, ul.Observable]:
    sx = ul.validate_observable(np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex))
    sz = ul.validate_observable(np.diag([1.0, -1.0]).astype(complex))
    return sx, sz
