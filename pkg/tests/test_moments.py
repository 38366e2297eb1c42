import numpy as np
import pytest

import uncertainty_lab as ul
from helpers import oracle_std, rand_hermitian, rand_state


class TestExpectation:
    def test_lambda3_vanishes_on_uniform_state(self, l3, phi2):
        assert abs(ul.expectation(l3, phi2)) <= 1e-12

    def test_lambda5_vanishes_on_uniform_state(self, l5, phi2):
        assert abs(ul.expectation(l5, phi2)) <= 1e-12

    def test_identity_on_any_state(self, rng):
        for d in (2, 3, 5):
            assert ul.expectation(ul.identity(d), rand_state(rng, d)) == pytest.approx(1.0)

    def test_dimension_mismatch(self, l3):
        with pytest.raises(ul.DimensionMismatch):
            ul.expectation(l3, ul.StateVector([1.0, 0.0]))


class TestDeviationVector:
    # delta_phi1 lambda3 |phi1> = (2|b|^2 a, -2|a|^2 b, 0) / N^3 and
    # delta_phi1 lambda4 |phi1> = (0, 0, a) / N for phi1 = (a, b, 0) / N.
    @pytest.mark.parametrize("a,b", [(1, 1), (1 + 2j, -0.3 + 0.7j), (2, 1j)])
    def test_two_level_state_formulas(self, l3, l4, a, b):
        n = np.sqrt(abs(a) ** 2 + abs(b) ** 2)
        phi1 = ul.two_level_state(a, b)
        dv3 = ul.deviation_vector(l3, phi1)
        expected3 = np.array([2 * abs(b) ** 2 * a, -2 * abs(a) ** 2 * b, 0]) / n**3
        assert np.allclose(dv3.vec, expected3, atol=1e-14)
        dv4 = ul.deviation_vector(l4, phi1)
        assert np.allclose(dv4.vec, np.array([0, 0, a]) / n, atol=1e-14)

    def test_eigenvector_gives_zero_vector(self, rng):
        b = rand_hermitian(rng, 4)
        _, vecs = np.linalg.eigh(b.matrix)
        phi = ul.StateVector.normalized(vecs[:, 1])
        dv = ul.deviation_vector(b, phi)
        assert dv.norm <= 1e-12

    def test_norm_matches_vector(self, rng):
        f = rand_hermitian(rng, 5)
        phi = rand_state(rng, 5)
        dv = ul.deviation_vector(f, phi)
        assert dv.norm == pytest.approx(np.linalg.norm(dv.vec), rel=1e-12)

    def test_orthogonal_to_state(self, rng):
        for _ in range(50):
            d = int(rng.integers(2, 7))
            f = rand_hermitian(rng, d)
            phi = rand_state(rng, d)
            dv = ul.deviation_vector(f, phi)
            assert abs(ul.inner(phi, dv.vec)) <= ul.DEFAULT_TOLERANCES.tol_zero


class TestStdDev:
    def test_lambda3_on_balanced_two_level_state(self, l3):
        # norm of (2, -2, 0) / (sqrt 2)^3
        assert ul.std_dev(l3, ul.two_level_state(1, 1)) == pytest.approx(1.0, abs=1e-12)

    def test_lambda4_on_balanced_two_level_state(self, l4):
        # norm of (0, 0, 1) / sqrt 2
        phi1 = ul.two_level_state(1, 1)
        assert ul.std_dev(l4, phi1) == pytest.approx(1 / np.sqrt(2), abs=1e-12)

    def test_eigenvector_has_zero_spread(self, rng):
        b = rand_hermitian(rng, 5)
        _, vecs = np.linalg.eigh(b.matrix)
        phi = ul.StateVector.normalized(vecs[:, 0])
        assert ul.std_dev(b, phi) <= 1e-12

    def test_agrees_with_moment_formula(self, rng):
        for _ in range(2000):
            d = int(rng.integers(2, 7))
            f = rand_hermitian(rng, d)
            phi = rand_state(rng, d)
            got = ul.std_dev(f, phi)
            want = oracle_std(f.matrix, phi.amps)
            assert abs(got - want) <= 1e-10 * max(1.0, got, want)

    def test_shift_invariance(self, rng):
        for _ in range(100):
            d = int(rng.integers(2, 7))
            f = rand_hermitian(rng, d)
            phi = rand_state(rng, d)
            c = float(rng.uniform(-5, 5))
            shifted = f + c * ul.identity(d)
            assert abs(ul.std_dev(shifted, phi) - ul.std_dev(f, phi)) <= 1e-12

    def test_zero_spread_iff_eigenvector(self, rng):
        eps = ul.DEFAULT_TOLERANCES.eps_spread
        f = rand_hermitian(rng, 4)
        _, vecs = np.linalg.eigh(f.matrix)
        for k in range(4):
            phi = ul.StateVector.normalized(vecs[:, k])
            assert ul.std_dev(f, phi) <= eps
            residual = f.matrix @ phi.amps - ul.expectation(f, phi) * phi.amps
            assert np.linalg.norm(residual) <= eps
        for _ in range(20):
            phi = rand_state(rng, 4)
            assert ul.std_dev(f, phi) > eps
            residual = f.matrix @ phi.amps - ul.expectation(f, phi) * phi.amps
            assert np.linalg.norm(residual) > eps


class TestOrthogonalUnit:
    def test_direction_of_two_level_deviation(self, l4):
        u = ul.orthogonal_unit(l4, ul.two_level_state(1, 1))
        assert u is not None
        # (0, 0, 1) up to a global phase
        assert abs(abs(u[2]) - 1.0) <= 1e-12
        assert np.linalg.norm(u) == pytest.approx(1.0, abs=1e-12)

    def test_absent_for_eigenvector(self, l3):
        assert ul.orthogonal_unit(l3, ul.StateVector([1.0, 0.0, 0.0])) is None

    def test_orthogonal_to_state(self, rng):
        for _ in range(50):
            d = int(rng.integers(2, 7))
            f = rand_hermitian(rng, d)
            phi = rand_state(rng, d)
            u = ul.orthogonal_unit(f, phi)
            if u is not None:
                assert abs(ul.inner(phi, u)) <= ul.DEFAULT_TOLERANCES.tol_zero


class TestIsEigenstate:
    def test_basis_vector_of_diagonal(self, l3):
        assert ul.is_eigenstate(l3, ul.StateVector([1.0, 0.0, 0.0]))

    def test_uniform_state_spreads(self, l3, phi2):
        # spread is sqrt(2/3), far from zero
        assert ul.std_dev(l3, phi2) == pytest.approx(np.sqrt(2 / 3), abs=1e-12)
        assert not ul.is_eigenstate(l3, phi2)

    def test_identity_always_eigenstate(self, rng):
        assert ul.is_eigenstate(ul.identity(4), rand_state(rng, 4))
