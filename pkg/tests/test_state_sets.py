import numpy as np
import pytest

import uncertainty_lab as ul
from helpers import pauli_pair, rand_hermitian, rand_state


class TestClassify:
    def test_two_level_state_in_s_ab(self, l3, l4):
        cls = ul.classify(l3, l4, ul.two_level_state(1, 1))
        assert cls.in_s_ab
        # |C| = 0 forces both parts to vanish: inclusion in the other two sets
        assert cls.in_s_comm and cls.in_s_anti
        assert not cls.eigen_a and not cls.eigen_b
        assert cls.pearson == pytest.approx(0.0, abs=1e-12)

    def test_uniform_state_in_s_comm_only(self, l3, l4, phi2):
        cls = ul.classify(l3, l4, phi2)
        assert cls.in_s_comm
        assert not cls.in_s_ab
        assert not cls.in_s_anti  # Re C = 1/3
        assert cls.pearson == pytest.approx(0.8660254037844386, abs=1e-12)

    def test_eigenvector_excluded_from_all_sets(self, l3, l4):
        cls = ul.classify(l3, l4, ul.StateVector([1.0, 0.0, 0.0]))
        assert cls.eigen_a
        assert not cls.eigen_b
        assert not (cls.in_s_ab or cls.in_s_comm or cls.in_s_anti)
        assert cls.pearson is None

    def test_commuting_pair_rejected(self, l3, phi2):
        with pytest.raises(ul.CommutingPair):
            ul.classify(l3, l3, phi2)
        a = ul.validate_observable(np.diag([1.0, 2.0, 3.0]).astype(complex))
        b = ul.validate_observable(np.diag([0.0, 1.0, -1.0]).astype(complex))
        with pytest.raises(ul.CommutingPair):
            ul.classify(a, b, phi2)

    def test_formulations_agree_on_random_states(self, rng):
        # classify cross-checks |<[A,B]>| against 2 |Im C| internally and
        # raises if they drift apart
        for _ in range(500):
            d = int(rng.integers(2, 7))
            a, b = rand_hermitian(rng, d), rand_hermitian(rng, d)
            try:
                ul.classify(a, b, rand_state(rng, d))
            except ul.CommutingPair:
                continue

    def test_commutator_expectation_equals_twice_imag_part(self, rng):
        # the two membership formulations measure the same number
        for _ in range(10_000):
            d = int(rng.integers(2, 7))
            a, b = rand_hermitian(rng, d), rand_hermitian(rng, d)
            phi = rand_state(rng, d)
            comm_expect = abs(ul.inner(phi, ul.commutator(a, b) @ phi.amps))
            im_c = abs(ul.correlation(a, b, phi).imag)
            assert abs(comm_expect - 2 * im_c) <= 1e-10

    def test_records_tolerances(self, l3, l4, phi2):
        tol = ul.Tolerances(tol_zero=1e-8)
        assert ul.classify(l3, l4, phi2, tol).tolerances_used is tol

    def test_json_round_trip(self, l3, l4, phi2):
        doc = ul.classify(l3, l4, phi2).to_json_dict()
        assert doc["in_s_comm"] is True
        assert doc["tolerances_used"]["tol_zero"] == 1e-10


class TestMembershipScan:
    def test_deterministic_per_seed(self, l3, l4):
        cfg = ul.ScanConfig(samples=50, seed=9)
        first = [(phi.amps.tobytes(), cls) for phi, cls in ul.membership_scan(l3, l4, cfg)]
        second = [(phi.amps.tobytes(), cls) for phi, cls in ul.membership_scan(l3, l4, cfg)]
        assert first == second

    def test_zero_samples_empty_stream(self, l3, l4):
        assert list(ul.membership_scan(l3, l4, ul.ScanConfig(samples=0, seed=0))) == []

    def test_commuting_pair_rejected(self, l3):
        with pytest.raises(ul.CommutingPair):
            list(ul.membership_scan(l3, l3, ul.ScanConfig(samples=1, seed=0)))

    def test_dimension_two_never_hits_s_ab(self):
        sx, sz = pauli_pair()
        rows = list(ul.membership_scan(sx, sz, ul.ScanConfig(samples=2000, seed=3)))
        assert len(rows) == 2000
        assert not any(cls.in_s_ab for _, cls in rows)

    def test_strict_membership_is_measure_zero_but_witnessed(self, l3, l4, phi2):
        # Haar sampling never lands on the zero sets at the strict tolerance;
        # nonemptiness is witnessed exactly by the uniform superposition.
        hits = sum(cls.in_s_comm for _, cls in ul.membership_scan(
            l3, l4, ul.ScanConfig(samples=500, seed=5)))
        assert hits == 0
        assert ul.classify(l3, l4, phi2).in_s_comm

    def test_loose_tolerance_finds_members(self, l3, l4):
        loose = ul.Tolerances(tol_zero=0.02)
        cfg = ul.ScanConfig(samples=2000, seed=5, tolerances=loose)
        rows = [cls for _, cls in ul.membership_scan(l3, l4, cfg)]
        assert sum(cls.in_s_comm for cls in rows) > 0
        assert sum(cls.in_s_ab for cls in rows) > 0

    def test_inclusion_structure_over_scans(self, l3, l4, rng):
        configs = [
            (l3, l4, ul.ScanConfig(samples=1500, seed=5, tolerances=ul.Tolerances(tol_zero=0.05))),
            (l3, l4, ul.ScanConfig(samples=1500, seed=6)),
            (rand_hermitian(rng, 4), rand_hermitian(rng, 4), ul.ScanConfig(samples=500, seed=7)),
        ]
        for a, b, cfg in configs:
            for _, cls in ul.membership_scan(a, b, cfg):
                if cls.in_s_ab:
                    assert cls.in_s_comm and cls.in_s_anti

    def test_negative_samples_rejected(self):
        with pytest.raises(ValueError):
            ul.ScanConfig(samples=-1, seed=0)
