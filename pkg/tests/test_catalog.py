import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qbrach import catalog
from qbrach.matcore import ValidationError


ALL_BUILDERS = list(catalog.SCENARIO_BUILDERS.items())


class TestValidation:
    @pytest.mark.parametrize("name,builder", ALL_BUILDERS)
    def test_scenario_self_consistent(self, name, builder):
        rep = catalog.validate(builder(), tol=1e-6)
        assert rep.passed(1e-6), rep.deviations

    def test_su2_off_locus_parameters(self):
        rep = catalog.validate(catalog.scenario_su2(1.0, 0.7), tol=1e-6)
        assert rep.passed(1e-6), rep.deviations


class TestSu2:
    def test_min_time_and_transfer(self):
        scn = catalog.scenario_su2(k=1.0, Omega=0.0)
        assert scn.min_time == pytest.approx(np.pi / 2)
        psi = scn.state_at(scn.min_time)
        assert 1 - abs(np.vdot(scn.target, psi)) ** 2 < 1e-12

    @given(st.floats(0.2, 4.0))
    @settings(max_examples=15, deadline=None)
    def test_min_time_scales_with_bound(self, k):
        scn = catalog.scenario_su2(k=k)
        assert scn.min_time * np.sqrt(k) == pytest.approx(np.pi / 2)

    def test_rejects_inconsistent_eps0(self):
        with pytest.raises(ValidationError):
            catalog.scenario_su2(k=1.0, eps0=2.0)


class TestSo3:
    def test_sign_flip_and_period(self):
        scn = catalog.scenario_so3(0.6, 0.8)
        R = scn.extras["R"]
        psi0 = scn.state_at(0.0)
        assert np.max(np.abs(scn.state_at(np.pi / R) + psi0)) < 1e-10
        assert np.max(np.abs(scn.state_at(2 * np.pi / R) - psi0)) < 1e-10

    def test_middle_component_constant(self):
        scn = catalog.scenario_so3(0.6, 0.8)
        for t in np.linspace(0, 7, 30):
            assert abs(scn.state_at(t)[1]) < 1e-14


class TestElliptic:
    def test_default_delta_starts_at_e1(self):
        scn = catalog.scenario_su3_elliptic()
        assert np.max(np.abs(scn.psi0 - np.eye(3)[0])) < 1e-12

    def test_printed_state_formula_deviates(self):
        # the printed component expressions carry sign/frequency typos;
        # the evaluator is retained for the discrepancy record
        scn = catalog.scenario_su3_elliptic(1.0, 0.8)
        z = scn.extras["z"]
        printed = catalog.elliptic_printed_state(1.0, 0.8, z, 1.3)
        exact = scn.state_at(1.3)
        assert np.max(np.abs(printed - exact)) > 1e-3


class TestGeodesic:
    def test_transfer_time(self):
        scn = catalog.scenario_su3_geodesic(1.0, 1 / np.sqrt(3))
        assert scn.min_time == pytest.approx(np.sqrt(3) * np.pi / 2)
        psi = scn.state_at(scn.min_time)
        assert 1 - abs(psi[2]) ** 2 < 1e-10

    def test_R_alias(self):
        scn = catalog.scenario_su3_geodesic(R=2.0)
        assert abs(scn.params["eps1_0"]) == pytest.approx(2.0)

    def test_rejects_inconsistent_theta(self):
        with pytest.raises(ValidationError):
            catalog.scenario_su3_geodesic(1.0, 1 / np.sqrt(3), theta=1.0)


class TestFrenet:
    def test_circle_constraint_enforced(self):
        with pytest.raises(ValidationError):
            catalog.scenario_frenet(A=1.0, B=0.5, C=0.7, N=0.9, eta=0.7)

    def test_eigvector_columns(self):
        scn = catalog.scenario_frenet()
        R = scn.extras["R"]
        for t in (0.0, 0.9):
            H = scn.hamiltonian_at(t)
            plus, zero, minus = scn.extras["eigvecs"](t)
            assert np.max(np.abs(H @ plus - R * plus)) < 1e-10
            assert np.max(np.abs(H @ zero)) < 1e-10
            assert np.max(np.abs(H @ minus + R * minus)) < 1e-10


class TestSu4:
    def test_bell_state(self):
        scn = catalog.scenario_su4_heisenberg(1.0)
        psi = scn.state_at(scn.extras["bell_time"])
        assert 1 - abs(np.vdot(scn.target, psi)) ** 2 < 1e-12

    def test_half_probability_at_pi_eighth(self):
        scn = catalog.scenario_su4_heisenberg(1.0)
        psi = scn.state_at(np.pi / 8)
        assert abs(psi[0]) ** 2 == pytest.approx(0.5, abs=1e-10)
        assert abs(psi[3]) ** 2 == pytest.approx(0.5, abs=1e-10)


class TestDirac:
    def test_unit_norm_precondition(self):
        with pytest.raises(ValidationError):
            catalog.scenario_dirac(alpha=1.0, p_z=1.0)

    def test_involutive_hamiltonian(self):
        scn = catalog.scenario_dirac()
        for t in np.linspace(0, np.pi, 20):
            H = scn.hamiltonian_at(t)
            assert np.max(np.abs(H @ H - np.eye(4))) < 1e-10


class TestFamilies:
    @pytest.mark.parametrize("kind",
                             ["antidiagonal", "tridiagonal", "diagonal"])
    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_structure(self, n, kind):
        fam = catalog.family_sun(n, kind, seed=42)
        assert np.max(np.abs(fam.H0 - fam.H0.conj().T)) < 1e-12
        assert np.trace(fam.H0 @ fam.H0).real == pytest.approx(2.0)
        # driver/constraint trace-orthogonality is enforced on build
        assert fam.problem.dim == n

    def test_seed_reproducible(self):
        a = catalog.family_sun(3, "antidiagonal", seed=7)
        b = catalog.family_sun(3, "antidiagonal", seed=7)
        assert np.array_equal(a.F0, b.F0)

    def test_rejects_bad_kind(self):
        with pytest.raises(ValidationError):
            catalog.family_sun(3, "bogus")


class TestPartitions:
    @pytest.fixture(scope="class")
    @staticmethod
    def results():
        return catalog.su3_partitions(t_max=16.0, dt=2e-3, seed=42)

    def test_constant_pairs(self, results):
        by_index = {r.index: r for r in results}
        assert by_index[1].classification == "constant"
        assert by_index[4].classification == "constant"

    def test_periodic_pairs(self, results):
        by_index = {r.index: r for r in results}
        assert by_index[2].classification == "periodic"
        assert by_index[2].period == pytest.approx(2 * np.pi * np.sqrt(3),
                                                   abs=1e-4)
        assert by_index[3].classification == "periodic"
        assert by_index[3].period == pytest.approx(14.2283, abs=1e-3)
