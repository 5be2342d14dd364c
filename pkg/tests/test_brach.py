import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qbrach import brach
from qbrach.matcore import ValidationError, commutator

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]])
SZ = np.diag([1.0, -1.0]).astype(complex)


def su2_problem(k=1.0):
    return brach.ControlProblem(
        dim=2,
        driver_basis=[SX / np.sqrt(2), SY / np.sqrt(2)],
        constraint_basis=[SZ / np.sqrt(2)],
        energy_bound_k=k)


class TestControlProblem:
    def test_rejects_overlapping_subspaces(self):
        with pytest.raises(ValidationError):
            brach.ControlProblem(dim=2, driver_basis=[SX, SZ],
                                 constraint_basis=[SZ],
                                 energy_bound_k=1.0)

    def test_projections_are_idempotent(self):
        prob = su2_problem()
        rng = np.random.default_rng(0)
        C = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        C = C + C.conj().T
        P = prob.project_driver(C)
        assert np.max(np.abs(prob.project_driver(P) - P)) < 1e-12
        assert np.max(np.abs(prob.project_constraint(P))) < 1e-12


class TestRhs:
    def test_rhs_is_split_commutator(self):
        prob = su2_problem()
        H = 0.7 * SX + 0.2 * SY
        F = 0.9 * SZ
        rhs = brach.brach_rhs(H, F, prob)
        total = commutator(H, F) / 1j
        assert np.max(np.abs((rhs.dH + rhs.dF) - total)) < 1e-12
        assert np.max(np.abs(prob.project_constraint(rhs.dH))) < 1e-12
        assert np.max(np.abs(prob.project_driver(rhs.dF))) < 1e-12


class TestEvolve:
    def test_invariants_su2(self):
        prob = su2_problem()
        H0 = SY  # eps0 = i
        F0 = 0.8 * SZ
        psi0 = np.array([1, 1], dtype=complex) / np.sqrt(2)
        traj = brach.evolve(prob, H0, F0, psi0, 2.0, dt=1e-3)
        assert np.max(traj.norm_drift) < 1e-10
        assert np.max(traj.trH2_drift) < 1e-8
        assert np.max(traj.trHF_residual) < 1e-8
        assert np.max(traj.eigenvalue_drift) < 1e-7

    def test_rotating_solution(self):
        # F = Omega sigma_z rotates the transverse driver at rate 2 Omega
        Omega = 0.8
        prob = su2_problem()
        traj = brach.evolve(prob, SY, Omega * SZ,
                            np.array([1, 0], dtype=complex), 1.5, dt=1e-3)
        for t, H in zip(traj.times[::100], traj.Hs[::100]):
            expected = (np.cos(2 * Omega * t) * SY
                        + np.sin(2 * Omega * t) * SX)
            assert np.max(np.abs(H - expected)) < 1e-8

    def test_rejects_bad_dt(self):
        with pytest.raises(ValidationError):
            brach.evolve(su2_problem(), SY, 0.1 * SZ,
                         np.array([1, 0], dtype=complex), 1.0, dt=0.0)


class TestBoundary:
    def test_g_operator_traceless_expectation(self):
        psi = np.array([1, 2j, -1]) / np.sqrt(6)
        rng = np.random.default_rng(3)
        H = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        H = H + H.conj().T
        G = brach.g_operator(H, np.zeros((3, 3)), psi)
        assert abs(np.vdot(psi, G @ psi)) < 1e-12

    def test_boundary_residual_projector_check(self):
        with pytest.raises(ValidationError):
            brach.boundary_residual(SZ, 0.5 * np.eye(2))


class TestSu2Vector:
    @given(st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2),
           st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2))
    @settings(max_examples=25, deadline=None)
    def test_vector_rhs_matches_matrix(self, a, b, c, d, e, f):
        H = np.array([[a, b + 1j * c], [b - 1j * c, -a]])
        F = np.array([[d, e + 1j * f], [e - 1j * f, -d]])
        h, fv = brach.su2_vectorize(H), brach.su2_vectorize(F)
        lhs = brach.su2_vector_rhs(h, fv)
        rhs = 1j * brach.su2_vectorize(commutator(H, F) / 1j)
        assert np.max(np.abs(lhs - rhs)) < 1e-10

    def test_round_trip(self):
        H = 0.4 * SX - 0.9 * SY + 0.2 * SZ
        back = brach.su2_devectorize(brach.su2_vectorize(H))
        assert np.max(np.abs(back - H)) < 1e-12
