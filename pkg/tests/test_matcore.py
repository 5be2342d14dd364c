import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qbrach import matcore as mc


def random_hermitian(n, seed):
    rng = np.random.default_rng(seed)
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return A + A.conj().T


class TestValidation:
    def test_as_matrix_rejects_nonsquare(self):
        with pytest.raises(mc.ValidationError):
            mc.as_matrix(np.zeros((2, 3)))

    def test_as_matrix_rejects_nonfinite(self):
        with pytest.raises(mc.ValidationError):
            mc.as_matrix([[np.inf, 0], [0, 1]])

    def test_as_matrix_accepts_noncontiguous(self):
        M = np.eye(3)[[0, 2, 1]].T
        assert mc.as_matrix(M).shape == (3, 3)

    def test_check_hermitian_rejects(self):
        with pytest.raises(mc.ValidationError):
            mc.check_hermitian([[0, 1], [2, 0]])

    def test_check_state_rejects_unnormalized(self):
        with pytest.raises(mc.ValidationError):
            mc.check_state([1.0, 1.0])


class TestAlgebra:
    def test_traceless_gauge(self):
        H = random_hermitian(4, 0)
        G = mc.traceless_gauge(H)
        assert abs(np.trace(G)) < 1e-12
        assert np.max(np.abs((H - G) - (np.trace(H) / 4) * np.eye(4))) < 1e-12

    def test_commutator_antisymmetry(self):
        A, B = random_hermitian(3, 1), random_hermitian(3, 2)
        assert np.max(np.abs(mc.commutator(A, B)
                             + mc.commutator(B, A))) < 1e-12

    def test_trace_inner_symmetry(self):
        A, B = random_hermitian(3, 3), random_hermitian(3, 4)
        assert mc.trace_inner(A, B) == pytest.approx(mc.trace_inner(B, A))

    @given(st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3))
    @settings(max_examples=25, deadline=None)
    def test_expm_h_unitary(self, a, b, c):
        H = np.array([[a, b + 1j * c], [b - 1j * c, -a]])
        U = mc.expm_h(H, 0.7)
        assert np.max(np.abs(U.conj().T @ U - np.eye(2))) < 1e-12

    def test_expm_h_matches_series(self):
        H = random_hermitian(3, 5)
        t = 0.31
        S = np.eye(3, dtype=complex)
        term = np.eye(3, dtype=complex)
        for k in range(1, 40):
            term = term @ (-1j * t * H) / k
            S = S + term
        assert np.max(np.abs(mc.expm_h(H, t) - S)) < 1e-12


class TestSpectral:
    def test_hermitian_eig_reconstructs(self):
        H = random_hermitian(4, 6)
        spec = mc.hermitian_eig(H)
        V, w = spec.eigenvectors, spec.eigenvalues
        assert np.max(np.abs((V * w) @ V.conj().T - H)) < 1e-12

    def test_phase_convention_deterministic(self):
        H = random_hermitian(4, 7)
        V1 = mc.hermitian_eig(H).eigenvectors
        V2 = mc.hermitian_eig(H.copy()).eigenvectors
        assert np.array_equal(V1, V2)

    def test_expm_spectral_zero_sym(self):
        H = np.array([[0, 0, 0.8], [0, 0, 0], [0.8, 0, 0]], dtype=complex)
        U = mc.expm_spectral_zero_sym(H, 0.8, 1.3)
        assert np.max(np.abs(U - mc.expm_h(H, 1.3))) < 1e-12

    def test_expm_spectral_zero_sym_rejects_bad_spectrum(self):
        with pytest.raises(mc.ValidationError):
            mc.expm_spectral_zero_sym(np.diag([1.0, 2.0, 3.0]), 1.0, 0.5)

    def test_energy_variance_eigenstate_zero(self):
        H = np.diag([1.0, 2.0, 3.0])
        assert mc.energy_variance(H, [0, 1, 0]) == 0.0


class TestPropagation:
    def test_ordered_exponential_constant(self):
        H = random_hermitian(3, 8)
        U = mc.ordered_exponential(lambda t: H, 1.0, 1e-3)
        assert np.max(np.abs(U - mc.expm_h(H, 1.0))) < 1e-10

    def test_picture_transform_static_frame(self):
        H = random_hermitian(2, 9)
        Z = np.zeros((2, 2), dtype=complex)
        Ht = mc.picture_transform(lambda t: H, lambda t: Z, lambda t: Z)
        assert np.max(np.abs(Ht(0.3) - H)) < 1e-12
