"""Quantum brachistochrone engine.

Integrates the coupled evolution law

    i d(H + F)/dt = [H, F],    i dpsi/dt = H psi,

with H confined to a "driver" subspace and F to a trace-orthogonal
"constraint" subspace of traceless Hermitian matrices.  Tracks the
conserved quantities (Tr H^2, Tr(HF), eigenvalues of H, state norm) and
checks the boundary operator identity {G, P} = G.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .matcore import (ValidationError, as_matrix, check_hermitian, check_state,
                      commutator, anticommutator, trace_inner, hermitian_eig)

DRIFT_ABORT = 1e-4
RENORM_THRESHOLD = 1e-12


class DriftAbort(RuntimeError):
    """Raised when an invariant drifts beyond the hard limit during evolve."""

    def __init__(self, message: str, diagnostics: dict):
        super().__init__(message)
        self.diagnostics = diagnostics


def _orthonormalize(basis: Sequence[np.ndarray], label: str,
                    warn_tol: float = 1e-10) -> np.ndarray:
    """Gram-Schmidt under the trace inner product Tr(A B); returns a stack."""
    out = []
    adjusted = False
    for B in basis:
        A = check_hermitian(B)
        if abs(np.trace(A)) > 1e-10:
            raise ValidationError(f"{label} basis element not traceless")
        for E in out:
            A = A - trace_inner(E, A) * E
        nrm = np.sqrt(trace_inner(A, A))
        if nrm < 1e-12:
            raise ValidationError(f"{label} basis is linearly dependent")
        Anew = A / nrm
        if np.max(np.abs(Anew - as_matrix(B))) > warn_tol:
            adjusted = True
        out.append(Anew)
    if adjusted:
        warnings.warn(f"{label} basis was not orthonormal under Tr(A B); "
                      "Gram-Schmidt applied", stacklevel=3)
    return np.stack(out)


@dataclass
class ControlProblem:
    """One brachistochrone instance: subspace bases plus the energy bound.

    driver_basis spans the admissible Hamiltonians H, constraint_basis the
    multiplier operator F; the two spans must be trace-orthogonal.
    """

    dim: int
    driver_basis: Sequence[np.ndarray]
    constraint_basis: Sequence[np.ndarray]
    energy_bound_k: float

    _driver: np.ndarray = field(init=False, repr=False)
    _constraint: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.energy_bound_k <= 0:
            raise ValidationError("energy_bound_k must be positive")
        self._driver = _orthonormalize(self.driver_basis, "driver")
        self._constraint = (_orthonormalize(self.constraint_basis, "constraint")
                            if len(self.constraint_basis) > 0
                            else np.zeros((0, self.dim, self.dim), dtype=complex))
        for D in self._driver:
            for G in self._constraint:
                ip = trace_inner(D, G)
                if abs(ip) > 1e-10:
                    raise ValidationError(
                        f"driver and constraint subspaces not trace-orthogonal "
                        f"(Tr(d g) = {ip:.3e})")

    def project_driver(self, C: np.ndarray) -> np.ndarray:
        coeffs = np.einsum("kij,ji->k", self._driver, C).real
        return np.einsum("k,kij->ij", coeffs, self._driver)

    def project_constraint(self, C: np.ndarray) -> np.ndarray:
        if self._constraint.shape[0] == 0:
            return np.zeros_like(C)
        coeffs = np.einsum("kij,ji->k", self._constraint, C).real
        return np.einsum("k,kij->ij", coeffs, self._constraint)


@dataclass(frozen=True)
class BrachState:
    """Snapshot of the joint system at one time."""

    t: float
    H: np.ndarray
    F: np.ndarray
    psi: np.ndarray


@dataclass(frozen=True)
class Trajectory:
    """Time-indexed record of (H, F, psi) plus invariant diagnostics."""

    times: np.ndarray
    Hs: np.ndarray
    Fs: np.ndarray
    psis: np.ndarray
    norm_drift: np.ndarray
    trH2_drift: np.ndarray      # relative drift of Tr H^2
    trHF_residual: np.ndarray
    eigenvalue_drift: np.ndarray   # spectrum drift of G = H + F

    @property
    def samples(self) -> list:
        return [BrachState(float(t), H, F, psi)
                for t, H, F, psi in zip(self.times, self.Hs, self.Fs, self.psis)]


class BrachRhs(NamedTuple):
    dH: np.ndarray
    dF: np.ndarray
    projection_residual: float


def brach_rhs(H, F, problem: ControlProblem) -> BrachRhs:
    """Right-hand side of the evolution law.

    C = -i[H, F] is Hermitian; the returned derivatives are its
    trace-orthogonal projections onto the driver and constraint subspaces.
    The part of C lying in neither subspace is reported as a residual.
    """
    H, F = check_hermitian(H), check_hermitian(F)
    res_H = np.max(np.abs(H - problem.project_driver(H))) if H.size else 0.0
    res_F = np.max(np.abs(F - problem.project_constraint(F)))
    if res_H > 1e-8 or res_F > 1e-8:
        raise ValidationError(
            f"H/F not in their subspaces (residuals {res_H:.3e}, {res_F:.3e})")
    C = -1j * commutator(H, F)
    dH = problem.project_driver(C)
    dF = problem.project_constraint(C)
    residual = float(np.max(np.abs(C - dH - dF))) if C.size else 0.0
    return BrachRhs(dH, dF, residual)


def _rhs_raw(H, F, psi, problem):
    C = -1j * (H @ F - F @ H)
    return (-1j * (H @ psi),
            problem.project_driver(C),
            problem.project_constraint(C))


def evolve(problem: ControlProblem, H0, F0, psi0, t_max: float,
           dt: float = 1e-4, record_every: int = 1) -> Trajectory:
    """Fixed-step RK4 on the joint system (psi, H, F).

    After each step psi is renormalized if its norm drifts beyond 1e-12 and
    H, F are re-projected onto their subspaces.  Aborts with DriftAbort if
    any tracked invariant drifts beyond 1e-4.
    """
    if dt <= 0:
        raise ValidationError("dt must be positive")
    H = problem.project_driver(check_hermitian(H0))
    F = problem.project_constraint(check_hermitian(F0))
    psi = check_state(psi0)
    brach_rhs(H, F, problem)  # validate subspace membership at t=0

    trH2_0 = trace_inner(H, H)
    # the isospectral object is G = H + F: dG/dt = -i [G, F]
    eig0 = np.linalg.eigvalsh(H + F)
    eig_scale = max(np.max(np.abs(eig0)), 1e-30)

    n_steps = max(int(round(t_max / dt)), 1)
    times, Hs, Fs, psis = [], [], [], []
    norm_d, trH2_d, trHF_r, eig_d = [], [], [], []

    def record(t, H, F, psi):
        times.append(t)
        Hs.append(H)
        Fs.append(F)
        psis.append(psi)
        norm_d.append(abs(np.linalg.norm(psi) - 1.0))
        trH2_d.append(abs(trace_inner(H, H) - trH2_0) / max(abs(trH2_0), 1e-30))
        trHF_r.append(abs(trace_inner(H, F)))
        eig_d.append(np.max(np.abs(np.linalg.eigvalsh(H + F) - eig0))
                     / eig_scale)
        if max(norm_d[-1], trH2_d[-1], trHF_r[-1]) > DRIFT_ABORT:
            raise DriftAbort(
                f"invariant drift beyond {DRIFT_ABORT:g} at t={t:.6f}",
                {"t": t, "norm_drift": norm_d[-1], "trH2_drift": trH2_d[-1],
                 "trHF_residual": trHF_r[-1]})

    record(0.0, H, F, psi)
    t = 0.0
    for step in range(1, n_steps + 1):
        k1p, k1H, k1F = _rhs_raw(H, F, psi, problem)
        k2p, k2H, k2F = _rhs_raw(H + 0.5 * dt * k1H, F + 0.5 * dt * k1F,
                                 psi + 0.5 * dt * k1p, problem)
        k3p, k3H, k3F = _rhs_raw(H + 0.5 * dt * k2H, F + 0.5 * dt * k2F,
                                 psi + 0.5 * dt * k2p, problem)
        k4p, k4H, k4F = _rhs_raw(H + dt * k3H, F + dt * k3F,
                                 psi + dt * k3p, problem)
        psi = psi + (dt / 6.0) * (k1p + 2 * k2p + 2 * k3p + k4p)
        H = H + (dt / 6.0) * (k1H + 2 * k2H + 2 * k3H + k4H)
        F = F + (dt / 6.0) * (k1F + 2 * k2F + 2 * k3F + k4F)
        # keep the flow on its manifold against roundoff
        H = problem.project_driver(0.5 * (H + H.conj().T))
        F = problem.project_constraint(0.5 * (F + F.conj().T))
        nrm = np.linalg.norm(psi)
        if abs(nrm - 1.0) > RENORM_THRESHOLD:
            psi = psi / nrm
        t = step * dt
        if step % record_every == 0 or step == n_steps:
            record(t, H, F, psi)

    return Trajectory(np.array(times), np.array(Hs), np.array(Fs),
                      np.array(psis), np.array(norm_d), np.array(trH2_d),
                      np.array(trHF_r), np.array(eig_d))


def g_operator(H, F, psi) -> np.ndarray:
    """G = (H + F) - <psi|(H + F)|psi> |psi><psi|."""
    H, F = check_hermitian(H), check_hermitian(F)
    v = check_state(psi)
    if H.shape[0] != v.shape[0]:
        raise ValidationError("dimension mismatch in g_operator")
    HF = H + F
    mean = np.vdot(v, HF @ v).real
    P = np.outer(v, v.conj())
    return HF - mean * P


def boundary_residual(G, P) -> float:
    """||{G, P} - G||_max for a pure projector P (boundary condition check)."""
    G, P = check_hermitian(G), check_hermitian(P)
    if np.max(np.abs(P @ P - P)) > 1e-10:
        raise ValidationError("P is not a projector")
    return float(np.max(np.abs(anticommutator(G, P) - G)))


def observables(psi, H) -> dict:
    """Three-level invariant bilinears f1..f6 plus energy moments.

        f1 = c1 c3* - c1* c3     f2 = c2 c3* - c2* c3    f3 = c1 c2* + c1* c2
        f4 = c2 c3* + c2* c3     f5 = c1 c3* + c1* c3    f6 = c1 c2* - c1* c2
    """
    v = check_state(psi)
    if v.shape[0] != 3:
        raise ValidationError("observables requires a three-level state")
    A = check_hermitian(H)
    c1, c2, c3 = v
    Hv = A @ v
    mean = np.vdot(v, Hv).real
    second = np.vdot(Hv, Hv).real
    return {
        "f1": c1 * c3.conjugate() - c1.conjugate() * c3,
        "f2": c2 * c3.conjugate() - c2.conjugate() * c3,
        "f3": c1 * c2.conjugate() + c1.conjugate() * c2,
        "f4": c2 * c3.conjugate() + c2.conjugate() * c3,
        "f5": c1 * c3.conjugate() + c1.conjugate() * c3,
        "f6": c1 * c2.conjugate() - c1.conjugate() * c2,
        "H_mean": mean,
        "H2_mean": second,
        "delta_E": np.sqrt(max(second - mean * mean, 0.0)),
        "probabilities": np.abs(v) ** 2,
    }


# --- SU(2) multivector form -------------------------------------------------
#
# A traceless Hermitian 2x2 matrix [[m_z, eps], [eps*, -m_z]] maps to the
# triple (sqrt(2) m_z, eps, eps*); the sqrt(2) keeps Tr(A B) = <a|b>.

_SQRT2 = np.sqrt(2.0)

A1 = _SQRT2 * np.array([[0, 0, 0], [0, 1, 0], [0, 0, -1]], dtype=complex)
A2 = _SQRT2 * np.array([[0, -1, 0], [0, 0, 0], [1, 0, 0]], dtype=complex)
A3 = _SQRT2 * np.array([[0, 0, 1], [-1, 0, 0], [0, 0, 0]], dtype=complex)


def su2_vectorize(M) -> np.ndarray:
    A = check_hermitian(M)
    if A.shape[0] != 2:
        raise ValidationError("su2_vectorize requires a 2x2 matrix")
    if abs(np.trace(A)) > 1e-10:
        raise ValidationError("su2_vectorize requires a traceless matrix")
    return np.array([_SQRT2 * A[0, 0].real, A[0, 1], A[1, 0]], dtype=complex)


def su2_devectorize(v) -> np.ndarray:
    v = np.asarray(v, dtype=complex).reshape(3)
    return np.array([[v[0] / _SQRT2, v[1]], [v[2], -v[0] / _SQRT2]])


def su2_vector_rhs(h, f) -> np.ndarray:
    """Vector form of the rhs: component j is <f| A_j |h>.

    This is the Schrodinger-like form i dh/dt: it equals
    i * su2_vectorize(-i [H, F]) for the corresponding matrices.
    """
    h = np.asarray(h, dtype=complex).reshape(3)
    f = np.asarray(f, dtype=complex).reshape(3)
    return np.array([np.vdot(f, A @ h) for A in (A1, A2, A3)])
