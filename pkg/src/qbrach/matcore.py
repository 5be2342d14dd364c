"""Dense complex matrix algebra for small Hermitian systems.

Everything downstream (the brachistochrone integrator, the scenario catalog,
the gate checks) works with plain square numpy arrays at desk scale
(dim <= ~16).  This module provides the validated primitives: traceless
gauge fixing, trace inner products, Hermitian eigendecomposition with a
deterministic phase convention, matrix exponentials, reference-frame
transforms and the step-ordered exponential.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

HERM_TOL = 1e-12
STATE_TOL = 1e-10


class ValidationError(ValueError):
    """Raised when a matrix/state fails a structural precondition."""


def as_matrix(M) -> np.ndarray:
    """Coerce to a square complex ndarray."""
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValidationError(f"expected square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValidationError("matrix entries must be finite")
    return A


def check_hermitian(M, tol: float = HERM_TOL) -> np.ndarray:
    A = as_matrix(M)
    dev = np.max(np.abs(A - A.conj().T))
    if dev > tol:
        raise ValidationError(f"matrix not Hermitian: max |M - M^dag| = {dev:.3e}")
    return A


def check_state(psi, tol: float = STATE_TOL) -> np.ndarray:
    v = np.asarray(psi, dtype=complex).reshape(-1)
    nrm = np.linalg.norm(v)
    if abs(nrm - 1.0) > tol:
        raise ValidationError(f"state not normalized: ||psi|| = {nrm:.12f}")
    return v


def traceless_gauge(M, tol: float = HERM_TOL) -> np.ndarray:
    """Remove the trace part: M - (Tr M / n) 1.  Requires Hermitian input."""
    A = check_hermitian(M, tol)
    n = A.shape[0]
    return A - (np.trace(A) / n) * np.eye(n)


def commutator(A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise ValidationError("dimension mismatch in commutator")
    return A @ B - B @ A


def anticommutator(A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise ValidationError("dimension mismatch in anticommutator")
    return A @ B + B @ A


def trace_inner(A, B) -> float:
    """Tr(A B), real part (imaginary residue is O(1e-12) for Hermitian pairs)."""
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise ValidationError("dimension mismatch in trace_inner")
    return float(np.trace(A @ B).real)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues (ascending) and orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _fix_phases(V: np.ndarray) -> np.ndarray:
    """Make each column's largest-magnitude component real positive.

    Ties broken by lowest index (np.argmax convention).
    """
    W = V.copy()
    for j in range(W.shape[1]):
        col = W[:, j]
        i = int(np.argmax(np.abs(col)))
        piv = col[i]
        if abs(piv) > 0:
            W[:, j] = col * (piv.conjugate() / abs(piv))
    return W


def hermitian_eig(M, tol: float = HERM_TOL) -> Spectrum:
    """Eigendecomposition of a Hermitian matrix with deterministic phases."""
    A = check_hermitian(M, tol)
    vals, vecs = np.linalg.eigh(A)
    return Spectrum(eigenvalues=vals, eigenvectors=_fix_phases(vecs))


def expm_h(H, t: float = 1.0) -> np.ndarray:
    """U = exp(-i H t) for Hermitian H, via spectral decomposition."""
    spec = hermitian_eig(H)
    phases = np.exp(-1j * spec.eigenvalues * t)
    V = spec.eigenvectors
    return (V * phases) @ V.conj().T


def expm_spectral_zero_sym(H, rho: float, theta: float,
                           tol: float = 1e-8) -> np.ndarray:
    """exp(-i H theta) for H with spectrum {-rho, 0, rho}, in closed form.

    Uses the Cayley-Hamilton reduction H^3 = rho^2 H:
        U = 1 - i (sin(rho theta)/rho) H + ((cos(rho theta) - 1)/rho^2) H^2
    """
    A = check_hermitian(H)
    if rho <= 0:
        raise ValidationError("rho must be positive")
    dev = np.max(np.abs(A @ A @ A - rho**2 * A))
    if dev > tol:
        raise ValidationError(
            f"Cayley-Hamilton precondition violated: ||H^3 - rho^2 H|| = {dev:.3e}")
    n = A.shape[0]
    return (np.eye(n)
            - 1j * (np.sin(rho * theta) / rho) * A
            + ((np.cos(rho * theta) - 1.0) / rho**2) * (A @ A))


def energy_variance(H, psi) -> float:
    """<H^2> - <H>^2 on a normalized state, clamped at zero."""
    A = check_hermitian(H)
    v = check_state(psi)
    if A.shape[0] != v.shape[0]:
        raise ValidationError("dimension mismatch in energy_variance")
    Hv = A @ v
    mean = np.vdot(v, Hv).real
    second = np.vdot(Hv, Hv).real
    var = second - mean * mean
    return max(var, 0.0)


def picture_transform(H: Callable[[float], np.ndarray],
                      S: Callable[[float], np.ndarray],
                      dS_dt: Callable[[float], np.ndarray]
                      ) -> Callable[[float], np.ndarray]:
    """Co-rotating-frame Hamiltonian t -> dS/dt + e^{-iS(t)} H(t) e^{+iS(t)}.

    The caller supplies dS/dt analytically.
    """

    def transformed(t: float) -> np.ndarray:
        St = check_hermitian(S(t))
        U = expm_h(St, 1.0)           # e^{-iS}
        return as_matrix(dS_dt(t)) + U @ as_matrix(H(t)) @ U.conj().T

    return transformed


def ordered_exponential(H: Callable[[float], np.ndarray],
                        t_max: float, dt: float) -> np.ndarray:
    """Step-ordered product of exp(-i H(t_k + dt/2) dt), midpoint rule.

    Recovers the closed-form exponential only when the integrand
    self-commutes; otherwise it is the time-ordered propagator.
    """
    if dt <= 0:
        raise ValidationError("dt must be positive")
    if dt > t_max:
        raise ValidationError("dt must not exceed t_max")
    n_full = int(t_max / dt)
    remainder = t_max - n_full * dt
    dim = as_matrix(H(0.0)).shape[0]
    U = np.eye(dim, dtype=complex)
    t = 0.0
    for _ in range(n_full):
        U = expm_h(H(t + dt / 2.0), dt) @ U
        t += dt
    if remainder > 1e-15:
        U = expm_h(H(t + remainder / 2.0), remainder) @ U
    return U
