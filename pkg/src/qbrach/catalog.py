"""Closed-form time-optimal scenario catalog.

Each scenario packages an analytic Hamiltonian H(t), constraint F(t),
propagator U(t,0), state psi(t) and minimum-time data for one of the
solvable control families: two-level resonant control, the real
three-level rotor, the three-level elliptic and geodesic families, the
Frenet frame flow, the two-qubit exchange chain, and the relativistic
co-rotating-frame problem.  Scenarios cross-validate against the
brachistochrone integrator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .matcore import (ValidationError, as_matrix, check_hermitian, expm_h,
                      ordered_exponential)
from .brach import ControlProblem, evolve, trace_inner

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

# corner coupling generator used by the co-rotating closed forms
_CORNER = np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=complex)


def _sym(n, i, j):
    M = np.zeros((n, n), dtype=complex)
    M[i, j] = M[j, i] = 1.0 / np.sqrt(2.0)
    return M


def _asym(n, i, j):
    M = np.zeros((n, n), dtype=complex)
    M[i, j] = -1j / np.sqrt(2.0)
    M[j, i] = 1j / np.sqrt(2.0)
    return M


def _cartan(n):
    """Orthonormal traceless diagonal generators."""
    out = []
    for k in range(1, n):
        d = np.zeros(n)
        d[:k] = 1.0
        d[k] = -k
        out.append(np.diag(d).astype(complex) / np.sqrt(k * (k + 1)))
    return out


@dataclass(frozen=True)
class Scenario:
    """A named closed-form solution family."""

    name: str
    dim: int
    params: dict
    hamiltonian_at: Callable[[float], np.ndarray]
    propagator_at: Callable[[float], np.ndarray]
    constraint_at: Optional[Callable[[float], np.ndarray]] = None
    psi0: Optional[np.ndarray] = None
    target: Optional[np.ndarray] = None
    min_time: Optional[float] = None
    period: Optional[float] = None
    quantization: Sequence = ()
    problem: Optional[ControlProblem] = None
    extras: dict = field(default_factory=dict)
    _state_fn: Optional[Callable] = None

    def state_at(self, t: float, psi0=None) -> np.ndarray:
        """psi(t); uses the dedicated closed form for the default psi0."""
        if psi0 is None or (self.psi0 is not None
                            and np.allclose(psi0, self.psi0, atol=1e-14)):
            if self._state_fn is not None:
                return self._state_fn(t)
            psi0 = self.psi0
        return self.propagator_at(t) @ np.asarray(psi0, dtype=complex)


def _nearest_multiple_residual(x: float, unit: float) -> float:
    """Distance of x from the nearest integer multiple of `unit`."""
    m = round(x / unit)
    return abs(x - m * unit)


# ---------------------------------------------------------------------------
# two-level resonant control
# ---------------------------------------------------------------------------

def scenario_su2(k: float = 1.0, Omega: float = 0.0,
                 eps0: complex | None = None) -> Scenario:
    """Two-level time-optimal control with a diagonal constraint.

    H(t) = [[0, eps0 e^{2i Omega t}], [eps0* e^{-2i Omega t}, 0]],
    F = Omega sigma_z, U(t) = e^{+i Omega sigma_z t} e^{-i(H(0)+Omega sigma_z)t},
    T_min = pi / (2 sqrt(k)).
    """
    if k <= 0:
        raise ValidationError("k must be positive")
    if eps0 is None:
        eps0 = 1j * np.sqrt(k)
    eps0 = complex(eps0)
    if abs(abs(eps0) ** 2 - k) > 1e-10:
        raise ValidationError("|eps0|^2 must equal the energy bound k")
    H0 = np.array([[0, eps0], [np.conj(eps0), 0]])
    Op = np.sqrt(k + Omega**2)

    def ham(t):
        ph = np.exp(2j * Omega * t)
        return np.array([[0, eps0 * ph], [np.conj(eps0 * ph), 0]])

    def prop(t):
        return expm_h(SIGMA_Z, -Omega * t) @ expm_h(H0 + Omega * SIGMA_Z, t)

    psi0 = np.array([1, 1], dtype=complex) / np.sqrt(2)
    # boundary transfer target exists when eps0 = -eps0* (pure imaginary)
    target = (np.array([1, -1], dtype=complex) / np.sqrt(2)
              if abs(eps0.real) < 1e-12 else None)
    problem = ControlProblem(
        dim=2,
        driver_basis=[SIGMA_X / np.sqrt(2), SIGMA_Y / np.sqrt(2)],
        constraint_basis=[SIGMA_Z / np.sqrt(2)],
        energy_bound_k=k)
    quant = (
        ("rotating-frame angle quantization: Omega' T = m pi/2",
         lambda T: _nearest_multiple_residual(Op * T, np.pi / 2)),
        ("frame angle quantization: Omega T = n pi/2",
         lambda T: _nearest_multiple_residual(Omega * T, np.pi / 2)),
    )
    return Scenario(
        name="su2", dim=2,
        params={"k": k, "Omega": Omega, "eps0": eps0},
        hamiltonian_at=ham,
        propagator_at=prop,
        constraint_at=lambda t: Omega * SIGMA_Z,
        psi0=psi0, target=target,
        min_time=np.pi / (2 * np.sqrt(k)),
        period=(np.pi / Omega if Omega else 2 * np.pi / np.sqrt(k)),
        quantization=quant,
        problem=problem,
        extras={"Omega_prime": Op},
        _state_fn=lambda t: prop(t) @ psi0)


# ---------------------------------------------------------------------------
# real three-level rotor
# ---------------------------------------------------------------------------

def scenario_so3(n_z: float = 0.6, eps: complex = 0.8) -> Scenario:
    """Constant three-level Hamiltonian with spectrum {-R, 0, R}.

    U(t) = 1 - i (sin Rt / R) H + (cos Rt - 1) diag(1,0,1);
    states from e1 are 2pi/R-periodic and acquire a global sign at pi/R.
    """
    eps = complex(eps)
    R2 = n_z**2 + abs(eps) ** 2
    if R2 <= 0:
        raise ValidationError("R = sqrt(n_z^2 + |eps|^2) must be positive")
    R = np.sqrt(R2)
    H = np.array([[n_z, 0, eps], [0, 0, 0], [np.conj(eps), 0, -n_z]])

    def prop(t):
        return (np.eye(3)
                - 1j * (np.sin(R * t) / R) * H
                + (np.cos(R * t) - 1.0) * np.diag([1.0, 0.0, 1.0]))

    def state(t):
        return np.array([
            np.cos(R * t) - 1j * (n_z / R) * np.sin(R * t),
            0.0,
            -1j * (np.conj(eps) / R) * np.sin(R * t)])

    psi0 = np.array([1, 0, 0], dtype=complex)
    problem = ControlProblem(
        dim=3,
        driver_basis=[_sym(3, 0, 2), _asym(3, 0, 2),
                      np.diag([1.0, 0.0, -1.0]).astype(complex) / np.sqrt(2)],
        constraint_basis=[],
        energy_bound_k=R2)
    return Scenario(
        name="so3", dim=3,
        params={"n_z": n_z, "eps": eps},
        hamiltonian_at=lambda t: H,
        propagator_at=prop,
        psi0=psi0,
        period=2 * np.pi / R,
        problem=problem,
        extras={"R": R},
        _state_fn=state)


# ---------------------------------------------------------------------------
# three-level elliptic family
# ---------------------------------------------------------------------------

def scenario_su3_elliptic(R: float = 1.0, Omega: float = 1.0,
                          Delta0: Sequence[complex] = (1 / np.sqrt(2), 0.0,
                                                       1 / np.sqrt(2))
                          ) -> Scenario:
    """Rotating elliptic coupling pattern on three levels.

    H(t) = R [[0, cos Omega t, 0], [cos Omega t, 0, -i sin Omega t],
              [0, i sin Omega t, 0]].
    Delta0 holds the initial eigenbasis coefficients (Delta1, Delta2, Delta3)
    of the state along the {+R, 0, -R} eigenvectors of H(0); the z-parameters
    are z = [[Omega, -iR, 0], [-iR, Omega, 0], [0, 0, 1]] (Delta2, Delta-,
    Delta+) with Delta+- = (Delta1 +- Delta3)/sqrt(2).
    """
    if R <= 0:
        raise ValidationError("R must be positive")
    D = np.asarray(Delta0, dtype=complex).reshape(3)
    if abs(np.linalg.norm(D) - 1.0) > 1e-8:
        raise ValidationError("Delta0 must be normalized")
    Dm = (D[0] - D[2]) / np.sqrt(2)
    Dp = (D[0] + D[2]) / np.sqrt(2)
    T = np.array([[Omega, -1j * R, 0], [-1j * R, Omega, 0], [0, 0, 1]])
    z1, z2, z3 = T @ np.array([D[1], Dm, Dp])
    Op = np.sqrt(R**2 + Omega**2)
    psi0 = np.array([z3,
                     (Omega * z2 + 1j * R * z1) / Op**2,
                     1j * (Omega * z1 + 1j * R * z2) / Op**2])

    H0 = R * np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex)
    W = H0 + Omega * _CORNER

    def ham(t):
        c, s = np.cos(Omega * t), np.sin(Omega * t)
        return R * np.array([[0, c, 0], [c, 0, -1j * s], [0, 1j * s, 0]])

    def prop(t):
        return expm_h(_CORNER, -Omega * t) @ expm_h(W, t)

    problem = ControlProblem(
        dim=3,
        driver_basis=[_sym(3, 0, 1), _asym(3, 1, 2)],
        constraint_basis=[_sym(3, 0, 2)],
        energy_bound_k=R**2)
    return Scenario(
        name="su3-elliptic", dim=3,
        params={"R": R, "Omega": Omega, "Delta0": tuple(D)},
        hamiltonian_at=ham,
        propagator_at=prop,
        constraint_at=lambda t: Omega * _CORNER,
        psi0=psi0,
        period=(2 * np.pi / abs(Omega) if Omega else 2 * np.pi / R),
        problem=problem,
        extras={"Omega_prime": Op, "z": (z1, z2, z3)},
        _state_fn=lambda t: prop(t) @ psi0)


def elliptic_printed_state(R: float, Omega: float, z: Sequence[complex],
                           t: float) -> np.ndarray:
    """The c_j(t) display exactly as printed (kept for discrepancy reports).

    The display is internally inconsistent: c1's leading prefactor reads
    sin(Omega' t) where the dynamics require sin(Omega t), c2's sin term is
    short one factor of Omega', and c3/psi(0) disagree about the phase of
    the third component.  See elliptic state discrepancy records.
    """
    z1, z2, z3 = z
    Op = np.sqrt(R**2 + Omega**2)
    c, s = np.cos(Omega * t), np.sin(Omega * t)
    cp, sp = np.cos(Op * t), np.sin(Op * t)
    c1 = (-(sp / Op) * (1j * z2 * R / Op + Omega * ((z1 / Op) * cp - z3 * sp))
          + c * (z3 * cp + z1 * sp / Op))
    c2 = (Omega * z2 + 1j * R * (z1 * cp - z3 * sp)) / Op**2
    c3 = ((c / Op) * (1j * z2 * R / Op + Omega * (z1 * cp / Op - z3 * sp))
          - 1j * s * (z3 * cp + (z1 / Op) * sp))
    return np.array([c1, c2, c3])


# ---------------------------------------------------------------------------
# three-level geodesic family
# ---------------------------------------------------------------------------

def scenario_su3_geodesic(eps1_0: complex = 1.0,
                          kappa: complex = 1 / np.sqrt(3),
                          theta: float | None = None,
                          R: float | None = None) -> Scenario:
    """Three-level ladder driver with a corner constraint (omega1=omega2=0).

    U(t) = exp(+itF) exp(-it(H(0)+F)); minimum transfer time e1 -> e3 is
    pi/(2|kappa|), equal to sqrt(3) pi/(2|eps1(0)|) on the consistency locus
    |kappa| = |eps1(0)|/sqrt(3).  R, if given, sets |eps1(0)| directly
    (eps1_0 must then be left at its default).
    """
    if R is not None:
        eps1_0 = R
    eps1_0, kappa = complex(eps1_0), complex(kappa)
    if abs(kappa) == 0:
        raise ValidationError("kappa must be nonzero")
    if abs(eps1_0) == 0:
        raise ValidationError("eps1(0) must be nonzero")
    R = abs(eps1_0)
    kmod = abs(kappa)
    phi = np.angle(eps1_0)
    theta_computed = float(np.angle(1j * np.exp(1j * phi) * np.conj(kappa)))
    if theta is not None:
        dev = abs(np.exp(1j * theta) - np.exp(1j * theta_computed))
        if dev > 1e-8:
            raise ValidationError(
                "theta inconsistent with arg(eps1(0)) and arg(kappa): "
                f"expected {theta_computed:.12f}")
    theta = theta_computed
    Delta = np.sqrt(kmod**2 + R**2)
    H0 = np.array([[0, eps1_0, 0], [np.conj(eps1_0), 0, 0], [0, 0, 0]])
    F = np.array([[0, 0, kappa], [0, 0, 0], [np.conj(kappa), 0, 0]])

    def ham(t):
        ck, sk = np.cos(kmod * t), np.sin(kmod * t)
        return R * np.array([
            [0, np.exp(1j * phi) * ck, 0],
            [np.exp(-1j * phi) * ck, 0, np.exp(-1j * theta) * sk],
            [0, np.exp(1j * theta) * sk, 0]])

    def prop(t):
        return expm_h(F, -t) @ expm_h(H0 + F, t)

    def state(t):
        cd, sd = np.cos(t * Delta), np.sin(t * Delta)
        ck, sk = np.cos(kmod * t), np.sin(kmod * t)
        return np.array([
            cd * ck + (kmod / Delta) * sk * sd,
            -(1j * np.conj(eps1_0) / Delta) * sd,
            1j * np.conj(kappa) * (sk * cd / kmod - sd * ck / Delta)])

    psi0 = np.array([1, 0, 0], dtype=complex)
    problem = ControlProblem(
        dim=3,
        driver_basis=[_sym(3, 0, 1), _asym(3, 0, 1),
                      _sym(3, 1, 2), _asym(3, 1, 2)],
        constraint_basis=[_sym(3, 0, 2), _asym(3, 0, 2)],
        energy_bound_k=R**2)
    quant = (
        ("node condition: T Delta = n pi",
         lambda T: _nearest_multiple_residual(T * Delta, np.pi)),
        ("transfer condition: T |kappa| = (2n'+1) pi/2",
         lambda T: abs(((T * kmod) - np.pi / 2) -
                       round(((T * kmod) - np.pi / 2) / np.pi) * np.pi)),
    )
    return Scenario(
        name="su3-geodesic", dim=3,
        params={"eps1_0": eps1_0, "kappa": kappa, "theta": theta},
        hamiltonian_at=ham,
        propagator_at=prop,
        constraint_at=lambda t: F,
        psi0=psi0,
        target=np.array([0, 0, 1], dtype=complex),
        min_time=np.pi / (2 * kmod),
        period=2 * np.pi / kmod,
        quantization=quant,
        problem=problem,
        extras={"Delta": Delta,
                "min_time_from_eps": np.sqrt(3) * np.pi / (2 * R)},
        _state_fn=state)


# ---------------------------------------------------------------------------
# Frenet frame flow
# ---------------------------------------------------------------------------

def scenario_frenet(A: float = 1.0, B: float = 0.5, C: float = -0.5,
                    N: float = 1.0, eta: float = 0.7) -> Scenario:
    """Curvature/torsion rotor: K = C sin(eta t) + N cos(eta t),
    T = A sin(eta t) + B cos(eta t), H = i * antisymmetric(K, T).

    Requires the circle constraint K^2 + T^2 = const (A = N, C = -B).
    """
    R2 = N**2 + B**2
    if R2 <= 0:
        raise ValidationError("K(0)^2 + T(0)^2 must be positive")
    ts = np.linspace(0.0, 2 * np.pi / max(abs(eta), 1.0), 41)
    radii = [(C * np.sin(eta * t) + N * np.cos(eta * t)) ** 2
             + (A * np.sin(eta * t) + B * np.cos(eta * t)) ** 2 for t in ts]
    if max(radii) - min(radii) > 1e-8 * max(max(radii), 1.0):
        raise ValidationError("circle constraint violated: K^2 + T^2 varies")
    R = np.sqrt(R2)
    MF = np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]])

    def kt(t):
        return (C * np.sin(eta * t) + N * np.cos(eta * t),
                A * np.sin(eta * t) + B * np.cos(eta * t))

    def ham(t):
        K, T = kt(t)
        return np.array([[0, -1j * K, 0], [1j * K, 0, -1j * T],
                         [0, 1j * T, 0]])

    H0 = ham(0.0)

    def prop(t):
        return expm_h(MF, -eta * t) @ expm_h(H0 + eta * MF, t)

    delta = np.arctan2(B, N)    # K = R cos(eta t + delta), T = R sin(...)

    def eigvecs(t):
        """Eigenvector triple of H at angle u = eta t + delta: columns for
        eigenvalues (+R, 0, -R)."""
        u = eta * t + delta
        plus = np.array([-1j * np.cos(u), 1, 1j * np.sin(u)]) / np.sqrt(2)
        zero = np.array([1j * np.sin(u), 0, 1j * np.cos(u)])
        minus = np.array([1j * np.cos(u), 1, -1j * np.sin(u)]) / np.sqrt(2)
        return plus, zero, minus

    psi0 = np.array([1, 0, 0], dtype=complex)
    problem = ControlProblem(
        dim=3,
        driver_basis=[_asym(3, 0, 1), _asym(3, 1, 2)],
        constraint_basis=[_asym(3, 0, 2)],
        energy_bound_k=R2)
    return Scenario(
        name="frenet", dim=3,
        params={"A": A, "B": B, "C": C, "N": N, "eta": eta},
        hamiltonian_at=ham,
        propagator_at=prop,
        constraint_at=lambda t: eta * MF,
        psi0=psi0,
        period=(2 * np.pi / abs(eta) if eta else 2 * np.pi / R),
        problem=problem,
        extras={"R": R, "eigvecs": eigvecs},
        _state_fn=lambda t: prop(t) @ psi0)


# ---------------------------------------------------------------------------
# two-qubit exchange chain
# ---------------------------------------------------------------------------

def _pauli_products():
    sig = {"x": SIGMA_X, "y": SIGMA_Y, "z": SIGMA_Z}
    return sig


def scenario_su4_heisenberg(lambda_x: float = 1.0, seed: int = 42) -> Scenario:
    """Isotropic-exchange driver with lambda_y = -lambda_x, lambda_z = 0.

    H is constant; from e1 the state is (cos 2 lx t, 0, 0, -i sin 2 lx t),
    reaching the maximally entangled (|00> - i|11>)/sqrt(2) at t = pi/(8 lx).
    The printed transfer-time claim T = pi/lambda_x is recorded alongside the
    computed first-passage time; neither is asserted as "the" minimum.
    """
    if lambda_x == 0:
        raise ValidationError("lambda_x must be nonzero")
    lx = float(lambda_x)
    sig = _pauli_products()
    driver = [np.kron(sig[a], sig[a]) / 2.0 for a in ("x", "y", "z")]
    constraint = ([np.kron(sig[a], np.eye(2)) / 2.0 for a in "xyz"]
                  + [np.kron(np.eye(2), sig[a]) / 2.0 for a in "xyz"]
                  + [np.kron(sig[a], sig[b]) / 2.0
                     for a in "xyz" for b in "xyz" if a != b])
    H0 = lx * (np.kron(SIGMA_X, SIGMA_X) - np.kron(SIGMA_Y, SIGMA_Y))
    rng = np.random.default_rng(seed)
    coeffs = rng.normal(scale=0.5, size=len(constraint))
    F0 = sum(c * g for c, g in zip(coeffs, constraint))

    def state(t):
        return np.array([np.cos(2 * lx * t), 0, 0, -1j * np.sin(2 * lx * t)])

    psi0 = np.array([1, 0, 0, 0], dtype=complex)
    bell = np.array([1, 0, 0, -1j], dtype=complex) / np.sqrt(2)
    problem = ControlProblem(dim=4, driver_basis=driver,
                             constraint_basis=constraint,
                             energy_bound_k=4 * lx**2)
    return Scenario(
        name="su4-heisenberg", dim=4,
        params={"lambda_x": lx},
        hamiltonian_at=lambda t: H0,
        propagator_at=lambda t: expm_h(H0, t),
        constraint_at=lambda t: F0,
        psi0=psi0,
        target=bell,
        period=np.pi / lx,
        problem=problem,
        extras={"bell_time": np.pi / (8 * lx),
                "printed_min_time_claim": np.pi / lx,
                "printed_state_prefactor": 1 / np.sqrt(2)},
        _state_fn=state)


# ---------------------------------------------------------------------------
# relativistic co-rotating frame
# ---------------------------------------------------------------------------

def scenario_dirac(alpha: float = 0.5, p_z: float = 0.5,
                   eps: complex = complex(np.sqrt(0.5)),
                   xi1: complex = 0.3, xi2: complex = -0.2,
                   A: np.ndarray | None = None) -> Scenario:
    """Four-level problem with H(t)^2 = 1 and pi-periodic Hamiltonian.

    H(t) = [[alpha 1, e^{-2it} B], [e^{+2it} B, -alpha 1]] with the
    Hermitian block B = [[p_z, eps], [eps*, -p_z]]; requires the unit-energy
    rescaling alpha^2 + p_z^2 + |eps|^2 = 1.  The frame transform is
    U_frame(t) = diag(e^{it} 1, e^{-it} 1).
    """
    eps = complex(eps)
    norm2 = alpha**2 + p_z**2 + abs(eps) ** 2
    if abs(norm2 - 1.0) > 1e-10:
        raise ValidationError(
            f"alpha^2 + p_z^2 + |eps|^2 must equal 1 (got {norm2:.12f})")
    B = np.array([[p_z, eps], [np.conj(eps), -p_z]])
    if A is None:
        # default off-diagonal block chosen so Tr(H F) = 0 at all times
        A = np.array([[0, 1j * eps], [1j * np.conj(eps), 0]])
    A = as_matrix(A)
    X1 = np.array([[0, xi1], [np.conj(xi1), 0]])
    X2 = np.array([[0, xi2], [np.conj(xi2), 0]])
    H0 = np.block([[alpha * np.eye(2), B], [B.conj().T, -alpha * np.eye(2)]])
    K = np.diag([1.0, 1.0, -1.0, -1.0]).astype(complex)
    W = np.kron((SIGMA_X + SIGMA_Z) / np.sqrt(2), np.eye(2))
    # column-eigenvector map; the printed form lacks the 1/sqrt(2) needed
    # for P P^dag = 1, which is restored here (discrepancy recorded)
    b_block = alpha * np.eye(2) + 1j * np.array(
        [[p_z, eps], [np.conj(eps), -p_z]])
    P = np.block([[np.eye(2), np.eye(2)],
                  [b_block, -b_block]]) / np.sqrt(2)

    def frame_at(t):
        return np.diag(np.exp(1j * t * np.array([1.0, 1.0, -1.0, -1.0])))

    def ham(t):
        ph = np.exp(-2j * t)
        return np.block([[alpha * np.eye(2), ph * B],
                         [np.conj(ph) * B.conj().T, -alpha * np.eye(2)]])

    def constraint(t):
        ph = np.exp(-2j * t)
        return np.block([[X1, ph * A], [np.conj(ph) * A.conj().T, X2]])

    def prop(t):
        return expm_h(K, t) @ expm_h(H0 - K, t)

    psi0 = np.array([1, 0, 0, 0], dtype=complex)
    return Scenario(
        name="dirac", dim=4,
        params={"alpha": alpha, "p_z": p_z, "eps": eps,
                "xi1": xi1, "xi2": xi2},
        hamiltonian_at=ham,
        propagator_at=prop,
        constraint_at=constraint,
        psi0=psi0,
        period=np.pi,
        min_time=np.pi,  # T_min * ||E|| = pi with ||E|| = 1 after rescaling
        extras={"W": W, "P": P, "frame_at": frame_at, "B": B},
        _state_fn=lambda t: prop(t) @ psi0)


# ---------------------------------------------------------------------------
# dimensional families and three-level partitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyInstance:
    """A randomized (H0, F0) pair on one of the sparsity-pattern families."""

    n: int
    kind: str
    H0: np.ndarray
    F0: np.ndarray
    problem: ControlProblem


def family_sun(n: int, kind: str, seed: int = 42) -> FamilyInstance:
    """Build one of the three sparsity-pattern control families.

    kind 'antidiagonal': H = diagonal + antidiagonal couplings, F = the rest.
    kind 'tridiagonal':  H = nearest-neighbor couplings (zero diagonal),
                         F = diagonal + couplings with |i-j| >= 2.
    kind 'diagonal':     H = traceless diagonal, F = all off-diagonal.

    For the diagonal kind H is exactly constant under the flow (a commutator
    with a diagonal matrix has no diagonal part); for the other two kinds the
    constancy claim is tested by the integrator and the residual reported.
    """
    if not (2 <= n <= 8):
        raise ValidationError("n must be between 2 and 8")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    anti = {(i, j) for (i, j) in pairs if i + j == n - 1}
    near = {(i, j) for (i, j) in pairs if j == i + 1}
    far = set(pairs) - near
    cart = _cartan(n)

    def couple(ps):
        out = []
        for (i, j) in sorted(ps):
            out.append(_sym(n, i, j))
            out.append(_asym(n, i, j))
        return out

    if kind == "antidiagonal":
        driver = cart + couple(anti)
        constraint = couple(set(pairs) - anti)
    elif kind == "tridiagonal":
        driver = couple(near)
        constraint = cart + couple(far)
    elif kind == "diagonal":
        driver = cart
        constraint = couple(pairs)
    else:
        raise ValidationError(f"unknown family kind: {kind}")

    rng = np.random.default_rng(seed)
    hc = rng.normal(size=len(driver))
    hc *= np.sqrt(2.0) / np.linalg.norm(hc)      # Tr(H^2)/2 = 1
    fc = rng.normal(scale=0.6, size=len(constraint))
    H0 = np.zeros((n, n), dtype=complex)
    for c, g in zip(hc, driver):
        H0 += c * g
    F0 = np.zeros((n, n), dtype=complex)
    for c, g in zip(fc, constraint):
        F0 += c * g
    problem = ControlProblem(dim=n, driver_basis=driver,
                             constraint_basis=constraint, energy_bound_k=1.0)
    return FamilyInstance(n=n, kind=kind, H0=H0, F0=F0, problem=problem)


@dataclass(frozen=True)
class PartitionResult:
    index: int
    description: str
    H0: np.ndarray
    F0: np.ndarray
    problem: ControlProblem
    classification: str         # constant | periodic | neither
    period: Optional[float]
    max_excursion: float


def _evolve_pair(problem, H, F, n_steps, dt, ref=None):
    """Lean RK4 on (H, F) only.

    Returns the endpoint and per-step max-entry distances of H from `ref`
    (defaults to the starting H).
    """
    d = np.empty(n_steps)
    H0 = H.copy() if ref is None else ref

    def rhs(H, F):
        C = -1j * (H @ F - F @ H)
        return problem.project_driver(C), problem.project_constraint(C)

    for s in range(n_steps):
        k1H, k1F = rhs(H, F)
        k2H, k2F = rhs(H + 0.5 * dt * k1H, F + 0.5 * dt * k1F)
        k3H, k3F = rhs(H + 0.5 * dt * k2H, F + 0.5 * dt * k2F)
        k4H, k4F = rhs(H + dt * k3H, F + dt * k3F)
        H = H + (dt / 6) * (k1H + 2 * k2H + 2 * k3H + k4H)
        F = F + (dt / 6) * (k1F + 2 * k2F + 2 * k3F + k4F)
        H = problem.project_driver(0.5 * (H + H.conj().T))
        F = problem.project_constraint(0.5 * (F + F.conj().T))
        d[s] = np.max(np.abs(H - H0))
    return H, F, d


def _classify_flow(problem, H0, F0, t_max=50.0, dt=1e-3,
                   tol=1e-6) -> tuple[str, Optional[float], float]:
    """Grid search for recurrence of H(t) to H(0), with local refinement.

    The coarse grid (dt=1e-3) cannot itself resolve a recurrence to 1e-6
    (the trajectory crosses H0 at finite speed), so candidate minima are
    refined by re-integrating a shrinking window at smaller steps.
    """
    n_steps = int(round(t_max / dt))
    snap_every = 100
    snaps = {0: (H0.copy(), F0.copy())}
    H, F = H0.copy(), F0.copy()
    dists = np.empty(n_steps + 1)
    dists[0] = 0.0
    chunk = snap_every
    for start in range(0, n_steps, chunk):
        m = min(chunk, n_steps - start)
        H, F, d = _evolve_pair(problem, H, F, m, dt, ref=H0)
        dists[start + 1:start + m + 1] = d
        snaps[start + m] = (H.copy(), F.copy())
    max_exc = float(np.max(dists))
    if max_exc <= 1e-10:
        return "constant", None, max_exc
    # candidate recurrences: local minima after the trajectory has moved away
    moved = np.argmax(dists > max(1e-3, 0.05 * max_exc))
    if moved == 0:
        return "neither", None, max_exc
    best = None
    for s in range(int(moved) + 1, n_steps):
        if dists[s] < 1e-2 and dists[s] <= dists[s - 1] and \
                (s == n_steps - 1 or dists[s] <= dists[s + 1]):
            t_ref, d_ref = _refine_recurrence(problem, snaps, snap_every,
                                              dt, s, H0)
            if d_ref < tol:
                best = (t_ref, d_ref)
                break
    if best is not None:
        return "periodic", best[0], max_exc
    return "neither", None, max_exc


def _refine_recurrence(problem, snaps, snap_every, dt, s, H0):
    """Two-stage step refinement of a candidate recurrence near step s."""
    base = (s // snap_every) * snap_every
    H, F = snaps[base]
    t0, width = base * dt, (s - base) * dt
    lo = max(t0, t0 + width - 2 * dt)
    # integrate from the snapshot up to the window start
    n_pre = int(round((lo - t0) / dt))
    if n_pre:
        H, F, _ = _evolve_pair(problem, H, F, n_pre, dt, ref=H0)
    t_best, d_best = lo, float(np.max(np.abs(H - H0)))
    dt_fine, span = dt / 50.0, 4 * dt
    for _ in range(2):
        n_f = int(round(span / dt_fine))
        Hf, Ff, d = _evolve_pair(problem, H.copy(), F.copy(), n_f, dt_fine,
                                 ref=H0)
        i = int(np.argmin(d))
        if d[i] < d_best:
            d_best, t_best = float(d[i]), lo + (i + 1) * dt_fine
        # narrow onto the minimum for the second pass
        n_pre2 = max(i - 25, 0)
        if n_pre2:
            H, F, _ = _evolve_pair(problem, H, F, n_pre2, dt_fine, ref=H0)
            lo += n_pre2 * dt_fine
        span, dt_fine = 50 * dt_fine, dt_fine / 50.0
    return t_best, d_best


def su3_partitions(t_max: float = 50.0, dt: float = 1e-3,
                   seed: int = 42) -> list[PartitionResult]:
    """The four three-level driver/constraint splittings, classified.

    Each pattern pair is integrated and H(t) classified as constant,
    periodic (recurrence search on ||H(t) - H(0)||), or neither.
    """
    rng = np.random.default_rng(seed)
    cart = _cartan(3)
    results = []

    def rand_coeffs(k, scale=1.0):
        return rng.normal(scale=scale, size=k)

    # 1: diagonal H, fully off-diagonal F
    d_basis = cart
    c_basis = [_sym(3, i, j) for i in range(3) for j in range(i + 1, 3)] + \
              [_asym(3, i, j) for i in range(3) for j in range(i + 1, 3)]
    H0 = sum(c * g for c, g in zip(rand_coeffs(2), d_basis))
    F0 = sum(c * g for c, g in zip(rand_coeffs(6, 0.7), c_basis))
    specs = [("diagonal driver | off-diagonal constraint",
              d_basis, c_basis, H0, F0)]

    # 2: ladder H (geodesic pattern), diagonal+corner F with omega = 0
    d_basis = [_sym(3, 0, 1), _asym(3, 0, 1), _sym(3, 1, 2), _asym(3, 1, 2)]
    c_basis = cart + [_sym(3, 0, 2), _asym(3, 0, 2)]
    kap = (1 / np.sqrt(3)) * np.exp(1j * rng.uniform(0, 2 * np.pi))
    H0 = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex)
    F0 = np.array([[0, 0, kap], [0, 0, 0], [np.conj(kap), 0, 0]])
    specs.append(("ladder driver | diagonal + corner constraint",
                  d_basis, c_basis, H0, F0))

    # 3: corner H, tridiagonal + diagonal F
    d_basis = [_sym(3, 0, 2), _asym(3, 0, 2)]
    c_basis = cart + [_sym(3, 0, 1), _asym(3, 0, 1),
                      _sym(3, 1, 2), _asym(3, 1, 2)]
    H0 = sum(c * g for c, g in zip(rand_coeffs(2), d_basis))
    F0 = sum(c * g for c, g in zip(rand_coeffs(6, 0.7), c_basis))
    specs.append(("corner driver | tridiagonal + diagonal constraint",
                  d_basis, c_basis, H0, F0))

    # 4: upper-block H, complementary F
    d_basis = [np.diag([1.0, -1.0, 0.0]).astype(complex) / np.sqrt(2),
               _sym(3, 0, 1), _asym(3, 0, 1)]
    c_basis = [np.diag([1.0, 1.0, -2.0]).astype(complex) / np.sqrt(6),
               _sym(3, 0, 2), _asym(3, 0, 2), _sym(3, 1, 2), _asym(3, 1, 2)]
    H0 = sum(c * g for c, g in zip(rand_coeffs(3), d_basis))
    F0 = sum(c * g for c, g in zip(rand_coeffs(5, 0.7), c_basis))
    specs.append(("two-level block driver | complementary constraint",
                  d_basis, c_basis, H0, F0))

    for idx, (desc, db, cb, H0, F0) in enumerate(specs, start=1):
        problem = ControlProblem(dim=3, driver_basis=db, constraint_basis=cb,
                                 energy_bound_k=max(trace_inner(H0, H0) / 2,
                                                    1e-12))
        H0p = problem.project_driver(H0)
        F0p = problem.project_constraint(F0)
        cls, period, exc = _classify_flow(problem, H0p, F0p, t_max, dt)
        results.append(PartitionResult(idx, desc, H0p, F0p, problem,
                                       cls, period, exc))
    return results


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ValidationReport:
    scenario: str
    deviations: dict
    diagnostics: dict = field(default_factory=dict)

    def max_deviation(self) -> float:
        return max(self.deviations.values())

    def passed(self, tol: float) -> bool:
        return self.max_deviation() <= tol


def validate(scenario: Scenario, tol: float = 1e-6,
             dt: float = 1e-3, t_check: float | None = None,
             n_grid: int = 100) -> ValidationReport:
    """Cross-check a scenario's analytic data against the integrator.

    Compares (a) the analytic propagator against the step-ordered exponential
    of the analytic H(t), (b) analytic H(t)/psi(t) against the
    brachistochrone integrator where a ControlProblem is attached,
    (c) quantization residuals at the claimed minimum time.
    """
    T = t_check if t_check is not None else (scenario.period or 1.0)
    grid = np.linspace(0.0, T, n_grid)
    dev = {}

    uni = 0.0
    stat = 0.0
    schro = 0.0
    trhf = 0.0
    h = 1e-6
    for t in grid:
        U = scenario.propagator_at(t)
        uni = max(uni, float(np.max(np.abs(U.conj().T @ U - np.eye(scenario.dim)))))
        psi = scenario.state_at(t)
        stat = max(stat, float(np.max(np.abs(psi - U @ scenario.psi0))))
        dpsi = (scenario.state_at(t + h) - scenario.state_at(t - h)) / (2 * h)
        schro = max(schro, float(np.max(np.abs(
            1j * dpsi - scenario.hamiltonian_at(t) @ psi))))
        if scenario.constraint_at is not None:
            trhf = max(trhf, abs(trace_inner(scenario.hamiltonian_at(t),
                                             scenario.constraint_at(t))))
    dev["propagator_unitarity"] = uni
    dev["state_vs_propagator"] = stat
    dev["schrodinger_residual"] = schro
    if scenario.constraint_at is not None:
        dev["trace_HF"] = trhf

    t_ord = min(T, 1.0)
    U_num = ordered_exponential(scenario.hamiltonian_at, t_ord, dt)
    dev["ordered_exponential"] = float(
        np.max(np.abs(U_num - scenario.propagator_at(t_ord))))

    if scenario.problem is not None:
        F0 = (scenario.constraint_at(0.0) if scenario.constraint_at is not None
              else np.zeros((scenario.dim, scenario.dim), dtype=complex))
        t_evo = min(T, 2.0)
        traj = evolve(scenario.problem, scenario.hamiltonian_at(0.0), F0,
                      scenario.psi0, t_evo, dt=dt, record_every=10)
        errH = max(float(np.max(np.abs(H - scenario.hamiltonian_at(t))))
                   for t, H in zip(traj.times, traj.Hs))
        errpsi = max(float(np.max(np.abs(p - scenario.state_at(t))))
                     for t, p in zip(traj.times, traj.psis))
        dev["integrator_H"] = errH
        dev["integrator_state"] = errpsi

    # minimum-time claims hold only on the quantization locus of the
    # parameters, so they are reported as diagnostics rather than folded
    # into the pass/fail deviation maximum
    diag = {}
    if scenario.min_time is not None and scenario.quantization:
        for i, (desc, fn) in enumerate(scenario.quantization):
            diag[f"quantization_{i}"] = float(fn(scenario.min_time))
    if scenario.target is not None and scenario.min_time is not None:
        psiT = scenario.state_at(scenario.min_time)
        diag["transfer_infidelity"] = float(
            1.0 - abs(np.vdot(scenario.target, psiT)) ** 2)

    return ValidationReport(scenario=scenario.name, deviations=dev,
                            diagnostics=diag)


SCENARIO_BUILDERS = {
    "su2": scenario_su2,
    "so3": scenario_so3,
    "su3-elliptic": scenario_su3_elliptic,
    "su3-geodesic": scenario_su3_geodesic,
    "frenet": scenario_frenet,
    "su4-heisenberg": scenario_su4_heisenberg,
    "dirac": scenario_dirac,
}
