"""Linearized fluctuation dynamics: drift matrix, diffusion matrix, stability.

Quadratures use the 1/sqrt(2) convention, X = (a + a*)/sqrt(2) etc., so the
vacuum variance is 1/2 and the diffusion matrix carries kappa (not 2 kappa).
The fluctuation basis is u = (dX, dY, dQ, dP).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .meanfield import MeanFieldBranch
from .model import DerivedParams, bogoliubov_frequency, thermal_occupation

MARGINAL_BAND = 1e-6  # in units of kappa


class InternalConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


@dataclass(frozen=True)
class DriftDiffusion:
    """Drift matrix A and diffusion matrix D for one mean-field branch."""

    A: np.ndarray
    D: np.ndarray
    G_R: float
    G_I: float
    F_R: float
    F_I: float
    n_c: float
    kappa: float
    gamma: float
    omega_B: float


@dataclass(frozen=True)
class StabilityReport:
    eigenvalues: tuple
    max_real_part: float
    routh_hurwitz_pass: bool
    stable: bool        # max_real_part < 0
    marginal: bool      # |max_real_part| <= 1e-6 * kappa


def drift_matrix(Delta, Omega_plus, Omega_minus, kappa, gamma,
                 G_R, G_I, F_R, F_I) -> np.ndarray:
    """Assemble the 4x4 drift matrix from its coefficients."""
    return np.array([
        [-kappa,  Delta,   G_I,          F_I],
        [-Delta, -kappa,  -G_R,         -F_R],
        [F_R,     F_I,    -gamma,        Omega_minus],
        [-G_R,   -G_I,    -Omega_plus,  -gamma],
    ])


def build_drift_diffusion(d: DerivedParams, b: MeanFieldBranch) -> DriftDiffusion:
    """Drift and diffusion matrices at a mean-field branch.

    Couplings: G = 2*alpha*(zeta + g*beta_R) splits into (G_R, G_I) by the
    real/imaginary parts of alpha; F = 2*g*alpha*beta_I likewise. Thermal
    occupation n_c is evaluated at the dressed frequency omega_B, which with
    the cross-Kerr coupling disabled (g=0) reduces to the undressed omega_c.
    """
    aR, aI = b.alpha.real, b.alpha.imag
    bR, bI = b.beta.real, b.beta.imag
    G_R = 2.0 * aR * (d.zeta + d.g * bR)
    G_I = 2.0 * aI * (d.zeta + d.g * bR)
    F_R = 2.0 * d.g * aR * bI
    F_I = 2.0 * d.g * aI * bI
    A = drift_matrix(b.Delta, b.Omega_plus, b.Omega_minus, d.kappa, d.gamma,
                     G_R, G_I, F_R, F_I)
    omega_B = bogoliubov_frequency(d, b.n_photon)
    n_c = thermal_occupation(omega_B, d.T)
    therm = d.gamma * (2.0 * n_c + 1.0)
    D = np.diag([d.kappa, d.kappa, therm, therm])
    return DriftDiffusion(A=A, D=D, G_R=G_R, G_I=G_I, F_R=F_R, F_I=F_I,
                          n_c=n_c, kappa=d.kappa, gamma=d.gamma,
                          omega_B=omega_B)


def langevin_drift_field(d: DerivedParams, state) -> np.ndarray:
    """Noise-free nonlinear drift of the quadrature vector (X, Y, Q, P).

    This is the full nonlinear Langevin right-hand side in complex-amplitude
    form, mapped to quadratures via a = (X + iY)/sqrt(2), c = (Q + iP)/sqrt(2).
    It serves as the fixed-point and Jacobian oracle for the linearized drift:
    its value vanishes at a mean-field branch and its Jacobian there equals
    the drift matrix.
    """
    X, Y, Q, P = state
    a = complex(X, Y) / math.sqrt(2.0)
    c = complex(Q, P) / math.sqrt(2.0)
    da = (-(1j * d.delta_c + d.kappa) * a
          - 1j * d.zeta * a * (c + c.conjugate())
          - 1j * d.g * a * abs(c) ** 2
          - d.eta)
    dc = (-(1j * d.Omega_c + d.gamma) * c
          - 0.5j * d.omega_sw * c.conjugate()
          - 1j * d.zeta * abs(a) ** 2
          - 1j * d.g * abs(a) ** 2 * c)
    s2 = math.sqrt(2.0)
    return np.array([s2 * da.real, s2 * da.imag, s2 * dc.real, s2 * dc.imag])


def quadrature_fixed_point(b: MeanFieldBranch) -> np.ndarray:
    s2 = math.sqrt(2.0)
    return np.array([s2 * b.alpha.real, s2 * b.alpha.imag,
                     s2 * b.beta.real, s2 * b.beta.imag])


def finite_difference_jacobian(d: DerivedParams, state,
                               rel_step: float = 1e-6) -> np.ndarray:
    """Central-difference Jacobian of the Langevin drift field."""
    state = np.asarray(state, dtype=float)
    n = state.size
    J = np.empty((n, n))
    for j in range(n):
        h = rel_step * max(abs(state[j]), 1.0)
        up = state.copy()
        dn = state.copy()
        up[j] += h
        dn[j] -= h
        J[:, j] = (langevin_drift_field(d, up) - langevin_drift_field(d, dn)) / (2.0 * h)
    return J


def characteristic_coefficients(A: np.ndarray) -> tuple[float, float, float, float]:
    """Coefficients (a3, a2, a1, a0) of det(sI - A) via Faddeev-LeVerrier.

    Uses traces of matrix powers only, keeping the result independent of any
    eigensolver.
    """
    p1 = np.trace(A)
    A2 = A @ A
    p2 = np.trace(A2)
    A3 = A2 @ A
    p3 = np.trace(A3)
    p4 = np.trace(A3 @ A)
    a3 = -p1
    a2 = (p1 * p1 - p2) / 2.0
    a1 = -(p1 ** 3 - 3.0 * p1 * p2 + 2.0 * p3) / 6.0
    a0 = (p1 ** 4 - 6.0 * p1 * p1 * p2 + 3.0 * p2 * p2
          + 8.0 * p1 * p3 - 6.0 * p4) / 24.0
    return float(a3), float(a2), float(a1), float(a0)


def routh_hurwitz_quartic(a3: float, a2: float, a1: float, a0: float) -> bool:
    """Hurwitz conditions for s^4 + a3 s^3 + a2 s^2 + a1 s + a0."""
    c1 = a3
    c2 = a3 * a2 - a1
    c3 = c2 * a1 - a3 * a3 * a0
    return c1 > 0.0 and c2 > 0.0 and c3 > 0.0 and a0 > 0.0


def classify_stability(dd: DriftDiffusion) -> StabilityReport:
    """Eigenvalue and Routh-Hurwitz stability verdicts for the drift matrix.

    The two verdicts must agree whenever the spectrum is bounded away from
    the imaginary axis by more than 1e-6*kappa; a disagreement outside that
    band raises InternalConsistencyError.
    """
    # scale out the rate magnitude so the quartic coefficients stay O(1)
    scale = float(np.max(np.abs(dd.A)))
    if scale == 0.0 or not np.isfinite(scale):
        raise ValueError("drift matrix must be finite and nonzero")
    An = dd.A / scale
    eigs = np.linalg.eigvals(dd.A)
    max_real = float(np.max(eigs.real))
    rh = routh_hurwitz_quartic(*characteristic_coefficients(An))
    stable = max_real < 0.0
    marginal = abs(max_real) <= MARGINAL_BAND * dd.kappa
    if not marginal and rh != stable:
        raise InternalConsistencyError(
            f"Routh-Hurwitz verdict {rh} contradicts eigenvalue verdict "
            f"{stable} (max_real_part={max_real:.6e} rad/s)")
    return StabilityReport(
        eigenvalues=tuple(complex(z) for z in eigs),
        max_real_part=max_real,
        routh_hurwitz_pass=rh,
        stable=stable,
        marginal=marginal,
    )
