"""Steady-state mean fields and bistable branch enumeration.

The coupled steady-state conditions

    alpha = -eta / (i*Delta + kappa)
    beta  = -zeta*|alpha|^2 * (Omega_minus + i*gamma) / (Omega_plus*Omega_minus + gamma^2)
    Delta = delta_c + 2*zeta*beta_R + g*|beta|^2

close under substitution into a single scalar unknown n = |alpha|^2. Roots of

    f(n) = n * (Delta(n)^2 + kappa^2) - eta^2

are exactly the self-consistent photon numbers, so exhaustive 1-D bracketing
on [0, eta^2/kappa^2] enumerates every branch, including all bistable ones.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import DerivedParams, omega_pm

GRID_POINTS_DEFAULT = 20001
BISECT_RTOL = 1e-12
DEDUPE_RTOL = 1e-9
# refinement pass triggers where |f| at both cell endpoints drops below this
# fraction of max|f| on the initial grid (near-tangent fold suspect)
REFINE_FRACTION = 1e-3
REFINE_FACTOR = 10


@dataclass(frozen=True)
class MeanFieldBranch:
    """One self-consistent mean-field solution."""

    n_photon: float
    alpha: complex
    beta: complex
    Delta: float
    Omega_plus: float
    Omega_minus: float
    branch_index: int
    residual: float


@dataclass(frozen=True)
class BranchSet:
    """Branches sorted by ascending photon number, plus solver warnings.

    Behaves as an ordered sequence of MeanFieldBranch.
    """

    branches: tuple[MeanFieldBranch, ...]
    warnings: tuple[str, ...] = ()

    def __iter__(self):
        return iter(self.branches)

    def __len__(self):
        return len(self.branches)

    def __getitem__(self, i):
        return self.branches[i]


def _beta_of_n(d: DerivedParams, n):
    om, op = d.Omega_c - 0.5 * d.omega_sw + d.g * n, d.Omega_c + 0.5 * d.omega_sw + d.g * n
    den = op * om + d.gamma * d.gamma
    scale = -d.zeta * n / den
    return scale * om, scale * d.gamma  # (beta_R, beta_I)


def _delta_of_n(d: DerivedParams, n):
    bR, bI = _beta_of_n(d, n)
    return d.delta_c + 2.0 * d.zeta * bR + d.g * (bR * bR + bI * bI)


def consistency_residual(d: DerivedParams, n):
    """Scalar root function f(n) = n*(Delta(n)^2 + kappa^2) - eta^2.

    Accepts a scalar or an ndarray of trial photon numbers.
    """
    D = _delta_of_n(d, n)
    return n * (D * D + d.kappa * d.kappa) - d.eta * d.eta


def upper_bound_photons(d: DerivedParams) -> float:
    """Rigorous bound n = eta^2/(Delta^2+kappa^2) <= eta^2/kappa^2."""
    return (d.eta / d.kappa) ** 2


def _branch_from_root(d: DerivedParams, n: float, index: int) -> MeanFieldBranch:
    n = float(n)
    bR, bI = _beta_of_n(d, n)
    D = _delta_of_n(d, n)
    den = D * D + d.kappa * d.kappa
    aR = -d.eta * d.kappa / den
    aI = d.eta * D / den
    om, op = omega_pm(d, n)
    resid = abs(consistency_residual(d, n))
    if d.eta > 0.0:
        resid /= d.eta * d.eta
    return MeanFieldBranch(
        n_photon=n,
        alpha=complex(aR, aI),
        beta=complex(bR, bI),
        Delta=D,
        Omega_plus=op,
        Omega_minus=om,
        branch_index=index,
        residual=resid,
    )


def _bisect(d: DerivedParams, lo: float, hi: float, flo: float, fhi: float) -> float:
    # endpoints guaranteed to straddle a sign change (flo*fhi <= 0);
    # runs to floating-point exhaustion, well past the documented 1e-12
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = consistency_residual(d, mid)
        if fmid == 0.0:
            return mid
        if (flo < 0.0) != (fmid < 0.0):
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def _brackets_on(d, grid, fvals):
    out = []
    sign = np.signbit(fvals)
    for i in range(len(grid) - 1):
        if fvals[i] == 0.0 or sign[i] != sign[i + 1]:
            out.append((grid[i], grid[i + 1], fvals[i], fvals[i + 1]))
    if fvals[-1] == 0.0:
        out.append((grid[-1], grid[-1], fvals[-1], fvals[-1]))
    return out


def enumerate_branches(d: DerivedParams,
                       grid_points: int = GRID_POINTS_DEFAULT) -> BranchSet:
    """Find every self-consistent branch by dense scan plus bisection.

    Scans f(n) on a uniform grid over [0, n_max*(1+1e-6)], brackets each sign
    change, bisects to relative tolerance 1e-12 in n, then deduplicates roots
    closer than 1e-9 relative. A second scan at 10x density runs inside any
    cell whose endpoints both have |f| below 1e-3 * max|f| (possible
    near-tangent fold). Warnings are attached rather than raised:

    * ``adjacent-brackets``: two sign changes in adjacent cells (a root pair
      near a fold may sit below grid resolution);
    * ``branch-count=<k>``: branch count outside {1, 3}.
    """
    if d.eta == 0.0:
        return BranchSet(branches=(_branch_from_root(d, 0.0, 0),))

    n_hi = upper_bound_photons(d) * (1.0 + 1e-6)
    grid = np.linspace(0.0, n_hi, grid_points)
    fvals = consistency_residual(d, grid)

    brackets = _brackets_on(d, grid, fvals)
    warnings: list[str] = []

    # collapse-risk flag: two sign changes in adjacent coarse cells, or an
    # unresolved root pair surfacing inside a single coarse cell below
    sign = np.signbit(fvals)
    change = (fvals[:-1] == 0.0) | (sign[:-1] != sign[1:])
    adjacent = bool(np.any(change[:-1] & change[1:]))

    # near-tangent refinement pass
    fmax = float(np.max(np.abs(fvals)))
    low = np.abs(fvals) < REFINE_FRACTION * fmax
    for i in np.nonzero(low[:-1] & low[1:])[0]:
        sub = np.linspace(grid[i], grid[i + 1], REFINE_FACTOR + 1)
        found = _brackets_on(d, sub, consistency_residual(d, sub))
        if len(found) >= 2:
            adjacent = True
        brackets.extend(found)

    if adjacent:
        warnings.append("adjacent-brackets")

    roots: list[float] = []
    for lo, hi, flo, fhi in brackets:
        roots.append(_bisect(d, lo, hi, flo, fhi))
    roots.sort()
    unique: list[float] = []
    for r in roots:
        if unique and abs(r - unique[-1]) <= DEDUPE_RTOL * max(abs(r), 1e-300):
            continue
        unique.append(r)

    if len(unique) not in (1, 3):
        warnings.append(f"branch-count={len(unique)}")

    branches = tuple(
        _branch_from_root(d, r, i) for i, r in enumerate(unique)
    )
    return BranchSet(branches=branches, warnings=tuple(warnings))
