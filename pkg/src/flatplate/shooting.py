"""Reference numerical solution of the boundary-layer system.

The momentum equation f''' + (1/2) f f'' = 0 is integrated as a first-order
system with classical fixed-step RK4, and the unknown wall curvature
s = f''(0) is found by shooting: bisection on the defect
g(s) = f'(eta_max; s) - 1 down to a bracket width of 1e-12, then a single
secant polish.  Everything is deterministic; there is no adaptive stepping
and no library solver, so convergence order and reproducibility are
testable properties rather than implementation accidents.

The temperature profile never needs a second shooting loop: the theta
equation is linear in theta, so theta' = theta'(0) exp(-(1/(2 eps)) int f)
and one trapezoid pass over the stored trajectory produces theta with
theta(0) = 1 and theta(eta_max) = 0 enforced by normalization.

eta_max is the honest stand-in for infinity here; its adequacy is measured
(s* moves by < 1e-7 between eta_max 10 and 15), not assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ._format import sig9

# Integration aborts once |f''| exceeds this; diverging probe slopes blow up
# through it quickly while physical trajectories stay below 1.
DIVERGENCE_LIMIT = 1.0e6

# Bisection runs until the bracket is narrower than this, then one secant step.
BISECTION_WIDTH = 1.0e-12

RhsFunc = Callable[[float, float, float], float]


def blasius_rhs(f: float, fp: float, fpp: float) -> float:
    """f''' for the momentum equation."""
    return -0.5 * f * fpp


class ShootingError(Exception):
    """Base class for solver failures."""


class DivergenceError(ShootingError):
    """State overflow during integration; carries the eta where it happened."""

    def __init__(self, eta: float, s: float):
        super().__init__(f"integration diverged at eta = {eta:.6g} for initial slope s = {s:.6g}")
        self.eta = eta
        self.s = s


class BracketError(ShootingError):
    """The shooting bracket does not isolate a root."""


class ConvergenceError(ShootingError):
    """Root found but the far-boundary residual exceeds the tolerance."""


@dataclass(frozen=True)
class IntegratorSettings:
    eta_max: float = 10.0
    step: float = 1.0e-3
    shoot_tol: float = 1.0e-8
    bracket: tuple[float, float] = (0.1, 1.0)

    def __post_init__(self):
        if not self.eta_max > 0:
            raise ValueError(f"eta_max must be > 0, got {self.eta_max}")
        if not 0 < self.step <= self.eta_max:
            raise ValueError(f"step must satisfy 0 < step <= eta_max, got {self.step}")
        if not self.shoot_tol > 0:
            raise ValueError(f"shoot_tol must be > 0, got {self.shoot_tol}")
        lo, hi = self.bracket
        if not lo < hi:
            raise ValueError(f"bracket must satisfy low < high, got {self.bracket}")


@dataclass(frozen=True)
class Trajectory:
    """Samples (eta, f, f', f'') on the integration grid, eta increasing from 0."""

    eta: np.ndarray
    f: np.ndarray
    fp: np.ndarray
    fpp: np.ndarray

    def __len__(self) -> int:
        return len(self.eta)

    def samples(self):
        """Iterate (eta, f, f', f'') tuples in grid order."""
        return zip(self.eta, self.f, self.fp, self.fpp)


@dataclass(frozen=True)
class ShootingResult:
    s_star: float
    trajectory: Trajectory
    residual: float
    iterations: int
    eta_max_used: float


def _steps(settings: IntegratorSettings) -> list[float]:
    """Uniform steps covering [0, eta_max]; a final partial step is allowed."""
    n_full = int(math.floor(settings.eta_max / settings.step + 1.0e-9))
    remainder = settings.eta_max - n_full * settings.step
    steps = [settings.step] * n_full
    if remainder > 1.0e-12 * settings.eta_max:
        steps.append(remainder)
    return steps


def _rk4_step(f: float, fp: float, fpp: float, h: float, rhs: RhsFunc):
    k1_f, k1_fp, k1_fpp = fp, fpp, rhs(f, fp, fpp)
    f2, fp2, fpp2 = f + 0.5 * h * k1_f, fp + 0.5 * h * k1_fp, fpp + 0.5 * h * k1_fpp
    k2_f, k2_fp, k2_fpp = fp2, fpp2, rhs(f2, fp2, fpp2)
    f3, fp3, fpp3 = f + 0.5 * h * k2_f, fp + 0.5 * h * k2_fp, fpp + 0.5 * h * k2_fpp
    k3_f, k3_fp, k3_fpp = fp3, fpp3, rhs(f3, fp3, fpp3)
    f4, fp4, fpp4 = f + h * k3_f, fp + h * k3_fp, fpp + h * k3_fpp
    k4_f, k4_fp, k4_fpp = fp4, fpp4, rhs(f4, fp4, fpp4)
    return (
        f + h / 6.0 * (k1_f + 2.0 * k2_f + 2.0 * k3_f + k4_f),
        fp + h / 6.0 * (k1_fp + 2.0 * k2_fp + 2.0 * k3_fp + k4_fp),
        fpp + h / 6.0 * (k1_fpp + 2.0 * k2_fpp + 2.0 * k3_fpp + k4_fpp),
    )


def integrate_blasius(
    s: float, settings: IntegratorSettings, rhs: RhsFunc = blasius_rhs
) -> Trajectory:
    """Integrate from (f, f', f'') = (0, 0, s) to eta_max, recording every step.

    Raises DivergenceError if |f''| passes DIVERGENCE_LIMIT or the state
    stops being finite.  ``rhs`` is replaceable so tests can disable the
    nonlinear term (rhs = 0 gives the closed form f' = s eta).
    """
    if not math.isfinite(s):
        raise ValueError(f"initial slope must be finite, got {s!r}")
    f, fp, fpp = 0.0, 0.0, float(s)
    eta = 0.0
    etas = [eta]
    fs = [f]
    fps = [fp]
    fpps = [fpp]
    for h in _steps(settings):
        f, fp, fpp = _rk4_step(f, fp, fpp, h, rhs)
        eta += h
        if abs(fpp) > DIVERGENCE_LIMIT or not (
            math.isfinite(f) and math.isfinite(fp) and math.isfinite(fpp)
        ):
            raise DivergenceError(eta, s)
        etas.append(eta)
        fs.append(f)
        fps.append(fp)
        fpps.append(fpp)
    # land the last node exactly on eta_max (it differs only by accumulated roundoff)
    etas[-1] = settings.eta_max
    return Trajectory(np.array(etas), np.array(fs), np.array(fps), np.array(fpps))


def _final_fp(s: float, settings: IntegratorSettings, rhs: RhsFunc) -> float:
    """f'(eta_max; s) without storing the trajectory (shooting inner loop)."""
    f, fp, fpp = 0.0, 0.0, float(s)
    eta = 0.0
    for h in _steps(settings):
        f, fp, fpp = _rk4_step(f, fp, fpp, h, rhs)
        eta += h
        if abs(fpp) > DIVERGENCE_LIMIT or not (
            math.isfinite(f) and math.isfinite(fp) and math.isfinite(fpp)
        ):
            raise DivergenceError(eta, s)
    return fp


def solve_shooting(
    settings: IntegratorSettings = IntegratorSettings(), rhs: RhsFunc = blasius_rhs
) -> ShootingResult:
    """Find s = f''(0) such that f'(eta_max) = 1.

    Endpoint probes that diverge are pulled toward the bracket interior; if
    that empties the bracket, or the surviving endpoints do not change the
    sign of g(s) = f'(eta_max) - 1, a BracketError reports the probed values.
    """

    def g(s: float) -> float:
        return _final_fp(s, settings, rhs) - 1.0

    lo, hi = settings.bracket
    g_lo = g_hi = None
    divergences: list[str] = []
    for _ in range(60):
        if lo >= hi:
            break
        width = hi - lo
        if g_lo is None:
            try:
                g_lo = g(lo)
            except DivergenceError as exc:
                divergences.append(f"s={lo:.6g} diverged at eta={exc.eta:.4g}")
                lo += 0.25 * width
                continue
        if g_hi is None:
            try:
                g_hi = g(hi)
            except DivergenceError as exc:
                divergences.append(f"s={hi:.6g} diverged at eta={exc.eta:.4g}")
                hi -= 0.25 * width
                continue
        break
    if g_lo is None or g_hi is None or lo >= hi:
        raise BracketError(
            "bracket emptied while avoiding divergent probes: " + "; ".join(divergences)
        )
    if g_lo * g_hi > 0:
        raise BracketError(
            f"no sign change on bracket [{lo:.6g}, {hi:.6g}]: "
            f"g({lo:.6g}) = {g_lo:+.6g}, g({hi:.6g}) = {g_hi:+.6g}"
        )

    iterations = 0
    s_best, g_best = (lo, g_lo) if abs(g_lo) <= abs(g_hi) else (hi, g_hi)
    while hi - lo > BISECTION_WIDTH:
        mid = 0.5 * (lo + hi)
        g_mid = g(mid)
        iterations += 1
        if abs(g_mid) < abs(g_best):
            s_best, g_best = mid, g_mid
        if g_mid == 0.0:
            lo = hi = mid
            break
        if g_lo * g_mid < 0:
            hi, g_hi = mid, g_mid
        else:
            lo, g_lo = mid, g_mid

    # one secant polish across the final bracket
    if g_hi != g_lo:
        s_sec = hi - g_hi * (hi - lo) / (g_hi - g_lo)
        g_sec = g(s_sec)
        iterations += 1
        if abs(g_sec) < abs(g_best):
            s_best, g_best = s_sec, g_sec

    residual = abs(g_best)
    if residual > settings.shoot_tol:
        raise ConvergenceError(
            f"far-boundary residual {residual:.3g} exceeds shoot_tol {settings.shoot_tol:.3g}"
        )
    trajectory = integrate_blasius(s_best, settings, rhs)
    return ShootingResult(
        s_star=s_best,
        trajectory=trajectory,
        residual=residual,
        iterations=iterations,
        eta_max_used=settings.eta_max,
    )


def theta_profile(trajectory: Trajectory, epsilon: float) -> np.ndarray:
    """Temperature profile by integrating-factor quadrature.

    Returns an (n, 2) array of (eta, theta) rows on the trajectory grid.
    theta(0) = 1 and theta(eta_max) = 0 hold by construction of the
    normalization; for epsilon -> infinity the profile tends to the straight
    line 1 - eta/eta_max.
    """
    if not epsilon > 0:
        raise ValueError(f"epsilon must be > 0, got {epsilon}")
    eta = trajectory.eta
    d_eta = np.diff(eta)
    inner = np.concatenate(
        [[0.0], np.cumsum(0.5 * (trajectory.f[1:] + trajectory.f[:-1]) * d_eta)]
    )
    weight = np.exp(-inner / (2.0 * epsilon))
    outer = np.concatenate([[0.0], np.cumsum(0.5 * (weight[1:] + weight[:-1]) * d_eta)])
    theta = 1.0 - outer / outer[-1]
    return np.column_stack([eta, theta])


def write_trajectory_csv(trajectory: Trajectory, path, stamp_lines: Sequence[str] = ()) -> None:
    """CSV export: header eta,f,fp,fpp, one row per grid point, LF endings.

    ``stamp_lines`` are prepended as '# ...' comments; by default there are
    none, so identical trajectories serialize byte-identically.
    """
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for line in stamp_lines:
            handle.write(f"# {line}\n")
        handle.write("eta,f,fp,fpp\n")
        for eta, f, fp, fpp in trajectory.samples():
            handle.write(f"{sig9(eta)},{sig9(f)},{sig9(fp)},{sig9(fpp)}\n")
