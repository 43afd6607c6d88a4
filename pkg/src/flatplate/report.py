"""Comparison of the truncated-domain series against the shooting solution.

Builds gridded f' profiles from both methods, measures where they agree
(inside the fitting interval [0, L]) and how hard the polynomial tail
diverges beyond it, and emits the CSV / SVG artifacts.  The headline number
pair is the wall curvature f''(0): the series value is twice the eta^2
coefficient of the partial sum (kept exact as a Fraction), the numerical
value comes from shooting.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Sequence

import numpy as np

from ._format import sig9
from .hpm import HpmSeries
from .shooting import ShootingResult, theta_profile

# Quoted 7-digit wall-slope value the numerical result is checked against in
# summaries; the matching quoted series value 0.349 is reproduced by rounding.
REFERENCE_WALL_SLOPE = 0.3320574


def round_half_up(value: float, decimals: int) -> str:
    """Decimal string of ``value`` rounded half-up to ``decimals`` places."""
    quantum = Decimal(1).scaleb(-decimals)
    return str(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class Grid:
    """Uniform eta grid; stop must be an integer number of steps from start."""

    start: float = 0.0
    stop: float = 12.0
    step: float = 0.05

    def __post_init__(self):
        if not self.start < self.stop:
            raise ValueError(f"grid must satisfy start < stop, got {self.start}..{self.stop}")
        if not self.step > 0:
            raise ValueError(f"grid step must be > 0, got {self.step}")
        span = (self.stop - self.start) / self.step
        if abs(span - round(span)) > 1.0e-6:
            raise ValueError(
                f"grid stop {self.stop} is not reachable from {self.start} in steps of {self.step}"
            )

    def points(self) -> np.ndarray:
        n = int(round((self.stop - self.start) / self.step))
        return self.start + self.step * np.arange(n + 1)


@dataclass(frozen=True)
class ComparisonReport:
    rows: np.ndarray  # (n, 3): eta, fprime_numerical, fprime_hpm
    max_dev_inside: float  # max |delta f'| on [0, L]
    dev_at_probe: float | None  # |delta f'| at probe_eta; None if probe outside grid
    probe_eta: float
    s_numerical: float
    s_hpm_exact: Fraction
    s_hpm_float: float
    domain_length: float
    extrapolated_from: float | None  # eta_max, when the grid runs past the trajectory
    theta_rows: np.ndarray | None = None  # (n, 2): theta_numerical, theta_hpm


def compare(
    series: HpmSeries,
    shot: ShootingResult,
    grid: Grid = Grid(),
    probe_eta: float = 10.0,
    with_theta: bool = False,
) -> ComparisonReport:
    """Sample both f' profiles on the grid and compute the deviation metrics.

    The series profile is the float Horner evaluation of the partial-sum
    derivative; the numerical profile is linearly interpolated from the
    trajectory and extrapolated as the constant 1.0 beyond eta_max (the
    far-field value, which the trajectory has reached to ~1e-5 by default).
    The probe deviation is evaluated only when the probe lies inside the
    grid range; callers see None otherwise.
    """
    eta = grid.points()
    fprime_series = series.partial_sum("f").derivative()
    traj = shot.trajectory
    fprime_num = np.interp(eta, traj.eta, traj.fp, right=1.0)
    fprime_hpm = np.array([fprime_series.eval_float(x) for x in eta])
    rows = np.column_stack([eta, fprime_num, fprime_hpm])

    L = float(series.config.L)
    inside = eta <= L + 1.0e-12
    deviation = np.abs(fprime_hpm - fprime_num)
    max_dev_inside = float(np.max(deviation[inside])) if np.any(inside) else 0.0

    if grid.start <= probe_eta <= grid.stop:
        num_at_probe = float(np.interp(probe_eta, traj.eta, traj.fp, right=1.0))
        dev_at_probe = abs(fprime_series.eval_float(probe_eta) - num_at_probe)
    else:
        dev_at_probe = None

    theta_rows = None
    if with_theta:
        eps = float(series.config.epsilon)
        profile = theta_profile(traj, eps)
        # theta(infinity) = 0, so extrapolate past the trajectory as 0
        theta_num = np.interp(eta, profile[:, 0], profile[:, 1], right=0.0)
        theta_sum = series.partial_sum("theta")
        theta_hpm = np.array([theta_sum.eval_float(x) for x in eta])
        theta_rows = np.column_stack([theta_num, theta_hpm])

    s_hpm_exact = 2 * series.partial_sum("f").coefficient(2)
    return ComparisonReport(
        rows=rows,
        max_dev_inside=max_dev_inside,
        dev_at_probe=dev_at_probe,
        probe_eta=probe_eta,
        s_numerical=shot.s_star,
        s_hpm_exact=s_hpm_exact,
        s_hpm_float=float(s_hpm_exact),
        domain_length=L,
        extrapolated_from=shot.eta_max_used if grid.stop > shot.eta_max_used else None,
        theta_rows=theta_rows,
    )


def emit_csv(report: ComparisonReport, path, stamp_lines: Sequence[str] = ()) -> None:
    """Write the gridded profiles: eta,fprime_numerical,fprime_hpm (+ theta
    columns when present), >= 9 significant digits, LF endings."""
    header = "eta,fprime_numerical,fprime_hpm"
    if report.theta_rows is not None:
        header += ",theta_numerical,theta_hpm"
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for line in stamp_lines:
            handle.write(f"# {line}\n")
        handle.write(header + "\n")
        for i, (eta, f_num, f_hpm) in enumerate(report.rows):
            cells = [sig9(eta), sig9(f_num), sig9(f_hpm)]
            if report.theta_rows is not None:
                cells += [sig9(report.theta_rows[i, 0]), sig9(report.theta_rows[i, 1])]
            handle.write(",".join(cells) + "\n")


# -- SVG figure ----------------------------------------------------------------

_MARGIN_LEFT = 64.0
_MARGIN_RIGHT = 16.0
_MARGIN_TOP = 18.0
_MARGIN_BOTTOM = 46.0
_WIDTH = 640.0
_HEIGHT = 440.0


def emit_svg_figure(
    report: ComparisonReport, path, y_window: tuple[float, float] = (-0.2, 1.4)
) -> None:
    """Self-contained SVG 1.1: numerical curve dashed, series curve solid.

    The y axis is clamped to ``y_window`` (clipped, not rescaled), so the
    polynomial tail visibly leaves the frame instead of flattening the part
    of the picture where the two curves agree.
    """
    if len(report.rows) == 0:
        raise ValueError("cannot plot an empty report")
    y_lo, y_hi = y_window
    if not y_lo < y_hi:
        raise ValueError(f"y window must satisfy low < high, got {y_window}")
    eta = report.rows[:, 0]
    x_lo, x_hi = float(eta[0]), float(eta[-1])
    plot_w = _WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = _HEIGHT - _MARGIN_TOP - _MARGIN_BOTTOM

    def x_px(x: float) -> float:
        return _MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def y_px(y: float) -> float:
        return _MARGIN_TOP + (y_hi - y) / (y_hi - y_lo) * plot_h

    def polyline_points(values: np.ndarray) -> str:
        return " ".join(f"{x_px(x):.2f},{y_px(v):.2f}" for x, v in zip(eta, values))

    x_tick_step = 1.0 if (x_hi - x_lo) <= 15.0 else 2.0
    x_ticks = [x_lo + i * x_tick_step for i in range(int((x_hi - x_lo) / x_tick_step) + 1)]
    y_tick_step = 0.2
    first = np.ceil(y_lo / y_tick_step - 1.0e-9) * y_tick_step
    y_ticks = list(np.arange(first, y_hi + 1.0e-9, y_tick_step))

    parts: list[str] = []
    parts.append('<?xml version="1.0" encoding="UTF-8"?>')
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_WIDTH:.0f}" height="{_HEIGHT:.0f}" '
        f'viewBox="0 0 {_WIDTH:.0f} {_HEIGHT:.0f}">'
    )
    parts.append(f'<rect x="0" y="0" width="{_WIDTH:.0f}" height="{_HEIGHT:.0f}" fill="white"/>')
    parts.append(
        f'<defs><clipPath id="plot-area"><rect x="{_MARGIN_LEFT}" y="{_MARGIN_TOP}" '
        f'width="{plot_w}" height="{plot_h}"/></clipPath></defs>'
    )
    # frame and ticks
    frame = (
        f'<rect x="{_MARGIN_LEFT}" y="{_MARGIN_TOP}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="#888" stroke-width="1"/>'
    )
    parts.append(frame)
    for xt in x_ticks:
        px = x_px(xt)
        parts.append(
            f'<line x1="{px:.2f}" y1="{_MARGIN_TOP + plot_h:.2f}" '
            f'x2="{px:.2f}" y2="{_MARGIN_TOP + plot_h + 5:.2f}" stroke="#444" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{px:.2f}" y="{_MARGIN_TOP + plot_h + 18:.2f}" font-size="12" '
            f'font-family="sans-serif" text-anchor="middle">{xt:g}</text>'
        )
    for yt in y_ticks:
        py = y_px(yt)
        parts.append(
            f'<line x1="{_MARGIN_LEFT - 5:.2f}" y1="{py:.2f}" '
            f'x2="{_MARGIN_LEFT:.2f}" y2="{py:.2f}" stroke="#444" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_MARGIN_LEFT - 9:.2f}" y="{py + 4:.2f}" font-size="12" '
            f'font-family="sans-serif" text-anchor="end">{yt:.1f}</text>'
        )
    parts.append(
        f'<text x="{_MARGIN_LEFT + plot_w / 2:.2f}" y="{_HEIGHT - 8:.2f}" font-size="14" '
        f'font-family="sans-serif" text-anchor="middle">eta</text>'
    )
    parts.append(
        f'<text x="16" y="{_MARGIN_TOP + plot_h / 2:.2f}" font-size="14" '
        f'font-family="sans-serif" text-anchor="middle" '
        f'transform="rotate(-90 16 {_MARGIN_TOP + plot_h / 2:.2f})">f&#8242;(eta)</text>'
    )
    # the two curves, clipped to the frame so the divergent tail exits the picture
    parts.append('<g clip-path="url(#plot-area)" fill="none">')
    parts.append(
        f'<polyline id="numerical" points="{polyline_points(report.rows[:, 1])}" '
        f'stroke="#205080" stroke-width="1.8" stroke-dasharray="7 4"/>'
    )
    parts.append(
        f'<polyline id="hpm" points="{polyline_points(report.rows[:, 2])}" '
        f'stroke="#b02020" stroke-width="1.8"/>'
    )
    parts.append("</g>")
    # legend
    lx = _MARGIN_LEFT + 14.0
    ly = _MARGIN_TOP + 16.0
    parts.append(
        f'<line x1="{lx:.2f}" y1="{ly:.2f}" x2="{lx + 34:.2f}" y2="{ly:.2f}" '
        f'stroke="#205080" stroke-width="1.8" stroke-dasharray="7 4"/>'
    )
    parts.append(
        f'<text x="{lx + 40:.2f}" y="{ly + 4:.2f}" font-size="13" '
        f'font-family="sans-serif">numerical</text>'
    )
    parts.append(
        f'<line x1="{lx:.2f}" y1="{ly + 18:.2f}" x2="{lx + 34:.2f}" y2="{ly + 18:.2f}" '
        f'stroke="#b02020" stroke-width="1.8"/>'
    )
    parts.append(
        f'<text x="{lx + 40:.2f}" y="{ly + 22:.2f}" font-size="13" '
        f'font-family="sans-serif">HPM</text>'
    )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(parts) + "\n")


def summary_lines(report: ComparisonReport) -> list[str]:
    """Human-readable metric summary shared by the CLI subcommands."""
    eta = report.rows[:, 0]
    lines = [
        f"comparison over eta in [{eta[0]:g}, {eta[-1]:g}] ({len(eta)} points)",
        f"  max |f'_hpm - f'_numerical| on [0, {report.domain_length:g}] = "
        f"{report.max_dev_inside:.6f}",
    ]
    if report.dev_at_probe is not None:
        lines.append(
            f"  deviation at probe eta = {report.probe_eta:g}: {report.dev_at_probe:.6f}"
        )
    else:
        lines.append(
            f"  deviation at probe eta = {report.probe_eta:g}: not evaluated "
            f"(probe outside grid [{eta[0]:g}, {eta[-1]:g}])"
        )
    lines.append(
        f"  wall slope f''(0): numerical = {report.s_numerical:.7f} "
        f"(reference {REFERENCE_WALL_SLOPE}), "
        f"hpm = {report.s_hpm_float:.7f} -> {round_half_up(report.s_hpm_float, 3)} at 3 decimals "
        f"(exact {report.s_hpm_exact})"
    )
    lines.append(
        f"  |f''(0) gap| = {abs(report.s_hpm_float - report.s_numerical):.7f}"
    )
    if report.extrapolated_from is not None:
        lines.append(
            f"  note: numerical f' extrapolated as 1.0 beyond eta_max = "
            f"{report.extrapolated_from:g}"
        )
    return lines
