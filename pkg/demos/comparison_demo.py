#!/usr/bin/env python3
"""Put the series and the numerical solution on the same axes.

Inside the fitting interval [0, 5] the two f' profiles agree to a few
percent; past it the polynomial tail takes over and the series profile
leaves the frame.  Writes the gridded profiles as CSV and the figure as a
self-contained SVG (numerical curve dashed, series curve solid).
"""

from __future__ import annotations

import sys
from pathlib import Path

_SRC = Path(__file__).resolve().parents[1] / "src"
if _SRC.is_dir() and str(_SRC) not in sys.path:
    sys.path.insert(0, str(_SRC))

from flatplate import (
    Grid,
    HpmConfig,
    IntegratorSettings,
    build_series,
    compare,
    emit_csv,
    emit_svg_figure,
    solve_shooting,
)
from flatplate.report import summary_lines


def main() -> int:
    series = build_series(HpmConfig(order=3))
    shot = solve_shooting(IntegratorSettings())
    report = compare(series, shot, Grid(start=0.0, stop=12.0, step=0.05),
                     probe_eta=10.0, with_theta=True)

    for line in summary_lines(report):
        print(line)

    out_dir = Path(__file__).resolve().parent / "output"
    out_dir.mkdir(exist_ok=True)
    csv_path = out_dir / "comparison.csv"
    svg_path = out_dir / "comparison.svg"
    emit_csv(report, csv_path)
    emit_svg_figure(report, svg_path)
    print()
    print(f"profiles (with theta columns) written to {csv_path}")
    print(f"figure written to {svg_path}")

    print()
    print("a few rows, to make the divergence concrete:")
    print("  eta     f'_numerical   f'_hpm")
    for eta_target in (0.0, 2.5, 5.0, 7.0, 10.0, 12.0):
        idx = int(round((eta_target - 0.0) / 0.05))
        eta, f_num, f_hpm = report.rows[idx]
        print(f"  {eta:4.1f}  {f_num:13.6f}  {f_hpm:12.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
