#!/usr/bin/env python3
"""Build the exact correction series and inspect what the truncated domain does.

Walks the recurrence up to order 3 on the default domain [0, 5], prints every
correction polynomial, and then checks the two facts that make the series
worth having in exact arithmetic: the boundary identities at 0 and L hold as
equalities between fractions, and the far-field condition f'(inf) = 1 is
structurally out of reach for any polynomial partial sum.

Usage:
  python demos/series_demo.py [ORDER]
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

_SRC = Path(__file__).resolve().parents[1] / "src"
if _SRC.is_dir() and str(_SRC) not in sys.path:
    sys.path.insert(0, str(_SRC))

from flatplate import HpmConfig, build_series, save_series


def main() -> int:
    order = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    config = HpmConfig(order=order, L=Fraction(5), epsilon=Fraction(1))
    series = build_series(config)

    print(f"correction polynomials on [0, {config.L}], epsilon = {config.epsilon}")
    print("-" * 72)
    for j, poly in enumerate(series.f_corrections):
        print(f"  f{j}     = {poly}")
    for j, poly in enumerate(series.theta_corrections):
        print(f"  theta{j} = {poly}")

    f_sum = series.partial_sum("f")
    print("-" * 72)
    print(f"partial sum f      = {f_sum}")
    print(f"partial sum theta  = {series.partial_sum('theta')}")

    print("-" * 72)
    print("exact boundary identities (fractions, not tolerances):")
    fp = f_sum.derivative()
    print(f"  f(0)   = {f_sum.eval_exact(0)}")
    print(f"  f'(0)  = {fp.eval_exact(0)}")
    print(f"  f'(L)  = {fp.eval_exact(config.L)}")
    print(f"  f''(0) = {f_sum.derivative(2).eval_exact(0)} ~ {float(f_sum.derivative(2).eval_exact(0)):.7f}")

    print()
    print("and why the far field is unreachable: f' is a polynomial of degree")
    print(f"{fp.degree}, so f'(eta) -> infinity as eta grows, never 1.  Sampled:")
    for eta in (5, 6, 8, 10):
        print(f"  f'({eta:>2}) = {fp.eval_float(float(eta)):>12.4f}")

    out_dir = Path(__file__).resolve().parent / "output"
    out_dir.mkdir(exist_ok=True)
    doc_path = out_dir / f"series_order{order}.json"
    save_series(series, doc_path)
    print()
    print(f"series document (exact, round-trippable) written to {doc_path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
