"""Number formatting shared by the CSV writers."""

from __future__ import annotations

import math


def sig9(value: float) -> str:
    """Fixed-point decimal with at least 9 significant digits.

    Uses 9 decimals for |v| >= 0.1 (and for exact zero), and widens the
    fractional part for smaller magnitudes so leading zeros never eat into
    the significant-digit budget.
    """
    v = float(value)
    if v == 0.0 or not math.isfinite(v):
        return f"{v:.9f}"
    decimals = max(9, 9 - (math.floor(math.log10(abs(v))) + 1))
    return f"{v:.{decimals}f}"
