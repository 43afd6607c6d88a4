import sys
from pathlib import Path

import pytest

_SRC = Path(__file__).resolve().parents[1] / "src"
if str(_SRC) not in sys.path:
    sys.path.insert(0, str(_SRC))

from flatplate import HpmConfig, IntegratorSettings, build_series, solve_shooting  # noqa: E402


@pytest.fixture(scope="session")
def series_order3():
    return build_series(HpmConfig(order=3))


@pytest.fixture(scope="session")
def series_order6():
    return build_series(HpmConfig(order=6))


@pytest.fixture(scope="session")
def default_shot():
    """Shooting solution at the default settings (eta_max=10, step=1e-3)."""
    return solve_shooting(IntegratorSettings())
