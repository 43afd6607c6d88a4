"""Numerical solver: degenerate closed forms, convergence, and profile shape.

The frozen value 0.9915420322 for f'(5) at the quoted slope comes from a
fine-step (1e-4) RK4 run performed as an independent oracle.
"""

import math

import numpy as np
import pytest

from flatplate.shooting import (
    BracketError,
    DivergenceError,
    IntegratorSettings,
    integrate_blasius,
    solve_shooting,
    theta_profile,
    write_trajectory_csv,
)

QUOTED_SLOPE = 0.3320574


def no_convection(f, fp, fpp):
    """Test hook: drop the nonlinear term so f''' = 0 and f' = s*eta."""
    return 0.0


class TestSettings:
    def test_defaults(self):
        s = IntegratorSettings()
        assert s.eta_max == 10.0 and s.step == 1e-3
        assert s.shoot_tol == 1e-8 and s.bracket == (0.1, 1.0)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"eta_max": 0.0},
            {"step": 0.0},
            {"step": 20.0},
            {"shoot_tol": 0.0},
            {"bracket": (1.0, 0.5)},
        ],
    )
    def test_validation(self, kwargs):
        with pytest.raises(ValueError):
            IntegratorSettings(**kwargs)


class TestIntegrator:
    def test_linear_closed_form(self):
        settings = IntegratorSettings(eta_max=5.0, step=1e-3)
        traj = integrate_blasius(0.2, settings, rhs=no_convection)
        assert traj.fp[-1] == pytest.approx(1.0, abs=1e-10)
        assert traj.f[-1] == pytest.approx(0.1 * 25.0, abs=1e-9)

    def test_initial_conditions_and_grid(self):
        traj = integrate_blasius(0.3, IntegratorSettings(eta_max=2.0, step=1e-2))
        assert traj.f[0] == 0.0 and traj.fp[0] == 0.0 and traj.fpp[0] == 0.3
        assert traj.eta[0] == 0.0 and traj.eta[-1] == 2.0
        assert np.all(np.diff(traj.eta) > 0)
        assert len(traj) == 201

    def test_final_partial_step(self):
        traj = integrate_blasius(0.3, IntegratorSettings(eta_max=1.05, step=0.1))
        assert traj.eta[-1] == pytest.approx(1.05)
        assert len(traj) == 12  # 10 full steps, one half step, plus the origin

    def test_quoted_slope_reaches_far_field(self):
        traj = integrate_blasius(QUOTED_SLOPE, IntegratorSettings(eta_max=10.0, step=1e-3))
        assert abs(traj.fp[-1] - 1.0) <= 1e-5

    def test_profile_flatness_at_five(self):
        # fine-step oracle value; the default step agrees to ~1e-9
        fine = integrate_blasius(QUOTED_SLOPE, IntegratorSettings(eta_max=5.0, step=1e-4))
        assert fine.fp[-1] == pytest.approx(0.9915420322, abs=1e-8)
        default = integrate_blasius(QUOTED_SLOPE, IntegratorSettings(eta_max=5.0, step=1e-3))
        assert default.fp[-1] == pytest.approx(fine.fp[-1], abs=1e-6)

    def test_divergence_raises_with_location(self):
        with pytest.raises(DivergenceError) as err:
            integrate_blasius(-1.0, IntegratorSettings(eta_max=10.0, step=1e-3))
        assert 0.0 < err.value.eta < 10.0
        assert err.value.s == -1.0

    def test_rejects_nonfinite_slope(self):
        with pytest.raises(ValueError):
            integrate_blasius(math.nan, IntegratorSettings())

    def test_fourth_order_convergence(self):
        # coarse steps so truncation error dominates roundoff
        values = {
            h: integrate_blasius(0.33, IntegratorSettings(eta_max=8.0, step=h)).fp[-1]
            for h in (0.4, 0.2, 0.1, 0.05)
        }
        ratio1 = (values[0.4] - values[0.2]) / (values[0.2] - values[0.1])
        ratio2 = (values[0.2] - values[0.1]) / (values[0.1] - values[0.05])
        assert 10.0 < abs(ratio1) < 22.0
        assert 10.0 < abs(ratio2) < 22.0


class TestShooting:
    def test_default_solution(self, default_shot):
        assert default_shot.s_star == pytest.approx(QUOTED_SLOPE, abs=1e-6)
        assert default_shot.residual <= 1e-8
        assert default_shot.iterations > 0
        assert default_shot.eta_max_used == 10.0

    def test_linear_problem_recovers_reciprocal_length(self):
        settings = IntegratorSettings(eta_max=5.0, step=1e-2)
        result = solve_shooting(settings, rhs=no_convection)
        assert result.s_star == pytest.approx(0.2, abs=1e-12)

    def test_no_sign_change_reports_probes(self):
        with pytest.raises(BracketError) as err:
            solve_shooting(IntegratorSettings(bracket=(0.5, 0.6)))
        message = str(err.value)
        assert "no sign change" in message
        assert "+" in message  # both probed values are positive and shown

    def test_divergent_endpoint_is_shrunk_inward(self):
        result = solve_shooting(IntegratorSettings(bracket=(-5.0, 1.0)))
        assert result.s_star == pytest.approx(QUOTED_SLOPE, abs=1e-6)

    def test_all_divergent_bracket_empties(self):
        with pytest.raises(BracketError):
            solve_shooting(IntegratorSettings(bracket=(-10.0, -5.0)))

    def test_shooting_function_is_increasing(self):
        settings = IntegratorSettings()
        probes = [0.15, 0.25, 0.35, 0.55, 0.75, 0.95]
        values = [
            integrate_blasius(s, settings).fp[-1] - 1.0 for s in probes
        ]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_converged_profile_shape(self, default_shot):
        traj = default_shot.trajectory
        assert np.all(traj.fpp > 0)
        assert np.all(np.diff(traj.fp) > 0)
        interior = traj.fp[1:-1]
        assert np.all(interior > 0) and np.all(interior < 1)


class TestThetaProfile:
    def test_endpoints_pinned(self, default_shot):
        profile = theta_profile(default_shot.trajectory, epsilon=1.0)
        assert profile[0, 1] == pytest.approx(1.0, abs=1e-12)
        assert profile[-1, 1] == pytest.approx(0.0, abs=1e-8)

    @pytest.mark.parametrize("eps", [1.0, 2.0, 10.0])
    def test_strictly_decreasing_in_unit_band(self, default_shot, eps):
        theta = theta_profile(default_shot.trajectory, epsilon=eps)[:, 1]
        assert np.all(np.diff(theta) < 0)
        assert np.all(theta >= 0.0) and np.all(theta <= 1.0)

    def test_large_epsilon_limit_is_linear(self, default_shot):
        profile = theta_profile(default_shot.trajectory, epsilon=1e6)
        line = 1.0 - profile[:, 0] / 10.0
        assert np.max(np.abs(profile[:, 1] - line)) < 1e-3

    @pytest.mark.parametrize("eps", [0.01, 0.5])
    def test_small_epsilon_stays_bounded_and_monotone(self, default_shot, eps):
        # below eps ~ 1 the tail decrements drop under one ulp of 1.0, so
        # only non-strict monotonicity survives in float64
        theta = theta_profile(default_shot.trajectory, epsilon=eps)[:, 1]
        assert np.all(np.diff(theta) <= 0)
        assert np.all(theta >= 0.0) and np.all(theta <= 1.0)

    def test_rejects_nonpositive_epsilon(self, default_shot):
        with pytest.raises(ValueError):
            theta_profile(default_shot.trajectory, epsilon=0.0)


class TestTrajectoryCsv:
    def test_format(self, tmp_path):
        traj = integrate_blasius(0.33, IntegratorSettings(eta_max=1.0, step=0.25))
        out = tmp_path / "traj.csv"
        write_trajectory_csv(traj, out)
        raw = out.read_bytes()
        assert b"\r" not in raw
        lines = raw.decode().splitlines()
        assert lines[0] == "eta,f,fp,fpp"
        assert len(lines) == 1 + len(traj)
        first = lines[1].split(",")
        assert first[0] == "0.000000000"
        # every cell carries at least nine significant digits
        for cell in lines[2].split(","):
            digits = cell.replace("-", "").replace(".", "").lstrip("0")
            assert len(digits) >= 9

    def test_stamp_lines_are_comments(self, tmp_path):
        traj = integrate_blasius(0.33, IntegratorSettings(eta_max=1.0, step=0.5))
        out = tmp_path / "traj.csv"
        write_trajectory_csv(traj, out, stamp_lines=("key=value",))
        lines = out.read_text().splitlines()
        assert lines[0] == "# key=value"
        assert lines[1] == "eta,f,fp,fpp"

    def test_deterministic_bytes(self, tmp_path):
        traj = integrate_blasius(0.33, IntegratorSettings(eta_max=1.0, step=0.25))
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        write_trajectory_csv(traj, a)
        write_trajectory_csv(traj, b)
        assert a.read_bytes() == b.read_bytes()
