import pytest

from padland.dynamics import DynamicsParams, step
from padland.geometry import VehicleState
from padland.servo import VelocityCommand


class TestStep:
    def test_instantaneous_tracking_with_zero_tau(self):
        params = DynamicsParams(dt=0.05, tau=0.0)
        state = step(VehicleState(0.0, 0.0, 50.0), VelocityCommand(1.0, 0.0, 0.0), params)
        assert (state.x, state.y, state.z) == (0.05, 0.0, 50.0)
        assert state.vx == 1.0

    def test_rest_is_a_fixed_point(self):
        for tau in (0.0, 0.4, 2.0):
            params = DynamicsParams(dt=0.05, tau=tau)
            state = VehicleState(3.0, -4.0, 20.0)
            after = step(state, VelocityCommand(0.0, 0.0, 0.0), params)
            assert after == state

    def test_first_order_lag(self):
        params = DynamicsParams(dt=0.05, tau=1.0)
        state = step(VehicleState(0.0, 0.0, 50.0), VelocityCommand(1.0, 0.0, 0.0), params)
        assert state.vx == pytest.approx(0.05)

    def test_position_change_equals_dt_times_command_when_tau_zero(self):
        params = DynamicsParams(dt=0.1, tau=0.0)
        cmd = VelocityCommand(0.7, -0.3, -1.1)
        state = step(VehicleState(1.0, 2.0, 30.0, vx=5.0, vy=5.0, vz=5.0), cmd, params)
        assert state.x - 1.0 == pytest.approx(0.1 * 0.7)
        assert state.y - 2.0 == pytest.approx(-0.1 * 0.3)
        assert state.z - 30.0 == pytest.approx(-0.1 * 1.1)

    def test_geometric_velocity_convergence(self):
        params = DynamicsParams(dt=0.05, tau=0.5)
        cmd = VelocityCommand(2.0, 0.0, 0.0)
        state = VehicleState(0.0, 0.0, 50.0)
        gap = abs(state.vx - cmd.v_x)
        factor = 1.0 - params.dt / params.tau
        for _ in range(40):
            state = step(state, cmd, params)
            new_gap = abs(state.vx - cmd.v_x)
            assert new_gap == pytest.approx(gap * factor, rel=1e-9)
            gap = new_gap
        assert gap < 0.05

    def test_altitude_floored_at_ground(self):
        params = DynamicsParams(dt=1.0, tau=0.0)
        state = step(VehicleState(0.0, 0.0, 0.5), VelocityCommand(0.0, 0.0, -2.0), params)
        assert state.z == 0.0


class TestParams:
    def test_validation(self):
        with pytest.raises(ValueError):
            DynamicsParams(dt=0.0)
        with pytest.raises(ValueError):
            DynamicsParams(tau=-0.1)
