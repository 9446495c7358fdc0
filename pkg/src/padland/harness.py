"""Closed-loop landing trials and the randomized paired campaign.

One trial runs the full per-frame pipeline (project the pad, run both
experts, gate and smooth, compute servo errors, integrate motion) until
the vehicle reaches the commit altitude, tracking is lost, or the step
budget runs out. A campaign samples a shared list of initial states and
runs every controller mode from that identical list with per-trial,
per-expert seed streams so the modes see common random numbers.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path

import numpy as np

from .dynamics import DynamicsParams, step
from .experts import (
    Detection,
    DetectionLog,
    ExpertId,
    ExpertProfile,
    default_far_profile,
    default_near_profile,
    detect,
)
from .gating import GateState, select_expert
from .geometry import (
    CameraModel,
    HelipadSpec,
    VehicleState,
    apparent_width,
    project_helipad,
)
from .servo import ControllerGains, VelocityCommand, compute_command, compute_errors


class Mode(Enum):
    NEAR_ONLY = "near_only"
    FAR_ONLY = "far_only"
    DUAL = "dual"


class TerminationReason(Enum):
    LANDED = "landed"
    TRACKING_LOST = "tracking_lost"
    TIMEOUT = "timeout"


@dataclass(frozen=True)
class TrialConfig:
    x_range: tuple[float, float] = (-95.0, -65.0)
    y_range: tuple[float, float] = (60.0, 90.0)
    altitude_set: tuple[float, ...] = (70.0, 80.0, 90.0, 110.0)
    seed: int = 42
    n_trials: int = 10
    max_steps: int = 6000
    commit_altitude: float = 8.0  # below this the vehicle commits blind

    def __post_init__(self):
        if not self.altitude_set:
            raise ValueError("altitude_set must be nonempty")
        if self.max_steps <= 0:
            raise ValueError("max_steps must be positive")
        if self.commit_altitude <= 0:
            raise ValueError("commit_altitude must be positive")
        for name in ("x_range", "y_range"):
            lo, hi = getattr(self, name)
            if hi < lo:
                raise ValueError(f"{name} must satisfy low <= high")


@dataclass(frozen=True)
class Scenario:
    """Everything a trial needs besides its initial state and seeds."""

    camera: CameraModel = field(default_factory=CameraModel)
    helipad: HelipadSpec = field(default_factory=HelipadSpec)
    far_profile: ExpertProfile = field(default_factory=default_far_profile)
    near_profile: ExpertProfile = field(default_factory=default_near_profile)
    gains: ControllerGains = field(default_factory=ControllerGains)
    dynamics: DynamicsParams = field(default_factory=DynamicsParams)
    window_size: int = 5
    coast_limit: int = 10


@dataclass(frozen=True)
class TrialResult:
    trial_id: int
    initial_position: tuple[float, float, float]
    touchdown_xy: tuple[float, float]
    touchdown_error: float
    success: bool
    termination_reason: TerminationReason
    steps: int
    expert_usage: dict[str, int]
    trajectory_log_path: str | None = None


@dataclass
class TrialRun:
    """A finished trial plus its raw per-frame records."""

    result: TrialResult
    trajectory_rows: list[tuple]
    detections: DetectionLog


TRAJECTORY_HEADER = (
    "step,t,x,y,z,u_far,v_far,far_present,u_near,v_near,near_present,"
    "selected,u_hat,v_hat,e_x,e_y,A,e_z,vx_cmd,vy_cmd,vz_cmd"
)


def sample_initial(config: TrialConfig, rng: np.random.Generator, trial_index: int) -> VehicleState:
    """Uniform lateral start with the altitude cycled through altitude_set.

    The cyclic assignment guarantees every altitude (including the
    high-altitude stress case) appears in any campaign of at least
    len(altitude_set) trials; a 10-trial campaign over four altitudes gets
    the 3/3/2/2 mix.
    """
    x = rng.uniform(config.x_range[0], config.x_range[1])
    y = rng.uniform(config.y_range[0], config.y_range[1])
    z = config.altitude_set[trial_index % len(config.altitude_set)]
    return VehicleState(x=x, y=y, z=z)


def _detection_fields(det: Detection) -> tuple[float, float, int]:
    if det.box is None:
        return 0.0, 0.0, 0
    return det.box.u, det.box.v, 1


def run_trial(
    initial: VehicleState,
    mode: Mode,
    scenario: Scenario,
    config: TrialConfig,
    rng_far: np.random.Generator,
    rng_near: np.random.Generator,
    trial_id: int = 0,
) -> TrialRun:
    """Run one closed-loop trial to termination."""
    cam = scenario.camera
    pad = scenario.helipad
    gate = GateState(window_capacity=scenario.window_size, coast_limit=scenario.coast_limit)

    state = initial
    rows: list[tuple] = []
    log = DetectionLog()
    usage = {ExpertId.FAR.value: 0, ExpertId.NEAR.value: 0}

    reason = TerminationReason.TIMEOUT
    steps = 0
    touchdown_xy = (initial.x, initial.y)

    run_far = mode in (Mode.FAR_ONLY, Mode.DUAL)
    run_near = mode in (Mode.NEAR_ONLY, Mode.DUAL)

    for k in range(config.max_steps):
        truth = project_helipad(state, pad, cam)
        if truth is None:
            det_far = Detection(expert_id=ExpertId.FAR)
            det_near = Detection(expert_id=ExpertId.NEAR)
        else:
            s = apparent_width(state, pad, cam)
            det_far = (
                detect(scenario.far_profile, truth, s, rng_far, cam)
                if run_far
                else Detection(expert_id=ExpertId.FAR)
            )
            det_near = (
                detect(scenario.near_profile, truth, s, rng_near, cam)
                if run_near
                else Detection(expert_id=ExpertId.NEAR)
            )
        log.append(det_far, det_near)

        out = select_expert(det_far, det_near, gate, cam)
        if out.selected_expert is not None:
            usage[out.selected_expert.value] += 1

        if out.smoothed_box is not None:
            err = compute_errors(out.smoothed_box, cam, scenario.gains)
            cmd = compute_command(err, scenario.gains)
        else:
            err = None
            cmd = VelocityCommand(0.0, 0.0, 0.0)

        uf, vf, pf = _detection_fields(det_far)
        un, vn, pn = _detection_fields(det_near)
        sb = out.smoothed_box
        rows.append(
            (
                k,
                k * scenario.dynamics.dt,
                state.x,
                state.y,
                state.z,
                uf,
                vf,
                pf,
                un,
                vn,
                pn,
                out.selected_expert.value if out.selected_expert else "",
                sb.u if sb else "",
                sb.v if sb else "",
                err.e_x if err else "",
                err.e_y if err else "",
                err.area if err else "",
                err.e_z if err else "",
                cmd.v_x,
                cmd.v_y,
                cmd.v_z,
            )
        )
        steps = k + 1

        if out.tracking_lost:
            # blind descent from here: score the frozen lateral position
            reason = TerminationReason.TRACKING_LOST
            touchdown_xy = (state.x, state.y)
            break

        state = step(state, cmd, scenario.dynamics)
        if state.z <= config.commit_altitude:
            reason = TerminationReason.LANDED
            touchdown_xy = (state.x, state.y)
            break
        touchdown_xy = (state.x, state.y)

    error = float(np.hypot(touchdown_xy[0] - pad.x, touchdown_xy[1] - pad.y))
    result = TrialResult(
        trial_id=trial_id,
        initial_position=(initial.x, initial.y, initial.z),
        touchdown_xy=touchdown_xy,
        touchdown_error=error,
        success=reason is TerminationReason.LANDED,
        termination_reason=reason,
        steps=steps,
        expert_usage=usage,
    )
    return TrialRun(result=result, trajectory_rows=rows, detections=log)


@dataclass
class CampaignResult:
    seed: int
    n_trials: int
    initial_states: list[VehicleState]
    runs: dict[Mode, list[TrialRun]] = field(default_factory=dict)

    def results(self, mode: Mode) -> list[TrialResult]:
        return [run.result for run in self.runs[mode]]


def _trial_task(args) -> tuple[str, int, TrialRun]:
    mode_value, idx, initial, scenario, config, far_ss, near_ss = args
    mode = Mode(mode_value)
    run = run_trial(
        initial=initial,
        mode=mode,
        scenario=scenario,
        config=config,
        rng_far=np.random.default_rng(far_ss),
        rng_near=np.random.default_rng(near_ss),
        trial_id=idx,
    )
    return mode_value, idx, run


def run_campaign(
    scenario: Scenario,
    config: TrialConfig,
    modes: list[Mode] | None = None,
    n_trials: int | None = None,
    n_workers: int = 1,
) -> CampaignResult:
    """Run every requested mode over one shared list of initial states.

    All modes receive identical initial states, and each (trial, expert)
    pair owns a seed stream derived once from the campaign seed, so the
    comparison is paired with common random numbers. Trials are
    independent; with n_workers > 1 they run in a process pool and are
    reassembled in trial order, giving output identical to a serial run.
    """
    if modes is None:
        modes = [Mode.NEAR_ONLY, Mode.FAR_ONLY, Mode.DUAL]
    n = config.n_trials if n_trials is None else n_trials
    if n < 1:
        raise ValueError("n_trials must be >= 1")

    root = np.random.SeedSequence(config.seed)
    init_ss, *trial_ss = root.spawn(n + 1)
    init_rng = np.random.default_rng(init_ss)
    initials = [sample_initial(config, init_rng, i) for i in range(n)]
    expert_ss = [ss.spawn(2) for ss in trial_ss]

    tasks = [
        (mode.value, i, initials[i], scenario, config, expert_ss[i][0], expert_ss[i][1])
        for mode in modes
        for i in range(n)
    ]

    collected: dict[str, dict[int, TrialRun]] = {mode.value: {} for mode in modes}
    if n_workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=n_workers) as pool:
            for mode_value, idx, run in pool.map(_trial_task, tasks):
                collected[mode_value][idx] = run
    else:
        for task in tasks:
            mode_value, idx, run = _trial_task(task)
            collected[mode_value][idx] = run

    campaign = CampaignResult(seed=config.seed, n_trials=n, initial_states=initials)
    for mode in modes:
        campaign.runs[mode] = [collected[mode.value][i] for i in range(n)]
    return campaign


def write_trajectory_csv(rows: list[tuple], path: str | Path) -> None:
    """Write per-frame trajectory records (floats via repr: round-trippable
    and byte-stable across identical runs)."""
    lines = [TRAJECTORY_HEADER]
    for row in rows:
        lines.append(",".join(_cell(v) for v in row))
    Path(path).write_text("\n".join(lines) + "\n")


def _cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def attach_log_path(result: TrialResult, path: str) -> TrialResult:
    return replace(result, trajectory_log_path=path)
