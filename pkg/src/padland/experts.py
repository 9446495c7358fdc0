"""Synthetic scale-specialized detectors and the replayable detection log.

Each expert is modeled as a stochastic detector whose per-frame detection
probability follows a logistic curve over the pad's apparent width, with
Gaussian center noise, multiplicative size noise, and (optionally) a
distractor mode that locks onto a false pad-like target at a fixed world
offset. A plain-text log format allows recorded detections to be replayed
through the rest of the pipeline verbatim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

from .geometry import BoundingBox, CameraModel, clamp_box


class ExpertId(Enum):
    FAR = "FAR"
    NEAR = "NEAR"


class Regime(Enum):
    """Direction of the reliability curve over apparent width."""

    DETECTS_ABOVE = "detects_above"  # reliable for large (close) pads
    DETECTS_BELOW = "detects_below"  # reliable for small (distant) pads


@dataclass(frozen=True)
class Detection:
    """One expert's output for one frame; box is None when nothing was found."""

    expert_id: ExpertId
    box: BoundingBox | None = None
    confidence: float = 0.0

    def __post_init__(self):
        if self.box is None and self.confidence != 0.0:
            raise ValueError("absent detection must carry confidence 0")
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence {self.confidence} outside [0, 1]")

    @property
    def present(self) -> bool:
        return self.box is not None


@dataclass(frozen=True)
class ExpertProfile:
    """Parametric reliability model of one detector.

    Detection probability is logistic((s - s_center) / s_slope) over the
    apparent width s, reflected when regime is DETECTS_BELOW. Center noise
    has standard deviation sigma_center_base + sigma_center_scale * s;
    sizes are scaled by (1 + eps), eps ~ N(0, sigma_size_frac). With
    probability distractor_prob a detection locks onto a false target
    displaced by distractor_offset_pads (in units of the pad side length,
    i.e. world-meter offset divided by pad side) instead of the true pad.
    """

    expert_id: ExpertId
    s_center: float
    s_slope: float
    regime: Regime = Regime.DETECTS_ABOVE
    sigma_center_base: float = 0.0
    sigma_center_scale: float = 0.0
    sigma_size_frac: float = 0.0
    distractor_prob: float = 0.0
    distractor_offset_pads: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if self.s_slope <= 0:
            raise ValueError("s_slope must be positive")
        for name in ("sigma_center_base", "sigma_center_scale", "sigma_size_frac"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if not 0.0 <= self.distractor_prob <= 1.0:
            raise ValueError("distractor_prob must be in [0, 1]")

    @classmethod
    def ideal(cls, expert_id: ExpertId) -> "ExpertProfile":
        """Noise-free always-on detector (useful for closed-loop checks)."""
        return cls(expert_id=expert_id, s_center=-1e9, s_slope=1.0)


def default_far_profile() -> ExpertProfile:
    """Long-range specialist: detects even tiny pads but jitters more as the
    pad grows, and occasionally locks onto a pad-like rooftop 25 m away."""
    return ExpertProfile(
        expert_id=ExpertId.FAR,
        s_center=8.0,
        s_slope=2.0,
        regime=Regime.DETECTS_ABOVE,
        sigma_center_base=2.0,
        sigma_center_scale=0.05,
        sigma_size_frac=0.05,
        distractor_prob=0.01,
        distractor_offset_pads=(25.0 / 12.0, 0.0),
    )


def default_near_profile() -> ExpertProfile:
    """Close-range specialist: precise once the pad is large enough, but
    blind to the small footprints seen from high altitude."""
    return ExpertProfile(
        expert_id=ExpertId.NEAR,
        s_center=27.0,
        s_slope=0.75,
        regime=Regime.DETECTS_ABOVE,
        sigma_center_base=1.5,
        sigma_center_scale=0.0,
        sigma_size_frac=0.03,
        distractor_prob=0.0,
    )


def detection_probability(profile: ExpertProfile, s: float) -> float:
    """Per-frame detection probability at apparent width s."""
    x = (s - profile.s_center) / profile.s_slope
    if profile.regime is Regime.DETECTS_BELOW:
        x = -x
    # numerically stable sigmoid
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


def detect(
    profile: ExpertProfile,
    true_box: BoundingBox,
    s: float,
    rng: np.random.Generator,
    cam: CameraModel,
) -> Detection:
    """Run one synthetic detector inference against the ground-truth box.

    Always consumes exactly five variates from `rng` regardless of outcome,
    so per-expert streams stay frame-aligned across controller modes that
    share seeds.
    """
    if s <= 0:
        raise ValueError(f"apparent width must be positive (got {s})")

    u_present = rng.uniform()
    u_distract = rng.uniform()
    eps_u = rng.standard_normal()
    eps_v = rng.standard_normal()
    eps_size = rng.standard_normal()

    p_det = detection_probability(profile, s)
    if u_present >= p_det:
        return Detection(expert_id=profile.expert_id)

    if profile.distractor_prob > 0.0 and u_distract < profile.distractor_prob:
        du, dv = profile.distractor_offset_pads
        u = true_box.u + s * du
        v = true_box.v + s * dv
    else:
        sigma_c = profile.sigma_center_base + profile.sigma_center_scale * s
        u = true_box.u + sigma_c * eps_u
        v = true_box.v + sigma_c * eps_v

    scale = 1.0 + profile.sigma_size_frac * eps_size
    box = clamp_box(BoundingBox(u=u, v=v, w=true_box.w * scale, h=true_box.h * scale), cam)
    if box is None or box.w <= 0 or box.h <= 0:
        return Detection(expert_id=profile.expert_id)
    return Detection(expert_id=profile.expert_id, box=box, confidence=p_det)


# ---------------------------------------------------------------------------
# Detection log: one CSV record per expert per frame.
# Format: frame,expert,u,v,w,h,confidence,present   (present in {0, 1},
# zeros for the numeric fields of an absent detection; header required).
# ---------------------------------------------------------------------------

LOG_HEADER = "frame,expert,u,v,w,h,confidence,present"


class DetectionLogError(ValueError):
    """Malformed detection log; message carries the offending line number."""


@dataclass
class DetectionLog:
    """In-memory detection log: both experts' outputs for consecutive frames."""

    frames: list[dict[ExpertId, Detection]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.frames)

    def append(self, det_far: Detection, det_near: Detection) -> None:
        if det_far.expert_id is not ExpertId.FAR or det_near.expert_id is not ExpertId.NEAR:
            raise ValueError("append expects (FAR, NEAR) detections in that order")
        self.frames.append({ExpertId.FAR: det_far, ExpertId.NEAR: det_near})


def replay_detect(log: DetectionLog, frame_index: int) -> tuple[Detection, Detection]:
    """Return the recorded (FAR, NEAR) detections for one frame, verbatim."""
    if not 0 <= frame_index < len(log.frames):
        raise IndexError(
            f"frame_index {frame_index} out of range (log has {len(log.frames)} frames)"
        )
    row = log.frames[frame_index]
    return row[ExpertId.FAR], row[ExpertId.NEAR]


def _format_detection(frame: int, det: Detection) -> str:
    if det.box is None:
        return f"{frame},{det.expert_id.value},0,0,0,0,0,0"
    b = det.box
    return f"{frame},{det.expert_id.value},{b.u!r},{b.v!r},{b.w!r},{b.h!r},{det.confidence!r},1"


def write_detection_log(log: DetectionLog, path: str | Path) -> None:
    """Write the log in the plain-text record format (floats via repr, so a
    write/read round trip is value-exact)."""
    lines = [LOG_HEADER]
    for frame, row in enumerate(log.frames):
        lines.append(_format_detection(frame, row[ExpertId.FAR]))
        lines.append(_format_detection(frame, row[ExpertId.NEAR]))
    Path(path).write_text("\n".join(lines) + "\n")


def _parse_record(line: str, lineno: int) -> tuple[int, Detection]:
    parts = line.split(",")
    if len(parts) != 8:
        raise DetectionLogError(f"line {lineno}: expected 8 fields, got {len(parts)}")
    try:
        frame = int(parts[0])
        expert = ExpertId(parts[1].strip())
        u, v, w, h, conf = (float(p) for p in parts[2:7])
        present = int(parts[7])
    except (ValueError, KeyError) as exc:
        raise DetectionLogError(f"line {lineno}: {exc}") from None
    if present not in (0, 1):
        raise DetectionLogError(f"line {lineno}: present flag must be 0 or 1")
    if present == 0:
        return frame, Detection(expert_id=expert)
    if w <= 0 or h <= 0:
        raise DetectionLogError(f"line {lineno}: present detection with non-positive size")
    if not 0.0 <= conf <= 1.0:
        raise DetectionLogError(f"line {lineno}: confidence {conf} outside [0, 1]")
    return frame, Detection(expert_id=expert, box=BoundingBox(u, v, w, h), confidence=conf)


def read_detection_log(path: str | Path) -> DetectionLog:
    """Parse a detection log file; raises DetectionLogError with line numbers."""
    text = Path(path).read_text()
    lines = text.splitlines()
    if not lines or lines[0].strip() != LOG_HEADER:
        raise DetectionLogError("line 1: missing or malformed header")

    by_frame: dict[int, dict[ExpertId, Detection]] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        frame, det = _parse_record(line, lineno)
        slot = by_frame.setdefault(frame, {})
        if det.expert_id in slot:
            raise DetectionLogError(
                f"line {lineno}: duplicate {det.expert_id.value} record for frame {frame}"
            )
        slot[det.expert_id] = det

    log = DetectionLog()
    for frame in range(len(by_frame)):
        if frame not in by_frame:
            raise DetectionLogError(f"frame {frame} missing (frames must be contiguous from 0)")
        row = by_frame[frame]
        for expert in ExpertId:
            if expert not in row:
                raise DetectionLogError(f"frame {frame}: no {expert.value} record")
        log.frames.append(row)
    return log
