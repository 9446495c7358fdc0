"""Visual-servo error signals and the proportional velocity law.

Lateral errors are the signed pixel offsets of the smoothed box center
from the principal point; the descent error is the shortfall of the box
area against a reference area corresponding to the desired end-of-servo
altitude. Commands are proportional, clamped, and descent is gated on
lateral alignment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import BoundingBox, CameraModel


@dataclass(frozen=True)
class ErrorSignals:
    e_x: float  # pixels, c_x - u_hat
    e_y: float  # pixels, c_y - v_hat
    area: float  # pixels^2, w * h of the smoothed box
    e_z: float  # pixels^2, area_ref - area


@dataclass(frozen=True)
class ControllerGains:
    k_xy: float = 0.02  # (m/s) per pixel of lateral error
    k_z: float = 1.5  # m/s, maximum descent rate
    v_lat_max: float = 2.0  # m/s lateral clamp
    align_threshold: float = 30.0  # pixels; descend only when aligned
    area_ref: float = 200704.0  # pixels^2; (f*D/z_ref)^2, z_ref = 6 m default

    def __post_init__(self):
        for name in ("k_xy", "k_z", "v_lat_max", "align_threshold", "area_ref"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")


def area_ref_for_altitude(z_ref: float, focal_length: float, pad_side: float) -> float:
    """Reference area corresponding to hovering at z_ref over the pad."""
    if z_ref <= 0:
        raise ValueError("z_ref must be positive")
    side = focal_length * pad_side / z_ref
    return side * side


@dataclass(frozen=True)
class VelocityCommand:
    """World-frame velocity command; v_z <= 0 (descend or hold)."""

    v_x: float
    v_y: float
    v_z: float


def compute_errors(box: BoundingBox, cam: CameraModel, gains: ControllerGains) -> ErrorSignals:
    """Image-plane alignment errors and the area-based descent error."""
    area = box.w * box.h
    return ErrorSignals(
        e_x=cam.cx - box.u,
        e_y=cam.cy - box.v,
        area=area,
        e_z=gains.area_ref - area,
    )


def compute_command(err: ErrorSignals, gains: ControllerGains) -> VelocityCommand:
    """Proportional servo law.

    Lateral: v = -k_xy * e, clamped to +/- v_lat_max (a pad right of center
    has e_x < 0, so the command moves the vehicle toward it). Vertical:
    descend at k_z scaled by the normalized positive descent error, but
    only while the lateral misalignment is within align_threshold; never
    climb.
    """
    v_x = max(-gains.v_lat_max, min(gains.v_lat_max, -gains.k_xy * err.e_x))
    v_y = max(-gains.v_lat_max, min(gains.v_lat_max, -gains.k_xy * err.e_y))
    if math.hypot(err.e_x, err.e_y) <= gains.align_threshold:
        frac = min(max(err.e_z, 0.0) / gains.area_ref, 1.0)
        v_z = -gains.k_z * frac
    else:
        v_z = 0.0
    return VelocityCommand(v_x=v_x, v_y=v_y, v_z=v_z)
