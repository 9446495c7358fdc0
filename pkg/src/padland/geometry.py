"""Pinhole projection of the helipad footprint into image-space boxes.

World frame: x/y on the ground plane, z = height above ground (ground at
z = 0). The camera looks straight down with its image axes aligned to
world x/y, so a pad displaced in world +x appears at u > c_x and +y at
v > c_y.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CameraModel:
    """Downward-facing pinhole camera. Principal point is the frame center."""

    image_width: float = 448.0
    image_height: float = 448.0
    focal_length: float = 224.0

    def __post_init__(self):
        if self.image_width <= 0 or self.image_height <= 0:
            raise ValueError("image dimensions must be positive")
        if self.focal_length <= 0:
            raise ValueError("focal_length must be positive")

    @property
    def cx(self) -> float:
        return self.image_width / 2.0

    @property
    def cy(self) -> float:
        return self.image_height / 2.0


@dataclass(frozen=True)
class HelipadSpec:
    """Square landing pad on the ground plane (center in meters, world frame)."""

    x: float = -80.0
    y: float = 75.0
    side_length: float = 12.0

    def __post_init__(self):
        if self.side_length <= 0:
            raise ValueError("side_length must be positive")


@dataclass(frozen=True)
class BoundingBox:
    """Pixel-space box: center (u, v), width w, height h."""

    u: float
    v: float
    w: float
    h: float

    @property
    def area(self) -> float:
        return self.w * self.h


@dataclass(frozen=True)
class VehicleState:
    """World-frame position and velocity of the vehicle."""

    x: float
    y: float
    z: float
    vx: float = 0.0
    vy: float = 0.0
    vz: float = 0.0


def clamp_box(box: BoundingBox, cam: CameraModel) -> BoundingBox | None:
    """Clip a box to the image rectangle.

    Returns the box unchanged when it already lies inside the frame (so a
    noise-free in-frame box survives bit-for-bit), the clipped box with its
    center recomputed from the clipped extent otherwise, and None when the
    box does not overlap the frame at all.
    """
    lo_u = box.u - box.w / 2.0
    hi_u = box.u + box.w / 2.0
    lo_v = box.v - box.h / 2.0
    hi_v = box.v + box.h / 2.0

    c_lo_u = max(lo_u, 0.0)
    c_hi_u = min(hi_u, cam.image_width)
    c_lo_v = max(lo_v, 0.0)
    c_hi_v = min(hi_v, cam.image_height)

    if c_hi_u - c_lo_u <= 0.0 or c_hi_v - c_lo_v <= 0.0:
        return None
    if c_lo_u == lo_u and c_hi_u == hi_u and c_lo_v == lo_v and c_hi_v == hi_v:
        return box
    return BoundingBox(
        u=(c_lo_u + c_hi_u) / 2.0,
        v=(c_lo_v + c_hi_v) / 2.0,
        w=c_hi_u - c_lo_u,
        h=c_hi_v - c_lo_v,
    )


def apparent_width(state: VehicleState, pad: HelipadSpec, cam: CameraModel) -> float:
    """Unclamped on-image width of the pad in pixels: f * D / z.

    Strictly decreasing in altitude; this is the scale signal the expert
    reliability models key on.
    """
    if state.z <= 0:
        raise ValueError(f"camera at or below ground (z = {state.z})")
    return cam.focal_length * pad.side_length / state.z


def project_helipad(
    state: VehicleState, pad: HelipadSpec, cam: CameraModel
) -> BoundingBox | None:
    """Ground-truth image box of the pad as seen from `state`.

    u = c_x + f * (x_pad - x_vehicle) / z, same for v; w = h = f * D / z,
    clipped to the frame via clamp_box. Returns None when the footprint is
    entirely out of view (no detector could report it).
    """
    if state.z <= 0:
        raise ValueError(f"camera at or below ground (z = {state.z})")
    f = cam.focal_length
    u = cam.cx + f * (pad.x - state.x) / state.z
    v = cam.cy + f * (pad.y - state.y) / state.z
    side = f * pad.side_length / state.z
    return clamp_box(BoundingBox(u=u, v=v, w=side, h=side), cam)
