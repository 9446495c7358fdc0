"""Camera geometry walkthrough: how the pad appears during a descent.

The camera looks straight down; the pad projects to a square box whose
center encodes the lateral offset and whose size encodes altitude. This
script descends over the pad with a fixed 6 m offset and prints the box
at a few altitudes, then shows the clipping behavior near touchdown.
"""

from padland import CameraModel, HelipadSpec, VehicleState, apparent_width, project_helipad

cam = CameraModel()
pad = HelipadSpec()

print(f"camera: {cam.image_width:.0f}x{cam.image_height:.0f}, f = {cam.focal_length:.0f} px")
print(f"pad: center ({pad.x}, {pad.y}) m, side {pad.side_length} m")
print()

# descend from 110 m to 7 m, hovering 6 m west of the pad center
print(f"{'z (m)':>6} {'u (px)':>8} {'v (px)':>8} {'w (px)':>8} {'offset px':>10}")
for z in (110, 90, 70, 50, 30, 15, 9, 7):
    state = VehicleState(pad.x - 6.0, pad.y, float(z))
    box = project_helipad(state, pad, cam)
    print(f"{z:>6} {box.u:>8.1f} {box.v:>8.1f} {box.w:>8.1f} {box.u - cam.cx:>10.1f}")

print()
print("same 6 m offset maps to more pixels as the camera gets closer:")
print("pixel offset = f * offset / z, box side = f * D / z")
print()

# below ~6 m the pad footprint exceeds the frame and the box clips
for z in (6.5, 5.0, 3.0):
    state = VehicleState(pad.x, pad.y, z)
    box = project_helipad(state, pad, cam)
    raw = apparent_width(state, pad, cam)
    print(f"z = {z} m: unclipped side {raw:.0f} px -> reported box {box.w:.0f}x{box.h:.0f}")

# a pad far outside the view has no projection at all
state = VehicleState(pad.x - 25.0, pad.y, 10.0)
print(f"\npad 25 m away seen from 10 m: {project_helipad(state, pad, cam)}")
