import numpy as np
import pytest

from padland.geometry import (
    BoundingBox,
    CameraModel,
    HelipadSpec,
    VehicleState,
    apparent_width,
    clamp_box,
    project_helipad,
)

CAM = CameraModel()
PAD = HelipadSpec()  # center (-80, 75), side 12


class TestProjection:
    def test_centered_pad_hits_principal_point(self):
        box = project_helipad(VehicleState(-80.0, 75.0, 70.0), PAD, CAM)
        assert (box.u, box.v) == (224.0, 224.0)

    def test_size_from_altitude(self):
        box = project_helipad(VehicleState(-80.0, 75.0, 112.0), PAD, CAM)
        assert box.w == pytest.approx(24.0)
        assert box.h == pytest.approx(24.0)

    def test_lateral_offset(self):
        box = project_helipad(VehicleState(-86.0, 75.0, 70.0), PAD, CAM)
        assert box.u == pytest.approx(224.0 + 224.0 * 6.0 / 70.0)  # 243.2
        assert box.v == pytest.approx(224.0)

    def test_rejects_camera_at_or_below_ground(self):
        with pytest.raises(ValueError):
            project_helipad(VehicleState(-80.0, 75.0, 0.0), PAD, CAM)
        with pytest.raises(ValueError):
            project_helipad(VehicleState(-80.0, 75.0, -3.0), PAD, CAM)

    def test_sign_convention(self):
        # pad displaced in world +x appears right of center, +y below-center
        box = project_helipad(VehicleState(-85.0, 75.0, 50.0), PAD, CAM)
        assert box.u > CAM.cx
        box = project_helipad(VehicleState(-80.0, 70.0, 50.0), PAD, CAM)
        assert box.v > CAM.cy
        box = project_helipad(VehicleState(-75.0, 80.0, 50.0), PAD, CAM)
        assert box.u < CAM.cx and box.v < CAM.cy

    def test_linearity_against_direct_formula(self):
        # offsets kept small enough that the box stays fully in frame,
        # where projection is linear (clamping would bend the mapping)
        rng = np.random.default_rng(12345)
        for _ in range(100):
            z = rng.uniform(15.0, 120.0)
            dx = rng.uniform(-z / 8.0, z / 8.0)
            dy = rng.uniform(-z / 8.0, z / 8.0)
            state = VehicleState(PAD.x - dx, PAD.y - dy, z)
            box = project_helipad(state, PAD, CAM)
            assert box.u - CAM.cx == pytest.approx(224.0 * dx / z, rel=1e-12, abs=1e-9)
            assert box.v - CAM.cy == pytest.approx(224.0 * dy / z, rel=1e-12, abs=1e-9)

    def test_unclamped_area_grows_monotonically_during_descent(self):
        altitudes = np.linspace(120.0, 7.0, 60)
        areas = [
            apparent_width(VehicleState(-80.0, 75.0, z), PAD, CAM) ** 2 for z in altitudes
        ]
        assert all(b > a for a, b in zip(areas, areas[1:]))


class TestApparentWidth:
    @pytest.mark.parametrize(
        "z,expected",
        [(70.0, 38.4), (110.0, 224.0 * 12.0 / 110.0), (10.0, 268.8)],
    )
    def test_values(self, z, expected):
        assert apparent_width(VehicleState(0.0, 0.0, z), PAD, CAM) == pytest.approx(expected)

    def test_strictly_decreasing_in_altitude(self):
        widths = [apparent_width(VehicleState(0, 0, z), PAD, CAM) for z in (5, 20, 80, 200)]
        assert all(a > b for a, b in zip(widths, widths[1:]))

    def test_rejects_nonpositive_altitude(self):
        with pytest.raises(ValueError):
            apparent_width(VehicleState(0, 0, 0.0), PAD, CAM)


class TestClamping:
    def test_in_frame_box_untouched(self):
        box = BoundingBox(243.2, 224.0, 38.4, 38.4)
        assert clamp_box(box, CAM) is box

    def test_oversized_box_becomes_full_frame(self):
        box = BoundingBox(224.0, 224.0, 2000.0, 2000.0)
        clamped = clamp_box(box, CAM)
        assert (clamped.u, clamped.v, clamped.w, clamped.h) == (224.0, 224.0, 448.0, 448.0)

    def test_partial_overlap_recenters(self):
        box = BoundingBox(440.0, 224.0, 40.0, 40.0)  # right edge at 460
        clamped = clamp_box(box, CAM)
        assert clamped.u == pytest.approx((420.0 + 448.0) / 2.0)
        assert clamped.w == pytest.approx(28.0)
        assert clamped.h == pytest.approx(40.0)

    def test_fully_outside_returns_none(self):
        assert clamp_box(BoundingBox(600.0, 224.0, 40.0, 40.0), CAM) is None
        assert clamp_box(BoundingBox(-100.0, -100.0, 20.0, 20.0), CAM) is None

    def test_projection_of_far_offset_pad_is_none(self):
        # pad 25 m to the side seen from 10 m: center 560 px off, half-width 134
        state = VehicleState(PAD.x - 25.0, PAD.y, 10.0)
        assert project_helipad(state, PAD, CAM) is None

    def test_near_touchdown_box_clips_to_frame(self):
        box = project_helipad(VehicleState(-80.0, 75.0, 4.0), PAD, CAM)
        assert (box.u, box.v, box.w, box.h) == (224.0, 224.0, 448.0, 448.0)


class TestValidation:
    def test_camera_invariants(self):
        with pytest.raises(ValueError):
            CameraModel(image_width=0)
        with pytest.raises(ValueError):
            CameraModel(focal_length=-1)
        assert CAM.cx == CAM.image_width / 2 and CAM.cy == CAM.image_height / 2

    def test_pad_invariants(self):
        with pytest.raises(ValueError):
            HelipadSpec(side_length=0.0)
