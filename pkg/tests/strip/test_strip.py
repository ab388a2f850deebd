import math

import numpy as np
import pytest

from geo3.errors import InvalidFrameError
from geo3.expr import parse_curve, parse_scalar
from geo3.strip import (
    ExprNormalField,
    Strip,
    adapted_frame,
    frenet_strip,
    parallel_normal_field,
    rotate_frame,
    strip_invariants,
)


def in_t(source: str):
    return parse_scalar(source, {"t"})


def constant_normal(*components: str) -> ExprNormalField:
    return ExprNormalField(tuple(in_t(c) for c in components))


@pytest.fixture
def unit_circle():
    return parse_curve("(cos t, sin t, 0) on [0, 2*pi]")


@pytest.fixture
def unit_speed_helix():
    return parse_curve(
        "(cos(t/sqrt(2)), sin(t/sqrt(2)), t/sqrt(2)) on [0, 2*pi*sqrt(2)]"
    )


@pytest.fixture
def vertical_circle_strip(unit_circle) -> Strip:
    return Strip(unit_circle, constant_normal("0", "0", "1"))


class TestAdaptedFrame:
    def test_frame_is_right_handed(self, unit_speed_helix) -> None:
        strip = frenet_strip(unit_speed_helix)
        for t in (0.0, 1.0, 5.0):
            frame = adapted_frame(strip, t).validate()

            np.testing.assert_allclose(frame.B, np.cross(frame.T, frame.N))

    def test_normal_is_the_prescribed_field(self, vertical_circle_strip) -> None:
        frame = adapted_frame(vertical_circle_strip, 1.0)

        np.testing.assert_allclose(frame.N, [0, 0, 1])
        np.testing.assert_allclose(frame.T, [-math.sin(1), math.cos(1), 0])

    def test_non_normal_field_is_rejected(self, unit_circle) -> None:
        strip = Strip(unit_circle, constant_normal("0", "1", "0"))

        with pytest.raises(InvalidFrameError):
            adapted_frame(strip, 0.0)

    def test_non_unit_field_is_rejected(self, unit_circle) -> None:
        strip = Strip(unit_circle, constant_normal("0", "0", "2"))

        with pytest.raises(InvalidFrameError):
            strip_invariants(strip, 0.0)


class TestStripInvariants:
    def test_line_has_no_curvature(self) -> None:
        line = parse_curve("(t, 0, 0) on [-1, 1]")
        strip = Strip(line, constant_normal("0", "cos t", "sin t"))

        invariants = strip_invariants(strip, 0.5)

        assert invariants.kappa_n == pytest.approx(0.0, abs=1e-14)
        assert invariants.kappa_g == pytest.approx(0.0, abs=1e-14)
        assert invariants.tau == pytest.approx(-1.0)

    @pytest.mark.parametrize("r", [0.5, 1.0, 2.0])
    def test_circle_with_in_plane_normal(self, r) -> None:
        circle = parse_curve(f"({r}*cos t, {r}*sin t, 0) on [0, 2*pi]")

        invariants = strip_invariants(frenet_strip(circle), 0.7)

        assert abs(invariants.kappa_n) == pytest.approx(1 / r)
        assert invariants.kappa_g == pytest.approx(0.0, abs=1e-12)
        assert invariants.tau == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("r", [0.5, 1.0, 2.0])
    def test_circle_with_constant_normal(self, r) -> None:
        circle = parse_curve(f"({r}*cos t, {r}*sin t, 0) on [0, 2*pi]")
        strip = Strip(circle, constant_normal("0", "0", "1"))

        invariants = strip_invariants(strip, 0.7)

        assert invariants.kappa_n == pytest.approx(0.0, abs=1e-12)
        assert abs(invariants.kappa_g) == pytest.approx(1 / r)
        assert invariants.tau == pytest.approx(0.0, abs=1e-12)

    def test_frenet_strip_of_a_helix(self, unit_speed_helix) -> None:
        invariants = strip_invariants(frenet_strip(unit_speed_helix), 2.0)

        assert invariants.kappa_n == pytest.approx(0.5)
        assert invariants.kappa_g == pytest.approx(0.0, abs=1e-12)
        assert abs(invariants.tau) == pytest.approx(0.5)

    def test_invariants_do_not_depend_on_speed(self) -> None:
        fast = parse_curve("(cos t, sin t, t) on [0, 4*pi]")
        slow = parse_curve(
            "(cos(t/sqrt(2)), sin(t/sqrt(2)), t/sqrt(2)) on [0, 2*pi*sqrt(2)]"
        )

        a = strip_invariants(frenet_strip(fast), 1.0)
        b = strip_invariants(frenet_strip(slow), math.sqrt(2))

        assert (a.kappa_n, a.kappa_g, a.tau) == pytest.approx(
            (b.kappa_n, b.kappa_g, b.tau), abs=1e-12
        )


class TestRotateFrame:
    @pytest.mark.parametrize("phi", ["t", "t^2 + sin(3*t)", "1.25"])
    def test_rotation_preserves_the_curvature_vector(
        self, unit_speed_helix, phi
    ) -> None:
        strip = rotate_frame(frenet_strip(unit_speed_helix), in_t(phi))
        for t in (0.3, 2.0, 6.0):
            invariants = strip_invariants(strip, t)

            assert invariants.kappa_n**2 + invariants.kappa_g**2 == pytest.approx(
                0.25, abs=1e-8
            )

    def test_linear_angle_shifts_the_torsion_by_one(self, unit_speed_helix) -> None:
        strip = frenet_strip(unit_speed_helix)
        rotated = rotate_frame(strip, in_t("t"))
        for t in (0.3, 2.0, 6.0):
            shift = strip_invariants(rotated, t).tau - strip_invariants(strip, t).tau

            assert shift == pytest.approx(1.0, abs=1e-6)

    def test_rotated_normal_stays_normal(self, vertical_circle_strip) -> None:
        rotated = rotate_frame(vertical_circle_strip, in_t("cos t"))

        adapted_frame(rotated, 1.5).validate()

    def test_quarter_turn_swaps_the_curvatures(self, vertical_circle_strip) -> None:
        rotated = rotate_frame(vertical_circle_strip, in_t("pi/2"))

        before = strip_invariants(vertical_circle_strip, 0.4)
        after = strip_invariants(rotated, 0.4)

        assert abs(after.kappa_n) == pytest.approx(abs(before.kappa_g))
        assert after.kappa_g == pytest.approx(before.kappa_n, abs=1e-12)


class TestParallelNormalField:
    def test_helix_parallel_field_has_no_torsion(self, unit_speed_helix) -> None:
        field = parallel_normal_field(frenet_strip(unit_speed_helix), steps=200)

        assert field.max_torsion <= 1e-6
        phis = np.array([sample.phi for sample in field.samples])
        rates = np.diff(phis) / np.diff([sample.t for sample in field.samples])
        np.testing.assert_allclose(rates, rates[0], atol=1e-9)

    def test_torsion_free_strip_is_unchanged(self, vertical_circle_strip) -> None:
        field = parallel_normal_field(vertical_circle_strip, steps=50)

        for sample in field.samples:
            assert sample.phi == pytest.approx(0.0, abs=1e-12)
            np.testing.assert_allclose(sample.normal, [0, 0, 1], atol=1e-12)

    def test_initial_angles_differ_by_a_constant(self, unit_speed_helix) -> None:
        strip = frenet_strip(unit_speed_helix)

        first = parallel_normal_field(strip, steps=100)
        second = parallel_normal_field(strip, phi0=0.7, steps=100)

        for a, b in zip(first.samples, second.samples):
            assert b.phi - a.phi == pytest.approx(0.7, abs=1e-12)
            assert abs(b.tau) <= 1e-6

    def test_normals_are_unit_and_normal(self, unit_speed_helix) -> None:
        field = parallel_normal_field(frenet_strip(unit_speed_helix), steps=100)

        for sample in field.samples[::10]:
            frame = adapted_frame(field.strip, sample.t)
            assert np.linalg.norm(sample.normal) == pytest.approx(1.0)
            assert np.dot(sample.normal, frame.T) == pytest.approx(0.0, abs=1e-12)
