import math

import numpy as np
import pytest

from geo3 import catalog
from geo3.curve import curvature_torsion
from geo3.errors import DomainExitError, IrregularPointError
from geo3.expr import Interval, parse_scalar, parse_surface
from geo3.geodesy import (
    GeodesicState,
    ParamCurve,
    geodesic_curvature,
    intrinsic_geodesic_curvature,
    is_geodesic,
    trace_geodesic,
)


def in_t(source: str):
    return parse_scalar(source, {"t"})


@pytest.fixture
def sphere():
    return catalog.make("sphere").model


@pytest.fixture
def wide_sphere():
    """The unit sphere with room for a full turn in longitude from any start."""
    return parse_surface(
        "(cos u*cos v, cos u*sin v, sin u) on [-1.4, 1.4] x [-1, 7.5]"
    )


@pytest.fixture
def torus():
    return catalog.make("torus", R=2.0, r=1.0).model


def latitude(surface, u0: float) -> ParamCurve:
    return ParamCurve(surface, in_t(repr(u0)), in_t("t"), Interval(0, 2 * math.pi))


class TestGeodesicCurvature:
    @pytest.mark.parametrize("u0", [0.0, 0.3, -0.7, 1.2])
    def test_latitudes(self, sphere, u0) -> None:
        curve = latitude(sphere, u0)
        for t in (0.0, 1.0, 4.0):
            assert abs(geodesic_curvature(curve, t)) == pytest.approx(
                abs(math.tan(u0)), abs=1e-12
            )

    def test_intrinsic_formula_agrees(self) -> None:
        torus = catalog.make("torus").model
        curve = ParamCurve(
            torus, in_t("t + sin(t)/2"), in_t("2*t^2"), Interval(0.0, 2.0)
        )
        for t in (0.2, 0.9, 1.7):
            assert intrinsic_geodesic_curvature(curve, t) == pytest.approx(
                geodesic_curvature(curve, t), abs=1e-10
            )

    def test_intrinsic_formula_on_a_latitude(self, sphere) -> None:
        curve = latitude(sphere, 0.5)

        assert intrinsic_geodesic_curvature(curve, 1.0) == pytest.approx(
            geodesic_curvature(curve, 1.0)
        )

    def test_image_curve(self, sphere) -> None:
        image = latitude(sphere, 0.5).as_space_curve()

        assert curvature_torsion(image, 1.0).kappa == pytest.approx(
            1 / math.cos(0.5)
        )

    def test_stationary_curve_is_rejected(self, sphere) -> None:
        curve = ParamCurve(sphere, in_t("0.2"), in_t("1"), Interval(0, 1))

        with pytest.raises(IrregularPointError):
            geodesic_curvature(curve, 0.5)


class TestIsGeodesic:
    def test_equator(self, sphere) -> None:
        report = is_geodesic(latitude(sphere, 0.0), 20)

        assert report.is_geodesic
        assert report.max_abs_kappa_n == pytest.approx(1.0)

    def test_other_latitudes_are_not(self, sphere) -> None:
        report = is_geodesic(latitude(sphere, 0.4), 20)

        assert not report.is_geodesic
        assert report.max_abs_kappa_g == pytest.approx(math.tan(0.4))

    def test_helicoid_ruling(self) -> None:
        helicoid = catalog.make("helicoid").model
        ray = ParamCurve(helicoid, in_t("t"), in_t("0"), Interval(-1.0, 1.0))

        report = is_geodesic(ray, 15)

        assert report.is_geodesic
        assert report.max_abs_kappa_n == pytest.approx(0.0, abs=1e-12)

    def test_helices_on_the_helicoid_are_not_geodesics(self) -> None:
        helicoid = catalog.make("helicoid").model
        helix = ParamCurve(helicoid, in_t("0.5"), in_t("t"), Interval(0.0, 6.0))

        assert not is_geodesic(helix, 15).is_geodesic


class TestTraceGeodesic:
    def test_plane_geodesics_are_straight(self) -> None:
        plane = catalog.make("plane").model

        trace = trace_geodesic(plane, GeodesicState(0.0, 0.0, 1.0, 1.0), 1.0)

        root = 1 / math.sqrt(2)
        np.testing.assert_allclose(trace.points[-1], [root, root, 0], atol=1e-10)
        np.testing.assert_allclose(trace.u, trace.v, atol=1e-12)

    def test_cylinder_geodesics_are_helices(self) -> None:
        cylinder = catalog.make("cylinder").model

        trace = trace_geodesic(cylinder, GeodesicState(0.0, 0.0, 1.0, 1.0), 2.0)

        end = trace.end
        assert (end.u, end.v) == pytest.approx((math.sqrt(2), math.sqrt(2)))
        assert (end.du, end.dv) == pytest.approx((1 / math.sqrt(2),) * 2)

    def test_equator_closes(self, wide_sphere) -> None:
        trace = trace_geodesic(
            wide_sphere, GeodesicState(0.0, 0.0, 0.0, 1.0), 2 * math.pi
        )

        np.testing.assert_allclose(trace.points[-1], trace.points[0], atol=1e-5)
        np.testing.assert_allclose(trace.u, 0.0, atol=1e-12)
        assert trace.max_energy_drift <= 1e-8

    def test_tilted_great_circle(self, wide_sphere) -> None:
        trace = trace_geodesic(
            wide_sphere, GeodesicState(0.0, 0.5, 1.0, 1.0), 2 * math.pi
        )

        points = trace.points
        plane_normal = np.cross(points[0], points[1])
        plane_normal /= np.linalg.norm(plane_normal)
        assert np.max(np.abs(points @ plane_normal)) <= 1e-6
        np.testing.assert_allclose(points[-1], points[0], atol=1e-5)
        assert np.max(np.abs(trace.u)) == pytest.approx(math.pi / 4, abs=1e-5)

    def test_samples_cover_the_length(self) -> None:
        plane = catalog.make("plane").model

        trace = trace_geodesic(plane, GeodesicState(0.0, 0.0, 1.0, 0.0), 0.5)

        assert len(trace.s) == 2001
        assert trace.s[-1] == pytest.approx(0.5)

    def test_leaving_the_chart_is_an_error(self, sphere) -> None:
        with pytest.raises(DomainExitError) as e:
            trace_geodesic(sphere, GeodesicState(0.0, 6.0, 0.0, 1.0), 1.0)

        assert e.value.exit_point[0] == pytest.approx(0.0, abs=1e-9)

    def test_start_outside_the_chart(self, sphere) -> None:
        with pytest.raises(DomainExitError):
            trace_geodesic(sphere, GeodesicState(2.0, 0.0, 0.0, 1.0), 1.0)

    def test_zero_velocity_is_rejected(self, sphere) -> None:
        with pytest.raises(IrregularPointError):
            trace_geodesic(sphere, GeodesicState(0.0, 1.0, 0.0, 0.0), 1.0)

    @pytest.mark.parametrize(
        "name, init, length",
        [
            ("wide_sphere", GeodesicState(0.0, 0.5, 1.0, 1.0), 3.0),
            ("torus", GeodesicState(3.0, 3.0, 0.3, 1.0), 2.0),
        ],
    )
    def test_endpoint_is_stable_under_step_refinement(
        self, request, name, init, length
    ) -> None:
        surface = request.getfixturevalue(name)

        coarse = trace_geodesic(surface, init, length, steps=2000)
        fine = trace_geodesic(surface, init, length, steps=4000)

        assert len(fine.s) == 2 * len(coarse.s) - 1
        gap = np.linalg.norm(fine.points[-1] - coarse.points[-1])
        assert gap <= 1e-7 * length
