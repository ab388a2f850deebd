import math
from dataclasses import replace

import numpy as np
import pytest

from geo3 import catalog
from geo3.curve import curvature_torsion
from geo3.errors import AsymptoticDirectionError, IrregularPointError, OutOfRangeError
from geo3.expr import Interval, Rectangle, Variable, parse_scalar, parse_surface
from geo3.surface import (
    PointType,
    christoffel,
    classify_point,
    euler_curvature,
    first_form,
    gauss_map,
    meusnier_check,
    normal_curvature,
    parametric_angle,
    second_form,
    shape_and_curvatures,
    tangent_plane,
)


@pytest.fixture
def sphere():
    return catalog.make("sphere", r=2.0).model


@pytest.fixture
def torus():
    return catalog.make("torus", R=2.0, r=1.0).model


@pytest.fixture
def cylinder():
    return catalog.make("cylinder").model


class TestFundamentalForms:
    def test_sphere_forms(self, sphere) -> None:
        u, v = 0.3, 1.1

        E, F, G = first_form(sphere, u, v)
        e, f, g = second_form(sphere, u, v)

        assert (E, F, G) == pytest.approx((4.0, 0.0, 4 * math.cos(u) ** 2))
        assert (e, f, g) == pytest.approx((2.0, 0.0, 2 * math.cos(u) ** 2))

    def test_sphere_normal_points_inward(self, sphere) -> None:
        u, v = 0.3, 1.1
        point = tangent_plane(sphere, u, v).point

        np.testing.assert_allclose(gauss_map(sphere, u, v), -point / 2, atol=1e-15)

    def test_helicoid_normal(self) -> None:
        helicoid = catalog.make("helicoid").model
        u, v = 0.4, 1.3

        n = gauss_map(helicoid, u, v)
        expected = math.cosh(u) * np.array(
            [math.sin(v), -math.cos(v), math.sinh(u)]
        )

        np.testing.assert_allclose(
            n, expected / np.linalg.norm(expected), atol=1e-14
        )

    def test_tangent_plane_contains_the_tangent_vectors(self, torus) -> None:
        plane = tangent_plane(torus, 0.5, 0.2)

        np.testing.assert_allclose(plane.at(0, 0), plane.point)
        assert np.dot(plane.x_u, plane.normal) == pytest.approx(0.0, abs=1e-15)
        assert np.dot(plane.at(0.3, -2.0) - plane.point, plane.normal) == (
            pytest.approx(0.0, abs=1e-14)
        )

    def test_parametric_angle(self, sphere) -> None:
        assert parametric_angle(sphere, 0.2, 0.3) == pytest.approx(math.pi / 2)

        oblique = parse_surface("(u + v, v, 0) on [0, 1] x [0, 1]")
        assert parametric_angle(oblique, 0.5, 0.5) == pytest.approx(math.pi / 4)

    def test_irregular_point_is_rejected(self) -> None:
        cone = catalog.make("cone").model

        with pytest.raises(IrregularPointError):
            gauss_map(cone, 0.0, 1.0)


class TestCurvatures:
    def test_sphere(self, sphere) -> None:
        bundle = shape_and_curvatures(sphere, 0.3, 0.4)

        assert bundle.K == pytest.approx(0.25)
        assert bundle.H == pytest.approx(0.5)
        assert bundle.kappa1 == pytest.approx(bundle.kappa2)
        assert bundle.umbilic

    def test_torus_outer_equator(self, torus) -> None:
        bundle = shape_and_curvatures(torus, 0.0, 0.7)

        assert bundle.K == pytest.approx(1 / 3)
        assert abs(bundle.H) == pytest.approx(2 / 3)
        assert sorted(map(abs, (bundle.kappa1, bundle.kappa2))) == pytest.approx(
            [1 / 3, 1.0]
        )
        assert not bundle.umbilic

    def test_cylinder_principal_data(self, cylinder) -> None:
        bundle = shape_and_curvatures(cylinder, 0.5, 2.0)

        assert (bundle.kappa1, bundle.kappa2) == pytest.approx((1.0, 0.0), abs=1e-14)
        np.testing.assert_allclose(np.abs(bundle.d1), [0, 1], atol=1e-14)
        np.testing.assert_allclose(np.abs(bundle.d2), [1, 0], atol=1e-14)
        assert bundle.H == pytest.approx(0.5)

    def test_shape_operator_eigenvalues(self) -> None:
        ellipsoid = catalog.make("ellipsoid").model
        bundle = shape_and_curvatures(ellipsoid, 0.4, 0.9)

        eigenvalues = sorted(np.linalg.eigvals(bundle.shape_operator).real)

        assert eigenvalues == pytest.approx([bundle.kappa2, bundle.kappa1])
        assert np.trace(bundle.shape_operator) / 2 == pytest.approx(bundle.H)
        assert np.linalg.det(bundle.shape_operator) == pytest.approx(bundle.K)

    def test_principal_directions_are_orthonormal(self) -> None:
        ellipsoid = catalog.make("ellipsoid").model
        bundle = shape_and_curvatures(ellipsoid, 0.4, 0.9)
        first = np.array([[bundle.E, bundle.F], [bundle.F, bundle.G]])

        assert bundle.d1 @ first @ bundle.d1 == pytest.approx(1.0)
        assert bundle.d2 @ first @ bundle.d2 == pytest.approx(1.0)
        assert bundle.d1 @ first @ bundle.d2 == pytest.approx(0.0, abs=1e-12)

    def test_christoffel_symbols_of_the_sphere(self, sphere) -> None:
        u = 0.6
        gamma = christoffel(sphere, u, 0.2)

        expected = np.zeros((2, 2, 2))
        expected[0, 1, 1] = math.sin(u) * math.cos(u)
        expected[1, 0, 1] = expected[1, 1, 0] = -math.tan(u)
        np.testing.assert_allclose(gamma, expected, atol=1e-14)

    def test_bundle_christoffel_matches(self, torus) -> None:
        bundle = shape_and_curvatures(torus, 1.0, 2.0)

        np.testing.assert_allclose(bundle.christoffel, christoffel(torus, 1.0, 2.0))


class TestReparametrization:
    POINTS = [(0.2, 0.3), (-0.5, 1.0), (0.8, -0.4)]

    @pytest.mark.parametrize("name", ["sphere", "torus", "helicoid"])
    def test_swapping_parameters_flips_the_normal(self, name) -> None:
        s = catalog.make(name).model
        swapped = s.reparametrize(
            Variable("v"), Variable("u"), Rectangle(s.domain.v, s.domain.u)
        )
        for u, v in [(0.3, 1.1), (1.0, 2.5), (0.05, 4.0)]:
            np.testing.assert_allclose(
                gauss_map(swapped, v, u), -gauss_map(s, u, v), atol=1e-12
            )
            assert shape_and_curvatures(swapped, v, u).K == pytest.approx(
                shape_and_curvatures(s, u, v).K, abs=1e-8
            )

    @pytest.mark.parametrize("name", ["sphere", "torus", "helicoid"])
    def test_gaussian_curvature_survives_an_affine_change(self, name) -> None:
        s = catalog.make(name).model
        u_of = parse_scalar("0.5*u + 0.2*v + 0.1", {"u", "v"})
        v_of = parse_scalar("-0.3*u + 0.8*v + 2", {"u", "v"})
        box = Rectangle(Interval(-1.0, 1.0), Interval(-1.0, 1.5))
        moved = s.reparametrize(u_of, v_of, box)
        for u, v in self.POINTS:
            target = (u_of.evaluate(u=u, v=v), v_of.evaluate(u=u, v=v))

            assert shape_and_curvatures(moved, u, v).K == pytest.approx(
                shape_and_curvatures(s, *target).K, abs=1e-8
            )


class TestClassification:
    @pytest.mark.parametrize(
        "u, expected",
        [
            (0.0, PointType.ELLIPTIC),
            (math.pi, PointType.HYPERBOLIC),
            (math.pi / 2, PointType.PARABOLIC),
        ],
    )
    def test_torus(self, torus, u, expected) -> None:
        assert classify_point(torus, u, 0.3) == expected

    def test_plane_is_planar(self) -> None:
        plane = catalog.make("plane").model

        assert classify_point(plane, 0.1, 0.2) == PointType.PLANAR

    def test_cylinder_is_parabolic(self, cylinder) -> None:
        assert classify_point(cylinder, 0.0, 1.0) == PointType.PARABOLIC

    def test_saddle(self) -> None:
        saddle = catalog.make("hyperbolic_paraboloid").model

        assert classify_point(saddle, 0.0, 0.0) == PointType.HYPERBOLIC


class TestNormalCurvature:
    def test_cylinder_directions(self, cylinder) -> None:
        assert normal_curvature(cylinder, 0.0, 1.0, (1, 0)) == pytest.approx(0.0)
        assert normal_curvature(cylinder, 0.0, 1.0, (0, 3)) == pytest.approx(1.0)

    def test_euler_formula(self, cylinder) -> None:
        assert euler_curvature(cylinder, 0.0, 1.0, math.pi / 4) == pytest.approx(0.5)

    def test_euler_formula_agrees_with_directions(self) -> None:
        ellipsoid = catalog.make("ellipsoid").model
        bundle = shape_and_curvatures(ellipsoid, 0.2, 0.5)
        theta = 0.6
        direction = math.cos(theta) * bundle.d1 + math.sin(theta) * bundle.d2

        assert normal_curvature(ellipsoid, 0.2, 0.5, direction) == pytest.approx(
            euler_curvature(ellipsoid, 0.2, 0.5, theta)
        )

    def test_zero_direction_is_rejected(self, cylinder) -> None:
        with pytest.raises(OutOfRangeError):
            normal_curvature(cylinder, 0.0, 1.0, (0, 0))


class TestMeusnier:
    @pytest.mark.parametrize("direction", [(1, 0), (1, 1), (-0.3, 2.0)])
    def test_sections_lie_on_the_sphere(self, sphere, direction) -> None:
        deviation = meusnier_check(
            sphere, 0.3, 0.4, direction, [0.0, 0.3, -0.7, 1.2]
        )

        assert deviation <= 1e-8

    def test_ellipsoid(self) -> None:
        ellipsoid = catalog.make("ellipsoid").model

        assert meusnier_check(ellipsoid, 0.5, 1.0, (1, 2), [0.2, -1.0]) <= 1e-8

    def test_asymptotic_direction_is_rejected(self) -> None:
        saddle = catalog.make("hyperbolic_paraboloid").model

        with pytest.raises(AsymptoticDirectionError):
            meusnier_check(saddle, 0.0, 0.0, (1, 1), [0.0])

    def test_tilt_must_be_below_a_right_angle(self, sphere) -> None:
        with pytest.raises(OutOfRangeError):
            meusnier_check(sphere, 0.3, 0.4, (1, 0), [math.pi / 2])

    def test_deviation_uses_the_curvature_of_the_section(self, sphere, mocker) -> None:
        def doubled(c, t):
            report = curvature_torsion(c, t)
            return replace(report, kappa=2 * report.kappa)

        mocker.patch("geo3.surface.forms.curvature_torsion", side_effect=doubled)

        deviation = meusnier_check(sphere, 0.3, 0.4, (1, 0), [0.0])

        assert deviation == pytest.approx(0.5, rel=1e-8)
