import numpy as np
import pytest

from geo3 import catalog
from geo3.errors import IrregularPointError, UndeclaredVariableError
from geo3.surface import gauss_map, implicit_surface, tangent_plane


@pytest.fixture
def unit_sphere():
    return implicit_surface("x^2 + y^2 + z^2 - 1")


class TestImplicitSurface:
    def test_gradient(self, unit_sphere) -> None:
        np.testing.assert_allclose(
            unit_sphere.gradient(np.array([0.6, 0.0, 0.8])), [1.2, 0.0, 1.6]
        )

    def test_sphere_normal_is_radial(self, unit_sphere) -> None:
        p = np.array([0.6, 0.0, 0.8])

        np.testing.assert_allclose(unit_sphere.normal_at(p), p)
        assert unit_sphere.level_residual(p) == pytest.approx(0.0, abs=1e-15)

    @pytest.mark.parametrize(
        "implicit, parametric",
        [("implicit_sphere", "sphere"), ("implicit_torus", "torus")],
    )
    def test_agrees_with_the_parametric_normal(self, implicit, parametric) -> None:
        level_set = catalog.make(implicit).model
        chart = catalog.make(parametric).model
        for u, v in [(0.3, 0.4), (-0.9, 2.5), (1.2, 5.0)]:
            p = tangent_plane(chart, u, v).point

            alignment = np.dot(level_set.normal_at(p), gauss_map(chart, u, v))

            assert abs(alignment) == pytest.approx(1.0, abs=1e-12)
            assert level_set.level_residual(p) == pytest.approx(0.0, abs=1e-12)

    def test_critical_point_is_irregular(self, unit_sphere) -> None:
        origin = np.zeros(3)

        assert not unit_sphere.is_regular_at(origin)
        with pytest.raises(IrregularPointError):
            unit_sphere.normal_at(origin)

    def test_hyperboloid_is_regular_on_the_surface(self) -> None:
        hyperboloid = catalog.make("implicit_hyperboloid").model
        p = np.array([np.cosh(0.5), 0.0, np.sinh(0.5)])

        assert hyperboloid.is_regular_at(p)
        assert hyperboloid.level_residual(p) == pytest.approx(0.0, abs=1e-14)

    def test_only_cartesian_variables_are_accepted(self) -> None:
        with pytest.raises(UndeclaredVariableError):
            implicit_surface("x^2 + w")
