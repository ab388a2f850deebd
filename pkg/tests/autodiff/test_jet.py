import math

import numpy as np
import pytest

from geo3.autodiff import Jet, Jet1, apply, lift, lift1, lift2
from geo3.errors import DomainError
from geo3.expr import differentiate, evaluate, parse_scalar


SMOOTH_EXPRESSIONS = [
    "t^3 - 2*t",
    "sin(t)*exp(-t)",
    "cos(2*t)/(1 + t^2)",
    "sqrt(1 + t)*ln(t)",
    "tan(t/2) + atan(t)",
    "sinh(t)*cosh(t) - tanh(t)",
    "t^t",
    "abs(t - 3)^(3/2)",
    "2^t + e^(t/4)",
    "1/(t*(t + 1))",
]


@pytest.fixture(scope="module")
def rng():
    return np.random.default_rng(20240601)


class TestJetArithmetic:
    def test_polynomial(self) -> None:
        jet = lift1(parse_scalar("t^2", {"t"}), 3.0)

        assert jet.derivatives == (9.0, 6.0, 2.0, 0.0)

    def test_sine_series(self) -> None:
        jet = lift1(parse_scalar("sin t", {"t"}), 0.0)

        assert jet.derivatives == pytest.approx((0.0, 1.0, 0.0, -1.0))

    def test_bivariate_monomial(self) -> None:
        jet = lift2(parse_scalar("u*v^2", {"u", "v"}), 1.0, 2.0)

        assert jet.value == 4.0
        assert jet.partials == pytest.approx(
            {
                (0, 0): 4.0,
                (0, 1): 4.0,
                (0, 2): 2.0,
                (0, 3): 0.0,
                (1, 0): 4.0,
                (1, 1): 4.0,
                (1, 2): 2.0,
                (2, 0): 0.0,
                (2, 1): 0.0,
                (3, 0): 0.0,
            }
        )

    def test_derivative_jet_loses_one_order(self) -> None:
        jet = lift1(parse_scalar("t^3", {"t"}), 2.0)
        first = jet.d(0)

        assert first.order == 2
        assert first.derivatives == pytest.approx((12.0, 12.0, 6.0))

    def test_derivative_of_order_zero_jet_is_rejected(self) -> None:
        with pytest.raises(ValueError):
            Jet.constant(1.0, 1, order=0).d(0)

    def test_derivative_beyond_order_is_rejected(self) -> None:
        with pytest.raises(ValueError):
            lift1(parse_scalar("t", {"t"}), 0.0, order=2).derivative((3,))

    def test_mixed_order_arithmetic_truncates_to_the_lower_order(self) -> None:
        a = Jet1.variable(1.0, 0, 1, order=3)
        b = Jet1.variable(1.0, 0, 1, order=1)

        assert (a * b).order == 1

    def test_order_out_of_range_is_rejected(self) -> None:
        with pytest.raises(ValueError):
            lift(parse_scalar("t", {"t"}), {"t": 0.0}, order=4)

    def test_constant_arguments_use_float_semantics(self) -> None:
        jet = apply("abs", Jet.constant(0.0, 1))

        assert jet.value == 0.0

    @pytest.mark.parametrize(
        "source, t",
        [("ln(t)", 0.0), ("sqrt(t)", 0.0), ("abs(t)", 0.0), ("1/t", 0.0)],
    )
    def test_non_smooth_points_are_domain_errors(self, source, t) -> None:
        with pytest.raises(DomainError):
            lift1(parse_scalar(source, {"t"}), t)


class TestJetAgainstReferences:
    def test_first_derivatives_match_central_differences(self, rng) -> None:
        h = 1e-5
        for _ in range(50):
            for source in SMOOTH_EXPRESSIONS:
                expr = parse_scalar(source, {"t"})
                t = float(rng.uniform(0.2, 1.5))
                expected = (
                    evaluate(expr, {"t": t + h}) - evaluate(expr, {"t": t - h})
                ) / (2 * h)

                assert lift1(expr, t).derivative((1,)) == pytest.approx(
                    expected, rel=1e-6, abs=1e-8
                ), source

    @pytest.mark.parametrize("source", SMOOTH_EXPRESSIONS)
    def test_higher_derivatives_match_symbolic_differentiation(
        self, source, rng
    ) -> None:
        expr = parse_scalar(source, {"t"})
        derivatives = [expr]
        for _ in range(3):
            derivatives.append(differentiate(derivatives[-1], "t"))

        for t in rng.uniform(0.2, 1.5, size=5):
            jet = lift1(expr, float(t))
            expected = [evaluate(d, {"t": float(t)}) for d in derivatives]

            assert jet.derivatives == pytest.approx(expected, rel=1e-9, abs=1e-9)

    def test_mixed_partials_match_symbolic_differentiation(self, rng) -> None:
        expr = parse_scalar("exp(u*v)*sin(u + 2*v) + u^2/v", {"u", "v"})
        for u, v in rng.uniform(0.3, 1.2, size=(10, 2)):
            jet = lift2(expr, float(u), float(v))
            uv = differentiate(differentiate(expr, "u"), "v")
            uvv = differentiate(uv, "v")
            point = {"u": float(u), "v": float(v)}

            assert jet.partial(1, 1) == pytest.approx(evaluate(uv, point), rel=1e-9)
            assert jet.partial(1, 2) == pytest.approx(evaluate(uvv, point), rel=1e-9)

    def test_composition_follows_the_chain_rule(self) -> None:
        jet = lift1(parse_scalar("exp(sin(t))", {"t"}), 0.4)

        expected = math.exp(math.sin(0.4)) * math.cos(0.4)
        assert jet.derivative((1,)) == pytest.approx(expected)
