import math

import pytest

from geo3.errors import DomainError, ExprSyntaxError, UndeclaredVariableError
from geo3.expr import (
    Binary,
    Call,
    Constant,
    Unary,
    Variable,
    evaluate,
    parse_scalar,
    tokenize,
)
from geo3.expr.parser import TokenKind


class TestTokenize:
    def test_tokens_carry_byte_offsets(self) -> None:
        tokens = tokenize("u * v")

        assert [t.offset for t in tokens] == [0, 2, 4, 5]
        assert tokens[-1].kind == TokenKind.END

    def test_offsets_count_utf8_bytes(self) -> None:
        tokens = tokenize("[0, 1] × [0, 1]")
        after = next(t for t in tokens if t.text == "×")
        following = tokens[tokens.index(after) + 1]

        assert following.offset == after.offset + len("× ".encode("utf-8"))

    def test_unknown_character_is_rejected(self) -> None:
        with pytest.raises(ExprSyntaxError) as excinfo:
            tokenize("t $ 2")

        assert excinfo.value.offset == 2


class TestParseScalar:
    def test_sum_of_squares_has_plus_at_the_root(self) -> None:
        expr = parse_scalar("cos(t)^2 + sin(t)^2", {"t"})

        assert isinstance(expr, Binary)
        assert expr.op == "+"
        assert evaluate(expr, {"t": 0.7}) == pytest.approx(1.0)

    def test_declared_variables_and_constants(self) -> None:
        expr = parse_scalar("u*v - pi", {"u", "v"})

        assert evaluate(expr, {"u": 2, "v": 3}) == pytest.approx(6 - math.pi)

    def test_unbalanced_parenthesis_reports_its_offset(self) -> None:
        with pytest.raises(ExprSyntaxError) as excinfo:
            parse_scalar("cos(t", {"t"})

        assert excinfo.value.offset == 5

    def test_undeclared_variable_is_rejected(self) -> None:
        with pytest.raises(UndeclaredVariableError) as excinfo:
            parse_scalar("t + w", {"t"})

        assert excinfo.value.name == "w"
        assert excinfo.value.offset == 4

    @pytest.mark.parametrize("source", ["", "   ", "t +", "* t", "cos", "(t"])
    def test_malformed_sources_are_rejected(self, source) -> None:
        with pytest.raises(ExprSyntaxError):
            parse_scalar(source, {"t"})

    def test_power_is_right_associative(self) -> None:
        assert evaluate(parse_scalar("2^3^2", ()), {}) == 512.0

    def test_power_binds_tighter_than_unary_minus(self) -> None:
        expr = parse_scalar("-t^2", {"t"})

        assert expr == Unary("-", Binary("^", Variable("t"), Constant(2.0)))

    def test_numeric_juxtaposition_multiplies(self) -> None:
        assert evaluate(parse_scalar("2t", {"t"}), {"t": 3}) == 6.0
        assert evaluate(parse_scalar("3(u + v)", {"u", "v"}), {"u": 1, "v": 2}) == 9
        assert evaluate(parse_scalar("2 cos t", {"t"}), {"t": 0}) == 2.0

    def test_function_without_parentheses_takes_the_next_operand(self) -> None:
        assert parse_scalar("cos t^2", {"t"}) == Call(
            "cos", Binary("^", Variable("t"), Constant(2.0))
        )
        assert evaluate(parse_scalar("sin 2t", {"t"}), {"t": math.pi / 4}) == (
            pytest.approx(1.0)
        )

    @pytest.mark.parametrize(
        "source",
        [
            "cos(t)^2 + sin(t)^2",
            "-t^2 + 2/3*t",
            "sqrt(1 + t^2) * exp(-t)",
            "atan(t) - abs(t - 1)^(1/2)",
            "pi*e + 1e-3*t",
        ],
    )
    def test_printed_expressions_parse_back_to_the_same_tree(self, source) -> None:
        expr = parse_scalar(source, {"t"})

        assert parse_scalar(str(expr), {"t"}) == expr


class TestEvaluate:
    def test_simple_values(self) -> None:
        assert evaluate(parse_scalar("sin(pi/2)", ()), {}) == 1.0
        assert evaluate(parse_scalar("cos(0)*3 + 1", ()), {}) == 4.0

    @pytest.mark.parametrize(
        "source, fragment",
        [
            ("ln(-1)", "ln"),
            ("sqrt(t - 5)", "sqrt"),
            ("1/(t - 1)", "/"),
            ("(t - 1)^(-1)", "^"),
            ("(-t)^0.5", "^"),
        ],
    )
    def test_domain_errors_name_the_subexpression(self, source, fragment) -> None:
        with pytest.raises(DomainError) as excinfo:
            evaluate(parse_scalar(source, {"t"}), {"t": 1.0})

        assert fragment in excinfo.value.subexpression

    def test_unbound_variable_is_a_domain_error(self) -> None:
        with pytest.raises(DomainError):
            evaluate(parse_scalar("t + 1", {"t"}), {})

    def test_expression_evaluate_shortcut(self) -> None:
        assert parse_scalar("u - v", {"u", "v"}).evaluate(u=5, v=2) == 3.0
