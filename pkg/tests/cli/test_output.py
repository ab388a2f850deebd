import json
import math

import pytest

from geo3.cli import EXIT_OK, main
from geo3.cli.output import Report, to_csv, to_json


@pytest.fixture
def run(capsys):
    def invoke(*argv: str) -> str:
        code = main(list(argv))
        captured = capsys.readouterr()
        assert code == EXIT_OK, captured.err
        return captured.out

    return invoke


@pytest.fixture
def report():
    return Report(
        "example",
        {"model": "m"},
        [{"a": math.inf, "b": math.nan, "c": [1.0, -math.inf, 0.0], "d": None}],
    )


class TestRenderers:
    def test_json_writes_non_finite_values_as_null(self, report) -> None:
        document = json.loads(to_json(report))

        assert document == {
            "name": "example",
            "params": {"model": "m"},
            "samples": [{"a": None, "b": None, "c": [1.0, None, 0.0], "d": None}],
        }

    def test_csv_spells_out_non_finite_values(self, report) -> None:
        assert to_csv(report) == "a,b,c_x,c_y,c_z,d\ninf,nan,1.0,-inf,0.0,\n"

    def test_csv_columns_follow_the_first_appearance_of_each_field(self) -> None:
        rows = Report("r", {}, [{"x": 1.0, "y": 2.0}, {"x": 3.0, "z": 4.0}])

        assert to_csv(rows) == "x,y,z\n1.0,2.0,\n3.0,,4.0\n"


class TestGoldenOutput:
    @pytest.mark.integration
    def test_curve_info_csv_at_a_straight_point(self, run) -> None:
        out = run(
            "--format", "csv", "curve", "info", "(t, 0, 0) on [0, 1]", "--at", "0.5"
        )

        assert out == (
            "t,point_x,point_y,point_z,speed,kappa,tau,status\n"
            "0.5,0.5,0.0,0.0,1.0,0.0,,undefined\n"
        )

    @pytest.mark.integration
    def test_curve_info_csv_header_with_a_frame(self, run) -> None:
        out = run(
            "--format",
            "csv",
            "curve",
            "info",
            "(cos t, sin t, t) on [0, 6.3]",
            "--at",
            "0",
        )

        header, row, *rest = out.split("\n")
        assert header.split(",") == [
            "t",
            "point_x",
            "point_y",
            "point_z",
            "speed",
            "kappa",
            "tau",
            "status",
            "T_x",
            "T_y",
            "T_z",
            "N_x",
            "N_y",
            "N_z",
            "B_x",
            "B_y",
            "B_z",
        ]
        assert rest == [""]
        values = row.split(",")
        assert values[7] == "defined"
        assert [float(x) for x in values[5:7]] == pytest.approx([0.5, 0.5])

    @pytest.mark.integration
    def test_surface_forms_json(self, run) -> None:
        out = run(
            "--format",
            "json",
            "surface",
            "forms",
            "(u, v, 0) on [0, 1] x [0, 1]",
            "--at",
            "0.5,0.25",
        )

        document = json.loads(out)
        assert list(document) == ["name", "params", "samples"]
        assert document["name"] == "surface forms"
        assert list(document["params"]) == ["model"]
        (sample,) = document["samples"]
        assert list(sample) == ["u", "v", "E", "F", "G", "e", "f", "g", "n"]
        assert sample == {
            "u": 0.5,
            "v": 0.25,
            "E": 1.0,
            "F": 0.0,
            "G": 1.0,
            "e": 0.0,
            "f": 0.0,
            "g": 0.0,
            "n": [0.0, 0.0, 1.0],
        }
