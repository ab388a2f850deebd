"""The ``geo3`` command line.

Exit codes: 0 on success, 1 for usage and input errors, 2 for mathematical
errors (domain violations, irregular points, failed integration) and 3 when a
``check`` subcommand finds an identity over its tolerance.
"""

import logging
import math
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

import click
import numpy as np
from pydantic import ValidationError

from geo3 import catalog
from geo3.autodiff import lift
from geo3.config import Config
from geo3.curve import (
    FrameState,
    arc_length,
    curvature_torsion,
    is_regular,
    param_by_arc_length,
    planar_from_curvature,
    reconstruct,
    sample_frames,
    shape_tests,
)
from geo3.errors import Geo3Error, InputError, InvariantCheckError, MathError
from geo3.expr import Interval, evaluate, parse_scalar
from geo3.geodesy import GeodesicState, ParamCurve, is_geodesic, trace_geodesic
from geo3.strip import ExprNormalField, Strip, frenet_strip, parallel_normal_field
from geo3.strip import strip_invariants as compute_strip_invariants
from geo3.surface import (
    check_suite,
    christoffel,
    classify_point,
    grid_points,
    is_regular_surface,
    minimality_and_directions,
    shape_and_curvatures,
    sweep,
)

from .options import OutputFormat, RunConfig
from .output import Report, emit


LOGGER = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

EXIT_OK, EXIT_INPUT, EXIT_MATH, EXIT_CHECK = 0, 1, 2, 3


def _floats(text: str, count: int, name: str) -> tuple[float, ...]:
    try:
        values = tuple(float(x) for x in text.split(","))
    except ValueError:
        values = ()
    if len(values) != count:
        raise click.BadParameter(
            f"expected {count} comma separated numbers", param_hint=name
        )
    return values


def _grid(text: str) -> tuple[int, int]:
    nu, sep, nv = text.lower().partition("x")
    try:
        return int(nu), int(nv)
    except ValueError:
        raise click.BadParameter("expected NUxNV, e.g. 10x10", param_hint="--grid")


def _config(ctx: click.Context, **values: Any) -> RunConfig:
    options = ctx.find_root().obj
    return RunConfig(
        subcommand=ctx.command_path.removeprefix(ctx.find_root().info_name).strip(),
        output_format=options["output_format"],
        out=options["out"],
        tolerance=options["tolerance"],
        **values,
    )


def _emit(config: RunConfig, report: Report) -> None:
    emit(report, config.output_format, config.out)


model_argument = click.argument("model", required=False)


def range_option(name: str, text: str):
    return click.option("--range", name, default="0,1", show_default=True, help=text)


file_option = click.option(
    "--file",
    "model_file",
    type=click.Path(path_type=Path),
    help="Read the model from a file.",
)


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log progress at INFO level.")
@click.option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.TABLE.value,
    show_default=True,
)
@click.option("--out", type=click.Path(path_type=Path), help="Write output to a file.")
@click.option("--tolerance", help="Tolerance override, as in GEO3_TOLERANCE.")
@click.pass_context
def cli(ctx, verbose, output_format, out, tolerance):
    """Differential geometry of curves and surfaces."""
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING, format=LOG_FORMAT
    )
    if tolerance is not None:
        Config.get_instance().apply_tolerance_override(tolerance)
    ctx.obj = {
        "output_format": OutputFormat(output_format),
        "out": out,
        "tolerance": tolerance,
    }


# curves


@cli.group()
def curve():
    """Curves t -> (x, y, z)."""


def _curvature_sample(report) -> dict[str, Any]:
    sample = {
        "t": report.t,
        "point": report.point,
        "speed": report.speed,
        "kappa": report.kappa,
        "tau": report.tau,
        "status": report.status,
    }
    if report.frame is not None:
        sample.update(T=report.frame.T, N=report.frame.N, B=report.frame.B)
    return sample


@curve.command()
@model_argument
@file_option
@click.option("--at", "t", type=float, required=True, help="Parameter value.")
@click.pass_context
def info(ctx, model, model_file, t):
    """Curvature, torsion and Frenet frame at one point."""
    config = _config(ctx, model=model, model_file=model_file)
    c = config.curve()
    sample = _curvature_sample(curvature_torsion(c, t))
    _emit(config, Report("curve info", {"model": str(c)}, [sample]))


@curve.command()
@model_argument
@file_option
@click.option("--samples", default=50, show_default=True)
@click.pass_context
def frames(ctx, model, model_file, samples):
    """Frenet frames at equally spaced parameters."""
    config = _config(ctx, model=model, model_file=model_file, samples=samples)
    c = config.curve()
    reports = sample_frames(c, config.samples)
    rows = [_curvature_sample(r) for r in reports]
    _emit(config, Report("curve frames", {"model": str(c)}, rows))


@curve.command()
@model_argument
@file_option
@click.option("--from", "a", type=float, help="Lower parameter (default: domain lo).")
@click.option("--to", "b", type=float, help="Upper parameter (default: domain end).")
@click.pass_context
def length(ctx, model, model_file, a, b):
    """Arc length between two parameters."""
    config = _config(ctx, model=model, model_file=model_file)
    c = config.curve()
    a = c.domain.lo if a is None else a
    b = c.domain.hi if b is None else b
    row = {"a": a, "b": b, "length": arc_length(c, a, b)}
    _emit(config, Report("curve length", {"model": str(c)}, [row]))


@curve.command()
@model_argument
@file_option
@click.option("--samples", default=11, show_default=True)
@click.pass_context
def reparam(ctx, model, model_file, samples):
    """Parameters t(s) at equally spaced arc lengths s."""
    config = _config(ctx, model=model, model_file=model_file, samples=samples)
    c = config.curve()
    total = arc_length(c, c.domain.lo, c.domain.hi)
    rows = [
        {"s": s, "t": param_by_arc_length(c, s)}
        for s in Interval(0.0, total).samples(config.samples)
    ]
    _emit(config, Report("curve reparam", {"model": str(c), "length": total}, rows))


@curve.command()
@model_argument
@file_option
@click.option("--samples", default=50, show_default=True)
@click.pass_context
def tests(ctx, model, model_file, samples):
    """Regularity, planarity, general helix and sphericity tests."""
    config = _config(ctx, model=model, model_file=model_file, samples=samples)
    c = config.curve()
    regularity = is_regular(c, config.samples)
    shape = shape_tests(c, config.samples)
    row = {
        "regular": regularity.regular,
        "min_speed": regularity.min_speed,
        "planar": shape.planar,
        "general_helix": shape.general_helix,
        "spherical": shape.spherical,
        "center": shape.center,
        "max_sphere_residual": shape.max_sphere_residual,
        "samples_used": shape.samples_used,
    }
    _emit(config, Report("curve tests", {"model": str(c)}, [row]))


def _arc_range(text: str) -> Interval:
    return Interval(*_floats(text, 2, "--range"))


def _thin(count: int, samples: int) -> list[int]:
    return sorted({round(i * (count - 1) / (samples - 1)) for i in range(samples)})


@curve.command("reconstruct")
@click.option("--kappa", required=True, help="Curvature as an expression in s.")
@click.option("--tau", required=True, help="Torsion as an expression in s.")
@range_option("s_range", "s interval.")
@click.option("--samples", default=50, show_default=True)
@click.pass_context
def reconstruct_command(ctx, kappa, tau, s_range, samples):
    """Curve with prescribed curvature and torsion (natural equations)."""
    config = _config(ctx, samples=samples)
    k, w = parse_scalar(kappa, {"s"}), parse_scalar(tau, {"s"})
    result = reconstruct(k, w, _arc_range(s_range), FrameState.identity())
    rows = [
        {"s": result.s[i], "point": result.points[i], "T": result.frames[i].T}
        for i in _thin(len(result.s), config.samples)
    ]
    _emit(config, Report("curve reconstruct", {"kappa": kappa, "tau": tau}, rows))


@curve.command()
@click.option("--kappa", required=True, help="Signed curvature, an expression in s.")
@range_option("s_range", "s interval.")
@click.option("--samples", default=50, show_default=True)
@click.pass_context
def planar(ctx, kappa, s_range, samples):
    """Plane curve with prescribed signed curvature."""
    config = _config(ctx, samples=samples)
    result = planar_from_curvature(
        parse_scalar(kappa, {"s"}), _arc_range(s_range), samples=config.samples
    )
    rows = [
        {"s": s, "point": p, "angle": phi}
        for s, p, phi in zip(result.s, result.points, result.angles)
    ]
    _emit(config, Report("curve planar", {"kappa": kappa}, rows))


# strips


@cli.group()
def strip():
    """Curves with a unit normal field."""


def _strip(config: RunConfig, normal: str | None) -> Strip:
    c = config.curve()
    if normal is None:
        return frenet_strip(c)
    components = tuple(parse_scalar(x, {"t"}) for x in _split_tuple(normal))
    return Strip(c, ExprNormalField(components))


def _split_tuple(text: str) -> list[str]:
    """Split ``"(a, b, c)"`` at top level commas."""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise InputError(
            "Normal field must be written as (n1, n2, n3)", fragment=text
        )
    parts, depth, current = [], 0, ""
    for ch in text[1:-1]:
        if ch == "," and depth == 0:
            parts.append(current)
            current = ""
            continue
        depth += {"(": 1, ")": -1}.get(ch, 0)
        current += ch
    parts.append(current)
    if len(parts) != 3:
        raise InputError(
            f"Normal field needs 3 components, got {len(parts)}", fragment=text
        )
    return parts


normal_option = click.option(
    "--normal", help="Normal field (n1, n2, n3) in t; default: principal normal."
)


@strip.command("invariants")
@model_argument
@file_option
@normal_option
@click.option("--samples", default=20, show_default=True)
@click.pass_context
def strip_invariants(ctx, model, model_file, normal, samples):
    """Normal curvature, geodesic curvature and strip torsion."""
    config = _config(ctx, model=model, model_file=model_file, samples=samples)
    s = _strip(config, normal)
    rows = [
        vars(compute_strip_invariants(s, t))
        for t in s.curve.domain.samples(config.samples)
    ]
    _emit(config, Report("strip invariants", {"model": str(s.curve)}, rows))


@strip.command()
@model_argument
@file_option
@normal_option
@click.option("--phi0", default=0.0, show_default=True, help="Initial rotation angle.")
@click.option("--samples", default=20, show_default=True)
@click.pass_context
def parallel(ctx, model, model_file, normal, phi0, samples):
    """Rotate the normal into a parallel (zero torsion) field."""
    config = _config(ctx, model=model, model_file=model_file, samples=samples)
    field = parallel_normal_field(_strip(config, normal), phi0=phi0)
    rows = [
        vars(field.samples[i]) for i in _thin(len(field.samples), config.samples)
    ]
    params = {"model": str(field.strip.curve), "max_torsion": field.max_torsion}
    _emit(config, Report("strip parallel", params, rows))


# surfaces


@cli.group()
def surface():
    """Surfaces (u, v) -> (x, y, z)."""


at_option = click.option("--at", "at", help="Parameter point u,v.")
grid_option = click.option("--grid", "grid", help="Grid NUxNV over the domain.")


def _points(config: RunConfig, s, at: str | None) -> list[tuple[float, float]]:
    if at is not None:
        return [_floats(at, 2, "--at")]
    return grid_points(s, config.grid or (5, 5))


def _sweep_rows(s, points, fn) -> list[dict[str, Any]]:
    if len(points) == 1:
        return [fn(s, *points[0])]
    result = sweep(s, points, fn)
    for point, error in result.failures:
        LOGGER.warning(f"Skipped {point}: {error}")
    return [value for _, value in result.completed()]


def _forms_row(s, u, v) -> dict[str, Any]:
    b = shape_and_curvatures(s, u, v)
    return {
        "u": u,
        "v": v,
        "E": b.E,
        "F": b.F,
        "G": b.G,
        "e": b.e,
        "f": b.f,
        "g": b.g,
        "n": b.n,
    }


def _curvatures_row(s, u, v) -> dict[str, Any]:
    b = shape_and_curvatures(s, u, v)
    return {
        "u": u,
        "v": v,
        "K": b.K,
        "H": b.H,
        "kappa1": b.kappa1,
        "kappa2": b.kappa2,
        "umbilic": b.umbilic,
    }


def _classify_row(s, u, v) -> dict[str, Any]:
    return {"u": u, "v": v, "type": classify_point(s, u, v)}


def _christoffel_row(s, u, v) -> dict[str, Any]:
    gamma = christoffel(s, u, v)
    names = "uv"
    row: dict[str, Any] = {"u": u, "v": v}
    for k in range(2):
        for i, j in ((0, 0), (0, 1), (1, 1)):
            row[f"gamma_{names[k]}_{names[i]}{names[j]}"] = gamma[k, i, j]
    return row


def _pointwise(name: str, fn):
    @model_argument
    @file_option
    @at_option
    @grid_option
    @click.pass_context
    def command(ctx, model, model_file, at, grid):
        config = _config(
            ctx,
            model=model,
            model_file=model_file,
            grid=_grid(grid) if grid else None,
        )
        s = config.surface()
        rows = _sweep_rows(s, _points(config, s, at), fn)
        _emit(config, Report(f"surface {name}", {"model": str(s)}, rows))

    return command


surface.command("forms", help="First and second fundamental forms and normal.")(
    _pointwise("forms", _forms_row)
)
surface.command("curvatures", help="Gaussian, mean and principal curvatures.")(
    _pointwise("curvatures", _curvatures_row)
)
surface.command("classify", help="Point type from the sign of eg - f^2.")(
    _pointwise("classify", _classify_row)
)
surface.command("christoffel", help="Christoffel symbols gamma_k_ij.")(
    _pointwise("christoffel", _christoffel_row)
)


@surface.command()
@model_argument
@file_option
@grid_option
@click.pass_context
def check(ctx, model, model_file, grid):
    """Verify the structure identities on a grid (exit 3 on failure)."""
    config = _config(
        ctx, model=model, model_file=model_file, grid=_grid(grid or "10x10")
    )
    s = config.surface()
    report = check_suite(s, config.grid)
    rows = [
        {
            "check": c.name,
            "residual": c.residual,
            "tolerance": c.tolerance,
            "passed": c.passed,
        }
        for c in report.checks
    ]
    params = {
        "model": str(s),
        "points": report.points,
        "max_residual": report.max_residual,
    }
    _emit(config, Report("surface check", params, rows))
    report.raise_on_failure()


@surface.command()
@model_argument
@file_option
@grid_option
@click.pass_context
def regular(ctx, model, model_file, grid):
    """Minimum of |x_u x x_v| over a grid."""
    config = _config(
        ctx, model=model, model_file=model_file, grid=_grid(grid or "20x20")
    )
    s = config.surface()
    report = is_regular_surface(s, config.grid)
    row = {
        "regular": report.regular,
        "min_norm": report.min_speed,
        "worst": report.worst,
    }
    _emit(config, Report("surface regular", {"model": str(s)}, [row]))


@surface.command()
@model_argument
@file_option
@grid_option
@click.pass_context
def minimal(ctx, model, model_file, grid):
    """Minimality with asymptotic and principal directions per point."""
    config = _config(
        ctx, model=model, model_file=model_file, grid=_grid(grid or "5x5")
    )
    s = config.surface()
    report = minimality_and_directions(s, config.grid)
    rows = [
        {
            "u": p.u,
            "v": p.v,
            "H": p.H,
            "K": p.K,
            "asymptotic": len(p.asymptotic),
            "d1": p.principal[0],
            "d2": p.principal[1],
            "planar": p.planar,
        }
        for p in report.points
    ]
    params = {
        "model": str(s),
        "is_minimal": report.is_minimal,
        "max_abs_H": report.max_abs_H,
    }
    _emit(config, Report("surface minimal", params, rows))


@surface.command()
@click.argument("F")
@click.option("--at", "at", required=True, help="Point x,y,z.")
@click.pass_context
def implicit(ctx, f, at):
    """Normal and regularity of the level set F(x, y, z) = 0."""
    config = _config(ctx, model=f)
    level_set = config.implicit()
    p = np.array(_floats(at, 3, "--at"))
    row = {
        "point": p,
        "level_residual": level_set.level_residual(p),
        "regular": level_set.is_regular_at(p),
        "normal": level_set.normal_at(p),
    }
    _emit(config, Report("surface implicit", {"F": str(level_set.F)}, [row]))


# geodesics


@cli.group()
def geodesic():
    """Geodesics and geodesic curvature."""


@geodesic.command()
@model_argument
@file_option
@click.option("--from", "start", required=True, help="Initial point u,v.")
@click.option("--dir", "direction", required=True, help="Initial velocity du,dv.")
@click.option("--length", type=float, default=2 * math.pi, show_default=True)
@click.option("--steps", type=int, help="RK4 steps (at least the configured floor).")
@click.option("--samples", default=50, show_default=True)
@click.pass_context
def trace(ctx, model, model_file, start, direction, length, steps, samples):
    """Trace a geodesic by arc length."""
    config = _config(ctx, model=model, model_file=model_file, samples=samples)
    s = config.surface()
    u, v = _floats(start, 2, "--from")
    du, dv = _floats(direction, 2, "--dir")
    result = trace_geodesic(s, GeodesicState(u, v, du, dv), length, steps)
    rows = [
        {
            "s": result.s[i],
            "u": result.u[i],
            "v": result.v[i],
            "point": result.points[i],
        }
        for i in _thin(len(result.s), config.samples)
    ]
    params = {"model": str(s), "max_energy_drift": result.max_energy_drift}
    _emit(config, Report("geodesic trace", params, rows))


@geodesic.command("check")
@model_argument
@file_option
@click.option("--u", "u_of", required=True, help="u(t) as an expression in t.")
@click.option("--v", "v_of", required=True, help="v(t) as an expression in t.")
@range_option("t_range", "t interval.")
@click.option("--samples", default=50, show_default=True)
@click.pass_context
def geodesic_check(ctx, model, model_file, u_of, v_of, t_range, samples):
    """Whether t -> x(u(t), v(t)) is a geodesic (exit 3 if not)."""
    config = _config(ctx, model=model, model_file=model_file, samples=samples)
    s = config.surface()
    pc = ParamCurve(
        s, parse_scalar(u_of, {"t"}), parse_scalar(v_of, {"t"}), _arc_range(t_range)
    )
    report = is_geodesic(pc, config.samples)
    _emit(config, Report("geodesic check", {"u": u_of, "v": v_of}, [vars(report)]))
    if not report.is_geodesic:
        raise InvariantCheckError(
            f"Not a geodesic: max |kappa_g| = {report.max_abs_kappa_g:.3e}"
        )


# catalog


@cli.group("catalog")
def catalog_group():
    """Named classical curves and surfaces."""


@catalog_group.command("list")
@click.option(
    "--kind",
    type=click.Choice([k.value for k in catalog.EntryKind]),
    help="Filter by kind.",
)
@click.pass_context
def catalog_list(ctx, kind):
    """List catalog entries."""
    config = _config(ctx)
    entries = [catalog.make(name) for name in catalog.names()]
    rows = [
        {"name": e.name, "kind": e.kind, "model": e.describe()["model"]}
        for e in entries
        if kind is None or e.kind == kind
    ]
    _emit(config, Report("catalog list", {}, rows))


@catalog_group.command("show")
@click.argument("preset")
@click.pass_context
def catalog_show(ctx, preset):
    """Show one entry, e.g. ``torus:R=3,r=1``."""
    config = _config(ctx, model=preset)
    description = catalog.parse_preset(preset).describe()
    _emit(config, Report("catalog show", {"preset": preset}, [description]))


# expressions


@cli.command("eval")
@click.argument("expression")
@click.option("--var", "variables", multiple=True, help="Binding name=value.")
@click.option(
    "--order",
    type=click.IntRange(0, 3),
    default=0,
    show_default=True,
    help="Also print partial derivatives up to this order.",
)
@click.pass_context
def eval_command(ctx, expression, variables, order):
    """Evaluate an expression, optionally with its derivatives."""
    bindings = {}
    for item in variables:
        name, sep, value = item.partition("=")
        try:
            bindings[name.strip()] = float(value)
        except ValueError:
            sep = ""
        if not sep:
            raise click.BadParameter(
                f"expected name=value, got '{item}'", param_hint="--var"
            )
    config = _config(ctx, params=bindings)
    expr = parse_scalar(expression, set(bindings))
    if not bindings:
        row: dict[str, Any] = {"value": evaluate(expr, {})}
        _emit(config, Report("eval", {"expression": str(expr)}, [row]))
        return

    jet = lift(expr, config.params, order)
    row = {**config.params, "value": jet.value}
    if order and len(bindings) == 1:
        row.update({f"d{k}": jet.derivative((k,)) for k in range(1, order + 1)})
    elif order:
        for k in range(1, order + 1):
            for index in np.ndindex(*(k + 1,) * len(bindings)):
                if sum(index) == k:
                    row["d" + "".join(map(str, index))] = jet.derivative(index)
    _emit(config, Report("eval", {"expression": str(expr)}, [row]))


GLOBAL_VALUE_OPTIONS = frozenset({"--format", "--out", "--tolerance"})


def _command_name(argv: Sequence[str]) -> str:
    """The subcommand path named by ``argv``, e.g. ``curve info``."""
    words, command, skip = [], cli, False
    for arg in argv:
        if skip:
            skip = False
            continue
        if arg.startswith("-"):
            skip = arg in GLOBAL_VALUE_OPTIONS
            continue
        if not isinstance(command, click.Group) or arg not in command.commands:
            break
        command = command.commands[arg]
        words.append(arg)
    return " ".join(words) or "geo3"


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return its exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    name = _command_name(argv)
    try:
        cli.main(args=argv, prog_name="geo3", standalone_mode=False)
    except click.exceptions.Abort:
        return EXIT_INPUT
    except click.ClickException as e:
        e.show()
        return EXIT_INPUT
    except ValidationError as e:
        click.echo(f"geo3 {name}: invalid options: {e}", err=True)
        return EXIT_INPUT
    except InvariantCheckError as e:
        click.echo(f"geo3 {name}: {e}", err=True)
        return EXIT_CHECK
    except MathError as e:
        click.echo(f"geo3 {name}: {e}", err=True)
        return EXIT_MATH
    except (InputError, Geo3Error, ValueError) as e:
        click.echo(f"geo3 {name}: {e}", err=True)
        return EXIT_INPUT
    return EXIT_OK
