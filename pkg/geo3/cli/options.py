"""Validated run configuration for the command line."""

from enum import StrEnum, auto
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from geo3.catalog import CatalogEntry, EntryKind, parse_preset
from geo3.errors import InputError
from geo3.expr import CurveModel, SurfaceModel, parse_curve, parse_surface
from geo3.surface import ImplicitSurface, implicit_surface


class OutputFormat(StrEnum):
    TABLE = auto()
    JSON = auto()
    CSV = auto()


class RunConfig(BaseModel):
    """Everything one CLI invocation needs.

    The model may come inline (``model``) or from a file (``model_file``), but
    not both. Inline values that are neither DSL source nor an existing path
    are read as catalog presets ``name[:key=value,...]``.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    subcommand: str
    model: str | None = None
    model_file: Path | None = None
    params: dict[str, float] = Field(default_factory=dict)
    samples: int = Field(default=50, ge=2)
    grid: tuple[int, int] | None = None
    output_format: OutputFormat = OutputFormat.TABLE
    out: Path | None = None
    tolerance: str | None = None

    @field_validator("grid")
    @classmethod
    def _grid_has_two_points_per_axis(cls, grid: tuple[int, int] | None):
        if grid is not None and min(grid) < 2:
            raise ValueError(f"grid needs at least 2x2 points, got {grid[0]}x{grid[1]}")
        return grid

    @model_validator(mode="after")
    def _one_model_source(self) -> "RunConfig":
        if self.model is not None and self.model_file is not None:
            raise ValueError("give either an inline model or --file, not both")
        return self

    def source(self) -> str:
        """The model source text.

        Raises:
            InputError: If no model source was given or the file is unreadable.
        """
        if self.model_file is not None:
            return _read(self.model_file)
        if self.model is None:
            raise InputError(f"'{self.subcommand}' needs a model")
        if not self.model.lstrip().startswith("(") and Path(self.model).is_file():
            return _read(Path(self.model))
        return self.model

    def _entry(self, text: str, kind: EntryKind) -> CatalogEntry:
        entry = parse_preset(text)
        if entry.kind != kind:
            raise InputError(
                f"Catalog entry '{entry.name}' is a {entry.kind}, not a {kind}",
                fragment=text,
            )
        return entry

    def curve(self) -> CurveModel:
        text = self.source()
        if text.lstrip().startswith("("):
            return parse_curve(text)
        return self._entry(text, EntryKind.CURVE).model

    def surface(self) -> SurfaceModel:
        text = self.source()
        if text.lstrip().startswith("("):
            return parse_surface(text)
        entry = self._entry(text, EntryKind.SURFACE)
        if entry.safe_domain is not None:
            return SurfaceModel(entry.model.components, entry.safe_domain, entry.name)
        return entry.model

    def implicit(self) -> ImplicitSurface:
        text = self.source()
        try:
            return self._entry(text, EntryKind.IMPLICIT).model
        except InputError:
            return implicit_surface(text)


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8").strip()
    except OSError as e:
        raise InputError(f"Cannot read model file '{path}'", e, fragment=str(path))
