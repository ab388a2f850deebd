from .main import EXIT_CHECK, EXIT_INPUT, EXIT_MATH, EXIT_OK, cli, main
from .options import OutputFormat, RunConfig
from .output import Report, emit


__all__ = [
    "EXIT_CHECK",
    "EXIT_INPUT",
    "EXIT_MATH",
    "EXIT_OK",
    "OutputFormat",
    "Report",
    "RunConfig",
    "cli",
    "emit",
    "main",
]
