from .catalog import (
    BUILDERS,
    DEVELOPABLE_EPSILON,
    CatalogEntry,
    EntryKind,
    make,
    names,
    parse_preset,
)


__all__ = [
    "BUILDERS",
    "CatalogEntry",
    "DEVELOPABLE_EPSILON",
    "EntryKind",
    "make",
    "names",
    "parse_preset",
]
