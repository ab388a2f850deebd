from .config import DEFAULTS, Config, setting, tolerance


__all__ = ["Config", "DEFAULTS", "setting", "tolerance"]
