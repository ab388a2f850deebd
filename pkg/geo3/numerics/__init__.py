from .alignment import rigid_align
from .ode import rk4, rk4_step
from .quadrature import adaptive_simpson


__all__ = ["adaptive_simpson", "rigid_align", "rk4", "rk4_step"]
