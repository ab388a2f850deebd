import logging
import math
from collections.abc import Callable

from geo3.errors import QuadratureError


LOGGER = logging.getLogger(__name__)

DEFAULT_MAX_DEPTH = 40
DEFAULT_MIN_DEPTH = 3


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-10,
    max_depth: int = DEFAULT_MAX_DEPTH,
    min_depth: int = DEFAULT_MIN_DEPTH,
) -> float:
    """Integrate ``f`` over ``[a, b]`` with adaptive Simpson's rule.

    Each interval is halved until the Richardson error estimate of the two
    halves falls below its share of ``tol``. Intervals are always split at least
    ``min_depth`` times, and never more than ``max_depth`` times (a warning is
    logged when the cap is hit).

    Args:
        f: Integrand.
        a: Lower bound.
        b: Upper bound. ``b < a`` yields the negated integral.
        tol: Absolute error tolerance.
        max_depth: Maximum recursion depth.
        min_depth: Minimum recursion depth.

    Returns:
        The integral estimate.

    Raises:
        QuadratureError: If the integrand is not finite at a sample.
    """
    if a == b:
        return 0.0
    if a > b:
        return -adaptive_simpson(f, b, a, tol, max_depth, min_depth)

    capped = False

    def sample(x: float) -> float:
        y = f(x)
        if not math.isfinite(y):
            raise QuadratureError(f"Non-finite integrand value {y!r}", point=x)
        return y

    def simpson(fa: float, fm: float, fb: float, h: float) -> float:
        return h / 3.0 * (fa + 4.0 * fm + fb)

    def adaptive(
        a: float,
        b: float,
        fa: float,
        fm: float,
        fb: float,
        whole: float,
        depth: int,
        tol: float,
    ) -> float:
        nonlocal capped
        m = (a + b) / 2.0
        h = (b - a) / 4.0
        flm = sample((a + m) / 2.0)
        frm = sample((m + b) / 2.0)

        left = simpson(fa, flm, fm, h)
        right = simpson(fm, frm, fb, h)
        error = (left + right - whole) / 15.0

        if depth >= min_depth and abs(error) <= tol:
            return left + right + error
        if depth >= max_depth:
            capped = True
            return left + right + error

        return adaptive(a, m, fa, flm, fm, left, depth + 1, tol / 2.0) + adaptive(
            m, b, fm, frm, fb, right, depth + 1, tol / 2.0
        )

    fa, fm, fb = sample(a), sample((a + b) / 2.0), sample(b)
    result = adaptive(a, b, fa, fm, fb, simpson(fa, fm, fb, (b - a) / 2.0), 0, tol)
    if capped:
        LOGGER.warning(
            f"Adaptive Simpson reached depth {max_depth} on [{a}, {b}]; "
            f"result may not meet tolerance {tol}"
        )
    return result
