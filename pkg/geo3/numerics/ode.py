from collections.abc import Callable

import numpy as np

from geo3.errors import IntegrationError


RHS = Callable[[float, np.ndarray], np.ndarray]
PostStep = Callable[[float, np.ndarray], np.ndarray]


def rk4_step(rhs: RHS, t: float, y: np.ndarray, h: float) -> np.ndarray:
    k1 = rhs(t, y)
    k2 = rhs(t + h / 2, y + h / 2 * k1)
    k3 = rhs(t + h / 2, y + h / 2 * k2)
    k4 = rhs(t + h, y + h * k3)
    return y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)


def rk4(
    rhs: RHS,
    y0: np.ndarray,
    t0: float,
    t1: float,
    steps: int,
    post_step: PostStep | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Integrate ``y' = rhs(t, y)`` from ``t0`` to ``t1`` with classical RK4.

    Args:
        rhs: Right hand side of the system.
        y0: Initial state.
        t0: Initial time.
        t1: Final time.
        steps: Number of fixed steps.
        post_step: Optional hook applied to the state after every step, e.g. to
            project it back onto a constraint. It may raise to stop the run.

    Returns:
        ``(times, states)`` with ``steps + 1`` rows each, including the
        initial state.

    Raises:
        IntegrationError: If a step produces a non-finite state.
    """
    if steps < 1:
        raise ValueError("At least one step is required")

    h = (t1 - t0) / steps
    times = t0 + h * np.arange(steps + 1)
    times[-1] = t1
    states = np.empty((steps + 1, len(y0)))
    states[0] = y = np.asarray(y0, dtype=float)

    for i in range(steps):
        y = rk4_step(rhs, times[i], y, h)
        if not np.all(np.isfinite(y)):
            raise IntegrationError(
                f"Non-finite state after step {i + 1}", point=times[i + 1]
            )
        if post_step is not None:
            y = post_step(times[i + 1], y)
        states[i + 1] = y

    return times, states
