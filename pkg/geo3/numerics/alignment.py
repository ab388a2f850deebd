import numpy as np


def rigid_align(
    points: np.ndarray, targets: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Best rigid motion taking ``points`` onto ``targets`` (Kabsch).

    Args:
        points: ``(n, 3)`` array.
        targets: ``(n, 3)`` array of corresponding points.

    Returns:
        ``(aligned, rotation, translation)`` where
        ``aligned = points @ rotation.T + translation`` minimizes the summed
        squared distance to ``targets`` over proper rotations.
    """
    points = np.asarray(points, dtype=float)
    targets = np.asarray(targets, dtype=float)
    p_mean, q_mean = points.mean(axis=0), targets.mean(axis=0)
    covariance = (points - p_mean).T @ (targets - q_mean)
    u, _, vt = np.linalg.svd(covariance)
    sign = np.sign(np.linalg.det(vt.T @ u.T)) or 1.0
    rotation = vt.T @ np.diag([1.0, 1.0, sign]) @ u.T
    translation = q_mean - rotation @ p_mean
    return points @ rotation.T + translation, rotation, translation
