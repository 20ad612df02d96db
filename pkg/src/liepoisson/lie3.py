"""so(3) / SO(3) kernel in vector form.

Algebra and coalgebra points are 3-vectors; group elements are 3x3 rotation
matrices. Functions broadcast over leading axes, so ``hat`` of an ``(n, 3)``
array returns ``(n, 3, 3)``.

Conventions: ``exp_so3`` maps xi to the rotation ``expm(hat(xi))``,
``dexpinv`` is the inverse of the right-trivialized tangent of ``exp_so3``,
and the coadjoint action is ``Ad_star(R, mu) = R.T @ mu`` (so that
``hat(Ad_star(R, mu)) == R.T @ hat(mu) @ R``).
"""
import numpy as np

from .errors import DomainError

SMALL_ANGLE = 1e-4
SKEW_TOL = 1e-10


def cross(a, b):
    """Cross product over the last axis (cheaper than ``np.cross`` for small arrays)."""
    a1, a2, a3 = a[..., 0], a[..., 1], a[..., 2]
    b1, b2, b3 = b[..., 0], b[..., 1], b[..., 2]
    return np.stack([a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1], axis=-1)


def hat(v):
    """Cross-product matrix: ``hat(v) @ w == cross(v, w)``."""
    v = np.asarray(v, dtype=float)
    x, y, z = v[..., 0], v[..., 1], v[..., 2]
    o = np.zeros_like(x)
    return np.stack(
        [
            np.stack([o, -z, y], axis=-1),
            np.stack([z, o, -x], axis=-1),
            np.stack([-y, x, o], axis=-1),
        ],
        axis=-2,
    )


def vee(M):
    """Inverse of :func:`hat`. Raises DomainError on non-skew input."""
    M = np.asarray(M, dtype=float)
    sym = M + np.swapaxes(M, -1, -2)
    if np.any(np.linalg.norm(sym, axis=(-2, -1)) > SKEW_TOL):
        raise DomainError("vee: matrix is not skew-symmetric")
    return np.stack([M[..., 2, 1], M[..., 0, 2], M[..., 1, 0]], axis=-1)


def _rodrigues_coefficients(theta):
    # a = sin(t)/t, b = (1 - cos(t))/t^2, with Taylor branches near zero
    small = theta < SMALL_ANGLE
    t = np.where(small, 1.0, theta)
    t2 = theta * theta
    a = np.where(small, 1.0 - t2 / 6.0 + t2 * t2 / 120.0, np.sin(t) / t)
    half = np.sin(0.5 * t) / t
    b = np.where(small, 0.5 - t2 / 24.0 + t2 * t2 / 720.0, 2.0 * half * half)
    return a, b


def exp_so3(xi):
    """Rotation matrix ``exp(hat(xi))`` by the Rodrigues formula."""
    xi = np.asarray(xi, dtype=float)
    theta = np.linalg.norm(xi, axis=-1)
    a, b = _rodrigues_coefficients(theta)
    K = hat(xi)
    eye = np.broadcast_to(np.eye(3), K.shape)
    return eye + a[..., None, None] * K + b[..., None, None] * (K @ K)


def _dexpinv_coefficient(theta):
    # c(t) = (1 - (t/2) cot(t/2)) / t^2
    small = theta < SMALL_ANGLE
    t = np.where(small, 1.0, theta)
    t2 = theta * theta
    full = (1.0 - 0.5 * t / np.tan(0.5 * t)) / (t * t)
    series = 1.0 / 12.0 + t2 / 720.0 + t2 * t2 / 30240.0
    return np.where(small, series, full)


def dexpinv(xi, eta):
    """Inverse right-trivialized tangent of the exponential at ``xi`` applied to ``eta``.

    Closed form ``eta - xi x eta / 2 + c(|xi|) xi x (xi x eta)``; valid for
    ``|xi| < 2 pi``.
    """
    xi = np.asarray(xi, dtype=float)
    eta = np.asarray(eta, dtype=float)
    theta = np.linalg.norm(xi, axis=-1)
    if np.any(theta >= 2.0 * np.pi):
        raise DomainError("dexpinv: |xi| must be below 2*pi")
    c = _dexpinv_coefficient(theta)
    xe = cross(xi, eta)
    return eta - 0.5 * xe + c[..., None] * cross(xi, xe)


def dexpinv_dual(xi, mu):
    """Transpose of :func:`dexpinv` acting on a covector.

    The matrix of ``dexpinv(xi, .)`` transposes to the one at ``-xi``.
    """
    return dexpinv(-np.asarray(xi, dtype=float), mu)


def Ad_star(g, mu):  # noqa: N802
    """Coadjoint action ``R.T @ mu``."""
    g = np.asarray(g, dtype=float)
    mu = np.asarray(mu, dtype=float)
    return np.einsum("...ji,...j->...i", g, mu)


def Ad_star_matrix(g, M):  # noqa: N802
    """Coadjoint action on a skew matrix: ``g.T @ M @ g``."""
    g = np.asarray(g, dtype=float)
    return np.swapaxes(g, -1, -2) @ M @ g


def ad_star(xi, mu):
    """Infinitesimal coadjoint action ``mu x xi``.

    Satisfies ``dot(ad_star(xi, mu), eta) == dot(mu, cross(xi, eta))``.
    """
    return cross(np.asarray(mu, dtype=float), np.asarray(xi, dtype=float))


def is_rotation(R, tol=1e-12):
    """True when ``R`` is orthogonal with unit determinant to ``tol``."""
    R = np.asarray(R, dtype=float)
    if R.shape[-2:] != (3, 3) or not np.all(np.isfinite(R)):
        return False
    eye = np.eye(3)
    orth = np.linalg.norm(np.swapaxes(R, -1, -2) @ R - eye, axis=(-2, -1))
    det = np.linalg.det(R)
    return bool(np.all(orth <= tol) and np.all(np.abs(det - 1.0) <= tol))
