"""Energy-preserving discrete-gradient schemes ``(x' - x)/h = Pi((x + x')/2) dgrad H(x, x')``."""
import numpy as np

from ..errors import DomainError
from ..poisson import StepMap, hamiltonian_vf
from ..solvers import DEFAULT_SETTINGS, fixed_point

GAUSS_POINTS = 8
_DEGENERATE = 1e-12


def _gauss_legendre_01(n):
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (x + 1.0), 0.5 * w


def mean_value_gradient(grad, x, xn, points=GAUSS_POINTS):
    """``int_0^1 grad H((1 - s) x + s xn) ds`` by Gauss-Legendre quadrature."""
    x = np.asarray(x, dtype=float)
    xn = np.asarray(xn, dtype=float)
    nodes, weights = _gauss_legendre_01(points)
    return sum(w * grad((1.0 - s) * x + s * xn) for s, w in zip(nodes, weights))


def midpoint_gradient(H, grad, x, xn):
    """Gonzalez midpoint discrete gradient; falls back to ``grad H`` at the midpoint
    when ``x`` and ``xn`` (nearly) coincide."""
    x = np.asarray(x, dtype=float)
    xn = np.asarray(xn, dtype=float)
    d = xn - x
    gm = grad(0.5 * (x + xn))
    dd = float(d @ d)
    if dd <= _DEGENERATE**2:
        return gm
    return gm + ((H(xn) - H(x) - gm @ d) / dd) * d


def discrete_gradient_step(sys, kind="mean_value", settings=DEFAULT_SETTINGS):
    if kind == "mean_value":
        dgrad = lambda x, xn: mean_value_gradient(sys.gradient, x, xn)  # noqa: E731
        name = "dgrad-mean"
    elif kind == "midpoint":
        dgrad = lambda x, xn: midpoint_gradient(sys.hamiltonian, sys.gradient, x, xn)  # noqa: E731
        name = "dgrad-mid"
    else:
        raise DomainError(f"unknown discrete gradient kind {kind!r}")

    def step(x, h):
        x = np.asarray(x, dtype=float)

        def g(xn):
            return x + h * (sys.bivector(0.5 * (x + xn)) @ dgrad(x, xn))

        return fixed_point(g, x + h * hamiltonian_vf(sys, x), settings)

    return StepMap(system=sys, stepper=step, name=name, settings=settings)
