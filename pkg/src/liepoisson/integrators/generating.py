"""Generating-function integrators from truncated Hamilton-Jacobi series.

Cotangent points of SO(3) are written in the exponential chart around the
identity as ``(x, p)``: ``g = exp(x)`` and ``p`` the chart momentum. Their
right and left trivializations are::

    alpha_R = dexpinv_dual(x, p),   alpha_L = exp(x)^T alpha_R

The identity fiber ``x = 0`` is a graph over ``p``, so near it the evolved
Lagrangian submanifolds are ``x = grad_p W(t, p)`` with
``dW/dt = K(grad_p W, p)`` and ``K(x, p) = H(alpha_L(x, p))``. Expanding
``W = sum_i S_i(p) t^i / i!`` and differentiating in t at t = 0 gives::

    S_0 = 0
    S_1(p) = K(0, p) = H(p)
    S_2(p) = d_x K(0, p) . grad S_1(p),   d_x K(0, p) = (grad H(p) x p) / 2

The step solves ``alpha_R(x(p), p) = mu_k`` for ``p`` and returns
``alpha_L``. On so(3)* the triple product in S_2 vanishes, so the order-2
truncation induces the same map as order 1.
"""
import math

import numpy as np

from ..errors import DomainError, SingularJacobianError
from ..lie3 import Ad_star, dexpinv_dual, exp_so3
from ..poisson import StepMap, jacobian_fd
from ..solvers import SolverSettings, newton_fd

NEWTON_SETTINGS = SolverSettings(tolerance=1e-13)
ORDERS = (0, 1, 2)


class GeneratingSeries:
    """Truncated series ``W^k(t, p)`` for a Hamiltonian with gradient and Hessian."""

    def __init__(self, hamiltonian, gradient, hessian, order):
        if order not in ORDERS:
            raise DomainError(f"truncation order must be one of {ORDERS}")
        self.H = hamiltonian
        self.grad = gradient
        self.hess = hessian
        self.order = order

    def coefficients(self, p):
        """``[S_0(p), ..., S_order(p)]``."""
        a = self.grad(p)
        S = [0.0, self.H(p), 0.5 * float(np.cross(a, p) @ a)]
        return S[: self.order + 1]

    def coefficient_gradients(self, p):
        a = self.grad(p)
        A = self.hess(p)
        # grad of (a x p) . a / 2; the (a x dp) . a term is identically zero
        g2 = 0.5 * (A @ np.cross(p, a) + A @ np.cross(a, p))
        G = [np.zeros(3), a, g2]
        return G[: self.order + 1]

    def value(self, t, p):
        p = np.asarray(p, dtype=float)
        return sum(s * t**i / math.factorial(i) for i, s in enumerate(self.coefficients(p)))

    def chart_point(self, t, p):
        """``x = grad_p W^k(t, p)``."""
        p = np.asarray(p, dtype=float)
        return sum(g * (t**i / math.factorial(i)) for i, g in enumerate(self.coefficient_gradients(p)))

    def momenta(self, t, p):
        """``(alpha_R, alpha_L)`` of the chart point over ``p``."""
        x = self.chart_point(t, p)
        right = dexpinv_dual(x, p)
        return right, Ad_star(exp_so3(x), right)

    def nondegeneracy_matrix(self, t, p, fd_step=1e-6):
        """Jacobian of ``p -> alpha_R``; its regularity is the non-degeneracy condition."""
        return jacobian_fd(lambda q: self.momenta(t, q)[0], np.asarray(p, dtype=float), fd_step)


def hj_generating_step(system, body, order, settings=NEWTON_SETTINGS, check=False):
    """Step map of the order-``order`` generating series for the rigid body.

    With ``check`` the non-degeneracy matrix is tested at each solution.
    """
    series = GeneratingSeries(body.hamiltonian, body.gradient, body.hessian, order)

    def step(mu, h):
        mu = np.asarray(mu, dtype=float)
        if h * np.linalg.norm(body.gradient(mu)) > 1.0:
            raise DomainError("step too large for the exponential chart (h |grad H| > 1)")
        p = newton_fd(lambda q: series.momenta(h, q)[0] - mu, mu, settings)
        if check and np.linalg.cond(series.nondegeneracy_matrix(h, p)) > 1e12:
            raise SingularJacobianError("generating function is degenerate at the solution")
        return series.momenta(h, p)[1]

    return StepMap(system=system, stepper=step, name=f"hj{order}", settings=settings)
