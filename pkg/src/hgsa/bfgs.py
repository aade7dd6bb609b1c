"""Dense BFGS with an Armijo/curvature line search.

Inverse-Hessian update with the standard rank-two formula; the line
search backtracks until the Armijo condition holds, checks the Wolfe
curvature condition with the gradient at the accepted point (which is
then reused for the next iteration), and skips the Hessian update when
the curvature of the accepted pair is non-positive.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

C1 = 1e-4
C2 = 0.9
GTOL = 1e-6
FTOL_REL = 1e-10


@dataclass
class OptimizationTrace:
    energies: list[float] = field(default_factory=list)
    grad_norms: list[float] = field(default_factory=list)
    status: str = "running"
    wall_time: float = 0.0

    @property
    def n_iter(self) -> int:
        return len(self.energies)


@dataclass
class BfgsResult:
    x: np.ndarray
    fun: float
    trace: OptimizationTrace


def minimize_bfgs(
    f: Callable[[np.ndarray], float],
    grad: Callable[[np.ndarray], np.ndarray],
    x0: np.ndarray,
    max_iter: int = 200,
    gtol: float = GTOL,
    ftol_rel: float = FTOL_REL,
    c1: float = C1,
    c2: float = C2,
    callback: Callable[[int, float, float], None] | None = None,
) -> BfgsResult:
    start = time.perf_counter()
    x = np.asarray(x0, dtype=float).copy()
    trace = OptimizationTrace()
    n = x.size

    fx = f(x)
    if n == 0:
        trace.energies.append(fx)
        trace.grad_norms.append(0.0)
        trace.status = "gtol"
        trace.wall_time = time.perf_counter() - start
        return BfgsResult(x=x, fun=fx, trace=trace)

    g = grad(x)
    h_inv = np.eye(n)
    for it in range(max_iter):
        gnorm = float(np.max(np.abs(g)))
        trace.energies.append(fx)
        trace.grad_norms.append(gnorm)
        if callback is not None:
            callback(it, fx, gnorm)
        if gnorm < gtol:
            trace.status = "gtol"
            break

        p = -h_inv @ g
        dphi0 = float(g @ p)
        if dphi0 >= 0:
            # numerical loss of descent: restart from steepest descent
            h_inv = np.eye(n)
            p = -g
            dphi0 = float(g @ p)
            if dphi0 == 0.0:
                trace.status = "gtol"
                break

        alpha = 1.0
        fx_new = None
        for _ in range(40):
            cand = f(x + alpha * p)
            if cand <= fx + c1 * alpha * dphi0:
                fx_new = cand
                break
            alpha *= 0.5
        if fx_new is None:
            trace.status = "line_search_failed"
            break

        x_new = x + alpha * p
        g_new = grad(x_new)
        # one expansion attempt when the curvature condition fails at the
        # first trial step
        if alpha == 1.0 and float(g_new @ p) < c2 * dphi0:
            cand = f(x + 2.0 * p)
            if cand <= fx + 2.0 * c1 * dphi0:
                cand_g = grad(x + 2.0 * p)
                if cand <= fx_new:
                    alpha, fx_new = 2.0, cand
                    x_new = x + alpha * p
                    g_new = cand_g

        s = x_new - x
        y = g_new - g
        sy = float(s @ y)
        rel_change = abs(fx_new - fx) / max(1.0, abs(fx), abs(fx_new))

        x, fx, g = x_new, fx_new, g_new
        if rel_change < ftol_rel:
            if trace.n_iter < max_iter:
                trace.energies.append(fx)
                trace.grad_norms.append(float(np.max(np.abs(g))))
            trace.status = "ftol"
            break

        if sy > 1e-12:
            rho = 1.0 / sy
            sy_outer = np.outer(s, y)
            h_inv = (
                h_inv
                - rho * (sy_outer @ h_inv + h_inv @ sy_outer.T)
                + rho * rho * float(y @ h_inv @ y) * np.outer(s, s)
                + rho * np.outer(s, s)
            )
    else:
        trace.status = "max_iter"
    if trace.status == "running":
        trace.status = "max_iter"

    trace.wall_time = time.perf_counter() - start
    return BfgsResult(x=x, fun=fx, trace=trace)
