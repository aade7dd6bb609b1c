"""Closed-shell restricted Hartree-Fock.

Small-molecule STO-3G SCF landscapes still carry multiple stationary
points (stretched N2 and H2O both exhibit a higher-energy solution that
plain iteration or DIIS can fall into, depending on the initial guess).
The driver therefore runs a portfolio of initial guesses and solvers and
returns the lowest converged solution.
"""

from __future__ import annotations

import numpy as np


class SCFError(RuntimeError):
    pass


def _core_guess(hcore, x):
    return hcore


def _gwh_guess(hcore, s):
    """Generalized Wolfsberg-Helmholz guess, K = 1.75."""
    diag = np.diag(hcore)
    return 0.875 * s * (diag[:, None] + diag[None, :])


def _scf_loop(s, x, hcore, eri, nocc, e_nuc, f0, use_diis, damping,
              max_iter=300, tol=1e-12):
    f = f0.copy()
    d_old = None
    e_old = None
    fock_hist: list[np.ndarray] = []
    err_hist: list[np.ndarray] = []
    for _ in range(max_iter):
        fp = x.T @ f @ x
        eps, cp = np.linalg.eigh(fp)
        c = x @ cp
        cocc = c[:, :nocc]
        d = 2.0 * cocc @ cocc.T
        if damping and d_old is not None:
            d = (1.0 - damping) * d + damping * d_old
        d_old = d
        j = np.einsum("pqrs,rs->pq", eri, d)
        k = np.einsum("prqs,rs->pq", eri, d)
        f = hcore + j - 0.5 * k
        e = 0.5 * np.sum(d * (hcore + f)) + e_nuc

        if use_diis:
            err = x.T @ (f @ d @ s - s @ d @ f) @ x
            fock_hist.append(f.copy())
            err_hist.append(err)
            if len(fock_hist) > 8:
                fock_hist.pop(0)
                err_hist.pop(0)
            if len(fock_hist) >= 2:
                m = len(fock_hist)
                b = -np.ones((m + 1, m + 1))
                b[m, m] = 0.0
                for a in range(m):
                    for bb in range(m):
                        b[a, bb] = np.sum(err_hist[a] * err_hist[bb])
                rhs = np.zeros(m + 1)
                rhs[m] = -1.0
                try:
                    coef = np.linalg.solve(b, rhs)[:m]
                    f = sum(ci * fi for ci, fi in zip(coef, fock_hist))
                except np.linalg.LinAlgError:
                    pass

        if e_old is not None and abs(e - e_old) < tol:
            # one clean Fock diagonalization without damping/extrapolation
            f_final = hcore + j - 0.5 * k
            fp = x.T @ f_final @ x
            eps, cp = np.linalg.eigh(fp)
            return float(e), x @ cp, eps
        e_old = e
    return None


def rhf(s, hcore, eri, n_electrons: int, e_nuc: float):
    """Lowest converged SCF solution over a guess/solver portfolio.

    Returns (total energy, MO coefficients, MO energies).
    """
    if n_electrons % 2:
        raise SCFError("restricted HF needs an even electron count")
    nocc = n_electrons // 2
    w, u = np.linalg.eigh(s)
    if w.min() < 1e-8:
        raise SCFError("overlap matrix is near-singular")
    x = u @ np.diag(w**-0.5) @ u.T

    guesses = [hcore, _gwh_guess(hcore, s)]
    variants = [
        dict(use_diis=True, damping=0.0),
        dict(use_diis=False, damping=0.0),
        dict(use_diis=False, damping=0.3),
    ]
    best = None
    for f0 in guesses:
        for opts in variants:
            out = _scf_loop(s, x, hcore, eri, nocc, e_nuc, f0, **opts)
            if out is not None and (best is None or out[0] < best[0] - 1e-10):
                best = out
    if best is None:
        raise SCFError("no SCF variant converged")
    return best
