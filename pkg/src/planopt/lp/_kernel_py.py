"""Pure-Python (numpy) simplex iteration kernel.

Fallback twin of the compiled kernel in ``_speedups.pyx``. Both implement the
same deterministic iteration semantics; the parity tests assert they produce
identical pivot sequences. Keep any behavioural change mirrored in the .pyx.

State encoding shared by both kernels:
  status[j]: 0 = nonbasic at lower bound (always 0), 1 = nonbasic at upper
             bound, 2 = basic
  basis[i]:  column index of the basic variable of row i
  T:         current tableau (basis-inverse times the constraint matrix)
  xB:        values of the basic variables, aligned with rows
  dcost:     reduced costs for the current phase's objective
  upper:     variable upper bounds in the shifted space (lower bounds are 0)
  allow:     1 where the column may enter the basis

Return codes: 0 optimal, 1 unbounded, 2 iteration limit reached.
"""

from __future__ import annotations

import numpy as np

LOWER = 0
UPPER = 1
BASIC = 2

OPTIMAL = 0
UNBOUNDED = 1
ITERATION_LIMIT = 2

_TIE_EPS = 1e-10

KERNEL_NAME = "pure"


def run_phase(
    T: np.ndarray,
    xB: np.ndarray,
    basis: np.ndarray,
    status: np.ndarray,
    dcost: np.ndarray,
    upper: np.ndarray,
    allow: np.ndarray,
    bland_start: int,
    max_iter: int,
    tol_opt: float,
    tol_piv: float,
) -> tuple[int, int]:
    """Run simplex iterations in place until optimality, unboundedness or limit."""
    m = T.shape[0]
    allow_b = allow.astype(bool)

    for it in range(max_iter):
        at_lower = status == LOWER
        at_upper = status == UPPER
        if it < bland_start:
            # Dantzig: most improving reduced cost, first index on ties.
            score = np.where(
                allow_b & at_lower, -dcost, np.where(allow_b & at_upper, dcost, -np.inf)
            )
            q = int(np.argmax(score)) if score.size else -1
            if q < 0 or score[q] <= tol_opt:
                return OPTIMAL, it
        else:
            # Bland: lowest eligible index; guarantees termination.
            eligible = allow_b & (
                (at_lower & (dcost < -tol_opt)) | (at_upper & (dcost > tol_opt))
            )
            idx = np.flatnonzero(eligible)
            if idx.size == 0:
                return OPTIMAL, it
            q = int(idx[0])

        sigma = 1.0 if status[q] == LOWER else -1.0
        col = T[:, q].copy()

        # Ratio test: smallest step before a basic variable hits one of its
        # bounds; ties resolved toward the smallest basic variable index.
        if m:
            alpha = sigma * col
            bu = upper[basis]
            dec = alpha > tol_piv
            inc = (alpha < -tol_piv) & np.isfinite(bu)
            t_cand = np.full(m, np.inf)
            if dec.any():
                t_cand[dec] = np.maximum(xB[dec], 0.0) / alpha[dec]
            if inc.any():
                t_cand[inc] = np.maximum(bu[inc] - xB[inc], 0.0) / (-alpha[inc])
            t_rows = float(t_cand.min())
        else:
            t_rows = np.inf

        if np.isinf(t_rows):
            r = -1
        else:
            tie = np.flatnonzero(t_cand <= t_rows + _TIE_EPS)
            r = int(tie[np.argmin(basis[tie])])

        t_own = upper[q]

        if r < 0:
            if np.isinf(t_own):
                return UNBOUNDED, it
            # Bound flip: the entering variable crosses to its other bound.
            step = sigma * t_own
            if step != 0.0:
                xB -= step * col
            status[q] = UPPER if sigma > 0 else LOWER
            continue

        if t_own < t_rows - _TIE_EPS:
            step = sigma * t_own
            if step != 0.0:
                xB -= step * col
            status[q] = UPPER if sigma > 0 else LOWER
            continue

        t = t_rows if t_rows > 0.0 else 0.0
        step = sigma * t
        if step != 0.0:
            xB -= step * col

        leaving = int(basis[r])
        status[leaving] = UPPER if sigma * col[r] < 0 else LOWER
        status[q] = BASIC
        xB[r] = t if sigma > 0 else upper[q] - t

        piv = T[r, q]
        T[r, :] /= piv
        elim = T[:, q].copy()
        elim[r] = 0.0
        T -= np.outer(elim, T[r, :])
        dq = dcost[q]
        if dq != 0.0:
            dcost -= dq * T[r, :]
        T[:, q] = 0.0
        T[r, q] = 1.0
        dcost[q] = 0.0
        basis[r] = q

    return ITERATION_LIMIT, max_iter
