# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled simplex iteration kernel.

Twin of ``_kernel_py.run_phase``. The two must stay pivot-for-pivot
identical: same entering/leaving choices, same floating point operation
order (the extension is built with contraction disabled so multiplies and
subtracts round exactly like the numpy fallback).
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport INFINITY, isfinite, isinf

LOWER = 0
UPPER = 1
BASIC = 2

OPTIMAL = 0
UNBOUNDED = 1
ITERATION_LIMIT = 2

cdef double _TIE_EPS = 1e-10

KERNEL_NAME = "compiled"


def run_phase(
    double[:, ::1] T,
    double[::1] xB,
    cnp.int64_t[::1] basis,
    cnp.int8_t[::1] status,
    double[::1] dcost,
    double[::1] upper,
    cnp.uint8_t[::1] allow,
    long bland_start,
    long max_iter,
    double tol_opt,
    double tol_piv,
):
    """Run simplex iterations in place until optimality, unboundedness or limit."""
    cdef Py_ssize_t m = T.shape[0]
    cdef Py_ssize_t n = T.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] t_buf = np.empty(m, dtype=np.float64)
    cdef double[::1] t_cand = t_buf

    cdef long it
    cdef Py_ssize_t i, j, q, r
    cdef cnp.int64_t leaving, best_basis
    cdef double best, s, d, sigma, alpha, bu, num, t_rows, t_own, t, step
    cdef double piv, f, dq

    for it in range(max_iter):
        # --- entering column ---
        q = -1
        if it < bland_start:
            best = tol_opt
            for j in range(n):
                if not allow[j]:
                    continue
                d = dcost[j]
                if status[j] == 0:
                    s = -d
                elif status[j] == 1:
                    s = d
                else:
                    continue
                if s > best:
                    best = s
                    q = j
        else:
            for j in range(n):
                if not allow[j]:
                    continue
                d = dcost[j]
                if status[j] == 0:
                    if d < -tol_opt:
                        q = j
                        break
                elif status[j] == 1:
                    if d > tol_opt:
                        q = j
                        break
        if q < 0:
            return OPTIMAL, it

        sigma = 1.0 if status[q] == 0 else -1.0

        # --- ratio test, pass 1: smallest step over the basic rows ---
        t_rows = INFINITY
        for i in range(m):
            alpha = sigma * T[i, q]
            if alpha > tol_piv:
                num = xB[i]
                if num < 0.0:
                    num = 0.0
                t = num / alpha
            elif alpha < -tol_piv:
                bu = upper[basis[i]]
                if isinf(bu):
                    t_cand[i] = INFINITY
                    continue
                num = bu - xB[i]
                if num < 0.0:
                    num = 0.0
                t = num / (-alpha)
            else:
                t_cand[i] = INFINITY
                continue
            t_cand[i] = t
            if t < t_rows:
                t_rows = t

        # --- ratio test, pass 2: tie break toward smallest basis index ---
        r = -1
        if isfinite(t_rows):
            best_basis = 0
            for i in range(m):
                if t_cand[i] <= t_rows + _TIE_EPS:
                    if r < 0 or basis[i] < best_basis:
                        r = i
                        best_basis = basis[i]

        t_own = upper[q]

        if r < 0:
            if isinf(t_own):
                return UNBOUNDED, it
            step = sigma * t_own
            if step != 0.0:
                for i in range(m):
                    xB[i] -= step * T[i, q]
            status[q] = 1 if sigma > 0 else 0
            continue

        if t_own < t_rows - _TIE_EPS:
            step = sigma * t_own
            if step != 0.0:
                for i in range(m):
                    xB[i] -= step * T[i, q]
            status[q] = 1 if sigma > 0 else 0
            continue

        t = t_rows if t_rows > 0.0 else 0.0
        step = sigma * t
        if step != 0.0:
            for i in range(m):
                xB[i] -= step * T[i, q]

        leaving = basis[r]
        status[leaving] = 1 if sigma * T[r, q] < 0 else 0
        status[q] = 2
        xB[r] = t if sigma > 0 else upper[q] - t

        # --- pivot elimination ---
        piv = T[r, q]
        for j in range(n):
            T[r, j] = T[r, j] / piv
        for i in range(m):
            if i == r:
                continue
            f = T[i, q]
            if f != 0.0:
                for j in range(n):
                    T[i, j] -= f * T[r, j]
        dq = dcost[q]
        if dq != 0.0:
            for j in range(n):
                dcost[j] -= dq * T[r, j]
        for i in range(m):
            T[i, q] = 0.0
        T[r, q] = 1.0
        dcost[q] = 0.0
        basis[r] = q

    return ITERATION_LIMIT, max_iter
