"""Two-phase bounded-variable primal simplex.

The driver owns problem preparation (variable shifting, row normalization,
slack and artificial columns) and delegates the pivot loop to the selected
kernel (compiled or pure numpy, see ``backend``). After the final basis is
reached the basic values are re-solved against the original columns with a
dense LU factorization, which removes the roundoff the tableau accumulates
over long pivot sequences.

Anti-cycling: pricing starts with Dantzig's rule and switches permanently to
Bland's rule after a fixed iteration threshold, so stalling cannot cycle
forever while typical problems keep the cheaper pricing.
"""

from __future__ import annotations

import numpy as np

from ..errors import IterationLimitError
from . import backend
from .model import (
    EQ,
    GE,
    INFEASIBLE,
    LE,
    MAXIMIZE,
    OPTIMAL,
    UNBOUNDED,
    LinearProgram,
    Solution,
)

_LOWER = 0
_UPPER = 1
_BASIC = 2

_CODE_OPTIMAL = 0
_CODE_UNBOUNDED = 1
_CODE_ITER_LIMIT = 2

FEASIBILITY_TOL = 1e-7
OPTIMALITY_TOL = 1e-9
_PIVOT_TOL = 1e-9
_BOUND_SNAP = 1e-9
_ZERO_SNAP = 1e-11


def lp_arrays(lp: LinearProgram):
    """Flatten a LinearProgram into dense arrays.

    Returns (c, A, rel, b, lb, ub, names, maximize). The objective vector c
    is in the user's sense; callers negate for maximization themselves.
    """
    names = [v.name for v in lp.variables]
    index = {nm: j for j, nm in enumerate(names)}
    n = len(names)
    m = len(lp.constraints)
    A = np.zeros((m, n))
    b = np.zeros(m)
    rel: list[str] = []
    for i, con in enumerate(lp.constraints):
        for nm, coef in con.coeffs.items():
            A[i, index[nm]] += coef
        b[i] = con.rhs
        rel.append(con.relation)
    c = np.zeros(n)
    for nm, coef in lp.objective.coeffs.items():
        c[index[nm]] += coef
    lb = np.array([v.lower for v in lp.variables], dtype=float)
    ub = np.array([v.upper for v in lp.variables], dtype=float)
    return c, A, rel, b, lb, ub, names, lp.objective.sense == MAXIMIZE


def solve_dense(c, A, rel, b, lb, ub, *, max_iter: int | None = None):
    """Minimize c @ x subject to A x (rel) b and lb <= x <= ub.

    rel is a sequence of "<=", "=", ">=" per row. Returns (status, x, iters)
    where x is None unless status is optimal. Raises IterationLimitError if
    the pivot budget runs out, so a wrong answer is never returned silently.
    """
    c = np.asarray(c, dtype=float)
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    lb = np.asarray(lb, dtype=float)
    ub = np.asarray(ub, dtype=float)
    n_orig = c.size
    m = b.size
    if A.size == 0:
        A = A.reshape(m, n_orig)

    if np.any(lb > ub):
        return INFEASIBLE, None, 0

    # Shift every variable so its lower bound is 0. Finite lower: x = l + y.
    # Upper bound only: x = u - y (mirrored). Free: x = y1 - y2.
    offsets = np.zeros(n_orig)
    col_terms: list[list[tuple[int, float]]] = []
    col_scale: list[tuple[int, float]] = []
    col_upper: list[float] = []
    for j in range(n_orig):
        lo, hi = lb[j], ub[j]
        if np.isfinite(lo):
            col = len(col_scale)
            col_scale.append((j, 1.0))
            col_upper.append(hi - lo)
            offsets[j] = lo
            col_terms.append([(col, 1.0)])
        elif np.isfinite(hi):
            col = len(col_scale)
            col_scale.append((j, -1.0))
            col_upper.append(np.inf)
            offsets[j] = hi
            col_terms.append([(col, -1.0)])
        else:
            cp = len(col_scale)
            col_scale.append((j, 1.0))
            col_upper.append(np.inf)
            cn = len(col_scale)
            col_scale.append((j, -1.0))
            col_upper.append(np.inf)
            col_terms.append([(cp, 1.0), (cn, -1.0)])

    ns = len(col_scale)
    A_s = np.zeros((m, ns))
    c_s = np.zeros(ns)
    for col, (j, scale) in enumerate(col_scale):
        A_s[:, col] = scale * A[:, j]
        c_s[col] = scale * c[j]
    b_s = b - A @ offsets

    # Normalize rows to nonnegative right-hand sides.
    rel_n = list(rel)
    for i in range(m):
        if b_s[i] < 0.0:
            A_s[i, :] = -A_s[i, :]
            b_s[i] = -b_s[i]
            if rel_n[i] == LE:
                rel_n[i] = GE
            elif rel_n[i] == GE:
                rel_n[i] = LE

    n_slack = sum(1 for r in rel_n if r != EQ)
    art_rows = [i for i, r in enumerate(rel_n) if r != LE]
    n_art = len(art_rows)
    ntot = ns + n_slack + n_art

    Afull = np.zeros((m, ntot))
    Afull[:, :ns] = A_s
    upper_full = np.full(ntot, np.inf)
    upper_full[:ns] = col_upper
    basis = np.zeros(m, dtype=np.int64)

    scol = ns
    acol = ns + n_slack
    art_start = acol
    for i in range(m):
        r = rel_n[i]
        if r == LE:
            Afull[i, scol] = 1.0
            basis[i] = scol
            scol += 1
        elif r == GE:
            Afull[i, scol] = -1.0
            scol += 1
            Afull[i, acol] = 1.0
            basis[i] = acol
            acol += 1
        else:
            Afull[i, acol] = 1.0
            basis[i] = acol
            acol += 1

    status = np.zeros(ntot, dtype=np.int8)
    status[basis] = _BASIC
    allow = np.ones(ntot, dtype=np.uint8)
    allow[upper_full <= 0.0] = 0

    T = np.ascontiguousarray(Afull)
    Afull0 = Afull.copy()
    xB = b_s.copy()
    b_norm = b_s.copy()

    if max_iter is None:
        max_iter = 200 * (m + ntot + 10)
    bland_start = 5 * (m + ntot) + 200
    iters = 0

    if n_art:
        c1 = np.zeros(ntot)
        c1[art_start:] = 1.0
        d1 = c1 - c1[basis] @ T
        d1[basis] = 0.0
        code, used = backend.run_phase(
            T, xB, basis, status, d1, upper_full, allow,
            bland_start, max_iter, OPTIMALITY_TOL, _PIVOT_TOL,
        )
        iters += used
        if code == _CODE_ITER_LIMIT:
            raise IterationLimitError(
                f"simplex iteration limit reached ({max_iter} iterations)"
            )
        z1 = float(xB[basis >= art_start].sum())
        if z1 > FEASIBILITY_TOL:
            return INFEASIBLE, None, iters
        # Pin artificials to zero for phase 2: they may stay basic at zero
        # but can never take a positive value again.
        allow[art_start:] = 0
        upper_full[art_start:] = 0.0

    c_full = np.zeros(ntot)
    c_full[:ns] = c_s
    d2 = c_full - c_full[basis] @ T
    d2[basis] = 0.0
    code, used = backend.run_phase(
        T, xB, basis, status, d2, upper_full, allow,
        bland_start, max_iter - iters, OPTIMALITY_TOL, _PIVOT_TOL,
    )
    iters += used
    if code == _CODE_ITER_LIMIT:
        raise IterationLimitError(
            f"simplex iteration limit reached ({max_iter} iterations)"
        )
    if code == _CODE_UNBOUNDED:
        return UNBOUNDED, None, iters

    # Re-solve the final basic values against the original columns; the LU
    # answer replaces the tableau values unless it lands outside bounds.
    if m:
        vals_nb = np.zeros(ntot)
        at_up = status == _UPPER
        if at_up.any():
            vals_nb[at_up] = upper_full[at_up]
        rhs_eff = b_norm - Afull0 @ vals_nb
        try:
            xB_new = np.linalg.solve(Afull0[:, basis], rhs_eff)
        except np.linalg.LinAlgError:
            xB_new = None
        if xB_new is not None and np.all(np.isfinite(xB_new)):
            bu = upper_full[basis]
            ok = np.all(xB_new >= -FEASIBILITY_TOL)
            ok = ok and np.all(
                (xB_new[np.isfinite(bu)] - bu[np.isfinite(bu)]) <= FEASIBILITY_TOL
            )
            if ok:
                xB = xB_new

    vals = np.zeros(ntot)
    at_up = status == _UPPER
    if at_up.any():
        vals[at_up] = upper_full[at_up]
    vals[basis] = xB

    x = offsets.copy()
    for j, terms in enumerate(col_terms):
        for col, scale in terms:
            x[j] += scale * vals[col]

    # Snap values sitting within roundoff of a bound (or of zero) exactly
    # onto it; keeps serialized solutions stable across kernels.
    fin_l = np.isfinite(lb)
    snap = fin_l & (np.abs(x - lb) <= _BOUND_SNAP)
    x[snap] = lb[snap]
    fin_u = np.isfinite(ub)
    snap = fin_u & (np.abs(x - ub) <= _BOUND_SNAP)
    x[snap] = ub[snap]
    snap = (np.abs(x) <= _ZERO_SNAP) & (lb <= 0.0) & (ub >= 0.0)
    x[snap] = 0.0

    return OPTIMAL, x, iters


def solve_continuous(lp: LinearProgram) -> Solution:
    """Solve an LP (no binaries) built as a LinearProgram."""
    c, A, rel, b, lb, ub, names, maximize = lp_arrays(lp)
    c_solve = -c if maximize else c
    status, x, iters = solve_dense(c_solve, A, rel, b, lb, ub)
    if status != OPTIMAL:
        return Solution(status=status, values={}, objective_value=None, iterations=iters)
    values = {nm: float(x[j]) for j, nm in enumerate(names)}
    return Solution(
        status=OPTIMAL,
        values=values,
        objective_value=float(c @ x),
        iterations=iters,
    )
