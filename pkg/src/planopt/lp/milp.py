"""Branch and bound over binary variables.

Depth-first search on the LP relaxation: branch on the most fractional
binary (ties toward the lowest index), explore the side nearest the
relaxation value first, prune nodes whose bound cannot beat the incumbent.
All node LPs go through the same simplex driver, so an iteration limit
surfaces as an error instead of a silent wrong answer.
"""

from __future__ import annotations

import numpy as np

from .model import INFEASIBLE, OPTIMAL, UNBOUNDED, LinearProgram, Solution
from .simplex import lp_arrays, solve_dense

INTEGRALITY_TOL = 1e-6
_EXACT_TOL = 1e-9
_IMPROVE_TOL = 1e-9


def _child_bounds(lbn, ubn, j, value):
    """Intersect node bounds with a binary fixed to value; None if empty."""
    lo = max(lbn[j], value)
    hi = min(ubn[j], value)
    if lo > hi:
        return None
    lb2 = lbn.copy()
    ub2 = ubn.copy()
    lb2[j] = lo
    ub2[j] = hi
    return lb2, ub2


def solve_binary(lp: LinearProgram) -> Solution:
    c, A, rel, b, lb0, ub0, names, maximize = lp_arrays(lp)
    c_solve = -c if maximize else c
    bin_idx = [j for j, v in enumerate(lp.variables) if v.binary]

    best_obj = np.inf
    best_x = None
    total_iters = 0
    stack: list[tuple[np.ndarray, np.ndarray]] = [(lb0, ub0)]

    while stack:
        lbn, ubn = stack.pop()
        status, x, iters = solve_dense(c_solve, A, rel, b, lbn, ubn)
        total_iters += iters

        if status == INFEASIBLE:
            continue

        if status == UNBOUNDED:
            j = next((k for k in bin_idx if lbn[k] < ubn[k]), None)
            if j is None:
                # All binaries fixed and still unbounded: the mixed-integer
                # problem itself is unbounded.
                return Solution(
                    status=UNBOUNDED, values={}, objective_value=None,
                    iterations=total_iters,
                )
            for val in (0.0, 1.0):
                child = _child_bounds(lbn, ubn, j, val)
                if child is not None:
                    stack.append(child)
            continue

        node_obj = float(c_solve @ x)
        if node_obj >= best_obj - _IMPROVE_TOL:
            continue

        frac_j = -1
        frac_d = INTEGRALITY_TOL
        for j in bin_idx:
            d = abs(x[j] - round(x[j]))
            if d > frac_d:
                frac_d = d
                frac_j = j

        if frac_j < 0:
            xr = x.copy()
            dirty = 0.0
            for j in bin_idx:
                snapped = float(round(xr[j]))
                dirty = max(dirty, abs(xr[j] - snapped))
                xr[j] = snapped
            if dirty > _EXACT_TOL:
                # Binaries are integral only within tolerance; re-solve with
                # them pinned so the reported point satisfies the rows it
                # claims to.
                lbf = lbn.copy()
                ubf = ubn.copy()
                feasible_fix = True
                for j in bin_idx:
                    v = xr[j]
                    lo, hi = max(lbn[j], v), min(ubn[j], v)
                    if lo > hi:
                        feasible_fix = False
                        break
                    lbf[j], ubf[j] = lo, hi
                if feasible_fix:
                    st2, x2, it2 = solve_dense(c_solve, A, rel, b, lbf, ubf)
                    total_iters += it2
                else:
                    st2, x2 = INFEASIBLE, None
                if st2 == OPTIMAL:
                    xr = x2
                    node_obj = float(c_solve @ x2)
                else:
                    # Rounding was not actually feasible; branch on the
                    # least integral binary instead.
                    worst = max(bin_idx, key=lambda j: abs(x[j] - round(x[j])))
                    lo_child = _child_bounds(lbn, ubn, worst, 0.0)
                    hi_child = _child_bounds(lbn, ubn, worst, 1.0)
                    near = x[worst] >= 0.5
                    for child in ((lo_child, hi_child) if near else (hi_child, lo_child)):
                        if child is not None:
                            stack.append(child)
                    continue
            if node_obj < best_obj - _IMPROVE_TOL:
                best_obj = node_obj
                best_x = xr
            continue

        near = x[frac_j] >= 0.5
        first = 1.0 if near else 0.0
        second = 1.0 - first
        for val in (second, first):
            child = _child_bounds(lbn, ubn, frac_j, val)
            if child is not None:
                stack.append(child)

    if best_x is None:
        return Solution(
            status=INFEASIBLE, values={}, objective_value=None,
            iterations=total_iters,
        )
    values = {nm: float(best_x[j]) for j, nm in enumerate(names)}
    return Solution(
        status=OPTIMAL,
        values=values,
        objective_value=float(c @ best_x),
        iterations=total_iters,
    )
