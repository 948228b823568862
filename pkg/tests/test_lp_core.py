"""Solver tests: spec'd examples, random corpus vs. brute-force oracles."""

from __future__ import annotations

import numpy as np
import pytest

from planopt import lp
from planopt.errors import InvalidProgramError, IterationLimitError
from planopt.lp import (
    EQ,
    GE,
    INFEASIBLE,
    LE,
    MAXIMIZE,
    MINIMIZE,
    OPTIMAL,
    UNBOUNDED,
    Constraint,
    LinearProgram,
    Objective,
    Solution,
    Variable,
)
from planopt.lp.simplex import solve_dense

from oracles import lp_oracle, milp_oracle


def _lp(variables, constraints, objective):
    return LinearProgram(
        variables=tuple(variables),
        constraints=tuple(constraints),
        objective=objective,
    )


def _check_solution_invariants(prog: LinearProgram, sol: Solution):
    assert sol.status == OPTIMAL
    tol = 1e-7
    for v in prog.variables:
        val = sol.values[v.name]
        assert val >= v.lower - tol
        assert val <= v.upper + tol
        if v.binary:
            assert min(abs(val), abs(val - 1.0)) <= tol
    for con in prog.constraints:
        lhs = sum(coef * sol.values[nm] for nm, coef in con.coeffs.items())
        if con.relation == LE:
            assert lhs <= con.rhs + tol
        elif con.relation == GE:
            assert lhs >= con.rhs - tol
        else:
            assert abs(lhs - con.rhs) <= tol


# --- validate ---


def test_validate_well_formed():
    prog = _lp([Variable("x", 0.0, 5.0)], [], Objective({"x": 1.0}))
    assert lp.validate(prog) == []


def test_validate_unknown_variable():
    prog = _lp(
        [Variable("x", 0.0, 5.0)],
        [Constraint({"y": 1.0}, LE, 1.0)],
        Objective({"x": 1.0}),
    )
    violations = lp.validate(prog)
    assert violations == ["constraint 0 references unknown variable y"]


def test_validate_reversed_bounds():
    prog = _lp([Variable("x", 3.0, 1.0)], [], Objective({"x": 1.0}))
    violations = lp.validate(prog)
    assert len(violations) == 1
    assert "x" in violations[0]


def test_validate_binary_bounds():
    prog = _lp([Variable("b", 0.0, 2.0, binary=True)], [], Objective({"b": 1.0}))
    assert len(lp.validate(prog)) == 1


def test_solve_rejects_invalid():
    prog = _lp(
        [Variable("x")],
        [Constraint({"y": 1.0}, LE, 1.0)],
        Objective({"x": 1.0}),
    )
    with pytest.raises(InvalidProgramError):
        lp.solve(prog)


# --- solve: pinned examples ---


def test_single_active_bound():
    prog = _lp(
        [Variable("x", 0.0, 10.0)],
        [Constraint({"x": 1.0}, GE, 3.0)],
        Objective({"x": 1.0}, MINIMIZE),
    )
    sol = lp.solve(prog)
    assert sol.status == OPTIMAL
    assert sol.values["x"] == pytest.approx(3.0, abs=1e-9)
    assert sol.objective_value == pytest.approx(3.0, abs=1e-9)


def test_tight_constraint_maximize():
    prog = _lp(
        [Variable("x", 0.0, 3.0), Variable("y", 0.0, 3.0)],
        [Constraint({"x": 1.0, "y": 1.0}, LE, 4.0)],
        Objective({"x": 1.0, "y": 1.0}, MAXIMIZE),
    )
    sol = lp.solve(prog)
    assert sol.status == OPTIMAL
    assert sol.objective_value == pytest.approx(4.0, abs=1e-9)
    _check_solution_invariants(prog, sol)


def test_contradictory_constraints_infeasible():
    prog = _lp(
        [Variable("x", 0.0, 10.0)],
        [Constraint({"x": 1.0}, GE, 2.0), Constraint({"x": 1.0}, LE, 1.0)],
        Objective({"x": 1.0}, MINIMIZE),
    )
    sol = lp.solve(prog)
    assert sol.status == INFEASIBLE
    assert sol.values == {}
    assert sol.objective_value is None


def test_unbounded_reported():
    prog = _lp(
        [Variable("x", 0.0, np.inf)],
        [],
        Objective({"x": 1.0}, MAXIMIZE),
    )
    sol = lp.solve(prog)
    assert sol.status == UNBOUNDED


def test_equality_with_free_variable():
    # x free, y in [-4, -1], x + y = 0, minimize x: x = -y so x in [1, 4].
    prog = _lp(
        [Variable("x", -np.inf, np.inf), Variable("y", -4.0, -1.0)],
        [Constraint({"x": 1.0, "y": 1.0}, EQ, 0.0)],
        Objective({"x": 1.0}, MINIMIZE),
    )
    sol = lp.solve(prog)
    assert sol.status == OPTIMAL
    assert sol.values["x"] == pytest.approx(1.0, abs=1e-9)
    assert sol.values["y"] == pytest.approx(-1.0, abs=1e-9)


def test_upper_only_variable():
    # x in (-inf, 2], maximize x.
    prog = _lp(
        [Variable("x", -np.inf, 2.0)],
        [],
        Objective({"x": 1.0}, MAXIMIZE),
    )
    sol = lp.solve(prog)
    assert sol.status == OPTIMAL
    assert sol.values["x"] == pytest.approx(2.0)


def test_bound_flips_to_upper():
    prog = _lp(
        [Variable("x", 0.0, 1.0), Variable("y", 0.0, 1.0)],
        [Constraint({"x": 1.0, "y": 1.0}, LE, 5.0)],
        Objective({"x": 1.0, "y": 1.0}, MAXIMIZE),
    )
    sol = lp.solve(prog)
    assert sol.status == OPTIMAL
    assert sol.objective_value == pytest.approx(2.0)


def test_negative_box():
    prog = _lp(
        [Variable("x", -5.0, -2.0)],
        [],
        Objective({"x": 1.0}, MINIMIZE),
    )
    sol = lp.solve(prog)
    assert sol.status == OPTIMAL
    assert sol.values["x"] == pytest.approx(-5.0)


def test_iteration_limit_is_distinct_error():
    c = np.array([1.0, 1.0])
    A = np.array([[1.0, 1.0], [1.0, -1.0]])
    with pytest.raises(IterationLimitError):
        solve_dense(c, A, [">=", ">="], np.array([2.0, 0.0]),
                    np.array([0.0, 0.0]), np.array([10.0, 10.0]), max_iter=1)


# --- random corpus vs. vertex-enumeration oracle ---


def _random_lp_arrays(rng):
    n = int(rng.integers(1, 6))
    m = int(rng.integers(0, 9))
    A = rng.integers(-5, 6, size=(m, n)).astype(float)
    rel = [("<=" if rng.random() < 0.5 else ">=") for _ in range(m)]
    b = rng.integers(-10, 11, size=m).astype(float)
    lb = rng.integers(-5, 1, size=n).astype(float)
    ub = lb + rng.integers(0, 9, size=n).astype(float)
    c = rng.integers(-5, 6, size=n).astype(float)
    return c, A, rel, b, lb, ub


def _to_program(c, A, rel, b, lb, ub, sense, binary_idx=()):
    names = [f"x{j}" for j in range(c.size)]
    variables = [
        Variable(names[j], float(lb[j]), float(ub[j]), binary=j in binary_idx)
        for j in range(c.size)
    ]
    constraints = [
        Constraint(
            {names[j]: float(A[i, j]) for j in range(c.size) if A[i, j] != 0.0},
            rel[i],
            float(b[i]),
        )
        for i in range(len(rel))
    ]
    objective = Objective(
        {names[j]: float(c[j]) for j in range(c.size) if c[j] != 0.0}, sense
    )
    return _lp(variables, constraints, objective)


def test_random_lps_match_oracle():
    rng = np.random.default_rng(20260819)
    checked_optimal = 0
    for trial in range(220):
        c, A, rel, b, lb, ub = _random_lp_arrays(rng)
        sense = MINIMIZE if rng.random() < 0.5 else MAXIMIZE
        c_min = c if sense == MINIMIZE else -c
        ostatus, oobj, _ = lp_oracle(c_min, A, rel, b, lb, ub)
        prog = _to_program(c, A, rel, b, lb, ub, sense)
        sol = lp.solve(prog)
        if ostatus == "infeasible":
            assert sol.status == INFEASIBLE, f"trial {trial}"
        else:
            assert sol.status == OPTIMAL, f"trial {trial}"
            got = sol.objective_value if sense == MINIMIZE else -sol.objective_value
            assert got == pytest.approx(oobj, abs=1e-6), f"trial {trial}"
            _check_solution_invariants(prog, sol)
            checked_optimal += 1
    assert checked_optimal >= 60


def test_degenerate_lps_terminate_and_match_oracle():
    # Many tight rows through a shared point force degenerate pivots.
    rng = np.random.default_rng(77)
    for trial in range(60):
        n = int(rng.integers(2, 5))
        m = int(rng.integers(4, 9))
        A = rng.integers(-3, 4, size=(m, n)).astype(float)
        rel = ["<="] * m
        b = np.zeros(m)
        lb = np.full(n, -4.0)
        ub = np.full(n, 4.0)
        c = rng.integers(-5, 6, size=n).astype(float)
        ostatus, oobj, _ = lp_oracle(c, A, rel, b, lb, ub)
        prog = _to_program(c, A, rel, b, lb, ub, MINIMIZE)
        sol = lp.solve(prog)
        assert ostatus == "optimal"
        assert sol.status == OPTIMAL, f"trial {trial}"
        assert sol.objective_value == pytest.approx(oobj, abs=1e-6), f"trial {trial}"
        assert sol.iterations < 5000


def test_cycling_prone_textbook_lp():
    # Beale's example: stalls under naive pricing; must terminate here.
    c = np.array([-0.75, 150.0, -0.02, 6.0])
    A = np.array(
        [
            [0.25, -60.0, -0.04, 9.0],
            [0.5, -90.0, -0.02, 3.0],
            [0.0, 0.0, 1.0, 0.0],
        ]
    )
    rel = ["<=", "<=", "<="]
    b = np.array([0.0, 0.0, 1.0])
    lb = np.zeros(4)
    ub = np.full(4, 1e4)
    ostatus, oobj, _ = lp_oracle(c, A, rel, b, lb, ub)
    prog = _to_program(c, A, rel, b, lb, ub, MINIMIZE)
    sol = lp.solve(prog)
    assert ostatus == "optimal"
    assert sol.status == OPTIMAL
    assert sol.objective_value == pytest.approx(oobj, abs=1e-9)
    assert sol.iterations < 1000


# --- MILP vs. binary enumeration oracle ---


def test_random_milps_match_enumeration():
    rng = np.random.default_rng(4242)
    solved = 0
    for trial in range(60):
        n_bin = int(rng.integers(1, 7))
        n_cont = int(rng.integers(0, 4))
        n = n_bin + n_cont
        m = int(rng.integers(1, 7))
        A = rng.integers(-5, 6, size=(m, n)).astype(float)
        rel = [("<=" if rng.random() < 0.6 else ">=") for _ in range(m)]
        b = rng.integers(-8, 13, size=m).astype(float)
        lb = np.zeros(n)
        ub = np.ones(n)
        ub[n_bin:] = rng.integers(1, 7, size=n_cont).astype(float)
        c = rng.integers(-5, 6, size=n).astype(float)
        sense = MINIMIZE if rng.random() < 0.5 else MAXIMIZE
        c_min = c if sense == MINIMIZE else -c
        ostatus, oobj, _ = milp_oracle(c_min, A, rel, b, lb, ub, range(n_bin))
        prog = _to_program(c, A, rel, b, lb, ub, sense, binary_idx=set(range(n_bin)))
        sol = lp.solve(prog)
        if ostatus == "infeasible":
            assert sol.status == INFEASIBLE, f"trial {trial}"
        else:
            assert sol.status == OPTIMAL, f"trial {trial}"
            got = sol.objective_value if sense == MINIMIZE else -sol.objective_value
            assert got == pytest.approx(oobj, abs=1e-6), f"trial {trial}"
            for j in range(n_bin):
                v = sol.values[f"x{j}"]
                assert min(abs(v), abs(v - 1.0)) <= 1e-7
            _check_solution_invariants(prog, sol)
            solved += 1
    assert solved >= 20


def test_milp_prefers_better_integer_point():
    # Relaxation optimum is fractional; the integer optimum differs.
    prog = _lp(
        [Variable("b0", 0.0, 1.0, binary=True), Variable("b1", 0.0, 1.0, binary=True)],
        [Constraint({"b0": 2.0, "b1": 2.0}, LE, 3.0)],
        Objective({"b0": 3.0, "b1": 2.0}, MAXIMIZE),
    )
    sol = lp.solve(prog)
    assert sol.status == OPTIMAL
    assert sol.objective_value == pytest.approx(3.0)
    assert sol.values["b0"] == pytest.approx(1.0)
    assert sol.values["b1"] == pytest.approx(0.0)


# --- kernel parity ---


def test_kernel_parity_on_random_corpus(monkeypatch):
    speedups = pytest.importorskip("planopt.lp._speedups")
    from planopt.lp import _kernel_py, backend

    rng = np.random.default_rng(99)
    cases = []
    for _ in range(40):
        cases.append(_random_lp_arrays(rng))

    results = {}
    for name, kernel in (("compiled", speedups), ("pure", _kernel_py)):
        monkeypatch.setattr(backend, "run_phase", kernel.run_phase)
        outs = []
        for c, A, rel, b, lb, ub in cases:
            status, x, iters = solve_dense(c, A, rel, b, lb, ub)
            outs.append((status, None if x is None else x.copy(), iters))
        results[name] = outs

    for (s1, x1, i1), (s2, x2, i2) in zip(results["compiled"], results["pure"]):
        assert s1 == s2
        assert i1 == i2
        if x1 is None:
            assert x2 is None
        else:
            assert np.array_equal(x1, x2)


def test_dump_round_readable():
    prog = _lp(
        [Variable("x", 0.0, 3.0), Variable("y", 0.0, np.inf)],
        [Constraint({"x": 1.0, "y": -2.0}, LE, 4.0, name="cap")],
        Objective({"x": 1.0}, MINIMIZE),
    )
    text = lp.dump(prog)
    assert "minimize" in text
    assert "cap" in text
    assert "<=" in text
