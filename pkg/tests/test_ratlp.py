import random
from fractions import Fraction

import pytest

from pcvote import Constraint, DomainError, LinearProgram, LpStatus, lp_feasible, lp_solve
from pcvote.ratlp import EQ, GE, LE
from helpers import bfs_reference_solve, random_lp

F = Fraction


def solve(objective, constraints, bounds=None):
    return lp_solve(LinearProgram(tuple(map(F, objective)), tuple(constraints), bounds))


def c(coeffs, rel, rhs):
    return Constraint(tuple(map(F, coeffs)), rel, F(rhs))


# ---------------------------------------------------------------------------
# pinned solves
# ---------------------------------------------------------------------------

def test_two_variable_optimum():
    # max x + y st x + 2y <= 4, 3x + y <= 6  ->  corner (8/5, 6/5), value 14/5
    out = solve([1, 1], [c([1, 2], LE, 4), c([3, 1], LE, 6)])
    assert out.status is LpStatus.Optimal
    assert out.value == F(14, 5)
    assert out.solution == (F(8, 5), F(6, 5))


def test_equality_constraint():
    out = solve([2, 3], [c([1, 1], EQ, 1)])
    assert out.status is LpStatus.Optimal
    assert out.value == 3 and out.solution == (F(0), F(1))


def test_infeasible():
    out = solve([1], [c([1], GE, 2), c([1], LE, 1)])
    assert out.status is LpStatus.Infeasible
    assert out.solution is None and out.value is None


def test_unbounded():
    out = solve([1, 0], [c([0, 1], LE, 5)])
    assert out.status is LpStatus.Unbounded


def test_degenerate_vertex():
    # three constraints meet at the optimum (0, 2); degeneracy must not confuse anything
    out = solve([0, 1], [c([1, 1], LE, 2), c([-1, 1], LE, 2), c([0, 1], LE, 2)])
    assert out.status is LpStatus.Optimal
    assert out.value == 2


def test_beale_cycling_instance_terminates():
    # the textbook example that cycles under naive most-negative pivoting;
    # the lowest-index rule must grind through to the optimum of 1/20
    cons = [
        c([F(1, 4), -60, F(-1, 25), 9], LE, 0),
        c([F(1, 2), -90, F(-1, 50), 3], LE, 0),
        c([0, 0, 1, 0], LE, 1),
    ]
    out = solve([F(3, 4), -150, F(1, 50), -6], cons)
    assert out.status is LpStatus.Optimal
    assert out.value == F(1, 20)
    lp = LinearProgram((F(3, 4), F(-150), F(1, 50), F(-6)), tuple(cons))
    assert bfs_reference_solve(lp) == (LpStatus.Optimal, F(1, 20))


def test_redundant_rows_are_harmless():
    out = solve([1, 1], [c([1, 1], EQ, 1), c([2, 2], EQ, 2), c([1, 1], LE, 1)])
    assert out.status is LpStatus.Optimal
    assert out.value == 1


def test_negative_rhs_normalization():
    # -x <= -2 is x >= 2
    out = solve([-1], [c([-1], LE, -2)])
    assert out.status is LpStatus.Optimal
    assert out.solution == (F(2),) and out.value == -2


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

def test_bounds_shift_and_cap():
    out = solve(
        [1, 1],
        [c([1, 1], LE, 10)],
        bounds=((F(-3), F(4)), (F(1), F(2))),
    )
    assert out.status is LpStatus.Optimal
    assert out.solution == (F(4), F(2)) and out.value == 6


def test_bounds_negative_region():
    out = solve([-1], [], bounds=((F(-5), F(-2)),))
    assert out.status is LpStatus.Optimal
    assert out.solution == (F(-5),) and out.value == 5


def test_bounds_empty_box():
    out = solve([1], [], bounds=((F(3), F(2)),))
    assert out.status is LpStatus.Infeasible


def test_unbounded_above_with_lower_bound():
    out = solve([1], [], bounds=((F(7), None),))
    assert out.status is LpStatus.Unbounded


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def test_rejects_floats_everywhere():
    with pytest.raises(DomainError):
        Constraint((0.5,), LE, F(1))
    with pytest.raises(DomainError):
        Constraint((F(1),), LE, 0.5)
    with pytest.raises(DomainError):
        LinearProgram((0.5,), (c([1], LE, 1),))


def test_rejects_shape_mismatch():
    with pytest.raises(DomainError):
        LinearProgram((F(1), F(2)), (c([1], LE, 1),))
    with pytest.raises(DomainError):
        LinearProgram((), ())
    with pytest.raises(DomainError):
        Constraint((F(1),), "<", F(1))
    with pytest.raises(DomainError):
        LinearProgram((F(1),), (), bounds=((F(0), None), (F(0), None)))


def test_integers_are_coerced_to_fractions():
    out = solve([1], [c([1], LE, 3)])
    assert isinstance(out.value, F) and out.value == 3


# ---------------------------------------------------------------------------
# feasibility front-end
# ---------------------------------------------------------------------------

def test_lp_feasible_returns_exact_witness():
    cons = [c([1, 1], EQ, 1), c([1, -1], GE, 0)]
    ok, witness = lp_feasible(cons, 2)
    assert ok
    x, y = witness
    assert x + y == 1 and x - y >= 0 and x >= 0 and y >= 0


def test_lp_feasible_detects_empty():
    ok, witness = lp_feasible([c([1], LE, -1)], 1)
    assert not ok and witness is None


# ---------------------------------------------------------------------------
# randomized duel with the basic-solution enumerator
# ---------------------------------------------------------------------------

def test_agrees_with_reference_on_random_programs():
    rng = random.Random(8128)
    statuses = {s: 0 for s in LpStatus}
    for i in range(150):
        lp = random_lp(rng)
        got = lp_solve(lp)
        want_status, want_value = bfs_reference_solve(lp)
        assert got.status is want_status, f"case {i}: {got.status} != {want_status}"
        statuses[got.status] += 1
        if got.status is LpStatus.Optimal:
            assert got.value == want_value, f"case {i}: {got.value} != {want_value}"
            # witness honesty: constraints hold exactly, objective matches
            for con in lp.constraints:
                lhs = sum(a * x for a, x in zip(con.coeffs, got.solution))
                if con.relation == LE:
                    assert lhs <= con.rhs
                elif con.relation == GE:
                    assert lhs >= con.rhs
                else:
                    assert lhs == con.rhs
            assert all(x >= 0 for x in got.solution)
            assert sum(a * x for a, x in zip(lp.objective, got.solution)) == got.value
    assert all(statuses[s] > 0 for s in LpStatus), statuses


def test_deterministic_resolve():
    rng = random.Random(99)
    for _ in range(20):
        lp = random_lp(rng)
        assert lp_solve(lp) == lp_solve(lp)
