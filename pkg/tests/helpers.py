"""Shared test machinery.

The centerpiece is `bfs_reference_solve`, a from-scratch LP solver that
enumerates basic solutions instead of pivoting. It shares nothing with
the simplex implementation under test beyond the `LinearProgram` data
types, so agreement between the two is meaningful evidence.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Optional

from pcvote.model import Profile, profile
from pcvote.ratlp import EQ, GE, LE, Constraint, LinearProgram, LpStatus


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------

def _row_reduce(rows: list[list[Fraction]], rhs: list[Fraction]):
    """RREF in place. Returns the rank, or None when some row reads
    0 = nonzero (the equality system is inconsistent outright)."""
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = next((k for k in range(r, len(rows)) if rows[k][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rhs[r], rhs[piv] = rhs[piv], rhs[r]
        f = rows[r][col]
        rows[r] = [v / f for v in rows[r]]
        rhs[r] = rhs[r] / f
        for k in range(len(rows)):
            if k != r and rows[k][col] != 0:
                g = rows[k][col]
                rows[k] = [a - g * b for a, b in zip(rows[k], rows[r])]
                rhs[k] = rhs[k] - g * rhs[r]
        r += 1
        if r == len(rows):
            break
    for k in range(r, len(rows)):
        if rhs[k] != 0:
            return None
    return r


def _basic_solutions(rows, rhs, ncols, rank):
    """Every basic solution of `rows · x = rhs, x >= 0`: pick `rank`
    columns, solve the square system, keep nonnegative solutions."""
    for cols in itertools.combinations(range(ncols), rank):
        mat = [[rows[i][j] for j in cols] for i in range(rank)]
        vec = list(rhs[:rank])
        singular = False
        for c in range(rank):
            piv = next((k for k in range(c, rank) if mat[k][c] != 0), None)
            if piv is None:
                singular = True
                break
            mat[c], mat[piv] = mat[piv], mat[c]
            vec[c], vec[piv] = vec[piv], vec[c]
            f = mat[c][c]
            mat[c] = [v / f for v in mat[c]]
            vec[c] = vec[c] / f
            for k in range(rank):
                if k != c and mat[k][c] != 0:
                    g = mat[k][c]
                    mat[k] = [a - g * b for a, b in zip(mat[k], mat[c])]
                    vec[k] = vec[k] - g * vec[c]
        if singular or any(v < 0 for v in vec):
            continue
        full = [Fraction(0)] * ncols
        for j, v in zip(cols, vec):
            full[j] = v
        yield full


# ---------------------------------------------------------------------------
# the reference solver
# ---------------------------------------------------------------------------

def bfs_reference_solve(lp: LinearProgram) -> tuple[LpStatus, Optional[Fraction]]:
    """Exact status and optimum by brute force.

    Standardize to `A x = b, x >= 0`, enumerate all basic solutions
    (a nonempty standard-form polyhedron always has one), and take the
    best objective. Unboundedness is decided separately: the maximum
    grows without bound iff some recession direction d (A d = 0, d >= 0,
    normalized to sum 1) has positive objective, and that maximum is
    attained at a vertex of the normalized direction polytope, which is
    enumerated the same way. Only default variable bounds are supported.
    """
    assert lp.bounds is None, "reference solver covers default bounds only"
    n = len(lp.objective)
    slack_count = sum(1 for c in lp.constraints if c.relation != EQ)
    ncols = n + slack_count
    rows, rhs = [], []
    cost = list(lp.objective) + [Fraction(0)] * slack_count
    s = 0
    for c in lp.constraints:
        row = list(c.coeffs) + [Fraction(0)] * slack_count
        if c.relation != EQ:
            row[n + s] = Fraction(1) if c.relation == LE else Fraction(-1)
            s += 1
        rows.append(row)
        rhs.append(c.rhs)

    rank = _row_reduce(rows, rhs)
    if rank is None:
        return LpStatus.Infeasible, None
    rows, rhs = rows[:rank], rhs[:rank]

    best: Optional[Fraction] = None
    for x in _basic_solutions(rows, rhs, ncols, rank):
        val = sum(c * v for c, v in zip(cost, x))
        if best is None or val > best:
            best = val
    if best is None:
        if rank > 0:
            return LpStatus.Infeasible, None
        best = Fraction(0)  # no constraints: the origin

    dir_rows = [list(r) for r in rows] + [[Fraction(1)] * ncols]
    dir_rhs = [Fraction(0)] * rank + [Fraction(1)]
    drank = _row_reduce(dir_rows, dir_rhs)
    if drank is not None:
        dir_rows, dir_rhs = dir_rows[:drank], dir_rhs[:drank]
        for d in _basic_solutions(dir_rows, dir_rhs, ncols, drank):
            if sum(c * v for c, v in zip(cost, d)) > 0:
                return LpStatus.Unbounded, None
    return LpStatus.Optimal, best


# ---------------------------------------------------------------------------
# randomized generators (always seeded by the caller)
# ---------------------------------------------------------------------------

def random_lp(rng: random.Random, max_vars: int = 4, max_constraints: int = 6) -> LinearProgram:
    n = rng.randint(1, max_vars)
    k = rng.randint(1, max_constraints)
    obj = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n))
    cons = []
    for _ in range(k):
        coeffs = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n))
        rel = rng.choice((LE, GE, EQ))
        cons.append(Constraint(coeffs, rel, Fraction(rng.randint(-6, 8), rng.randint(1, 2))))
    return LinearProgram(obj, tuple(cons))


def random_profile(
    rng: random.Random, m_max: int = 4, n_max: int = 7, m_min: int = 2, n_min: int = 1
) -> Profile:
    m = rng.randint(m_min, m_max)
    n = rng.randint(n_min, n_max)
    alts = "abcd"[:m]
    return profile(alts, [rng.sample(alts, m) for _ in range(n)])


def random_lottery(rng: random.Random, alternatives, max_weight: int = 6):
    from pcvote.model import Lottery

    names = list(alternatives.names)
    weights = [rng.randint(0, max_weight) for _ in names]
    if sum(weights) == 0:
        weights[rng.randrange(len(names))] = 1
    total = sum(weights)
    return Lottery(alternatives, tuple(Fraction(w, total) for w in weights))
