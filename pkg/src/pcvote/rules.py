"""Probabilistic voting rules.

* rd                — uniform random dictatorship (top-count shares);
* condorcet_uniform — degenerate on the Condorcet winner, else uniform;
* f1                — a three-alternative rule reading (weak) Condorcet
                      winners off the margin matrix;
* f2                — a three-alternative rule redistributing top-count
                      mass away from the strongest rival of the unique
                      never-bottom alternative;
* ml                — maximal lotteries: an exact optimal mixed strategy
                      of the symmetric margin game, canonicalized to the
                      leximin point of the optimal set so that the output
                      is unique, anonymous, and neutral.

All rules return exact `Lottery` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .model import (
    ApplicabilityError,
    DomainError,
    Lottery,
    MarginMatrix,
    Profile,
    condorcet_winner,
    margin_matrix,
    never_bottom_set,
    top_count,
    weak_condorcet_winners,
)
from .ratlp import EQ, GE, LE, Constraint, LinearProgram, LpStatus, lp_solve


@dataclass(frozen=True)
class SocialDecisionScheme:
    """A named rule mapping profiles to lotteries."""

    name: str
    evaluate: Callable[[Profile], Lottery]
    applicability: Optional[Callable[[Profile], bool]] = None

    def applicable(self, profile: Profile) -> bool:
        return self.applicability is None or self.applicability(profile)

    def __call__(self, profile: Profile) -> Lottery:
        if not self.applicable(profile):
            raise ApplicabilityError(
                f"rule {self.name!r} is not defined for this profile "
                f"(m={profile.m}, n={profile.n})"
            )
        return self.evaluate(profile)


def rd(profile: Profile) -> Lottery:
    """Uniform random dictatorship: probability = share of first places."""
    n = profile.n
    return Lottery(
        profile.alternatives,
        tuple(Fraction(top_count(profile, x), n) for x in profile.alternatives),
    )


def condorcet_uniform(profile: Profile) -> Lottery:
    """Degenerate on the Condorcet winner when there is one, else uniform."""
    winner = condorcet_winner(profile)
    if winner is not None:
        return Lottery.degenerate(profile.alternatives, winner)
    return Lottery.uniform(profile.alternatives)


def _require_three(profile: Profile, rule_name: str) -> None:
    if profile.m != 3:
        raise ApplicabilityError(
            f"rule {rule_name!r} is defined only for exactly three alternatives, got m={profile.m}"
        )


def f1(profile: Profile) -> Lottery:
    """Three-alternative rule driven by (weak) Condorcet winners.

    Condorcet winner x: degenerate on x. No Condorcet winner: a unique
    unbeaten alternative x gets 3/5 with 1/5 each for the rest; exactly
    two unbeaten alternatives split 1/2 each; otherwise uniform.
    """
    _require_three(profile, "f1")
    alts = profile.alternatives
    winner = condorcet_winner(profile)
    if winner is not None:
        return Lottery.degenerate(alts, winner)
    weak = weak_condorcet_winners(profile)
    if len(weak) == 2:
        return Lottery.uniform(alts, over=weak)
    if len(weak) == 1:
        (x,) = weak
        return Lottery(
            alts,
            tuple(Fraction(3, 5) if y == x else Fraction(1, 5) for y in alts),
        )
    return Lottery.uniform(alts)


def f2(profile: Profile) -> Lottery:
    """Three-alternative rule: random dictatorship unless exactly one
    alternative is never ranked last, in which case that alternative
    absorbs the top-count share of its weakest rival(s)."""
    _require_three(profile, "f2")
    alts = profile.alternatives
    never_bottom = never_bottom_set(profile)
    if len(never_bottom) != 1:
        return rd(profile)
    (x,) = never_bottom
    rivals = [y for y in alts if y != x]
    least = min(top_count(profile, y) for y in rivals)
    absorbed = [y for y in rivals if top_count(profile, y) == least]
    n = profile.n
    probs = []
    for y in alts:
        if y == x:
            probs.append(Fraction(top_count(profile, x) + sum(top_count(profile, z) for z in absorbed), n))
        elif y in absorbed:
            probs.append(Fraction(0))
        else:
            probs.append(Fraction(top_count(profile, y), n))
    return Lottery(alts, tuple(probs))


# ---------------------------------------------------------------------------
# maximal lotteries
# ---------------------------------------------------------------------------

def _margin_rows(margins: MarginMatrix) -> list[Constraint]:
    """The optimal-strategy polytope: for every alternative x, the margin-
    weighted mass (G p)_x must be <= 0, and p must live on the simplex."""
    m = len(margins.alternatives)
    rows = [
        Constraint(tuple(Fraction(margins.rows[i][j]) for j in range(m)), LE, Fraction(0))
        for i in range(m)
    ]
    rows.append(Constraint(tuple(Fraction(1) for _ in range(m)), EQ, Fraction(1)))
    return rows


def is_maximal_lottery(profile: Profile, lottery: Lottery) -> bool:
    """Does the lottery beat-or-tie every alternative in expectation?"""
    if lottery.alternatives != profile.alternatives:
        raise DomainError("lottery must range over the profile's alternatives")
    g = margin_matrix(profile)
    names = profile.alternatives.names
    for i, x in enumerate(names):
        against_x = sum(
            Fraction(g.rows[i][j]) * lottery.probs[j] for j in range(len(names))
        )
        if against_x > 0:
            return False
    return True


def _unit(m: int, j: int, value: Fraction = Fraction(1)) -> tuple[Fraction, ...]:
    return tuple(value if k == j else Fraction(0) for k in range(m))


def _ml_max_min(
    margins: MarginMatrix, fixed: dict[int, Fraction], free: list[int]
) -> Fraction:
    """Maximize the smallest free coordinate over the optimal set, with the
    already-settled coordinates pinned."""
    m = len(margins.alternatives)
    # variables: p_0..p_{m-1}, then t
    rows: list[Constraint] = []
    for c in _margin_rows(margins):
        rows.append(Constraint(c.coeffs + (Fraction(0),), c.relation, c.rhs))
    for j, value in fixed.items():
        rows.append(Constraint(_unit(m, j) + (Fraction(0),), EQ, value))
    for j in free:
        coeffs = list(_unit(m, j)) + [Fraction(-1)]
        rows.append(Constraint(tuple(coeffs), GE, Fraction(0)))
    objective = tuple([Fraction(0)] * m + [Fraction(1)])
    outcome = lp_solve(LinearProgram(objective, tuple(rows)))
    assert outcome.status is LpStatus.Optimal and outcome.value is not None
    return outcome.value


def _ml_coordinate_max(
    margins: MarginMatrix,
    fixed: dict[int, Fraction],
    free: list[int],
    floor: Fraction,
    coord: int,
) -> Fraction:
    """Maximize one free coordinate over the current face of the optimal set."""
    m = len(margins.alternatives)
    rows = list(_margin_rows(margins))
    for j, value in fixed.items():
        rows.append(Constraint(_unit(m, j), EQ, value))
    for j in free:
        rows.append(Constraint(_unit(m, j), GE, floor))
    outcome = lp_solve(LinearProgram(_unit(m, coord), tuple(rows)))
    assert outcome.status is LpStatus.Optimal and outcome.value is not None
    return outcome.value


def ml(profile: Profile) -> Lottery:
    """The leximin point of the optimal-strategy set of the margin game.

    Iterated max-min: raise the smallest coordinate as far as the optimal
    set allows, pin every coordinate that cannot go higher, repeat on the
    rest. The leximin point of a non-empty convex polytope is unique, so
    the output is deterministic and inherits anonymity and neutrality
    from the margin game itself. In particular the result is degenerate
    exactly when the optimal set is a single degenerate strategy (e.g.
    with a Condorcet winner), and ties inside the optimal set resolve
    toward the most balanced strategy.
    """
    margins = margin_matrix(profile)
    m = profile.m
    fixed: dict[int, Fraction] = {}
    free = list(range(m))
    while free:
        floor = _ml_max_min(margins, fixed, free)
        stuck = [
            j for j in free
            if _ml_coordinate_max(margins, fixed, free, floor, j) == floor
        ]
        assert stuck, "every max-min round must pin at least one coordinate"
        for j in stuck:
            fixed[j] = floor
        free = [j for j in free if j not in stuck]
    lottery = Lottery(profile.alternatives, tuple(fixed[j] for j in range(m)))
    assert is_maximal_lottery(profile, lottery)
    return lottery


def maximal_lottery_is_unique(profile: Profile) -> bool:
    """Is the optimal set of the margin game a single point?"""
    margins = margin_matrix(profile)
    m = profile.m
    rows = tuple(_margin_rows(margins))
    for j in range(m):
        hi = lp_solve(LinearProgram(_unit(m, j), rows))
        lo = lp_solve(LinearProgram(_unit(m, j, Fraction(-1)), rows))
        assert hi.status is LpStatus.Optimal and lo.status is LpStatus.Optimal
        assert hi.value is not None and lo.value is not None
        if hi.value != -lo.value:
            return False
    return True


def solve_margin_game(margins: MarginMatrix) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Value and one optimal mixed strategy of the margin game, solved as a
    plain LP (maximize the worst-case row payoff). Skew-symmetry is *not*
    assumed; for genuine margin matrices the value comes out exactly 0."""
    m = len(margins.alternatives)
    # variables: p_0..p_{m-1}, v+ and v- (value = v+ - v-)
    rows: list[Constraint] = []
    for j in range(m):
        # payoff of playing p against pure column j, at least the value
        coeffs = [Fraction(margins.rows[i][j]) for i in range(m)]
        rows.append(Constraint(tuple(coeffs + [Fraction(-1), Fraction(1)]), GE, Fraction(0)))
    rows.append(Constraint(tuple([Fraction(1)] * m + [Fraction(0), Fraction(0)]), EQ, Fraction(1)))
    objective = tuple([Fraction(0)] * m + [Fraction(1), Fraction(-1)])
    outcome = lp_solve(LinearProgram(objective, tuple(rows)))
    assert outcome.status is LpStatus.Optimal
    assert outcome.solution is not None and outcome.value is not None
    return outcome.value, outcome.solution[:m]


def _three_alternatives_only(profile: Profile) -> bool:
    return profile.m == 3


RULES: dict[str, SocialDecisionScheme] = {
    sds.name: sds
    for sds in (
        SocialDecisionScheme("rd", rd),
        SocialDecisionScheme("ml", ml),
        SocialDecisionScheme("condorcet-uniform", condorcet_uniform),
        SocialDecisionScheme("f1", f1, _three_alternatives_only),
        SocialDecisionScheme("f2", f2, _three_alternatives_only),
    )
}


def get_rule(name: str) -> SocialDecisionScheme:
    try:
        return RULES[name]
    except KeyError:
        raise DomainError(
            f"unknown rule {name!r}; available: {', '.join(sorted(RULES))}"
        ) from None
