"""Lottery extensions: how a voter with a strict ranking compares two
lotteries.

Three comparators are provided:

* PC  — pairwise comparison. The score of p against q is the probability
  that p yields the strictly better outcome minus the probability that q
  does; its sign decides the comparison. Complete, but not transitive.
* PC1 — the degenerate-restricted variant: two lotteries are comparable
  only when at least one of them is degenerate, in which case the PC
  comparison applies. Everything else is incomparable.
* SD  — stochastic dominance via prefix sums along the voter's ranking.
  Transitive, but incomplete.

Profile-level dominance (`dominates`) means: every voter weakly prefers
the challenger and at least one strictly prefers it. The `*_under`
variants take an explicit comparator, which lets callers swap in a
deliberately broken one to prove their checks can fail.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Callable

from .model import DomainError, Lottery, Profile, Ranking


class Extension(Enum):
    PC = "pc"
    PC1 = "pc1"
    SD = "sd"


class ComparisonOutcome(Enum):
    StrictlyPreferred = "strictly-preferred"
    Indifferent = "indifferent"
    StrictlyDispreferred = "strictly-dispreferred"
    Incomparable = "incomparable"


Comparator = Callable[[Ranking, Lottery, Lottery], ComparisonOutcome]
ScoreFunction = Callable[[Ranking, Lottery, Lottery], Fraction]


def _check_arena(ranking: Ranking, p: Lottery, q: Lottery) -> None:
    if p.alternatives != ranking.alternatives or q.alternatives != ranking.alternatives:
        raise DomainError("ranking and both lotteries must share one alternative set")


def pc_score(ranking: Ranking, p: Lottery, q: Lottery) -> Fraction:
    """Net probability that an independent draw from p beats one from q.

    Positive means the voter leans toward p, zero means indifference;
    the sign carries the whole PC comparison.
    """
    _check_arena(ranking, p, q)
    score = Fraction(0)
    order = ranking.order
    for i, x in enumerate(order):
        px, qx = p.prob(x), q.prob(x)
        for y in order[i + 1:]:
            score += px * q.prob(y) - qx * p.prob(y)
    return score


def outcome_from_score(score: Fraction) -> ComparisonOutcome:
    if score > 0:
        return ComparisonOutcome.StrictlyPreferred
    if score < 0:
        return ComparisonOutcome.StrictlyDispreferred
    return ComparisonOutcome.Indifferent


def make_pc_comparator(score_fn: ScoreFunction) -> Comparator:
    """PC comparison driven by an arbitrary score function."""
    def compare_fn(ranking: Ranking, p: Lottery, q: Lottery) -> ComparisonOutcome:
        return outcome_from_score(score_fn(ranking, p, q))
    return compare_fn


def make_pc1_comparator(score_fn: ScoreFunction) -> Comparator:
    """PC1 comparison (degenerate-restricted) driven by a score function."""
    def compare_fn(ranking: Ranking, p: Lottery, q: Lottery) -> ComparisonOutcome:
        _check_arena(ranking, p, q)
        if not p.is_degenerate() and not q.is_degenerate():
            return ComparisonOutcome.Incomparable
        return outcome_from_score(score_fn(ranking, p, q))
    return compare_fn


pc_compare: Comparator = make_pc_comparator(pc_score)
pc1_compare: Comparator = make_pc1_comparator(pc_score)


def sd_compare(ranking: Ranking, p: Lottery, q: Lottery) -> ComparisonOutcome:
    """Stochastic dominance: compare prefix sums along the voter's ranking."""
    _check_arena(ranking, p, q)
    p_ge_q = True   # p weakly dominates q
    q_ge_p = True
    acc_p = Fraction(0)
    acc_q = Fraction(0)
    for x in ranking.order[:-1]:
        acc_p += p.prob(x)
        acc_q += q.prob(x)
        if acc_p < acc_q:
            p_ge_q = False
        elif acc_p > acc_q:
            q_ge_p = False
    if p_ge_q and q_ge_p:
        return ComparisonOutcome.Indifferent
    if p_ge_q:
        return ComparisonOutcome.StrictlyPreferred
    if q_ge_p:
        return ComparisonOutcome.StrictlyDispreferred
    return ComparisonOutcome.Incomparable


_COMPARATORS: dict[Extension, Comparator] = {
    Extension.PC: pc_compare,
    Extension.PC1: pc1_compare,
    Extension.SD: sd_compare,
}


def comparator(extension: Extension) -> Comparator:
    try:
        return _COMPARATORS[extension]
    except KeyError:
        raise DomainError(f"unknown extension {extension!r}") from None


def compare(extension: Extension, ranking: Ranking, p: Lottery, q: Lottery) -> ComparisonOutcome:
    """Outcome of p measured against q under the given extension."""
    return comparator(extension)(ranking, p, q)


def weakly_prefers(outcome: ComparisonOutcome) -> bool:
    return outcome in (ComparisonOutcome.StrictlyPreferred, ComparisonOutcome.Indifferent)


def dominance_outcomes_under(
    profile: Profile, compare_fn: Comparator, q: Lottery, p: Lottery
) -> tuple[ComparisonOutcome, ...]:
    """Per-voter outcome of the challenger q measured against p."""
    return tuple(compare_fn(b, q, p) for b in profile.ballots)


def dominates_under(profile: Profile, compare_fn: Comparator, q: Lottery, p: Lottery) -> bool:
    """q dominates p: all voters weakly prefer q, at least one strictly."""
    outcomes = dominance_outcomes_under(profile, compare_fn, q, p)
    return all(weakly_prefers(o) for o in outcomes) and any(
        o is ComparisonOutcome.StrictlyPreferred for o in outcomes
    )


def dominance_outcomes(
    profile: Profile, extension: Extension, q: Lottery, p: Lottery
) -> tuple[ComparisonOutcome, ...]:
    return dominance_outcomes_under(profile, comparator(extension), q, p)


def dominates(profile: Profile, extension: Extension, q: Lottery, p: Lottery) -> bool:
    return dominates_under(profile, comparator(extension), q, p)
