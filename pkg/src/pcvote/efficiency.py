"""Dominance oracles and efficiency notions.

A lottery p is inefficient (under a given extension) when some lottery q
makes every voter weakly better off and at least one strictly better off.
For PC and SD that existence question is a small exact linear program; for
PC1 it reduces to a finite case split because two non-degenerate lotteries
are never PC1-comparable; ex-post efficiency just reads the Pareto-dominated
set. The module also provides a calibrated mass-shift perturbation whose
comparison against the original lottery is fully determined by ranking
shape, a sufficient certificate for PC-efficiency with three alternatives,
and an iterator that follows chains of dominating lotteries.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .model import (
    ApplicabilityError,
    DomainError,
    Lottery,
    Profile,
    Ranking,
    _require_exact,
    never_bottom_set,
    pareto_dominated_set,
    top_count,
)
from .extensions import (
    ComparisonOutcome,
    Extension,
    dominance_outcomes,
    dominates,
)
from .ratlp import EQ, GE, Constraint, LinearProgram, LpStatus, lp_solve


class EfficiencyNotion(Enum):
    PC = "pc"
    PC1 = "pc1"
    SD = "sd"
    ExPost = "expost"


_EXTENSION_TO_NOTION = {
    Extension.PC: EfficiencyNotion.PC,
    Extension.PC1: EfficiencyNotion.PC1,
    Extension.SD: EfficiencyNotion.SD,
}


@dataclass(frozen=True)
class DominanceCertificate:
    """A verified witness that `dominator` dominates `dominated`."""

    extension: Extension
    dominated: Lottery
    dominator: Lottery
    outcomes: tuple[ComparisonOutcome, ...]


class PathTermination(Enum):
    ReachedEfficient = "reached-efficient"
    MaxSteps = "max-steps"
    CycleDetected = "cycle-detected"


@dataclass(frozen=True)
class ImprovementPath:
    profile: Profile
    lotteries: tuple[Lottery, ...]
    steps: tuple[str, ...]
    termination: PathTermination


def _certificate(
    profile: Profile, extension: Extension, p: Lottery, q: Lottery
) -> DominanceCertificate:
    outcomes = dominance_outcomes(profile, extension, q, p)
    cert = DominanceCertificate(extension, p, q, outcomes)
    if not dominates(profile, extension, q, p):
        raise AssertionError("internal error: dominance witness failed re-validation")
    return cert


def _pc_voter_weights(ranking: Ranking, p: Lottery) -> tuple[Fraction, ...]:
    """Coefficients w with w · q = (PC score of q against p) for this voter."""
    weights = []
    for x in ranking.alternatives:
        better = sum((p.prob(y) for y in ranking.above(x)), Fraction(0))
        worse = sum((p.prob(y) for y in ranking.below(x)), Fraction(0))
        weights.append(worse - better)
    return tuple(weights)


def _pc_dominator_lp(
    profile: Profile, p: Lottery, weights: Optional[Sequence[Fraction]] = None
) -> tuple[Fraction, Lottery]:
    """Maximize a positive combination of per-voter PC scores against p,
    over lotteries q that no voter PC-objects to. Value 0 means p is
    PC-efficient; a positive value comes with a dominating q."""
    m = profile.m
    lam = _positive_weights(profile.n, weights)
    rows: list[Constraint] = []
    objective = [Fraction(0)] * m
    for ballot, factor in zip(profile.ballots, lam):
        w = _pc_voter_weights(ballot, p)
        rows.append(Constraint(w, GE, Fraction(0)))
        for j in range(m):
            objective[j] += factor * w[j]
    rows.append(Constraint(tuple([Fraction(1)] * m), EQ, Fraction(1)))
    outcome = lp_solve(LinearProgram(tuple(objective), tuple(rows)))
    assert outcome.status is LpStatus.Optimal, "the feasible set contains p itself"
    assert outcome.solution is not None and outcome.value is not None
    return outcome.value, Lottery(profile.alternatives, outcome.solution)


def _sd_dominator_lp(
    profile: Profile, p: Lottery, weights: Optional[Sequence[Fraction]] = None
) -> tuple[Fraction, Lottery]:
    """Same idea for SD: every prefix of every voter must gain weakly; the
    objective totals the (weighted) prefix gains. Value 0 means efficient."""
    m = profile.m
    alts = profile.alternatives
    lam = _positive_weights(profile.n, weights)
    rows: list[Constraint] = []
    objective = [Fraction(0)] * m
    gains_baseline = Fraction(0)
    for ballot, factor in zip(profile.ballots, lam):
        prefix = Fraction(0)
        indicator = [Fraction(0)] * m
        for x in ballot.order[:-1]:
            indicator[alts.index(x)] = Fraction(1)
            prefix += p.prob(x)
            rows.append(Constraint(tuple(indicator), GE, prefix))
            for j in range(m):
                objective[j] += factor * indicator[j]
            gains_baseline += factor * prefix
    rows.append(Constraint(tuple([Fraction(1)] * m), EQ, Fraction(1)))
    outcome = lp_solve(LinearProgram(tuple(objective), tuple(rows)))
    assert outcome.status is LpStatus.Optimal, "the feasible set contains p itself"
    assert outcome.solution is not None and outcome.value is not None
    return outcome.value - gains_baseline, Lottery(profile.alternatives, outcome.solution)


def _positive_weights(
    n: int, weights: Optional[Sequence[Fraction]]
) -> tuple[Fraction, ...]:
    if weights is None:
        return tuple(Fraction(1) for _ in range(n))
    lam = tuple(_require_exact(w, "voter weight") for w in weights)
    if len(lam) != n:
        raise DomainError(f"{len(lam)} voter weights for {n} voters")
    if any(w <= 0 for w in lam):
        raise DomainError("voter weights must be strictly positive")
    return lam


def find_dominator(
    profile: Profile,
    p: Lottery,
    extension: Extension,
    weights: Optional[Sequence[Fraction]] = None,
) -> Optional[DominanceCertificate]:
    """A dominating lottery under PC or SD, as an LP witness, or None.

    Optional strictly positive per-voter weights tilt the objective (any
    choice keeps the oracle sound); the default is all-ones, which makes
    the returned witness canonical.
    """
    if p.alternatives != profile.alternatives:
        raise DomainError("lottery must range over the profile's alternatives")
    if extension is Extension.PC:
        value, q = _pc_dominator_lp(profile, p, weights)
    elif extension is Extension.SD:
        value, q = _sd_dominator_lp(profile, p, weights)
    else:
        raise DomainError(
            "find_dominator solves PC and SD; use pc1_find_dominator for PC1"
        )
    if value == 0:
        return None
    return _certificate(profile, extension, p, q)


def pc1_find_dominator(profile: Profile, p: Lottery) -> Optional[DominanceCertificate]:
    """A PC1-dominating lottery, or None.

    A non-degenerate lottery can only be PC1-dominated by a degenerate
    one, so trying every degenerate lottery (in alternative order) is
    exhaustive. A degenerate p is additionally comparable against every
    lottery, so the PC dominator LP covers the rest of that case.
    """
    if p.alternatives != profile.alternatives:
        raise DomainError("lottery must range over the profile's alternatives")
    for x in profile.alternatives:
        q = Lottery.degenerate(profile.alternatives, x)
        if dominates(profile, Extension.PC1, q, p):
            return _certificate(profile, Extension.PC1, p, q)
    if p.is_degenerate():
        pc_cert = find_dominator(profile, p, Extension.PC)
        if pc_cert is not None:
            return _certificate(profile, Extension.PC1, p, pc_cert.dominator)
    return None


def is_efficient(
    profile: Profile, p: Lottery, notion: EfficiencyNotion | Extension
) -> bool:
    """No lottery dominates p under the given notion."""
    if isinstance(notion, Extension):
        notion = _EXTENSION_TO_NOTION[notion]
    if notion is EfficiencyNotion.ExPost:
        if p.alternatives != profile.alternatives:
            raise DomainError("lottery must range over the profile's alternatives")
        dominated = pareto_dominated_set(profile)
        return all(p.prob(x) == 0 for x in dominated)
    if notion is EfficiencyNotion.PC1:
        return pc1_find_dominator(profile, p) is None
    extension = Extension.PC if notion is EfficiencyNotion.PC else Extension.SD
    return find_dominator(profile, p, extension) is None


# ---------------------------------------------------------------------------
# calibrated mass shift
# ---------------------------------------------------------------------------

def mass_shift_perturbation(
    p: Lottery, roles: Sequence[str], epsilon: Fraction
) -> Lottery:
    """Shift probability mass from two donors toward a receiver.

    `roles` names (bystander, donor_a, donor_b, receiver) and must list
    all four alternatives of a four-alternative lottery. Each donor d
    loses epsilon / (p(d) + p(receiver)); the receiver gains both shares;
    the bystander keeps its probability. Both donors need positive
    probability, epsilon must be positive, and neither donor may be
    driven below zero.

    The point of the construction: the PC comparison of the result
    against p, for any strict ranking, is decided purely by where the
    receiver sits relative to the donors — receiver above both means the
    shift wins, below both means it loses, and in between the comparison
    degenerates to the bystander's position and probability.
    """
    epsilon = _require_exact(epsilon, "epsilon")
    if len(p.alternatives) != 4:
        raise DomainError("the mass shift is defined for exactly four alternatives")
    if len(roles) != 4 or set(roles) != set(p.alternatives.names):
        raise DomainError(
            f"roles must name all four alternatives exactly once, got {tuple(roles)!r}"
        )
    bystander, donor_a, donor_b, receiver = roles
    if p.prob(donor_a) <= 0 or p.prob(donor_b) <= 0:
        raise DomainError("both donors need strictly positive probability")
    if epsilon <= 0:
        raise DomainError(f"epsilon must be strictly positive, got {epsilon}")
    share_a = epsilon / (p.prob(donor_a) + p.prob(receiver))
    share_b = epsilon / (p.prob(donor_b) + p.prob(receiver))
    new = p.as_map()
    new[donor_a] -= share_a
    new[donor_b] -= share_b
    new[receiver] += share_a + share_b
    if new[donor_a] < 0 or new[donor_b] < 0:
        raise DomainError(
            f"epsilon {epsilon} drives a donor below zero "
            f"(donor probabilities {p.prob(donor_a)}, {p.prob(donor_b)})"
        )
    return Lottery.from_map(p.alternatives, new)


# ---------------------------------------------------------------------------
# three-alternative efficiency certificate
# ---------------------------------------------------------------------------

def m3_efficiency_certificate(profile: Profile, p: Lottery) -> bool:
    """A sufficient (not necessary) syntactic test for PC-efficiency with
    exactly three alternatives:

    1. nothing Pareto-dominated gets probability;
    2. if some alternative is never ranked last but at least once first,
       then some other alternative gets probability zero;
    3. an alternative that is never ranked first but at least once last
       gets probability zero.
    """
    if profile.m != 3:
        raise ApplicabilityError(
            f"the certificate is defined only for exactly three alternatives, got m={profile.m}"
        )
    if p.alternatives != profile.alternatives:
        raise DomainError("lottery must range over the profile's alternatives")
    alts = profile.alternatives
    if any(p.prob(x) > 0 for x in pareto_dominated_set(profile)):
        return False
    never_bottom = never_bottom_set(profile)
    bottoms = {b.bottom for b in profile.ballots}
    for x in alts:
        if x in never_bottom and top_count(profile, x) >= 1:
            if not any(p.prob(y) == 0 for y in alts if y != x):
                return False
        if top_count(profile, x) == 0 and x in bottoms:
            if p.prob(x) != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# improvement paths
# ---------------------------------------------------------------------------

def improvement_path(
    profile: Profile,
    start: Lottery,
    max_steps: int,
    mode: str = "canonical",
    seed: int = 0,
) -> ImprovementPath:
    """Follow PC-dominating lotteries from `start` until no dominator
    exists (ReachedEfficient), a lottery repeats exactly (CycleDetected),
    or `max_steps` improvements have been taken (MaxSteps).

    `mode="canonical"` uses the all-ones dominator objective each step;
    `mode="random"` draws fresh strictly positive voter weights from a
    seeded generator each step, which explores different witnesses while
    staying sound.
    """
    if max_steps < 1:
        raise DomainError(f"max_steps must be at least 1, got {max_steps}")
    if mode not in ("canonical", "random"):
        raise DomainError(f"mode must be 'canonical' or 'random', got {mode!r}")
    rng = random.Random(seed)
    lotteries = [start]
    steps: list[str] = []
    seen = {start}
    current = start
    termination = PathTermination.MaxSteps
    for step_index in range(max_steps):
        weights = None
        if mode == "random":
            weights = tuple(Fraction(rng.randint(1, 1000)) for _ in range(profile.n))
        cert = find_dominator(profile, current, Extension.PC, weights=weights)
        if cert is None:
            termination = PathTermination.ReachedEfficient
            break
        nxt = cert.dominator
        strict = sum(
            1 for o in cert.outcomes if o is ComparisonOutcome.StrictlyPreferred
        )
        steps.append(
            f"step {step_index + 1}: PC dominator via LP ({strict}/{profile.n} voters strictly better)"
        )
        lotteries.append(nxt)
        if nxt in seen:
            termination = PathTermination.CycleDetected
            break
        seen.add(nxt)
        current = nxt
    return ImprovementPath(profile, tuple(lotteries), tuple(steps), termination)
