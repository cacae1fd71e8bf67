"""Axiom checkers for social decision schemes, on single profiles or
exhaustively over small profile spaces.

Every checker returns None when the property holds on its input and a
typed witness object when it found a counterexample; `exhaustive_scan`
lifts a checker over an enumerated profile space and reports the first
witness in a deterministic order, or the number of profiles that passed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, Optional, Sequence

from .model import (
    AlternativeSet,
    DomainError,
    Lottery,
    Profile,
    Ranking,
    absolute_winner,
    condorcet_winner,
    relabel,
    remove_voter,
)
from .extensions import (
    ComparisonOutcome,
    Extension,
    compare,
    weakly_prefers,
)
from .efficiency import (
    DominanceCertificate,
    EfficiencyNotion,
    find_dominator,
    is_efficient,
    pc1_find_dominator,
)
from .rules import SocialDecisionScheme


class Mode(Enum):
    Strong = "strong"
    Weak = "weak"


class Decisiveness(Enum):
    Unanimity = "unanimity"
    AbsoluteWinner = "absolute-winner"
    CondorcetConsistency = "condorcet-consistency"


class Verdict(Enum):
    Holds = "holds"
    Violated = "violated"


@dataclass(frozen=True)
class ManipulationWitness:
    profile: Profile
    voter: int
    misreport: Ranking
    manipulated_profile: Profile
    truthful_outcome: Lottery
    manipulated_outcome: Lottery
    extension: Extension
    mode: Mode


@dataclass(frozen=True)
class ParticipationWitness:
    profile: Profile
    voter: int
    with_voter: Lottery
    without_voter: Lottery
    extension: Extension
    strict: bool
    kind: str  # "participation-harms" or "no-strict-gain"


@dataclass(frozen=True)
class SymmetryWitness:
    profile: Profile
    kind: str  # "anonymity" or "neutrality"
    voter_perm: Optional[tuple[int, ...]]
    alt_perm: Optional[tuple[tuple[str, str], ...]]
    expected: Lottery
    actual: Lottery


@dataclass(frozen=True)
class CancellationWitness:
    profile: Profile
    added: Ranking
    before: Lottery
    after: Lottery


@dataclass(frozen=True)
class DecisivenessWitness:
    profile: Profile
    level: Decisiveness
    required: str
    outcome: Lottery


@dataclass(frozen=True)
class EfficiencyWitness:
    profile: Profile
    outcome: Lottery
    notion: EfficiencyNotion
    certificate: Optional[DominanceCertificate]


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    rule: str
    verdict: Verdict
    witness: Optional[object]
    profiles_checked: int


def all_rankings(alternatives: AlternativeSet) -> tuple[Ranking, ...]:
    """Every strict ranking, in lexicographic order of label tuples."""
    return tuple(
        Ranking(alternatives, perm)
        for perm in sorted(itertools.permutations(alternatives.names))
    )


def find_manipulation(
    rule: SocialDecisionScheme,
    profile: Profile,
    extension: Extension,
    mode: Mode,
    voters: Optional[Sequence[int]] = None,
) -> Optional[ManipulationWitness]:
    """First profitable misreport, scanning voters in order and misreports
    lexicographically.

    Strong mode flags a misreport the truthful outcome is *not* weakly
    preferred to (incomparability included); weak mode flags one whose
    outcome the voter strictly prefers.
    """
    truthful = rule(profile)
    candidates = all_rankings(profile.alternatives)
    voter_list = list(voters) if voters is not None else list(range(1, profile.n + 1))
    for i in voter_list:
        true_ballot = profile.ballot(i)
        for misreport in candidates:
            if misreport == true_ballot:
                continue
            deviated = profile.replace_ballot(i, misreport)
            outcome = rule(deviated)
            if mode is Mode.Strong:
                violated = not weakly_prefers(
                    compare(extension, true_ballot, truthful, outcome)
                )
            else:
                violated = (
                    compare(extension, true_ballot, outcome, truthful)
                    is ComparisonOutcome.StrictlyPreferred
                )
            if violated:
                return ManipulationWitness(
                    profile, i, misreport, deviated, truthful, outcome, extension, mode
                )
    return None


def exists_strict_improvement(ranking: Ranking, q: Lottery, extension: Extension) -> bool:
    """Is there any lottery this voter strictly prefers to q?

    Under PC, PC1 and SD alike this happens exactly when q puts less than
    full probability on the voter's top alternative (the degenerate top
    lottery is then a strict improvement, and nothing beats the top).
    """
    if extension not in (Extension.PC, Extension.PC1, Extension.SD):
        raise DomainError(f"unknown extension {extension!r}")
    return q.prob(ranking.top) < 1


def check_participation(
    rule: SocialDecisionScheme,
    profile: Profile,
    extension: Extension,
    strict: bool = False,
) -> Optional[ParticipationWitness]:
    """Does any voter weakly regret showing up — or, in strict mode, fail
    to strictly gain although a strict gain was available?"""
    if profile.n < 2:
        raise DomainError("participation needs at least two voters to compare against")
    with_voter = rule(profile)
    for i in range(1, profile.n + 1):
        ballot = profile.ballot(i)
        without = rule(remove_voter(profile, i))
        outcome = compare(extension, ballot, with_voter, without)
        if not weakly_prefers(outcome):
            return ParticipationWitness(
                profile, i, with_voter, without, extension, strict, "participation-harms"
            )
        if strict and exists_strict_improvement(ballot, without, extension):
            if outcome is not ComparisonOutcome.StrictlyPreferred:
                return ParticipationWitness(
                    profile, i, with_voter, without, extension, strict, "no-strict-gain"
                )
    return None


def _voter_permutations(n: int) -> Iterator[tuple[int, ...]]:
    if n <= 5:
        for perm in itertools.permutations(range(1, n + 1)):
            yield perm
    else:
        # adjacent transpositions generate the full group
        for i in range(1, n):
            perm = list(range(1, n + 1))
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
            yield tuple(perm)


def check_symmetry(
    rule: SocialDecisionScheme, profile: Profile, kind: Optional[str] = None
) -> Optional[SymmetryWitness]:
    """Anonymity (voter permutations leave the outcome alone) and
    neutrality (alternative permutations commute with the rule).
    `kind` restricts the check to "anonymity" or "neutrality"."""
    if kind not in (None, "anonymity", "neutrality"):
        raise DomainError(f"kind must be None, 'anonymity' or 'neutrality', got {kind!r}")
    base = rule(profile)
    if kind in (None, "anonymity"):
        for perm in _voter_permutations(profile.n):
            if perm == tuple(range(1, profile.n + 1)):
                continue
            actual = rule(relabel(profile, voter_perm=perm))
            if actual != base:
                return SymmetryWitness(profile, "anonymity", perm, None, base, actual)
    if kind in (None, "neutrality"):
        names = profile.alternatives.names
        for target in sorted(itertools.permutations(names)):
            mapping = dict(zip(names, target))
            if all(k == v for k, v in mapping.items()):
                continue
            actual = rule(relabel(profile, alt_perm=mapping))
            expected = base.relabel(mapping)
            if actual != expected:
                return SymmetryWitness(
                    profile, "neutrality", None, tuple(sorted(mapping.items())), expected, actual
                )
    return None


def check_cancellation(
    rule: SocialDecisionScheme, profile: Profile
) -> Optional[CancellationWitness]:
    """Adding a ballot and its exact reverse must not move the outcome."""
    base = rule(profile)
    for ballot in all_rankings(profile.alternatives):
        extended = profile.append(ballot, ballot.reversed())
        after = rule(extended)
        if after != base:
            return CancellationWitness(profile, ballot, base, after)
    return None


def check_decisiveness(
    rule: SocialDecisionScheme, profile: Profile, level: Decisiveness
) -> Optional[DecisivenessWitness]:
    """When the profile has the relevant kind of clear winner, the rule
    must put probability one on it. No trigger, nothing to check."""
    target: Optional[str] = None
    if level is Decisiveness.Unanimity:
        tops = {b.top for b in profile.ballots}
        if len(tops) == 1:
            (target,) = tops
    elif level is Decisiveness.AbsoluteWinner:
        target = absolute_winner(profile)
    elif level is Decisiveness.CondorcetConsistency:
        target = condorcet_winner(profile)
    else:
        raise DomainError(f"unknown decisiveness level {level!r}")
    if target is None:
        return None
    outcome = rule(profile)
    if outcome.prob(target) != 1:
        return DecisivenessWitness(profile, level, target, outcome)
    return None


def check_efficiency(
    rule: SocialDecisionScheme, profile: Profile, notion: EfficiencyNotion
) -> Optional[EfficiencyWitness]:
    """Is the rule's outcome on this profile efficient under the notion?"""
    outcome = rule(profile)
    if notion is EfficiencyNotion.ExPost:
        if is_efficient(profile, outcome, notion):
            return None
        return EfficiencyWitness(profile, outcome, notion, None)
    if notion is EfficiencyNotion.PC1:
        cert = pc1_find_dominator(profile, outcome)
    else:
        extension = Extension.PC if notion is EfficiencyNotion.PC else Extension.SD
        cert = find_dominator(profile, outcome, extension)
    if cert is None:
        return None
    return EfficiencyWitness(profile, outcome, notion, cert)


def strategyproofness_ladder_gaps(
    rule: SocialDecisionScheme, profile: Profile
) -> list[str]:
    """Internal consistency probe: a weak PC1 manipulation implies a strong
    PC one, which implies a strong SD one. Returns descriptions of any
    broken implication (empty list = consistent)."""
    weak_pc1 = find_manipulation(rule, profile, Extension.PC1, Mode.Weak)
    strong_pc = find_manipulation(rule, profile, Extension.PC, Mode.Strong)
    strong_sd = find_manipulation(rule, profile, Extension.SD, Mode.Strong)
    gaps = []
    if weak_pc1 is not None and strong_pc is None:
        gaps.append("weak PC1 manipulation found but no strong PC manipulation")
    if strong_pc is not None and strong_sd is None:
        gaps.append("strong PC manipulation found but no strong SD manipulation")
    return gaps


# ---------------------------------------------------------------------------
# enumeration and scanning
# ---------------------------------------------------------------------------

DEFAULT_ENUMERATION_BUDGET = 2_000_000


class EnumerationBudgetError(DomainError):
    """The requested profile space is larger than the allowed budget."""


def count_profiles(m: int, n: int, up_to_anonymity: bool = False) -> int:
    r = math.factorial(m)
    if up_to_anonymity:
        return math.comb(r + n - 1, n)
    return r ** n


def enumerate_profiles(
    m: int,
    n: int,
    up_to_anonymity: bool = False,
    names: Optional[Sequence[str]] = None,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> Iterator[Profile]:
    """All n-voter profiles over m alternatives, lexicographically; with
    `up_to_anonymity` one representative per ballot multiset."""
    if not 1 <= m <= 4:
        raise DomainError(f"enumeration supports 1..4 alternatives, got m={m}")
    if n < 1:
        raise DomainError(f"need at least one voter, got n={n}")
    total = count_profiles(m, n, up_to_anonymity)
    if total > budget:
        raise EnumerationBudgetError(
            f"{total} profiles exceed the enumeration budget of {budget}"
        )
    alts = AlternativeSet(tuple(names) if names is not None else ("a", "b", "c", "d")[:m])
    if len(alts) != m:
        raise DomainError(f"{len(alts)} names supplied for m={m}")
    rankings = all_rankings(alts)
    combos = (
        itertools.combinations_with_replacement(rankings, n)
        if up_to_anonymity
        else itertools.product(rankings, repeat=n)
    )
    for ballots in combos:
        yield Profile(alts, tuple(ballots))


@dataclass(frozen=True)
class AxiomSpec:
    """A named axiom: a checker plus the smallest profile it applies to."""

    name: str
    check: Callable[[SocialDecisionScheme, Profile], Optional[object]]
    min_voters: int = 1


def _spec_entries() -> dict[str, AxiomSpec]:
    entries: dict[str, AxiomSpec] = {}

    def add(name: str, check: Callable, min_voters: int = 1) -> None:
        entries[name] = AxiomSpec(name, check, min_voters)

    add("anonymity", lambda rule, p: check_symmetry(rule, p, "anonymity"))
    add("neutrality", lambda rule, p: check_symmetry(rule, p, "neutrality"))
    add("cancellation", check_cancellation)
    for level in Decisiveness:
        add(level.value, lambda rule, p, lv=level: check_decisiveness(rule, p, lv))
    for ext in Extension:
        add(
            f"{ext.value}-strategyproofness",
            lambda rule, p, e=ext: find_manipulation(rule, p, e, Mode.Strong),
        )
        add(
            f"weak-{ext.value}-strategyproofness",
            lambda rule, p, e=ext: find_manipulation(rule, p, e, Mode.Weak),
        )
        add(
            f"{ext.value}-participation",
            lambda rule, p, e=ext: check_participation(rule, p, e, strict=False),
            min_voters=2,
        )
        add(
            f"strict-{ext.value}-participation",
            lambda rule, p, e=ext: check_participation(rule, p, e, strict=True),
            min_voters=2,
        )
    for notion in EfficiencyNotion:
        add(
            f"{notion.value}-efficiency",
            lambda rule, p, nt=notion: check_efficiency(rule, p, nt),
        )
    return entries


AXIOMS: dict[str, AxiomSpec] = _spec_entries()


def axiom(name: str) -> AxiomSpec:
    try:
        return AXIOMS[name]
    except KeyError:
        raise DomainError(
            f"unknown axiom {name!r}; available: {', '.join(sorted(AXIOMS))}"
        ) from None


def check_axiom_on_profile(
    rule: SocialDecisionScheme, profile: Profile, axiom_name: str
) -> AxiomReport:
    spec = axiom(axiom_name)
    if profile.n < spec.min_voters:
        raise DomainError(
            f"axiom {axiom_name!r} needs at least {spec.min_voters} voters, got {profile.n}"
        )
    witness = spec.check(rule, profile)
    verdict = Verdict.Holds if witness is None else Verdict.Violated
    return AxiomReport(axiom_name, rule.name, verdict, witness, 1)


def exhaustive_scan(
    rule: SocialDecisionScheme,
    m: int,
    n_max: int,
    axiom_name: str,
    up_to_anonymity: bool = False,
    n_min: Optional[int] = None,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> AxiomReport:
    """Run one axiom checker over every profile with n_min..n_max voters,
    stopping at the first witness. Deterministic enumeration order."""
    spec = axiom(axiom_name)
    lo = max(spec.min_voters, n_min if n_min is not None else 1)
    if n_max < lo:
        raise DomainError(f"n_max={n_max} below the smallest applicable size {lo}")
    checked = 0
    for n in range(lo, n_max + 1):
        for profile in enumerate_profiles(m, n, up_to_anonymity, budget=budget):
            checked += 1
            witness = spec.check(rule, profile)
            if witness is not None:
                return AxiomReport(axiom_name, rule.name, Verdict.Violated, witness, checked)
    return AxiomReport(axiom_name, rule.name, Verdict.Holds, None, checked)
