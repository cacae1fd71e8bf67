"""Bundled example profiles with machine-checked facts.

Each fixture couples a profile (shipped as a text data file) with named
lotteries and a list of recorded facts. Nothing in this module computes
social-choice quantities itself: every fact replays through the core
modules when checked, so the suite doubles as an end-to-end regression
net over the whole package.

`verify_paper_suite` runs every fact of every fixture. Two negative
controls deliberately break one core computation each (the sign of the
PC score; the canonical maximal-lottery tie-break) to demonstrate the
suite actually fails when the computations are wrong — a green suite
with inverted internals would be worthless.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Callable, Mapping, Optional

from . import axioms, efficiency, extensions, rules
from .extensions import ComparisonOutcome, Extension
from .efficiency import EfficiencyNotion, PathTermination
from .model import DomainError, Lottery, Profile, relabel, remove_voter
from .model import (
    condorcet_winner,
    majority_margin,
    never_bottom_set,
    pareto_dominated_set,
    top_count,
    weak_condorcet_winners,
)
from .profilefmt import parse_profile

F = Fraction

DATA_VERSION = "v1"


@dataclass(frozen=True)
class Bench:
    """The swappable function surface fixture facts run through.

    The default bench delegates to the core modules unchanged; negative
    controls replace exactly one entry."""

    pc_score_fn: extensions.ScoreFunction = extensions.pc_score
    ml_fn: Callable[[Profile], Lottery] = rules.ml

    def comparator(self, extension: Extension) -> extensions.Comparator:
        if extension is Extension.PC:
            return extensions.make_pc_comparator(self.pc_score_fn)
        if extension is Extension.PC1:
            return extensions.make_pc1_comparator(self.pc_score_fn)
        return extensions.sd_compare

    def rule(self, name: str) -> rules.SocialDecisionScheme:
        sds = rules.get_rule(name)
        if name == "ml" and self.ml_fn is not rules.ml:
            return replace(sds, evaluate=self.ml_fn)
        return sds

    def dominates(self, profile: Profile, extension: Extension, q: Lottery, p: Lottery) -> bool:
        return extensions.dominates_under(profile, self.comparator(extension), q, p)


DEFAULT_BENCH = Bench()


def _flipped_pc_score(ranking, p, q) -> Fraction:
    return -extensions.pc_score(ranking, p, q)


def _ml_with_broken_tiebreak(profile: Profile) -> Lottery:
    """Deliberately wrong canonicalization: uniform over the support of the
    true canonical output instead of the leximin point."""
    true = rules.ml(profile)
    return Lottery.uniform(profile.alternatives, over=true.support())


NEGATIVE_CONTROLS: dict[str, Bench] = {
    "pc-sign-flip": Bench(pc_score_fn=_flipped_pc_score),
    "ml-tie-break": Bench(ml_fn=_ml_with_broken_tiebreak),
}


@dataclass(frozen=True)
class FactResult:
    fixture: str
    fact: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class SuiteReport:
    results: tuple[FactResult, ...]
    negative_control: Optional[str] = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> tuple[FactResult, ...]:
        return tuple(r for r in self.results if not r.passed)

    def render(self) -> str:
        lines = []
        for r in self.results:
            status = "pass" if r.passed else "FAIL"
            suffix = f" ({r.detail})" if (r.detail and not r.passed) else ""
            lines.append(f"[{status}] {r.fixture}: {r.fact}{suffix}")
        lines.append(
            f"{sum(r.passed for r in self.results)}/{len(self.results)} facts pass"
            + (f" under negative control {self.negative_control!r}" if self.negative_control else "")
        )
        return "\n".join(lines)


@dataclass(frozen=True)
class Fixture:
    name: str
    profile: Profile
    lotteries: Mapping[str, Lottery]
    facts: tuple["Fact", ...]
    notes: str = ""

    def lottery(self, key: str) -> Lottery:
        try:
            return self.lotteries[key]
        except KeyError:
            raise DomainError(
                f"fixture {self.name!r} has no lottery {key!r}; "
                f"available: {', '.join(sorted(self.lotteries))}"
            ) from None


class Fact:
    """One recomputable assertion about a fixture."""

    def describe(self) -> str:
        raise NotImplementedError

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        raise NotImplementedError

    def check(self, fixture: Fixture, bench: Bench) -> FactResult:
        passed, detail = self.holds(fixture, bench)
        return FactResult(fixture.name, self.describe(), passed, detail)


@dataclass(frozen=True)
class TopCountsFact(Fact):
    expected: tuple[tuple[str, int], ...]

    def describe(self) -> str:
        return "top counts " + ", ".join(f"{x}:{k}" for x, k in self.expected)

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        actual = {x: top_count(fixture.profile, x) for x, _ in self.expected}
        return actual == dict(self.expected), f"got {actual}"


@dataclass(frozen=True)
class MarginFact(Fact):
    x: str
    y: str
    expected: int

    def describe(self) -> str:
        return f"majority margin ({self.x} over {self.y}) = {self.expected}"

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        actual = majority_margin(fixture.profile, self.x, self.y)
        return actual == self.expected, f"got {actual}"


@dataclass(frozen=True)
class CondorcetWinnerFact(Fact):
    expected: Optional[str]

    def describe(self) -> str:
        return f"condorcet winner = {self.expected or 'none'}"

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        actual = condorcet_winner(fixture.profile)
        return actual == self.expected, f"got {actual or 'none'}"


@dataclass(frozen=True)
class WeakCondorcetFact(Fact):
    expected: frozenset[str]

    def describe(self) -> str:
        return f"weak condorcet winners = {{{', '.join(sorted(self.expected))}}}"

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        actual = weak_condorcet_winners(fixture.profile)
        return actual == self.expected, f"got {{{', '.join(sorted(actual))}}}"


@dataclass(frozen=True)
class NeverBottomFact(Fact):
    expected: frozenset[str]

    def describe(self) -> str:
        return f"never-bottom set = {{{', '.join(sorted(self.expected))}}}"

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        actual = never_bottom_set(fixture.profile)
        return actual == self.expected, f"got {{{', '.join(sorted(actual))}}}"


@dataclass(frozen=True)
class ParetoDominatedFact(Fact):
    expected: frozenset[str]

    def describe(self) -> str:
        inner = ", ".join(sorted(self.expected)) if self.expected else ""
        return f"pareto-dominated set = {{{inner}}}"

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        actual = pareto_dominated_set(fixture.profile)
        return actual == self.expected, f"got {{{', '.join(sorted(actual))}}}"


@dataclass(frozen=True)
class SupportFact(Fact):
    key: str
    expected: frozenset[str]

    def describe(self) -> str:
        return f"support({self.key}) = {{{', '.join(sorted(self.expected))}}}"

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        actual = fixture.lottery(self.key).support()
        return actual == self.expected, f"got {{{', '.join(sorted(actual))}}}"


@dataclass(frozen=True)
class RuleOutputFact(Fact):
    rule_name: str
    key: str

    def describe(self) -> str:
        return f"{self.rule_name} returns lottery {self.key!r}"

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        actual = bench.rule(self.rule_name)(fixture.profile)
        expected = fixture.lottery(self.key)
        return actual == expected, f"got {dict(actual.as_map())}"


@dataclass(frozen=True)
class MaximalLotteryFact(Fact):
    key: str
    expected: bool = True

    def describe(self) -> str:
        return f"{self.key!r} is {'a' if self.expected else 'not a'} maximal lottery"

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        actual = rules.is_maximal_lottery(fixture.profile, fixture.lottery(self.key))
        return actual == self.expected, f"got {actual}"


@dataclass(frozen=True)
class DecisivenessViolationFact(Fact):
    rule_name: str
    level: axioms.Decisiveness

    def describe(self) -> str:
        return f"{self.rule_name} violates {self.level.value} here"

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        witness = axioms.check_decisiveness(
            bench.rule(self.rule_name), fixture.profile, self.level
        )
        return witness is not None, "no violation found" if witness is None else ""


@dataclass(frozen=True)
class DominatesFact(Fact):
    extension: Extension
    dominator_key: str
    dominated_key: str

    def describe(self) -> str:
        return f"{self.dominator_key!r} {self.extension.value}-dominates {self.dominated_key!r}"

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        ok = bench.dominates(
            fixture.profile,
            self.extension,
            fixture.lottery(self.dominator_key),
            fixture.lottery(self.dominated_key),
        )
        return ok, "dominance did not hold" if not ok else ""


@dataclass(frozen=True)
class EfficiencyFact(Fact):
    notion: EfficiencyNotion
    key: str
    expected: bool

    def describe(self) -> str:
        style = "efficient" if self.expected else "inefficient"
        return f"{self.key!r} is {self.notion.value}-{style}"

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        actual = efficiency.is_efficient(fixture.profile, fixture.lottery(self.key), self.notion)
        return actual == self.expected, f"got {'efficient' if actual else 'inefficient'}"


@dataclass(frozen=True)
class Pc1DominatorFact(Fact):
    key: str
    expected_key: str

    def describe(self) -> str:
        return f"pc1 dominator search on {self.key!r} returns {self.expected_key!r}"

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        cert = efficiency.pc1_find_dominator(fixture.profile, fixture.lottery(self.key))
        if cert is None:
            return False, "no dominator found"
        expected = fixture.lottery(self.expected_key)
        return cert.dominator == expected, f"got {dict(cert.dominator.as_map())}"


@dataclass(frozen=True)
class ManipulationFact(Fact):
    rule_name: str
    voter: int
    misreport: tuple[str, ...]
    extension: Extension
    mode: axioms.Mode

    def describe(self) -> str:
        return (
            f"voter {self.voter} manipulates {self.rule_name} by reporting "
            f"{' > '.join(self.misreport)} ({self.mode.value} {self.extension.value})"
        )

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        witness = axioms.find_manipulation(
            bench.rule(self.rule_name),
            fixture.profile,
            self.extension,
            self.mode,
            voters=(self.voter,),
        )
        if witness is None:
            return False, "no manipulation found"
        if witness.misreport.order != self.misreport:
            return False, f"found misreport {' > '.join(witness.misreport.order)}"
        # re-validate the gain through the bench comparator
        gain = bench.comparator(self.extension)(
            fixture.profile.ballot(self.voter),
            witness.manipulated_outcome,
            witness.truthful_outcome,
        )
        if gain is not ComparisonOutcome.StrictlyPreferred:
            return False, f"witness does not re-validate (comparison: {gain.value})"
        return True, ""


@dataclass(frozen=True)
class AltSymmetryFact(Fact):
    alt_perm: tuple[tuple[str, str], ...]

    def describe(self) -> str:
        moved = ", ".join(f"{a}->{b}" for a, b in self.alt_perm if a != b)
        return f"relabeling {{{moved}}} maps the profile onto itself"

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        mapping = dict(self.alt_perm)
        relabeled = relabel(fixture.profile, alt_perm=mapping)
        same = sorted(b.order for b in relabeled.ballots) == sorted(
            b.order for b in fixture.profile.ballots
        )
        return same, "relabeled profile is a different multiset of ballots" if not same else ""


@dataclass(frozen=True)
class RemoveVoterYieldsFact(Fact):
    voter: int
    other_fixture: str

    def describe(self) -> str:
        return f"removing voter {self.voter} yields fixture {self.other_fixture!r}"

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        reduced = remove_voter(fixture.profile, self.voter)
        other = fixture_profile(self.other_fixture)
        return reduced == other, "profiles differ"


@dataclass(frozen=True)
class ImprovementPathFact(Fact):
    start_key: str
    max_steps: int
    forbidden: PathTermination

    def describe(self) -> str:
        return (
            f"improvement path from {self.start_key!r} never terminates with "
            f"{self.forbidden.value} within {self.max_steps} steps"
        )

    def holds(self, fixture: Fixture, bench: Bench) -> tuple[bool, str]:
        path = efficiency.improvement_path(
            fixture.profile, fixture.lottery(self.start_key), self.max_steps
        )
        return path.termination is not self.forbidden, f"terminated with {path.termination.value}"


# ---------------------------------------------------------------------------
# the catalog
# ---------------------------------------------------------------------------

def _load_profile_data(name: str) -> Profile:
    path = resources.files("pcvote").joinpath(f"data/fixtures/{DATA_VERSION}/{name}.profile")
    return parse_profile(path.read_text(encoding="utf-8"))


def _alt_perm(profile_names: tuple[str, ...], **moves: str) -> tuple[tuple[str, str], ...]:
    mapping = {x: moves.get(x, x) for x in profile_names}
    return tuple(sorted(mapping.items()))


def _fx_rd_example() -> Fixture:
    profile = _load_profile_data("rd_example")
    alts = profile.alternatives
    lotteries = {
        "rd": Lottery.from_map(alts, {"a": F(3, 5), "b": F(1, 5), "c": F(1, 5)}),
        "deg_a": Lottery.degenerate(alts, "a"),
    }
    facts: tuple[Fact, ...] = (
        TopCountsFact((("a", 3), ("b", 1), ("c", 1))),
        MarginFact("a", "b", 3),
        NeverBottomFact(frozenset({"a"})),
        RuleOutputFact("rd", "rd"),
        RuleOutputFact("f2", "deg_a"),
        DecisivenessViolationFact("rd", axioms.Decisiveness.AbsoluteWinner),
        Pc1DominatorFact("rd", "deg_a"),
        EfficiencyFact(EfficiencyNotion.SD, "rd", True),
        EfficiencyFact(EfficiencyNotion.PC, "rd", False),
        EfficiencyFact(EfficiencyNotion.PC1, "rd", False),
    )
    return Fixture(
        "rd_example",
        profile,
        lotteries,
        facts,
        notes="A strict majority tops a, yet random dictatorship still spreads "
        "probability: SD-efficient but PC- and PC1-inefficient.",
    )


def _fx_ml_manipulation_R() -> Fixture:
    profile = _load_profile_data("ml_manipulation_R")
    alts = profile.alternatives
    lotteries = {
        "ml": Lottery.from_map(alts, {"a": F(3, 5), "b": F(1, 5), "c": F(1, 5)}),
        "uniform": Lottery.uniform(alts),
    }
    facts: tuple[Fact, ...] = (
        MarginFact("a", "b", 1),
        MarginFact("b", "c", 3),
        MarginFact("c", "a", 1),
        CondorcetWinnerFact(None),
        RuleOutputFact("ml", "ml"),
        MaximalLotteryFact("ml", True),
        MaximalLotteryFact("uniform", False),
        ManipulationFact("ml", 4, ("c", "a", "b"), Extension.PC, axioms.Mode.Weak),
    )
    return Fixture(
        "ml_manipulation_R",
        profile,
        lotteries,
        facts,
        notes="Cyclic margins with a unique optimal strategy; voter 4's swap to "
        "c > a > b produces ml_manipulation_Rprime and a strict PC gain.",
    )


def _fx_ml_manipulation_Rprime() -> Fixture:
    profile = _load_profile_data("ml_manipulation_Rprime")
    alts = profile.alternatives
    lotteries = {
        "ml": Lottery.from_map(alts, {"a": F(1, 5), "b": F(1, 5), "c": F(3, 5)}),
    }
    facts: tuple[Fact, ...] = (
        MarginFact("a", "b", 3),
        MarginFact("b", "c", 1),
        MarginFact("c", "a", 1),
        RuleOutputFact("ml", "ml"),
        MaximalLotteryFact("ml", True),
    )
    return Fixture(
        "ml_manipulation_Rprime",
        profile,
        lotteries,
        facts,
        notes="The post-deviation electorate of ml_manipulation_R.",
    )


_CW_GALLERY: dict[str, Optional[str]] = {
    "cw_gallery_R1": None,
    "cw_gallery_R2": "b",
    "cw_gallery_R3": "a",
    "cw_gallery_R4": "d",
    "cw_gallery_R5": None,
    "cw_gallery_R6": "b",
    "cw_gallery_R7": "a",
    "cw_gallery_R8": "c",
}


def _fx_cw_gallery(name: str) -> Fixture:
    profile = _load_profile_data(name)
    alts = profile.alternatives
    winner = _CW_GALLERY[name]
    lotteries = {"uniform": Lottery.uniform(alts)}
    facts: list[Fact] = [CondorcetWinnerFact(winner)]
    if winner is not None:
        lotteries[f"deg_{winner}"] = Lottery.degenerate(alts, winner)
    if name == "cw_gallery_R1":
        facts.append(RuleOutputFact("condorcet-uniform", "uniform"))
    if name == "cw_gallery_R2":
        facts.append(RuleOutputFact("condorcet-uniform", "deg_b"))
    return Fixture(
        name,
        profile,
        lotteries,
        tuple(facts),
        notes="Single-ballot edits of one five-voter electorate make Condorcet "
        "winners appear and move around.",
    )


def _fx_pareto_join_R1() -> Fixture:
    profile = _load_profile_data("pareto_join_R1")
    alts = profile.alternatives
    lotteries = {
        "deg_a": Lottery.degenerate(alts, "a"),
        "uniform_abcd": Lottery.uniform(alts),
        "uniform_bcd": Lottery.uniform(alts, over=("b", "c", "d")),
    }
    facts: tuple[Fact, ...] = (
        TopCountsFact((("a", 6), ("b", 2), ("c", 2), ("d", 0))),
        ParetoDominatedFact(frozenset({"d"})),
        DominatesFact(Extension.PC1, "deg_a", "uniform_abcd"),
        Pc1DominatorFact("uniform_abcd", "deg_a"),
        EfficiencyFact(EfficiencyNotion.ExPost, "uniform_abcd", False),
        AltSymmetryFact(_alt_perm(alts.names, b="c", c="b")),
    )
    return Fixture(
        "pareto_join_R1",
        profile,
        lotteries,
        facts,
        notes="d is Pareto-dominated by a; the b/c relabeling maps the electorate "
        "onto itself.",
    )


def _fx_pareto_join_R2() -> Fixture:
    profile = _load_profile_data("pareto_join_R2")
    facts: tuple[Fact, ...] = (
        TopCountsFact((("a", 6), ("b", 2), ("c", 2), ("d", 1))),
        RemoveVoterYieldsFact(11, "pareto_join_R1"),
        ParetoDominatedFact(frozenset()),
    )
    return Fixture(
        "pareto_join_R2",
        profile,
        {},
        facts,
        notes="One more voter who tops d; with them, nothing is Pareto-dominated "
        "any more.",
    )


def _fx_pareto_join_R3() -> Fixture:
    profile = _load_profile_data("pareto_join_R3")
    alts = profile.alternatives
    lotteries = {
        "deg_a": Lottery.degenerate(alts, "a"),
        "uniform_bcd": Lottery.uniform(alts, over=("b", "c", "d")),
    }
    facts: tuple[Fact, ...] = (
        RemoveVoterYieldsFact(12, "pareto_join_R2"),
        DominatesFact(Extension.PC1, "deg_a", "uniform_bcd"),
        Pc1DominatorFact("uniform_bcd", "deg_a"),
        AltSymmetryFact(_alt_perm(alts.names, b="c", c="b")),
        AltSymmetryFact(_alt_perm(alts.names, c="d", d="c")),
        AltSymmetryFact(_alt_perm(alts.names, b="d", d="b")),
        AltSymmetryFact(_alt_perm(alts.names, b="c", c="d", d="b")),
        AltSymmetryFact(_alt_perm(alts.names, b="d", c="b", d="c")),
    )
    return Fixture(
        "pareto_join_R3",
        profile,
        lotteries,
        facts,
        notes="Twelve voters; every permutation of {b, c, d} maps the electorate "
        "onto itself.",
    )


def _fx_improvement_cycle() -> Fixture:
    profile = _load_profile_data("improvement_cycle")
    alts = profile.alternatives
    lotteries = {
        "p1": Lottery.from_map(alts, {"a": F(1, 2), "b": F(1, 2)}),
        "p2": Lottery.degenerate(alts, "c"),
        "p3": Lottery.from_map(alts, {"d": F(1, 2), "e": F(1, 2)}),
    }
    facts: tuple[Fact, ...] = (
        ParetoDominatedFact(frozenset()),
        SupportFact("p1", frozenset({"a", "b"})),
        DominatesFact(Extension.PC, "p2", "p1"),
        DominatesFact(Extension.PC, "p3", "p2"),
        DominatesFact(Extension.PC, "p1", "p3"),
        EfficiencyFact(EfficiencyNotion.PC, "p1", False),
        EfficiencyFact(EfficiencyNotion.PC, "p2", False),
        EfficiencyFact(EfficiencyNotion.PC, "p3", False),
        ImprovementPathFact("p1", 50, PathTermination.ReachedEfficient),
    )
    return Fixture(
        "improvement_cycle",
        profile,
        lotteries,
        facts,
        notes="PC-dominance cycles: p2 beats p1, p3 beats p2, p1 beats p3, and "
        "none of the three is PC-efficient.",
    )


def _fx_swap_pair_R() -> Fixture:
    profile = _load_profile_data("swap_pair_R")
    facts: tuple[Fact, ...] = (
        CondorcetWinnerFact(None),
        MarginFact("a", "b", 3),
        MarginFact("a", "d", 3),
        MarginFact("b", "c", 1),
        MarginFact("c", "a", 1),
        MarginFact("c", "d", 1),
        MarginFact("d", "b", 3),
    )
    return Fixture(
        "swap_pair_R",
        profile,
        {},
        facts,
        notes="Five voters, no Condorcet winner; swapping c and d inside voter "
        "3's ballot flips exactly the c/d margin (see swap_pair_Rprime).",
    )


def _fx_swap_pair_Rprime() -> Fixture:
    profile = _load_profile_data("swap_pair_Rprime")
    facts: tuple[Fact, ...] = (
        CondorcetWinnerFact(None),
        MarginFact("a", "b", 3),
        MarginFact("a", "d", 3),
        MarginFact("b", "c", 1),
        MarginFact("c", "a", 1),
        MarginFact("d", "c", 1),
        MarginFact("d", "b", 3),
    )
    return Fixture(
        "swap_pair_Rprime",
        profile,
        {},
        facts,
        notes="Twin of swap_pair_R with voter 3's c/d swap applied.",
    )


def _fx_weak_cw_balanced() -> Fixture:
    profile = _load_profile_data("weak_cw_balanced")
    alts = profile.alternatives
    lotteries = {
        "f1": Lottery.from_map(alts, {"a": F(3, 5), "b": F(1, 5), "c": F(1, 5)}),
    }
    facts: tuple[Fact, ...] = (
        CondorcetWinnerFact(None),
        WeakCondorcetFact(frozenset({"a"})),
        RuleOutputFact("f1", "f1"),
    )
    return Fixture(
        "weak_cw_balanced",
        profile,
        lotteries,
        facts,
        notes="Smallest member of the balanced cyclic family weak_cw_family(1, 1): "
        "a is unbeaten but not a Condorcet winner.",
    )


def weak_cw_family(n3: int, n5: int) -> Profile:
    """The balanced cyclic family: n3 + n5 voters report a > b > c, n3 report
    b > c > a and n5 report c > a > b. For positive n3, n5 the unique weak
    Condorcet winner is a and there is no Condorcet winner."""
    if n3 < 1 or n5 < 1:
        raise DomainError("weak_cw_family needs n3 >= 1 and n5 >= 1")
    from .model import profile as make_profile

    orders = (
        [("a", "b", "c")] * (n3 + n5)
        + [("b", "c", "a")] * n3
        + [("c", "a", "b")] * n5
    )
    return make_profile(("a", "b", "c"), orders)


_BUILDERS: dict[str, Callable[[], Fixture]] = {
    "rd_example": _fx_rd_example,
    "ml_manipulation_R": _fx_ml_manipulation_R,
    "ml_manipulation_Rprime": _fx_ml_manipulation_Rprime,
    **{name: (lambda n=name: _fx_cw_gallery(n)) for name in _CW_GALLERY},
    "pareto_join_R1": _fx_pareto_join_R1,
    "pareto_join_R2": _fx_pareto_join_R2,
    "pareto_join_R3": _fx_pareto_join_R3,
    "improvement_cycle": _fx_improvement_cycle,
    "swap_pair_R": _fx_swap_pair_R,
    "swap_pair_Rprime": _fx_swap_pair_Rprime,
    "weak_cw_balanced": _fx_weak_cw_balanced,
}


def fixture_names() -> tuple[str, ...]:
    return tuple(_BUILDERS)


@lru_cache(maxsize=None)
def fixture(name: str) -> Fixture:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise DomainError(
            f"unknown fixture {name!r}; available: {', '.join(fixture_names())}"
        ) from None
    return builder()


def fixture_profile(name: str) -> Profile:
    return fixture(name).profile


def verify_paper_suite(negative_control: Optional[str] = None) -> SuiteReport:
    """Re-verify every recorded fact of every fixture.

    With `negative_control` set to one of the NEGATIVE_CONTROLS keys, one
    core computation is deliberately broken first; a correct suite must
    then report failures."""
    if negative_control is None:
        bench = DEFAULT_BENCH
    else:
        try:
            bench = NEGATIVE_CONTROLS[negative_control]
        except KeyError:
            raise DomainError(
                f"unknown negative control {negative_control!r}; "
                f"available: {', '.join(sorted(NEGATIVE_CONTROLS))}"
            ) from None
    results = []
    for name in fixture_names():
        fx = fixture(name)
        for fact in fx.facts:
            results.append(fact.check(fx, bench))
    return SuiteReport(tuple(results), negative_control)
