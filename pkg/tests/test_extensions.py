import itertools
import random
from fractions import Fraction

import pytest

from pcvote import (
    ComparisonOutcome,
    Extension,
    Lottery,
    alternative_set,
    compare,
    dominance_outcomes,
    dominates,
    pc_score,
    profile,
    ranking,
)
from pcvote.extensions import (
    make_pc_comparator,
    outcome_from_score,
    pc1_compare,
    pc_compare,
    sd_compare,
    weakly_prefers,
)
from helpers import random_lottery

F = Fraction
SP = ComparisonOutcome.StrictlyPreferred
IND = ComparisonOutcome.Indifferent
SD_ = ComparisonOutcome.StrictlyDispreferred
INC = ComparisonOutcome.Incomparable

ABC = alternative_set("abc")
R_ABC = ranking(ABC, ("a", "b", "c"))


def lot(*probs):
    return Lottery(ABC, tuple(F(p) if not isinstance(p, tuple) else F(*p) for p in probs))


# ---------------------------------------------------------------------------
# scores
# ---------------------------------------------------------------------------

def test_pc_score_pinned():
    p = lot((1, 2), (1, 2), 0)
    q = lot(0, 0, 1)
    # every outcome of p beats c, half the mass of q's "a beats b" never fires
    assert pc_score(R_ABC, p, q) == 1
    assert pc_score(R_ABC, q, p) == -1


def test_pc_score_zero_cross():
    p = lot((1, 2), 0, (1, 2))
    q = lot(0, 1, 0)
    assert pc_score(R_ABC, p, q) == 0


def test_pc_score_antisymmetric_random():
    rng = random.Random(11)
    for _ in range(80):
        p = random_lottery(rng, ABC)
        q = random_lottery(rng, ABC)
        assert pc_score(R_ABC, p, q) == -pc_score(R_ABC, q, p)
        assert pc_score(R_ABC, p, p) == 0


def test_outcome_from_score():
    assert outcome_from_score(F(1, 7)) is SP
    assert outcome_from_score(F(0)) is IND
    assert outcome_from_score(F(-3)) is SD_


# ---------------------------------------------------------------------------
# the three comparators
# ---------------------------------------------------------------------------

def test_pc_compare_is_complete():
    rng = random.Random(23)
    for _ in range(120):
        p = random_lottery(rng, ABC)
        q = random_lottery(rng, ABC)
        assert pc_compare(R_ABC, p, q) is not INC


def test_pc_degenerate_pairs_follow_the_ranking():
    da, db, dc = (Lottery.degenerate(ABC, x) for x in "abc")
    assert pc_compare(R_ABC, da, db) is SP
    assert pc_compare(R_ABC, db, da) is SD_
    assert pc_compare(R_ABC, db, dc) is SP
    assert pc_compare(R_ABC, da, da) is IND


def test_pc_is_intransitive_somewhere():
    # frozen strict 3-cycle under a single ranking of four alternatives
    # (no cycle exists over three alternatives; this needs m >= 4)
    alts = alternative_set("abcd")
    r = ranking(alts, ("a", "b", "c", "d"))
    p = Lottery(alts, (F(1, 4), F(1, 2), F(0), F(1, 4)))
    q = Lottery(alts, (F(1, 3), F(0), F(2, 3), F(0)))
    s = Lottery(alts, (F(1, 2), F(0), F(1, 6), F(1, 3)))
    assert pc_compare(r, p, q) is SP
    assert pc_compare(r, q, s) is SP
    assert pc_compare(r, s, p) is SP


def test_pc1_incomparable_between_nondegenerate():
    p = lot((1, 2), (1, 2), 0)
    q = lot(0, (1, 2), (1, 2))
    assert pc1_compare(R_ABC, p, q) is INC
    assert pc1_compare(R_ABC, q, p) is INC


def test_pc1_agrees_with_pc_when_degenerate():
    rng = random.Random(31)
    for _ in range(100):
        p = random_lottery(rng, ABC)
        d = Lottery.degenerate(ABC, rng.choice("abc"))
        assert pc1_compare(R_ABC, d, p) is pc_compare(R_ABC, d, p)
        assert pc1_compare(R_ABC, p, d) is pc_compare(R_ABC, p, d)


def test_sd_compare_pinned():
    p = lot((1, 2), (1, 2), 0)
    q = lot((1, 2), 0, (1, 2))
    assert sd_compare(R_ABC, p, q) is SP
    assert sd_compare(R_ABC, q, p) is SD_
    incomparable_pair = (lot((1, 2), 0, (1, 2)), lot(0, 1, 0))
    assert sd_compare(R_ABC, *incomparable_pair) is INC


def test_sd_indifferent_only_for_equal_lotteries():
    rng = random.Random(37)
    for _ in range(150):
        p = random_lottery(rng, ABC)
        q = random_lottery(rng, ABC)
        if sd_compare(R_ABC, p, q) is IND:
            assert p == q
        assert sd_compare(R_ABC, p, p) is IND


def test_sd_strict_implies_pc_strict_sampled():
    # refinement: the SD relation is contained in the PC relation
    rng = random.Random(41)
    for m in (2, 3, 4, 5):
        alts = alternative_set("abcde"[:m])
        orders = list(itertools.permutations(alts.names))
        for _ in range(60):
            r = ranking(alts, rng.choice(orders))
            p = random_lottery(rng, alts)
            q = random_lottery(rng, alts)
            sd = sd_compare(r, p, q)
            pc = pc_compare(r, p, q)
            if sd is SP:
                assert pc is SP
            if sd in (SP, IND):
                assert pc in (SP, IND)


def test_pc1_strict_implies_pc_strict_sampled():
    rng = random.Random(43)
    alts = alternative_set("abcd")
    orders = list(itertools.permutations(alts.names))
    for _ in range(150):
        r = ranking(alts, rng.choice(orders))
        p = random_lottery(rng, alts)
        q = Lottery.degenerate(alts, rng.choice(alts.names))
        if rng.random() < 0.5:
            p, q = q, p
        if pc1_compare(r, p, q) is SP:
            assert pc_compare(r, p, q) is SP


def test_compare_dispatch_and_weak_preference():
    p = lot((1, 2), (1, 2), 0)
    q = lot(0, (1, 2), (1, 2))
    assert compare(Extension.PC, R_ABC, p, q) is pc_compare(R_ABC, p, q)
    assert compare(Extension.PC1, R_ABC, p, q) is INC
    assert compare(Extension.SD, R_ABC, p, q) is sd_compare(R_ABC, p, q)
    assert weakly_prefers(SP) and weakly_prefers(IND)
    assert not weakly_prefers(SD_) and not weakly_prefers(INC)


# ---------------------------------------------------------------------------
# dominance
# ---------------------------------------------------------------------------

def test_dominates_needs_a_strict_voter():
    prof = profile("abc", [("a", "b", "c")] * 3 + [("b", "a", "c"), ("c", "a", "b")])
    uniform = Lottery.uniform(ABC)
    top = Lottery.degenerate(ABC, "a")
    outcomes = dominance_outcomes(prof, Extension.PC, top, uniform)
    assert outcomes == (SP, SP, SP, IND, IND)
    assert dominates(prof, Extension.PC, top, uniform)
    assert not dominates(prof, Extension.PC, uniform, uniform)  # all indifferent
    assert not dominates(prof, Extension.PC, uniform, top)


def test_dominates_fails_on_any_dispreferring_voter():
    prof = profile("abc", [("a", "b", "c"), ("c", "b", "a")])
    da, dc = Lottery.degenerate(ABC, "a"), Lottery.degenerate(ABC, "c")
    assert not dominates(prof, Extension.PC, da, dc)
    assert not dominates(prof, Extension.PC, dc, da)


def test_flipped_score_swaps_strict_outcomes():
    flipped = make_pc_comparator(lambda r, p, q: -pc_score(r, p, q))
    p = lot((1, 2), (1, 2), 0)
    q = lot(0, 0, 1)
    assert pc_compare(R_ABC, p, q) is SP
    assert flipped(R_ABC, p, q) is SD_
    assert flipped(R_ABC, p, p) is IND


def test_lotteries_must_match_profile_alternatives():
    prof = profile("abc", [("a", "b", "c")])
    foreign = Lottery.uniform(alternative_set("xyz"))
    with pytest.raises(Exception):
        dominates(prof, Extension.PC, foreign, Lottery.uniform(ABC))
