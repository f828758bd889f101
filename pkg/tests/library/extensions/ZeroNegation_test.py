from algebra_workbench.library.extensions import zero_negation_conditions
from algebra_workbench.library.extensions.ZeroNegation import (
    CLASSICAL_THEOREMS,
    ZERO_RULE,
    comparison_pairs,
    glivenko_pair_matches,
    zero_lemma_holds,
)
from algebra_workbench.library.FormulaParser import parse


def test_godel_chain_meets_both_conditions(godel3):
    report = zero_negation_conditions([godel3])
    assert zero_lemma_holds(godel3)
    assert report.condition and report.glivenko and report.agree
    assert report.mismatch is None

def test_lukasiewicz_chain_fails_both(luk3):
    report = zero_negation_conditions([luk3])
    assert not report.condition
    assert not report.glivenko
    assert report.agree
    assert report.mismatch == "|- p \\/ !p"
    assert report.lines()[-1] == "conditions hold: False; Glivenko with !!_ matches: False"


def test_comparison_pairs_include_the_zero_rule_and_a_seeded_sample(godel3):
    pairs = comparison_pairs(seed=7, sample=5)
    assert len(pairs) == len(CLASSICAL_THEOREMS) + 1 + 5
    assert ((ZERO_RULE[0],), parse("p \\ q")) in pairs
    assert all(len(gamma) == 1 for gamma, _ in pairs[len(CLASSICAL_THEOREMS):])
    assert pairs == comparison_pairs(seed=7, sample=5)
    assert zero_negation_conditions([godel3], seed=7, sample=5).compared == len(pairs)

def test_rules_with_premises_are_compared(godel3, luk3):
    # proof by cases on p: classically valid, but q = 1/2 designates both premises in Ł3
    gamma = [parse("p \\ q"), parse("!p \\ q")]
    assert not glivenko_pair_matches([luk3], gamma, parse("q"))
    assert glivenko_pair_matches([godel3], gamma, parse("q"))
    assert glivenko_pair_matches([luk3], [ZERO_RULE[0]], parse("p \\ q"))

def test_sampled_rules_match_on_heyting_chains(godel3):
    report = zero_negation_conditions([godel3], seed=11, sample=40)
    assert report.glivenko
    assert report.compared == len(CLASSICAL_THEOREMS) + 1 + 40
