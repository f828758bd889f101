import itertools

import pytest

from algebra_workbench.errors import InvalidParameter, UnboundedFamily
from algebra_workbench.library.Deduction import MatrixFamily, filter_lattice
from algebra_workbench.library.FiniteAlgebra import evaluate
from algebra_workbench.library.FormulaParser import parse, parse_list
from algebra_workbench.library.Generators import make_lukasiewicz_chain
from algebra_workbench.library.Principles import (
    PrincipleCheck,
    antiadmissible,
    check_ddt,
    check_dual_il,
    check_il,
    check_lem_axiom,
    check_pcp,
    check_rule,
    ddt_from_cil,
    default_shape,
    lem_axiom_failure,
    least_lem_index,
    resolve_bound,
    semisimple_vs_lem,
)
from algebra_workbench.library.SchemeFamilies import SchemeFamily, classical_il, family_by_name, flew_il, heyting_ddt
from algebra_workbench.library.Verdict import Status

FL_JOIN = parse_list("(1 /\\ p) \\/ (1 /\\ q)")


def test_bound_resolution(luk5):
    assert resolve_bound(luk5, flew_il()).n == 5 and resolve_bound(luk5, flew_il()).exact
    assert not resolve_bound(luk5, flew_il(), 2).exact
    assert resolve_bound(luk5, flew_il(), 2, exact=True).exact
    assert resolve_bound(luk5, classical_il(), 2).n == 1
    with pytest.raises(InvalidParameter):
        resolve_bound(luk5, flew_il(), 0)


def test_heyting_inconsistency_lemma_is_global(godel3, bool4):
    for algebra in (godel3, bool4):
        assert check_il(algebra, None, classical_il()).status is Status.HOLDS

def test_flew_inconsistency_lemma_is_exact_at_the_size(luk3):
    verdict = check_il(luk3, None, flew_il())
    assert verdict.status is Status.HOLDS
    assert verdict.bound == 3

def test_small_bound_is_only_a_bounded_verdict(luk5):
    # (3/4)^n first reaches 0 at n = 4
    verdict = check_il(luk5, None, flew_il(), bound=2)
    assert verdict.status is Status.HOLDS_UP_TO_BOUND
    assert verdict.witness.element("a") == 3
    assert check_il(luk5, None, flew_il(), bound=2, exact=True).failed
    assert check_il(luk5, None, flew_il(), bound=4).status is Status.HOLDS
    assert check_il(luk5, None, flew_il(), bound=4, exact=True).status is Status.HOLDS

def test_missing_member_set_fails_exactly_for_a_global_family(luk3):
    # Fg({1}, 1/2) is trivial but ~(1/2) = 1/2 is not designated
    verdict = check_il(luk3, None, classical_il())
    assert verdict.failed
    assert verdict.witness.element("a") == 1

def test_member_set_in_a_filter_with_nontrivial_extension_fails(luk3):
    tautology = SchemeFamily("tautology", ("p",), lambda n: (parse("p -> p"),), is_global=True)
    verdict = check_il(luk3, None, tautology)
    assert verdict.failed
    assert verdict.witness.element("a") == 2
    assert verdict.witness.note.startswith("member set in F")


def test_dual_lemma_tracks_semisimplicity(luk3, godel3, bool4):
    assert check_dual_il(luk3, None, flew_il()).status is Status.HOLDS
    assert check_dual_il(bool4, None, flew_il()).status is Status.HOLDS
    verdict = check_dual_il(godel3, None, flew_il())
    assert verdict.failed
    assert verdict.witness.element("a") == 1


def test_heyting_deduction_theorem(godel3, bool4):
    for algebra in (godel3, bool4):
        assert check_ddt(algebra, None, heyting_ddt()).status is Status.HOLDS

def test_flew_deduction_theorem_on_lukasiewicz(luk3):
    assert check_ddt(luk3, None, family_by_name("flew-ddt")).status is Status.HOLDS

def test_deduction_theorem_with_wrong_family_fails(luk3):
    # p -> q is not a deduction term for the three-element chain
    verdict = check_ddt(luk3, None, heyting_ddt())
    assert verdict.failed

def test_proof_by_cases(godel3, luk3):
    assert check_pcp(godel3, None, FL_JOIN).status is Status.HOLDS
    assert check_pcp(luk3, None, FL_JOIN).status is Status.HOLDS

def test_proof_by_cases_fails_for_a_meet_scheme(bool4):
    assert check_pcp(bool4, None, parse_list("p /\\ q")).failed


def test_ddt_from_cil_members():
    family = ddt_from_cil(flew_il(), "fusion", 3)
    assert family.member(2, 1) == (parse("~(p * ~q^2)^1"),)
    assert family.find_member(lambda members: True) == (1, 1, 1)
    assert family.choice_set((1, 2)) == family.member(1, 1) + family.member(2, 2)

def test_ddt_from_cil_errors():
    with pytest.raises(InvalidParameter):
        ddt_from_cil(heyting_ddt())
    with pytest.raises(InvalidParameter):
        ddt_from_cil(flew_il(), "or", 3)
    with pytest.raises(UnboundedFamily):
        ddt_from_cil(flew_il())

def test_default_shape(s4b4, luk3):
    assert default_shape(s4b4) == "meet"
    assert default_shape(luk3) == "fusion"


def test_lem_axiom_on_lukasiewicz(luk3):
    assert not check_lem_axiom(luk3, "pcp", "flew", 1)
    assert lem_axiom_failure(luk3, "pcp", "flew", 1) == {"p": 1}
    assert check_lem_axiom(luk3, "pcp", "flew", 2)
    assert least_lem_index(luk3, "pcp", "flew", range(1, 6)) == 2

def test_godel_chain_validates_no_excluded_middle(godel3):
    assert least_lem_index(godel3, "pcp", "flew", range(1, 6)) is None

def test_lem_cross_check(luk3, godel3, bool4):
    report = semisimple_vs_lem([luk3, godel3, bool4], "flew", range(1, 6))
    assert report.agree
    assert [entry.least_n for entry in report.entries] == [2, None, 1]

@pytest.mark.parametrize("k", range(2, 8))
def test_lukasiewicz_excluded_middle_index(k):
    chain = make_lukasiewicz_chain(k)
    assert least_lem_index(chain, "pcp", "flew", range(1, 8)) == k - 1


def test_antiadmissible_rules(small_heyting_catalog):
    family = MatrixFamily.from_algebras(small_heyting_catalog.algebras)
    excluded_middle = parse("p \\/ ~p")
    assert antiadmissible(family, [], excluded_middle).status is Status.HOLDS
    assert check_rule(family, [], excluded_middle).failed
    assert antiadmissible(family, [parse("~~p")], parse("p")).status is Status.HOLDS
    verdict = antiadmissible(family, [], parse("B"))
    assert verdict.failed and verdict.witness is not None

def test_antiadmissible_on_maximal_filters(small_heyting_catalog):
    family = MatrixFamily.from_algebras(small_heyting_catalog.algebras)
    assert antiadmissible(family, [], parse("p \\/ ~p"), simple_only=True).status is Status.HOLDS


def test_principle_dispatch(luk3):
    assert PrincipleCheck("il", flew_il()).run(luk3).status is Status.HOLDS
    assert PrincipleCheck("lem", flew_il()).run(luk3).status is Status.HOLDS
    assert PrincipleCheck("pcp", join_scheme=FL_JOIN).run(luk3).status is Status.HOLDS
    assert PrincipleCheck("simple-il", flew_il()).run(luk3).status is Status.HOLDS
    with pytest.raises(InvalidParameter):
        PrincipleCheck("modus-ponens")
    with pytest.raises(InvalidParameter):
        PrincipleCheck("il", flew_il(), bound=0)


def test_derived_members_in_a_filter_make_the_premises_inconsistent(luk3):
    family = ddt_from_cil(flew_il(), "fusion", 3)
    lattice = filter_lattice(luk3)
    for filt in lattice.filters:
        for a, b in itertools.product(luk3.elements, repeat=2):
            for n, m in itertools.product(range(1, 4), repeat=2):
                (member,) = family.member(n, m)
                if filt.contains(evaluate(luk3, member, {"p": a, "q": b})):
                    negated = evaluate(luk3, parse(f"~q^{n}"), {"q": b})
                    assert lattice.extend(filt, [a, negated]).is_trivial()

def test_modal_ddt_from_cil(s5b4, s4b4):
    family = ddt_from_cil(family_by_name("s4-il"), default_shape(s5b4))
    assert check_ddt(s5b4, None, family).status is Status.HOLDS
    # F = {1}, a = 1, b = b: ~[](1 /\ ~[]b) = 1 although b is outside Fg(F, 1) = F
    assert check_ddt(s4b4, None, family).failed
