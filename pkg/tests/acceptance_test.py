"""End-to-end properties over generated chains and enumerated catalogs."""
import random

import pytest

from algebra_workbench.library.AlgebraClasses import class_by_name, is_member, validates
from algebra_workbench.library.Catalog import build_catalog, catalog_from_source
from algebra_workbench.library.Congruences import is_semisimple
from algebra_workbench.library.Deduction import MatrixFamily
from algebra_workbench.library.FiniteAlgebra import all_valuations, evaluate
from algebra_workbench.library.Formula import random_formula
from algebra_workbench.library.FormulaParser import parse
from algebra_workbench.library.Generators import make_lukasiewicz_chain
from algebra_workbench.library.Glivenko import glivenko_check, lukinfty_ddt_countermodel, mipc_negation_mismatch, pair_by_name
from algebra_workbench.library.Principles import antiadmissible, check_ddt, check_dual_il, check_il, check_rule, ddt_from_cil
from algebra_workbench.library.SchemeFamilies import classical_il, flew_il
from algebra_workbench.library.Verdict import Status

CURATED = (
    "((p -> q) -> p) -> p",
    "p \\/ ~p",
    "~~p -> p",
    "(p -> q) \\/ (q -> p)",
    "~p \\/ ~~p",
    "((p -> q) -> q) -> ((q -> p) -> p)",
    "(~p -> p) -> p",
    "(p -> q) -> (~p \\/ q)",
    "~(p /\\ q) -> (~p \\/ ~q)",
    "p -> p",
    "p /\\ ~p",
    "p",
    "(p -> q) -> (~q -> ~p)",
)


def _semisimple(algebra):
    return is_semisimple(algebra).semisimple


@pytest.mark.parametrize("k", range(2, 8))
def test_lukasiewicz_chains(k):
    chain = make_lukasiewicz_chain(k)
    assert is_semisimple(chain).simple
    for n in range(1, 8):
        assert validates(chain, parse(f"x \\/ ~x^{n}"), parse("T")) == (n >= k - 1)

def test_three_element_chain_needs_the_square():
    chain = make_lukasiewicz_chain(3)
    assert not validates(chain, parse("x \\/ ~x"), parse("T"))
    assert validates(chain, parse("x \\/ ~x^2"), parse("T"))


@pytest.mark.slow
def test_heyting_semisimple_iff_boolean(heyting_catalog):
    for algebra in heyting_catalog:
        assert _semisimple(algebra) == validates(algebra, parse("x \\/ ~x"), parse("T")), algebra.name

@pytest.mark.slow
def test_s4_semisimple_iff_s5():
    for algebra in catalog_from_source("s4:boolean=3"):
        assert _semisimple(algebra) == validates(algebra, parse("x"), parse("[]<>x"), "inequality"), algebra.name

@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2])
def test_flen_semisimple_iff_excluded_middle(n):
    axiom = parse(f"(1 /\\ x) \\/ (1 /\\ ~(1 /\\ x)^{n})")
    for algebra in build_catalog(f"flen:n={n}", 5):
        assert _semisimple(algebra) == validates(algebra, parse("1"), axiom, "inequality"), algebra.name


@pytest.mark.slow
def test_inconsistency_lemmas_are_exact(flew_catalog, heyting_catalog):
    for algebra in flew_catalog:
        assert check_il(algebra, None, flew_il(), algebra.size).status is Status.HOLDS, algebra.name
    for algebra in heyting_catalog:
        assert check_il(algebra, None, classical_il()).status is Status.HOLDS, algebra.name

@pytest.mark.slow
def test_dual_lemma_iff_semisimple(flew_catalog):
    for algebra in flew_catalog:
        dual = check_dual_il(algebra, None, flew_il(), algebra.size)
        assert (dual.status is Status.HOLDS) == _semisimple(algebra), algebra.name


@pytest.mark.slow
@pytest.mark.parametrize("text", CURATED)
def test_glivenko_curated(text):
    report = glivenko_check(pair_by_name("heyting-boolean"), [], parse(text))
    assert report.status == "MATCH", text

@pytest.mark.slow
def test_glivenko_sampled():
    pair = pair_by_name("heyting-boolean")
    weak, strong = catalog_from_source(pair.weak), catalog_from_source(pair.strong)
    rng = random.Random(20240517)
    for _ in range(500):
        phi = random_formula(rng, 8)
        assert not glivenko_check(pair, [], phi, weak=weak, strong=strong).exact_mismatch


@pytest.mark.slow
def test_monadic_heyting_algebras():
    ws5 = class_by_name("ws5")
    for algebra in build_catalog("mipc", 6):
        assert mipc_negation_mismatch(algebra) is None, algebra.name
        assert _semisimple(algebra) == is_member(algebra, ws5), algebra.name


def test_ddt_from_cil_on_lukasiewicz():
    chain = make_lukasiewicz_chain(5)
    family = ddt_from_cil(flew_il(), "fusion", 5)
    assert check_ddt(chain, None, family, 5).status is Status.HOLDS

@pytest.mark.parametrize("k", range(2, 8))
def test_derived_terms_are_multiples_of_implications(k):
    chain = make_lukasiewicz_chain(k)
    family = ddt_from_cil(flew_il(), "fusion", 3)
    for n in range(1, 4):
        for m in range(1, 4):
            (derived,) = family.member(n, m)
            expected = parse(f"{m}.(p -> q^{n})")
            for valuation in all_valuations(("p", "q"), chain.size):
                assert evaluate(chain, derived, valuation) == evaluate(chain, expected, valuation)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_lukinfty_countermodels(n):
    certificate = lukinfty_ddt_countermodel(n)
    assert certificate.passed
    assert certificate.conclusion < 1


@pytest.mark.slow
def test_antiadmissible_rules_over_heyting(heyting_catalog):
    family = MatrixFamily.from_algebras(heyting_catalog.algebras)
    for gamma, phi in (([parse("~~p")], parse("p")), ([], parse("p \\/ ~p"))):
        assert antiadmissible(family, gamma, phi).status is Status.HOLDS
        assert check_rule(family, gamma, phi).failed
    verdict = antiadmissible(family, [], parse("B"))
    assert verdict.failed and verdict.witness is not None
