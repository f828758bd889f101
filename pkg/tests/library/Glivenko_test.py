from fractions import Fraction

import pytest

from algebra_workbench.errors import InvalidParameter, SignatureMismatch
from algebra_workbench.library.Catalog import catalog_from_source
from algebra_workbench.library.FormulaParser import parse
from algebra_workbench.library.Glivenko import (
    GlivenkoPair,
    check_scheme,
    glivenko_check,
    local_glivenko_check,
    luk_implies,
    luk_neg,
    luk_power,
    lukinfty_ddt_countermodel,
    mipc_negation_mismatch,
    pair_by_name,
)
from algebra_workbench.library.Verdict import Status


@pytest.fixture
def boolean_side():
    return catalog_from_source("boolean2")


@pytest.mark.parametrize("text", ["p \\/ ~p", "((p -> q) -> p) -> p", "~~p -> p", "p", "p /\\ ~p"])
def test_double_negation_pair_matches(text, small_heyting_catalog, boolean_side):
    report = glivenko_check(pair_by_name("heyting-boolean"), [], parse(text), weak=small_heyting_catalog, strong=boolean_side)
    assert report.status == "MATCH"
    assert not report.exact_mismatch

def test_weak_validation_is_only_up_to_the_catalog(small_heyting_catalog, boolean_side):
    report = glivenko_check(pair_by_name("heyting-boolean"), [], parse("p \\/ ~p"), weak=small_heyting_catalog, strong=boolean_side)
    assert report.strong.status is Status.HOLDS
    assert report.weak.status is Status.HOLDS_UP_TO_BOUND
    assert report.lines()[2] == "  weak:   VALID-UP-TO-SIZE-4"

def test_identity_scheme_is_an_exact_mismatch(small_heyting_catalog, boolean_side):
    pair = GlivenkoPair("identity", "heyting:max=4", "boolean2", parse("_"))
    report = glivenko_check(pair, [], parse("p \\/ ~p"), weak=small_heyting_catalog, strong=boolean_side)
    assert report.status == "MISMATCH"
    assert report.exact_mismatch
    assert report.to_record()["exact_mismatch"] is True

def test_pairs_and_schemes(luk3):
    with pytest.raises(InvalidParameter):
        GlivenkoPair("no-hole", "heyting:max=4", "boolean2", parse("~~p"))
    with pytest.raises(InvalidParameter):
        pair_by_name("heyting-classical")
    with pytest.raises(SignatureMismatch):
        check_scheme(parse("[]_"), [luk3])


def test_local_glivenko_on_valid_formulas(luk3, godel3):
    assert local_glivenko_check([luk3], [], parse("p \\/ ~p^2")).least == ((1, 1), (2, 1), (3, 1))
    assert local_glivenko_check([godel3], [], parse("p \\/ ~p"), bound=1).least == ((1, 1),)

def test_local_glivenko_without_a_witness(luk3):
    report = local_glivenko_check([luk3], [], parse("p"), bound=2)
    assert report.least == ((1, None), (2, None))
    assert report.lines()[0] == "n=1: NONE-UP-TO-BOUND"
    with pytest.raises(InvalidParameter):
        local_glivenko_check([luk3], [], parse("p"), bound=0)


def test_monadic_negations(s4b4, s5b4):
    assert mipc_negation_mismatch(s5b4) is None
    # []b = b, so ~~[]b = b while ~[]~[]b = ~[]a = T
    assert mipc_negation_mismatch(s4b4) == 2


def test_lukasiewicz_arithmetic():
    assert luk_power(Fraction(3, 4), 2) == Fraction(1, 2)
    assert luk_power(Fraction(3, 4), 0) == 1
    assert luk_implies(Fraction(3, 4), Fraction(1, 2)) == Fraction(3, 4)
    assert luk_neg(Fraction(1, 3)) == Fraction(2, 3)

@pytest.mark.parametrize("n, epsilon, i_max", [(1, Fraction(1, 3), 2), (2, Fraction(1, 3), 2), (3, Fraction(1, 4), 3), (5, Fraction(1, 5), 3)])
def test_lukinfty_certificates(n, epsilon, i_max):
    certificate = lukinfty_ddt_countermodel(n)
    assert certificate.passed
    assert certificate.valuation.epsilon == epsilon
    assert certificate.valuation.i_max == i_max
    assert certificate.conclusion < 1
    assert certificate.lines()[-1] == "certificate: passed"

def test_lukinfty_errors():
    with pytest.raises(InvalidParameter):
        lukinfty_ddt_countermodel(0)
    with pytest.raises(InvalidParameter):
        lukinfty_ddt_countermodel(1).valuation.value("r")
