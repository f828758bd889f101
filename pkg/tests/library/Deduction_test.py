from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from algebra_workbench import constants as const
from algebra_workbench.errors import InvalidParameter
from algebra_workbench.library import BitsetUtils
from algebra_workbench.library.Deduction import (
    FL_TRANSLATION,
    MODAL_TRANSLATION,
    MatrixFamily,
    all_filters,
    antitheorem_by_fresh_variable,
    consequence,
    filter_generated,
    filter_lattice,
    fresh_variable,
    is_antitheorem,
    translation_by_style,
    translation_for,
)
from algebra_workbench.library.FiniteAlgebra import quotient
from algebra_workbench.library.FormulaParser import parse, parse_list
from algebra_workbench.library.Generators import (
    boolean2,
    boolean4,
    heyting3,
    make_godel_chain,
    make_lukasiewicz_chain,
    s4_boolean4,
)
from algebra_workbench.library.Verdict import Status
from algebra_workbench.library.interfaces.ITranslation import ITranslation


def _masks(filters):
    return {f.mask for f in filters}


def test_filters_of_boolean_four():
    # {1}, up-sets of the two atoms, everything
    assert _masks(all_filters(boolean4())) == {0b1000, 0b1010, 0b1100, 0b1111}

def test_filters_of_godel_chain():
    assert _masks(all_filters(heyting3())) == {0b100, 0b110, 0b111}

def test_modal_filters_are_closed_under_box():
    masks = _masks(all_filters(s4_boolean4(), MODAL_TRANSLATION))
    assert masks == {0b1000, 0b1100, 0b1111}

def test_translations_by_algebra_and_style(s4b4, luk3):
    assert translation_for(s4b4) is MODAL_TRANSLATION
    assert translation_for(luk3) is FL_TRANSLATION
    assert translation_by_style("fl") is FL_TRANSLATION
    with pytest.raises(InvalidParameter):
        translation_by_style("kripke")

@pytest.mark.parametrize("fixture, translation", [("luk3", FL_TRANSLATION), ("s4b4", MODAL_TRANSLATION)])
def test_least_filter_is_where_the_term_reaches_the_unit(request, fixture, translation):
    algebra = request.getfixturevalue(fixture)
    unit = algebra.constant(const.UNIT)
    expected = tuple(a for a in algebra.elements if translation.term(algebra, a) == unit)
    assert filter_lattice(algebra, translation).least.elements == expected == (unit,)
    assert ITranslation.__abstractmethods__ == frozenset({"term"})


@given(st.sets(st.integers(0, 4)), st.sets(st.integers(0, 4)))
def test_generated_filter_is_a_closure(first, second):
    algebra = make_godel_chain(5)
    lattice = filter_lattice(algebra)
    small = filter_generated(algebra, FL_TRANSLATION, first)
    large = filter_generated(algebra, FL_TRANSLATION, first | second)
    assert BitsetUtils.is_subset(BitsetUtils.mask_of(first), small.mask)
    assert BitsetUtils.is_subset(small.mask, large.mask)
    assert lattice.generated(small.mask).mask == small.mask
    assert small.mask in _masks(lattice.filters)

def test_generated_filter_checks_the_carrier():
    with pytest.raises(InvalidParameter):
        filter_generated(boolean2(), None, [3])

def test_lukasiewicz_filters_are_trivial_once_below_one():
    lattice = filter_lattice(make_lukasiewicz_chain(4))
    assert lattice.generated(BitsetUtils.mask_of([2])).is_trivial()
    assert [f.mask for f in lattice.maximal] == [0b1000]


def test_consequence_over_boolean(bool2):
    family = MatrixFamily.from_algebras([bool2])
    assert consequence(family, [], parse("p \\/ ~p")).status is Status.HOLDS
    assert consequence(family, parse_list("p; p -> q"), parse("q")).status is Status.HOLDS

def test_consequence_fails_with_a_replayable_witness(heyting):
    family = MatrixFamily.from_algebras([heyting])
    verdict = consequence(family, [], parse("p \\/ ~p"))
    assert verdict.failed
    p = verdict.witness.element("p")
    assert heyting.apply("\\/", p, heyting.apply("\\", p, 0)) != 2

def test_designation_policies(heyting):
    assert len(MatrixFamily.from_algebras([heyting], "all")) == 3
    with pytest.raises(InvalidParameter):
        MatrixFamily.from_algebras([heyting], "file")
    with pytest.raises(InvalidParameter):
        MatrixFamily.from_algebras([heyting], "every")

def test_file_policy_needs_a_filter(bool4):
    assert MatrixFamily.from_algebras([replace(bool4, designated=(1, 3))], "file").matrices[0].filter == 0b1010
    with pytest.raises(InvalidParameter):
        MatrixFamily.from_algebras([replace(bool4, designated=(1,))], "file")


def test_antitheorems(luk3):
    family = MatrixFamily.from_algebras([luk3], "all")
    assert not is_antitheorem(family, parse_list("p /\\ ~p")).failed
    assert is_antitheorem(family, parse_list("p")).failed
    assert not is_antitheorem(family, parse_list("B")).failed
    assert not antitheorem_by_fresh_variable(family, parse_list("B")).failed

def test_fresh_variable_avoids_taken_names():
    assert fresh_variable(parse_list("p; p1")).name == "p2"
    assert fresh_variable(parse_list("q")).name == "p"

def test_trivial_algebra_designates_everything():
    trivial = quotient(boolean2(), (0, 0))
    family = MatrixFamily.from_algebras([trivial])
    assert family.matrices[0].is_trivial()
    assert not is_antitheorem(family, parse_list("B")).failed
