from typing import Iterator, get_type_hints

import pytest
from hypothesis import given, strategies as st

from algebra_workbench import constants as const
from algebra_workbench.errors import (
    InvalidParameter,
    NotAPartialOrder,
    NotCompatible,
    SignatureMismatch,
    UnboundVariable,
    UnknownSymbol,
)
from algebra_workbench.library.FiniteAlgebra import (
    FL_SIGNATURE,
    LATTICE_SIGNATURE,
    FiniteAlgebra,
    Signature,
    all_valuations,
    direct_product,
    evaluate,
    is_homomorphism,
    order_from_meet,
    product_projections,
    quotient,
    relabel,
    trivial_algebra,
)
from algebra_workbench.library.FormulaParser import parse
from algebra_workbench.library.Generators import make_lukasiewicz_chain
from algebra_workbench.types import Valuation


def test_signature_rejects_duplicates():
    with pytest.raises(InvalidParameter):
        Signature((("f", 2), ("f", 1)))

def test_tables_must_fit_the_carrier():
    with pytest.raises(InvalidParameter):
        FiniteAlgebra("bad", 2, LATTICE_SIGNATURE, ((0, 0, 0, 2),) + ((0, 1, 1, 1), (1,), (0,)))
    with pytest.raises(InvalidParameter):
        FiniteAlgebra("short", 2, LATTICE_SIGNATURE, ((0, 0, 0),) + ((0, 1, 1, 1), (1,), (0,)))


def test_evaluate_lukasiewicz(luk3):
    # x \/ ~x^2 at x = 1/2 is 1
    assert evaluate(luk3, parse("x \\/ ~x^2"), {"x": 1}) == 2
    assert evaluate(luk3, parse("x \\/ ~x"), {"x": 1}) == 1

def test_evaluate_constants(luk3, heyting):
    assert evaluate(luk3, parse("1"), {}) == luk3.constant(const.UNIT)
    assert evaluate(heyting, parse("~~x"), {"x": 1}) == 2

def test_evaluate_errors(luk3):
    with pytest.raises(UnboundVariable):
        evaluate(luk3, parse("x /\\ y"), {"x": 0})
    with pytest.raises(UnknownSymbol):
        evaluate(luk3, parse("[]x"), {"x": 0})


def test_order_of_boolean_four(bool4):
    order = order_from_meet(bool4)
    assert order.leq(0, 1) and order.leq(1, 3) and order.leq(2, 3)
    assert not order.leq(1, 2) and not order.leq(2, 1)
    assert not order.is_chain()

def test_order_of_trivial_algebra():
    order = order_from_meet(trivial_algebra(FL_SIGNATURE))
    assert order.leq(0, 0)

def test_non_commutative_meet_is_rejected():
    # x /\ y := x
    tables = ((0, 0, 1, 1), (0, 1, 1, 1), (1,), (0,))
    algebra = FiniteAlgebra("left", 2, LATTICE_SIGNATURE, tables)
    with pytest.raises(NotAPartialOrder):
        order_from_meet(algebra)


def test_direct_product_and_projections(bool2, luk3):
    product = direct_product(bool2, luk3)
    assert product.size == 6
    first, second = product_projections(bool2, luk3)
    assert is_homomorphism(first, product, bool2)
    assert is_homomorphism(second, product, luk3)

def test_direct_product_needs_one_signature(bool2):
    with pytest.raises(SignatureMismatch):
        direct_product(bool2, trivial_algebra(LATTICE_SIGNATURE))


def test_quotient_of_boolean_four(bool4):
    # the congruence collapsing 0 with b and a with 1
    image = quotient(bool4, (0, 1, 0, 1))
    assert image.size == 2
    assert is_homomorphism((0, 1, 0, 1), bool4, image)

def test_quotient_rejects_non_congruence(luk3):
    with pytest.raises(NotCompatible):
        quotient(luk3, (0, 0, 1))


@given(st.permutations(range(4)))
def test_relabel_is_an_isomorphism(permutation):
    source = make_lukasiewicz_chain(4)
    copy = relabel(source, permutation)
    assert is_homomorphism(permutation, source, copy)

def test_homomorphism_rejects_wrong_maps(luk3, bool2):
    assert not is_homomorphism((0, 0, 1), luk3, bool2)
    assert not is_homomorphism((0, 1), luk3, bool2)
    assert is_homomorphism((0, 1), bool2, make_lukasiewicz_chain(2))


def test_valuations_enumerate_every_assignment():
    valuations = list(all_valuations(("p", "q"), 3))
    assert len(valuations) == 9
    assert {"p": 2, "q": 0} in valuations
    assert get_type_hints(all_valuations)["return"] == Iterator[Valuation]
