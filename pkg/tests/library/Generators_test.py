from fractions import Fraction

import pytest

from algebra_workbench import constants as const
from algebra_workbench.errors import InvalidParameter, InvalidPartition
from algebra_workbench.library.AlgebraClasses import class_by_name, is_member
from algebra_workbench.library.FiniteAlgebra import LATTICE_SIGNATURE, trivial_algebra
from algebra_workbench.library.Generators import (
    boolean4,
    generator_by_name,
    heyting3,
    join_irreducibles,
    make_boolean,
    make_godel_chain,
    make_lukasiewicz_chain,
    make_monadic,
    with_modalities,
)


@pytest.mark.parametrize("k", range(2, 8))
def test_chains_are_in_their_classes(k):
    assert is_member(make_lukasiewicz_chain(k), class_by_name("mv"))
    assert is_member(make_godel_chain(k), class_by_name("godel"))

def test_lukasiewicz_operations_on_labels():
    chain = make_lukasiewicz_chain(5)
    value = lambda x: Fraction(chain.labels[x])
    for x in chain.elements:
        for y in chain.elements:
            assert value(chain.apply(const.FUSION, x, y)) == max(Fraction(0), value(x) + value(y) - 1)
            assert value(chain.apply(const.LEFT_RESIDUAL, x, y)) == min(Fraction(1), 1 - value(x) + value(y))

@pytest.mark.parametrize("atoms", [1, 2, 3])
def test_boolean_algebras(atoms):
    algebra = make_boolean(atoms)
    assert algebra.size == 2 ** atoms
    assert is_member(algebra, class_by_name("boolean"))

def test_invalid_sizes():
    with pytest.raises(InvalidParameter):
        make_lukasiewicz_chain(1)
    with pytest.raises(InvalidParameter):
        make_boolean(0)


def test_join_irreducibles():
    assert join_irreducibles(boolean4()) == (1, 2)
    assert join_irreducibles(heyting3()) == (1, 2)

def test_monadic_from_singleton_clusters_is_the_identity_box():
    algebra = make_monadic(boolean4(), [[1], [2]])
    assert algebra.table(const.BOX) == (0, 1, 2, 3)
    assert is_member(algebra, class_by_name("mipc"))

def test_monadic_on_a_chain():
    algebra = make_monadic(heyting3(), [[1, 2]])
    # []x is 0 below the top, <>x is 1 above the bottom
    assert algebra.table(const.BOX) == (0, 0, 2)
    assert algebra.table(const.DIAMOND) == (0, 2, 2)

def test_clusters_must_partition_the_irreducibles():
    with pytest.raises(InvalidPartition):
        make_monadic(boolean4(), [[1]])
    with pytest.raises(InvalidPartition):
        make_monadic(boolean4(), [[1, 2], [2]])

def test_modalities_need_the_fl_signature():
    with pytest.raises(InvalidParameter):
        with_modalities(trivial_algebra(LATTICE_SIGNATURE), (0,))

def test_dual_diamond_on_a_boolean_base(s4b4):
    assert s4b4.table(const.DIAMOND) == (0, 1, 3, 3)


@pytest.mark.parametrize(
    "token, size",
    [("boolean2", 2), ("boolean8", 8), ("luk4", 4), ("godel5", 5), ("heyting3", 3), ("s5boolean4", 4)],
)
def test_generator_tokens(token, size):
    assert generator_by_name(token).size == size

@pytest.mark.parametrize("token", ["boolean6", "boolean1", "zorn3", "luk"])
def test_unknown_generator_tokens(token):
    with pytest.raises(InvalidParameter):
        generator_by_name(token)
