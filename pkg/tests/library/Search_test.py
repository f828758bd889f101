import pytest
from hypothesis import given, strategies as st

from algebra_workbench.errors import CapExceeded, InvalidParameter
from algebra_workbench.library.AlgebraClasses import class_by_name, is_member
from algebra_workbench.library.FiniteAlgebra import direct_product, relabel
from algebra_workbench.library.Generators import boolean2, boolean4, make_godel_chain, make_lukasiewicz_chain
from algebra_workbench.library.Search import (
    canonical_form,
    canonical_hash,
    enumerate_class,
    enumerate_lattices,
    is_isomorphic,
    naive_flew_catalog,
)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 5), (6, 15)])
def test_lattice_counts(n, count):
    assert len(enumerate_lattices(n)) == count

@pytest.mark.slow
def test_lattices_on_seven_elements():
    assert len(enumerate_lattices(7)) == 53

def test_lattice_sizes_are_checked():
    with pytest.raises(InvalidParameter):
        enumerate_lattices(0)
    with pytest.raises(CapExceeded):
        enumerate_lattices(8)

def test_lattices_are_pairwise_non_isomorphic():
    lattices = enumerate_lattices(5)
    assert len({canonical_form(lattice) for lattice in lattices}) == len(lattices)
    assert [lattice.name for lattice in lattices] == [f"lattice5_{i}" for i in range(5)]


@pytest.mark.parametrize("n, count", [(2, 1), (3, 2)])
def test_flew_counts(n, count):
    assert len(enumerate_class(class_by_name("flew"), n)) == count

@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3)])
def test_heyting_algebras_are_the_distributive_lattices(n, count):
    algebras = enumerate_class(class_by_name("heyting"), n)
    assert len(algebras) == count
    assert all(is_member(algebra, class_by_name("heyting")) for algebra in algebras)

@pytest.mark.parametrize("n", [2, 3, 4])
def test_pruned_search_agrees_with_the_naive_oracle(n):
    pruned = {canonical_form(a) for a in enumerate_class(class_by_name("flew"), n)}
    naive = {canonical_form(a) for a in naive_flew_catalog(n)}
    assert pruned == naive

def test_enumeration_caps():
    with pytest.raises(CapExceeded):
        enumerate_class(class_by_name("flew"), 7)
    with pytest.raises(CapExceeded):
        naive_flew_catalog(5)
    with pytest.raises(InvalidParameter):
        enumerate_class(class_by_name("fl"), 3)

def test_results_do_not_depend_on_jobs():
    flew = class_by_name("flew")
    assert enumerate_class(flew, 4, jobs=2) == enumerate_class(flew, 4)


def test_isomorphism():
    assert is_isomorphic(direct_product(boolean2(), boolean2()), boolean4())
    assert not is_isomorphic(make_lukasiewicz_chain(3), make_godel_chain(3))
    assert not is_isomorphic(boolean2(), boolean4())

@given(st.permutations(range(5)))
def test_canonical_hash_ignores_labelling(permutation):
    chain = make_lukasiewicz_chain(5)
    relabelled = relabel(chain, permutation)
    assert canonical_hash(relabelled) == canonical_hash(chain)
    assert is_isomorphic(relabelled, chain)
