import json

import pytest

from algebra_workbench import constants as const
from algebra_workbench.errors import InvalidParameter, UnknownClass
from algebra_workbench.library.AlgebraFile import save_algebra
from algebra_workbench.library.Catalog import (
    Catalog,
    build_catalog,
    catalog_from_source,
    load_catalog,
    save_catalog,
    verify_catalog,
)
from algebra_workbench.library.Generators import make_godel_chain


def test_catalog_counts(small_heyting_catalog):
    assert small_heyting_catalog.counts() == {1: 1, 2: 1, 3: 1, 4: 2}
    assert len(small_heyting_catalog.of_size(4)) == 2
    assert verify_catalog(small_heyting_catalog) == ()

def test_save_and_load(tmp_path, small_heyting_catalog):
    path = save_catalog(small_heyting_catalog, tmp_path)
    manifest = json.loads(path.read_text(encoding="utf-8"))
    assert manifest["class"] == "heyting"
    assert manifest["counts"] == {"1": 1, "2": 1, "3": 1, "4": 2}
    loaded = load_catalog(tmp_path)
    assert loaded.algebras == small_heyting_catalog.algebras
    assert catalog_from_source(str(tmp_path)).algebras == loaded.algebras

def test_tampered_entry_is_rejected(tmp_path, small_heyting_catalog):
    save_catalog(small_heyting_catalog, tmp_path)
    victim = small_heyting_catalog.of_size(4)[0]
    save_algebra(make_godel_chain(3), tmp_path / f"{victim.name}{const.ALGEBRA_SUFFIX}")
    with pytest.raises(InvalidParameter):
        load_catalog(tmp_path)

def test_missing_or_broken_manifest(tmp_path):
    with pytest.raises(InvalidParameter):
        load_catalog(tmp_path)
    (tmp_path / const.MANIFEST_NAME).write_text("{not json", encoding="utf-8")
    with pytest.raises(InvalidParameter):
        load_catalog(tmp_path)
    (tmp_path / const.MANIFEST_NAME).write_text(json.dumps({"entries": [{"file": "x.alg"}]}), encoding="utf-8")
    with pytest.raises(InvalidParameter):
        load_catalog(tmp_path)


def test_sources():
    assert [a.size for a in catalog_from_source("luk:max=4")] == [2, 3, 4]
    assert len(catalog_from_source("boolean4")) == 1
    assert catalog_from_source("flew:max=3").counts()[3] == 2
    assert catalog_from_source("flew:min=3,max=3").counts() == {1: 0, 2: 0, 3: 2}

def test_modal_sources_use_boolean_carriers():
    catalog = catalog_from_source("s5:boolean=2")
    assert {a.size for a in catalog} == {2, 4}
    assert verify_catalog(catalog) == ()

def test_excluded_middle_filter():
    # of the two three-element FLew chains only the Lukasiewicz one validates p \/ ~p^2
    catalog = catalog_from_source("flew:n=2,min=3,max=3,lem=pcp")
    assert len(catalog) == 1
    assert catalog.algebra_class == "flew+lem"

def test_bad_sources():
    with pytest.raises(UnknownClass):
        catalog_from_source("zorn:max=3")
    with pytest.raises(InvalidParameter):
        catalog_from_source("luk:max=x")
    with pytest.raises(InvalidParameter):
        catalog_from_source("flew:max=3,lem=middle")

def test_verify_reports_strangers():
    chain = make_godel_chain(3)
    assert verify_catalog(Catalog("boolean", 3, (chain,))) == (chain.name,)

def test_build_is_cached():
    assert build_catalog("flew", 3) is build_catalog("flew", 3)
