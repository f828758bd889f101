import pytest
from hypothesis import HealthCheck, settings

from algebra_workbench.library.Catalog import build_catalog
from algebra_workbench.library.Generators import (
    boolean2,
    boolean4,
    heyting3,
    make_godel_chain,
    make_lukasiewicz_chain,
    s4_boolean4,
    s5_boolean4,
)

settings.register_profile("workbench", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("workbench")


@pytest.fixture
def luk3():
    return make_lukasiewicz_chain(3)

@pytest.fixture
def luk5():
    return make_lukasiewicz_chain(5)

@pytest.fixture
def godel3():
    return make_godel_chain(3)

@pytest.fixture
def heyting():
    return heyting3()

@pytest.fixture
def bool2():
    return boolean2()

@pytest.fixture
def bool4():
    return boolean4()

@pytest.fixture
def s4b4():
    return s4_boolean4()

@pytest.fixture
def s5b4():
    return s5_boolean4()


# catalogs are cached by build_catalog, so the session fixtures only name them
@pytest.fixture(scope="session")
def heyting_catalog():
    return build_catalog("heyting", 6)

@pytest.fixture(scope="session")
def flew_catalog():
    return build_catalog("flew", 5)

@pytest.fixture(scope="session")
def small_heyting_catalog():
    return build_catalog("heyting", 4)
