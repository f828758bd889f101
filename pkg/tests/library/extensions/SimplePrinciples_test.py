import pytest

from algebra_workbench.errors import InvalidParameter
from algebra_workbench.library.extensions import check_simple_il
from algebra_workbench.library.Principles import ddt_from_cil
from algebra_workbench.library.SchemeFamilies import flew_il
from algebra_workbench.library.Verdict import Status


@pytest.mark.parametrize("fixture", ["luk3", "godel3", "bool4"])
def test_lemma_and_dual_coincide_on_maximal_filters(request, fixture):
    report = check_simple_il(request.getfixturevalue(fixture), None, flew_il())
    assert report.coincide
    assert report.il.status is Status.HOLDS

def test_simple_lemmas_need_a_scheme_family(luk3):
    with pytest.raises(InvalidParameter):
        check_simple_il(luk3, None, ddt_from_cil(flew_il(), "fusion", 3))
