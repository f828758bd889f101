from dataclasses import dataclass

from ...errors import InvalidParameter
from ..FiniteAlgebra import FiniteAlgebra
from ..interfaces.ITranslation import ITranslation
from ..Principles import _lattice, check_dual_il, check_il
from ..SchemeFamilies import SchemeFamily
from ..Verdict import Verdict


@dataclass(frozen=True)
class SimpleILReport:
    """The inconsistency lemma and its dual, both restricted to maximal non-trivial filters."""
    il: Verdict
    dual: Verdict

    @property
    def coincide(self) -> bool:
        return self.il.status is self.dual.status


def check_simple_il(
    algebra: FiniteAlgebra,
    translation: ITranslation | None,
    family: SchemeFamily,
    bound: int | None = None,
    exact: bool = False,
) -> SimpleILReport:
    """Extension of check_il and check_dual_il which only quantifies over maximal non-trivial filters.

    On a maximal filter F, Fg(F u {a}) is trivial exactly when a is outside F, so the two
    checks are expected to coincide for families with singleton member sets.

    Raises:
        InvalidParameter: If the family is not a scheme family.
    """
    if not isinstance(family, SchemeFamily):
        raise InvalidParameter(f"simple inconsistency lemmas need a scheme family, got {family!r}")
    maximal = _lattice(algebra, translation).maximal
    return SimpleILReport(
        check_il(algebra, translation, family, bound, exact, filters=maximal),
        check_dual_il(algebra, translation, family, bound, exact, filters=maximal),
    )
