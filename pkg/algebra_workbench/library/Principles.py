from dataclasses import dataclass
from typing import Callable, Sequence

from .. import constants as const
from ..errors import InvalidParameter, UnboundedFamily
from ..events import PrincipleChecked, WitnessFound, emit
from ..types import Element, Valuation
from .Congruences import is_semisimple
from .Deduction import (
    DeductiveFilter,
    FilterLattice,
    MatrixFamily,
    consequence,
    filter_lattice,
    translation_for,
)
from .FiniteAlgebra import FiniteAlgebra, all_valuations, compile_formula
from .Formula import Formula, fuse, meet, variables_of
from .interfaces.IDeductionFamily import IDeductionFamily
from .interfaces.ITranslation import ITranslation
from .SchemeFamilies import P, Q, SchemeFamily, expand_scheme, instantiation_for, lem_axiom
from .Verdict import Status, Verdict, Witness

PRINCIPLES = ("il", "dual-il", "simple-il", "ddt", "pcp", "lem")


class _Evaluator:
    """Evaluates formula sets in p (and q) with compiled formulas cached per algebra."""
    def __init__(self, algebra: FiniteAlgebra) -> None:
        self.algebra = algebra
        self._compiled: dict[Formula, Callable[[Valuation], Element]] = {}

    def values(self, formulas: Sequence[Formula], first: Element, second: Element | None = None) -> list[Element]:
        valuation = {const.SCHEME_P: first}
        if second is not None:
            valuation[const.SCHEME_Q] = second
        result = []
        for formula in formulas:
            if formula not in self._compiled:
                self._compiled[formula] = compile_formula(self.algebra, formula)
            result.append(self._compiled[formula](valuation))
        return result


@dataclass(frozen=True)
class _Bound:
    n: int
    exact: bool


def resolve_bound(
    algebra: FiniteAlgebra, family: IDeductionFamily, bound: int | None = None, exact: bool = False
) -> _Bound:
    """Fix the index bound of a check and whether a bounded failure is a real one.

    Without an explicit bound the size of the algebra is used: powers, contractions and
    iterated boxes of an element stop changing within |A| steps, so the verdict is exact.
    A global family is always exact.
    """
    if bound is not None and bound < 1:
        raise InvalidParameter("the index bound must be at least 1")
    if family.is_global:
        return _Bound(1, True)
    n = bound if bound is not None else (family.bound if family.bound is not None else algebra.size)
    return _Bound(n, exact or n >= algebra.size)

def _bounded(family: IDeductionFamily, n: int) -> IDeductionFamily:
    if isinstance(family, (SchemeFamily, ChoiceFamily)):
        return family.bounded(n)
    return family

def _lattice(algebra: FiniteAlgebra, translation: ITranslation | None) -> FilterLattice:
    return filter_lattice(algebra, translation or translation_for(algebra))

def _finish(
    algebra: FiniteAlgebra,
    principle: str,
    family: str,
    bound: _Bound,
    failure: Witness | None,
    bounded_failure: Witness | None,
) -> Verdict:
    if failure is not None:
        verdict = Verdict.fails(failure, bound.n)
        emit(WitnessFound(algebra.name, principle, failure.describe(algebra.labels)))
    elif bounded_failure is not None:
        verdict = Verdict.up_to_bound(bound.n, bounded_failure)
    else:
        verdict = Verdict.holds(bound.n)
    emit(PrincipleChecked(algebra.name, principle, family, bound.n, verdict.status.value))
    return verdict


# Inconsistency lemmas
def _il_scan(
    lattice: FilterLattice,
    filters: Sequence[DeductiveFilter],
    family: IDeductionFamily,
    bound: _Bound,
) -> tuple[Witness | None, Witness | None]:
    algebra = lattice.algebra
    evaluator = _Evaluator(algebra)
    family = _bounded(family, bound.n)
    bounded_failure = None
    for filt in filters:
        for a in algebra.elements:
            trivial = lattice.extend(filt, [a]).is_trivial()
            trace = family.find_member(lambda s: all(filt.contains(v) for v in evaluator.values(s, a)))
            if trace is not None and not trivial:
                return Witness(algebra.name, (("a", a),), filt.mask, trace, "member set in F but Fg(F,a) non-trivial"), None
            if trace is None and trivial:
                witness = Witness(algebra.name, (("a", a),), filt.mask, (bound.n,), "Fg(F,a) trivial but no member set in F")
                if bound.exact:
                    return witness, None
                bounded_failure = bounded_failure or witness
    return None, bounded_failure

def check_il(
    algebra: FiniteAlgebra,
    translation: ITranslation | None,
    family: IDeductionFamily,
    bound: int | None = None,
    exact: bool = False,
    filters: Sequence[DeductiveFilter] | None = None,
) -> Verdict:
    """Over all filters F and elements a: Fg(F u {a}) trivial iff some I_n(a) with n <= N lies in F.

    A member set inside F with Fg(F,a) non-trivial always fails. A trivial Fg(F,a) with no
    member set up to N fails only when the bound is exact; otherwise the verdict is
    HOLDS-UP-TO-BOUND.
    """
    lattice = _lattice(algebra, translation)
    resolved = resolve_bound(algebra, family, bound, exact)
    failure, bounded_failure = _il_scan(lattice, lattice.filters if filters is None else filters, family, resolved)
    return _finish(algebra, "il", family.name, resolved, failure, bounded_failure)

def _dual_il_scan(
    lattice: FilterLattice,
    filters: Sequence[DeductiveFilter],
    family: SchemeFamily,
    bound: _Bound,
) -> tuple[Witness | None, Witness | None]:
    algebra = lattice.algebra
    evaluator = _Evaluator(algebra)
    indices = range(1, 2) if family.is_global else range(1, bound.n + 1)
    bounded_failure = None
    for filt in filters:
        for a in algebra.elements:
            nontrivial_at = next(
                (n for n in indices if not lattice.extend(filt, evaluator.values(family.members(n), a)).is_trivial()),
                None,
            )
            if filt.contains(a) and nontrivial_at is not None:
                return Witness(algebra.name, (("a", a),), filt.mask, (nontrivial_at,), "a in F but Fg(F,I_n(a)) non-trivial"), None
            if not filt.contains(a) and nontrivial_at is None:
                witness = Witness(algebra.name, (("a", a),), filt.mask, (bound.n,), "a not in F but every Fg(F,I_n(a)) trivial")
                if bound.exact:
                    return witness, None
                bounded_failure = bounded_failure or witness
    return None, bounded_failure

def check_dual_il(
    algebra: FiniteAlgebra,
    translation: ITranslation | None,
    family: SchemeFamily,
    bound: int | None = None,
    exact: bool = False,
    filters: Sequence[DeductiveFilter] | None = None,
) -> Verdict:
    """Over all filters F and elements a: a in F iff Fg(F u I_n(a)) is trivial for every n <= N.

    The same check decides the local law of excluded middle for the family.
    """
    lattice = _lattice(algebra, translation)
    resolved = resolve_bound(algebra, family, bound, exact)
    failure, bounded_failure = _dual_il_scan(lattice, lattice.filters if filters is None else filters, family, resolved)
    return _finish(algebra, "dual-il", family.name, resolved, failure, bounded_failure)

check_lem = check_dual_il


# Deduction theorems and proof by cases
def check_ddt(
    algebra: FiniteAlgebra,
    translation: ITranslation | None,
    family: IDeductionFamily,
    bound: int | None = None,
    exact: bool = False,
) -> Verdict:
    """Over all filters F and elements a, b: b in Fg(F u {a}) iff some member set E(a,b) lies in F."""
    lattice = _lattice(algebra, translation)
    resolved = resolve_bound(algebra, family, bound, exact)
    bounded_family = _bounded(family, resolved.n)
    evaluator = _Evaluator(algebra)
    failure = bounded_failure = None
    for filt in lattice.filters:
        for a in algebra.elements:
            extended = lattice.extend(filt, [a])
            for b in algebra.elements:
                trace = bounded_family.find_member(lambda s: all(filt.contains(v) for v in evaluator.values(s, a, b)))
                derivable = extended.contains(b)
                elements = (("a", a), ("b", b))
                if trace is not None and not derivable:
                    failure = Witness(algebra.name, elements, filt.mask, trace, "member set in F but b not in Fg(F,a)")
                elif trace is None and derivable:
                    witness = Witness(algebra.name, elements, filt.mask, (resolved.n,), "b in Fg(F,a) but no member set in F")
                    if resolved.exact:
                        failure = witness
                    else:
                        bounded_failure = bounded_failure or witness
                if failure is not None:
                    return _finish(algebra, "ddt", family.name, resolved, failure, None)
    return _finish(algebra, "ddt", family.name, resolved, None, bounded_failure)

def check_pcp(
    algebra: FiniteAlgebra,
    translation: ITranslation | None,
    join_scheme: Sequence[Formula],
) -> Verdict:
    """Over all filters F and elements a, b: Fg(F u J(a,b)) = Fg(F u {a}) n Fg(F u {b})."""
    lattice = _lattice(algebra, translation)
    evaluator = _Evaluator(algebra)
    for filt in lattice.filters:
        for a in algebra.elements:
            left = lattice.extend(filt, [a]).mask
            for b in algebra.elements:
                joined = lattice.extend(filt, evaluator.values(join_scheme, a, b)).mask
                if joined != left & lattice.extend(filt, [b]).mask:
                    witness = Witness(algebra.name, (("a", a), ("b", b)), filt.mask, (), "Fg(F,J(a,b)) differs from Fg(F,a) n Fg(F,b)")
                    return _finish(algebra, "pcp", "join", _Bound(1, True), witness, None)
    return _finish(algebra, "pcp", "join", _Bound(1, True), None, None)


# Deduction families from classical inconsistency lemmas
@dataclass(frozen=True)
class ChoiceFamily(IDeductionFamily):
    """The deduction family obtained from an inconsistency-lemma family.

    With J_n(q) the n-th member of the base family folded into one formula, the set for the
    index pair (n, m) is the base family's m-th set applied to p (x) J_n(q), where (x) is
    fusion or meet. A choice f picks m = f(n) for every n; a choice lies in F exactly when
    every n admits some m, so membership is checked as "for all n there is m".
    """
    base: SchemeFamily
    shape: str
    name: str
    bound: int | None
    variables: tuple[str, ...] = (const.SCHEME_P, const.SCHEME_Q)

    @property
    def is_global(self) -> bool:
        return self.base.is_global

    def _connect(self, left: Formula, right: Formula) -> Formula:
        return fuse(left, right) if self.shape == "fusion" else meet(left, right)

    def _indices(self) -> range:
        if self.is_global:
            return range(1, 2)
        if self.bound is None:
            raise UnboundedFamily(f"family {self.name} needs a bound")
        return range(1, self.bound + 1)

    def member(self, n: int, m: int) -> tuple[Formula, ...]:
        inner = expand_scheme(self.base, n, Q)
        folded = inner[0]
        for formula in inner[1:]:
            folded = self._connect(folded, formula)
        return expand_scheme(self.base, m, self._connect(P, folded))

    def choice_set(self, choice: Sequence[int]) -> tuple[Formula, ...]:
        """The union of the sets (n, choice[n-1]) over n."""
        return tuple(formula for n, m in enumerate(choice, start=1) for formula in self.member(n, m))

    def find_member(self, accepted: Callable[[tuple[Formula, ...]], bool]) -> tuple[int, ...] | None:
        choice = []
        for n in self._indices():
            m = next((m for m in self._indices() if accepted(self.member(n, m))), None)
            if m is None:
                return None
            choice.append(m)
        return tuple(choice)

    def bounded(self, bound: int) -> "ChoiceFamily":
        return ChoiceFamily(self.base.bounded(bound), self.shape, self.name, bound)


def ddt_from_cil(family: SchemeFamily, shape: str = "fusion", bound: int | None = None) -> ChoiceFamily:
    """Build the two-variable deduction family from a one-variable inconsistency-lemma family.

    For {~p^n} with fusion the sets are {~(p * ~q^n)^m}; for {~[]_n p} with meet they are
    {~[]_m (p /\\ ~[]_n q)}.

    Raises:
        InvalidParameter: If the family is not one-variable or the shape is unknown.
        UnboundedFamily: If a local family comes without a bound.
    """
    if family.arity != 1:
        raise InvalidParameter(f"family {family.name} is not an inconsistency-lemma family")
    if shape not in ("fusion", "meet"):
        raise InvalidParameter(f"unknown conjunction shape {shape!r}; expected 'fusion' or 'meet'")
    effective = bound if bound is not None else family.bound
    if effective is None and not family.is_global:
        raise UnboundedFamily(f"family {family.name} needs a bound to derive a deduction family")
    base = family.bounded(effective) if effective is not None else family
    return ChoiceFamily(base, shape, f"ddt-from:{family.name}", effective)

def default_shape(algebra: FiniteAlgebra) -> str:
    return "meet" if algebra.has(const.BOX) else "fusion"


# LEM axioms
def lem_axiom_failure(algebra: FiniteAlgebra, form: str, class_name: str, n: int) -> Valuation | None:
    """The first valuation at which the class's LEM axiom is not valid, if any."""
    formula = lem_axiom(form, class_name, n)
    modal = form == "box-diamond" or instantiation_for(class_name).modal
    evaluate = compile_formula(algebra, formula)
    unit = algebra.constant(const.UNIT)
    for valuation in all_valuations(variables_of([formula]), algebra.size):
        value = evaluate(valuation)
        valid = value == unit if modal else algebra.apply(const.MEET, unit, value) == unit
        if not valid:
            return valuation
    return None

def check_lem_axiom(algebra: FiniteAlgebra, form: str, class_name: str, n: int) -> bool:
    """Whether the axiom is valid: 1 <= value for FL-style classes, value = 1 for modal ones.

    Raises:
        UnknownInstantiation: If the class has no registered instantiation.
    """
    return lem_axiom_failure(algebra, form, class_name, n) is None

def least_lem_index(algebra: FiniteAlgebra, form: str, class_name: str, n_range: Sequence[int]) -> int | None:
    return next((n for n in n_range if check_lem_axiom(algebra, form, class_name, n)), None)


@dataclass(frozen=True)
class LemCrossEntry:
    algebra: str
    semisimple: bool
    least_n: int | None

    @property
    def agree(self) -> bool:
        return self.semisimple == (self.least_n is not None)


@dataclass(frozen=True)
class LemCrossReport:
    class_name: str
    form: str
    n_range: tuple[int, ...]
    entries: tuple[LemCrossEntry, ...]

    @property
    def discrepancies(self) -> tuple[LemCrossEntry, ...]:
        return tuple(entry for entry in self.entries if not entry.agree)

    @property
    def agree(self) -> bool:
        return not self.discrepancies


def semisimple_vs_lem(
    algebras: Sequence[FiniteAlgebra],
    class_name: str,
    n_range: Sequence[int],
    form: str = "pcp",
) -> LemCrossReport:
    """For every algebra compare semisimplicity with validity of the LEM axiom for some n in range."""
    entries = tuple(
        LemCrossEntry(
            algebra.name,
            is_semisimple(algebra).semisimple,
            least_lem_index(algebra, form, class_name, n_range),
        )
        for algebra in algebras
    )
    return LemCrossReport(class_name, form, tuple(n_range), entries)


# Rules
def check_rule(family: MatrixFamily, gamma: Sequence[Formula], phi: Formula) -> Verdict:
    """Plain validity of the rule gamma / phi over the matrices."""
    return consequence(family, gamma, phi)

def antiadmissible(
    family: MatrixFamily,
    gamma: Sequence[Formula],
    phi: Formula,
    simple_only: bool = False,
) -> Verdict:
    """For every algebra, filter F and valuation v: Fg(F u {v(phi)}) trivial implies Fg(F u v[gamma]) trivial.

    With `simple_only` the filters range over the maximal non-trivial ones only.
    """
    names = variables_of(list(gamma) + [phi])
    seen: set[FiniteAlgebra] = set()
    for matrix in family:
        algebra = matrix.algebra
        if algebra in seen:
            continue
        seen.add(algebra)
        lattice = filter_lattice(algebra, translation_for(algebra))
        premises = [compile_formula(algebra, g) for g in gamma]
        conclusion = compile_formula(algebra, phi)
        filters = lattice.maximal if simple_only else lattice.filters
        for filt in filters:
            for valuation in all_valuations(names, algebra.size):
                if not lattice.extend(filt, [conclusion(valuation)]).is_trivial():
                    continue
                if not lattice.extend(filt, [p(valuation) for p in premises]).is_trivial():
                    witness = Witness(
                        algebra.name, tuple(valuation.items()), filt.mask, (), "Fg(F,phi) trivial but Fg(F,gamma) not"
                    )
                    emit(WitnessFound(algebra.name, "antiadmissible", witness.describe(algebra.labels)))
                    return Verdict.fails(witness)
    return Verdict.holds()


# Dispatch
@dataclass(frozen=True)
class PrincipleCheck:
    principle: str
    family: IDeductionFamily | None = None
    bound: int | None = None
    translation: ITranslation | None = None
    join_scheme: tuple[Formula, ...] = ()
    exact: bool = False

    def __post_init__(self) -> None:
        if self.principle not in PRINCIPLES:
            raise InvalidParameter(f"unknown principle {self.principle!r}; expected one of {PRINCIPLES}")
        if self.bound is not None and self.bound < 1:
            raise InvalidParameter("the index bound must be at least 1")

    def run(self, algebra: FiniteAlgebra) -> Verdict:
        match self.principle:
            case "il":
                return check_il(algebra, self.translation, self.family, self.bound, self.exact)
            case "dual-il" | "lem":
                return check_dual_il(algebra, self.translation, self.family, self.bound, self.exact)
            case "ddt":
                return check_ddt(algebra, self.translation, self.family, self.bound, self.exact)
            case "pcp":
                return check_pcp(algebra, self.translation, self.join_scheme)
            case "simple-il":
                from .extensions.SimplePrinciples import check_simple_il
                report = check_simple_il(algebra, self.translation, self.family, self.bound)
                return report.il if report.il.status is not Status.HOLDS else report.dual
        raise InvalidParameter(f"unknown principle {self.principle!r}")
