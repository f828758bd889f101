from dataclasses import dataclass, field
from typing import Callable, Sequence

from .. import constants as const
from ..errors import SignatureMismatch, UnknownClass
from ..events import MembershipChecked, WitnessFound, emit
from ..types import Valuation
from .FiniteAlgebra import (
    FL_SIGNATURE,
    MODAL_SIGNATURE,
    FiniteAlgebra,
    Signature,
    all_valuations,
    compile_formula,
)
from .Formula import Formula, variables_of
from .FormulaParser import parse
from .SchemeFamilies import parse_token

# Structs
@dataclass(frozen=True)
class Law:
    """An equation, an inequality or a quasi-inequality over the class signature.

    A quasi-inequality holds when every valuation satisfying all premises satisfies the
    conclusion; premises and conclusions are pairs (lhs, rhs) read as lhs <= rhs.
    """
    label: str
    kind: str  # "equation" | "inequality" | "quasi"
    lhs: Formula
    rhs: Formula
    premises: tuple[tuple[Formula, Formula], ...] = ()

    @property
    def variables(self) -> tuple[str, ...]:
        formulas = [self.lhs, self.rhs] + [side for pair in self.premises for side in pair]
        return variables_of(formulas)


@dataclass(frozen=True)
class AlgebraClass:
    """A quasivariety given by its signature and laws.

    `tags` describe the structure the enumerator may rely on (`commutative`, `integral`,
    `heyting`, `boolean`, `prelinear`, `divisible`, `involutive`, `contraction=N`); `modal`
    selects value-equals-one validity instead of one-below-value.
    """
    name: str
    signature: Signature
    laws: tuple[Law, ...]
    modal: bool = False
    tags: frozenset[str] = field(default_factory=frozenset)

    def law(self, label: str) -> Law:
        for law in self.laws:
            if law.label == label:
                return law
        raise KeyError(label)

    def has_tag(self, tag: str) -> bool:
        return tag in self.tags

    def contraction(self) -> int | None:
        for tag in self.tags:
            if tag.startswith("contraction="):
                return int(tag.partition("=")[2])
        return None


@dataclass(frozen=True)
class ClassReport:
    algebra: str
    algebra_class: str
    failures: tuple[tuple[str, Valuation], ...]

    @property
    def verdict(self) -> bool:
        return not self.failures

    def lines(self, algebra: FiniteAlgebra | None = None) -> list[str]:
        def show(valuation: Valuation) -> str:
            if algebra is not None:
                return algebra.valuation_text(valuation)
            return " ".join(f"{k}={v}" for k, v in sorted(valuation.items()))
        return [f"FAIL {label} {show(valuation)}".rstrip() for label, valuation in self.failures]


# Law constructors
def _eq(label: str, lhs: str, rhs: str) -> Law:
    return Law(label, "equation", parse(lhs), parse(rhs))

def _le(label: str, lhs: str, rhs: str) -> Law:
    return Law(label, "inequality", parse(lhs), parse(rhs))

def _quasi(label: str, premises: Sequence[tuple[str, str]], conclusion: tuple[str, str]) -> Law:
    return Law(
        label,
        "quasi",
        parse(conclusion[0]),
        parse(conclusion[1]),
        tuple((parse(lhs), parse(rhs)) for lhs, rhs in premises),
    )


LATTICE_LAWS = (
    _eq("meet-commutative", "x /\\ y", "y /\\ x"),
    _eq("join-commutative", "x \\/ y", "y \\/ x"),
    _eq("meet-associative", "(x /\\ y) /\\ z", "x /\\ (y /\\ z)"),
    _eq("join-associative", "(x \\/ y) \\/ z", "x \\/ (y \\/ z)"),
    _eq("meet-absorption", "x /\\ (x \\/ y)", "x"),
    _eq("join-absorption", "x \\/ (x /\\ y)", "x"),
    _eq("top", "x /\\ T", "x"),
    _eq("bottom", "x \\/ B", "x"),
)
MONOID_LAWS = (
    _eq("fusion-associative", "(x * y) * z", "x * (y * z)"),
    _eq("left-unit", "1 * x", "x"),
    _eq("right-unit", "x * 1", "x"),
)
# x <= z/y  <=>  x*y <= z  <=>  y <= x\z, as three cyclic implications
RESIDUATION_LAWS = (
    _quasi("residuation-right", [("x", "z / y")], ("x * y", "z")),
    _quasi("residuation-fusion", [("x * y", "z")], ("y", "x \\ z")),
    _quasi("residuation-left", [("y", "x \\ z")], ("x", "z / y")),
)
FL_LAWS = LATTICE_LAWS + MONOID_LAWS + RESIDUATION_LAWS
COMMUTATIVITY = (_eq("fusion-commutative", "x * y", "y * x"),)
# the zero stays a free constant; generators and the enumeration set it to the bottom
INTEGRALITY = (_eq("integral", "1", "T"),)
CONTRACTION = (_le("contraction", "x", "x * x"),)
EXCLUDED_MIDDLE = (_eq("excluded-middle", "x \\/ ~x", "T"),)
PRELINEARITY = (_eq("prelinearity", "(x -> y) \\/ (y -> x)", "1"),)
DIVISIBILITY = (_eq("divisibility", "x /\\ y", "x * (x -> y)"),)
INVOLUTION = (_eq("involution", "~~x", "x"),)

BOX_LAWS = (
    _eq("box-meet", "[](x /\\ y)", "[]x /\\ []y"),
    _eq("box-top", "[]T", "T"),
)
DIAMOND_DUALITY = (_eq("diamond-dual", "<>x", "~[]~x"),)
DIAMOND_LAWS = (
    _eq("diamond-join", "<>(x \\/ y)", "<>x \\/ <>y"),
    _eq("diamond-bottom", "<>B", "B"),
    _le("box-diamond-interaction", "[](x -> y)", "<>x -> <>y"),
)
FISCHER_SERVI = (_le("fischer-servi", "<>x -> []y", "[](x -> y)"),)
INTERIOR_LAWS = (_le("box-deflationary", "[]x", "x"), _le("box-transitive", "[]x", "[][]x"))
CLOSURE_LAWS = (_le("diamond-inflationary", "x", "<>x"), _le("diamond-transitive", "<><>x", "<>x"))
S5_LAW = (_le("box-diamond-symmetric", "x", "[]<>x"),)
MONADIC_LAWS = (
    _eq("box-idempotent", "[][]x", "[]x"),
    _le("box-deflationary", "[]x", "x"),
    _le("diamond-inflationary", "x", "<>x"),
    _eq("diamond-idempotent", "<><>x", "<>x"),
    _le("box-diamond-symmetric", "x", "[]<>x"),
    _le("diamond-box-symmetric", "<>[]x", "x"),
)
WEAK_EXCLUDED_MIDDLE_BOX = (_eq("box-excluded-middle", "[]x \\/ ~[]x", "1"),)


def n_contraction(n: int) -> tuple[Law, ...]:
    return (_eq(f"{n}-contraction", f"(1 /\\ x)^{n + 1}", f"(1 /\\ x)^{n}"),)

def n_transitivity(n: int) -> tuple[Law, ...]:
    return (_le(f"box-{n}-transitive", f"[]_{n} x", f"[]_{n + 1} x"),)

def n_transitivity_dual(n: int) -> tuple[Law, ...]:
    return (_le(f"diamond-{n}-transitive", f"<>_{n + 1} x", f"<>_{n} x"),)

def n_euclidean(n: int) -> tuple[Law, ...]:
    return (_eq(f"box-{n}-cyclic", f"x \\/ []_1 ~[]_{n} x", "1"),)


# Class builders
def _fl(name: str, laws: tuple[Law, ...], tags: Sequence[str] = ()) -> AlgebraClass:
    return AlgebraClass(name, FL_SIGNATURE, FL_LAWS + laws, False, frozenset(tags))

def _heyting_laws() -> tuple[Law, ...]:
    return COMMUTATIVITY + INTEGRALITY + CONTRACTION

def _modal(name: str, laws: tuple[Law, ...], tags: Sequence[str]) -> AlgebraClass:
    return AlgebraClass(name, MODAL_SIGNATURE, FL_LAWS + laws, True, frozenset(tags))

def _k_laws() -> tuple[Law, ...]:
    return _heyting_laws() + EXCLUDED_MIDDLE + BOX_LAWS + DIAMOND_DUALITY

def _ik_laws(fischer_servi: bool) -> tuple[Law, ...]:
    return _heyting_laws() + BOX_LAWS + DIAMOND_LAWS + (FISCHER_SERVI if fischer_servi else ())

_HEYTING_TAGS = ("commutative", "integral", "heyting")
_BOOLEAN_TAGS = _HEYTING_TAGS + ("boolean",)


def _flag(params: dict[str, str], key: str, default: bool) -> bool:
    if key not in params:
        return default
    return params[key].lower() not in ("0", "false", "no", "off")

def _index(params: dict[str, str], key: str, name: str) -> int:
    try:
        value = int(params.get(key, "1"))
    except ValueError:
        raise UnknownClass(f"parameter {key} of class {name} must be an integer") from None
    if value < 1:
        raise UnknownClass(f"parameter {key} of class {name} must be positive")
    return value


def _build(name: str, params: dict[str, str]) -> AlgebraClass:
    n = _index(params, "n", name) if "n" in params else 1
    dual = _flag(params, "dual", False)
    fischer_servi = _flag(params, "fs", True)
    match name:
        case "fl":
            return _fl("fl", ())
        case "fle":
            return _fl("fle", COMMUTATIVITY, ["commutative"])
        case "flew":
            return _fl("flew", COMMUTATIVITY + INTEGRALITY, ["commutative", "integral"])
        case "flen":
            return _fl(f"flen:n={n}", COMMUTATIVITY + n_contraction(n), ["commutative", f"contraction={n}"])
        case "flewn":
            return _fl(
                f"flewn:n={n}",
                COMMUTATIVITY + INTEGRALITY + n_contraction(n),
                ["commutative", "integral", f"contraction={n}"],
            )
        case "heyting":
            return _fl("heyting", _heyting_laws(), _HEYTING_TAGS)
        case "boolean" | "classical":
            return _fl("boolean", _heyting_laws() + EXCLUDED_MIDDLE, _BOOLEAN_TAGS)
        case "godel":
            return _fl("godel", _heyting_laws() + PRELINEARITY, _HEYTING_TAGS + ("prelinear",))
        case "bl":
            return _fl(
                "bl",
                COMMUTATIVITY + INTEGRALITY + PRELINEARITY + DIVISIBILITY,
                ["commutative", "integral", "prelinear", "divisible"],
            )
        case "mv":
            return _fl(
                "mv",
                COMMUTATIVITY + INTEGRALITY + PRELINEARITY + DIVISIBILITY + INVOLUTION,
                ["commutative", "integral", "prelinear", "divisible", "involutive"],
            )
        case "k" | "modal":
            return _modal("k", _k_laws(), _BOOLEAN_TAGS)
        case "kn4":
            return _modal(f"kn4:n={n}", _k_laws() + n_transitivity(n), _BOOLEAN_TAGS)
        case "kn45":
            return _modal(f"kn45:n={n}", _k_laws() + n_transitivity(n) + n_euclidean(n), _BOOLEAN_TAGS)
        case "s4":
            return _modal("s4", _k_laws() + INTERIOR_LAWS, _BOOLEAN_TAGS + ("interior",))
        case "s5":
            return _modal("s5", _k_laws() + INTERIOR_LAWS + S5_LAW, _BOOLEAN_TAGS + ("interior",))
        case "ik" | "modal-heyting":
            return _modal("ik" if fischer_servi else "ik:fs=0", _ik_laws(fischer_servi), _HEYTING_TAGS)
        case "ikn4":
            laws = _ik_laws(fischer_servi) + n_transitivity(n) + (n_transitivity_dual(n) if dual else ())
            return _modal(f"ikn4:n={n}" + (",dual=1" if dual else ""), laws, _HEYTING_TAGS)
        case "ikn45":
            laws = _ik_laws(fischer_servi) + n_transitivity(n) + n_euclidean(n)
            laws += n_transitivity_dual(n) if dual else ()
            return _modal(f"ikn45:n={n}" + (",dual=1" if dual else ""), laws, _HEYTING_TAGS)
        case "is4":
            laws = _ik_laws(fischer_servi) + INTERIOR_LAWS + (CLOSURE_LAWS if dual else ())
            return _modal("is4" + (":dual=1" if dual else ""), laws, _HEYTING_TAGS + ("interior",))
        case "mipc":
            return _modal("mipc", _ik_laws(True) + MONADIC_LAWS, _HEYTING_TAGS + ("interior", "monadic"))
        case "ws5":
            return _modal(
                "ws5",
                _ik_laws(True) + MONADIC_LAWS + WEAK_EXCLUDED_MIDDLE_BOX,
                _HEYTING_TAGS + ("interior", "monadic"),
            )
    raise UnknownClass(f"no algebra class named {name!r}")


CLASS_NAMES = (
    "fl", "fle", "flew", "flen", "flewn", "heyting", "boolean", "godel", "bl", "mv",
    "k", "kn4", "kn45", "s4", "s5", "ik", "ikn4", "ikn45", "is4", "mipc", "ws5",
)

def class_by_name(token: str) -> AlgebraClass:
    """Build a class from a CLI token such as `flew`, `flen:n=2` or `ikn4:n=2,dual=1`.

    Raises:
        UnknownClass: If the name is not registered or a parameter is malformed.
    """
    name, params = parse_token(token)
    return _build(name, params)


# Membership
def _check_signature(algebra: FiniteAlgebra, algebra_class: AlgebraClass) -> None:
    for symbol, arity in algebra_class.signature.symbols:
        if not algebra.has(symbol) or algebra.signature.arity(symbol) != arity:
            raise SignatureMismatch(
                f"algebra {algebra.name} lacks {symbol!r} required by class {algebra_class.name}"
            )

def law_checker(algebra: FiniteAlgebra, law: Law) -> Callable[[Valuation], bool]:
    """Compile a law into a predicate on valuations."""
    n = algebra.size
    meet = algebra.table(const.MEET)
    lhs = compile_formula(algebra, law.lhs)
    rhs = compile_formula(algebra, law.rhs)

    def below(a: int, b: int) -> bool:
        return meet[a * n + b] == a

    if law.kind == "equation":
        return lambda v: lhs(v) == rhs(v)
    if law.kind == "inequality":
        return lambda v: below(lhs(v), rhs(v))
    premises = [(compile_formula(algebra, a), compile_formula(algebra, b)) for a, b in law.premises]
    return lambda v: not all(below(a(v), b(v)) for a, b in premises) or below(lhs(v), rhs(v))

def law_failure(algebra: FiniteAlgebra, law: Law) -> Valuation | None:
    """The first valuation, in lexicographic order, at which the law fails."""
    holds = law_checker(algebra, law)
    for valuation in all_valuations(law.variables, algebra.size):
        if not holds(valuation):
            return valuation
    return None

def check_membership(algebra: FiniteAlgebra, algebra_class: AlgebraClass) -> ClassReport:
    """Evaluate every law of the class over all valuations.

    Raises:
        SignatureMismatch: If the algebra lacks a symbol of the class signature.
    """
    _check_signature(algebra, algebra_class)
    failures = []
    for law in algebra_class.laws:
        witness = law_failure(algebra, law)
        if witness is not None:
            failures.append((law.label, witness))
    report = ClassReport(algebra.name, algebra_class.name, tuple(failures))
    emit(MembershipChecked(algebra.name, algebra_class.name, report.verdict, len(failures)))
    if failures:
        label, witness = failures[0]
        emit(WitnessFound(algebra.name, f"class {algebra_class.name}", f"{label} {algebra.valuation_text(witness)}"))
    return report

def is_member(algebra: FiniteAlgebra, algebra_class: AlgebraClass) -> bool:
    """Like `check_membership` but stops at the first failing law."""
    _check_signature(algebra, algebra_class)
    return all(law_failure(algebra, law) is None for law in algebra_class.laws)

def validates(algebra: FiniteAlgebra, lhs: Formula, rhs: Formula, kind: str = "equation") -> bool:
    return law_failure(algebra, Law("ad hoc", kind, lhs, rhs)) is None


# Modal criteria
@dataclass(frozen=True)
class CyclicityReport:
    euclidean: bool  # x \/ []_1 ~[]_n x = 1
    box_excluded_middle: bool  # []_n x \/ []_n ~[]_n x = 1

    @property
    def agree(self) -> bool:
        return self.euclidean == self.box_excluded_middle


def _equals_one(algebra: FiniteAlgebra, text: str) -> bool:
    return validates(algebra, parse(text), parse("1"))

def check_cyclicity(algebra: FiniteAlgebra, n: int) -> CyclicityReport:
    """Compare the two forms of the n-cyclicity axiom on a modal Heyting algebra."""
    return CyclicityReport(
        euclidean=_equals_one(algebra, f"x \\/ []_1 ~[]_{n} x"),
        box_excluded_middle=_equals_one(algebra, f"[]_{n} x \\/ []_{n} ~[]_{n} x"),
    )

def check_k_cyclicity(algebra: FiniteAlgebra, n: int, k: int) -> bool:
    """Whether x \\/ []_1 ~[]_n x = 1 implies x \\/ []_k ~[]_(kn) x = 1 on the algebra."""
    if not _equals_one(algebra, f"x \\/ []_1 ~[]_{n} x"):
        return True
    return _equals_one(algebra, f"x \\/ []_{k} ~[]_{k * n} x")

def modal_semisimplicity_witness(algebra: FiniteAlgebra, n_range: Sequence[int]) -> int | None:
    """The least n in range with 1 = x \\/ []_1 ~[]_n x and []_n x <= []_(n+1) x, if any."""
    for n in n_range:
        if _equals_one(algebra, f"x \\/ []_1 ~[]_{n} x") and validates(
            algebra, parse(f"[]_{n} x"), parse(f"[]_{n + 1} x"), "inequality"
        ):
            return n
    return None
