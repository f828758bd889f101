"""Indexed scheme families and the LEM axiom instantiations.

A scheme family maps an index n >= 1 to a finite set of formulas in the distinguished
variable p (and q for deduction families). Inconsistency-lemma families take one variable,
deduction families two. A global family generates the same set at every index.
"""
from dataclasses import dataclass, replace
from typing import Callable

from .. import constants as const
from ..errors import (
    IndexOutOfBound,
    InvalidParameter,
    UnboundedFamily,
    UnknownFamily,
    UnknownInstantiation,
)
from .interfaces.IDeductionFamily import IDeductionFamily
from .Formula import (
    BoxN,
    DiamondN,
    Formula,
    Power,
    Var,
    arrow,
    box,
    join,
    negb,
    substitute,
    unit_meet,
    variables_of,
)

P = Var(const.SCHEME_P)
Q = Var(const.SCHEME_Q)

# Structs
@dataclass(frozen=True)
class SchemeFamily(IDeductionFamily):
    name: str
    variables: tuple[str, ...]
    generator: Callable[[int], tuple[Formula, ...]]
    bound: int | None = None
    is_global: bool = False

    def __post_init__(self) -> None:
        if self.bound is not None and self.bound < 1:
            raise InvalidParameter(f"family {self.name} needs a bound >= 1")

    @property
    def arity(self) -> int:
        return len(self.variables)

    def members(self, n: int) -> tuple[Formula, ...]:
        """The formula set at index n.

        Raises:
            IndexOutOfBound: If n is outside 1..bound.
        """
        if n < 1 or (self.bound is not None and n > self.bound):
            raise IndexOutOfBound(f"index {n} outside 1..{self.bound or 'inf'} for family {self.name}")
        return self.generator(n)

    def indices(self) -> range:
        """Indices worth trying: just 1 for a global family.

        Raises:
            UnboundedFamily: If the family is local and has no bound.
        """
        if self.is_global:
            return range(1, 2)
        if self.bound is None:
            raise UnboundedFamily(f"family {self.name} needs a bound")
        return range(1, self.bound + 1)

    def find_member(self, accepted: Callable[[tuple[Formula, ...]], bool]) -> tuple[int, ...] | None:
        for n in self.indices():
            if accepted(self.members(n)):
                return (n,)
        return None

    def bounded(self, bound: int) -> "SchemeFamily":
        return replace(self, bound=bound)


def expand_scheme(
    family: SchemeFamily, n: int, argument: Formula, second: Formula | None = None
) -> tuple[Formula, ...]:
    """Substitute `argument` for p (and `second` for q) in the family's n-th set.

    Raises:
        IndexOutOfBound: If n is outside 1..bound.
    """
    mapping = {const.SCHEME_P: argument}
    if second is not None:
        mapping[const.SCHEME_Q] = second
    return tuple(substitute(member, mapping) for member in family.members(n))


def _il(name: str, build: Callable[[int], Formula], is_global: bool = False) -> SchemeFamily:
    return SchemeFamily(name, (const.SCHEME_P,), lambda n: (build(n),), is_global=is_global)

def _ddt(name: str, build: Callable[[int], Formula], is_global: bool = False) -> SchemeFamily:
    return SchemeFamily(name, (const.SCHEME_P, const.SCHEME_Q), lambda n: (build(n),), is_global=is_global)

def _int_parameter(params: dict[str, str], key: str, family: str) -> int:
    if key not in params:
        raise UnknownFamily(f"family {family} needs parameter {key}")
    try:
        value = int(params[key])
    except ValueError:
        raise UnknownFamily(f"parameter {key} of {family} must be an integer") from None
    if value < 1:
        raise UnknownFamily(f"parameter {key} of {family} must be positive")
    return value


def classical_il() -> SchemeFamily:
    return _il("classical-il", lambda n: negb(P), is_global=True)

def flew_il() -> SchemeFamily:
    return _il("flew-il", lambda n: negb(Power(P, n)))

def fle_il() -> SchemeFamily:
    return _il("fle-il", lambda n: negb(Power(unit_meet(P), n)))

def ik_il() -> SchemeFamily:
    return _il("ik-il", lambda n: negb(BoxN(n, P)))

def s4_il() -> SchemeFamily:
    return _il("s4-il", lambda n: negb(box(P)), is_global=True)

def luk_il(k: int) -> SchemeFamily:
    # the global family of the (k+1)-element chain
    return _il(f"luk-il:k={k}", lambda n: negb(Power(P, k)), is_global=True)

def flen_il(m: int) -> SchemeFamily:
    return _il(f"flen-il:n={m}", lambda n: negb(Power(unit_meet(P), m)), is_global=True)

def ikn4_il(m: int) -> SchemeFamily:
    return _il(f"ikn4-il:n={m}", lambda n: negb(BoxN(m, P)), is_global=True)

def heyting_ddt() -> SchemeFamily:
    return _ddt("heyting-ddt", lambda n: arrow(P, Q), is_global=True)

def flew_ddt() -> SchemeFamily:
    return _ddt("flew-ddt", lambda n: arrow(Power(P, n), Q))

def fle_ddt() -> SchemeFamily:
    return _ddt("fle-ddt", lambda n: arrow(Power(unit_meet(P), n), Q))

def ik_ddt() -> SchemeFamily:
    return _ddt("ik-ddt", lambda n: arrow(BoxN(n, P), Q))

def s4_ddt() -> SchemeFamily:
    return _ddt("s4-ddt", lambda n: arrow(box(P), Q), is_global=True)

def luk_ddt(k: int) -> SchemeFamily:
    return _ddt(f"luk-ddt:k={k}", lambda n: arrow(Power(P, k), Q), is_global=True)

def flen_ddt(m: int) -> SchemeFamily:
    return _ddt(f"flen-ddt:n={m}", lambda n: arrow(Power(unit_meet(P), m), Q), is_global=True)

def ikn4_ddt(m: int) -> SchemeFamily:
    return _ddt(f"ikn4-ddt:n={m}", lambda n: arrow(BoxN(m, P), Q), is_global=True)


_PLAIN_FAMILIES: dict[str, Callable[[], SchemeFamily]] = {
    "classical-il": classical_il,
    "heyting-il": classical_il,
    "flew-il": flew_il,
    "fle-il": fle_il,
    "ik-il": ik_il,
    "s4-il": s4_il,
    "heyting-ddt": heyting_ddt,
    "flew-ddt": flew_ddt,
    "fle-ddt": fle_ddt,
    "ik-ddt": ik_ddt,
    "s4-ddt": s4_ddt,
}
_PARAMETRISED_FAMILIES: dict[str, tuple[str, Callable[[int], SchemeFamily]]] = {
    "luk-il": ("k", luk_il),
    "flen-il": ("n", flen_il),
    "ikn4-il": ("n", ikn4_il),
    "luk-ddt": ("k", luk_ddt),
    "flen-ddt": ("n", flen_ddt),
    "ikn4-ddt": ("n", ikn4_ddt),
}


def parse_token(token: str) -> tuple[str, dict[str, str]]:
    """Split `name:key=value,key=value` into the name and its parameters."""
    name, _, rest = token.partition(":")
    params: dict[str, str] = {}
    for item in filter(None, rest.split(",")):
        key, sep, value = item.partition("=")
        if not sep:
            raise InvalidParameter(f"parameter {item!r} in {token!r} is not key=value")
        params[key.strip()] = value.strip()
    return name.strip().lower(), params

def family_names() -> tuple[str, ...]:
    return tuple(_PLAIN_FAMILIES) + tuple(f"{name}:{key}=K" for name, (key, _) in _PARAMETRISED_FAMILIES.items())

def family_by_name(token: str, bound: int | None = None) -> SchemeFamily:
    """Look up a built-in family by CLI token, e.g. `flew-il` or `luk-il:k=3`.

    Raises:
        UnknownFamily: If no built-in family has that name or a parameter is missing.
    """
    name, params = parse_token(token)
    if name in _PLAIN_FAMILIES:
        family = _PLAIN_FAMILIES[name]()
    elif name in _PARAMETRISED_FAMILIES:
        key, build = _PARAMETRISED_FAMILIES[name]
        family = build(_int_parameter(params, key, name))
    else:
        raise UnknownFamily(f"no scheme family named {name!r}")
    return family.bounded(bound) if bound is not None else family


# LEM axioms
@dataclass(frozen=True)
class Instantiation:
    """The connectives standing in for the deduction arrow, negation and disjunction."""
    implies: Callable[[Formula, Formula, int], Formula]
    negation: Callable[[Formula, int], Formula]
    disjunction: Callable[[Formula, Formula, int], Formula]
    modal: bool

_CLASSICAL = Instantiation(
    implies=lambda x, y, n: arrow(x, y),
    negation=lambda x, n: negb(x),
    disjunction=lambda x, y, n: join(x, y),
    modal=False,
)
_FLEW = Instantiation(
    implies=lambda x, y, n: arrow(Power(x, n), y),
    negation=lambda x, n: negb(Power(x, n)),
    disjunction=lambda x, y, n: join(x, y),
    modal=False,
)
_FLE = Instantiation(
    implies=lambda x, y, n: arrow(Power(unit_meet(x), n), y),
    negation=lambda x, n: negb(Power(unit_meet(x), n)),
    disjunction=lambda x, y, n: join(unit_meet(x), unit_meet(y)),
    modal=False,
)
_MODAL = Instantiation(
    implies=lambda x, y, n: arrow(BoxN(n, x), y),
    negation=lambda x, n: negb(BoxN(n, x)),
    disjunction=lambda x, y, n: join(BoxN(n, x), BoxN(n, y)),
    modal=True,
)
INSTANTIATIONS: dict[str, Instantiation] = {
    "classical": _CLASSICAL,
    "boolean": _CLASSICAL,
    "heyting": _CLASSICAL,
    "godel": _CLASSICAL,
    "flew": _FLEW,
    "flewn": _FLEW,
    "bl": _FLEW,
    "mv": _FLEW,
    "fle": _FLE,
    "flen": _FLE,
    "ikn4": _MODAL,
    "ikn45": _MODAL,
    "is4": _MODAL,
    "kn4": _MODAL,
    "kn45": _MODAL,
    "s4": _MODAL,
    "s5": _MODAL,
    "mipc": _MODAL,
    "ws5": _MODAL,
}
LEM_FORMS = ("ddt", "pcp", "box-diamond")


def instantiation_for(class_name: str) -> Instantiation:
    """Raises:
        UnknownInstantiation: If the class has no registered deduction/disjunction connectives.
    """
    name, _ = parse_token(class_name)
    if name not in INSTANTIATIONS:
        raise UnknownInstantiation(f"class {name!r} has no registered DDT/PCP instantiation")
    return INSTANTIATIONS[name]

def lem_axiom(form: str, class_name: str, n: int = 1) -> Formula:
    """The closed-form LEM axiom of a class at index n.

    `pcp` gives the join-scheme applied to p and its negation, `ddt` gives
    (p => q) => ((~p => q) => q), and `box-diamond` gives p -> []<>_n p.

    Raises:
        UnknownInstantiation: If the class has no instantiation or the form is unknown.
        InvalidParameter: If n < 1.
    """
    if n < 1:
        raise InvalidParameter("the LEM index must be at least 1")
    if form == "box-diamond":
        instantiation_for(class_name)
        return arrow(P, box(DiamondN(n, P)))
    inst = instantiation_for(class_name)
    if form == "pcp":
        return inst.disjunction(P, inst.negation(P, n), n)
    if form == "ddt":
        implies = lambda x, y: inst.implies(x, y, n)
        return implies(implies(P, Q), implies(implies(inst.negation(P, n), Q), Q))
    raise UnknownInstantiation(f"unknown LEM form {form!r}; expected one of {LEM_FORMS}")

def is_modal_instantiation(class_name: str) -> bool:
    return instantiation_for(class_name).modal

def check_family_variables(family: SchemeFamily, bound: int) -> bool:
    """Whether every set up to the bound mentions only the distinguished variables."""
    allowed = set(family.variables)
    return all(set(variables_of(family.members(n))) <= allowed for n in range(1, bound + 1))
