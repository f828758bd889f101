"""Formula syntax trees over the FL/modal signature, derived connectives and printing.

Formulas are immutable. Derived connectives (the two negations, the arrow, powers, iterated
boxes and diamonds, n-fold sums) are kept as nodes until `expand` rewrites them into the
declared signature, which is the only form evaluation understands.
"""
import random
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, TypeAlias, Union

from .. import constants as const


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    symbol: str


@dataclass(frozen=True)
class Unary:
    op: str
    child: "Formula"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Power:
    base: "Formula"
    exponent: int


@dataclass(frozen=True)
class BoxN:
    n: int
    child: "Formula"


@dataclass(frozen=True)
class DiamondN:
    n: int
    child: "Formula"


@dataclass(frozen=True)
class Multiple:
    n: int
    child: "Formula"


Formula: TypeAlias = Union[Var, Const, Unary, Binary, Power, BoxN, DiamondN, Multiple]

CONSTANTS = (const.UNIT, const.ZERO, const.TOP, const.BOTTOM)
UNARY_OPS = (const.NEG_BOTTOM, const.NEG_ZERO, const.BOX, const.DIAMOND)
ARROW_TIER = (const.ARROW, const.LEFT_RESIDUAL, const.RIGHT_RESIDUAL)
# binding strength of the binary tiers, loosest first
BINARY_LEVELS = {
    const.ARROW: 1,
    const.LEFT_RESIDUAL: 1,
    const.RIGHT_RESIDUAL: 1,
    const.JOIN: 2,
    const.MEET: 3,
    const.FUSION: 4,
}
PREFIX_LEVEL = 5
POSTFIX_LEVEL = 6
ATOM_LEVEL = 7


# Constructors
def var(name: str) -> Var:
    return Var(name)

def negb(child: Formula) -> Unary:
    return Unary(const.NEG_BOTTOM, child)

def negz(child: Formula) -> Unary:
    return Unary(const.NEG_ZERO, child)

def box(child: Formula) -> Unary:
    return Unary(const.BOX, child)

def diamond(child: Formula) -> Unary:
    return Unary(const.DIAMOND, child)

def meet(left: Formula, right: Formula) -> Binary:
    return Binary(const.MEET, left, right)

def join(left: Formula, right: Formula) -> Binary:
    return Binary(const.JOIN, left, right)

def fuse(left: Formula, right: Formula) -> Binary:
    return Binary(const.FUSION, left, right)

def arrow(left: Formula, right: Formula) -> Binary:
    return Binary(const.ARROW, left, right)

def under(left: Formula, right: Formula) -> Binary:
    return Binary(const.LEFT_RESIDUAL, left, right)

def over(left: Formula, right: Formula) -> Binary:
    return Binary(const.RIGHT_RESIDUAL, left, right)

def unit_meet(child: Formula) -> Binary:
    return meet(Const(const.UNIT), child)

def oplus(left: Formula, right: Formula) -> Formula:
    # x ⊕ y := ¬(¬y · ¬x)
    return negb(fuse(negb(right), negb(left)))


# Traversal
def subformulas(formula: Formula) -> Iterator[Formula]:
    yield formula
    match formula:
        case Binary(_, left, right):
            yield from subformulas(left)
            yield from subformulas(right)
        case Unary(_, child) | BoxN(_, child) | DiamondN(_, child) | Multiple(_, child):
            yield from subformulas(child)
        case Power(base, _):
            yield from subformulas(base)

def variables(formula: Formula) -> tuple[str, ...]:
    return tuple(sorted({node.name for node in subformulas(formula) if isinstance(node, Var)}))

def variables_of(formulas: Sequence[Formula]) -> tuple[str, ...]:
    names: set[str] = set()
    for formula in formulas:
        names.update(variables(formula))
    return tuple(sorted(names))

def size(formula: Formula) -> int:
    return sum(1 for _ in subformulas(formula))

def substitute(formula: Formula, mapping: Mapping[str, Formula]) -> Formula:
    match formula:
        case Var(name):
            return mapping.get(name, formula)
        case Const():
            return formula
        case Unary(op, child):
            return Unary(op, substitute(child, mapping))
        case Binary(op, left, right):
            return Binary(op, substitute(left, mapping), substitute(right, mapping))
        case Power(base, exponent):
            return Power(substitute(base, mapping), exponent)
        case BoxN(n, child):
            return BoxN(n, substitute(child, mapping))
        case DiamondN(n, child):
            return DiamondN(n, substitute(child, mapping))
        case Multiple(n, child):
            return Multiple(n, substitute(child, mapping))
    raise TypeError(f"not a formula: {formula!r}")

def fill_hole(scheme: Formula, formula: Formula) -> Formula:
    return substitute(scheme, {const.HOLE: formula})


# Expansion
def _iterate(op: str, child: Formula, times: int) -> Formula:
    for _ in range(times):
        child = Unary(op, child)
    return child

def expand(formula: Formula) -> Formula:
    """Rewrite derived connectives into the declared signature.

    The expansion is literal: x^1 is x, x^(n+1) is x^n * x, []_0 x is x and
    []_n x is x /\\ []x /\\ ... /\\ []^n x, left-associated.
    """
    match formula:
        case Var() | Const():
            return formula
        case Unary(const.NEG_BOTTOM, child):
            return under(expand(child), Const(const.BOTTOM))
        case Unary(const.NEG_ZERO, child):
            return under(expand(child), Const(const.ZERO))
        case Unary(op, child):
            return Unary(op, expand(child))
        case Binary(const.ARROW, left, right):
            return under(expand(left), expand(right))
        case Binary(op, left, right):
            return Binary(op, expand(left), expand(right))
        case Power(base, exponent):
            if exponent == 0:
                return Const(const.UNIT)
            base = expand(base)
            result = base
            for _ in range(exponent - 1):
                result = fuse(result, base)
            return result
        case BoxN(n, child) | DiamondN(n, child):
            op, connective = (const.BOX, const.MEET) if isinstance(formula, BoxN) else (const.DIAMOND, const.JOIN)
            child = expand(child)
            result = child
            for depth in range(1, n + 1):
                result = Binary(connective, result, _iterate(op, child, depth))
            return result
        case Multiple(n, child):
            child = expand(child)
            result = child
            for _ in range(n - 1):
                result = expand(oplus(child, result))
            return result
    raise TypeError(f"not a formula: {formula!r}")


# Printing
def _render(formula: Formula) -> tuple[str, int]:
    match formula:
        case Var(name):
            return name, ATOM_LEVEL
        case Const(symbol):
            return symbol, ATOM_LEVEL
        case Power(base, exponent):
            return f"{_text(base, ATOM_LEVEL)}^{exponent}", POSTFIX_LEVEL
        case Unary(op, child):
            return f"{op}{_text(child, PREFIX_LEVEL)}", PREFIX_LEVEL
        case BoxN(n, child):
            return f"{const.BOX}_{n} {_text(child, PREFIX_LEVEL)}", PREFIX_LEVEL
        case DiamondN(n, child):
            return f"{const.DIAMOND}_{n} {_text(child, PREFIX_LEVEL)}", PREFIX_LEVEL
        case Multiple(n, child):
            return f"{n}.{_text(child, PREFIX_LEVEL)}", PREFIX_LEVEL
        case Binary(op, left, right):
            level = BINARY_LEVELS[op]
            if level == 1:
                # right-associative; a different residual on the right needs parentheses
                same = isinstance(right, Binary) and right.op == op
                right_text = _text(right, 1 if same else 2)
                return f"{_text(left, 2)} {op} {right_text}", level
            return f"{_text(left, level)} {op} {_text(right, level + 1)}", level
    raise TypeError(f"not a formula: {formula!r}")

def _text(formula: Formula, minimum: int) -> str:
    text, level = _render(formula)
    return f"({text})" if level < minimum else text

def print_formula(formula: Formula) -> str:
    return _text(formula, 0)


# Sampling
DEFAULT_CONNECTIVES = (const.MEET, const.JOIN, const.ARROW, const.NEG_BOTTOM)

def random_formula(
    rng: random.Random,
    max_nodes: int = const.DEFAULT_SAMPLE_NODES,
    names: Sequence[str] = (const.SCHEME_P, const.SCHEME_Q),
    connectives: Sequence[str] = DEFAULT_CONNECTIVES,
) -> Formula:
    """Draw a formula with at most `max_nodes` nodes; all randomness comes from `rng`."""
    unary = [op for op in connectives if op in UNARY_OPS]
    binary = [op for op in connectives if op in BINARY_LEVELS]

    def build(budget: int) -> Formula:
        if budget == 1 or rng.random() < 0.25:
            return Var(rng.choice(list(names)))
        if budget == 2 or (unary and not binary) or (unary and rng.random() < 0.25):
            if not unary:
                return Var(rng.choice(list(names)))
            return Unary(rng.choice(unary), build(budget - 1))
        left_budget = rng.randint(1, budget - 2)
        return Binary(rng.choice(binary), build(left_budget), build(budget - 1 - left_budget))

    return build(rng.randint(1, max_nodes))
