import itertools
from dataclasses import dataclass, field, replace
from typing import Callable, Iterator, Mapping, Sequence

from .. import constants as const
from ..errors import (
    InvalidParameter,
    NotAPartialOrder,
    NotCompatible,
    SignatureMismatch,
    UnboundVariable,
    UnknownSymbol,
)
from ..types import Assignment, Bitmask, Blocks, Element, Symbol, Table, Valuation
from . import PartitionLib
from .Formula import Binary, Const, Formula, Unary, Var, expand

# Structs
@dataclass(frozen=True)
class Signature:
    """Operation symbols with their arities, in declaration order."""
    symbols: tuple[tuple[Symbol, int], ...]

    def __post_init__(self) -> None:
        names = [name for name, _ in self.symbols]
        if len(set(names)) != len(names):
            raise InvalidParameter(f"duplicate symbol in signature {names}")
        for name, arity in self.symbols:
            if arity < 0:
                raise InvalidParameter(f"symbol {name} has negative arity")

    @property
    def names(self) -> tuple[Symbol, ...]:
        return tuple(name for name, _ in self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return any(name == symbol for name, _ in self.symbols)

    def arity(self, symbol: Symbol) -> int:
        for name, arity in self.symbols:
            if name == symbol:
                return arity
        raise UnknownSymbol(f"symbol {symbol!r} is not in the signature")

    def index(self, symbol: Symbol) -> int:
        for position, (name, _) in enumerate(self.symbols):
            if name == symbol:
                return position
        raise UnknownSymbol(f"symbol {symbol!r} is not in the signature")


LATTICE_SIGNATURE = Signature(const.LATTICE_SYMBOLS)
FL_SIGNATURE = Signature(const.FL_SYMBOLS)
MODAL_SIGNATURE = Signature(const.MODAL_SYMBOLS)


@dataclass(frozen=True)
class FiniteAlgebra:
    """An algebra on the carrier {0..size-1} given by one total table per symbol.

    Tables are flat and row-major: the entry for arguments (a1, ..., ak) sits at index
    a1*n^(k-1) + ... + ak, and a constant's table holds its single value.

    Labels are display names only; designated elements are the filter read from a file
    with the `file` designation policy.
    """
    name: str
    size: int
    signature: Signature
    tables: tuple[Table, ...]
    labels: tuple[str, ...] | None = None
    designated: tuple[Element, ...] | None = None
    _positions: dict[Symbol, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.size < 1:
            raise InvalidParameter(f"algebra {self.name} must have a positive size")
        if len(self.tables) != len(self.signature.symbols):
            raise InvalidParameter(f"algebra {self.name} needs one table per symbol")
        for (symbol, arity), table in zip(self.signature.symbols, self.tables):
            _check_table(self.name, symbol, arity, table, self.size)
        if self.labels is not None and len(self.labels) != self.size:
            raise InvalidParameter(f"algebra {self.name} needs one label per element")
        if self.designated is not None and any(not 0 <= d < self.size for d in self.designated):
            raise InvalidParameter(f"algebra {self.name} designates an element outside the carrier")
        object.__setattr__(self, "_positions", {name: i for i, name in enumerate(self.signature.names)})

    def has(self, symbol: Symbol) -> bool:
        return symbol in self._positions

    def table(self, symbol: Symbol) -> Table:
        try:
            return self.tables[self._positions[symbol]]
        except KeyError:
            raise UnknownSymbol(f"algebra {self.name} has no operation {symbol!r}") from None

    def apply(self, symbol: Symbol, *args: Element) -> Element:
        return self.table(symbol)[table_index(self.size, args)]

    def constant(self, symbol: Symbol) -> Element:
        return self.table(symbol)[0]

    def element_label(self, element: Element) -> str:
        return self.labels[element] if self.labels is not None else str(element)

    def valuation_text(self, valuation: Assignment) -> str:
        return " ".join(f"{name}={self.element_label(value)}" for name, value in sorted(valuation.items()))

    @property
    def elements(self) -> range:
        return range(self.size)


@dataclass(frozen=True)
class OrderRelation:
    """The partial order x <= y as an n x n boolean table."""
    size: int
    pairs: tuple[tuple[bool, ...], ...]

    def leq(self, x: Element, y: Element) -> bool:
        return self.pairs[x][y]

    def down_mask(self, x: Element) -> Bitmask:
        return sum(1 << y for y in range(self.size) if self.pairs[y][x])

    def up_mask(self, x: Element) -> Bitmask:
        return sum(1 << y for y in range(self.size) if self.pairs[x][y])

    def is_chain(self) -> bool:
        return all(self.pairs[x][y] or self.pairs[y][x] for x in range(self.size) for y in range(self.size))

    def covers(self, x: Element, y: Element) -> bool:
        """Returns whether y covers x."""
        if x == y or not self.pairs[x][y]:
            return False
        return not any(z not in (x, y) and self.pairs[x][z] and self.pairs[z][y] for z in range(self.size))



def table_index(size: int, args: Sequence[Element]) -> int:
    index = 0
    for arg in args:
        index = index * size + arg
    return index

def argument_tuples(size: int, arity: int) -> Iterator[tuple[Element, ...]]:
    # row-major, matching table_index
    return itertools.product(range(size), repeat=arity)

def _check_table(name: str, symbol: Symbol, arity: int, table: Table, size: int) -> None:
    if len(table) != size**arity:
        raise InvalidParameter(f"algebra {name}: table {symbol} has {len(table)} entries, expected {size**arity}")
    if any(not 0 <= entry < size for entry in table):
        raise InvalidParameter(f"algebra {name}: table {symbol} has an entry outside the carrier")

def _check_same_signature(first: FiniteAlgebra, second: FiniteAlgebra) -> None:
    if first.signature != second.signature:
        raise SignatureMismatch(f"algebras {first.name} and {second.name} have different signatures")


def build_algebra(
    name: str,
    size: int,
    signature: Signature,
    operations: Mapping[Symbol, Callable[..., Element]],
    labels: Sequence[str] | None = None,
) -> FiniteAlgebra:
    """Tabulate an algebra from one Python function per symbol.

    Raises:
        UnknownSymbol: If a signature symbol has no function.
    """
    tables = []
    for symbol, arity in signature.symbols:
        if symbol not in operations:
            raise UnknownSymbol(f"no definition for {symbol!r} in algebra {name}")
        function = operations[symbol]
        tables.append(tuple(function(*args) for args in argument_tuples(size, arity)))
    return FiniteAlgebra(name, size, signature, tuple(tables), tuple(labels) if labels else None)


# Evaluation
def compile_formula(algebra: FiniteAlgebra, formula: Formula) -> Callable[[Assignment], Element]:
    """Compile a formula into a function from valuations to elements of the algebra.

    Raises:
        UnknownSymbol: If a connective is not in the signature after expansion.
    """
    return _compile(algebra, expand(formula))

def _compile(algebra: FiniteAlgebra, formula: Formula) -> Callable[[Assignment], Element]:
    match formula:
        case Var(name):
            def lookup(valuation: Assignment) -> Element:
                try:
                    return valuation[name]
                except KeyError:
                    raise UnboundVariable(f"variable {name} has no value") from None
            return lookup
        case Const(symbol):
            value = algebra.constant(symbol)
            return lambda valuation: value
        case Unary(op, child):
            table = algebra.table(op)
            inner = _compile(algebra, child)
            return lambda valuation: table[inner(valuation)]
        case Binary(op, left, right):
            table = algebra.table(op)
            size = algebra.size
            first = _compile(algebra, left)
            second = _compile(algebra, right)
            return lambda valuation: table[first(valuation) * size + second(valuation)]
    raise UnknownSymbol(f"cannot evaluate {formula!r}")

def evaluate(algebra: FiniteAlgebra, formula: Formula, valuation: Assignment) -> Element:
    """Evaluate a formula bottom-up from the tables.

    Raises:
        UnknownSymbol: If a connective is not in the signature after expansion.
        UnboundVariable: If the valuation misses a variable of the formula.
    """
    return compile_formula(algebra, formula)(valuation)

def all_valuations(names: Sequence[str], size: int) -> Iterator[Valuation]:
    for values in itertools.product(range(size), repeat=len(names)):
        yield dict(zip(names, values))


# Order
def order_from_meet(algebra: FiniteAlgebra) -> OrderRelation:
    """Derive x <= y iff x /\\ y = x.

    Raises:
        NotAPartialOrder: If meet is not idempotent, commutative and associative; the error
            carries a violating pair.
    """
    n = algebra.size
    meet = algebra.table(const.MEET)
    for x in range(n):
        if meet[x * n + x] != x:
            raise NotAPartialOrder(f"meet is not idempotent at {x}", (x, x))
    for x, y in itertools.product(range(n), repeat=2):
        if meet[x * n + y] != meet[y * n + x]:
            raise NotAPartialOrder(f"meet is not commutative at ({x}, {y})", (x, y))
    for x, y, z in itertools.product(range(n), repeat=3):
        if meet[meet[x * n + y] * n + z] != meet[x * n + meet[y * n + z]]:
            raise NotAPartialOrder(f"meet is not associative at ({x}, {y}, {z})", (x, y))
    return OrderRelation(n, tuple(tuple(meet[x * n + y] == x for y in range(n)) for x in range(n)))


# Constructions
def direct_product(first: FiniteAlgebra, second: FiniteAlgebra) -> FiniteAlgebra:
    """Componentwise product; the pair (a, b) is the element a*|second| + b.

    Raises:
        SignatureMismatch: If the signatures differ.
    """
    _check_same_signature(first, second)
    m = second.size
    size = first.size * m
    tables = []
    for symbol, arity in first.signature.symbols:
        left, right = first.table(symbol), second.table(symbol)
        entries = []
        for args in argument_tuples(size, arity):
            a = table_index(first.size, [arg // m for arg in args])
            b = table_index(m, [arg % m for arg in args])
            entries.append(left[a] * m + right[b])
        tables.append(tuple(entries))
    labels = None
    if first.labels is not None or second.labels is not None:
        labels = tuple(
            f"({first.element_label(x // m)},{second.element_label(x % m)})" for x in range(size)
        )
    return FiniteAlgebra(f"{first.name}x{second.name}", size, first.signature, tuple(tables), labels)

def product_projections(first: FiniteAlgebra, second: FiniteAlgebra) -> tuple[Table, Table]:
    """Index maps of the two projection homomorphisms out of `direct_product(first, second)`."""
    m = second.size
    size = first.size * m
    return tuple(x // m for x in range(size)), tuple(x % m for x in range(size))

def is_compatible(algebra: FiniteAlgebra, blocks: Blocks) -> bool:
    return incompatibility(algebra, blocks) is None

def incompatibility(algebra: FiniteAlgebra, blocks: Blocks) -> tuple[Symbol, tuple[Element, ...], int] | None:
    """Find an operation, argument tuple and coordinate where `blocks` is not respected.

    Changing one coordinate at a time to its block representative is enough: compatibility
    in every coordinate separately composes to full compatibility.
    """
    n = algebra.size
    reps = PartitionLib.representatives(blocks)
    for symbol, arity in algebra.signature.symbols:
        table = algebra.table(symbol)
        for args in argument_tuples(n, arity):
            value = blocks[table[table_index(n, args)]]
            for position in range(arity):
                moved = list(args)
                moved[position] = reps[blocks[args[position]]]
                if blocks[table[table_index(n, moved)]] != value:
                    return symbol, args, position
    return None

def quotient(algebra: FiniteAlgebra, blocks: Blocks) -> FiniteAlgebra:
    """The quotient by a congruence given as canonical blocks.

    The blocks tuple itself is the canonical surjection: element a goes to block blocks[a].

    Raises:
        NotCompatible: If the partition is not a congruence.
    """
    if len(blocks) != algebra.size:
        raise NotCompatible(f"partition of {len(blocks)} elements for algebra of size {algebra.size}")
    blocks = PartitionLib.canonical_blocks(blocks)
    failure = incompatibility(algebra, blocks)
    if failure is not None:
        symbol, args, position = failure
        raise NotCompatible(f"partition breaks {symbol} at arguments {args}, coordinate {position}")
    reps = PartitionLib.representatives(blocks)
    size = len(reps)
    tables = []
    for symbol, arity in algebra.signature.symbols:
        table = algebra.table(symbol)
        tables.append(tuple(
            blocks[table[table_index(algebra.size, [reps[b] for b in args])]]
            for args in argument_tuples(size, arity)
        ))
    labels = None
    if algebra.labels is not None:
        labels = tuple("[" + ",".join(algebra.labels[e] for e in group) + "]" for group in PartitionLib.block_lists(blocks))
    return FiniteAlgebra(f"{algebra.name}/q{size}", size, algebra.signature, tuple(tables), labels)

def is_homomorphism(mapping: Sequence[Element], source: FiniteAlgebra, target: FiniteAlgebra) -> bool:
    """Check h(f(a1..ak)) = f(h(a1)..h(ak)) for every symbol of the source and every argument tuple."""
    if len(mapping) != source.size or any(not 0 <= x < target.size for x in mapping):
        return False
    for symbol, arity in source.signature.symbols:
        if not target.has(symbol) or target.signature.arity(symbol) != arity:
            return False
        src, dst = source.table(symbol), target.table(symbol)
        for args in argument_tuples(source.size, arity):
            image = [mapping[a] for a in args]
            if mapping[src[table_index(source.size, args)]] != dst[table_index(target.size, image)]:
                return False
    return True

def relabel(algebra: FiniteAlgebra, permutation: Sequence[Element]) -> FiniteAlgebra:
    """The isomorphic copy in which element x is renamed permutation[x]."""
    n = algebra.size
    inverse = [0] * n
    for old, new in enumerate(permutation):
        inverse[new] = old
    tables = []
    for symbol, arity in algebra.signature.symbols:
        table = algebra.table(symbol)
        tables.append(tuple(
            permutation[table[table_index(n, [inverse[a] for a in args])]]
            for args in argument_tuples(n, arity)
        ))
    labels = None if algebra.labels is None else tuple(algebra.labels[inverse[x]] for x in range(n))
    return replace(algebra, tables=tuple(tables), labels=labels, designated=None)

def trivial_algebra(signature: Signature, name: str = "trivial") -> FiniteAlgebra:
    return FiniteAlgebra(name, 1, signature, tuple((0,) for _ in signature.symbols))
