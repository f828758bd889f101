"""Exhaustive enumeration of small algebras up to isomorphism.

Lattices come from partial orders on {0..n-1} with 0 at the bottom, n-1 at the top and every
relation i < j going up in index order (every finite poset has such a labelling).
Residuated structure is searched as commutative monoid tables on a lattice, with the
residuals read off as maxima; modal structure as box tables (and diamond tables where they
are not determined) on a residuated base. Every candidate is filtered by the class laws.
"""
import hashlib
import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Sequence

from .. import constants as const
from ..errors import CapExceeded, InvalidParameter, NotAPartialOrder
from ..events import CatalogEnumerated, emit
from .AlgebraClasses import AlgebraClass, class_by_name, is_member
from .FiniteAlgebra import (
    FL_SIGNATURE,
    LATTICE_SIGNATURE,
    FiniteAlgebra,
    OrderRelation,
    argument_tuples,
    is_homomorphism,
    order_from_meet,
    relabel,
    table_index,
    trivial_algebra,
)
from .Generators import make_boolean, with_modalities


def _check_lattice_size(n: int) -> None:
    if n < 1:
        raise InvalidParameter("lattices have at least one element")
    if n > const.MAX_LATTICE_SIZE:
        raise CapExceeded(f"lattice enumeration is capped at {const.MAX_LATTICE_SIZE} elements, got {n}")


# Canonical forms
def _linear_extensions(order: OrderRelation) -> Iterator[list[int]]:
    n = order.size
    placed: list[int] = []
    used = [False] * n

    def extend() -> Iterator[list[int]]:
        if len(placed) == n:
            yield placed
            return
        for x in range(n):
            if not used[x] and all(used[y] for y in range(n) if y != x and order.leq(y, x)):
                used[x] = True
                placed.append(x)
                yield from extend()
                placed.pop()
                used[x] = False

    return extend()

def _relabelings(algebra: FiniteAlgebra) -> Iterator[list[int]]:
    """Permutations (old -> new) worth trying; linear extensions of the order when there is one."""
    n = algebra.size
    order = None
    if algebra.has(const.MEET):
        try:
            order = order_from_meet(algebra)
        except NotAPartialOrder:
            order = None
    sequences = _linear_extensions(order) if order is not None else itertools.permutations(range(n))
    for sequence in sequences:
        permutation = [0] * n
        for position, element in enumerate(sequence):
            permutation[element] = position
        yield permutation

def _flattened(algebra: FiniteAlgebra, permutation: Sequence[int]) -> tuple[int, ...]:
    n = algebra.size
    inverse = [0] * n
    for old, new in enumerate(permutation):
        inverse[new] = old
    values: list[int] = []
    for symbol, arity in algebra.signature.symbols:
        table = algebra.table(symbol)
        values.extend(
            permutation[table[table_index(n, [inverse[a] for a in args])]]
            for args in argument_tuples(n, arity)
        )
    return tuple(values)

def canonicalize(algebra: FiniteAlgebra) -> tuple[FiniteAlgebra, tuple[int, ...]]:
    """The relabelled copy with the lexicographically least tables, and those tables."""
    best: tuple[int, ...] | None = None
    best_permutation: list[int] = list(range(algebra.size))
    for permutation in _relabelings(algebra):
        candidate = _flattened(algebra, permutation)
        if best is None or candidate < best:
            best, best_permutation = candidate, list(permutation)
    return relabel(algebra, best_permutation), best

def canonical_form(algebra: FiniteAlgebra) -> tuple[int, ...]:
    return canonicalize(algebra)[1]

def canonical_hash(algebra: FiniteAlgebra) -> str:
    payload = json.dumps(
        {"signature": list(algebra.signature.names), "size": algebra.size, "tables": canonical_form(algebra)},
        separators=(",", ":"),
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


# Isomorphism
def _invariants(algebra: FiniteAlgebra) -> list[tuple]:
    n = algebra.size
    constants = [symbol for symbol, arity in algebra.signature.symbols if arity == 0]
    binary = [symbol for symbol, arity in algebra.signature.symbols if arity == 2]
    unary = [symbol for symbol, arity in algebra.signature.symbols if arity == 1]
    result = []
    for x in range(n):
        result.append((
            tuple(algebra.constant(c) == x for c in constants),
            tuple(algebra.apply(s, x, x) == x for s in binary),
            tuple(sum(1 for y in range(n) if algebra.apply(s, x, y) == x) for s in binary),
            tuple(algebra.apply(s, x) == x for s in unary),
        ))
    return result

def is_isomorphic(first: FiniteAlgebra, second: FiniteAlgebra) -> bool:
    """Backtracking search for a bijection preserving every table, seeded by per-element invariants."""
    if first.signature != second.signature or first.size != second.size:
        return False
    n = first.size
    left, right = _invariants(first), _invariants(second)
    if sorted(left) != sorted(right):
        return False
    binary = [symbol for symbol, arity in first.signature.symbols if arity == 2]
    unary = [symbol for symbol, arity in first.signature.symbols if arity == 1]
    mapping = [-1] * n
    used = [False] * n

    def consistent(x: int) -> bool:
        for symbol in unary:
            image = first.apply(symbol, x)
            if mapping[image] >= 0 and mapping[image] != second.apply(symbol, mapping[x]):
                return False
        for symbol in binary:
            for y in range(n):
                if mapping[y] < 0:
                    continue
                for a, b in ((x, y), (y, x)):
                    image = first.apply(symbol, a, b)
                    if mapping[image] >= 0 and mapping[image] != second.apply(symbol, mapping[a], mapping[b]):
                        return False
        return True

    def assign(x: int) -> bool:
        if x == n:
            return is_homomorphism(mapping, first, second)
        for y in range(n):
            if used[y] or left[x] != right[y]:
                continue
            mapping[x], used[y] = y, True
            if consistent(x) and assign(x + 1):
                return True
            mapping[x], used[y] = -1, False
        return False

    return assign(0)


# Lattices
def _lattice_tables(n: int, leq: list[list[bool]]) -> tuple[list[int], list[int]] | None:
    meet, join = [0] * (n * n), [0] * (n * n)
    for x, y in itertools.product(range(n), repeat=2):
        lower = [z for z in range(n) if leq[z][x] and leq[z][y]]
        upper = [z for z in range(n) if leq[x][z] and leq[y][z]]
        greatest = [z for z in lower if all(leq[w][z] for w in lower)]
        least = [z for z in upper if all(leq[z][w] for w in upper)]
        if not greatest or not least:
            return None
        meet[x * n + y], join[x * n + y] = greatest[0], least[0]
    return meet, join

def _lattice_algebra(name: str, n: int, meet: list[int], join: list[int]) -> FiniteAlgebra:
    return FiniteAlgebra(name, n, LATTICE_SIGNATURE, (tuple(meet), tuple(join), (n - 1,), (0,)))

def enumerate_lattices(n: int) -> tuple[FiniteAlgebra, ...]:
    """All bounded lattices on n elements up to isomorphism, canonically labelled.

    Raises:
        CapExceeded: If n exceeds the lattice cap.
    """
    _check_lattice_size(n)
    if n == 1:
        return (_lattice_algebra("lattice1_0", 1, [0], [0]),)
    middle = range(1, n - 1)
    pairs = [(i, j) for i in middle for j in middle if i < j]
    found: dict[tuple[int, ...], FiniteAlgebra] = {}
    for choice in range(1 << len(pairs)):
        leq = [[x == y or x == 0 or y == n - 1 for y in range(n)] for x in range(n)]
        for bit, (i, j) in enumerate(pairs):
            if choice >> bit & 1:
                leq[i][j] = True
        if any(leq[i][j] and leq[j][k] and not leq[i][k] for i, j, k in itertools.combinations(middle, 3)):
            continue
        tables = _lattice_tables(n, leq)
        if tables is None:
            continue
        canonical, form = canonicalize(_lattice_algebra("lattice", n, *tables))
        found.setdefault(form, canonical)
    return tuple(
        FiniteAlgebra(f"lattice{n}_{index}", n, LATTICE_SIGNATURE, algebra.tables)
        for index, (_, algebra) in enumerate(sorted(found.items()))
    )


# Residuated structure
class _FusionSearch:
    """Backtracking over commutative fusion tables on one lattice with a fixed unit."""
    def __init__(self, lattice: FiniteAlgebra, unit: int, integral: bool) -> None:
        self.n = lattice.size
        self.meet = lattice.table(const.MEET)
        self.join = lattice.table(const.JOIN)
        self.bottom = lattice.constant(const.BOTTOM)
        self.unit = unit
        self.integral = integral
        self.table = [-1] * (self.n * self.n)

    def leq(self, x: int, y: int) -> bool:
        return self.meet[x * self.n + y] == x

    def _set(self, x: int, y: int, value: int) -> bool:
        current = self.table[x * self.n + y]
        if current >= 0 and current != value:
            return False
        self.table[x * self.n + y] = self.table[y * self.n + x] = value
        return True

    def _consistent(self, x: int, y: int) -> bool:
        n, table = self.n, self.table
        value = table[x * n + y]
        if self.integral and not self.leq(value, self.meet[x * n + y]):
            return False
        for a, b in itertools.product(range(n), repeat=2):
            known = table[a * n + b]
            if known < 0:
                continue
            if self.leq(a, x) and self.leq(b, y) and not self.leq(known, value):
                return False
            if self.leq(x, a) and self.leq(y, b) and not self.leq(value, known):
                return False
        # a(b v c) = ab v ac
        for a in {x, y}:
            for b, c in itertools.product(range(n), repeat=2):
                whole = table[a * n + self.join[b * n + c]]
                first, second = table[a * n + b], table[a * n + c]
                if whole >= 0 and first >= 0 and second >= 0 and whole != self.join[first * n + second]:
                    return False
        # (ab)c = a(bc)
        for a, b, c in itertools.product(range(n), repeat=3):
            ab, bc = table[a * n + b], table[b * n + c]
            if ab < 0 or bc < 0:
                continue
            left, right = table[ab * n + c], table[a * n + bc]
            if left >= 0 and right >= 0 and left != right:
                return False
        return True

    def tables(self) -> Iterator[list[int]]:
        n = self.n
        for x in range(n):
            if not self._set(self.unit, x, x) or not self._set(self.bottom, x, self.bottom):
                return
        free = [(x, y) for x in range(n) for y in range(x, n) if self.table[x * n + y] < 0]
        fixed = [(x, y) for x in range(n) for y in range(x, n) if self.table[x * n + y] >= 0]
        if not all(self._consistent(x, y) for x, y in fixed):
            return

        def assign(index: int) -> Iterator[list[int]]:
            if index == len(free):
                yield list(self.table)
                return
            x, y = free[index]
            for value in range(n):
                self.table[x * n + y] = self.table[y * n + x] = value
                if self._consistent(x, y):
                    yield from assign(index + 1)
            self.table[x * n + y] = self.table[y * n + x] = -1

        yield from assign(0)


def residual_table(n: int, fusion: Sequence[int], meet: Sequence[int], join: Sequence[int], bottom: int) -> list[int] | None:
    """x\\z = max{y : xy <= z}, or None when some maximum does not exist."""
    residual = [0] * (n * n)
    for x, z in itertools.product(range(n), repeat=2):
        best = bottom
        for y in range(n):
            if meet[fusion[x * n + y] * n + z] == fusion[x * n + y]:
                best = join[best * n + y]
        if meet[fusion[x * n + best] * n + z] != fusion[x * n + best]:
            return None
        residual[x * n + z] = best
    return residual

def _fl_algebra(
    lattice: FiniteAlgebra, fusion: Sequence[int], unit: int, name: str, zero: int | None = None
) -> FiniteAlgebra | None:
    n = lattice.size
    meet, join = lattice.table(const.MEET), lattice.table(const.JOIN)
    bottom, top = lattice.constant(const.BOTTOM), lattice.constant(const.TOP)
    residual = residual_table(n, fusion, meet, join, bottom)
    if residual is None:
        return None
    right = tuple(residual[y * n + z] for z in range(n) for y in range(n))
    tables = (tuple(meet), tuple(join), tuple(fusion), tuple(residual), right, (unit,), (bottom if zero is None else zero,), (top,), (bottom,))
    return FiniteAlgebra(name, n, FL_SIGNATURE, tables)

def _fl_candidates(lattice: FiniteAlgebra, algebra_class: AlgebraClass) -> list[FiniteAlgebra]:
    n = lattice.size
    top = lattice.constant(const.TOP)
    found = []
    if algebra_class.has_tag("heyting"):
        candidate = _fl_algebra(lattice, lattice.table(const.MEET), top, "candidate")
        if candidate is not None and is_member(candidate, algebra_class):
            found.append(candidate)
        return found
    integral = algebra_class.has_tag("integral")
    units = [top] if integral else range(n)
    # without weakening the zero is unconstrained
    zeros = [lattice.constant(const.BOTTOM)] if integral else range(n)
    for unit in units:
        for fusion in _FusionSearch(lattice, unit, integral).tables():
            for zero in zeros:
                candidate = _fl_algebra(lattice, fusion, unit, "candidate", zero)
                if candidate is not None and is_member(candidate, algebra_class):
                    found.append(candidate)
    return found


# Modal structure
def _box_tables(base: FiniteAlgebra, interior: bool) -> Iterator[list[int]]:
    """Maps preserving finite meets and the top, deflationary when `interior` is set."""
    n = base.size
    meet = base.table(const.MEET)
    top = base.constant(const.TOP)
    leq = lambda x, y: meet[x * n + y] == x
    box = [-1] * n
    box[top] = top
    order = [x for x in range(n) if x != top]

    def consistent() -> bool:
        for a, b in itertools.product(range(n), repeat=2):
            if box[a] < 0 or box[b] < 0:
                continue
            whole = box[meet[a * n + b]]
            if whole >= 0 and whole != meet[box[a] * n + box[b]]:
                return False
        return True

    def assign(index: int) -> Iterator[list[int]]:
        if index == len(order):
            yield list(box)
            return
        x = order[index]
        for value in range(n):
            if interior and not leq(value, x):
                continue
            box[x] = value
            if consistent():
                yield from assign(index + 1)
        box[x] = -1

    yield from assign(0)

def _diamond_tables(base: FiniteAlgebra, box: Sequence[int], algebra_class: AlgebraClass) -> Iterator[list[int] | None]:
    n = base.size
    meet, join = base.table(const.MEET), base.table(const.JOIN)
    bottom = base.constant(const.BOTTOM)
    leq = lambda x, y: meet[x * n + y] == x
    if algebra_class.has_tag("boolean"):
        yield None
        return
    if algebra_class.has_tag("monadic"):
        image = sorted(set(box))
        diamond = []
        for x in range(n):
            above = [y for y in image if leq(x, y)]
            least = [y for y in above if all(leq(y, z) for z in above)]
            if not least:
                return
            diamond.append(least[0])
        yield diamond
        return
    diamond = [-1] * n
    diamond[bottom] = bottom
    order = [x for x in range(n) if x != bottom]

    def consistent() -> bool:
        for a, b in itertools.product(range(n), repeat=2):
            if diamond[a] < 0 or diamond[b] < 0:
                continue
            whole = diamond[join[a * n + b]]
            if whole >= 0 and whole != join[diamond[a] * n + diamond[b]]:
                return False
        return True

    def assign(index: int) -> Iterator[list[int]]:
        if index == len(order):
            yield list(diamond)
            return
        x = order[index]
        for value in range(n):
            diamond[x] = value
            if consistent():
                yield from assign(index + 1)
        diamond[x] = -1

    yield from assign(0)

def _modal_candidates(base: FiniteAlgebra, algebra_class: AlgebraClass) -> list[FiniteAlgebra]:
    found = []
    for box in _box_tables(base, algebra_class.has_tag("interior")):
        for diamond in _diamond_tables(base, box, algebra_class):
            candidate = with_modalities(base, box, diamond, "candidate")
            if is_member(candidate, algebra_class):
                found.append(candidate)
    return found

def _modal_bases(algebra_class: AlgebraClass, n: int) -> tuple[FiniteAlgebra, ...]:
    if algebra_class.has_tag("boolean"):
        if n & (n - 1) or n < 2:
            return ()
        return (make_boolean(n.bit_length() - 1),)
    return enumerate_class(class_by_name("heyting"), n, cap=n)


def _search_base(job: tuple[AlgebraClass, FiniteAlgebra]) -> list[FiniteAlgebra]:
    algebra_class, base = job
    if algebra_class.modal:
        return _modal_candidates(base, algebra_class)
    return _fl_candidates(base, algebra_class)

def _check_class_cap(algebra_class: AlgebraClass, n: int, cap: int | None) -> None:
    limit = cap if cap is not None else (const.DEFAULT_MODAL_CAP if algebra_class.modal else const.DEFAULT_FL_CAP)
    if n > limit:
        raise CapExceeded(f"enumeration of {algebra_class.name} is capped at {limit} elements, got {n}")
    if not algebra_class.modal and not algebra_class.has_tag("commutative"):
        raise InvalidParameter(f"class {algebra_class.name} is not commutative; only commutative fusions are searched")

def enumerate_class(
    algebra_class: AlgebraClass,
    n: int,
    bases: Sequence[FiniteAlgebra] | None = None,
    cap: int | None = None,
    jobs: int = 1,
) -> tuple[FiniteAlgebra, ...]:
    """All members of the class on n elements up to isomorphism.

    FL-family classes are searched over `bases` (default: every lattice on n elements),
    modal classes over Boolean carriers or over the Heyting algebras on n elements. Results
    are merged in base order, so the output does not depend on `jobs`.

    Raises:
        CapExceeded: If n is above the class cap.
        InvalidParameter: If the class is not searchable.
    """
    _check_class_cap(algebra_class, n, cap)
    if n == 1:
        trivial = trivial_algebra(algebra_class.signature, f"{_file_stem(algebra_class.name)}1_0")
        return (trivial,) if is_member(trivial, algebra_class) else ()
    if bases is None:
        bases = _modal_bases(algebra_class, n) if algebra_class.modal else enumerate_lattices(n)
    work = [(algebra_class, base) for base in bases]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search_base, work))
    else:
        results = [_search_base(job) for job in work]
    found: dict[tuple[int, ...], FiniteAlgebra] = {}
    for candidates in results:
        for candidate in candidates:
            canonical, form = canonicalize(candidate)
            found.setdefault(form, canonical)
    stem = _file_stem(algebra_class.name)
    algebras = tuple(
        FiniteAlgebra(f"{stem}{n}_{index}", n, algebra.signature, algebra.tables)
        for index, (_, algebra) in enumerate(sorted(found.items()))
    )
    emit(CatalogEnumerated(algebra_class.name, n, len(algebras)))
    return algebras

def _file_stem(class_name: str) -> str:
    return "".join(ch if ch.isalnum() else "_" for ch in class_name).strip("_")


def naive_flew_catalog(n: int) -> tuple[FiniteAlgebra, ...]:
    """Every commutative table with unit T on every n-element lattice, filtered by the FLew laws
    and deduplicated, with no pruning at all.

    Raises:
        CapExceeded: If n exceeds the oracle cap.
    """
    if n > const.NAIVE_ORACLE_CAP:
        raise CapExceeded(f"the naive oracle is capped at {const.NAIVE_ORACLE_CAP} elements")
    flew = class_by_name("flew")
    found: dict[tuple[int, ...], FiniteAlgebra] = {}
    for lattice in enumerate_lattices(n):
        top = lattice.constant(const.TOP)
        cells = [(x, y) for x in range(n) for y in range(x, n) if top not in (x, y)]
        for values in itertools.product(range(n), repeat=len(cells)):
            fusion = [0] * (n * n)
            for x in range(n):
                fusion[top * n + x] = fusion[x * n + top] = x
            for (x, y), value in zip(cells, values):
                fusion[x * n + y] = fusion[y * n + x] = value
            candidate = _fl_algebra(lattice, fusion, top, "naive")
            if candidate is None or not is_member(candidate, flew):
                continue
            canonical, form = canonicalize(candidate)
            found.setdefault(form, canonical)
    return tuple(algebra for _, algebra in sorted(found.items()))

