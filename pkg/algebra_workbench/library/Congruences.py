import functools
from dataclasses import dataclass
from typing import Iterable

from .. import constants as const
from ..errors import CapExceeded, InvalidParameter
from ..events import CongruenceLatticeComputed, emit
from ..types import Blocks, Element
from . import PartitionLib
from .FiniteAlgebra import FiniteAlgebra, argument_tuples, is_compatible, table_index

# Structs
@dataclass(frozen=True)
class Congruence:
    blocks: Blocks

    @property
    def size(self) -> int:
        return len(self.blocks)

    @property
    def block_count(self) -> int:
        return PartitionLib.block_count(self.blocks)

    def related(self, first: Element, second: Element) -> bool:
        return self.blocks[first] == self.blocks[second]

    def is_identity(self) -> bool:
        return self.block_count == self.size

    def is_total(self) -> bool:
        return self.block_count <= 1

    def refines(self, other: "Congruence") -> bool:
        return PartitionLib.refines(self.blocks, other.blocks)

    def meet(self, other: "Congruence") -> "Congruence":
        return Congruence(PartitionLib.meet(self.blocks, other.blocks))

    def block_lists(self) -> list[list[Element]]:
        return PartitionLib.block_lists(self.blocks)

    def format(self, algebra: FiniteAlgebra | None = None) -> str:
        label = algebra.element_label if algebra is not None else str
        return "".join("{" + ",".join(label(e) for e in group) + "}" for group in self.block_lists())


@dataclass(frozen=True)
class CongruenceLattice:
    """All congruences of an algebra, ordered from the identity (first) to the total one (last)."""
    algebra: FiniteAlgebra
    congruences: tuple[Congruence, ...]

    def __len__(self) -> int:
        return len(self.congruences)

    def __iter__(self):
        return iter(self.congruences)

    @property
    def identity(self) -> Congruence:
        return self.congruences[0]

    @property
    def total(self) -> Congruence:
        return self.congruences[-1]

    def index(self, congruence: Congruence) -> int:
        return self.congruences.index(congruence)

    def meet(self, first: Congruence, second: Congruence) -> Congruence:
        return first.meet(second)

    def join(self, first: Congruence, second: Congruence) -> Congruence:
        return join(self.algebra, first, second)

    def coatoms(self) -> tuple[Congruence, ...]:
        """Maximal proper congruences."""
        proper = [theta for theta in self.congruences if not theta.is_total()]
        return tuple(
            theta for theta in proper
            if not any(other != theta and theta.refines(other) for other in proper)
        )

    def atoms(self) -> tuple[Congruence, ...]:
        nontrivial = [theta for theta in self.congruences if not theta.is_identity()]
        return tuple(
            theta for theta in nontrivial
            if not any(other != theta and other.refines(theta) for other in nontrivial)
        )


@dataclass(frozen=True)
class SemisimplicityCertificate:
    """The coatoms of Con(A) and the induced map into the product of the coatom quotients.

    `embedding[a]` lists the block of a in each coatom; the algebra is semisimple exactly
    when this map is injective.
    """
    semisimple: bool
    simple: bool
    coatoms: tuple[Congruence, ...]
    embedding: tuple[tuple[int, ...], ...]


@functools.lru_cache(maxsize=64)
def _translations(algebra: FiniteAlgebra) -> tuple[tuple[int, ...], ...]:
    # elementary translations x -> f(c1..x..ck), deduplicated, constant maps dropped
    n = algebra.size
    found: set[tuple[int, ...]] = set()
    for symbol, arity in algebra.signature.symbols:
        table = algebra.table(symbol)
        for position in range(arity):
            for rest in argument_tuples(n, arity - 1):
                mapping = tuple(
                    table[table_index(n, rest[:position] + (x,) + rest[position:])] for x in range(n)
                )
                if len(set(mapping)) > 1:
                    found.add(mapping)
    return tuple(sorted(found))

def _check_pairs(algebra: FiniteAlgebra, pairs: Iterable[tuple[Element, Element]]) -> list[tuple[Element, Element]]:
    checked = list(pairs)
    for first, second in checked:
        if not (0 <= first < algebra.size and 0 <= second < algebra.size):
            raise InvalidParameter(f"pair ({first}, {second}) outside the carrier of {algebra.name}")
    return checked

def congruence_generated(algebra: FiniteAlgebra, pairs: Iterable[tuple[Element, Element]]) -> Congruence:
    """The least congruence containing the pairs.

    Every merged pair is pushed through every elementary translation until nothing new
    merges; the equivalence closure comes from the union-find structure.

    Raises:
        InvalidParameter: If a pair lies outside the carrier.
    """
    parents = PartitionLib.new_parents(algebra.size)
    pending = []
    for first, second in _check_pairs(algebra, pairs):
        if PartitionLib.unite(parents, first, second):
            pending.append((first, second))
    translations = _translations(algebra)
    while pending:
        first, second = pending.pop()
        for mapping in translations:
            image_first, image_second = mapping[first], mapping[second]
            if PartitionLib.unite(parents, image_first, image_second):
                pending.append((image_first, image_second))
    return Congruence(PartitionLib.blocks_of(parents))

def join(algebra: FiniteAlgebra, first: Congruence, second: Congruence) -> Congruence:
    pairs = list(PartitionLib.generating_pairs(first.blocks)) + list(PartitionLib.generating_pairs(second.blocks))
    return congruence_generated(algebra, pairs)

def _check_cap(algebra: FiniteAlgebra, cap: int) -> None:
    if cap > const.MAX_CONGRUENCE_CAP:
        raise CapExceeded(f"congruence cap {cap} exceeds the hard limit {const.MAX_CONGRUENCE_CAP}")
    if algebra.size > cap:
        raise CapExceeded(f"algebra {algebra.name} has {algebra.size} elements, congruence cap is {cap}")

def _lattice_order(theta: Congruence) -> tuple[int, Blocks]:
    return (-theta.block_count, theta.blocks)

@functools.lru_cache(maxsize=256)
def all_congruences(algebra: FiniteAlgebra, cap: int = const.DEFAULT_CONGRUENCE_CAP) -> CongruenceLattice:
    """Every congruence, as the join closure of the principal congruences.

    Raises:
        CapExceeded: If the algebra is larger than the cap.
    """
    _check_cap(algebra, cap)
    n = algebra.size
    identity = Congruence(PartitionLib.identity(n))
    principal = {
        congruence_generated(algebra, [(a, b)]) for a in range(n) for b in range(a + 1, n)
    }
    found = {identity} | principal
    frontier = list(principal)
    while frontier:
        fresh = []
        for theta in frontier:
            for generator in principal:
                if generator.refines(theta):
                    continue
                joined = join(algebra, theta, generator)
                if joined not in found:
                    found.add(joined)
                    fresh.append(joined)
        frontier = fresh
    lattice = CongruenceLattice(algebra, tuple(sorted(found, key=_lattice_order)))
    emit(CongruenceLatticeComputed(algebra.name, n, len(lattice)))
    return lattice

def compatible_partitions(algebra: FiniteAlgebra) -> tuple[Congruence, ...]:
    """Brute force: every partition of the carrier that respects all operations."""
    return tuple(sorted(
        (Congruence(blocks) for blocks in PartitionLib.all_partitions(algebra.size) if is_compatible(algebra, blocks)),
        key=_lattice_order,
    ))

def is_simple(algebra: FiniteAlgebra, cap: int = const.DEFAULT_CONGRUENCE_CAP) -> bool:
    return algebra.size >= 2 and len(all_congruences(algebra, cap)) == 2

def is_semisimple(algebra: FiniteAlgebra, cap: int = const.DEFAULT_CONGRUENCE_CAP) -> SemisimplicityCertificate:
    """Decide whether the meet of the maximal proper congruences is the identity.

    The one-element algebra counts as semisimple: it is the empty subdirect product.
    """
    if algebra.size == 1:
        return SemisimplicityCertificate(True, False, (), ((),))
    lattice = all_congruences(algebra, cap)
    coatoms = lattice.coatoms()
    embedding = tuple(tuple(theta.blocks[a] for theta in coatoms) for a in range(algebra.size))
    semisimple = len(set(embedding)) == algebra.size
    return SemisimplicityCertificate(semisimple, len(lattice) == 2, coatoms, embedding)
