import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .. import constants as const
from ..errors import InvalidParameter
from ..events import WitnessFound, emit
from ..types import Bitmask, Element
from . import BitsetUtils
from .Congruences import Congruence, all_congruences, congruence_generated
from .FiniteAlgebra import FiniteAlgebra, all_valuations, compile_formula
from .Formula import Formula, Var, variables_of
from .interfaces.ITranslation import ITranslation
from .Verdict import Verdict, Witness


class FLTranslation(ITranslation):
    """a is designated when a /\\ 1 is congruent to 1, i.e. 1 <= a holds in the quotient."""
    style = "fl"

    def term(self, algebra: FiniteAlgebra, element: Element) -> Element:
        return algebra.apply(const.MEET, element, algebra.constant(const.UNIT))


class ModalTranslation(ITranslation):
    """a is designated when a itself is congruent to 1."""
    style = "modal"

    def term(self, algebra: FiniteAlgebra, element: Element) -> Element:
        return element


FL_TRANSLATION = FLTranslation()
MODAL_TRANSLATION = ModalTranslation()


def translation_for(algebra: FiniteAlgebra) -> ITranslation:
    return MODAL_TRANSLATION if algebra.has(const.BOX) else FL_TRANSLATION

def translation_by_style(style: str) -> ITranslation:
    match style:
        case "fl":
            return FL_TRANSLATION
        case "modal":
            return MODAL_TRANSLATION
    raise InvalidParameter(f"unknown translation style {style!r}; expected 'fl' or 'modal'")


# Structs
@dataclass(frozen=True)
class DeductiveFilter:
    """F = {a : (t(a), 1) in source}; trivial iff F is the whole carrier."""
    mask: Bitmask
    source: Congruence
    size: int

    def contains(self, element: Element) -> bool:
        return BitsetUtils.contains(self.mask, element)

    @property
    def elements(self) -> tuple[Element, ...]:
        return BitsetUtils.elements_of(self.mask)

    def is_trivial(self) -> bool:
        return self.mask == BitsetUtils.full_mask(self.size)

    def format(self, algebra: FiniteAlgebra | None = None) -> str:
        return BitsetUtils.format_mask(self.mask, algebra.labels if algebra is not None else None)


class FilterLattice:
    """The deductive filters of one algebra under one translation, with memoised Fg.

    Filters are the images of congruences; Fg(X) is the image of the congruence generated by
    the pairs (t(x), 1) for x in X.
    """
    def __init__(
        self,
        algebra: FiniteAlgebra,
        translation: ITranslation | None = None,
        cap: int = const.DEFAULT_CONGRUENCE_CAP,
    ) -> None:
        self.algebra = algebra
        self.translation = translation or translation_for(algebra)
        self.cap = cap
        self.carrier = BitsetUtils.full_mask(algebra.size)
        self._unit = algebra.constant(const.UNIT)
        self._terms = tuple(self.translation.term(algebra, a) for a in algebra.elements)
        # generating set -> filter
        self._generated: dict[Bitmask, DeductiveFilter] = {}

    def image(self, theta: Congruence) -> Bitmask:
        return BitsetUtils.mask_of(
            a for a in self.algebra.elements if theta.related(self._terms[a], self._unit)
        )

    @functools.cached_property
    def filters(self) -> tuple[DeductiveFilter, ...]:
        found: dict[Bitmask, DeductiveFilter] = {}
        for theta in all_congruences(self.algebra, self.cap):
            found.setdefault(self.image(theta), DeductiveFilter(self.image(theta), theta, self.algebra.size))
        return tuple(sorted(found.values(), key=lambda f: (f.mask.bit_count(), f.mask)))

    def generated(self, mask: Bitmask) -> DeductiveFilter:
        """Fg of the subset with the given bitmask."""
        if mask not in self._generated:
            theta = congruence_generated(
                self.algebra, [(self._terms[x], self._unit) for x in BitsetUtils.elements_of(mask)]
            )
            self._generated[mask] = DeductiveFilter(self.image(theta), theta, self.algebra.size)
        return self._generated[mask]

    def extend(self, base: DeductiveFilter, elements: Iterable[Element]) -> DeductiveFilter:
        """Fg(F u X)."""
        return self.generated(base.mask | BitsetUtils.mask_of(elements))

    def is_trivial(self, mask: Bitmask) -> bool:
        return mask == self.carrier

    @property
    def least(self) -> DeductiveFilter:
        return self.generated(0)

    @functools.cached_property
    def maximal(self) -> tuple[DeductiveFilter, ...]:
        """Maximal non-trivial filters."""
        proper = [f for f in self.filters if not f.is_trivial()]
        return tuple(
            f for f in proper
            if not any(g.mask != f.mask and BitsetUtils.is_subset(f.mask, g.mask) for g in proper)
        )


@functools.lru_cache(maxsize=256)
def filter_lattice(
    algebra: FiniteAlgebra, translation: ITranslation | None = None, cap: int = const.DEFAULT_CONGRUENCE_CAP
) -> FilterLattice:
    return FilterLattice(algebra, translation, cap)

def all_filters(
    algebra: FiniteAlgebra, translation: ITranslation | None = None, cap: int = const.DEFAULT_CONGRUENCE_CAP
) -> tuple[DeductiveFilter, ...]:
    """Images of all congruences, deduplicated, smallest first.

    Raises:
        CapExceeded: If the algebra is larger than the congruence cap.
    """
    return filter_lattice(algebra, translation, cap).filters

def filter_generated(
    algebra: FiniteAlgebra, translation: ITranslation | None, elements: Iterable[Element]
) -> DeductiveFilter:
    elements = list(elements)
    if any(not 0 <= e < algebra.size for e in elements):
        raise InvalidParameter(f"subset {elements} is not inside the carrier of {algebra.name}")
    return filter_lattice(algebra, translation).generated(BitsetUtils.mask_of(elements))


@dataclass(frozen=True)
class Matrix:
    algebra: FiniteAlgebra
    filter: Bitmask

    def designates(self, element: Element) -> bool:
        return BitsetUtils.contains(self.filter, element)

    def is_trivial(self) -> bool:
        return self.filter == BitsetUtils.full_mask(self.algebra.size)


@dataclass(frozen=True)
class MatrixFamily:
    matrices: tuple[Matrix, ...]

    def __iter__(self):
        return iter(self.matrices)

    def __len__(self) -> int:
        return len(self.matrices)

    @classmethod
    def from_algebras(
        cls,
        algebras: Sequence[FiniteAlgebra],
        policy: str = "least",
        translation: ITranslation | None = None,
        cap: int = const.DEFAULT_CONGRUENCE_CAP,
    ) -> "MatrixFamily":
        """Designate filters on each algebra.

        `least` designates the least filter (the theorems), `all` adds one matrix per
        filter, and `file` uses the designated set read from the algebra file.

        Raises:
            InvalidParameter: If the policy is unknown or a designated set is not a filter.
        """
        matrices = []
        for algebra in algebras:
            lattice = filter_lattice(algebra, translation or translation_for(algebra), cap)
            match policy:
                case "least":
                    matrices.append(Matrix(algebra, lattice.least.mask))
                case "all":
                    matrices.extend(Matrix(algebra, f.mask) for f in lattice.filters)
                case "file":
                    matrices.append(Matrix(algebra, _designated_filter(algebra, lattice)))
                case _:
                    raise InvalidParameter(f"unknown designation policy {policy!r}")
        return cls(tuple(matrices))

def _designated_filter(algebra: FiniteAlgebra, lattice: FilterLattice) -> Bitmask:
    if algebra.designated is None:
        raise InvalidParameter(f"algebra {algebra.name} has no designated set")
    mask = BitsetUtils.mask_of(algebra.designated)
    if lattice.generated(mask).mask != mask:
        raise InvalidParameter(f"designated set of {algebra.name} is not a deductive filter")
    return mask


# Consequence
def consequence(family: MatrixFamily, gamma: Sequence[Formula], phi: Formula) -> Verdict:
    """Whether every valuation designating all of gamma designates phi, in every matrix.

    The failing verdict carries the first countermodel in family order and lexicographic
    valuation order.
    """
    names = variables_of(list(gamma) + [phi])
    for matrix in family:
        algebra = matrix.algebra
        premises = [compile_formula(algebra, g) for g in gamma]
        conclusion = compile_formula(algebra, phi)
        for valuation in all_valuations(names, algebra.size):
            if all(matrix.designates(p(valuation)) for p in premises) and not matrix.designates(conclusion(valuation)):
                witness = Witness(algebra.name, tuple(valuation.items()), matrix.filter, note="conclusion not designated")
                emit(WitnessFound(algebra.name, "consequence", witness.describe(algebra.labels)))
                return Verdict.fails(witness)
    return Verdict.holds()

def is_antitheorem(family: MatrixFamily, gamma: Sequence[Formula]) -> Verdict:
    """Whether no non-trivial matrix of the family designates all of gamma at once."""
    names = variables_of(list(gamma))
    for matrix in family:
        if matrix.is_trivial():
            continue
        algebra = matrix.algebra
        premises = [compile_formula(algebra, g) for g in gamma]
        for valuation in all_valuations(names, algebra.size):
            if all(matrix.designates(p(valuation)) for p in premises):
                witness = Witness(algebra.name, tuple(valuation.items()), matrix.filter, note="premises designated")
                return Verdict.fails(witness)
    return Verdict.holds()

def fresh_variable(formulas: Sequence[Formula]) -> Var:
    taken = set(variables_of(formulas))
    name, index = const.SCHEME_P, 0
    while name in taken:
        index += 1
        name = f"{const.SCHEME_P}{index}"
    return Var(name)

def antitheorem_by_fresh_variable(family: MatrixFamily, gamma: Sequence[Formula]) -> Verdict:
    """Gamma entails a variable that does not occur in it."""
    return consequence(family, gamma, fresh_variable(gamma))
