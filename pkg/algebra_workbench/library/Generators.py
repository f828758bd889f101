"""Generators for the standard finite algebras: Łukasiewicz and Gödel chains, Boolean
algebras, modal expansions and monadic algebras built from a cluster partition."""
from fractions import Fraction
from string import ascii_lowercase
from typing import Sequence

from .. import constants as const
from ..errors import InvalidParameter, InvalidPartition
from . import BitsetUtils
from .AlgebraClasses import class_by_name, is_member
from .FiniteAlgebra import (
    FL_SIGNATURE,
    MODAL_SIGNATURE,
    FiniteAlgebra,
    OrderRelation,
    build_algebra,
    order_from_meet,
)


def _check_chain_length(k: int) -> None:
    if k < 2:
        raise InvalidParameter(f"a chain needs at least 2 elements, got {k}")

def _chain_labels(k: int) -> tuple[str, ...]:
    # 0, a, b, ..., 1
    return ("0",) + tuple(ascii_lowercase[i] for i in range(k - 2)) + ("1",)

def make_lukasiewicz_chain(k: int) -> FiniteAlgebra:
    """The k-element MV chain on {0, 1/(k-1), ..., 1}.

    Element i stands for i/(k-1); x*y = max(x+y-1, 0), x->y = min(1, 1-x+y).

    Raises:
        InvalidParameter: If k < 2.
    """
    _check_chain_length(k)
    top = k - 1
    residual = lambda x, y: min(top, top - x + y)
    return build_algebra(
        f"luk{k}",
        k,
        FL_SIGNATURE,
        {
            const.MEET: min,
            const.JOIN: max,
            const.FUSION: lambda x, y: max(0, x + y - top),
            const.LEFT_RESIDUAL: residual,
            const.RIGHT_RESIDUAL: lambda z, y: residual(y, z),
            const.UNIT: lambda: top,
            const.ZERO: lambda: 0,
            const.TOP: lambda: top,
            const.BOTTOM: lambda: 0,
        },
        tuple(str(Fraction(i, top)) for i in range(k)),
    )

def make_godel_chain(k: int) -> FiniteAlgebra:
    """The k-element Heyting chain: fusion is meet and x->y is 1 if x <= y, else y.

    Raises:
        InvalidParameter: If k < 2.
    """
    _check_chain_length(k)
    top = k - 1
    residual = lambda x, y: top if x <= y else y
    return build_algebra(
        f"godel{k}",
        k,
        FL_SIGNATURE,
        {
            const.MEET: min,
            const.JOIN: max,
            const.FUSION: min,
            const.LEFT_RESIDUAL: residual,
            const.RIGHT_RESIDUAL: lambda z, y: residual(y, z),
            const.UNIT: lambda: top,
            const.ZERO: lambda: 0,
            const.TOP: lambda: top,
            const.BOTTOM: lambda: 0,
        },
        _chain_labels(k),
    )

def _subset_label(mask: int, atoms: int) -> str:
    if mask == 0:
        return "0"
    if mask == BitsetUtils.full_mask(atoms):
        return "1"
    return "".join(ascii_lowercase[i] for i in BitsetUtils.elements_of(mask))

def make_boolean(atoms: int) -> FiniteAlgebra:
    """The Boolean algebra of subsets of `atoms` atoms; element x is the subset with bitmask x.

    Raises:
        InvalidParameter: If atoms < 1 (the one-element Boolean algebra is not generated).
    """
    if atoms < 1:
        raise InvalidParameter("a Boolean algebra needs at least one atom")
    size = 1 << atoms
    full = size - 1
    residual = lambda x, y: (full & ~x) | y
    return build_algebra(
        f"boolean{size}",
        size,
        FL_SIGNATURE,
        {
            const.MEET: lambda x, y: x & y,
            const.JOIN: lambda x, y: x | y,
            const.FUSION: lambda x, y: x & y,
            const.LEFT_RESIDUAL: residual,
            const.RIGHT_RESIDUAL: lambda z, y: residual(y, z),
            const.UNIT: lambda: full,
            const.ZERO: lambda: 0,
            const.TOP: lambda: full,
            const.BOTTOM: lambda: 0,
        },
        tuple(_subset_label(x, atoms) for x in range(size)),
    )


def _check_fl_base(base: FiniteAlgebra) -> None:
    if base.signature != FL_SIGNATURE:
        raise InvalidParameter(f"algebra {base.name} must have the FL signature to take modalities")

def with_modalities(
    base: FiniteAlgebra, box: Sequence[int], diamond: Sequence[int] | None = None, name: str | None = None
) -> FiniteAlgebra:
    """Expand an FL-algebra by box and diamond tables.

    Without a diamond table the dual ~[]~x is used, which is the diamond of a Boolean base.
    """
    _check_fl_base(base)
    n = base.size
    if len(box) != n or (diamond is not None and len(diamond) != n):
        raise InvalidParameter("modal tables need one entry per element")
    if diamond is None:
        bottom = base.constant(const.BOTTOM)
        negation = [base.apply(const.LEFT_RESIDUAL, x, bottom) for x in range(n)]
        diamond = [negation[box[negation[x]]] for x in range(n)]
    return FiniteAlgebra(
        name or f"{base.name}+box",
        n,
        MODAL_SIGNATURE,
        base.tables + (tuple(box), tuple(diamond)),
        base.labels,
    )


def join_irreducibles(base: FiniteAlgebra, order: OrderRelation | None = None) -> tuple[int, ...]:
    """Elements with exactly one lower cover."""
    order = order or order_from_meet(base)
    return tuple(
        j for j in range(base.size)
        if sum(1 for x in range(base.size) if order.covers(x, j)) == 1
    )

def _join_all(base: FiniteAlgebra, elements: Sequence[int]) -> int:
    result = base.constant(const.BOTTOM)
    for element in elements:
        result = base.apply(const.JOIN, result, element)
    return result

def make_monadic(base: FiniteAlgebra, clusters: Sequence[Sequence[int]], name: str | None = None) -> FiniteAlgebra:
    """The monadic expansion of a finite Heyting algebra by a partition of its join-irreducibles.

    With E(j) the cluster of j: []x is the join of the j whose whole cluster lies below x, and
    <>x is the join of the j whose cluster meets the down-set of x. On a Boolean base with the
    atoms in one cluster this is the S5 box: []x = 0 unless x = 1.

    Raises:
        InvalidPartition: If the clusters do not partition the join-irreducibles or the
            result is not a monadic Heyting algebra.
    """
    _check_fl_base(base)
    order = order_from_meet(base)
    irreducibles = set(join_irreducibles(base, order))
    members = [j for cluster in clusters for j in cluster]
    if sorted(members) != sorted(irreducibles) or len(set(members)) != len(members):
        raise InvalidPartition(f"clusters {list(map(list, clusters))} do not partition the join-irreducibles {sorted(irreducibles)}")
    cluster_of = {j: tuple(cluster) for cluster in clusters for j in cluster}

    box, diamond = [], []
    for x in range(base.size):
        below = {j for j in irreducibles if order.leq(j, x)}
        box.append(_join_all(base, sorted(j for j in irreducibles if set(cluster_of[j]) <= below)))
        diamond.append(_join_all(base, sorted(j for j in irreducibles if set(cluster_of[j]) & below)))
    algebra = with_modalities(base, box, diamond, name or f"{base.name}+m{len(clusters)}")
    if not is_member(algebra, class_by_name("mipc")):
        raise InvalidPartition(f"clusters {list(map(list, clusters))} do not define a monadic Heyting algebra")
    return algebra


# Named examples
def boolean2() -> FiniteAlgebra:
    return make_boolean(1)

def boolean4() -> FiniteAlgebra:
    return make_boolean(2)

def heyting3() -> FiniteAlgebra:
    return make_godel_chain(3)

def s4_boolean4() -> FiniteAlgebra:
    """Boolean-4 with []a = 0 and []b = b."""
    return with_modalities(boolean4(), (0, 0, 2, 3), name="s4boolean4")

def s5_boolean4() -> FiniteAlgebra:
    """Boolean-4 with both atoms in one cluster: []x = 0 unless x = 1."""
    return make_monadic(boolean4(), [[1, 2]], name="s5boolean4")

def generator_by_name(token: str) -> FiniteAlgebra:
    """Build a named algebra: `boolean2`, `luk3`, `godel4`, `boolean8`, `s4boolean4`, `s5boolean4`."""
    fixed = {"boolean2": boolean2, "heyting3": heyting3, "s4boolean4": s4_boolean4, "s5boolean4": s5_boolean4}
    if token in fixed:
        return fixed[token]()
    for prefix, build in (("luk", make_lukasiewicz_chain), ("godel", make_godel_chain)):
        if token.startswith(prefix) and token[len(prefix):].isdigit():
            return build(int(token[len(prefix):]))
    if token.startswith("boolean") and token[len("boolean"):].isdigit():
        size = int(token[len("boolean"):])
        if size < 2 or size & (size - 1):
            raise InvalidParameter(f"Boolean algebras have power-of-two sizes, got {size}")
        return make_boolean(size.bit_length() - 1)
    raise InvalidParameter(f"no generated algebra named {token!r}")
