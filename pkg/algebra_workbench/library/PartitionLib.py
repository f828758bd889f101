from typing import Iterable, Iterator

from ..types import Blocks, Element


"""Library for partitions of a carrier {0..n-1}. Implemented using parent arrays (union-find).

A partition is exchanged as a `Blocks` tuple: the block index of every element, numbered in
order of first occurrence, so that equal partitions have equal tuples.
"""
def new_parents(size: int) -> list[int]:
    return list(range(size))

def find(parents: list[int], element: Element) -> Element:
    root = element
    while parents[root] != root:
        root = parents[root]
    # path compression
    while parents[element] != root:
        parents[element], element = root, parents[element]
    return root

def unite(parents: list[int], first: Element, second: Element) -> bool:
    root_first = find(parents, first)
    root_second = find(parents, second)
    if root_first == root_second:
        return False
    # the smaller root becomes the representative
    if root_first < root_second:
        parents[root_second] = root_first
    else:
        parents[root_first] = root_second
    return True

def canonical_blocks(labels: Iterable[object]) -> Blocks:
    numbering: dict[object, int] = {}
    blocks = []
    for label in labels:
        if label not in numbering:
            numbering[label] = len(numbering)
        blocks.append(numbering[label])
    return tuple(blocks)

def blocks_of(parents: list[int]) -> Blocks:
    return canonical_blocks(find(parents, element) for element in range(len(parents)))

def block_count(blocks: Blocks) -> int:
    return max(blocks) + 1 if blocks else 0

def block_lists(blocks: Blocks) -> list[list[Element]]:
    grouped: list[list[Element]] = [[] for _ in range(block_count(blocks))]
    for element, block in enumerate(blocks):
        grouped[block].append(element)
    return grouped

def representatives(blocks: Blocks) -> tuple[Element, ...]:
    return tuple(group[0] for group in block_lists(blocks))

def generating_pairs(blocks: Blocks) -> Iterator[tuple[Element, Element]]:
    # (representative, element) for every non-representative element
    reps = representatives(blocks)
    for element, block in enumerate(blocks):
        if reps[block] != element:
            yield reps[block], element

def meet(first: Blocks, second: Blocks) -> Blocks:
    return canonical_blocks(zip(first, second))

def refines(finer: Blocks, coarser: Blocks) -> bool:
    image: dict[int, int] = {}
    for block, coarse in zip(finer, coarser):
        if image.setdefault(block, coarse) != coarse:
            return False
    return True

def identity(size: int) -> Blocks:
    return tuple(range(size))

def total(size: int) -> Blocks:
    return (0,) * size

def all_partitions(size: int) -> Iterator[Blocks]:
    """Enumerate every partition as restricted growth strings."""
    if size == 0:
        yield ()
        return

    def extend(prefix: list[int], highest: int) -> Iterator[Blocks]:
        if len(prefix) == size:
            yield tuple(prefix)
            return
        for block in range(highest + 2):
            prefix.append(block)
            yield from extend(prefix, max(highest, block))
            prefix.pop()

    yield from extend([0], 0)
