from typing import Iterable

from ..types import Bitmask, Element


"""Library to convert between subsets of a carrier {0..n-1} and integer bitmasks."""
def mask_of(elements: Iterable[Element]) -> Bitmask:
    mask = 0
    for element in elements:
        mask |= 1 << element
    return mask

def elements_of(mask: Bitmask) -> tuple[Element, ...]:
    elements = []
    index = 0
    while mask:
        if mask & 1:
            elements.append(index)
        mask >>= 1
        index += 1
    return tuple(elements)

def full_mask(size: int) -> Bitmask:
    return (1 << size) - 1

def contains(mask: Bitmask, element: Element) -> bool:
    return bool(mask >> element & 1)

def is_subset(inner: Bitmask, outer: Bitmask) -> bool:
    return inner & ~outer == 0

def format_mask(mask: Bitmask, labels: tuple[str, ...] | None = None) -> str:
    elements = elements_of(mask)
    if labels is not None:
        return "{" + ",".join(labels[e] for e in elements) + "}"
    return "{" + ",".join(str(e) for e in elements) + "}"
