from abc import ABC, abstractmethod

from ...types import Element
from ..FiniteAlgebra import FiniteAlgebra


class ITranslation(ABC):
    """Turns an element into the term that must be congruent to the unit for the element to
    be designated."""
    style: str

    @abstractmethod
    def term(self, algebra: FiniteAlgebra, element: Element) -> Element:
        pass
