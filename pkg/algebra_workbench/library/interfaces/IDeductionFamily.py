from abc import ABC, abstractmethod
from typing import Callable

from ..Formula import Formula


class IDeductionFamily(ABC):
    name: str
    variables: tuple[str, ...]
    bound: int | None
    is_global: bool

    @abstractmethod
    def find_member(self, accepted: Callable[[tuple[Formula, ...]], bool]) -> tuple[int, ...] | None:
        """Returns the index trace of a member set that `accepted` admits, or None if there is none
        within the bound."""
        pass
