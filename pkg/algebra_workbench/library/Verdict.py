from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from ..types import Bitmask, Element
from . import BitsetUtils


class Status(Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    HOLDS_UP_TO_BOUND = "HOLDS-UP-TO-BOUND"


# Structs
@dataclass(frozen=True)
class Witness:
    """Where a check failed: the algebra, the designated filter, the elements (by variable or
    role name) and the indices tried, plus a short note naming the failing direction."""
    algebra: str
    elements: tuple[tuple[str, Element], ...] = ()
    filter: Bitmask | None = None
    indices: tuple[int, ...] = ()
    note: str = ""

    def element(self, name: str) -> Element:
        return dict(self.elements)[name]

    def describe(self, labels: tuple[str, ...] | None = None) -> str:
        parts = [f"algebra={self.algebra}"]
        if self.filter is not None:
            parts.append(f"F={BitsetUtils.format_mask(self.filter, labels)}")
        for name, value in self.elements:
            parts.append(f"{name}={labels[value] if labels else value}")
        if self.indices:
            parts.append("n=" + ",".join(str(i) for i in self.indices))
        if self.note:
            parts.append(f"({self.note})")
        return " ".join(parts)

    def to_record(self) -> dict[str, Any]:
        return {
            "algebra": self.algebra,
            "filter": list(BitsetUtils.elements_of(self.filter)) if self.filter is not None else None,
            "elements": dict(self.elements),
            "indices": list(self.indices),
            "note": self.note,
        }


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: Witness | None = None
    bound: int | None = None
    notes: tuple[str, ...] = field(default=())

    @classmethod
    def holds(cls, bound: int | None = None, notes: tuple[str, ...] = ()) -> "Verdict":
        return cls(Status.HOLDS, None, bound, notes)

    @classmethod
    def fails(cls, witness: Witness, bound: int | None = None) -> "Verdict":
        return cls(Status.FAILS, witness, bound)

    @classmethod
    def up_to_bound(cls, bound: int, witness: Witness | None = None) -> "Verdict":
        # the witness, if any, shows where a larger index might still be needed
        return cls(Status.HOLDS_UP_TO_BOUND, witness, bound)

    @property
    def failed(self) -> bool:
        return self.status is Status.FAILS

    @property
    def is_exact_hold(self) -> bool:
        return self.status is Status.HOLDS

    def text(self, labels: tuple[str, ...] | None = None) -> str:
        line = self.status.value
        if self.status is Status.HOLDS_UP_TO_BOUND and self.bound is not None:
            line += f" (bound {self.bound})"
        if self.witness is not None and self.status is Status.FAILS:
            line += " witness: " + self.witness.describe(labels)
        return line

    def to_record(self) -> dict[str, Any]:
        return {
            "status": self.status.value,
            "bound": self.bound,
            "witness": self.witness.to_record() if self.witness is not None else None,
            "notes": list(self.notes),
        }


def combine(verdicts: list[Verdict]) -> Verdict:
    """FAILS wins, then HOLDS-UP-TO-BOUND; the first failure in order is kept."""
    for verdict in verdicts:
        if verdict.failed:
            return verdict
    for verdict in verdicts:
        if verdict.status is Status.HOLDS_UP_TO_BOUND:
            return verdict
    return Verdict.holds()
