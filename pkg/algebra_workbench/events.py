"""Typed events announcing the results of workbench computations.

Every event is a frozen dataclass. `emit` forwards the event name and its fields to the
`algebra_workbench` logger; configuring handlers is left to the application (see `cli`).
"""
import logging
from dataclasses import dataclass, fields

logger = logging.getLogger("algebra_workbench")


# Events
@dataclass(frozen=True)
class CongruenceLatticeComputed:
    algebra: str
    size: int
    congruences: int


@dataclass(frozen=True)
class MembershipChecked:
    algebra: str
    algebra_class: str
    verdict: bool
    failures: int


@dataclass(frozen=True)
class PrincipleChecked:
    algebra: str
    principle: str
    family: str
    bound: int
    status: str


@dataclass(frozen=True)
class WitnessFound:
    algebra: str
    check: str
    witness: str


@dataclass(frozen=True)
class CatalogEnumerated:
    algebra_class: str
    size: int
    count: int


@dataclass(frozen=True)
class CatalogSaved:
    directory: str
    entries: int


@dataclass(frozen=True)
class CatalogLoaded:
    directory: str
    entries: int


@dataclass(frozen=True)
class GlivenkoCompared:
    pair: str
    formula: str
    status: str


@dataclass(frozen=True)
class CountermodelCertified:
    n: int
    epsilon: str
    i_max: int
    passed: bool


_DEBUG_EVENTS = (CongruenceLatticeComputed, MembershipChecked)


def emit(event: object) -> None:
    level = logging.DEBUG if isinstance(event, _DEBUG_EVENTS) else logging.INFO
    if not logger.isEnabledFor(level):
        return
    payload = " ".join(f"{f.name}={getattr(event, f.name)}" for f in fields(event))
    logger.log(level, "%s %s", type(event).__name__, payload)
