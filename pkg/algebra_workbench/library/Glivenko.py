import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .. import constants as const
from ..errors import InvalidParameter, SignatureMismatch, UnknownSymbol
from ..events import CountermodelCertified, GlivenkoCompared, emit
from ..types import Element
from .Catalog import Catalog, catalog_from_source
from .Deduction import MatrixFamily, consequence
from .FiniteAlgebra import FiniteAlgebra, compile_formula, evaluate
from .Formula import Formula, Var, fill_hole, print_formula, variables
from .FormulaParser import parse
from .SchemeFamilies import SchemeFamily, expand_scheme, flew_il
from .Verdict import Status, Verdict

# strong sides whose consequence relation is decided exactly by the listed algebras
EXACT_STRONG_SOURCES = frozenset({"boolean2"})


# Structs
@dataclass(frozen=True)
class GlivenkoPair:
    """A weak logic, a strong logic and a one-hole scheme translating the strong into the weak."""
    name: str
    weak: str
    strong: str
    scheme: Formula

    def __post_init__(self) -> None:
        if const.HOLE not in variables(self.scheme):
            raise InvalidParameter(f"scheme {print_formula(self.scheme)} of pair {self.name} has no hole")

    @property
    def strong_exact(self) -> bool:
        return self.strong in EXACT_STRONG_SOURCES

    def translate(self, formula: Formula) -> Formula:
        return fill_hole(self.scheme, formula)


SHIPPED_PAIRS = (
    GlivenkoPair("heyting-boolean", "heyting:max=6", "boolean2", parse("~~_")),
    GlivenkoPair("s4-s5", "s4:boolean=3", "s5:boolean=3", parse("~[]~[]_")),
    GlivenkoPair("ikn4-lem", "ikn4:max=4", "ikn4:max=4,lem=pcp", parse("~[]_1 ~[]_1 _")),
    GlivenkoPair("mipc-ws5", "mipc:max=6", "ws5:max=6", parse("~~[]_")),
    GlivenkoPair("bl-luk", "bl:max=5", "luk:max=5", parse("~~_")),
    GlivenkoPair("flen-lem", "flen:n=2,max=4", "flen:n=2,max=4,lem=pcp", parse("~(1 /\\ ~(1 /\\ _)^2)^2")),
)

def pair_by_name(name: str) -> GlivenkoPair:
    for pair in SHIPPED_PAIRS:
        if pair.name == name:
            return pair
    raise InvalidParameter(f"no shipped pair named {name!r}; expected one of {[p.name for p in SHIPPED_PAIRS]}")


def check_scheme(scheme: Formula, algebras: Sequence[FiniteAlgebra]) -> None:
    """Raises SignatureMismatch if the filled scheme uses a connective some algebra lacks."""
    filled = fill_hole(scheme, Var(const.SCHEME_P))
    for algebra in algebras:
        try:
            compile_formula(algebra, filled)
        except UnknownSymbol as error:
            raise SignatureMismatch(f"scheme {print_formula(scheme)} does not fit {algebra.name}: {error}") from None


@dataclass(frozen=True)
class GlivenkoReport:
    pair: str
    formula: str
    strong: Verdict
    weak: Verdict
    strong_exact: bool

    @property
    def match(self) -> bool:
        return self.strong.failed == self.weak.failed

    @property
    def exact_mismatch(self) -> bool:
        """The strong side holds exactly while the weak side is refuted by a countermodel."""
        return self.strong_exact and self.strong.is_exact_hold and self.weak.failed

    @property
    def status(self) -> str:
        return "MATCH" if self.match else "MISMATCH"

    def lines(self) -> list[str]:
        return [
            f"{self.status} {self.pair}: {self.formula}",
            f"  strong: {self.strong.text()}",
            f"  weak:   {_weak_text(self.weak)}",
        ]

    def to_record(self) -> dict[str, Any]:
        return {
            "pair": self.pair,
            "formula": self.formula,
            "status": self.status,
            "exact_mismatch": self.exact_mismatch,
            "strong": self.strong.to_record(),
            "weak": self.weak.to_record(),
        }

def _weak_text(verdict: Verdict) -> str:
    if verdict.status is Status.HOLDS_UP_TO_BOUND:
        return f"VALID-UP-TO-SIZE-{verdict.bound}"
    return verdict.text()

def _validation(verdict: Verdict, exact: bool, catalog: Catalog) -> Verdict:
    if verdict.failed or exact:
        return verdict
    return Verdict.up_to_bound(catalog.max_size)

def glivenko_check(
    pair: GlivenkoPair,
    gamma: Sequence[Formula],
    phi: Formula,
    policy: str = "least",
    weak: Catalog | None = None,
    strong: Catalog | None = None,
    jobs: int = 1,
) -> GlivenkoReport:
    """Compare gamma |- phi on the strong side with gamma |- scheme(phi) on the weak side.

    A weak refutation is exact; a weak validation only covers the catalog and is reported
    up to its size bound. The strong verdict is exact for the strong sources in
    `EXACT_STRONG_SOURCES`.

    Raises:
        SignatureMismatch: If the scheme uses a connective outside either catalog's signature.
    """
    weak = weak if weak is not None else catalog_from_source(pair.weak, jobs)
    strong = strong if strong is not None else catalog_from_source(pair.strong, jobs)
    check_scheme(pair.scheme, weak.algebras + strong.algebras)
    strong_verdict = consequence(MatrixFamily.from_algebras(strong.algebras, policy), gamma, phi)
    weak_verdict = consequence(MatrixFamily.from_algebras(weak.algebras, policy), gamma, pair.translate(phi))
    report = GlivenkoReport(
        pair.name,
        print_formula(phi),
        _validation(strong_verdict, pair.strong_exact, strong),
        _validation(weak_verdict, False, weak),
        pair.strong_exact,
    )
    emit(GlivenkoCompared(pair.name, report.formula, report.status))
    return report


# Local form
@dataclass(frozen=True)
class LocalGlivenkoReport:
    """For each n the least k with gamma |= J_k(I_n(phi)) over the catalog, or None."""
    bound: int
    least: tuple[tuple[int, int | None], ...]
    notes: tuple[str, ...] = field(default=())

    def lines(self) -> list[str]:
        rows = [f"n={n}: " + (f"k={k}" if k is not None else "NONE-UP-TO-BOUND") for n, k in self.least]
        return rows + list(self.notes)

def _singleton(family: SchemeFamily, n: int, argument: Formula) -> Formula:
    members = expand_scheme(family, n, argument)
    if len(members) != 1:
        raise InvalidParameter(f"family {family.name} must have singleton member sets")
    return members[0]

def local_glivenko_check(
    algebras: Sequence[FiniteAlgebra],
    gamma: Sequence[Formula],
    phi: Formula,
    family: SchemeFamily | None = None,
    bound: int = 3,
    policy: str = "least",
) -> LocalGlivenkoReport:
    """For n = 1..bound, the least k <= bound with gamma |= J_k(I_n(phi)).

    With the default family {~p^n} the tested formula is ~(~phi^n)^k.
    """
    family = family or flew_il()
    if bound < 1:
        raise InvalidParameter("the local Glivenko bound must be at least 1")
    matrices = MatrixFamily.from_algebras(algebras, policy)
    least = []
    for n in range(1, bound + 1):
        inner = _singleton(family, n, phi)
        k = next(
            (k for k in range(1, bound + 1) if not consequence(matrices, gamma, _singleton(family, k, inner)).failed),
            None,
        )
        least.append((n, k))
    notes = ("indices are searched up to the bound only",)
    return LocalGlivenkoReport(bound, tuple(least), notes)


def mipc_negation_mismatch(algebra: FiniteAlgebra) -> Element | None:
    """The first a with ~~[]a != ~[]~[]a, or None."""
    double, boxed = parse("~~[]p"), parse("~[]~[]p")
    return next(
        (a for a in algebra.elements if evaluate(algebra, double, {"p": a}) != evaluate(algebra, boxed, {"p": a})),
        None,
    )


# Rational countermodel for the deduction theorem of infinite-valued Lukasiewicz logic
def luk_fuse(x: Fraction, y: Fraction) -> Fraction:
    return max(Fraction(0), x + y - 1)

def luk_implies(x: Fraction, y: Fraction) -> Fraction:
    return min(Fraction(1), 1 - x + y)

def luk_neg(x: Fraction) -> Fraction:
    return 1 - x

def luk_power(x: Fraction, k: int) -> Fraction:
    result = Fraction(1)
    for _ in range(k):
        result = luk_fuse(result, x)
    return result

def _ceil_sqrt(value: int) -> int:
    root = math.isqrt(value)
    return root if root * root == value else root + 1

def _triangular(i: int) -> int:
    return i * (i + 1) // 2


@dataclass(frozen=True)
class RationalValuation:
    n: int
    epsilon: Fraction
    p: Fraction
    q: tuple[Fraction, ...]
    i_max: int

    def value(self, name: str) -> Fraction:
        if name == "p":
            return self.p
        if name.startswith("q") and name[1:].isdigit() and int(name[1:]) < len(self.q):
            return self.q[int(name[1:])]
        raise InvalidParameter(f"the valuation assigns no value to {name!r}")


@dataclass(frozen=True)
class LukCertificate:
    """Exact values of the premises p^(i+1) -> (q_(i+1) -> q_i) and ~q_0 -> q_i^i for
    i = 0..i_max, and of the conclusion p^n -> q_0. Beyond i_max every q_i is 1, so every
    further premise is 1 as well."""
    valuation: RationalValuation
    chain_premises: tuple[Fraction, ...]
    negation_premises: tuple[Fraction, ...]
    conclusion: Fraction

    @property
    def passed(self) -> bool:
        return (
            all(v == 1 for v in self.chain_premises)
            and all(v == 1 for v in self.negation_premises)
            and self.conclusion < 1
        )

    def lines(self) -> list[str]:
        v = self.valuation
        rows = [f"n={v.n} epsilon={v.epsilon} i_max={v.i_max}", f"v(p)={v.p}"]
        rows += [f"v(q{i})={value}" for i, value in enumerate(v.q)]
        rows += [f"v(p^{i + 1} -> (q{i + 1} -> q{i}))={value}" for i, value in enumerate(self.chain_premises)]
        rows += [f"v(~q0 -> q{i}^{i})={value}" for i, value in enumerate(self.negation_premises)]
        rows.append(f"v(p^{v.n} -> q0)={self.conclusion}")
        rows.append("certificate: " + ("passed" if self.passed else "FAILED"))
        return rows


def lukinfty_ddt_countermodel(n: int) -> LukCertificate:
    """A rational valuation on [0,1] where every premise q_(i+1)-step and ~q_0 -> q_i^i holds
    but p^n -> q_0 does not, so no single power of p works as a deduction term.

    epsilon = 1/(1 + ceil(sqrt(2n))), v(p) = 1 - epsilon/(n+1) and
    v(q_i) = min(1, 1 - epsilon + (1 + ... + i) epsilon/(n+1)).

    Raises:
        InvalidParameter: If n < 1.
    """
    if n < 1:
        raise InvalidParameter("the countermodel index must be at least 1")
    epsilon = Fraction(1, 1 + _ceil_sqrt(2 * n))
    step = epsilon / (n + 1)
    p = 1 - step
    i_max = next(i for i in range(n + 2) if _triangular(i) >= n + 1)
    q = tuple(min(Fraction(1), 1 - epsilon + _triangular(i) * step) for i in range(i_max + 2))
    chain = tuple(luk_implies(luk_power(p, i + 1), luk_implies(q[i + 1], q[i])) for i in range(i_max + 1))
    negation = tuple(luk_implies(luk_neg(q[0]), luk_power(q[i], i)) for i in range(i_max + 1))
    conclusion = luk_implies(luk_power(p, n), q[0])
    certificate = LukCertificate(RationalValuation(n, epsilon, p, q, i_max), chain, negation, conclusion)
    emit(CountermodelCertified(n, str(epsilon), i_max, certificate.passed))
    return certificate
