"""Excluded-middle style conditions stated with the zero negation !x = x \\ 0.

The zero lemma asks that 0 lies in Fg(F u {a}) exactly when !a lies in F, the rule is
!(p /\\ !q) / !!(p \\ q), and both are compared with a Glivenko comparison against Boolean-2
under the scheme !!_: gamma |- phi over Boolean-2 iff gamma |- !!phi over the algebras.
The comparison runs on a few classical theorems, on the zero rule itself and on premise and
conclusion pairs sampled from a seeded generator.
"""
import random
from dataclasses import dataclass
from typing import Sequence

from ... import constants as const
from ..Deduction import FL_TRANSLATION, MatrixFamily, consequence, filter_lattice
from ..FiniteAlgebra import FiniteAlgebra
from ..Formula import Formula, Unary, print_formula, random_formula
from ..FormulaParser import parse
from ..Generators import boolean2

ZERO_RULE = (parse("!(p /\\ !q)"), parse("!!(p \\ q)"))
CLASSICAL_THEOREMS = (
    "p \\/ !p",
    "((p \\ q) \\ p) \\ p",
    "!!p \\ p",
    "(p \\ q) \\/ (q \\ p)",
    "p",
    "p /\\ !p",
)
# no commutative arrow, so the sample evaluates in every FL algebra
SAMPLE_CONNECTIVES = (const.MEET, const.JOIN, const.LEFT_RESIDUAL, const.NEG_ZERO)

RulePair = tuple[tuple[Formula, ...], Formula]


@dataclass(frozen=True)
class ZeroNegationEntry:
    algebra: str
    lemma: bool
    rule: bool


@dataclass(frozen=True)
class ZeroNegationReport:
    entries: tuple[ZeroNegationEntry, ...]
    glivenko: bool
    compared: int
    mismatch: str | None = None

    @property
    def condition(self) -> bool:
        return all(entry.lemma and entry.rule for entry in self.entries)

    @property
    def agree(self) -> bool:
        return self.condition == self.glivenko

    def lines(self) -> list[str]:
        rows = [f"{e.algebra}: zero-lemma={'yes' if e.lemma else 'no'} rule={'yes' if e.rule else 'no'}" for e in self.entries]
        if self.mismatch is not None:
            rows.append(f"first Glivenko mismatch: {self.mismatch}")
        rows.append(f"conditions hold: {self.condition}; Glivenko with !!_ matches: {self.glivenko}")
        return rows


def zero_lemma_holds(algebra: FiniteAlgebra) -> bool:
    lattice = filter_lattice(algebra, FL_TRANSLATION)
    zero = algebra.constant(const.ZERO)
    for filt in lattice.filters:
        for a in algebra.elements:
            negated = algebra.apply(const.LEFT_RESIDUAL, a, zero)
            if lattice.extend(filt, [a]).contains(zero) != filt.contains(negated):
                return False
    return True

def comparison_pairs(seed: int = const.DEFAULT_SEED, sample: int = const.DEFAULT_RULE_SAMPLE) -> tuple[RulePair, ...]:
    """The theorems, the zero rule read as !(p /\\ !q) |- p \\ q, then `sample` drawn pairs."""
    pairs: list[RulePair] = [((), parse(text)) for text in CLASSICAL_THEOREMS]
    pairs.append(((ZERO_RULE[0],), parse("p \\ q")))
    rng = random.Random(seed)
    for _ in range(sample):
        premise = random_formula(rng, const.DEFAULT_SAMPLE_NODES, connectives=SAMPLE_CONNECTIVES)
        conclusion = random_formula(rng, const.DEFAULT_SAMPLE_NODES, connectives=SAMPLE_CONNECTIVES)
        pairs.append(((premise,), conclusion))
    return tuple(pairs)

def glivenko_pair_matches(algebras: Sequence[FiniteAlgebra], gamma: Sequence[Formula], phi: Formula) -> bool:
    weak = MatrixFamily.from_algebras(algebras, "least", FL_TRANSLATION)
    strong = MatrixFamily.from_algebras([boolean2()], "least", FL_TRANSLATION)
    translated = Unary(const.NEG_ZERO, Unary(const.NEG_ZERO, phi))
    return consequence(strong, gamma, phi).failed == consequence(weak, gamma, translated).failed

def _describe(pair: RulePair) -> str:
    gamma, phi = pair
    return f"{', '.join(print_formula(g) for g in gamma)} |- {print_formula(phi)}".lstrip()

def zero_negation_conditions(
    algebras: Sequence[FiniteAlgebra],
    seed: int = const.DEFAULT_SEED,
    sample: int = const.DEFAULT_RULE_SAMPLE,
) -> ZeroNegationReport:
    entries = []
    for algebra in algebras:
        matrices = MatrixFamily.from_algebras([algebra], "all", FL_TRANSLATION)
        entries.append(ZeroNegationEntry(
            algebra.name,
            zero_lemma_holds(algebra),
            not consequence(matrices, [ZERO_RULE[0]], ZERO_RULE[1]).failed,
        ))
    pairs = comparison_pairs(seed, sample)
    mismatch = next((pair for pair in pairs if not glivenko_pair_matches(algebras, *pair)), None)
    return ZeroNegationReport(
        tuple(entries),
        mismatch is None,
        len(pairs),
        _describe(mismatch) if mismatch is not None else None,
    )
