"""Precedence-climbing parser for the formula language.

Tiers, tightest first: postfix `^n`; prefixes `~`, `!`, `[]`, `<>`, `[]_n`, `<>_n`, `n.`;
then `*`; then `/\\`; then `\\/`; then the right-associative residual tier `->`, `\\`, `/`.
Different residuals may not be mixed at one tier without parentheses.
"""
from dataclasses import dataclass

from .. import constants as const
from ..errors import AmbiguousResidual, FormulaSyntaxError
from .Formula import (
    ARROW_TIER,
    Binary,
    BoxN,
    Const,
    DiamondN,
    Formula,
    Multiple,
    Power,
    Unary,
    Var,
)

# two-character tokens are matched before their one-character prefixes
SYMBOLS = (
    const.MEET,
    const.JOIN,
    const.ARROW,
    const.BOX,
    const.DIAMOND,
    const.FUSION,
    const.LEFT_RESIDUAL,
    const.RIGHT_RESIDUAL,
    const.NEG_BOTTOM,
    const.NEG_ZERO,
    "^",
    ".",
    "(",
    ")",
)
PREFIX_TOKENS = (const.NEG_BOTTOM, const.NEG_ZERO, const.BOX, const.DIAMOND)


@dataclass(frozen=True)
class Token:
    kind: str  # "ident" | "num" | "sym" | "boxn" | "diamondn" | "end"
    text: str
    position: int


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    idx = 0
    while idx < len(source):
        char = source[idx]
        if char.isspace():
            idx += 1
            continue
        if char.isdigit():
            start = idx
            while idx < len(source) and source[idx].isdigit():
                idx += 1
            tokens.append(Token("num", source[start:idx], start))
            continue
        if char.isalpha() or char == "_":
            start = idx
            while idx < len(source) and (source[idx].isalnum() or source[idx] == "_"):
                idx += 1
            tokens.append(Token("ident", source[start:idx], start))
            continue
        for symbol in SYMBOLS:
            if source.startswith(symbol, idx):
                start = idx
                idx += len(symbol)
                # indexed modalities []_n and <>_n; a bare `_` after a modality is the hole
                end = idx + 1
                while end < len(source) and source[end].isdigit():
                    end += 1
                if symbol in (const.BOX, const.DIAMOND) and source.startswith("_", idx) and end > idx + 1:
                    digits_start = idx + 1
                    kind = "boxn" if symbol == const.BOX else "diamondn"
                    tokens.append(Token(kind, source[digits_start:end], start))
                    idx = end
                else:
                    tokens.append(Token("sym", symbol, start))
                break
        else:
            raise FormulaSyntaxError(f"unexpected character {char!r}", idx)
    tokens.append(Token("end", "", len(source)))
    return tokens


class _Parser:
    def __init__(self, source: str) -> None:
        self.tokens = tokenize(source)
        self.index = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def at_symbol(self, *symbols: str) -> bool:
        token = self.peek()
        return token.kind == "sym" and token.text in symbols

    def expect_symbol(self, symbol: str) -> None:
        token = self.peek()
        if not (token.kind == "sym" and token.text == symbol):
            raise FormulaSyntaxError(f"expected '{symbol}'", token.position)
        self.advance()

    def expect_number(self) -> int:
        token = self.peek()
        if token.kind != "num":
            raise FormulaSyntaxError("expected a number", token.position)
        self.advance()
        return int(token.text)

    def parse(self) -> Formula:
        formula = self.residual_tier(None)
        token = self.peek()
        if token.kind != "end":
            raise FormulaSyntaxError(f"unexpected token {token.text!r}", token.position)
        return formula

    def residual_tier(self, chained: str | None) -> Formula:
        left = self.join_tier()
        if self.at_symbol(*ARROW_TIER):
            token = self.peek()
            if chained is not None and token.text != chained:
                raise AmbiguousResidual(
                    f"'{chained}' and '{token.text}' need parentheses when mixed", token.position
                )
            self.advance()
            return Binary(token.text, left, self.residual_tier(token.text))
        return left

    def left_tier(self, symbol: str, operand) -> Formula:
        left = operand()
        while self.at_symbol(symbol):
            self.advance()
            left = Binary(symbol, left, operand())
        return left

    def join_tier(self) -> Formula:
        return self.left_tier(const.JOIN, self.meet_tier)

    def meet_tier(self) -> Formula:
        return self.left_tier(const.MEET, self.fusion_tier)

    def fusion_tier(self) -> Formula:
        return self.left_tier(const.FUSION, self.prefix)

    def prefix(self) -> Formula:
        token = self.peek()
        if token.kind == "sym" and token.text in PREFIX_TOKENS:
            self.advance()
            return Unary(token.text, self.prefix())
        if token.kind == "boxn":
            self.advance()
            return BoxN(int(token.text), self.prefix())
        if token.kind == "diamondn":
            self.advance()
            return DiamondN(int(token.text), self.prefix())
        if token.kind == "num" and self.peek(1).kind == "sym" and self.peek(1).text == ".":
            self.advance()
            self.advance()
            times = int(token.text)
            if times < 1:
                raise FormulaSyntaxError("n-fold sums need n >= 1", token.position)
            return Multiple(times, self.prefix())
        return self.postfix()

    def postfix(self) -> Formula:
        base = self.primary()
        while self.at_symbol("^"):
            self.advance()
            base = Power(base, self.expect_number())
        return base

    def primary(self) -> Formula:
        token = self.peek()
        if token.kind == "sym" and token.text == "(":
            self.advance()
            inner = self.residual_tier(None)
            self.expect_symbol(")")
            return inner
        if token.kind == "ident":
            self.advance()
            if token.text in (const.TOP, const.BOTTOM):
                return Const(token.text)
            return Var(token.text)
        if token.kind == "num":
            self.advance()
            if token.text in (const.UNIT, const.ZERO):
                return Const(token.text)
            raise FormulaSyntaxError(f"bare number {token.text} is not a constant", token.position)
        raise FormulaSyntaxError(f"unexpected token {token.text or 'end of input'!r}", token.position)


def parse(text: str) -> Formula:
    """Parse a formula.

    Raises:
        FormulaSyntaxError: If the text is not in the grammar; carries the position.
        AmbiguousResidual: If `->`, `\\` and `/` are mixed at one tier without parentheses.
    """
    return _Parser(text).parse()


def parse_list(text: str) -> tuple[Formula, ...]:
    """Parse a `;`-separated premise list; the empty string is the empty list."""
    return tuple(parse(part) for part in text.split(";") if part.strip())
