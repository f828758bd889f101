from pathlib import Path

from ..errors import MalformedAlgebraFile, WorkbenchError
from ..types import Symbol, Table
from .FiniteAlgebra import (
    FL_SIGNATURE,
    LATTICE_SIGNATURE,
    MODAL_SIGNATURE,
    FiniteAlgebra,
    Signature,
)


"""Reader and writer for the line-oriented algebra file format.

    algebra <name>
    size <n>
    labels <l0> ... <l(n-1)>        # optional
    designated <e1> ... <ek>        # optional
    op <symbol> <arity>             # one line per symbol
    table <symbol>
    <n^(arity-1) rows of n integers; a constant is one row with one integer>
    end

A declared symbol set equal to a standard signature is stored in that signature's order,
so that algebras read from files compare equal to generated ones.
"""
KNOWN_SIGNATURES = (MODAL_SIGNATURE, FL_SIGNATURE, LATTICE_SIGNATURE)


def _normalise_signature(declared: list[tuple[Symbol, int]]) -> Signature:
    for signature in KNOWN_SIGNATURES:
        if set(signature.symbols) == set(declared):
            return signature
    return Signature(tuple(declared))

def _integers(tokens: list[str], line: int) -> list[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise MalformedAlgebraFile(f"expected integers, got {' '.join(tokens)!r}", line) from None

def parse_algebra(text: str) -> FiniteAlgebra:
    """Parse one algebra from file text.

    Raises:
        MalformedAlgebraFile: On any syntax or consistency problem; carries the line number.
    """
    name: str | None = None
    size: int | None = None
    labels: tuple[str, ...] | None = None
    designated: tuple[int, ...] | None = None
    declared: list[tuple[Symbol, int]] = []
    tables: dict[Symbol, list[int]] = {}
    current: Symbol | None = None
    ended = False
    last_line = 0

    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if ended:
            raise MalformedAlgebraFile("content after 'end'", number)
        tokens = content.split()
        keyword = tokens[0]

        if current is not None and keyword not in ("table", "end"):
            row = _integers(tokens, number)
            arity = dict(declared)[current]
            width = size if arity > 0 else 1
            if len(row) != width:
                raise MalformedAlgebraFile(f"row of table {current} must have {width} entries", number)
            tables[current].extend(row)
            if len(tables[current]) > size**arity:
                raise MalformedAlgebraFile(f"too many rows for table {current}", number)
            continue

        match keyword:
            case "algebra":
                if len(tokens) != 2:
                    raise MalformedAlgebraFile("expected 'algebra <name>'", number)
                name = tokens[1]
            case "size":
                values = _integers(tokens[1:], number)
                if len(values) != 1 or values[0] < 1:
                    raise MalformedAlgebraFile("expected 'size <positive integer>'", number)
                size = values[0]
            case "labels":
                if size is None or len(tokens) - 1 != size:
                    raise MalformedAlgebraFile("labels must follow size and name every element", number)
                labels = tuple(tokens[1:])
            case "designated":
                designated = tuple(_integers(tokens[1:], number))
            case "op":
                if len(tokens) != 3:
                    raise MalformedAlgebraFile("expected 'op <symbol> <arity>'", number)
                arity = _integers(tokens[2:], number)[0]
                if tokens[1] in dict(declared):
                    raise MalformedAlgebraFile(f"symbol {tokens[1]} declared twice", number)
                declared.append((tokens[1], arity))
            case "table":
                if size is None:
                    raise MalformedAlgebraFile("table before size", number)
                if len(tokens) != 2 or tokens[1] not in dict(declared):
                    raise MalformedAlgebraFile("table for an undeclared symbol", number)
                if tokens[1] in tables:
                    raise MalformedAlgebraFile(f"table {tokens[1]} given twice", number)
                current = tokens[1]
                tables[current] = []
            case "end":
                ended = True
                current = None
            case _:
                raise MalformedAlgebraFile(f"unknown keyword {keyword!r}", number)

    if not ended:
        raise MalformedAlgebraFile("missing 'end'", last_line)
    if name is None or size is None:
        raise MalformedAlgebraFile("missing 'algebra' or 'size' line", last_line)
    for symbol, arity in declared:
        if symbol not in tables:
            raise MalformedAlgebraFile(f"no table for symbol {symbol}", last_line)
        if len(tables[symbol]) != size**arity:
            raise MalformedAlgebraFile(f"table {symbol} is incomplete", last_line)

    signature = _normalise_signature(declared)
    ordered: tuple[Table, ...] = tuple(tuple(tables[symbol]) for symbol in signature.names)
    try:
        return FiniteAlgebra(name, size, signature, ordered, labels, designated)
    except WorkbenchError as error:
        raise MalformedAlgebraFile(str(error), last_line) from error

def format_algebra(algebra: FiniteAlgebra) -> str:
    n = algebra.size
    lines = [f"algebra {algebra.name}", f"size {n}"]
    if algebra.labels is not None:
        lines.append("labels " + " ".join(algebra.labels))
    if algebra.designated is not None:
        lines.append("designated " + " ".join(str(d) for d in algebra.designated))
    for symbol, arity in algebra.signature.symbols:
        lines.append(f"op {symbol} {arity}")
    for symbol, arity in algebra.signature.symbols:
        lines.append(f"table {symbol}")
        table = algebra.table(symbol)
        width = n if arity > 0 else 1
        for start in range(0, len(table), width):
            lines.append(" ".join(str(entry) for entry in table[start:start + width]))
    lines.append("end")
    return "\n".join(lines) + "\n"

def load_algebra(path: str | Path) -> FiniteAlgebra:
    """Read an algebra file.

    Raises:
        MalformedAlgebraFile: If the file cannot be read or parsed.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as error:
        raise MalformedAlgebraFile(f"cannot read {path}: {error.strerror}", 0) from error
    return parse_algebra(text)

def save_algebra(algebra: FiniteAlgebra, path: str | Path) -> None:
    Path(path).write_text(format_algebra(algebra), encoding="utf-8")
