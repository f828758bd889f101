from typing import Mapping, TypeAlias

Element: TypeAlias = int
Bitmask: TypeAlias = int
Symbol: TypeAlias = str
# flat row-major table of an operation; a constant has a table of length one
Table: TypeAlias = tuple[int, ...]
# block index per element, canonically numbered by first occurrence
Blocks: TypeAlias = tuple[int, ...]
Assignment: TypeAlias = Mapping[str, int]
Valuation: TypeAlias = dict[str, Element]
