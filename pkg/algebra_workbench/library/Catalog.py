"""Catalogs of small algebras: building them from generator tokens and persisting them.

A saved catalog is a directory with one algebra file per entry and a `manifest.json` listing
the class, the size bound, the count per size and, per entry, its file name and canonical hash.
"""
import functools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterator

from .. import constants as const
from ..errors import InvalidParameter, UnknownClass
from ..events import CatalogLoaded, CatalogSaved, emit
from .AlgebraClasses import CLASS_NAMES, check_membership, class_by_name
from .AlgebraFile import load_algebra, save_algebra
from .FiniteAlgebra import FiniteAlgebra
from .Generators import generator_by_name, make_godel_chain, make_lukasiewicz_chain
from .Principles import check_lem_axiom
from .SchemeFamilies import LEM_FORMS, parse_token
from .Search import canonical_hash, enumerate_class


# Structs
@dataclass(frozen=True)
class Catalog:
    algebra_class: str
    max_size: int
    algebras: tuple[FiniteAlgebra, ...]

    def __iter__(self) -> Iterator[FiniteAlgebra]:
        return iter(self.algebras)

    def __len__(self) -> int:
        return len(self.algebras)

    def counts(self) -> dict[int, int]:
        result = {n: 0 for n in range(1, self.max_size + 1)}
        for algebra in self.algebras:
            result[algebra.size] = result.get(algebra.size, 0) + 1
        return result

    def of_size(self, n: int) -> tuple[FiniteAlgebra, ...]:
        return tuple(algebra for algebra in self.algebras if algebra.size == n)


@functools.lru_cache(maxsize=32)
def build_catalog(class_token: str, max_size: int, jobs: int = 1, min_size: int = 1) -> Catalog:
    """Enumerate the class on every size from `min_size` to `max_size`.

    Raises:
        UnknownClass: If the class token is not registered.
        CapExceeded: If `max_size` is above the class cap.
    """
    algebra_class = class_by_name(class_token)
    algebras: list[FiniteAlgebra] = []
    for n in range(min_size, max_size + 1):
        algebras.extend(enumerate_class(algebra_class, n, jobs=jobs))
    return Catalog(algebra_class.name, max_size, tuple(algebras))


def _check_manifest_entry(entry: Any, directory: Path) -> None:
    if not isinstance(entry, dict) or not {"file", "hash"} <= set(entry):
        raise InvalidParameter(f"manifest in {directory} has a malformed entry {entry!r}")

def save_catalog(catalog: Catalog, directory: str | Path) -> Path:
    """Write the algebra files and the manifest, replacing any previous manifest."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    entries = []
    for algebra in catalog:
        file_name = f"{algebra.name}{const.ALGEBRA_SUFFIX}"
        save_algebra(algebra, directory / file_name)
        entries.append({"file": file_name, "size": algebra.size, "hash": canonical_hash(algebra)})
    manifest = {
        "class": catalog.algebra_class,
        "max_size": catalog.max_size,
        "counts": {str(n): count for n, count in catalog.counts().items()},
        "entries": entries,
    }
    path = directory / const.MANIFEST_NAME
    path.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    emit(CatalogSaved(str(directory), len(entries)))
    return path

def load_catalog(directory: str | Path) -> Catalog:
    """Read a saved catalog and verify every entry against its recorded canonical hash.

    Raises:
        InvalidParameter: If the manifest is missing or malformed, or a hash does not match.
        MalformedAlgebraFile: If an algebra file cannot be parsed.
    """
    directory = Path(directory)
    path = directory / const.MANIFEST_NAME
    if not path.is_file():
        raise InvalidParameter(f"no {const.MANIFEST_NAME} in {directory}")
    try:
        manifest = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as error:
        raise InvalidParameter(f"manifest in {directory} is not valid JSON: {error}") from None
    algebras = []
    for entry in manifest.get("entries", []):
        _check_manifest_entry(entry, directory)
        algebra = load_algebra(directory / entry["file"])
        if canonical_hash(algebra) != entry["hash"]:
            raise InvalidParameter(f"{entry['file']} does not match its canonical hash in the manifest")
        algebras.append(algebra)
    max_size = int(manifest.get("max_size", max((a.size for a in algebras), default=1)))
    emit(CatalogLoaded(str(directory), len(algebras)))
    return Catalog(str(manifest.get("class", "unknown")), max_size, tuple(algebras))


# Sources
def _int_param(params: dict[str, str], key: str, token: str) -> int:
    try:
        value = int(params[key])
    except (KeyError, ValueError):
        raise InvalidParameter(f"catalog source {token!r} needs an integer {key}=") from None
    if value < 1:
        raise InvalidParameter(f"catalog source {token!r}: {key} must be positive")
    return value

def _class_token(name: str, params: dict[str, str]) -> str:
    rest = ",".join(f"{key}={value}" for key, value in params.items() if key not in ("max", "min", "boolean", "lem"))
    return f"{name}:{rest}" if rest else name

def _lem_filtered(catalog: Catalog, form: str, class_token: str) -> Catalog:
    if form not in LEM_FORMS:
        raise InvalidParameter(f"unknown excluded-middle form {form!r}; expected one of {LEM_FORMS}")
    name, params = parse_token(class_token)
    n = int(params.get("n", "1"))
    return Catalog(
        f"{catalog.algebra_class}+lem",
        catalog.max_size,
        tuple(a for a in catalog if check_lem_axiom(a, form, name, n)),
    )

def catalog_from_source(source: str, jobs: int = 1) -> Catalog:
    """Resolve a catalog source.

    A source is a saved catalog directory, a generated algebra (`boolean2`, `luk3`), a chain
    family (`luk:max=7`, `godel:max=5`, chains from two elements up), Boolean carriers for a
    modal class (`s4:boolean=3` for sizes 2, 4 and 8) or a class bound (`heyting:max=6`).
    Adding `lem=<form>` keeps only the algebras validating that excluded-middle axiom.

    Raises:
        InvalidParameter: If the source is neither a directory nor a known token.
    """
    if Path(source).is_dir():
        return load_catalog(source)
    name, params = parse_token(source)
    if not params:
        algebra = generator_by_name(name)
        return Catalog(name, algebra.size, (algebra,))
    if name in ("luk", "godel"):
        build = make_lukasiewicz_chain if name == "luk" else make_godel_chain
        top = _int_param(params, "max", source)
        return Catalog(name, top, tuple(build(k) for k in range(2, top + 1)))
    if name not in CLASS_NAMES:
        raise UnknownClass(f"catalog source {source!r} names no algebra class")
    class_token = _class_token(name, params)
    if "boolean" in params:
        atoms = _int_param(params, "boolean", source)
        algebra_class = class_by_name(class_token)
        algebras = tuple(a for k in range(1, atoms + 1) for a in enumerate_class(algebra_class, 2 ** k, jobs=jobs))
        catalog = Catalog(algebra_class.name, 2 ** atoms, algebras)
    else:
        min_size = _int_param(params, "min", source) if "min" in params else 1
        catalog = build_catalog(class_token, _int_param(params, "max", source), jobs, min_size)
    if "lem" in params:
        catalog = _lem_filtered(catalog, params["lem"], class_token)
    return catalog


def verify_catalog(catalog: Catalog) -> tuple[str, ...]:
    """Names of entries that fail the laws of the catalog's class; empty for a sound catalog."""
    algebra_class = class_by_name(catalog.algebra_class.removesuffix("+lem"))
    return tuple(a.name for a in catalog if not check_membership(a, algebra_class).verdict)
