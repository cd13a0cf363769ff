"""Embedded reference tables and exact comparison against computed values."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Mapping

from .exact import LinForm, Number

DATA_FILES = ("table2.json", "table7.json", "cubics.json", "unknowns.json", "subtotals.json")


class ChecksumError(RuntimeError):
    pass


class ShapeMismatchError(ValueError):
    pass


def _data_dir():
    return resources.files("charnum") / "data"


@lru_cache(maxsize=None)
def checksums() -> dict[str, str]:
    out = {}
    for line in (_data_dir() / "SHA256SUMS").read_text().splitlines():
        digest, name = line.split()
        out[name] = digest
    return out


def verify_checksums() -> list[str]:
    """Names of data files whose sha256 differs from the recorded one."""
    bad = []
    for name in DATA_FILES:
        digest = hashlib.sha256((_data_dir() / name).read_bytes()).hexdigest()
        if checksums().get(name) != digest:
            bad.append(name)
    return bad


@lru_cache(maxsize=None)
def load(name: str) -> dict:
    if name not in DATA_FILES:
        raise KeyError(f"unknown reference file {name!r}")
    raw = (_data_dir() / name).read_bytes()
    if hashlib.sha256(raw).hexdigest() != checksums().get(name):
        raise ChecksumError(f"{name} does not match its recorded checksum")
    return json.loads(raw)


@dataclass(frozen=True)
class ReferenceTable:
    """Flat key -> exact value map, every value traced to ``location``."""

    location: str
    entries: dict[str, LinForm]


@dataclass(frozen=True)
class Mismatch:
    location: str
    key: str
    computed: str
    reference: str

    def __str__(self):
        return f"{self.location} {self.key}: computed {self.computed}, reference {self.reference}"

    def to_json(self) -> dict:
        return dict(self.__dict__)


def emit_reference_diff(computed: Mapping[str, LinForm | Number],
                        reference: ReferenceTable) -> list[Mismatch]:
    """Entry-by-entry exact comparison; the key sets must agree."""
    if set(computed) != set(reference.entries):
        extra = sorted(set(computed) - set(reference.entries))
        missing = sorted(set(reference.entries) - set(computed))
        raise ShapeMismatchError(f"{reference.location}: extra keys {extra}, missing keys {missing}")
    out = []
    for key, ref in reference.entries.items():
        got = LinForm.coerce(computed[key])
        if got != ref:
            out.append(Mismatch(reference.location, key, str(got), str(ref)))
    return out


def _entry(obj) -> LinForm:
    return LinForm.from_json(obj)


def table2() -> ReferenceTable:
    doc = load("table2.json")
    return ReferenceTable(doc["table"], {
        f"{d}[a={a}]": _entry(v) for d, col in doc["columns"].items() for a, v in col.items()})


def table7() -> ReferenceTable:
    doc = load("table7.json")
    return ReferenceTable(doc["table"], {f"C{a}": _entry(v) for a, v in doc["char_numbers"].items()})


def cubic_constants() -> ReferenceTable:
    doc = load("cubics.json")
    entries = {"covers(3,6)": _entry(doc["connected_triple_covers"]["value"])}
    for div in ("I", "T"):
        entries.update({f"{div}[a={a}]": _entry(v) for a, v in doc[div].items()})
    entries.update({f"C{a}": _entry(v) for a, v in doc["char_numbers"].items()})
    return ReferenceTable(doc["location"], entries)


def quartic_unknowns() -> ReferenceTable:
    doc = load("unknowns.json")
    entries = {s: _entry(v) for s, v in doc["unknowns"].items()}
    entries["covers(3,10)"] = _entry(doc["genus3_triple_covers"]["value"])
    entries["iota/120"] = _entry(doc["iota_points"]["points"])
    entries.update({f"m({d})": _entry(v) for d, v in doc["discriminant_multiplicity"].items()})
    return ReferenceTable(doc["location"], entries)


def descriptor_key(descriptor: Mapping) -> str:
    """Canonical text form of a case descriptor (lists and tuples print alike)."""
    norm = {k: list(v) if isinstance(v, (list, tuple)) else v for k, v in descriptor.items()}
    return json.dumps(norm, sort_keys=True)


def subtotals(divisor: str) -> ReferenceTable:
    doc = load("subtotals.json")[divisor]
    entries = {descriptor_key(c["descriptor"]): _entry(c["value"]) for c in doc.get("cases", [])}
    return ReferenceTable(doc["location"], entries)


def subtotal_split(divisor: str) -> int:
    return load("subtotals.json")[divisor]["a"]


def subtotal_total(divisor: str) -> LinForm:
    return _entry(load("subtotals.json")[divisor]["total"])


SUBTOTAL_DIVISORS = ("X", "P", "Q", "I", "T")
