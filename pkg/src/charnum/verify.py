"""Every published value the pipeline reproduces, checked exactly against the embedded references."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from . import reference as ref
from .conics import oracle_table
from .cubics import cubic_char_numbers, cubic_I_char, cubic_T_char
from .exact import LinForm
from .hurwitz import connected_cover_count
from .quartic_divisors import CONDITIONS, DIVISORS, all_columns, configurations
from .quartic_solver import AUTOMORPHISM_ORDER, discriminant_multiplicity, relations_with, solve


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    mismatches: tuple[str, ...] = ()
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed,
                "mismatches": list(self.mismatches), "seconds": round(self.seconds, 4)}


@dataclass
class _Cache:
    values: dict = field(default_factory=dict)

    def get(self, key: str, make: Callable):
        if key not in self.values:
            self.values[key] = make()
        return self.values[key]


def computed_subtotals(divisor: str, a: int) -> dict[str, LinForm]:
    out: dict[str, LinForm] = {}
    for c in configurations(divisor, a):
        key = ref.descriptor_key(c.describe())
        out[key] = out.get(key, LinForm(0)) + c.value
    return out


def _diff(computed, table: ref.ReferenceTable) -> tuple[str, ...]:
    try:
        return tuple(str(m) for m in ref.emit_reference_diff(computed, table))
    except ref.ShapeMismatchError as exc:
        return (str(exc),)


def _checks(cache: _Cache) -> list[tuple[str, Callable[[], tuple[str, ...]]]]:
    columns = lambda: cache.get("columns", all_columns)
    solution = lambda: cache.get("solution", lambda: solve(columns()))

    def checksums():
        return tuple(f"{name}: checksum mismatch" for name in ref.verify_checksums())

    def hurwitz():
        got = {"covers(3,6)": connected_cover_count(3, 6), "covers(3,10)": connected_cover_count(3, 10)}
        cub, unk = ref.cubic_constants(), ref.quartic_unknowns()
        table = ref.ReferenceTable("cover counts", {
            "covers(3,6)": cub.entries["covers(3,6)"], "covers(3,10)": unk.entries["covers(3,10)"]})
        return _diff(got, table)

    def conics():
        return tuple(f"{k}: tabulated {t}, computed {c}" for k, (t, c) in oracle_table(0).items() if t != c)

    def cubics():
        table = ref.cubic_constants()
        chars = cubic_char_numbers()
        got = {"covers(3,6)": connected_cover_count(3, 6)}
        for key in table.entries:
            if key.startswith("I["):
                a = int(key[4:-1])
                got[key] = cubic_I_char(a, 8 - a)
            elif key.startswith("T["):
                a = int(key[4:-1])
                got[key] = cubic_T_char(a, 8 - a)
            elif key.startswith("C"):
                got[key] = chars[int(key[1:])]
        return _diff(got, table)

    def table2():
        cols = columns()
        got = {f"{d}[a={a}]": cols[d].entries[a] for d in DIVISORS for a in range(CONDITIONS + 1)}
        return _diff(got, ref.table2())

    def subtotals(divisor):
        def run():
            a = ref.subtotal_split(divisor)
            got = computed_subtotals(divisor, a)
            out = list(_diff(got, ref.subtotals(divisor)))
            total = sum(got.values(), LinForm(0))
            if total != ref.subtotal_total(divisor):
                out.append(f"{divisor} total at a={a}: computed {total}, "
                           f"reference {ref.subtotal_total(divisor)}")
            return tuple(out)
        return run

    def headline(divisor):
        def run():
            a = ref.subtotal_split(divisor)
            got, want = columns()[divisor].entries[a], ref.subtotal_total(divisor)
            return () if got == want else (f"{divisor}[a={a}]: computed {got}, reference {want}",)
        return run

    def table7():
        sol = solution()
        return _diff({f"C{a}": v for a, v in sol.char_numbers.items()}, ref.table7())

    def unknowns():
        sol = solution()
        table = ref.quartic_unknowns()
        got = dict(sol.unknowns)
        got["covers(3,10)"] = connected_cover_count(3, 10)
        got["iota/120"] = sol.iota_points
        got.update({f"m({d})": discriminant_multiplicity(d) for d in AUTOMORPHISM_ORDER})
        out = list(_diff(got, table))
        diag = sol.diagnostics
        surplus = len(sol.system) - diag.n_unknowns
        if not (diag.consistent and diag.unique and diag.n_redundant == surplus):
            out.append(f"diagnostics: {diag}")
        out += sol.invariant_violations()
        rel = ref.load("unknowns.json")["relations"]
        for idx, name in ((1, "first"), (2, "second")):
            got_rel = {d: LinForm(v) for d, v in relations_with(sol.unknowns)[idx].items()}
            want = ref.ReferenceTable(f"{name} relation", {d: LinForm.from_json(v) for d, v in rel[name].items()})
            out += _diff(got_rel, want)
        return tuple(out)

    checks = [
        ("reference checksums", checksums),
        ("triple cover counts", hurwitz),
        ("conic characteristic numbers", conics),
        ("cubic divisors and recursion", cubics),
        ("divisor columns", table2),
    ]
    checks += [(f"{d} case subtotals", subtotals(d)) for d in ref.SUBTOTAL_DIVISORS]
    checks += [(f"{d} headline total", headline(d)) for d in ("H", "Y")]
    checks += [("smooth quartic characteristic numbers", table7),
               ("relation coefficients, cover counts and multiplicities", unknowns)]
    return checks


def run_checks() -> list[Check]:
    cache, out = _Cache(), []
    for name, fn in _checks(cache):
        start = time.perf_counter()
        try:
            mism = fn()
        except Exception as exc:  # a crash is a failed check, reported with its cause
            mism = (f"{type(exc).__name__}: {exc}",)
        out.append(Check(name, not mism, tuple(mism), time.perf_counter() - start))
    return out
