"""The quartic divisor relations intersected with alpha^a beta^(13-a), solved exactly.

Two relations hold on the quartic space, with unknown coefficients q, q', y, y':

    6 alpha  = beta + 4H + 12I + 6T + 2P + q Q + 6X + y Y
    27 alpha = Delta0 + 28H + 72I + 45T + 20P + q' Q + 48X + y' Y

Intersecting with alpha^a beta^(13-a) for a = 0..13 and writing C_a for the
number of smooth quartics through a points tangent to 14 - a lines (so that
alpha^(a+1) beta^(13-a) = C_(a+1) and beta-term = C_a) gives 28 rows; with the
anchor C_14 = 1 they determine the 15 characteristic numbers, q, q', y, y', iota
and tau.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .exact import (C, IOTA, QPRIME, SYMBOLS, TAU, Q, Y, YPRIME, Diagnostics, LinearSystem,
                    LinForm, solve_exact)
from .quartic_divisors import CONDITIONS, DIVISORS, DivisorColumn, all_columns

# known coefficients of the two relations (the unknown ones enter as symbols)
FIRST = {"H": 4, "I": 12, "T": 6, "P": 2, "X": 6}
SECOND = {"DELTA0": 1, "H": 28, "I": 72, "T": 45, "P": 20, "X": 48}
FIRST_ALPHA, SECOND_ALPHA = 6, 27

# order of the automorphism group of the general map in each divisor
AUTOMORPHISM_ORDER = {"H": 2, "I": 4, "T": 3, "P": 2}
# the canonical-cover count iota splits into this many equal contributions
IOTA_POINT_MULTIPLICITY = 120


def _row_label(relation: int, a: int) -> str:
    return f"relation {relation}, a={a}"


ANCHOR_LABEL = "anchor C14 = 1"


def assemble_system(columns: Mapping[str, DivisorColumn] | None = None) -> LinearSystem:
    """28 relation rows (two per a) followed by the anchor row."""
    columns = all_columns() if columns is None else columns
    missing = [d for d in DIVISORS if d not in columns]
    if missing:
        raise ValueError(f"missing divisor columns: {', '.join(missing)}")
    for d in DIVISORS:
        have = set(columns[d].entries)
        if have != set(range(CONDITIONS + 1)):
            raise ValueError(f"column {d} is incomplete: missing a = "
                             f"{sorted(set(range(CONDITIONS + 1)) - have)}")
    rows: list[tuple[str, LinForm]] = []
    for a in range(CONDITIONS + 1):
        e = {d: LinForm.coerce(columns[d].entries[a]) for d in DIVISORS}
        for rel, alpha, known, q_sym, y_sym, beta in (
            (1, FIRST_ALPHA, FIRST, Q, Y, LinForm.symbol(C(a))),
            (2, SECOND_ALPHA, SECOND, QPRIME, YPRIME, LinForm(0)),
        ):
            form = LinForm.symbol(C(a + 1), alpha) - beta
            for d, k in known.items():
                form = form - e[d] * k
            form = form - _times_symbol(q_sym, e["Q"]) - _times_symbol(y_sym, e["Y"])
            rows.append((_row_label(rel, a), form))
    rows.append((ANCHOR_LABEL, LinForm.symbol(C(CONDITIONS + 1)) - 1))
    return LinearSystem.from_rows(rows)


def _times_symbol(sym: str, entry: LinForm) -> LinForm:
    if not entry.is_constant():
        raise ValueError(f"an entry multiplying {sym} must be a number, got {entry}")
    return LinForm.symbol(sym, entry.constant)


@dataclass(frozen=True)
class QuarticSolution:
    char_numbers: dict[int, int]
    unknowns: dict[str, Fraction]
    diagnostics: Diagnostics
    system: LinearSystem

    def invariant_violations(self) -> list[str]:
        out = []
        if self.char_numbers.get(CONDITIONS + 1) != 1:
            out.append("C14 is not 1")
        out += [f"C{a} = {v} is not positive" for a, v in self.char_numbers.items() if v <= 0]
        iota = self.unknowns[IOTA]
        if iota.denominator != 1 or iota.numerator % IOTA_POINT_MULTIPLICITY:
            out.append(f"iota = {iota} is not a multiple of {IOTA_POINT_MULTIPLICITY}")
        return out

    @property
    def iota_points(self) -> Fraction:
        return self.unknowns[IOTA] / IOTA_POINT_MULTIPLICITY

    def to_json(self) -> dict:
        return {
            "char_numbers": [str(self.char_numbers[a]) for a in range(CONDITIONS + 1, -1, -1)],
            "unknowns": {s: str(v) for s, v in self.unknowns.items()},
            "diagnostics": self.diagnostics.to_json(),
        }


def solve(columns: Mapping[str, DivisorColumn] | None = None,
          system: LinearSystem | None = None) -> QuarticSolution:
    """Solve the assembled system; inconsistent or underdetermined systems raise."""
    system = assemble_system(columns) if system is None else system
    sol = solve_exact(system)
    values = sol.values
    chars = {}
    for a in range(CONDITIONS + 2):
        v = values[C(a)]
        if v.denominator != 1:
            raise ArithmeticError(f"C{a} = {v} is not an integer")
        chars[a] = v.numerator
    unknowns = {s: values[s] for s in SYMBOLS if s in (Q, QPRIME, Y, YPRIME, IOTA, TAU)}
    return QuarticSolution(chars, unknowns, sol.diagnostics, system)


def discriminant_multiplicity(divisor: str) -> int:
    """Multiplicity of the discriminant along a divisor: its coefficient in the
    second relation divided by the automorphism order of the general map."""
    if divisor not in AUTOMORPHISM_ORDER:
        raise ValueError(f"discriminant multiplicity is defined for {sorted(AUTOMORPHISM_ORDER)}, "
                         f"not {divisor!r}")
    m, rem = divmod(SECOND[divisor], AUTOMORPHISM_ORDER[divisor])
    if rem:
        raise ArithmeticError(f"non-integral multiplicity for {divisor}")
    return m


def relations_with(unknowns: Mapping[str, Fraction]) -> dict[int, dict[str, Fraction]]:
    """Both relations' coefficients once q, q', y, y' are known."""
    first = {d: Fraction(k) for d, k in FIRST.items()}
    first.update(Q=unknowns[Q], Y=unknowns[Y])
    second = {d: Fraction(k) for d, k in SECOND.items()}
    second.update(Q=unknowns[QPRIME], Y=unknowns[YPRIME])
    return {1: first, 2: second}
