"""Acceptance criteria, each checked by exact equality and reported on one line."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from charnum import reference as ref
from charnum.conics import conic_char, flag_conic_char, oracle_table
from charnum.cubics import cubic_char_numbers, cubic_I_char, cubic_T_char
from charnum.exact import (IOTA, QPRIME, TAU, InconsistentSystemError, LinearSystem, LinForm, Q, Y,
                           YPRIME, solve_exact)
from charnum.hurwitz import connected_cover_count, cover_count
from charnum.quartic_divisors import (DIVISORS, DivisorColumn, column_H, column_I, column_P,
                                      column_Q, column_T, column_X, column_Y)
from charnum.quartic_solver import discriminant_multiplicity, solve
from charnum.verify import computed_subtotals


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, failures: list[str]):
        status = "PASS" if not failures else "FAIL"
        with capsys.disabled():
            print(f"\n[acceptance] criterion {number} {status}: {title}"
                  + ("" if not failures else f" -- {'; '.join(failures[:5])}"))
        assert not failures, failures
    return emit


def expect(failures: list[str], label: str, got, want):
    if got != want:
        failures.append(f"{label}: got {got}, want {want}")


def test_criterion_1_hurwitz_counts(report):
    f: list[str] = []
    expect(f, "covers(3,6)", connected_cover_count(3, 6), 40)
    expect(f, "covers(3,10)", connected_cover_count(3, 10), 3280)
    for d in range(1, 5):
        for b in range(9):
            try:
                cover_count(d, b, "both")
            except ArithmeticError as exc:
                f.append(str(exc))
    report(1, "triple cover counts 40 and 3280; backends agree for d <= 4, b <= 8", f)


def test_criterion_2_cubic_divisors(report):
    f: list[str] = []
    expect(f, "I", [cubic_I_char(a, 8 - a) for a in (2, 1, 0)], [360, 2520, 8400])
    expect(f, "T", [cubic_T_char(a, 8 - a) for a in (4, 3, 2, 1, 0)], [24, 240, 885, 1470, 0])
    report(2, "cubic divisor characteristic numbers of I and T", f)


def test_criterion_3_cubic_characteristic_numbers(report):
    f: list[str] = []
    chars = cubic_char_numbers()
    expect(f, "C1", chars[1], 21004)
    expect(f, "C0", chars[0], 33616)
    expect(f, "vector", [chars[a] for a in range(9, -1, -1)],
           [1, 4, 16, 64, 256, 976, 3424, 9766, 21004, 33616])
    report(3, "smooth cubic characteristic numbers from the recursion", f)


def test_criterion_4_quartic_divisor_columns(report, columns):
    f: list[str] = []
    got = {f"{d}[a={a}]": columns[d].entries[a] for d in DIVISORS for a in range(14)}
    f += [str(m) for m in ref.emit_reference_diff(got, ref.table2())]
    expected_cases = {
        "X": (1, [623700, 249480, 1496880, 748440, 1496880, 1247400, 249480, 1496880]),
        "P": (0, [540540, 8648640, 23063040, 1729728, 10810800, 11531520, 138378240, 1153152,
                  86486400, 25945920]),
        "Q": (0, [36036, 135135, 231660, 1621620, 30888, 1621620, 810810]),
    }
    for d, (a, values) in expected_cases.items():
        table = ref.subtotals(d)
        f += [str(m) for m in ref.emit_reference_diff(computed_subtotals(d, a), table)]
        expect(f, f"{d} subtotal list", sorted(e.constant for e in table.entries.values()), sorted(values))
    expect(f, "H(1)", column_H(1), 90549360)
    expect(f, "X(1)", column_X(1), 7609140)
    expect(f, "Y(2)", column_Y(2), 59400)
    expect(f, "P(0)", column_P(0), 308287980)
    expect(f, "Q(0)", column_Q(0), 4487769)
    expect(f, "I(0)", column_I(0), LinForm.symbol(IOTA, 2535))
    expect(f, "T(4)", column_T(4), LinForm.symbol(TAU, 54))
    report(4, "H, I, T, P, Q, X, Y columns, case subtotals and headline totals", f)


def test_criterion_5_quartic_solve(report, solution):
    f: list[str] = []
    expect(f, "unknowns", solution.unknowns,
           {Q: 6, QPRIME: 64, Y: 4, YPRIME: 46, IOTA: 451440, TAU: 1552})
    expect(f, "char numbers", [solution.char_numbers[a] for a in range(14, -1, -1)],
           [1, 6, 36, 216, 1296, 7776, 46656, 279600, 1668096, 9840040, 56481396, 308389896,
            1530345504, 6533946576, 23011191144])
    d = solution.diagnostics
    expect(f, "consistent and unique", (d.consistent, d.unique), (True, True))
    expect(f, "redundant rows", d.n_redundant, 8)
    expect(f, "iota/120", solution.iota_points, 3762)
    report(5, "quartic unknowns, smooth quartic numbers, 8 redundant rows, iota/120", f)


def test_criterion_6_discriminant_multiplicities(report):
    f: list[str] = []
    expect(f, "multiplicities", [discriminant_multiplicity(x) for x in "HITP"], [14, 18, 15, 10])
    report(6, "discriminant multiplicities along H, I, T, P", f)


def test_criterion_7_property_suites(report, columns):
    f: list[str] = []
    # conic duality, and the tables against their oracles
    for p in range(6):
        expect(f, f"conic duality {p}", conic_char(p, 5 - p), conic_char(5 - p, p))
    for p in range(4):
        expect(f, f"flag duality {p}", flag_conic_char(p, 3 - p), flag_conic_char(3 - p, p))
    for key, (tab, comp) in oracle_table(0).items():
        expect(f, f"oracle {key}", comp, tab)
    # every divisor-column entry moved by +-1 makes the system inconsistent
    for d in DIVISORS:
        for a in range(14):
            for delta in (1, -1):
                cols = dict(columns)
                entries = dict(columns[d].entries)
                entries[a] = entries[a] + delta
                cols[d] = DivisorColumn(d, entries)
                try:
                    solve(cols)
                    f.append(f"{d}[a={a}]{delta:+d} was absorbed")
                except InconsistentSystemError:
                    pass
    # planted solutions on random full-rank systems
    rng = random.Random(2024)
    for trial in range(50):
        n = rng.randint(1, 8)
        planted = {f"x{i}": Fraction(rng.randint(-99, 99), rng.randint(1, 12)) for i in range(n)}
        rows = []
        for _ in range(n + 2):
            form = LinForm(0, {s: rng.randint(-9, 9) for s in planted})
            rows.append(form - form.evaluate(planted))
        sol = solve_exact(LinearSystem(tuple(rows)), strict=False)
        if sol.diagnostics.unique and len(sol.values) == n:
            expect(f, f"planted trial {trial}", sol.values, planted)
    # linear-form laws
    for _ in range(200):
        def rand_form():
            return LinForm(Fraction(rng.randint(-50, 50), rng.randint(1, 7)),
                           {s: rng.randint(-5, 5) for s in rng.sample(["iota", "tau", "q", "y"], 2)})
        u, v, w = rand_form(), rand_form(), rand_form()
        k = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        expect(f, "associativity", (u + v) + w, u + (v + w))
        expect(f, "commutativity", u + v, v + u)
        expect(f, "distributivity", (u + v) * k, u * k + v * k)
        expect(f, "inverse", u - u, LinForm(0))
    report(7, "conic duality, mutation, planted solutions, linear-form laws", f)
