from __future__ import annotations

import random

import pytest

from charnum.exact import IOTA, InconsistentSystemError, LinearSystem, LinForm, Q, QPRIME, TAU, Y, YPRIME, solve_exact
from charnum.quartic_divisors import DIVISORS, DivisorColumn, all_columns
from charnum.quartic_solver import (ANCHOR_LABEL, assemble_system, discriminant_multiplicity,
                                    relations_with, solve)

TABLE7 = [1, 6, 36, 216, 1296, 7776, 46656, 279600, 1668096, 9840040, 56481396,
          308389896, 1530345504, 6533946576, 23011191144]


def test_shape(solution):
    system = solution.system
    assert len(system) == 29
    assert len(system.unknowns) == 21
    assert system.labels[-1] == ANCHOR_LABEL


def test_unknowns(solution):
    assert solution.unknowns == {IOTA: 451440, TAU: 1552, Q: 6, QPRIME: 64, Y: 4, YPRIME: 46}


def test_char_numbers(solution):
    assert [solution.char_numbers[a] for a in range(14, -1, -1)] == TABLE7


def test_iota_points(solution):
    assert solution.iota_points == 3762
    assert solution.invariant_violations() == []


def test_surplus_rows_redundant(solution):
    d = solution.diagnostics
    assert d.consistent and d.unique
    assert d.rank == 21
    assert d.n_redundant == 8


def test_top_rows_degenerate(columns):
    system = assemble_system(columns)
    rows = dict(zip(system.labels, system.rows))
    assert rows["relation 1, a=13"] == LinForm(0, {"C14": 6, "C13": -1})
    assert rows["relation 2, a=13"] == LinForm(-27, {"C14": 27})


def test_derived_T_gives_same_solution(solution):
    other = solve(all_columns(t_mode="derived"))
    assert other.char_numbers == solution.char_numbers
    assert other.unknowns == solution.unknowns


def test_relations_substituted(solution, columns):
    rel = relations_with(solution.unknowns)
    assert rel[1] == {"H": 4, "I": 12, "T": 6, "P": 2, "X": 6, "Q": 6, "Y": 4}
    values = dict(solution.unknowns)
    for a in range(14):
        for idx, alpha, beta in ((1, 6, solution.char_numbers[a]), (2, 27, 0)):
            rhs = beta + sum(k * columns[d].entries[a].evaluate(values) for d, k in rel[idx].items())
            assert alpha * solution.char_numbers[a + 1] == rhs


@pytest.mark.parametrize("divisor,m", [("H", 14), ("I", 18), ("T", 15), ("P", 10)])
def test_discriminant_multiplicity(divisor, m):
    assert discriminant_multiplicity(divisor) == m


@pytest.mark.parametrize("divisor", ["Q", "X", "Y", "DELTA0", "Z"])
def test_discriminant_multiplicity_rejects(divisor):
    with pytest.raises(ValueError):
        discriminant_multiplicity(divisor)


def _perturbed(columns, divisor, a, delta):
    cols = dict(columns)
    entries = dict(columns[divisor].entries)
    entries[a] = entries[a] + delta
    cols[divisor] = DivisorColumn(divisor, entries)
    return cols


@pytest.mark.parametrize("divisor", DIVISORS)
@pytest.mark.parametrize("delta", [1, -1])
def test_mutation_makes_system_inconsistent(columns, divisor, delta):
    for a in range(14):
        with pytest.raises(InconsistentSystemError) as info:
            solve(_perturbed(columns, divisor, a, delta))
        assert info.value.diagnostics.first_inconsistent_row is not None


def test_row_subset_stability(solution):
    system = solution.system
    reference = solve_exact(system).values
    assert solve_exact(system.drop(solution.diagnostics.redundant_rows)).values == reference
    # other orders expose other sets of 8 redundant rows; dropping each keeps the answer
    pairs = list(zip(system.labels, system.rows))
    seen = set()
    for seed in range(12):
        random.Random(seed).shuffle(pairs)
        shuffled = LinearSystem.from_rows(pairs)
        redundant = solve_exact(shuffled).diagnostics.redundant_rows
        assert len(redundant) == 8
        seen.add(frozenset(redundant))
        assert solve_exact(shuffled.drop(redundant)).values == reference
    assert len(seen) > 1


def test_conic_perturbation_breaks_consistency(monkeypatch):
    # a wrong conic table propagates into the columns and the system detects it
    from charnum import conics
    monkeypatch.setitem(conics.CONIC_CHAR, (3, 2), 5)
    monkeypatch.setitem(conics.CONIC_CHAR, (2, 3), 5)
    with pytest.raises(InconsistentSystemError):
        solve(all_columns())


def test_incomplete_columns_rejected(columns):
    cols = dict(columns)
    del cols["Y"]
    with pytest.raises(ValueError, match="Y"):
        assemble_system(cols)


def test_json(solution):
    j = solution.to_json()
    assert j["char_numbers"][-1] == "23011191144"
    assert j["unknowns"]["iota"] == "451440"
