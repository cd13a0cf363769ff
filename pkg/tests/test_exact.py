from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from charnum.exact import (IOTA, TAU, InconsistentSystemError, LinearSystem, LinForm,
                           UnderdeterminedSystemError, as_fraction, binomial, determinant,
                           multinomial, rank, solve_exact)

fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)
names = st.sampled_from(["iota", "tau", "q", "y", "C3", "zz"])
forms = st.builds(LinForm, fractions, st.dictionaries(names, fractions, max_size=4))


def test_binomial_edges():
    assert binomial(5, 2) == 10
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


@given(st.integers(1, 60), st.integers(0, 60))
def test_pascal_rule(n, k):
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k) if k else binomial(n, 0) == 1


def test_multinomial():
    assert multinomial(12, [2, 2, 4, 2, 2]) == 1247400
    with pytest.raises(ValueError):
        multinomial(5, [2, 2])
    with pytest.raises(ValueError):
        multinomial(0, [1, -1])


def test_as_fraction_refuses_inexact():
    assert as_fraction("3/4") == Fraction(3, 4)
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        as_fraction(True)


@given(fractions, fractions, fractions)
def test_fraction_field_identities(a, b, c):
    assert a * (b + c) == a * b + a * c
    if b:
        assert (a / b) * b == a


@given(forms, forms, forms)
def test_linform_additive_group(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert f - f == LinForm(0)
    assert f + 0 == f


@given(forms, forms, fractions, fractions)
def test_linform_scalar_laws(f, g, k, m):
    assert (f + g) * k == f * k + g * k
    assert f * (k + m) == f * k + f * m
    assert f * (k * m) == (f * k) * m
    if k:
        assert (f * k) / k == f


@given(forms, st.dictionaries(names, fractions, min_size=6, max_size=6))
def test_linform_evaluate_is_linear(f, values):
    values = {**{n: Fraction(0) for n in ["iota", "tau", "q", "y", "C3", "zz"]}, **values}
    expected = f.constant + sum(c * values[s] for s, c in f.coefficients.items())
    assert f.evaluate(values) == expected


@given(forms)
def test_linform_json_round_trip(f):
    assert LinForm.from_json(f.to_json()) == f


def test_linform_rejects_nonlinear_product():
    with pytest.raises(TypeError):
        LinForm.symbol(IOTA) * LinForm.symbol(TAU)
    assert LinForm(3) * LinForm.symbol(TAU) == LinForm.symbol(TAU, 3)


def test_linform_str():
    assert str(LinForm(103320, {TAU: 1170})) == "103320 + 1170*tau"
    assert str(LinForm(0)) == "0"
    assert str(LinForm(-1, {IOTA: -1})) == "-1 - iota"


@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_planted_solution_recovered(n, rnd):
    planted = {f"x{i}": Fraction(rnd.randint(-50, 50), rnd.randint(1, 9)) for i in range(n)}
    rows = []
    while len(rows) < n + 3:
        coeffs = {s: rnd.randint(-9, 9) for s in planted}
        form = LinForm(0, coeffs)
        rows.append(form - form.evaluate(planted))
    system = LinearSystem(tuple(rows))
    sol = solve_exact(system, strict=False)
    if sol.diagnostics.unique and set(system.unknowns) == set(planted):
        assert sol.values == planted
        assert sol.diagnostics.n_redundant == len(rows) - n
    else:
        # a rank-deficient draw still has the planted point in its solution set
        assert all(r.evaluate(planted) == 0 for r in rows)


def test_inconsistency_names_first_bad_row():
    x, y = LinForm.symbol("x"), LinForm.symbol("y")
    system = LinearSystem.from_rows([("a", x - 1), ("b", y - 2), ("c", x + y - 3), ("d", x - y), ("e", x - 5)])
    with pytest.raises(InconsistentSystemError) as info:
        solve_exact(system)
    assert info.value.diagnostics.first_inconsistent_row == "d"
    assert info.value.diagnostics.redundant_rows == ("c",)


def test_underdetermined_reports_kernel():
    u, v = LinForm.symbol("u"), LinForm.symbol("v")
    system = LinearSystem((u + v - 2,))
    with pytest.raises(UnderdeterminedSystemError):
        solve_exact(system)
    sol = solve_exact(system, strict=False)
    assert sol.diagnostics.free_symbols == ("v",)
    (k,) = sol.nullspace
    assert k == {"u": -1, "v": 1}
    assert (u + v - 2).evaluate(sol.values) == 0


def test_drop_rows():
    x = LinForm.symbol("x")
    system = LinearSystem.from_rows([("a", x - 1), ("b", 2 * x - 2)])
    assert solve_exact(system.drop(["a"])).values == {"x": 1}
    assert len(system.drop(["a"])) == 1


def test_determinant_and_rank():
    assert determinant([[2, 1], [1, 1]]) == 1
    assert determinant([[0, 1], [1, 0]]) == -1
    assert rank([[1, 2, 3], [2, 4, 6], [0, 0, 1]]) == 2
    assert rank([[0, 0]]) == 0
    rnd = random.Random(4)
    m = [[rnd.randint(-5, 5) for _ in range(4)] for _ in range(4)]
    assert (determinant(m) != 0) == (rank(m) == 4)
