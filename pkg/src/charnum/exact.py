"""Exact integers, rationals, affine-linear forms and an exact linear solver.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`;
both are arbitrary precision and normalized after every operation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction]

IOTA = "iota"
TAU = "tau"
Q = "q"
QPRIME = "q'"
Y = "y"
YPRIME = "y'"


def C(a: int) -> str:
    """Symbol for the characteristic number deg alpha^a beta^(14-a)."""
    return f"C{a}"


SYMBOLS: tuple[str, ...] = (IOTA, TAU, Q, QPRIME, Y, YPRIME) + tuple(C(a) for a in range(15))
_ORDER = {s: i for i, s in enumerate(SYMBOLS)}


def symbol_key(sym: str) -> tuple[int, str]:
    """Global ordering: the known symbols first, anything else lexicographically after."""
    return (_ORDER.get(sym, len(SYMBOLS)), sym)


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {list(parts)}")
    if sum(parts) != n:
        raise ValueError(f"parts {list(parts)} do not sum to {n}")
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def as_fraction(x: Number | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact or boolean value {x!r}")
    return Fraction(x)


class LinForm:
    """Affine-linear form ``constant + sum(coeff * symbol)`` with rational coefficients.

    Immutable; zero coefficients are never stored, so equality is coefficient-wise.
    """

    __slots__ = ("_const", "_coeffs")

    def __init__(self, constant: Number = 0, coefficients: Mapping[str, Number] | None = None):
        self._const = as_fraction(constant)
        items = {}
        for sym, c in (coefficients or {}).items():
            c = as_fraction(c)
            if c:
                items[sym] = c
        self._coeffs = dict(sorted(items.items(), key=lambda kv: symbol_key(kv[0])))

    @classmethod
    def symbol(cls, sym: str, coefficient: Number = 1) -> "LinForm":
        return cls(0, {sym: coefficient})

    @classmethod
    def coerce(cls, x: "LinForm | Number") -> "LinForm":
        return x if isinstance(x, LinForm) else cls(x)

    @property
    def constant(self) -> Fraction:
        return self._const

    @property
    def coefficients(self) -> dict[str, Fraction]:
        return dict(self._coeffs)

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(self._coeffs)

    def coefficient(self, sym: str) -> Fraction:
        return self._coeffs.get(sym, Fraction(0))

    def is_constant(self) -> bool:
        return not self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs and not self._const

    def __add__(self, other):
        if not isinstance(other, (LinForm, int, Fraction)) or isinstance(other, bool):
            return NotImplemented
        other = LinForm.coerce(other)
        coeffs = dict(self._coeffs)
        for s, c in other._coeffs.items():
            coeffs[s] = coeffs.get(s, 0) + c
        return LinForm(self._const + other._const, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return LinForm(-self._const, {s: -c for s, c in self._coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, (LinForm, int, Fraction)) or isinstance(other, bool):
            return NotImplemented
        return self + (-LinForm.coerce(other))

    def __rsub__(self, other):
        return LinForm.coerce(other) - self

    def __mul__(self, k):
        if isinstance(k, LinForm):
            if k.is_constant():
                k = k.constant
            elif self.is_constant():
                return k * self._const
            else:
                raise TypeError("product of two non-constant forms is not linear")
        if not isinstance(k, (int, Fraction)) or isinstance(k, bool):
            return NotImplemented
        return LinForm(self._const * k, {s: c * k for s, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, k):
        if not isinstance(k, (int, Fraction)) or isinstance(k, bool):
            return NotImplemented
        return self * (1 / Fraction(k))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = LinForm(other)
        if not isinstance(other, LinForm):
            return NotImplemented
        return self._const == other._const and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._const, tuple(self._coeffs.items())))

    def substitute(self, values: Mapping[str, Number]) -> "LinForm":
        out = LinForm(self._const)
        for s, c in self._coeffs.items():
            out = out + (c * as_fraction(values[s]) if s in values else LinForm.symbol(s, c))
        return out

    def evaluate(self, values: Mapping[str, Number]) -> Fraction:
        v = self.substitute(values)
        if not v.is_constant():
            raise KeyError(f"no value for {', '.join(v.symbols)}")
        return v.constant

    def to_json(self) -> dict:
        return {
            "constant": str(self._const),
            "coefficients": {s: str(c) for s, c in self._coeffs.items()},
        }

    @classmethod
    def from_json(cls, obj: Mapping | int | str) -> "LinForm":
        if isinstance(obj, (int, str)):
            return cls(Fraction(obj))
        return cls(Fraction(obj.get("constant", "0")),
                   {s: Fraction(c) for s, c in obj.get("coefficients", {}).items()})

    def __str__(self):
        parts = []
        if self._const or not self._coeffs:
            parts.append(str(self._const))
        for s, c in self._coeffs.items():
            term = s if c == 1 else f"-{s}" if c == -1 else f"{c}*{s}"
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"LinForm({self})"


@dataclass(frozen=True)
class LinearSystem:
    """Rows are forms constrained to equal zero; ``labels`` names each row for diagnostics."""

    rows: tuple[LinForm, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        rows = tuple(LinForm.coerce(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        labels = tuple(self.labels) or tuple(f"row {i}" for i in range(len(rows)))
        if len(labels) != len(rows):
            raise ValueError("one label per row required")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[str, LinForm]]) -> "LinearSystem":
        rows = list(rows)
        return cls(tuple(r for _, r in rows), tuple(l for l, _ in rows))

    @property
    def unknowns(self) -> tuple[str, ...]:
        syms = {s for r in self.rows for s in r.symbols}
        return tuple(sorted(syms, key=symbol_key))

    def drop(self, labels: Iterable[str]) -> "LinearSystem":
        gone = set(labels)
        keep = [(l, r) for l, r in zip(self.labels, self.rows) if l not in gone]
        return LinearSystem.from_rows(keep)

    def __len__(self):
        return len(self.rows)


@dataclass(frozen=True)
class Diagnostics:
    rank: int
    n_rows: int
    n_unknowns: int
    redundant_rows: tuple[str, ...]
    consistent: bool
    unique: bool
    first_inconsistent_row: str | None = None
    free_symbols: tuple[str, ...] = ()

    @property
    def n_redundant(self) -> int:
        return len(self.redundant_rows)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "rows": self.n_rows,
            "unknowns": self.n_unknowns,
            "redundant": self.n_redundant,
            "redundant_rows": list(self.redundant_rows),
            "consistent": self.consistent,
            "unique": self.unique,
            "first_inconsistent_row": self.first_inconsistent_row,
            "free_symbols": list(self.free_symbols),
        }


@dataclass(frozen=True)
class Solution:
    values: dict[str, Fraction]
    diagnostics: Diagnostics
    # for an underdetermined system: values is a particular solution, plus a kernel basis
    nullspace: tuple[dict[str, Fraction], ...] = field(default=())


class LinearSystemError(ValueError):
    def __init__(self, message: str, solution: Solution):
        super().__init__(message)
        self.solution = solution

    @property
    def diagnostics(self) -> Diagnostics:
        return self.solution.diagnostics


class InconsistentSystemError(LinearSystemError):
    pass


class UnderdeterminedSystemError(LinearSystemError):
    pass


def solve_exact(system: LinearSystem, *, strict: bool = True) -> Solution:
    """Gauss-Jordan elimination over the rationals, one row at a time.

    Rows are reduced in order against the pivots found so far, so a row that
    reduces to zero is a verified redundancy and the first row that reduces to
    a nonzero constant is reported as the inconsistent one. With ``strict`` an
    inconsistent or underdetermined system raises; otherwise the diagnostics say so.
    """
    if not len(system):
        raise ValueError("empty system")
    unknowns = system.unknowns
    pivots: dict[str, dict] = {}  # pivot symbol -> reduced row {sym: coeff, None: const}
    redundant: list[str] = []
    bad: str | None = None

    for label, form in zip(system.labels, system.rows):
        row = dict(form.coefficients)
        row[None] = form.constant
        for p, prow in pivots.items():
            c = row.get(p)
            if c:
                for s, v in prow.items():
                    row[s] = row.get(s, 0) - c * v
        row = {s: v for s, v in row.items() if v or s is None}
        live = sorted((s for s in row if s is not None), key=symbol_key)
        if not live:
            if row[None]:
                bad = bad or label
            else:
                redundant.append(label)
            continue
        p = live[0]
        inv = 1 / row[p]
        row = {s: v * inv for s, v in row.items()}
        for q, qrow in pivots.items():
            c = qrow.get(p)
            if c:
                for s, v in row.items():
                    qrow[s] = qrow.get(s, 0) - c * v
                qrow.pop(p, None)
                for s in [s for s, v in qrow.items() if s is not None and not v]:
                    del qrow[s]
        pivots[p] = row

    free = tuple(s for s in unknowns if s not in pivots)
    consistent = bad is None
    unique = consistent and not free
    diag = Diagnostics(
        rank=len(pivots),
        n_rows=len(system),
        n_unknowns=len(unknowns),
        redundant_rows=tuple(redundant),
        consistent=consistent,
        unique=unique,
        first_inconsistent_row=bad,
        free_symbols=free,
    )
    values = {}
    kernel: list[dict[str, Fraction]] = []
    if consistent:
        # particular solution with every free symbol set to zero
        for p, prow in pivots.items():
            values[p] = -prow.get(None, Fraction(0))
        for f in free:
            vec = {s: Fraction(0) for s in unknowns}
            vec[f] = Fraction(1)
            for p, prow in pivots.items():
                vec[p] = -prow.get(f, Fraction(0))
            kernel.append(vec)
        values = {s: values.get(s, Fraction(0)) for s in unknowns}
    sol = Solution(values, diag, tuple(kernel))
    if strict and not consistent:
        raise InconsistentSystemError(f"inconsistent system: first offending row is {bad!r}", sol)
    if strict and not unique:
        raise UnderdeterminedSystemError(
            f"underdetermined system: free symbols {', '.join(free)}", sol)
    return sol


def determinant(matrix: Sequence[Sequence[Number]]) -> Fraction:
    """Exact determinant by fraction-valued elimination."""
    m = [[as_fraction(x) for x in row] for row in matrix]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("square matrix required")
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def rank(matrix: Sequence[Sequence[Number]]) -> int:
    """Exact rank of a rational matrix."""
    rows = [LinForm(0, {f"x{j}": v for j, v in enumerate(r)}) for r in matrix]
    rows = [r for r in rows if not r.is_zero()]
    if not rows:
        return 0
    return solve_exact(LinearSystem(tuple(rows)), strict=False).diagnostics.rank
