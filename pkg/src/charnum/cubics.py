"""Characteristic numbers of smooth plane cubics.

Two boundary divisors matter: ``I`` (a genus-1 curve triply covering a line)
and ``T`` (a line glued to a genus-1 curve doubly covering another line). Their
characteristic numbers come from configuration enumeration; the smooth-cubic
numbers then follow from the divisor relation 4 alpha = beta + 2T + 6I.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .configurations import Configuration, DivisorModel, Group, total
from .exact import Number
from .hurwitz import connected_cover_count

CONDITIONS = 8  # a + b for divisor classes on the cubic space
# connected genus-1 triple covers of P^1 with 6 given branch points
TRIPLE_COVERS_GENUS1 = 40

CUBIC_I = DivisorModel("I", CONDITIONS, {"line": (2, 3)}, branch_budget={"line": 6})
CUBIC_T = DivisorModel(
    "T", CONDITIONS, {"l": (2, 2), "m": (2, 1)}, branch_budget={"l": 4})


def _check(a: int, b: int) -> None:
    if a < 0 or b < 0 or a + b != CONDITIONS:
        raise ValueError(f"cubic divisor conditions must satisfy a + b = {CONDITIONS}, got ({a}, {b})")


def cubic_I_configs(a: int, b: int, covers: Number | None = None) -> Iterator[Configuration]:
    """The image line is fixed by its points and by crossings of line pairs."""
    _check(a, b)
    covers = TRIPLE_COVERS_GENUS1 if covers is None else covers
    for p in range(3):
        r = 6 - p
        if a + p != 2 or 2 * p + r != b:
            continue
        yield CUBIC_I.build(
            "fixed line", a,
            [Group("on line", a, component="line")],
            [Group("pair crossing on line", 2, p), Group("branch on line", 1, r)],
            covers,
            branch={"line": p + r}, fixing={"line": a + p},
            descriptor={"pairs": p, "branch_lines": r},
        )


def cubic_T_configs(a: int, b: int) -> Iterator[Configuration]:
    """Line m glued to a double cover of line l; n fixed lines pass through the node."""
    _check(a, b)
    for n in range(3):
        for a_l in range(a + 1):
            a_m = a - a_l
            for p in range(5):
                r = 4 - p
                if n + 2 * p + r != b:
                    continue
                # two node lines pin the node, giving each image a condition
                own_l, own_m = a_l + p, a_m
                if n == 0:
                    ok = (own_l, own_m) == (2, 2)
                elif n == 1:
                    ok = (own_l, own_m) in ((2, 1), (1, 2))
                else:
                    ok = (own_l, own_m) == (1, 1)
                if not ok:
                    continue
                node = Group("pair crossing at node", 2, weight=2) if n == 2 else \
                    Group("through node", 1, n, weight=2)
                extra = int(n == 2)
                yield CUBIC_T.build(
                    f"node lines {n}", a,
                    [Group("on double cover", a_l, component="l"),
                     Group("on line m", a_m, component="m")],
                    [node, Group("pair crossing on l", 2, p), Group("branch on l", 1, r)],
                    1,
                    branch={"l": p + r}, fixing={"l": own_l + extra, "m": own_m + extra},
                    descriptor={"node_lines": n, "points_l": a_l, "points_m": a_m,
                                "pairs": p, "branch_lines": r},
                )


def cubic_I_char(a: int, b: int, covers: Number | None = None) -> int:
    return _integer(total(cubic_I_configs(a, b, covers)).constant)


def cubic_T_char(a: int, b: int) -> int:
    return _integer(total(cubic_T_configs(a, b)).constant)


def _integer(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"non-integral characteristic number {x}")
    return x.numerator


@dataclass(frozen=True)
class RecursionStep:
    a: int
    previous: int
    T: int
    I: int
    value: int

    def to_json(self) -> dict:
        return {k: (v if k == "a" else str(v)) for k, v in self.__dict__.items()}


def cubic_recursion(covers: Number | None = None) -> list[RecursionStep]:
    """C_9 = 1, C_a = 4 C_{a+1} - 2 T_a - 6 I_a, returned for a = 8 down to 0."""
    c, steps = 1, []
    for a in range(CONDITIONS, -1, -1):
        t, i = cubic_T_char(a, CONDITIONS - a), cubic_I_char(a, CONDITIONS - a, covers)
        value = 4 * c - 2 * t - 6 * i
        steps.append(RecursionStep(a, c, t, i, value))
        c = value
    return steps


def cubic_char_numbers(covers: Number | None = None) -> dict[int, int]:
    """a -> smooth cubics through a points tangent to 9 - a lines, for a = 9 ... 0."""
    out = {CONDITIONS + 1: 1}
    for s in cubic_recursion(covers):
        out[s.a] = s.value
    return out


def hurwitz_covers() -> Fraction:
    """The genus-1 triple cover count recomputed from transposition tuples."""
    return connected_cover_count(3, 6)
