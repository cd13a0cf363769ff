"""Characteristic numbers alpha^a beta^(13-a) of the quartic boundary divisors.

Each column except Delta0 is a configuration sum built on
:mod:`charnum.configurations`. Entries are :class:`LinForm` values over the two
cover-count unknowns ``iota`` and ``tau``.

Component names used below: ``c`` a conic image, ``l``/``l1``/``l2``/``m`` line
images, ``n2``/``n3`` the two rational lines of ``Y``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from pathlib import Path
from typing import Callable, Iterator, Mapping, Sequence

from .configurations import Configuration, DivisorModel, Group, total
from .conics import conic_char, flag_conic_char
from .exact import IOTA, TAU, LinForm

CONDITIONS = 13
DIVISORS = ("DELTA0", "H", "I", "T", "P", "Q", "X", "Y")
ENGINE_DIVISORS = ("H", "I", "T", "P", "Q", "X", "Y")

# Both components moving in one-parameter families; counted once by hand on a
# product of lines (P) and on a ruled surface over the tangency line (Q).
P_NEITHER_CONSTANT = 6
Q_NEITHER_CONSTANT = 3

# Genus-3 triple covers with 10 given branch points; the image of the marked
# point then sweeps the line, meeting the collision divisor of u 10 times.
GENUS3_TRIPLE_COVERS = 3280
T_UNMARKED_COEFFICIENT = Fraction(GENUS3_TRIPLE_COVERS, 10)  # 328

# Per-unit value of the branch-collision divisor used by the table mode for
# the family where the triple-cover line rotates about a fixed node image.
T_NODE_PENCIL_TABLE_VALUE = 136

T_MODES = ("table", "derived")

DELTA0_COLUMN: dict[int, int] = {
    0: 74651593680, 1: 23328812592, 2: 5919651072, 3: 1268876232, 4: 242612208,
    5: 43393596, 6: 7453872, 7: 1256352, 8: 209952, 9: 34992, 10: 5832,
    11: 972, 12: 162, 13: 27,
}

H_MODEL = DivisorModel("H", CONDITIONS, {"c": (5, 2)}, {"c": 8}, automorphism=Fraction(1, 2))
X_MODEL = DivisorModel("X", CONDITIONS, {"l1": (2, 2), "l2": (2, 2)}, {"l1": 3, "l2": 6},
                       automorphism=Fraction(1, 2))
Y_MODEL = DivisorModel("Y", CONDITIONS, {"m": (2, 2), "n2": (2, 1), "n3": (2, 1)}, {"m": 8})
P_MODEL = DivisorModel("P", CONDITIONS, {"c": (5, 1), "l": (2, 2)}, {"l": 6}, gluing=2)
Q_MODEL = DivisorModel("Q", CONDITIONS, {"c": (5, 1), "l": (2, 2)}, {"l": 7},
                       automorphism=Fraction(1, 2))
I_FIXED_MODEL = DivisorModel("I", CONDITIONS, {"l": (2, 4)}, {"l": 11})
I_PENCIL_MODEL = DivisorModel("I", CONDITIONS, {"l": (2, 4)}, {"l": 12})
T_RIGID_MODEL = DivisorModel("T", CONDITIONS, {"l": (2, 3), "m": (2, 1)}, {"l": 9})
T_MOVING_MODEL = DivisorModel("T", CONDITIONS, {"l": (2, 3), "m": (2, 1)}, {"l": 10})


def _check_a(a: int) -> int:
    if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a <= CONDITIONS:
        raise ValueError(f"a must be an integer in 0..{CONDITIONS}, got {a!r}")
    return CONDITIONS - a


def _conic(points: int, lines: int) -> int:
    """conic_char, but zero for impossible splits instead of an error."""
    return conic_char(points, lines) if points >= 0 and lines >= 0 and points + lines == 5 else 0


def _flag(points: int, lines: int) -> int:
    return flag_conic_char(points, lines) if points >= 0 and lines >= 0 and points + lines == 3 else 0


def _node_group(n: int, weight: int) -> Group:
    """n fixed lines through the image of a node; two of them pin it at their crossing."""
    if n == 2:
        return Group("pair crossing at node", 2, weight=weight)
    return Group("through node", 1, n, weight=weight)


# --- H: double cover of a conic ------------------------------------------------

def configs_H(a: int) -> Iterator[Configuration]:
    b = _check_a(a)
    for t in range(6):
        p = 5 - a - t
        if p < 0:
            continue
        r = b - t - 2 * p
        if r < 0 or p + r != 8:
            continue
        sols = _conic(a + p, t) * 2 ** r  # which crossing with the conic is the branch point
        if not sols:
            continue
        yield H_MODEL.build(
            "conic fixed", a,
            [Group("on conic", a, component="c")],
            [Group("tangent to conic", 1, t, weight=2),
             Group("pair crossing on conic", 2, p), Group("branch on conic", 1, r)],
            sols, branch={"c": p + r}, fixing={"c": a + p + t},
            descriptor={"tangent": t, "pairs": p, "branch_lines": r},
        )


# --- X: genus-1 and genus-2 double covers of two lines -----------------------

def configs_X(a: int) -> Iterator[Configuration]:
    b = _check_a(a)
    for a1, n, p1, p2 in product(range(a + 1), range(3), range(4), range(7)):
        a2, r1, r2 = a - a1, 3 - p1, 6 - p2
        if n + 2 * p1 + r1 + 2 * p2 + r2 != b:
            continue
        own1, own2 = a1 + p1 + (n == 2), a2 + p2 + (n == 2)
        valid = {0: {(2, 2)}, 1: {(2, 1), (1, 2)}, 2: {(2, 2)}}[n]
        if (own1, own2) not in valid:
            continue
        yield X_MODEL.build(
            f"node lines {n}", a,
            [Group("on genus-1 cover", a1, component="l1"),
             Group("on genus-2 cover", a2, component="l2")],
            [_node_group(n, 3),
             Group("pair crossing on l1", 2, p1), Group("branch on l1", 1, r1),
             Group("pair crossing on l2", 2, p2), Group("branch on l2", 1, r2)],
            1, branch={"l1": p1 + r1, "l2": p2 + r2}, fixing={"l1": own1, "l2": own2},
            descriptor={"node_lines": n, "points_genus1": a1, "points_genus2": a2,
                        "pairs_l1": p1, "branch_l1": r1, "pairs_l2": p2, "branch_l2": r2},
        )


# --- Y: genus-3 double cover of m with two rational lines at an asterisk ------

def configs_Y(a: int) -> Iterator[Configuration]:
    b = _check_a(a)
    for a_m, a2, k, p in product(range(a + 1), range(1, 3), range(3), range(9)):
        a3 = a - a_m - a2
        r = 8 - p
        if not a2 <= a3 <= 2 or k + 2 * p + r != b:
            continue
        own_m = a_m + p
        if own_m not in (1, 2) or k + (own_m == 2) + (a2 == 2) + (a3 == 2) != 2:
            continue
        rational = [Group("on rational line", a2, 2, component="n2")] if a2 == a3 else \
            [Group("on rational line", a2, component="n2"), Group("on rational line", a3, component="n3")]
        yield Y_MODEL.build(
            f"asterisk lines {k}", a,
            [Group("on double cover", a_m, component="m"), *rational],
            [Group("through asterisk", 1, k, weight=4),
             Group("pair crossing on m", 2, p), Group("branch on m", 1, r)],
            1, branch={"m": p + r}, fixing={"m": own_m, "n2": a2, "n3": a3},
            descriptor={"asterisk_lines": k, "points_m": a_m, "points_rational": (a2, a3),
                        "pairs": p, "branch_lines": r},
        )


# --- P: conic glued at two points to a genus-2 double cover of a line ---------

def configs_P(a: int) -> Iterator[Configuration]:
    b = _check_a(a)
    for a_c, q2, k1, t, p in product(range(a + 1), range(3), range(3), range(6), range(7)):
        if q2 + k1 > 2:
            continue
        a_l, r = a - a_c, 6 - p
        if t + 2 * p + r + 2 * q2 + k1 != b:
            continue
        own_c, own_l = a_c + t + q2, a_l + p + q2
        if own_l > 2 or own_c > 5 or own_c + own_l + k1 != 7:
            continue
        if (own_c, own_l) == (5, 2):
            first, sols = "both", _conic(a_c + q2, t)
        elif own_c == 5:
            # each of the k1 node lines meets the fixed conic twice
            first, sols = "c", _conic(a_c + q2, t) * 2 ** k1
        elif own_l == 2:
            first, sols = "l", _conic(a_c + q2 + k1, t)
        else:
            first, sols = "neither", p_neither(a_c, t)
        if not sols:
            continue
        x, y = sorted([2] * q2 + [1] * k1 + [0] * (2 - q2 - k1))
        yield P_MODEL.build(
            f"nodes ({x},{y}), {first} fixed first", a,
            [Group("on conic", a_c, component="c"), Group("on double cover", a_l, component="l")],
            [Group("pair crossing at node", 2, q2, weight=2),
             Group("through node", 1, k1, weight=2),
             Group("tangent to conic", 1, t),
             Group("pair crossing on l", 2, p), Group("branch on l", 1, r)],
            sols, branch={"l": p + r}, fixing={"c": own_c, "l": own_l},
            descriptor={"node_lines": (x, y), "fixed_first": first, "tangent": t,
                        "pairs": p, "branch_lines": r},
        )


def p_neither(points_on_conic: int, tangent: int) -> int:
    """Pairs (conic, line) meeting once on each of two node lines, both moving.

    With N conics of the family through one more point, the conic sweeps a
    (2N, 2N) curve in the product of the node lines and the line pencil a (1, 1)
    curve. They meet 4N times, N of them over the crossing of the node lines.
    """
    return 3 * _conic(points_on_conic + 1, tangent)


# --- Q: conic tangent at one point to a genus-3 double cover of a line ---------

def configs_Q(a: int) -> Iterator[Configuration]:
    b = _check_a(a)
    for a_c, n, t, p in product(range(a + 1), range(3), range(6), range(8)):
        a_l, r = a - a_c, 7 - p
        if t + 2 * p + r + n != b:
            continue
        own_c, own_l = a_c + t, a_l + p
        if own_l > 2:
            continue
        first, sols = q_solutions(n, own_c, own_l, a_c, t)
        if not sols:
            continue
        yield Q_MODEL.build(
            f"node lines {n}, {first} fixed first", a,
            [Group("on conic", a_c, component="c"), Group("on double cover", a_l, component="l")],
            [_node_group(n, 3), Group("tangent to conic", 1, t),
             Group("pair crossing on l", 2, p), Group("branch on l", 1, r)],
            sols, branch={"l": p + r}, fixing={"c": own_c, "l": own_l},
            descriptor={"node_lines": n, "fixed_first": first, "tangent": t,
                        "pairs": p, "branch_lines": r},
        )


def q_solutions(n: int, own_c: int, own_l: int, a_c: int, t: int) -> tuple[str, int]:
    """(which image is determined first, number of (conic, line) pairs)."""
    if n == 0:
        if (own_c, own_l) == (5, 1):
            return "c", _conic(a_c, t) * 2  # two tangent lines from the fixed point class
        if (own_c, own_l) == (4, 2):
            return "l", _conic(a_c, t + 1)
    elif n == 1:
        if (own_c, own_l) == (5, 0):
            return "c", _conic(a_c, t) * 2
        if (own_c, own_l) == (3, 2):
            return "l", _flag(a_c, t)
        if (own_c, own_l) == (4, 1):
            return "neither", q_neither(a_c, t)
    else:
        if (own_c, own_l) == (4, 0):
            return "c", _conic(a_c + 1, t)
        if (own_c, own_l) == (3, 1):
            return "l", _flag(a_c, t)
    return "", 0


def q_neither(points_on_conic: int, tangent: int) -> int:
    """Conic in a one-parameter family tangent on the node line to a line in a pencil.

    On the surface of (point of the node line, line through it) with E.E = -1,
    E.F = 1, F.F = 0 and C = E + F, the pencil has class C and the conic family
    has class N_pt C + N_tan F, so they meet N_pt + N_tan times.
    """
    return _conic(points_on_conic + 1, tangent) + _conic(points_on_conic, tangent + 1)


# --- I: canonical quadruple cover of a line ------------------------------------

def configs_I(a: int) -> Iterator[Configuration]:
    b = _check_a(a)
    iota = LinForm.symbol(IOTA)
    for p in range(3):
        if a + p == 2 and 2 * p + (11 - p) == b:
            yield I_FIXED_MODEL.build(
                "fixed line", a,
                [Group("on quadruple cover", a, component="l")],
                [Group("pair crossing on l", 2, p), Group("branch on l", 1, 11 - p)],
                iota, branch={"l": 11}, fixing={"l": 2},
                descriptor={"family": "fixed line", "pairs": p, "branch_lines": 11 - p},
            )
        if a + p == 1 and 2 * p + (12 - p) == b:
            r = 12 - p
            # the 12 branch points move; collisions of two of the r moving ones
            yield I_PENCIL_MODEL.build(
                "pencil", a,
                [Group("on quadruple cover", a, component="l")],
                [Group("pair crossing on l", 2, p), Group("branch on l", 1, r)],
                iota * Fraction(comb(r, 2), 11), branch={"l": 12}, fixing={"l": 1},
                descriptor={"family": "pencil", "pairs": p, "branch_lines": r},
            )


# --- T: pointed canonical triple cover of l glued to a line m ------------------

def t_moving_value(kind: str, r: int, mode: str = "table") -> LinForm:
    """Intersection of a one-parameter family with the pointed-cover divisor class.

    ``kind`` is ``"m pencil"`` (l and its branch points fixed, marked point moves),
    ``"l pencil"`` (l rotates about a fixed non-node point) or ``"node pencil"``
    (l rotates about the fixed node image).
    """
    if mode not in T_MODES:
        raise ValueError(f"unknown T mode {mode!r}; expected one of {T_MODES}")
    collision = (LinForm.symbol(TAU) - T_UNMARKED_COEFFICIENT) / 9
    if kind == "m pencil":
        return LinForm(GENUS3_TRIPLE_COVERS)
    if kind == "l pencil":
        return collision * comb(r, 2) + T_UNMARKED_COEFFICIENT * r
    if kind == "node pencil":
        if mode == "table":
            return LinForm(comb(r, 2) * T_NODE_PENCIL_TABLE_VALUE)
        return collision * comb(r, 2)
    raise ValueError(f"unknown moving family {kind!r}")


def configs_T(a: int, mode: str = "table") -> Iterator[Configuration]:
    b = _check_a(a)
    if mode not in T_MODES:
        raise ValueError(f"unknown T mode {mode!r}; expected one of {T_MODES}")
    tau = LinForm.symbol(TAU)
    for n, p, a_l, s in product(range(3), range(3), range(a + 1), (9, 10)):
        a_m, r = a - a_l, s - p
        if r < 0 or 2 * p + r + n != b:
            continue
        own_l, own_m = a_l + p + (n == 2), a_m + (n == 2)
        if own_l > 2 or own_m > 2:
            continue
        provenance = "derived"
        if s == 9:
            valid = {0: {(2, 2)}, 1: {(2, 1), (1, 2)}, 2: {(2, 2)}}[n]
            if (own_l, own_m) not in valid:
                continue
            kind, sols, model = "rigid", tau, T_RIGID_MODEL
        else:
            kind = {(0, 2, 1): "m pencil", (0, 1, 2): "l pencil", (1, 1, 1): "l pencil",
                    (1, 0, 2): "node pencil", (2, 1, 2): "node pencil"}.get((n, own_l, own_m))
            if kind is None:
                continue
            sols, model = t_moving_value(kind, r, mode), T_MOVING_MODEL
            if kind == "node pencil" and mode == "table":
                provenance = "data-backed"
        yield model.build(
            f"node lines {n}, {kind}", a,
            [Group("on triple cover", a_l, component="l"), Group("on line m", a_m, component="m")],
            [_node_group(n, 2), Group("pair crossing on l", 2, p), Group("branch on l", 1, r)],
            sols, branch={"l": s}, fixing={"l": own_l, "m": own_m},
            descriptor={"node_lines": n, "family": kind, "points_l": a_l, "points_m": a_m,
                        "pairs": p, "branch_lines": r},
            provenance=provenance,
        )


# --- columns -------------------------------------------------------------------

ENGINES: dict[str, Callable[..., Iterator[Configuration]]] = {
    "H": configs_H, "I": configs_I, "T": configs_T, "P": configs_P,
    "Q": configs_Q, "X": configs_X, "Y": configs_Y,
}


def configurations(divisor: str, a: int, *, t_mode: str = "table") -> list[Configuration]:
    if divisor not in ENGINES:
        raise ValueError(f"no configuration engine for {divisor!r}; expected one of {ENGINE_DIVISORS}")
    if divisor == "T":
        return list(configs_T(a, t_mode))
    return list(ENGINES[divisor](a))


def column_entry(divisor: str, a: int, *, t_mode: str = "table") -> LinForm:
    if divisor == "DELTA0":
        return LinForm(column_Delta0(a))
    return total(configurations(divisor, a, t_mode=t_mode))


def _int(form: LinForm) -> int:
    if not form.is_constant() or form.constant.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {form}")
    return form.constant.numerator


def column_H(a: int) -> int:
    return _int(column_entry("H", a))


def column_X(a: int) -> int:
    return _int(column_entry("X", a))


def column_Y(a: int) -> int:
    return _int(column_entry("Y", a))


def column_P(a: int) -> int:
    return _int(column_entry("P", a))


def column_Q(a: int) -> int:
    return _int(column_entry("Q", a))


def column_I(a: int) -> LinForm:
    return column_entry("I", a)


def column_T(a: int, mode: str = "table") -> LinForm:
    return column_entry("T", a, t_mode=mode)


def column_Delta0(a: int) -> int:
    _check_a(a)
    return DELTA0_COLUMN[a]


@dataclass(frozen=True)
class DivisorColumn:
    divisor: str
    entries: dict[int, LinForm]

    def __post_init__(self):
        if self.divisor not in DIVISORS:
            raise ValueError(f"unknown divisor {self.divisor!r}")
        if sorted(self.entries) != list(range(CONDITIONS + 1)):
            raise ValueError(f"column {self.divisor} must have entries for a = 0..{CONDITIONS}")

    def to_json(self) -> dict:
        return {"divisor": self.divisor,
                "entries": {str(a): v.to_json() for a, v in sorted(self.entries.items())}}


def column(divisor: str, *, t_mode: str = "table") -> DivisorColumn:
    return DivisorColumn(divisor, {a: column_entry(divisor, a, t_mode=t_mode)
                                   for a in range(CONDITIONS + 1)})


def all_columns(*, t_mode: str = "table", delta0: Mapping[int, int] | None = None) -> dict[str, DivisorColumn]:
    cols = {d: column(d, t_mode=t_mode) for d in DIVISORS}
    if delta0 is not None:
        cols["DELTA0"] = DivisorColumn("DELTA0", {a: LinForm(v) for a, v in delta0.items()})
    return cols


# --- Delta0 from genus-2 data ----------------------------------------------------

@dataclass(frozen=True)
class Genus2Row:
    a: int
    N: int
    N_L: int
    N_p: int


class Genus2DataError(ValueError):
    pass


def delta0_from_genus2(rows: Sequence[Genus2Row]) -> dict[int, int]:
    """Combine genus-2 quartic counts with the node multiplicities into the Delta0 column.

    N counts maps tangent to the lines; N_L has the image node on one more line
    (weight 2), N_p has it at a point, the crossing of two lines (weight 4).
    """
    by_a = {}
    for row in rows:
        if row.a in by_a:
            raise Genus2DataError(f"duplicate row for a={row.a}")
        by_a[row.a] = row
    if sorted(by_a) != list(range(CONDITIONS + 1)):
        raise Genus2DataError(f"need exactly one row for each a = 0..{CONDITIONS}, got {sorted(by_a)}")
    out = {}
    for a, row in by_a.items():
        b = CONDITIONS - a
        out[a] = row.N + 2 * b * row.N_L + 4 * comb(b, 2) * row.N_p
    return out


def parse_genus2(text: str, source: str = "<genus2 data>") -> list[Genus2Row]:
    """Parse a JSON document ``{"rows": [{"a":..,"N":..,"N_L":..,"N_p":..}, ...]}``.

    Counts may be JSON integers or decimal strings.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise Genus2DataError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("rows"), list):
        raise Genus2DataError(f"{source}: top level must be an object with a 'rows' array")
    rows = []
    for i, item in enumerate(doc["rows"]):
        if not isinstance(item, dict):
            raise Genus2DataError(f"{source}: rows[{i}] must be an object")
        values = {}
        for key in ("a", "N", "N_L", "N_p"):
            if key not in item:
                raise Genus2DataError(f"{source}: rows[{i}] is missing field {key!r}")
            v = item[key]
            if isinstance(v, str) and v.strip().lstrip("-").isdigit():
                v = int(v)
            if not isinstance(v, int) or isinstance(v, bool):
                raise Genus2DataError(f"{source}: rows[{i}].{key} must be an integer, got {item[key]!r}")
            if v < 0:
                raise Genus2DataError(f"{source}: rows[{i}].{key} must be non-negative, got {v}")
            values[key] = v
        rows.append(Genus2Row(**values))
    if len(rows) != CONDITIONS + 1:
        raise Genus2DataError(f"{source}: expected {CONDITIONS + 1} rows, got {len(rows)}")
    return rows


def load_genus2(path: str | Path) -> list[Genus2Row]:
    path = Path(path)
    return parse_genus2(path.read_text(), str(path))
