"""Characteristic numbers of smooth plane conics, with exact verification routines.

The tables are hard-coded; the ``verify_*`` functions recompute entries from
scratch with rational linear algebra on random configurations and are run by
the test suite and by ``verify``, never on the hot path.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .exact import determinant, rank

CONIC_CHAR: dict[tuple[int, int], int] = {
    (5, 0): 1, (4, 1): 2, (3, 2): 4, (2, 3): 4, (1, 4): 2, (0, 5): 1,
}

# conics tangent to a fixed line at a fixed point of it, through `points`
# further points and tangent to `lines` further lines
FLAG_CONIC_CHAR: dict[tuple[int, int], int] = {
    (3, 0): 1, (2, 1): 2, (1, 2): 2, (0, 3): 1,
}


def conic_char(points: int, lines: int) -> int:
    if points < 0 or lines < 0 or points + lines != 5:
        raise ValueError(f"conic conditions must be 5 in total, got ({points}, {lines})")
    return CONIC_CHAR[points, lines]


def flag_conic_char(points: int, lines: int) -> int:
    if points < 0 or lines < 0 or points + lines != 3:
        raise ValueError(f"flag conic needs 3 further conditions, got ({points}, {lines})")
    return FLAG_CONIC_CHAR[points, lines]


# --- verification -----------------------------------------------------------
# A conic is the coefficient vector of a x^2 + b xy + c y^2 + d xz + e yz + f z^2.

Vec = tuple[Fraction, ...]
Form = list  # binary form: coefficients of lam^n, lam^(n-1) mu, ..., mu^n


def _monomials(p: Sequence) -> list[Fraction]:
    x, y, z = (Fraction(v) for v in p)
    return [x * x, x * y, y * y, x * z, y * z, z * z]


def _gradient_row(p: Sequence, direction: Sequence) -> list[Fraction]:
    """Row r with r . coeffs = dF(p) . direction (tangency of F at p along direction)."""
    x, y, z = (Fraction(v) for v in p)
    u, v, w = (Fraction(t) for t in direction)
    # dF = (2a x + b y + d z, b x + 2c y + e z, d x + e y + 2f z)
    return [2 * x * u, y * u + x * v, 2 * y * v, z * u + x * w, z * v + y * w, 2 * z * w]


def _kernel(rows: list[list[Fraction]]) -> list[Vec]:
    """Basis of {v : rows . v = 0} in Q^6, exact."""
    m = [list(r) for r in rows]
    ncols = 6
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -m[i][free]
        basis.append(tuple(v))
    return basis


def _matrix(f: Sequence) -> list[list]:
    a, b, c, d, e, g = f
    h = Fraction(1, 2)
    return [[a, h * b, h * d], [h * b, c, h * e], [h * d, h * e, g]]


def _fmul(p: Form, q: Form) -> Form:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


def _fadd(*forms: Form) -> Form:
    n = max(len(f) for f in forms)
    if any(len(f) != n for f in forms):
        raise ValueError("forms of different degree")
    return [sum((f[i] for f in forms), Fraction(0)) for i in range(n)]


def _fscale(k, p: Form) -> Form:
    return [k * x for x in p]


def _pencil_matrix(f1: Vec, f2: Vec) -> list[list[Form]]:
    m1, m2 = _matrix(f1), _matrix(f2)
    return [[[m1[i][j], m2[i][j]] for j in range(3)] for i in range(3)]


def _det3(m: list[list[Form]]) -> Form:
    terms = []
    for (i, j, k), sign in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
                            ((0, 2, 1), -1), ((1, 0, 2), -1), ((2, 1, 0), -1)):
        terms.append(_fscale(sign, _fmul(_fmul(m[0][i], m[1][j]), m[2][k])))
    return _fadd(*terms)


def _restricted_discriminant(f1: Vec, f2: Vec, p: Sequence, q: Sequence) -> Form:
    """Discriminant, as a form in the pencil parameter, of lam*f1 + mu*f2 on the line pq."""
    # F(u p + v q) = A u^2 + B uv + C v^2 with A = F(p), C = F(q), B = dF(p).q
    mp, mq, bpq = _monomials(p), _monomials(q), _gradient_row(p, q)

    def lin(row):
        return [sum(r * x for r, x in zip(row, f1)), sum(r * x for r, x in zip(row, f2))]

    A, B, Cc = lin(mp), lin(bpq), lin(mq)
    return _fadd(_fmul(B, B), _fscale(-4, _fmul(A, Cc)))


def _resultant(f: Form, g: Form) -> Fraction:
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + list(f) + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + list(g) + [Fraction(0)] * (size - n - 1 - i))
    return determinant(rows)


def _distinct_smooth_roots(disc: Form, f1: Vec, f2: Vec) -> int:
    """Number of pencil members tangent to the line, all of them required to be smooth."""
    a, b, c = disc
    if not (a or b or c):
        raise ArithmeticError("every member of the pencil is tangent: special position")
    if b * b - 4 * a * c == 0:
        raise ArithmeticError("double root: special position")
    if _resultant(disc, _det3(_pencil_matrix(f1, f2))) == 0:
        raise ArithmeticError("a tangent member is singular: special position")
    return 2


def _random_points(n: int, rng: random.Random, bound: int = 50) -> list[tuple[int, int, int]]:
    return [(rng.randint(-bound, bound), rng.randint(-bound, bound), rng.randint(1, bound))
            for _ in range(n)]


def verify_through_five_points(seed: int = 0) -> int:
    """Conics through 5 random rational points: the 5x6 system has a 1-dimensional kernel."""
    rng = random.Random(seed)
    pts = _random_points(5, rng)
    rows = [_monomials(p) for p in pts]
    if rank(rows) != 5:
        raise ArithmeticError("points not in general position")
    (f,) = _kernel(rows)
    if determinant(_matrix(f)) == 0:
        raise ArithmeticError("interpolating conic is singular")
    return 1


def verify_four_points_one_line(seed: int = 0) -> int:
    """Conics through 4 points tangent to a line: double roots of the pencil on the line."""
    rng = random.Random(seed)
    pts = _random_points(6, rng)
    f1, f2 = _kernel([_monomials(p) for p in pts[:4]])
    return _distinct_smooth_roots(_restricted_discriminant(f1, f2, pts[4], pts[5]), f1, f2)


def _flag_rows(seed_rng: random.Random):
    p, q = _random_points(2, seed_rng)
    # tangent to the line pq at p
    return p, q, [_monomials(p), _gradient_row(p, q)]


def verify_flag_three_points(seed: int = 0) -> int:
    rng = random.Random(seed)
    _, _, rows = _flag_rows(rng)
    rows += [_monomials(p) for p in _random_points(3, rng)]
    if rank(rows) != 5:
        raise ArithmeticError("special position")
    (f,) = _kernel(rows)
    if determinant(_matrix(f)) == 0:
        raise ArithmeticError("flag conic is singular")
    return 1


def verify_flag_two_points_one_line(seed: int = 0) -> int:
    rng = random.Random(seed)
    _, _, rows = _flag_rows(rng)
    rows += [_monomials(p) for p in _random_points(2, rng)]
    f1, f2 = _kernel(rows)
    a, b = _random_points(2, rng)
    return _distinct_smooth_roots(_restricted_discriminant(f1, f2, a, b), f1, f2)


def oracle_table(seed: int = 0) -> dict[tuple[str, int, int], tuple[int, int]]:
    """(table, points, lines) -> (tabulated value, independently computed value).

    Entries with more line conditions than point conditions are the projective
    duals of the computed ones, so the computed value is carried across.
    """
    five = verify_through_five_points(seed)
    four = verify_four_points_one_line(seed)
    f3 = verify_flag_three_points(seed)
    f21 = verify_flag_two_points_one_line(seed)
    return {
        ("conic", 5, 0): (CONIC_CHAR[5, 0], five),
        ("conic", 0, 5): (CONIC_CHAR[0, 5], five),
        ("conic", 4, 1): (CONIC_CHAR[4, 1], four),
        ("conic", 1, 4): (CONIC_CHAR[1, 4], four),
        ("flag", 3, 0): (FLAG_CONIC_CHAR[3, 0], f3),
        ("flag", 0, 3): (FLAG_CONIC_CHAR[0, 3], f3),
        ("flag", 2, 1): (FLAG_CONIC_CHAR[2, 1], f21),
        ("flag", 1, 2): (FLAG_CONIC_CHAR[1, 2], f21),
    }
