"""Counts of simply branched covers of P^1 via transposition tuples in S_d.

Two independent routes:

* ``classalg``: repeated multiplication by the transposition class sum in the
  class algebra of S_d, then inclusion-exclusion over the orbit block of 1 to
  keep only transitive tuples;
* ``enum``: depth-first enumeration of all transposition tuples, tracking the
  running product and the orbit partition directly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

MAX_DEGREE = 6
# refuse brute force beyond this many tuples
ENUM_LIMIT = 5_000_000

Partition = tuple[int, ...]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {0, ..., d-1} stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection: {self.images}")
        if len(self.images) > MAX_DEGREE:
            raise ValueError(f"degree {len(self.images)} exceeds {MAX_DEGREE}")

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(tuple(range(d)))

    @classmethod
    def transposition(cls, d: int, i: int, j: int) -> "Permutation":
        img = list(range(d))
        img[i], img[j] = j, i
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        return Permutation(tuple(self.images[k] for k in other.images))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, k in enumerate(self.images):
            inv[k] = i
        return Permutation(tuple(inv))

    def cycle_type(self) -> Partition:
        seen = [False] * self.degree
        lengths = []
        for start in range(self.degree):
            if seen[start]:
                continue
            n, k = 0, start
            while not seen[k]:
                seen[k] = True
                k = self.images[k]
                n += 1
            lengths.append(n)
        return tuple(sorted(lengths, reverse=True))

    def is_identity(self) -> bool:
        return all(i == k for i, k in enumerate(self.images))


@dataclass(frozen=True)
class CoverCount:
    degree: int
    branch_points: int
    raw_tuples: int
    connected_tuples: int

    @property
    def covers(self) -> Fraction:
        return Fraction(self.connected_tuples, factorial(self.degree))

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "branch_points": self.branch_points,
            "raw_tuples": str(self.raw_tuples),
            "connected_tuples": str(self.connected_tuples),
            "covers": str(self.covers),
        }


def _check(d: int, b: int) -> None:
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if d > MAX_DEGREE:
        raise ValueError(f"degree {d} exceeds the supported maximum {MAX_DEGREE}")
    if b < 0:
        raise ValueError(f"branch point count must be >= 0, got {b}")


def partitions(n: int, largest: int | None = None) -> list[Partition]:
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for k in range(min(n, largest), 0, -1):
        out.extend((k,) + rest for rest in partitions(n - k, k))
    return out


@lru_cache(maxsize=None)
def transposition_action(lam: Partition) -> dict[Partition, int]:
    """For sigma of cycle type lam: how many transpositions t put sigma*t in each class."""
    twice = Counter()
    parts = list(lam)
    for idx, k in enumerate(parts):
        rest = parts[:idx] + parts[idx + 1:]
        for s in range(1, k):
            # each unordered split {s, k-s} of a k-cycle arises from k/2 * 2 ordered s
            twice[tuple(sorted(rest + [s, k - s], reverse=True))] += k
    for i, j in combinations(range(len(parts)), 2):
        rest = [p for n, p in enumerate(parts) if n not in (i, j)]
        twice[tuple(sorted(rest + [parts[i] + parts[j]], reverse=True))] += 2 * parts[i] * parts[j]
    out = {}
    for mu, v in twice.items():
        assert v % 2 == 0
        out[mu] = v // 2
    return out


@lru_cache(maxsize=None)
def _class_vector(d: int, b: int) -> dict[Partition, int]:
    if b == 0:
        return {(1,) * d: 1}
    prev = _class_vector(d, b - 1)
    out = Counter()
    for lam, n in prev.items():
        for mu, k in transposition_action(lam).items():
            out[mu] += n * k
    return dict(out)


def _tuple_count_classalg(d: int, b: int) -> int:
    return _class_vector(d, b).get((1,) * d, 0)


@lru_cache(maxsize=None)
def _transitive_count_classalg(d: int, b: int) -> int:
    # split off the orbit of point 0: it has some size k and absorbs j of the b transpositions
    total = _tuple_count_classalg(d, b) if d else int(b == 0)
    for k in range(1, d + 1):
        for j in range(b + 1):
            if (k, j) == (d, b):
                continue
            rest = _tuple_count_classalg(d - k, b - j) if d - k else int(b == j)
            if not rest:
                continue
            total -= comb(d - 1, k - 1) * comb(b, j) * _transitive_count_classalg(k, j) * rest
    return total


def _enumerate(d: int, b: int) -> tuple[int, int]:
    """(tuples with identity product, of which transitive) by direct search."""
    pairs = list(combinations(range(d), 2))
    if len(pairs) ** b > ENUM_LIMIT:
        raise ValueError(f"enumeration of {len(pairs)}^{b} tuples exceeds limit {ENUM_LIMIT}")
    raw = conn = 0

    def orbits_merge(labels: tuple[int, ...], i: int, j: int) -> tuple[int, ...]:
        a, c = labels[i], labels[j]
        if a == c:
            return labels
        lo, hi = min(a, c), max(a, c)
        return tuple(lo if x == hi else x for x in labels)

    def walk(depth: int, prod: tuple[int, ...], labels: tuple[int, ...]):
        nonlocal raw, conn
        if depth == b:
            if all(i == k for i, k in enumerate(prod)):
                raw += 1
                if len(set(labels)) == 1:
                    conn += 1
            return
        for i, j in pairs:
            nxt = list(prod)
            # right-multiply by (i j)
            nxt[i], nxt[j] = prod[j], prod[i]
            walk(depth + 1, tuple(nxt), orbits_merge(labels, i, j))

    walk(0, tuple(range(d)), tuple(range(d)))
    return raw, conn


METHODS = ("classalg", "enum", "both")


def cover_count(d: int, b: int, method: str = "classalg") -> CoverCount:
    _check(d, b)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if method == "enum":
        raw, conn = _enumerate(d, b)
    else:
        raw, conn = _tuple_count_classalg(d, b), _transitive_count_classalg(d, b)
        if method == "both":
            e_raw, e_conn = _enumerate(d, b)
            if (e_raw, e_conn) != (raw, conn):
                raise ArithmeticError(
                    f"backends disagree at d={d}, b={b}: class algebra {(raw, conn)}, "
                    f"enumeration {(e_raw, e_conn)}")
    return CoverCount(d, b, raw, conn)


def tuple_count(d: int, b: int, method: str = "classalg") -> int:
    """Number of b-tuples of transpositions in S_d with identity product."""
    return cover_count(d, b, method).raw_tuples


def connected_cover_count(d: int, b: int, method: str = "classalg") -> Fraction:
    """Connected degree-d covers of P^1 with b given simple branch points, weighted by 1/|Aut|."""
    return cover_count(d, b, method).covers


def degree3_closed_form(b: int) -> Fraction:
    if b < 2 or b % 2:
        raise ValueError(f"closed form needs an even b >= 2, got {b}")
    return Fraction(3 ** (b - 1) - 3, 6)
