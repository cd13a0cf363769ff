"""Shared bookkeeping for counting degenerate maps through points and tangent to lines.

A characteristic number of a boundary divisor is a sum over *configurations*:
an assignment of the fixed points and lines to roles (point on this component,
pair of lines meeting at a branch point, line through the image of a node, ...),
the number of geometric solutions once a labelled assignment is chosen, and the
multiplicity each solution carries. A :class:`DivisorModel` holds the per-divisor
constants (components, preimage factors, tangency weights, automorphism and
gluing factors, branch budgets) and validates every configuration it builds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

from .exact import LinForm, Number


@dataclass(frozen=True)
class Group:
    """``copies`` interchangeable groups of ``size`` labelled points or lines in one role."""

    role: str
    size: int
    copies: int = 1
    component: str | None = None  # where a point lies, for the preimage factor
    weight: int = 1               # tangency multiplicity contributed by each line

    @property
    def count(self) -> int:
        return self.size * self.copies


def labelled_partitions(total: int, groups: Iterable[Group]) -> int:
    """Ways to distribute ``total`` labelled objects into the given groups."""
    groups = list(groups)
    if sum(g.count for g in groups) != total:
        raise ValueError(f"groups use {sum(g.count for g in groups)} objects, expected {total}")
    den = 1
    for g in groups:
        den *= factorial(g.size) ** g.copies * factorial(g.copies)
    return factorial(total) // den


@dataclass(frozen=True)
class Configuration:
    divisor: str
    family: str
    a: int
    points: tuple[Group, ...]
    lines: tuple[Group, ...]
    solutions: LinForm
    factors: tuple[tuple[str, Fraction], ...]
    descriptor: tuple[tuple[str, object], ...] = ()
    provenance: str = "derived"

    @property
    def point_assignments(self) -> int:
        return labelled_partitions(self.a, self.points)

    @property
    def line_partitions(self) -> int:
        return labelled_partitions(sum(g.count for g in self.lines), self.lines)

    @property
    def multiplicity(self) -> Fraction:
        out = Fraction(1)
        for _, f in self.factors:
            out *= f
        return out

    @property
    def value(self) -> LinForm:
        return self.solutions * (self.point_assignments * self.line_partitions * self.multiplicity)

    def describe(self) -> dict:
        return dict(self.descriptor)

    def to_json(self) -> dict:
        return {
            "divisor": self.divisor,
            "family": self.family,
            "a": self.a,
            "descriptor": {k: v for k, v in self.descriptor},
            "point_assignments": str(self.point_assignments),
            "line_partitions": str(self.line_partitions),
            "solutions": self.solutions.to_json(),
            "factors": {k: str(v) for k, v in self.factors},
            "value": self.value.to_json(),
            "provenance": self.provenance,
        }


@dataclass(frozen=True)
class DivisorModel:
    """Per-divisor constants of the configuration grammar.

    ``components`` maps a component name to (family dimension of its image,
    degree of the map onto its image). ``branch_budget`` maps a multiple-cover
    component to its number of branch points.
    """

    name: str
    total: int
    components: Mapping[str, tuple[int, int]]
    branch_budget: Mapping[str, int] = field(default_factory=dict)
    automorphism: Fraction = Fraction(1)
    gluing: int = 1

    def build(
        self,
        family: str,
        a: int,
        points: Iterable[Group],
        lines: Iterable[Group],
        solutions: LinForm | Number,
        *,
        branch: Mapping[str, int],
        fixing: Mapping[str, int] = {},
        descriptor: Mapping[str, object] | None = None,
        provenance: str = "derived",
    ) -> Configuration:
        """Validate the bookkeeping and assemble a configuration.

        ``branch`` gives, per cover, how many branch points the configuration
        accounts for; ``fixing`` gives how many conditions each component's
        image absorbs by itself (at most its family dimension).
        """
        points = tuple(g for g in points if g.count)
        lines = tuple(g for g in lines if g.count)
        if sum(g.count for g in points) != a:
            raise ValueError(f"{self.name}/{family}: points used {sum(g.count for g in points)} != {a}")
        if sum(g.count for g in lines) != self.total - a:
            raise ValueError(f"{self.name}/{family}: lines used != {self.total - a}")
        if dict(branch) != dict(self.branch_budget):
            raise ValueError(f"{self.name}/{family}: branch points {dict(branch)} "
                             f"miss budget {dict(self.branch_budget)}")
        for comp, n in fixing.items():
            dim = self.components[comp][0]
            if not 0 <= n <= dim:
                raise ValueError(f"{self.name}/{family}: {comp} gets {n} conditions, dimension {dim}")
        factors = []
        if self.automorphism != 1:
            factors.append(("automorphism", self.automorphism))
        if self.gluing != 1:
            factors.append(("gluing", Fraction(self.gluing)))
        pre = Fraction(1)
        for g in points:
            if g.component is None:
                raise ValueError(f"point group {g.role!r} has no component")
            pre *= self.components[g.component][1] ** g.count
        if pre != 1:
            factors.append(("preimage", pre))
        tangency = Fraction(1)
        for g in lines:
            tangency *= g.weight ** g.count
        if tangency != 1:
            factors.append(("tangency", tangency))
        return Configuration(
            divisor=self.name,
            family=family,
            a=a,
            points=points,
            lines=lines,
            solutions=LinForm.coerce(solutions),
            factors=tuple(factors),
            descriptor=tuple((descriptor or {}).items()),
            provenance=provenance,
        )


def total(configs: Iterable[Configuration]) -> LinForm:
    out = LinForm(0)
    for c in configs:
        out = out + c.value
    return out
