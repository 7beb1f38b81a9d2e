"""Quasi-metric spaces: axiom checking and a gallery of generator spaces.

A space is a finite named carrier plus an exact distance table.  The table
kinds either tabulate the distance directly or compute it from a closed
formula.  The formula-driven kinds are finite windows onto infinite ambient
spaces (the one-way real line, the Sorgenfrey line, a unit interval with a
skewed origin, a Sorgenfrey segment with two tail points); the ambient
formulas stay available to the ball machinery for witness families whose
members fall outside the carrier.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import QmetError, UnknownPoint
from .extreal import INF, ZERO, ExtReal, as_fraction, ext
from .posets import FinitePoset


class _InfinitePoint:
    """Internal marker for the top point of the extended real line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INF_POINT = _InfinitePoint()


def parse_point_value(text: str):
    """A signed rational, or the infinite point for the literal "inf"."""
    if text.strip() == "inf":
        return INF_POINT
    return Fraction(text.strip())


def point_label(value) -> str:
    return "inf" if value is INF_POINT else str(value)


def real_line_dist(x, y) -> ExtReal:
    """One-way distance on the extended real line.

    Zero when x <= y; x - y when x descends to y; anything except the top
    point is infinitely far from below the top point.
    """
    if x is INF_POINT:
        return ZERO if y is INF_POINT else INF
    if y is INF_POINT:
        return ZERO
    return ExtReal(x - y) if x > y else ZERO


def sorgenfrey_dist(x: Fraction, y: Fraction) -> ExtReal:
    """Rightward-only distance: y - x going up, infinite going down."""
    return ExtReal(y - x) if x <= y else INF


class Space:
    """Finite carrier with an exact quasi-metric table."""

    kind = "abstract"

    def __init__(self, points: Sequence[str]):
        self._points = tuple(points)
        if len(set(self._points)) != len(self._points):
            raise QmetError("duplicate point names")
        self._index = {p: i for i, p in enumerate(self._points)}
        self._table: list[list[ExtReal]] = []

    def _fill_table(self):
        n = len(self._points)
        self._table = [
            [self._compute(i, j) for j in range(n)] for i in range(n)
        ]

    def _compute(self, i: int, j: int) -> ExtReal:
        raise NotImplementedError

    @property
    def points(self) -> tuple[str, ...]:
        return self._points

    def __len__(self):
        return len(self._points)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownPoint(name) from None

    def dist(self, x: str, y: str) -> ExtReal:
        return self._table[self.index(x)][self.index(y)]

    def dist_by_index(self, i: int, j: int) -> ExtReal:
        return self._table[i][j]

    def specialization_leq(self, x: str, y: str) -> bool:
        """x is below y in the specialization order when d(x, y) = 0."""
        return self.dist(x, y) == ZERO

    def to_json(self) -> dict:
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({list(self._points)!r})"


class FiniteTableSpace(Space):
    kind = "finite_table"

    def __init__(self, points: Sequence[str], table: Sequence[Sequence[ExtReal]]):
        super().__init__(points)
        n = len(self._points)
        if len(table) != n or any(len(row) != n for row in table):
            raise QmetError("distance table shape mismatch")
        self._table = [[ext(v) for v in row] for row in table]
        self._symmetric: Optional[bool] = None

    def is_symmetric(self) -> bool:
        if self._symmetric is None:
            n = len(self._points)
            self._symmetric = all(
                self._table[i][j] == self._table[j][i]
                for i in range(n)
                for j in range(i + 1, n)
            )
        return self._symmetric

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "points": list(self._points),
            "dist": [[str(v) for v in row] for row in self._table],
        }

    @classmethod
    def metric_line(cls, values: Sequence) -> "FiniteTableSpace":
        """|x - y| on a list of rationals; handy symmetric test space."""
        vals = [as_fraction(v) for v in values]
        points = [str(v) for v in vals]
        table = [[ExtReal(abs(a - b)) for b in vals] for a in vals]
        return cls(points, table)


class RealGridSpace(Space):
    """Finite window onto the one-way extended real line.

    The carrier may include the point "inf"; without it the window behaves
    like a closed interval of rationals.
    """

    kind = "real_grid"

    def __init__(self, values: Sequence):
        self._values = [
            v if v is INF_POINT else as_fraction(v) for v in values
        ]
        super().__init__([point_label(v) for v in self._values])
        self._fill_table()

    def _compute(self, i, j):
        return real_line_dist(self._values[i], self._values[j])

    def value(self, name: str):
        return self._values[self.index(name)]

    def contains_infinity(self) -> bool:
        return any(v is INF_POINT for v in self._values)

    def ambient_dist(self, a, b) -> ExtReal:
        return real_line_dist(a, b)

    def to_json(self) -> dict:
        return {"kind": self.kind, "values": [point_label(v) for v in self._values]}


class SorgenfreyGridSpace(Space):
    """Finite window onto the Sorgenfrey line."""

    kind = "sorgenfrey_grid"

    def __init__(self, values: Sequence):
        self._values = [as_fraction(v) for v in values]
        super().__init__([str(v) for v in self._values])
        self._fill_table()

    def _compute(self, i, j):
        return sorgenfrey_dist(self._values[i], self._values[j])

    def value(self, name: str) -> Fraction:
        return self._values[self.index(name)]

    def ambient_dist(self, a: Fraction, b: Fraction) -> ExtReal:
        return sorgenfrey_dist(a, b)

    def to_json(self) -> dict:
        return {"kind": self.kind, "values": [str(v) for v in self._values]}


class PosetSpace(Space):
    """A finite poset as a 0/inf quasi-metric space."""

    kind = "poset"

    def __init__(self, poset: FinitePoset):
        self.poset = poset
        super().__init__(poset.elements)
        self._fill_table()

    def _compute(self, i, j):
        return ZERO if self.poset.leq_by_index(i, j) else INF

    def to_json(self) -> dict:
        return self.poset.to_json()


class SkewedIntervalSpace(Space):
    """The unit interval under |x - y|, except that every distance out of the
    origin is the constant a (distances into the origin stay zero).

    For a >= 1 the triangle inequality holds; smaller a breaks it, which is
    exactly what the axiom checker is for.  Shifting directed ball families
    over this space moves their sets of upper bounds in ways a least upper
    bound cannot follow, so the space is the stock counterexample to
    shift-invariance of suprema.
    """

    kind = "skewed_interval"

    def __init__(self, a, values: Sequence):
        self.a = as_fraction(a)
        if self.a <= 0:
            raise QmetError("parameter a must be positive")
        self._values = [as_fraction(v) for v in values]
        if any(v < 0 or v > 1 for v in self._values):
            raise QmetError("grid values must lie in [0, 1]")
        if Fraction(0) not in self._values:
            raise QmetError("grid must contain 0")
        super().__init__([str(v) for v in self._values])
        self._fill_table()

    def _compute(self, i, j):
        x, y = self._values[i], self._values[j]
        if x == y:
            return ZERO
        if y == 0:
            return ZERO
        if x == 0:
            return ExtReal(self.a)
        return ExtReal(abs(x - y))

    def value(self, name: str) -> Fraction:
        return self._values[self.index(name)]

    def ambient_dist(self, x: Fraction, y: Fraction) -> ExtReal:
        if x == y or y == 0:
            return ZERO
        if x == 0:
            return ExtReal(self.a)
        return ExtReal(abs(x - y))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "a": str(self.a),
            "values": [str(v) for v in self._values],
        }


class TailedSorgenfreySpace(Space):
    """A Sorgenfrey segment (0, 1] with two extra points -2 < -1 below it.

    Going up: within the segment the distance is Sorgenfrey's y - x; the two
    tail points reach the top point 1 at finite cost (a from -1, c from -2),
    reach each other at cost b, and see the rest of the segment as infinitely
    far.  Going down anything costs infinity.  Requires a, b > 0 and
    c <= a + b for the triangle inequality.  Its way-below relation on formal
    balls famously fails to be shift-invariant.
    """

    kind = "tailed_sorgenfrey"

    LOW2 = Fraction(-2)
    LOW1 = Fraction(-1)

    def __init__(self, a, b, c, values: Sequence):
        self.a = as_fraction(a)
        self.b = as_fraction(b)
        self.c = as_fraction(c)
        if self.a <= 0 or self.b <= 0:
            raise QmetError("parameters a and b must be positive")
        if self.c < 0 or self.c > self.a + self.b:
            raise QmetError("parameter c must satisfy 0 <= c <= a + b")
        grid = [as_fraction(v) for v in values]
        if any(v <= 0 or v > 1 for v in grid):
            raise QmetError("grid values must lie in (0, 1]")
        if Fraction(1) not in grid:
            raise QmetError("grid must contain 1")
        self._values = [self.LOW2, self.LOW1] + grid
        super().__init__([str(v) for v in self._values])
        self._fill_table()

    def _compute(self, i, j):
        return self.ambient_dist(self._values[i], self._values[j])

    def value(self, name: str) -> Fraction:
        return self._values[self.index(name)]

    def ambient_dist(self, x: Fraction, y: Fraction) -> ExtReal:
        if x == y:
            return ZERO
        if x > y:
            return INF
        if x > 0:
            return ExtReal(y - x)
        if x == self.LOW1:
            return ExtReal(self.a) if y == 1 else INF
        # x == -2
        if y == self.LOW1:
            return ExtReal(self.b)
        if y == 1:
            return ExtReal(self.c)
        return INF

    def segment_values(self) -> list[Fraction]:
        return [v for v in self._values if v > 0]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "a": str(self.a),
            "b": str(self.b),
            "c": str(self.c),
            "values": [str(v) for v in self._values if v > 0],
        }


# ---------------------------------------------------------------------------
# Axiom checking


@dataclass
class AxiomViolation:
    axiom: str
    witness: tuple
    detail: str

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "witness": list(self.witness),
            "detail": self.detail,
        }


@dataclass
class AxiomReport:
    passed: bool
    violations: list
    mode: str
    seed: Optional[int]
    budget: int
    triples_checked: int


def check_axioms(space: Space, sample_budget: int = 200_000, seed: int = 0) -> AxiomReport:
    """Verify the quasi-metric axioms, exactly.

    Runs exhaustively when the carrier cubed fits inside the budget,
    otherwise draws a deterministic seeded sample of triples.  Zero-distance
    and identity checks are quadratic and always exhaustive.
    """
    pts = space.points
    n = len(pts)
    violations: list[AxiomViolation] = []

    for i in range(n):
        d = space.dist_by_index(i, i)
        if d != ZERO:
            violations.append(
                AxiomViolation("self_distance", (pts[i],), f"d(x,x) = {d}")
            )
    for i in range(n):
        for j in range(i + 1, n):
            if (
                space.dist_by_index(i, j) == ZERO
                and space.dist_by_index(j, i) == ZERO
            ):
                violations.append(
                    AxiomViolation(
                        "identity_of_indiscernibles",
                        (pts[i], pts[j]),
                        "d(x,y) = d(y,x) = 0 for distinct points",
                    )
                )

    def triangle(i, j, k):
        lhs = space.dist_by_index(i, k)
        rhs = space.dist_by_index(i, j) + space.dist_by_index(j, k)
        if lhs > rhs:
            violations.append(
                AxiomViolation(
                    "triangle",
                    (pts[i], pts[j], pts[k]),
                    f"d(x,z) = {lhs} > {rhs} = d(x,y) + d(y,z)",
                )
            )

    if n**3 <= sample_budget:
        mode, used_seed = "exhaustive", None
        checked = n**3
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    triangle(i, j, k)
    else:
        mode, used_seed = "sampled", seed
        rng = random.Random(seed)
        checked = sample_budget
        for _ in range(sample_budget):
            triangle(rng.randrange(n), rng.randrange(n), rng.randrange(n))

    return AxiomReport(not violations, violations, mode, used_seed, sample_budget, checked)


def symmetrize(space: Space) -> FiniteTableSpace:
    """Pointwise max of the two one-way distances, as a plain table space."""
    n = len(space)
    table = [
        [max(space.dist_by_index(i, j), space.dist_by_index(j, i)) for j in range(n)]
        for i in range(n)
    ]
    return FiniteTableSpace(space.points, table)


# ---------------------------------------------------------------------------
# JSON interface


def space_from_json(obj: dict) -> Space:
    kind = obj.get("kind")
    if kind == "finite_table":
        return FiniteTableSpace(
            obj["points"], [[ext(v) for v in row] for row in obj["dist"]]
        )
    if kind == "real_grid":
        return RealGridSpace([parse_point_value(v) for v in obj["values"]])
    if kind == "sorgenfrey_grid":
        return SorgenfreyGridSpace([Fraction(v) for v in obj["values"]])
    if kind in ("poset", "Poset"):
        return PosetSpace(FinitePoset(obj["elements"], obj["leq"]))
    if kind == "skewed_interval":
        return SkewedIntervalSpace(obj["a"], [Fraction(v) for v in obj["values"]])
    if kind == "tailed_sorgenfrey":
        return TailedSorgenfreySpace(
            obj["a"], obj["b"], obj["c"], [Fraction(v) for v in obj["values"]]
        )
    raise QmetError(f"unknown space kind {kind!r}")


def load_space(path: str) -> Space:
    with open(path, "r", encoding="utf-8") as fh:
        return space_from_json(json.load(fh))
