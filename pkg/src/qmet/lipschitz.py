"""Lower semicontinuous maps, distance to a closed complement, thinning,
Lipschitz checking, and the largest-below Lipschitz envelope.

On a finite carrier the opens of the induced topology are exactly the
subsets that are upward closed for the specialization order, and the largest
Scott-open family of balls whose radius-zero slice stays inside an open U is
cut out by the closed-ball test: (x, r) belongs to it iff every point within
distance r of x lies in U.  Everything here is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional, Union

from .balls import FormalBall
from .errors import QmetError, UnknownPoint
from .extreal import INF, ZERO, ExtReal, as_fraction, ext
from .spaces import Space


def extended_value_dist(u: ExtReal, v: ExtReal) -> ExtReal:
    """One-way distance between extended non-negative values: how far u sits
    above v, infinite when u is the top and v is not."""
    if u <= v:
        return ZERO
    if u.is_infinite:
        return INF
    return ExtReal(u.as_fraction() - v.as_fraction())


class OpenSet:
    """An open of the finite carrier: a subset upward closed under the
    specialization order."""

    def __init__(self, space: Space, members: Iterable[str]):
        self.space = space
        self.members = frozenset(members)
        for x in self.members:
            space.index(x)
        for x in self.members:
            for y in space.points:
                if y not in self.members and space.specialization_leq(x, y):
                    raise QmetError(
                        f"not upward closed: {x} is in the set, {y} above it is not"
                    )

    def __contains__(self, x):
        return x in self.members

    def __iter__(self):
        return iter(sorted(self.members, key=self.space.index))

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        return isinstance(other, OpenSet) and self.members == other.members

    def complement(self) -> tuple:
        return tuple(p for p in self.space.points if p not in self.members)

    def __repr__(self):
        return f"OpenSet({sorted(self.members)})"


def hat_membership(space: Space, b: FormalBall, u: OpenSet) -> bool:
    """Whether the ball sits in the largest Scott-open ball family whose
    radius-zero slice stays inside u: the closed r-ball around the center
    must be contained in u."""
    i = space.index(b.center)
    for j, y in enumerate(space.points):
        d = space.dist_by_index(i, j)
        if d.is_finite and d.as_fraction() <= b.radius and y not in u:
            return False
    return True


def thinning(space: Space, u: OpenSet, r) -> OpenSet:
    """Points whose radius-r ball still fits: shrinks u by r."""
    r = as_fraction(r)
    if r < 0:
        raise QmetError("thinning radius must be non-negative")
    members = [
        x for x in space.points if hat_membership(space, FormalBall(x, r), u)
    ]
    return OpenSet(space, members)


def dist_to_complement(space: Space, x: str, u: OpenSet) -> ExtReal:
    """Distance from x to the complement of u; infinite when u is everything.

    On a finite carrier this is both the minimum distance into the
    complement and the supremum of radii r with (x, r) still in the hat of
    u; zero exactly when x is outside u.
    """
    i = space.index(x)
    best = INF
    for j, y in enumerate(space.points):
        if y not in u:
            best = min(best, space.dist_by_index(i, j))
    return best


# ---------------------------------------------------------------------------
# Functions into the extended non-negative rationals


class LscFunction:
    """A total map from the carrier into the extended non-negative rationals.

    Any total map is admitted; monotonicity with respect to the
    specialization order (a consequence of lower semicontinuity) is checked
    separately and reported, not enforced.
    """

    def __init__(self, space: Space, values: dict):
        self.space = space
        vals = {}
        for p in space.points:
            if p not in values:
                raise QmetError(f"function missing value at {p}")
            vals[p] = ext(values[p])
        extra = set(values) - set(space.points)
        if extra:
            raise UnknownPoint(sorted(extra)[0])
        self.values = vals

    def __call__(self, x: str) -> ExtReal:
        try:
            return self.values[x]
        except KeyError:
            raise UnknownPoint(x) from None

    def __eq__(self, other):
        return isinstance(other, LscFunction) and self.values == other.values

    def leq(self, other: "LscFunction") -> bool:
        return all(self.values[p] <= other.values[p] for p in self.space.points)

    def monotone_violations(self) -> list:
        out = []
        for x in self.space.points:
            for y in self.space.points:
                if self.space.specialization_leq(x, y) and not self.values[x] <= self.values[y]:
                    out.append((x, y))
        return out

    @classmethod
    def scaled_indicator(cls, space: Space, u: OpenSet, r) -> "LscFunction":
        r = ext(r)
        return cls(space, {p: (r if p in u else ZERO) for p in space.points})

    def to_json(self) -> dict:
        return {"values": {p: str(self.values[p]) for p in self.space.points}}

    @classmethod
    def from_json(cls, space: Space, obj: dict) -> "LscFunction":
        return cls(space, obj["values"])

    def __repr__(self):
        inner = ", ".join(f"{p}: {self.values[p]}" for p in self.space.points)
        return f"LscFunction({{{inner}}})"


# ---------------------------------------------------------------------------
# Lipschitz checking


@dataclass
class LipschitzReport:
    alpha: Fraction
    violations: list  # (x, y, lhs, rhs)
    lift_violations: list  # (ball, ball) where monotonicity of the lift fails

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def lift_monotone(self) -> bool:
        return not self.lift_violations

    @property
    def verdicts_agree(self) -> bool:
        return self.passed == self.lift_monotone


def lipschitz_check(
    space: Space,
    f: Union[LscFunction, dict],
    alpha,
    codomain: Optional[Space] = None,
    lift_radii: Iterable = (0, Fraction(1, 2), 1, 2),
) -> LipschitzReport:
    """Check the slope bound pairwise and, independently, monotonicity of
    the ball lift (x, r) -> (f(x), alpha * r); the two verdicts coincide."""
    alpha = as_fraction(alpha)
    if alpha < 0:
        raise QmetError("alpha must be non-negative")

    if isinstance(f, LscFunction):
        def value_dist(x, y):
            return extended_value_dist(f(x), f(y))
    else:
        if codomain is None:
            raise QmetError("a mapping given as a dict needs a codomain space")
        for p in space.points:
            if p not in f:
                raise QmetError(f"mapping missing value at {p}")
            codomain.index(f[p])

        def value_dist(x, y):
            return codomain.dist(f[x], f[y])

    violations = []
    for x in space.points:
        for y in space.points:
            lhs = value_dist(x, y)
            rhs = alpha * space.dist(x, y)
            if not lhs <= rhs:
                violations.append((x, y, lhs, rhs))

    lift_violations = []
    radii = [as_fraction(r) for r in lift_radii]
    for x in space.points:
        for y in space.points:
            d = space.dist(x, y)
            for r in radii:
                for s in radii:
                    if r < s or d.is_infinite or d.as_fraction() > r - s:
                        continue
                    # (x, r) <= (y, s); the lift must preserve it
                    gap = value_dist(x, y)
                    if not (gap.is_finite and gap.as_fraction() <= alpha * (r - s)):
                        lift_violations.append(
                            (FormalBall(x, r), FormalBall(y, s))
                        )
    return LipschitzReport(alpha, violations, lift_violations)


# ---------------------------------------------------------------------------
# Envelopes


def envelope(space: Space, f: LscFunction, alpha) -> LscFunction:
    """Largest alpha-Lipschitz map below f, computed as the inf-convolution
    g(x) = min over y of f(y) + alpha * d(x, y).

    With slope zero the product convention 0 * inf = 0 collapses this to the
    constant minimum of f.
    """
    alpha = as_fraction(alpha)
    if alpha < 0:
        raise QmetError("alpha must be non-negative")
    values = {}
    for x in space.points:
        i = space.index(x)
        best = None
        for j, y in enumerate(space.points):
            term = f(y) + alpha * space.dist_by_index(i, j)
            best = term if best is None else min(best, term)
        values[x] = best
    return LscFunction(space, values)


def lipschitz_threshold(space: Space, f: LscFunction) -> Fraction:
    """Least slope at which the envelope recovers a finite-valued f: the
    largest ratio of a value drop to a finite nonzero distance."""
    best = Fraction(0)
    for x in space.points:
        if f(x).is_infinite:
            raise QmetError("threshold needs a finite-valued function")
    for x in space.points:
        for y in space.points:
            d = space.dist(x, y)
            if d.is_infinite or d == ZERO:
                continue
            drop = f(x).as_fraction() - f(y).as_fraction()
            if drop > 0:
                best = max(best, drop / d.as_fraction())
    return best


def envelope_closed_form(space: Space, u: OpenSet, r, alpha) -> LscFunction:
    """min(r, alpha * distance to the complement): the envelope of the
    scaled indicator of u, in closed form."""
    r = ext(r)
    alpha = as_fraction(alpha)
    values = {
        x: min(r, alpha * dist_to_complement(space, x, u)) for x in space.points
    }
    return LscFunction(space, values)


# ---------------------------------------------------------------------------
# Independent largest-Scott-open oracle (for cross-validation on tiny carriers)


def scott_open_thresholds_bruteforce(space: Space, u: OpenSet, max_points: int = 5) -> dict:
    """Largest Scott-open up-closed ball family with radius-zero slice in u,
    found by brute force over per-point radius-threshold vectors.

    Any up-closed family of balls that is radius-open at every center is
    described by thresholds t(x), holding exactly the balls (x, r) with
    r < t(x); up-closure across centers amounts to t(x) <= t(y) + d(x, y)
    and the slice condition pins t(x) = 0 outside u.  Enumerating threshold
    vectors over the (finite) lattice of realized distance values and taking
    the pointwise maximum of the valid ones yields the largest such family.
    The result maps each point to its threshold.
    """
    n = len(space)
    if n > max_points:
        raise QmetError(f"brute-force oracle capped at {max_points} points")
    levels = {ZERO, INF}
    for i in range(n):
        for j in range(n):
            levels.add(space.dist_by_index(i, j))
    finite_levels = sorted(
        (v for v in levels if v.is_finite), key=lambda v: v.as_fraction()
    )
    all_levels = finite_levels + [INF]
    choices = []
    for x in space.points:
        choices.append([ZERO] if x not in u else all_levels)
    best = [ZERO] * n
    for vector in product(*choices):
        ok = True
        for i in range(n):
            for j in range(n):
                if not vector[i] <= vector[j] + space.dist_by_index(i, j):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            best = [max(b, v) for b, v in zip(best, vector)]
    return {space.points[i]: best[i] for i in range(n)}
