"""Formal balls over a quasi-metric space.

A formal ball pairs a carrier point with a finite non-negative rational
radius.  Balls are ordered by (x, r) <= (y, s) iff d(x, y) <= r - s; the
strict variant requires d(x, y) < r - s.  Way-below on the ball poset is only
semi-decidable in general, so the checker is three-valued: closed-form
oracles per space kind answer positively, a bounded refuter produces
replayable counterexample families, and everything else is reported unknown.

The refuter's witness families come in three shapes, each with an exactly
computable supremum:

* radius shrink: (z, t + 2^-m) for m in N, supremum (z, t) in any space;
* left approach: (x* - 2^-(m+n0), t + 2^-(m+n0)) climbing to a carrier point
  x* from the left, supremum (x*, t) on Sorgenfrey-like lines;
* divergent climb: (m, t + 2^-m) with unbounded centers, supremum (inf, t)
  on the extended real line.

Members may be ambient points outside the finite carrier; the family plus
its closed-form tail argument is what gets serialized and replayed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import InvalidSup, NoOracle, QmetError
from .extreal import INF, ExtReal, as_fraction, monus
from .spaces import (
    INF_POINT,
    FiniteTableSpace,
    PosetSpace,
    RealGridSpace,
    SkewedIntervalSpace,
    Space,
    SorgenfreyGridSpace,
    TailedSorgenfreySpace,
    point_label,
)

HOLDS = "holds"
REFUTED = "refuted"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class FormalBall:
    center: str
    radius: Fraction

    def __post_init__(self):
        if isinstance(self.radius, float):
            raise QmetError("ball radii are exact rationals, not floats")
        if self.radius < 0:
            raise QmetError(f"ball radius must be non-negative, got {self.radius}")

    def __str__(self):
        return f"({self.center}, {self.radius})"


def ball(center: str, radius) -> FormalBall:
    r = as_fraction(radius)
    if r < 0:
        raise QmetError(f"ball radius must be non-negative, got {r}")
    return FormalBall(center, r)


def parse_ball(text: str) -> FormalBall:
    """Parse the literal form "(point, p/q)"."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    try:
        center, radius = body.rsplit(",", 1)
    except ValueError:
        raise QmetError(f"malformed ball literal {text!r}") from None
    return ball(center.strip(), Fraction(radius.strip()))


def leq_dplus(space: Space, b1: FormalBall, b2: FormalBall) -> bool:
    """(x, r) <= (y, s) iff d(x, y) <= r - s; impossible when r < s."""
    if b1.radius < b2.radius:
        return False
    d = space.dist(b1.center, b2.center)
    return d.is_finite and d.as_fraction() <= b1.radius - b2.radius


def dplus(space: Space, b1: FormalBall, b2: FormalBall) -> ExtReal:
    """The lifted quasi-metric on balls: max(d(x, y) - r + s, 0)."""
    d = space.dist(b1.center, b2.center)
    return monus(d + b2.radius, b1.radius)


def prec(space: Space, b1: FormalBall, b2: FormalBall) -> bool:
    """Strict approximation: d(x, y) < r - s."""
    if b1.radius <= b2.radius:
        return False
    d = space.dist(b1.center, b2.center)
    return d.is_finite and d.as_fraction() < b1.radius - b2.radius


# ---------------------------------------------------------------------------
# Verdicts and witnesses


@dataclass
class Verdict:
    status: str
    justification: str = ""
    witness: "Union[WayBelowWitness, StandardnessWitness, None]" = None
    depth: Optional[int] = None

    @property
    def is_holds(self):
        return self.status == HOLDS

    @property
    def is_refuted(self):
        return self.status == REFUTED

    @property
    def is_unknown(self):
        return self.status == UNKNOWN

    def to_json(self) -> dict:
        out = {"status": self.status, "justification": self.justification}
        if self.depth is not None:
            out["depth"] = self.depth
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def _dyadic(k: int) -> Fraction:
    return Fraction(1, 2**k)


@dataclass
class WayBelowWitness:
    """A directed family refuting a way-below claim.

    The family's supremum dominates the right ball while no member dominates
    the left one; members beyond the materialized prefix follow the closed
    form recorded in ``kind``.
    """

    kind: str  # radius_shrink | left_approach | divergent
    limit_center: str
    t: Fraction
    n0: int
    members: list  # [(center label, radius Fraction)]
    lower: FormalBall
    upper: FormalBall

    @property
    def sup(self) -> tuple:
        return (self.limit_center, self.t)

    def to_json(self) -> dict:
        return {
            "witness": "way_below",
            "family": {
                "kind": self.kind,
                "limit_center": self.limit_center,
                "t": str(self.t),
                "n0": self.n0,
                "members": [[c, str(r)] for c, r in self.members],
                "sup": [self.limit_center, str(self.t)],
            },
            "claim": [str(self.lower), str(self.upper)],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "WayBelowWitness":
        fam = obj["family"]
        lower = parse_ball(obj["claim"][0])
        upper = parse_ball(obj["claim"][1])
        return cls(
            fam["kind"],
            fam["limit_center"],
            Fraction(fam["t"]),
            fam["n0"],
            [(c, Fraction(r)) for c, r in fam["members"]],
            lower,
            upper,
        )

    def replay(self, space: Space) -> bool:
        """Re-verify the refutation from the serialized family."""
        return _witness_valid(space, self)


def _members_follow_schema(space: Space, w: WayBelowWitness) -> bool:
    """The materialized prefix must match the family's closed form, form a
    chain below the declared supremum, and dominate nothing below the claim's
    left ball."""
    for m, (label, radius) in enumerate(w.members):
        if w.kind == "radius_shrink":
            want = (w.limit_center, w.t + _dyadic(m))
        elif w.kind == "left_approach":
            step = _dyadic(m + w.n0)
            want = (point_label(space.value(w.limit_center) - step), w.t + step)
        elif w.kind == "divergent":
            want = (str(m), w.t + _dyadic(m))
        else:
            return False
        if (label, radius) != want:
            return False
    if w.kind == "radius_shrink":
        # constant center, strictly shrinking radii: chain and bounds are immediate
        lower_d = space.dist(w.lower.center, w.limit_center)
        for _, radius in w.members:
            if lower_d.is_finite and lower_d.as_fraction() <= w.lower.radius - radius:
                return False
        return True
    values = []
    for label, radius in w.members:
        values.append((Fraction(label), radius))
    x1 = space.value(w.lower.center)
    for (va, ra), (vb, rb) in zip(values, values[1:]):
        gap = space.ambient_dist(va, vb)
        if gap.is_infinite or gap.as_fraction() > ra - rb:
            return False  # not a chain
    for v, r in values:
        d1 = space.ambient_dist(x1, v)
        if d1.is_finite and d1.as_fraction() <= w.lower.radius - r:
            return False  # a member dominates the left ball after all
    return True


def _witness_valid(space: Space, w: WayBelowWitness) -> bool:
    b1, b2 = w.lower, w.upper
    t = w.t
    if t < 0:
        return False
    if w.kind == "radius_shrink":
        d2 = space.dist(b2.center, w.limit_center)
        if d2.is_infinite or d2.as_fraction() > b2.radius - t:
            return False
        d1 = space.dist(b1.center, w.limit_center)
        no_member = d1.is_infinite or d1.as_fraction() >= b1.radius - t
        return no_member and _members_follow_schema(space, w)
    if w.kind == "left_approach":
        if not isinstance(space, (SorgenfreyGridSpace, TailedSorgenfreySpace)):
            return False
        star = space.value(w.limit_center)
        d2 = space.dist(b2.center, w.limit_center)
        if d2.is_infinite or d2.as_fraction() > b2.radius - t:
            return False
        x1 = space.value(b1.center)
        if isinstance(space, TailedSorgenfreySpace) and x1 <= 0:
            return _members_follow_schema(space, w)
        no_tail_member = not (x1 < star and star - x1 <= b1.radius - t)
        return no_tail_member and _members_follow_schema(space, w)
    if w.kind == "divergent":
        if not (isinstance(space, RealGridSpace) and space.contains_infinity()):
            return False
        d2 = space.dist(b2.center, "inf")
        if d2.is_infinite or d2.as_fraction() > b2.radius - t:
            return False
        x1 = space.value(b1.center)
        no_tail_member = x1 is INF_POINT or b1.radius <= t
        return no_tail_member and _members_follow_schema(space, w)
    return False


# ---------------------------------------------------------------------------
# Closed-form way-below oracles


def _oracle_real_grid(space: RealGridSpace, b1, b2) -> bool:
    if space.value(b1.center) is INF_POINT:
        return False
    return prec(space, b1, b2)


def _oracle_sorgenfrey(space: SorgenfreyGridSpace, b1, b2) -> bool:
    x, y = space.value(b1.center), space.value(b2.center)
    return x < y and x + b1.radius > y + b2.radius


def _oracle_poset(space: PosetSpace, b1, b2) -> bool:
    # way-below inside a finite poset coincides with its order
    return space.poset.leq(b1.center, b2.center) and b1.radius > b2.radius


def _oracle_metric_table(space: FiniteTableSpace, b1, b2) -> bool:
    return prec(space, b1, b2)


def way_below_oracle(space: Space):
    """(name, function) for the space kind, or None when no closed form is
    registered."""
    if isinstance(space, RealGridSpace):
        return ("one_way_real_line", _oracle_real_grid)
    if isinstance(space, SorgenfreyGridSpace):
        return ("sorgenfrey_line", _oracle_sorgenfrey)
    if isinstance(space, PosetSpace):
        return ("finite_poset", _oracle_poset)
    if isinstance(space, FiniteTableSpace) and space.is_symmetric():
        return ("metric_strict_approximation", _oracle_metric_table)
    return None


# ---------------------------------------------------------------------------
# The bounded refuter


def _shrink_witness(space, b1, b2, z: str, depth: int) -> Optional[WayBelowWitness]:
    d2 = space.dist(b2.center, z)
    if d2.is_infinite or d2.as_fraction() > b2.radius:
        return None
    t = b2.radius - d2.as_fraction()
    d1 = space.dist(b1.center, z)
    if d1.is_finite and d1.as_fraction() < b1.radius - t:
        return None  # every tail member eventually dominates b1
    members = [(z, t + _dyadic(m)) for m in range(depth + 1)]
    return WayBelowWitness("radius_shrink", z, t, 0, members, b1, b2)


def _approach_witness(space, b1, b2, star_name: str, depth: int) -> Optional[WayBelowWitness]:
    star = space.value(star_name)
    d2 = space.dist(b2.center, star_name)
    if d2.is_infinite or d2.as_fraction() > b2.radius:
        return None
    t = b2.radius - d2.as_fraction()
    x1 = space.value(b1.center)
    if isinstance(space, TailedSorgenfreySpace):
        if star <= 0:
            return None
        member_ok = x1 > 0 and x1 < star and star - x1 <= b1.radius - t
        n0 = 0
        while star - _dyadic(n0) <= 0:
            n0 += 1
            if n0 > depth:
                return None
    else:
        member_ok = x1 < star and star - x1 <= b1.radius - t
        n0 = 0
    if member_ok:
        return None
    members = [
        (point_label(star - _dyadic(m + n0)), t + _dyadic(m + n0))
        for m in range(depth + 1)
    ]
    return WayBelowWitness("left_approach", star_name, t, n0, members, b1, b2)


def _divergent_witness(space, b1, b2, depth: int) -> Optional[WayBelowWitness]:
    if not space.contains_infinity():
        return None
    t = b2.radius  # d(y, inf) = 0, so this is the largest admissible limit radius
    x1 = space.value(b1.center)
    if not (x1 is INF_POINT or b1.radius <= t):
        return None
    members = [(str(m), t + _dyadic(m)) for m in range(depth + 1)]
    return WayBelowWitness("divergent", "inf", t, 0, members, b1, b2)


def _refute_way_below(space, b1, b2, depth: int) -> Optional[WayBelowWitness]:
    for z in space.points:
        w = _shrink_witness(space, b1, b2, z, depth)
        if w:
            return w
    if isinstance(space, (SorgenfreyGridSpace, TailedSorgenfreySpace)):
        for star in space.points:
            w = _approach_witness(space, b1, b2, star, depth)
            if w:
                return w
    if isinstance(space, RealGridSpace):
        w = _divergent_witness(space, b1, b2, depth)
        if w:
            return w
    return None


def way_below(space: Space, b1: FormalBall, b2: FormalBall, depth: int = 8) -> Verdict:
    """Three-valued way-below on formal balls.

    Positive answers come only from a registered closed-form oracle;
    refutations carry a replayable directed family; otherwise unknown.
    """
    space.index(b1.center)
    space.index(b2.center)
    orc = way_below_oracle(space)
    if orc is not None:
        name, fn = orc
        if fn(space, b1, b2):
            return Verdict(HOLDS, justification=name)
    witness = _refute_way_below(space, b1, b2, depth)
    if witness is not None:
        return Verdict(REFUTED, justification=witness.kind, witness=witness, depth=depth)
    return Verdict(UNKNOWN, justification="bounded search exhausted", depth=depth)


# ---------------------------------------------------------------------------
# The v map, center points, Smyth probe


def v_relation(space: Space, x: str, y: str) -> ExtReal:
    """Infimum of r - s over strict ball approximations from x to y.

    Computed in closed form from the registered way-below rule; the infimum
    over an empty set is infinite.
    """
    space.index(x)
    space.index(y)
    if isinstance(space, RealGridSpace):
        return INF if space.value(x) is INF_POINT else space.dist(x, y)
    if isinstance(space, SorgenfreyGridSpace):
        vx, vy = space.value(x), space.value(y)
        return ExtReal(vy - vx) if vx < vy else INF
    if isinstance(space, PosetSpace):
        return space.dist(x, y)
    if isinstance(space, FiniteTableSpace) and space.is_symmetric():
        return space.dist(x, y)
    raise NoOracle(f"no way-below closed form for kind {space.kind!r}")


def center_point_check(space: Space, x: str) -> bool:
    """x is a center point exactly when v(x, .) agrees with d(x, .)."""
    return all(v_relation(space, x, y) == space.dist(x, y) for y in space.points)


@dataclass
class SmythReport:
    non_center_points: list
    gap_pairs: list  # (b1, b2) with strict approximation but no way-below
    mode: str
    seed: Optional[int]
    depth: int

    @property
    def consistent(self) -> bool:
        return not self.non_center_points and not self.gap_pairs


def smyth_probe(
    space: Space, depth: int = 3, sample_budget: int = 40_000, seed: int = 0
) -> SmythReport:
    """Probe both halves of the Smyth-completeness criterion: every point a
    center point, and no gap between strict approximation and way-below."""
    orc = way_below_oracle(space)
    if orc is None:
        raise NoOracle(f"no way-below closed form for kind {space.kind!r}")
    _, oracle = orc
    non_centers = [x for x in space.points if not center_point_check(space, x)]
    radii = [Fraction(j) for j in range(4)] + [_dyadic(k) for k in range(1, depth + 1)]
    balls = [FormalBall(p, r) for p in space.points for r in radii]
    pairs = [(a, b) for a in balls for b in balls]
    if len(pairs) <= sample_budget:
        mode, used_seed = "exhaustive", None
    else:
        rng = random.Random(seed)
        pairs = [pairs[rng.randrange(len(pairs))] for _ in range(sample_budget)]
        mode, used_seed = "sampled", seed
    gaps = [
        (a, b) for a, b in pairs if prec(space, a, b) and not oracle(space, a, b)
    ]
    return SmythReport(non_centers, gaps, mode, used_seed, depth)


# ---------------------------------------------------------------------------
# Scripted families and the standardness probe


class GeometricBallFamily:
    """The scripted directed family (2^-m, 2^-m + s), m in N, over a skewed
    interval space, together with its exact upper-bound rule.

    A ball (x, r) dominates every member of the family precisely when
    x + r <= s; in particular for s = 0 the sole upper bound is (0, 0).
    The rule never mentions the skew constant because no member is centered
    at the origin.
    """

    def __init__(self, space: SkewedIntervalSpace, s=0):
        if not isinstance(space, SkewedIntervalSpace):
            raise QmetError("scripted geometric families live over skewed intervals")
        self.space = space
        self.s = as_fraction(s)
        if self.s < 0:
            raise QmetError("offset s must be non-negative")

    def member(self, m: int) -> tuple:
        return (_dyadic(m), _dyadic(m) + self.s)

    def truncation(self, depth: int) -> list:
        return [self.member(m) for m in range(depth + 1)]

    def is_upper_bound(self, b: FormalBall) -> bool:
        return self.space.value(b.center) + b.radius <= self.s

    def max_upper_radius(self, center_value: Fraction) -> Optional[Fraction]:
        cap = self.s - center_value
        return cap if cap >= 0 else None

    def shifted(self, a: Fraction) -> "GeometricBallFamily":
        return GeometricBallFamily(self.space, self.s + a)

    def dominates_member(self, b: FormalBall, m: int) -> bool:
        c, r = self.member(m)
        d = self.space.ambient_dist(c, self.space.value(b.center))
        return d.is_finite and d.as_fraction() <= r - b.radius

    def validate_against_truncation(self, depth: int = 12, horizon: int = 80):
        """The closed-form rule must agree with brute force on truncations.

        Positive answers must dominate every materialized member; negative
        answers must fail against some member within the horizon.
        """
        radii = [Fraction(0), self.s, self.s + 1, _dyadic(3), Fraction(2)]
        for name in self.space.points:
            for r in radii:
                b = FormalBall(name, r)
                if self.is_upper_bound(b):
                    for m in range(depth + 1):
                        if not self.dominates_member(b, m):
                            raise QmetError(
                                f"upper-bound rule too generous at {b}, member {m}"
                            )
                else:
                    if all(self.dominates_member(b, m) for m in range(horizon)):
                        raise QmetError(f"upper-bound rule too strict at {b}")

    def describe(self) -> dict:
        return {"kind": "geometric", "s": str(self.s)}


@dataclass
class StandardnessWitness:
    """An upper bound of the shifted family that escapes the shifted sup."""

    family: dict
    shift: Fraction
    candidate: FormalBall
    target: FormalBall
    members: list

    def to_json(self) -> dict:
        return {
            "witness": "standardness",
            "family": self.family,
            "shift": str(self.shift),
            "candidate": str(self.candidate),
            "target": str(self.target),
            "members": [[str(c), str(r)] for c, r in self.members],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "StandardnessWitness":
        return cls(
            obj["family"],
            Fraction(obj["shift"]),
            parse_ball(obj["candidate"]),
            parse_ball(obj["target"]),
            [(c, Fraction(r)) for c, r in obj["members"]],
        )

    def replay(self, space: Space) -> bool:
        if self.family.get("kind") == "geometric":
            fam = GeometricBallFamily(space, Fraction(self.family["s"]))
            shifted = fam.shifted(self.shift)
            return shifted.is_upper_bound(self.candidate) and not leq_dplus(
                space, self.target, self.candidate
            )
        members = [FormalBall(c, r + self.shift) for c, r in self.members]
        is_ub = all(leq_dplus(space, m, self.candidate) for m in members)
        return is_ub and not leq_dplus(space, self.target, self.candidate)


FamilyLike = Union[GeometricBallFamily, Sequence[FormalBall]]


def _finite_max_ub_radius(space, members, w: str, extra: Fraction) -> Optional[Fraction]:
    """Largest u with (w, u) dominating every member shifted by extra."""
    cap = None
    for b in members:
        d = space.dist(b.center, w)
        if d.is_infinite:
            return None
        room = b.radius + extra - d.as_fraction()
        if room < 0:
            return None
        cap = room if cap is None else min(cap, room)
    return cap


def standardness_probe(
    space: Space, family: FamilyLike, known_sup: FormalBall, shift
) -> Verdict:
    """Test whether uniformly inflating the family's radii by the shift keeps
    its least upper bound at the correspondingly inflated ball.

    Refuted means some upper bound of the shifted family fails to dominate
    (x, r + shift); together with a verified least upper bound (x, r) this
    contradicts shift-invariance of directed suprema.
    """
    shift = as_fraction(shift)
    if shift < 0:
        raise QmetError("shift must be non-negative")
    target = FormalBall(known_sup.center, known_sup.radius + shift)

    if isinstance(family, GeometricBallFamily):
        family.validate_against_truncation()
        if not family.is_upper_bound(known_sup):
            raise InvalidSup(f"{known_sup} does not dominate the family")
        for w in space.points:
            cap = family.max_upper_radius(space.value(w))
            if cap is not None and not leq_dplus(space, known_sup, FormalBall(w, cap)):
                raise InvalidSup(f"{known_sup} is not least: ({w}, {cap}) escapes it")
        if shift == 0:
            return Verdict(HOLDS, justification="identity shift")
        shifted = family.shifted(shift)
        for w in space.points:
            cap = shifted.max_upper_radius(space.value(w))
            if cap is None:
                continue
            cand = FormalBall(w, cap)
            if not leq_dplus(space, target, cand):
                witness = StandardnessWitness(
                    family.describe(), shift, cand, target, family.truncation(8)
                )
                return Verdict(REFUTED, justification="escaping upper bound", witness=witness)
        return Verdict(UNKNOWN, justification="no escaping upper bound on the carrier grid")

    members = list(family)
    if not members:
        raise QmetError("family must be nonempty")
    for a in members:
        for b in members:
            if not any(
                leq_dplus(space, a, c) and leq_dplus(space, b, c) for c in members
            ):
                raise QmetError("family is not directed")
    if not all(leq_dplus(space, m, known_sup) for m in members):
        raise InvalidSup(f"{known_sup} does not dominate the family")
    for w in space.points:
        cap = _finite_max_ub_radius(space, members, w, Fraction(0))
        if cap is not None and not leq_dplus(space, known_sup, FormalBall(w, cap)):
            raise InvalidSup(f"{known_sup} is not least: ({w}, {cap}) escapes it")
    if shift == 0:
        return Verdict(HOLDS, justification="identity shift")
    for w in space.points:
        cap = _finite_max_ub_radius(space, members, w, shift)
        if cap is None:
            continue
        cand = FormalBall(w, cap)
        if not leq_dplus(space, target, cand):
            witness = StandardnessWitness(
                {"kind": "finite"},
                shift,
                cand,
                target,
                [(m.center, m.radius) for m in members],
            )
            return Verdict(REFUTED, justification="escaping upper bound", witness=witness)
    return Verdict(HOLDS, justification="all shifted upper bounds dominate the shifted sup")


# ---------------------------------------------------------------------------
# Order-law sweeps over ball grids


@dataclass
class OrderLawsReport:
    ball_count: int
    reflexive_ok: bool
    antisymmetric_ok: bool
    transitive_ok: bool
    standard_ok: bool
    failures: list

    @property
    def passed(self):
        return (
            self.reflexive_ok
            and self.antisymmetric_ok
            and self.transitive_ok
            and self.standard_ok
        )


def order_laws_report(
    space: Space, radii: Sequence[Fraction], shifts: Sequence[Fraction] = ()
) -> OrderLawsReport:
    """Exhaustively verify that the ball order is a partial order on the
    given radius grid and that it is invariant under uniform radius shifts."""
    balls = [FormalBall(p, as_fraction(r)) for p in space.points for r in radii]
    n = len(balls)
    rows = [0] * n
    for i, a in enumerate(balls):
        for j, b in enumerate(balls):
            if leq_dplus(space, a, b):
                rows[i] |= 1 << j
    failures = []
    reflexive_ok = all(rows[i] & (1 << i) for i in range(n))
    if not reflexive_ok:
        failures.append(("reflexivity", next(balls[i] for i in range(n) if not rows[i] & (1 << i))))
    antisymmetric_ok = True
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i] & (1 << j) and rows[j] & (1 << i) and balls[i] != balls[j]:
                antisymmetric_ok = False
                failures.append(("antisymmetry", (balls[i], balls[j])))
    transitive_ok = True
    for i in range(n):
        mask = rows[i]
        j = 0
        m = mask
        while m:
            if m & 1 and rows[j] & ~mask:
                transitive_ok = False
                failures.append(("transitivity", (balls[i], balls[j])))
            m >>= 1
            j += 1
    standard_ok = True
    for a in shifts:
        a = as_fraction(a)
        for i, b1 in enumerate(balls):
            for j, b2 in enumerate(balls):
                plain = bool(rows[i] & (1 << j))
                shifted = leq_dplus(
                    space,
                    FormalBall(b1.center, b1.radius + a),
                    FormalBall(b2.center, b2.radius + a),
                )
                if plain != shifted:
                    standard_ok = False
                    failures.append(("shift_invariance", (b1, b2, a)))
    return OrderLawsReport(
        n, reflexive_ok, antisymmetric_ok, transitive_ok, standard_ok, failures
    )


@dataclass
class RadiusLawReport:
    families_checked: int
    failures: list

    @property
    def passed(self):
        return not self.failures


def radius_law_report(
    space: Space,
    radii: Sequence[Fraction],
    sample_budget: int = 20_000,
    seed: int = 0,
) -> RadiusLawReport:
    """For sampled directed ball families whose least upper bound exists on
    the grid, the bound's radius must be the minimum member radius.

    Families are tents {a, b, c} with a and b below c, which are directed
    because c bounds every subset from inside.
    """
    balls = [FormalBall(p, as_fraction(r)) for p in space.points for r in radii]
    n = len(balls)
    above = [0] * n  # above[i] = bitmask of balls dominating ball i
    for i in range(n):
        for j in range(n):
            if leq_dplus(space, balls[i], balls[j]):
                above[i] |= 1 << j
    rng = random.Random(seed)
    families = []
    for k in range(n):
        below = [i for i in range(n) if above[i] & (1 << k)]
        for i in below:
            for j in below:
                families.append((i, j, k))
    if len(families) > sample_budget:
        families = [families[rng.randrange(len(families))] for _ in range(sample_budget)]
    failures = []
    for i, j, k in families:
        ub_mask = above[i] & above[j] & above[k]
        least = None
        m = ub_mask
        u = 0
        while m:
            if m & 1 and ub_mask & ~above[u] == 0:
                least = u
                break
            m >>= 1
            u += 1
        if least is None:
            continue
        min_radius = min(balls[i].radius, balls[j].radius, balls[k].radius)
        if balls[least].radius != min_radius:
            failures.append(
                ((balls[i], balls[j], balls[k]), balls[least])
            )
    return RadiusLawReport(len(families), failures)
