"""Finite posets and abstract bases.

Covers the order-theoretic core: way-below on finite posets, ideal and
rounded-ideal completions, the quasi-ideal layering check, the strong Choquet
game on the up-set topology, and Hasse-diagram export.

Rows of the order relation are stored as integer bitmasks, which keeps the
exhaustive validations (transitivity, interpolation, directedness) cheap
enough to run on every construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .errors import (
    IllegalMove,
    NotAPartialOrder,
    NotAnAbstractBasis,
    TooLarge,
    UnknownElement,
)


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def transitive_closure(rows: Sequence[int]) -> list[int]:
    """Warshall closure on bitmask rows (rows[i] = successors of i)."""
    out = list(rows)
    n = len(out)
    for k in range(n):
        kbit = 1 << k
        krow = out[k]
        for i in range(n):
            if out[i] & kbit:
                out[i] |= krow
    return out


class FinitePoset:
    """An immutable finite partial order, validated on construction."""

    def __init__(self, elements: Sequence[str], leq: Sequence[Sequence[bool]]):
        self._elements = tuple(elements)
        if len(set(self._elements)) != len(self._elements):
            raise NotAPartialOrder("duplicate element names")
        n = len(self._elements)
        if len(leq) != n or any(len(row) != n for row in leq):
            raise NotAPartialOrder("relation matrix shape mismatch")
        self._up = [_mask_of(j for j in range(n) if leq[i][j]) for i in range(n)]
        self._index = {e: i for i, e in enumerate(self._elements)}
        self._validate()

    def _validate(self):
        n = len(self._elements)
        for i in range(n):
            if not self._up[i] & (1 << i):
                raise NotAPartialOrder(f"not reflexive at {self._elements[i]}")
        for i in range(n):
            for j in _bits(self._up[i]):
                if i != j and self._up[j] & (1 << i):
                    raise NotAPartialOrder(
                        f"not antisymmetric on ({self._elements[i]}, {self._elements[j]})"
                    )
                if self._up[j] & ~self._up[i]:
                    raise NotAPartialOrder(
                        f"not transitive through ({self._elements[i]}, {self._elements[j]})"
                    )

    @classmethod
    def from_relation(
        cls, elements: Sequence[str], pairs: Iterable[tuple[str, str]]
    ) -> "FinitePoset":
        """Build from generating pairs, closing reflexively and transitively."""
        elements = tuple(elements)
        index = {e: i for i, e in enumerate(elements)}
        rows = [1 << i for i in range(len(elements))]
        for a, b in pairs:
            rows[index[a]] |= 1 << index[b]
        rows = transitive_closure(rows)
        n = len(elements)
        matrix = [[bool(rows[i] & (1 << j)) for j in range(n)] for i in range(n)]
        return cls(elements, matrix)

    @classmethod
    def chain(cls, elements: Sequence[str]) -> "FinitePoset":
        pairs = [(elements[i], elements[i + 1]) for i in range(len(elements) - 1)]
        return cls.from_relation(elements, pairs)

    @classmethod
    def antichain(cls, elements: Sequence[str]) -> "FinitePoset":
        return cls.from_relation(elements, [])

    def __len__(self):
        return len(self._elements)

    @property
    def elements(self) -> tuple[str, ...]:
        return self._elements

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElement(name) from None

    def leq(self, a: str, b: str) -> bool:
        return bool(self._up[self.index(a)] & (1 << self.index(b)))

    def leq_by_index(self, i: int, j: int) -> bool:
        return bool(self._up[i] & (1 << j))

    def up_mask(self, i: int) -> int:
        return self._up[i]

    def up_set(self, a: str) -> frozenset:
        return frozenset(self._elements[j] for j in _bits(self._up[self.index(a)]))

    def down_set(self, a: str) -> frozenset:
        j = self.index(a)
        return frozenset(e for i, e in enumerate(self._elements) if self._up[i] & (1 << j))

    def covers(self) -> list[tuple[str, str]]:
        """Hasse edges: pairs a < b with nothing strictly between."""
        n = len(self._elements)
        out = []
        for i in range(n):
            strict = self._up[i] & ~(1 << i)
            for j in _bits(strict):
                between = strict & self._up_strict_down(j)
                if not between:
                    out.append((self._elements[i], self._elements[j]))
        return out

    def _up_strict_down(self, j: int) -> int:
        # mask of k with k < j
        return _mask_of(
            k for k in range(len(self._elements)) if k != j and self._up[k] & (1 << j)
        )

    def is_up_closed(self, subset: Iterable[str]) -> bool:
        mask = _mask_of(self.index(a) for a in subset)
        for i in _bits(mask):
            if self._up[i] & ~mask:
                return False
        return True

    def up_closed_subsets(self) -> list[frozenset]:
        """All up-sets (the opens of the Scott = up-set topology), canonical order."""
        n = len(self._elements)
        out = []
        for mask in range(1 << n):
            ok = True
            for i in _bits(mask):
                if self._up[i] & ~mask:
                    ok = False
                    break
            if ok:
                out.append(frozenset(self._elements[i] for i in _bits(mask)))
        return out

    def maximal_elements(self) -> list[str]:
        return [
            e
            for i, e in enumerate(self._elements)
            if self._up[i] == (1 << i)
        ]

    def to_json(self) -> dict:
        n = len(self._elements)
        return {
            "kind": "poset",
            "elements": list(self._elements),
            "leq": [[bool(self._up[i] & (1 << j)) for j in range(n)] for i in range(n)],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "FinitePoset":
        if obj.get("kind") != "poset":
            raise NotAPartialOrder(f"unexpected kind {obj.get('kind')!r}")
        return cls(obj["elements"], obj["leq"])

    def __eq__(self, other):
        return (
            isinstance(other, FinitePoset)
            and self._elements == other._elements
            and self._up == other._up
        )

    def __repr__(self):
        return f"FinitePoset({list(self._elements)!r}, covers={self.covers()!r})"


def way_below_finite(p: FinitePoset, a: str, b: str) -> bool:
    """Way-below on a finite poset coincides with the order itself."""
    return p.leq(a, b)


def way_below_by_enumeration(p: FinitePoset, a: str, b: str) -> bool:
    """Independent check straight from the definition.

    a is way below b iff every directed subset whose supremum dominates b
    contains an element above a.  Finite directed subsets have their maximum
    as supremum, so the enumeration is complete.  Exponential; intended for
    posets of at most ~8 elements.
    """
    n = len(p)
    ia, ib = p.index(a), p.index(b)
    for mask in range(1, 1 << n):
        members = list(_bits(mask))
        directed = True
        for i in members:
            for j in members:
                if not any(
                    p.leq_by_index(i, k) and p.leq_by_index(j, k) for k in members
                ):
                    directed = False
                    break
            if not directed:
                break
        if not directed:
            continue
        tops = [k for k in members if all(p.leq_by_index(i, k) for i in members)]
        if not tops:
            continue
        sup = tops[0]
        if p.leq_by_index(ib, sup) and not any(
            p.leq_by_index(ia, k) for k in members
        ):
            return False
    return True


# ---------------------------------------------------------------------------
# Ideal completion


@dataclass
class IdealCompletion:
    poset: FinitePoset
    ideals: list[frozenset]
    embedding: dict  # element -> name of its principal ideal


def _set_name(p_elements: tuple[str, ...], subset: frozenset) -> str:
    order = {e: i for i, e in enumerate(p_elements)}
    return "{" + ",".join(sorted(subset, key=order.__getitem__)) + "}"


def ideal_completion(p: FinitePoset, bound: int = 12) -> IdealCompletion:
    """Poset of all ideals (nonempty directed down-sets) ordered by inclusion."""
    if len(p) > bound:
        raise TooLarge(f"poset has {len(p)} elements, bound is {bound}")
    n = len(p)
    down = [
        _mask_of(j for j in range(n) if p.leq_by_index(j, i)) for i in range(n)
    ]
    ideals = []
    for mask in range(1, 1 << n):
        members = list(_bits(mask))
        if any(down[i] & ~mask for i in members):
            continue
        directed = all(
            any(p.leq_by_index(i, k) and p.leq_by_index(j, k) for k in members)
            for i in members
            for j in members
        )
        if not directed:
            continue
        ideals.append(frozenset(p.elements[i] for i in members))
    ideals.sort(key=lambda s: (len(s), sorted(p.index(e) for e in s)))
    names = [_set_name(p.elements, s) for s in ideals]
    matrix = [[a <= b for b in ideals] for a in ideals]
    completion = FinitePoset(names, matrix)
    embedding = {}
    for e in p.elements:
        principal = p.down_set(e)
        embedding[e] = _set_name(p.elements, principal)
    return IdealCompletion(completion, ideals, embedding)


# ---------------------------------------------------------------------------
# Abstract bases and rounded ideals


class AbstractBasis:
    """Elements with a transitive, interpolative strict-style relation.

    Interpolation is required for nonempty finite subsets: whenever every
    member of a nonempty F lies strictly below y, some z interpolates with
    F below z below y.  An everywhere-empty relation is therefore a valid
    basis (vacuously), and its completion has no rounded ideals at all.
    """

    def __init__(self, elements: Sequence[str], prec: Sequence[Sequence[bool]]):
        self._elements = tuple(elements)
        if len(set(self._elements)) != len(self._elements):
            raise NotAnAbstractBasis("duplicate element names", None)
        n = len(self._elements)
        if len(prec) != n or any(len(row) != n for row in prec):
            raise NotAnAbstractBasis("relation matrix shape mismatch", None)
        self._below = [
            _mask_of(i for i in range(n) if prec[i][j]) for j in range(n)
        ]  # _below[j] = {i : i prec j}
        self._above = [
            _mask_of(j for j in range(n) if prec[i][j]) for i in range(n)
        ]
        self._index = {e: i for i, e in enumerate(self._elements)}
        self._validate()

    def _validate(self):
        n = len(self._elements)
        for i in range(n):
            for j in _bits(self._above[i]):
                if self._above[j] & ~self._above[i]:
                    k = next(_bits(self._above[j] & ~self._above[i]))
                    raise NotAnAbstractBasis(
                        "transitivity",
                        (self._elements[i], self._elements[j], self._elements[k]),
                    )
        # Interpolation collapses to its hardest instance F = (everything
        # strictly below y): a single z below y with F below z settles all F.
        for j in range(n):
            below = self._below[j]
            if not below:
                continue
            if not any(below & ~self._below[z] == 0 for z in _bits(below)):
                witness = frozenset(self._elements[i] for i in _bits(below))
                raise NotAnAbstractBasis(
                    "interpolation", (witness, self._elements[j])
                )

    @property
    def elements(self) -> tuple[str, ...]:
        return self._elements

    def __len__(self):
        return len(self._elements)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElement(name) from None

    def prec(self, a: str, b: str) -> bool:
        return bool(self._above[self.index(a)] & (1 << self.index(b)))

    def strictly_below(self, b: str) -> frozenset:
        return frozenset(
            self._elements[i] for i in _bits(self._below[self.index(b)])
        )

    def to_json(self) -> dict:
        n = len(self._elements)
        return {
            "kind": "basis",
            "elements": list(self._elements),
            "prec": [
                [bool(self._above[i] & (1 << j)) for j in range(n)] for i in range(n)
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "AbstractBasis":
        if obj.get("kind") != "basis":
            raise NotAnAbstractBasis(f"unexpected kind {obj.get('kind')!r}", None)
        return cls(obj["elements"], obj["prec"])


@dataclass
class RoundedIdealCompletion:
    poset: FinitePoset
    ideals: list[frozenset]
    below_map: dict  # element -> frozenset of elements strictly below it
    image: dict  # element -> completion name of its below-set, when it is an ideal


def rounded_ideal_completion(basis: AbstractBasis, bound: int = 10) -> RoundedIdealCompletion:
    """All rounded ideals by subset enumeration, ordered by inclusion.

    A rounded ideal is a nonempty subset D that is downwards closed for the
    strict relation and directed: every nonempty finite subset of D lies
    strictly below some member of D.  On finite carriers directedness forces
    a member m of D with all of D strictly below m (in particular m below m).
    """
    if len(basis) > bound:
        raise TooLarge(f"basis has {len(basis)} elements, bound is {bound}")
    n = len(basis)
    ideals = []
    for mask in range(1, 1 << n):
        members = list(_bits(mask))
        if any(basis._below[i] & ~mask for i in members):
            continue
        directed = True
        sub = mask
        # quantify over all nonempty finite subsets literally; this is the
        # independent route the generator view is checked against
        while sub:
            if not any(sub & ~basis._below[z] == 0 for z in members):
                directed = False
                break
            sub = (sub - 1) & mask
        if not directed:
            continue
        ideals.append(frozenset(basis.elements[i] for i in members))
    ideals.sort(key=lambda s: (len(s), sorted(basis.index(e) for e in s)))
    names = [_set_name(basis.elements, s) for s in ideals]
    matrix = [[a <= b for b in ideals] for a in ideals]
    completion = FinitePoset(names, matrix)
    below_map = {e: basis.strictly_below(e) for e in basis.elements}
    ideal_names = {s: _set_name(basis.elements, s) for s in ideals}
    image = {
        e: ideal_names.get(below_map[e])
        for e in basis.elements
    }
    return RoundedIdealCompletion(completion, ideals, below_map, image)


def rounded_ideals_by_generators(basis: AbstractBasis) -> list[frozenset]:
    """Generator-closure route: the rounded ideals of a finite basis are
    exactly the below-sets of self-related elements."""
    out = set()
    for e in basis.elements:
        if basis.prec(e, e):
            out.add(basis.strictly_below(e))
    return sorted(out, key=lambda s: (len(s), sorted(basis.index(x) for x in s)))


# ---------------------------------------------------------------------------
# Quasi-ideal layering


@dataclass
class QuasiIdealReport:
    passed: bool
    violations: list  # (non-finite element, finite element above it)


def quasi_ideal_check(p: FinitePoset, finite_elems: Iterable[str]) -> QuasiIdealReport:
    """Everything below a finite element must itself be finite."""
    fin = frozenset(finite_elems)
    for name in fin:
        p.index(name)
    violations = []
    for x in p.elements:
        if x in fin:
            continue
        for f in p.elements:
            if f in fin and p.leq(x, f):
                violations.append((x, f))
    return QuasiIdealReport(not violations, violations)


# ---------------------------------------------------------------------------
# Strong Choquet game on the up-set topology


@dataclass
class PlayRound:
    x: str
    v: frozenset
    u: frozenset
    y: str


@dataclass
class PlayTranscript:
    poset: FinitePoset
    rounds: list

    def alpha_won(self) -> bool:
        return bool(self.intersection_u())

    def intersection_u(self) -> frozenset:
        out = frozenset(self.poset.elements)
        for r in self.rounds:
            out &= r.u
        return out

    def intersection_v(self) -> frozenset:
        out = frozenset(self.poset.elements)
        for r in self.rounds:
            out &= r.v
        return out

    def intersections_equal(self) -> bool:
        """The two limit intersections agree.

        A finished transcript ends on the first player's open, so the plain
        intersection of the challenger's opens is still one half-step behind.
        Any continuation is trapped inside the final reply, which makes the
        limit value of both intersections equal to the final reply's trace.
        """
        if not self.rounds:
            return True
        return self.intersection_u() == self.intersection_v() & self.rounds[-1].u

    def converged(self) -> bool:
        """Whether the challenger's opens shrank to the principal filter of
        the final reply point."""
        if not self.rounds:
            return False
        last = self.rounds[-1]
        return last.v == self.poset.up_set(last.y)


def alpha_reply(p: FinitePoset, x: str, v: frozenset) -> str:
    """Reply point: minimal below-x point inside v, ties broken by element order."""
    candidates = [y for y in p.elements if y in v and p.leq(y, x)]
    if not candidates:
        raise IllegalMove(f"{x} has no approximant inside {sorted(v)}")
    minimal = [
        y
        for y in candidates
        if not any(z != y and p.leq(z, y) for z in candidates)
    ]
    return minimal[0]


def legal_beta_moves(p: FinitePoset, inside: frozenset) -> list[tuple[str, frozenset]]:
    """All legal challenger moves (x, V) with V a nonempty open inside the
    current open, in canonical order."""
    opens = [
        v
        for v in p.up_closed_subsets()
        if v and v <= inside
    ]
    opens.sort(key=lambda s: sorted(p.index(e) for e in s))
    moves = []
    for v in opens:
        for x in sorted(v, key=p.index):
            moves.append((x, v))
    return moves


def play(p: FinitePoset, moves: Sequence[tuple[str, Iterable[str]]]) -> PlayTranscript:
    """Run a full play from explicit challenger moves, validating legality."""
    if not len(p):
        raise IllegalMove("empty poset has no nonempty opens")
    inside = frozenset(p.elements)
    rounds = []
    for x, v in moves:
        v = frozenset(v)
        if not v or not v <= inside:
            raise IllegalMove(f"open {sorted(v)} escapes {sorted(inside)}")
        if not p.is_up_closed(v):
            raise IllegalMove(f"{sorted(v)} is not open (not up-closed)")
        if x not in v:
            raise IllegalMove(f"point {x} outside chosen open {sorted(v)}")
        y = alpha_reply(p, x, v)
        u = p.up_set(y)
        rounds.append(PlayRound(x, v, u, y))
        inside = u
    return PlayTranscript(p, rounds)


def choquet_play(
    p: FinitePoset,
    beta: "str | Sequence | Callable" = "seeded",
    depth: int = 4,
    seed: int = 0,
) -> PlayTranscript:
    """Play to the given depth against a seeded or scripted challenger."""
    if isinstance(beta, (list, tuple)):
        return play(p, beta)
    rng = random.Random(seed)
    inside = frozenset(p.elements)
    moves = []
    for turn in range(depth):
        legal = legal_beta_moves(p, inside)
        if not legal:
            break
        if callable(beta):
            move = beta(turn, inside)
        else:
            move = legal[rng.randrange(len(legal))]
        moves.append(move)
        y = alpha_reply(p, move[0], frozenset(move[1]))
        inside = p.up_set(y)
    return play(p, moves)


@dataclass
class ChoquetSweep:
    depth: int
    total_plays: int
    all_won: bool
    invariants_ok: bool
    states_seen: int


def verify_all_plays(p: FinitePoset, depth: int = 4) -> ChoquetSweep:
    """Exhaustively verify every play to the given depth.

    Plays are walked over the state graph (a state is the current reply
    open), with continuations shared between histories that reach the same
    state; the per-round invariants are checked on every edge, so the sweep
    covers exactly the transcripts of all challenger strategies.
    """
    if not len(p):
        raise IllegalMove("empty poset has no nonempty opens")
    edge_cache: dict[frozenset, list] = {}
    count_cache: dict[tuple, int] = {}
    all_won = True
    invariants_ok = True

    def edges(state: frozenset):
        nonlocal all_won, invariants_ok
        if state not in edge_cache:
            out = []
            for x, v in legal_beta_moves(p, state):
                y = alpha_reply(p, x, v)
                u = p.up_set(y)
                if not u:
                    all_won = False
                if not (x in u and u <= v):
                    invariants_ok = False
                out.append((x, v, u))
            edge_cache[state] = out
        return edge_cache[state]

    def count(state: frozenset, remaining: int) -> int:
        if remaining == 0:
            return 1
        key = (state, remaining)
        if key not in count_cache:
            count_cache[key] = sum(count(u, remaining - 1) for _, _, u in edges(state))
        return count_cache[key]

    total = count(frozenset(p.elements), depth)
    return ChoquetSweep(depth, total, all_won, invariants_ok, len(edge_cache))


# ---------------------------------------------------------------------------
# DOT export


def export_dot(p: FinitePoset, node_attrs: Optional[Callable[[str], str]] = None) -> str:
    """DOT digraph of the Hasse diagram, nodes in element order."""
    if not len(p):
        return "digraph { }"
    lines = ["digraph {"]
    for e in p.elements:
        attr = node_attrs(e) if node_attrs else ""
        suffix = f" [{attr}]" if attr else ""
        lines.append(f'  "{e}"{suffix};')
    for a, b in sorted(p.covers(), key=lambda ab: (p.index(ab[0]), p.index(ab[1]))):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Seeded generators (used by tests, demos and sweeps)


def random_poset(n: int, seed: int, density: float = 0.4) -> FinitePoset:
    """A random n-element poset, deterministic in the seed."""
    rng = random.Random(seed)
    names = [f"e{i}" for i in range(n)]
    order = list(range(n))
    rng.shuffle(order)
    pairs = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                pairs.append((names[order[a]], names[order[b]]))
    return FinitePoset.from_relation(names, pairs)


def random_abstract_basis(n: int, seed: int) -> AbstractBasis:
    """A random valid abstract basis: a random poset with self-relatedness
    stripped on a random subset, retried until validation passes."""
    for attempt in range(1000):
        rng = random.Random(seed * 1009 + attempt)
        p = random_poset(n, seed * 31 + attempt)
        strip = {e for e in p.elements if rng.random() < 0.5}
        matrix = [
            [
                p.leq(a, b) and not (a == b and a in strip)
                for b in p.elements
            ]
            for a in p.elements
        ]
        try:
            return AbstractBasis(p.elements, matrix)
        except NotAnAbstractBasis:
            continue
    raise NotAnAbstractBasis("could not find a valid basis", None)
