"""Shift invariance of directed suprema, and how it can fail.

Inflating every radius of a directed ball family by the same shift should
move its least upper bound by exactly that shift.  On the skewed interval it
does not: the shifted family acquires upper bounds that escape the shifted
supremum, and the probe returns one of them as a witness.
"""

from fractions import Fraction

from qmet import GeometricBallFamily, ball, standardness_probe
from qmet.balls import leq_dplus
from qmet.posets import FinitePoset
from qmet.spaces import PosetSpace, SkewedIntervalSpace

space = SkewedIntervalSpace(1, [0, Fraction(1, 3), 1])
family = GeometricBallFamily(space, 0)
print("family members:", [(str(c), str(r)) for c, r in family.truncation(3)], "...")
print("its sole upper bound is (0, 0); after shifting radii by 1 the upper")
print("bounds become every ball (x, r) with x + r <= 1")

verdict = standardness_probe(space, family, ball("0", 0), 1)
print("\nprobe verdict:", verdict.status)
w = verdict.witness
print("escaping upper bound:", w.candidate, " expected bound:", w.target)
print(
    "check: d(0, 1/3) = 1 exceeds 1 - 2/3, so",
    w.target,
    "<=",
    w.candidate,
    "is",
    leq_dplus(space, w.target, w.candidate),
)

# posets, by contrast, are standard: shifts never disturb finite suprema
chain = PosetSpace(FinitePoset.chain(["a", "b", "c"]))
fam = [ball("a", 1), ball("a", Fraction(1, 2))]
print("\nposet space probe:", standardness_probe(chain, fam, ball("a", Fraction(1, 2)), 1).status)
