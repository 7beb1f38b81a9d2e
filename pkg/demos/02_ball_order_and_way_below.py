"""Formal balls: the order, the lifted distance, and three-valued way-below.

A ball (x, r) sits below (y, s) when d(x, y) <= r - s; shrinking radii move
up.  Way-below strengthens the order by a strict margin, and on some spaces
the two part ways: the checker answers holds (closed-form oracle), refuted
(with a replayable counterexample family), or unknown.
"""

from fractions import Fraction

from qmet import ball, dplus, leq_dplus, prec, way_below
from qmet.spaces import (
    RealGridSpace,
    SorgenfreyGridSpace,
    TailedSorgenfreySpace,
    parse_point_value,
)

rg = RealGridSpace([parse_point_value(s) for s in ["0", "1/2", "1", "3", "5", "inf"]])
print("(5,3) <= (3,1):", leq_dplus(rg, ball("5", 3), ball("3", 1)))
print("ball distance d+((5,1),(3,1)) =", dplus(rg, ball("5", 1), ball("3", 1)))
print("(5,4) strictly approximates (3,1):", prec(rg, ball("5", 4), ball("3", 1)))

# at the top point, strict approximation no longer implies way-below:
v = way_below(rg, ball("inf", 2), ball("inf", 1))
print("\n(inf,2) way below (inf,1)?", v.status)
print("witness family kind:", v.witness.kind)
print("first members:", [(c, str(r)) for c, r in v.witness.members[:4]])
print("its supremum", v.witness.sup, "dominates (inf,1), yet no member dominates (inf,2)")

# Sorgenfrey: way-below additionally needs the center to move strictly right
sg = SorgenfreyGridSpace([0, 1, 2, 3])
print("\nSorgenfrey (0,3) way below (1,1)?", way_below(sg, ball("0", 3), ball("1", 1)).status)
w = way_below(sg, ball("0", 3), ball("0", 1))
print("Sorgenfrey (0,3) way below (0,1)?", w.status, "via", w.witness.kind)
print("members approach 0 from the left:", [(c, str(r)) for c, r in w.witness.members[:3]])

# the tailed segment: way-below is not shift-invariant.  With a = b = c = 1
# and margin 2 the relation holds at radius pair (2, 0) but not at (3, 1).
grid = [Fraction(1) - Fraction(1, 2 ** (n + 1)) for n in range(9)] + [Fraction(1)]
ng = TailedSorgenfreySpace(1, 1, 1, grid)
shifted = way_below(ng, ball("-2", 3), ball("-1", 1), depth=8)
print("\ntailed segment (-2,3) way below (-1,1)?", shifted.status)
print("refuting family:", [(c, str(r)) for c, r in shifted.witness.members[:4]], "...")
base = way_below(ng, ball("-2", 2), ball("-1", 0), depth=8)
print("tailed segment (-2,2) way below (-1,0)?", base.status)
print("(the bounded refuter finds nothing; the claim is in fact true)")
