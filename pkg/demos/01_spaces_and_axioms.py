"""Tour of the space gallery and the exact axiom checker.

Each generator space is a finite window onto an infinite ambient space;
distances are exact rationals (or inf), so every verdict below is decisive.
"""

from fractions import Fraction

from qmet import (
    FiniteTableSpace,
    RealGridSpace,
    SkewedIntervalSpace,
    SorgenfreyGridSpace,
    check_axioms,
    symmetrize,
)
from qmet.spaces import parse_point_value

# the one-way real line: going down costs the difference, going up is free
rg = RealGridSpace([parse_point_value(s) for s in ["0", "1/2", "1", "3", "inf"]])
print("one-way line d(3, 1/2) =", rg.dist("3", "1/2"), "   d(1/2, 3) =", rg.dist("1/2", "3"))
print("the top point sees others at distance", rg.dist("inf", "1"))

# the Sorgenfrey line: moving left is impossible
sg = SorgenfreyGridSpace([0, 1, 2, 3])
print("Sorgenfrey d(1, 3) =", sg.dist("1", "3"), "   d(3, 1) =", sg.dist("3", "1"))

# specialization: x below y when d(x, y) = 0
print("0 below 1 on the line:", rg.specialization_leq("0", "1"))
print("0 below 1 on Sorgenfrey:", sg.specialization_leq("0", "1"))

# every gallery space passes the axioms, exhaustively
for space in (rg, sg, FiniteTableSpace.metric_line(range(5))):
    report = check_axioms(space)
    print(f"{space.kind}: axioms pass = {report.passed} ({report.mode})")

# the skewed interval needs its origin constant to be at least the diameter;
# with a = 1/2 the checker pinpoints the exact failing triple
bad = SkewedIntervalSpace(Fraction(1, 2), [0, Fraction(1, 10), 1])
report = check_axioms(bad)
v = report.violations[0]
print("skewed interval a=1/2:", v.axiom, "at", v.witness, "because", v.detail)

# symmetrizing Sorgenfrey leaves only the infinite distances off the diagonal
sym = symmetrize(sg)
print("symmetrized Sorgenfrey d(1, 3) =", sym.dist("1", "3"))
