"""Largest Lipschitz maps below a function, by exact inf-convolution.

The envelope at slope alpha replaces f by the largest alpha-Lipschitz map
below it.  For scaled indicator functions the answer has a closed form,
min(r, alpha * distance to the complement); as alpha grows the envelopes
climb back up to f, and past the critical slope they reproduce f exactly.
"""

from fractions import Fraction

from qmet import (
    LscFunction,
    OpenSet,
    dist_to_complement,
    envelope,
    lipschitz_check,
    lipschitz_threshold,
    thinning,
)
from qmet.spaces import FiniteTableSpace

line = FiniteTableSpace.metric_line(range(8))
u = OpenSet(line, ["0", "1"])
print("d(x, complement of {0,1}):", [str(dist_to_complement(line, x, u)) for x in line.points])
print("thinning by 1:", list(thinning(line, u, 1)))

f = LscFunction.scaled_indicator(line, u, 4)
print("\nf =", [str(f(x)) for x in line.points])
for alpha in (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(10)):
    g = envelope(line, f, alpha)
    print(f"envelope at slope {alpha}:", [str(g(x)) for x in line.points])

# every envelope really is Lipschitz at its slope, checked two ways
g = envelope(line, f, 1)
report = lipschitz_check(line, g, 1)
print("\nslope-1 envelope passes the pairwise check:", report.passed)
print("and its ball lift is monotone:", report.lift_monotone)

h = LscFunction(line, {p: Fraction(int(p) ** 2, 4) for p in line.points})
star = lipschitz_threshold(line, h)
print("\nsteepest rise of x^2/4 on the grid:", star)
print("envelope at the threshold recovers it:", envelope(line, h, star) == h)
print("below the threshold it does not:", envelope(line, h, star - Fraction(1, 8)) == h)
