"""Center points and the two-part Smyth-completeness probe.

A point is a center point when the approximation cost v(x, .) collapses to
the plain distance d(x, .).  Having every point central is one half of
Smyth completeness; the other half is the absence of any gap between strict
approximation and way-below on balls.
"""

from qmet import center_point_check, smyth_probe, v_relation
from qmet.spaces import (
    FiniteTableSpace,
    RealGridSpace,
    SorgenfreyGridSpace,
    parse_point_value,
)

rg = RealGridSpace([parse_point_value(s) for s in ["0", "1/2", "1", "inf"]])
print("one-way line with top point:")
for x in rg.points:
    print(f"  v({x}, 1) = {v_relation(rg, x, '1')},  d({x}, 1) = {rg.dist(x, '1')},"
          f"  center = {center_point_check(rg, x)}")

report = smyth_probe(rg)
print("non-centers:", report.non_center_points)
print("sampled gap pairs all start at inf:",
      all(a.center == "inf" for a, _ in report.gap_pairs))

sg = SorgenfreyGridSpace([0, 1, 2, 3])
print("\nSorgenfrey grid: v(x, x) =", v_relation(sg, "0", "0"), "so no point is central")
print("non-centers:", smyth_probe(sg).non_center_points)

line = FiniteTableSpace.metric_line(range(5))
print("\nmetric line: probe consistent with Smyth completeness:",
      smyth_probe(line).consistent)
