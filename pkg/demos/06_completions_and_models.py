"""Completions, the strong Choquet game, and two-layer ball models."""

from qmet import (
    AbstractBasis,
    FinitePoset,
    build_model,
    ideal_completion,
    limit_layer,
    quasi_ideal_model_check,
    rounded_ideal_completion,
    verify_all_plays,
)
from qmet.qideal import model_to_dot
from qmet.spaces import PosetSpace, RealGridSpace, parse_point_value

# ideal completion: on finite posets every ideal is principal
chain = FinitePoset.chain(["a", "b", "c"])
comp = ideal_completion(chain)
print("ideals of a 3-chain:", [sorted(s) for s in comp.ideals])
print("embedding:", comp.embedding)

# rounded ideals need a self-related element to dominate them
basis = AbstractBasis(["a", "b"], [[True, True], [False, False]])
rcomp = rounded_ideal_completion(basis)
print("\nrounded ideals of (a<a, a<b):", [sorted(s) for s in rcomp.ideals])
print("strictly-below image:", rcomp.image)

# the strong Choquet game: the reply strategy picks a minimal approximant
# inside the challenger's open and wins every play on a finite poset
diamond = FinitePoset.from_relation(
    ["bot", "l", "r", "top"],
    [("bot", "l"), ("bot", "r"), ("l", "top"), ("r", "top")],
)
sweep = verify_all_plays(diamond, depth=4)
print(f"\nChoquet on the diamond: {sweep.total_plays} plays, all won: {sweep.all_won}")

# the two-layer model: positive dyadic balls below, limit copies above
space = PosetSpace(FinitePoset.chain(["bot", "top"]))
model = build_model(space, depth=3)
report = quasi_ideal_model_check(model)
print("\nmodel over the 2-chain: checks pass =", report.passed)
print("longest strict chain of finite elements:", report.longest_finite_chain,
      "within bound", report.chain_bound)
print("limit layer order:", limit_layer(model).covers())

rg = RealGridSpace([parse_point_value(s) for s in ["0", "1", "2"]])
m2 = build_model(rg, depth=5)
print("\nmodel over the grid {0,1,2}: checks pass =", quasi_ideal_model_check(m2).passed)

print("\nHasse diagram of the 2-chain model (limit nodes boxed):")
print(model_to_dot(model))
