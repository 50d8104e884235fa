"""Realization plans: which rings have these monoids as dimension monoids.

Each congruence becomes a pullback along a free-cyclic leaf, each equality a
pullback along a free-diagonal leaf, and everything sits over a semisimple
ring with k simple factors. The plan is checked against the equations on a
box.
"""
from eqmonoid import Box, EqSystem, describe_plan, equal_on_box, evaluate_plan, plan_system
from eqmonoid.realization import plan_size

sys = EqSystem.build(2, congruences=[((1, 1), 2)], equalities=[((2, 0), (1, 1))])
plan = plan_system(sys, (1, 1))
print(describe_plan(plan))
print("\nnodes:", plan_size(plan))
res = equal_on_box(lambda x: evaluate_plan(plan, x), sys, Box(2, 5))
print("soundness", res.line())
