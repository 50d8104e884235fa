"""Monoids that are not of this kind, and why.

{(x, y) : x >= y} is not full: (1, 0) + (0, 1) lies in it while (0, 1) does
not. The three-variable example shows two members with no divisibility
between them inside the monoid.
"""
from eqmonoid import Box, builtin, enumerate_box, fullness_check
from eqmonoid.fixtures import all_fixtures

gs = builtin("gs-right")
print(gs.name, "-", gs.citation)
box = Box(2, 3)
print(" ", fullness_check(enumerate_box(gs, box), box).line())

nd = builtin("nodiv-right")
print("\n" + nd.name, "-", nd.citation)
b, c = (1, 0, 0), (1, 1, 0)
print(f"  {b} in M: {b in nd}, {c} in M: {c in nd}, difference (0, 1, 0) in M: {(0, 1, 0) in nd}")

print("\nall builtin fixtures:")
for fx in all_fixtures():
    print(f"  {fx.name}: k={fx.k}, {'full' if fx.full else 'not full'}, {fx.definability}")
