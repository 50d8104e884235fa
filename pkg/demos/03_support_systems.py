"""From equations to support systems and back.

A monoid of solutions is determined by which coordinates may be infinite
and, for each such set I, which finite parts are allowed. Going back is done
by hiding: forgetting the coordinates in I by adding the unit direction.
"""
from eqmonoid import Box, EqSystem, eq_to_ss, equal_on_box, hide, ss_to_eq, validate

m2 = EqSystem.build(2, equalities=[((2, 1), (1, 2))])
ss = eq_to_ss(m2, (1, 1))
print("support system of 2x + y = x + 2y:")
for line in ss.describe():
    print(" ", line)
print("violations:", validate(ss) or "none")

back = ss_to_eq(ss)
print("\nreconstructed system:")
print(" ", str(back).replace("\n", "\n  "))
print("agrees on", Box(2, 5).describe() + ":", bool(equal_on_box(back, m2, Box(2, 5))))

# Hiding the first coordinate of x = y gives 2x = x + y.
xy = EqSystem.build(2, equalities=[((1, 0), (0, 1))])
print("\nhide x = y on {1}:", hide(xy, (1, 1), {0}, EqSystem(1)))
