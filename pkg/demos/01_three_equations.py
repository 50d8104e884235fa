"""Three equations in two variables, and the monoids they cut out.

Over N0 all three equations x = y, 2x = x + y and 2x + y = x + 2y have the
same solutions, the diagonal. Allowing inf separates them: inf absorbs
anything it is added to, so each equation accepts a different set of
infinite patterns.
"""
from eqmonoid import INF, Box, EqSystem, enumerate_box, format_vector, infinite_support_patterns

SYSTEMS = {
    "x = y": EqSystem.build(2, equalities=[((1, 0), (0, 1))]),
    "2x = x + y": EqSystem.build(2, equalities=[((2, 0), (1, 1))]),
    "2x + y = x + 2y": EqSystem.build(2, equalities=[((2, 1), (1, 2))]),
}

box = Box(2, 3)
for name, sys in SYSTEMS.items():
    sols = enumerate_box(sys, box)
    finite = [x for x in sols if INF not in x]
    infinite = [format_vector(x) for x in sols if INF in x]
    print(f"{name}")
    print(f"  finite solutions on {box.describe()}: {finite}")
    print(f"  solutions with inf: {', '.join(infinite)}")
    patterns = sorted(sorted(i + 1 for i in s) for s in infinite_support_patterns(sys))
    print(f"  infinite supports: {patterns}")
    print()

# The three monoids are nested, and each step adds a family of patterns.
sets = [set(enumerate_box(s, box)) for s in SYSTEMS.values()]
print("nested:", sets[0] < sets[1] < sets[2])
