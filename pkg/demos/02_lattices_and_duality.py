"""Full affine monoids: a lattice cut down to the nonnegative orthant.

A = L ∩ N0^k is described by a system of equations and congruences, and by
the set of supports its elements reach. Whether a support is reached is a
linear programming question; the two dual formulations must agree.
"""
from eqmonoid import FullAffineMonoid, fas_system, orthogonal_has_positive, positive_kernel_trivial

for gens, k in [([[1, 1], [0, 2]], 2), ([[1, -1]], 2), ([[2, 0, 0], [0, 3, 0], [1, 1, 1]], 3)]:
    A = FullAffineMonoid.from_generators(gens, k)
    print(f"generators {gens}")
    print(f"  normalised lattice rows: {[list(r) for r in A.lattice.rows]}")
    print(f"  defining system: {str(A.defining_system) or '(none)'}".replace("\n", "; "))
    print(f"  supports: {sorted(sorted(i + 1 for i in s) for s in A.support_set)}")
    print(f"  A + inf*A: {str(fas_system(A)) or '(none)'}".replace("\n", "; "))
    print()

# Alternative: span(V) meets N0^d only in 0 exactly when the
# orthogonal complement of V contains a strictly positive vector.
for V, d in [([[1, 1]], 2), ([[1, -1]], 2), ([[1, -1, 0], [0, 1, -1]], 3)]:
    a, b = positive_kernel_trivial(V, d), orthogonal_has_positive(V, d)
    print(f"V = {V}: span meets N0^d only in 0: {a}; positive vector orthogonal to V: {b}")
