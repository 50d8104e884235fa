"""Full affine submonoids A = L ∩ N0^k, represented by integer lattices.

A :class:`FullAffineMonoid` always stores the group generated by A itself
(not just some lattice L with the same nonnegative points). With that
normalisation two monoids are equal exactly when their canonical lattice
bases are equal, and containment of monoids is containment of lattices.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import prod
from typing import Iterable, List, Optional, Sequence

from .eqsystem import Congruence, EqSystem, Equality, lift
from .exactlp import feasible_point, fm_feasible, simplex_feasible
from .intlinalg import (
    hnf,
    integer_kernel,
    lattice_coordinates,
    left_kernel,
    matmul,
    orthogonal_complement,
    primitive,
    rank,
    smith_normal_form,
    vec_dot,
)


class LatticeBasis:
    """A subgroup of Z^k in canonical (row Hermite) form."""

    __slots__ = ("k", "rows")

    def __init__(self, k: int, rows: Sequence[Sequence[int]] = ()):
        self.k = k
        for r in rows:
            if len(r) != k:
                raise ValueError(f"generator {list(r)} does not have length {k}")
        self.rows = tuple(tuple(r) for r in hnf(rows, k))

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        return isinstance(other, LatticeBasis) and self.k == other.k and self.rows == other.rows

    def __hash__(self):
        return hash((self.k, self.rows))

    def __repr__(self):
        return f"LatticeBasis(k={self.k}, rows={[list(r) for r in self.rows]})"

    def __contains__(self, v) -> bool:
        return lattice_coordinates(self.rows, list(v)) is not None

    def contains_lattice(self, other: "LatticeBasis") -> bool:
        return all(r in self for r in other.rows)

    def project(self, coords: Sequence[int]) -> "LatticeBasis":
        """Image under the coordinate projection onto ``coords``."""
        return LatticeBasis(len(coords), [[r[c] for c in coords] for r in self.rows])

    def restrict_to_coordinates(self, coords: Iterable[int]) -> "LatticeBasis":
        """The sublattice of vectors vanishing outside ``coords``."""
        keep = set(coords)
        outside = [j for j in range(self.k) if j not in keep]
        if not outside or not self.rows:
            return self
        sub = [[r[j] for j in outside] for r in self.rows]
        ker = left_kernel(sub, len(outside))
        return LatticeBasis(self.k, matmul(ker, [list(r) for r in self.rows]))


def lattice_from_generators(vectors: Sequence[Sequence[int]], k: Optional[int] = None) -> LatticeBasis:
    if k is None:
        if not vectors:
            raise ValueError("k is required for an empty generator list")
        k = len(vectors[0])
    return LatticeBasis(k, [list(v) for v in vectors])


def lattice_of_system(sys: EqSystem) -> LatticeBasis:
    """{t in Z^k : D t ≡ 0 (mod m), E1 t = E2 t} -- the group whose N0-points solve sys."""
    k, n = sys.k, len(sys.congruences)
    rows = []
    for i, c in enumerate(sys.congruences):
        slack = [0] * n
        slack[i] = -c.modulus
        rows.append(list(c.coeffs) + slack)
    for e in sys.equalities:
        rows.append([a - b for a, b in zip(e.lhs, e.rhs)] + [0] * n)
    if not rows:
        return LatticeBasis(k, [[int(i == j) for j in range(k)] for i in range(k)])
    ker = integer_kernel(rows, k + n)
    return LatticeBasis(k, [r[:k] for r in ker])


def split_signs(v: Sequence[int]):
    """Write an integer vector as positive part minus negative part."""
    return tuple(max(x, 0) for x in v), tuple(max(-x, 0) for x in v)


def sign_family(vectors: Sequence[Sequence[int]], k: int) -> set:
    """Nonempty I such that each projection to I is zero or has both signs."""
    out = set()
    for r in range(1, k + 1):
        for I in combinations(range(k), r):
            ok = True
            for v in vectors:
                vals = [v[i] for i in I]
                if any(vals) and not (any(x > 0 for x in vals) and any(x < 0 for x in vals)):
                    ok = False
                    break
            if ok:
                out.add(frozenset(I))
    return out


class FullAffineMonoid:
    """The monoid A = L ∩ N0^k with L normalised to the group generated by A."""

    def __init__(self, lattice: LatticeBasis):
        self.k = lattice.k
        self.lattice = self._normalise(lattice)

    @classmethod
    def from_generators(cls, vectors: Sequence[Sequence[int]], k: Optional[int] = None) -> "FullAffineMonoid":
        """A = (group generated by ``vectors``) ∩ N0^k."""
        return cls(lattice_from_generators(vectors, k))

    @classmethod
    def from_system(cls, sys: EqSystem) -> "FullAffineMonoid":
        """The N0^k-solutions of a system (always a full affine monoid)."""
        return cls(lattice_of_system(sys))

    @staticmethod
    def _normalise(lattice: LatticeBasis) -> LatticeBasis:
        k = lattice.k
        if lattice.rank == 0:
            return lattice
        perp = orthogonal_complement(lattice.rows, k)
        reach = []
        for i in range(k):
            # is there x >= 0 in span(L) with x_i >= 1 ?
            ge = [([int(j == i) for j in range(k)], 1)]
            if feasible_point(k, eq=[(p, 0) for p in perp], ge=ge, free=False) is not None:
                reach.append(i)
        return lattice.restrict_to_coordinates(reach)

    def __repr__(self):
        return f"FullAffineMonoid(k={self.k}, lattice={[list(r) for r in self.lattice.rows]})"

    def __eq__(self, other):
        return isinstance(other, FullAffineMonoid) and self.lattice == other.lattice

    def __hash__(self):
        return hash(self.lattice)

    def __contains__(self, x) -> bool:
        x = list(x)
        if len(x) != self.k:
            return False
        if any((not isinstance(v, int)) or v < 0 for v in x):
            return False
        return x in self.lattice

    def issubset(self, other: "FullAffineMonoid") -> bool:
        return self.k == other.k and other.lattice.contains_lattice(self.lattice)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @cached_property
    def orthogonal_basis(self) -> List[List[int]]:
        """Primitive integer basis of the orthogonal complement of A."""
        return orthogonal_complement(self.lattice.rows, self.k)

    @cached_property
    def saturation(self) -> LatticeBasis:
        """span(A) ∩ Z^k."""
        if not self.orthogonal_basis:
            return LatticeBasis(self.k, [[int(i == j) for j in range(self.k)] for i in range(self.k)])
        return LatticeBasis(self.k, integer_kernel(self.orthogonal_basis, self.k))

    @cached_property
    def _smith(self):
        rows = [list(r) for r in self.lattice.rows]
        return smith_normal_form(rows, self.k)

    @property
    def invariant_factors(self) -> List[int]:
        """Invariant factors of the saturation modulo the lattice (1s included)."""
        return list(self._smith[0])

    @property
    def saturation_factor(self) -> int:
        """d with d * (span(A) ∩ N0^k) ⊆ A: the product of the invariant factors."""
        return prod(self.invariant_factors)

    def is_cyclic(self) -> bool:
        return self.rank <= 1

    def cyclic_generator(self) -> Optional[tuple]:
        """y with A = N0 y when the lattice has rank <= 1, else None."""
        if self.rank == 0:
            return (0,) * self.k
        if self.rank != 1:
            return None
        y = self.lattice.rows[0]
        if all(v <= 0 for v in y):
            y = tuple(-v for v in y)
        return tuple(y)

    # --- defining system ---------------------------------------------

    @cached_property
    def defining_system(self) -> EqSystem:
        """A system whose N0^k-solutions are exactly A.

        Equalities are positive/negative splits of a basis of A-perp, so
        each row pair has disjoint supports. Congruences come from a Smith
        decomposition U B V = diag(d) of the lattice basis B: for x in the
        saturation, x is in A iff (x V)_i ≡ 0 mod d_i.
        """
        k = self.k
        eqs = []
        for v in self.orthogonal_basis:
            lhs, rhs = split_signs(v)
            eqs.append(Equality(lhs, rhs))
        congs = []
        d, _, V = self._smith
        seen = set()
        for i, di in enumerate(d):
            if di == 1:
                continue
            col = tuple(V[j][i] % di for j in range(k))
            if not any(col) or (col, di) in seen:
                continue
            seen.add((col, di))
            congs.append(Congruence(col, di))
        return EqSystem(k, tuple(congs), tuple(eqs))

    # --- supports -----------------------------------------------------

    def _support_point(self, I) -> Optional[List[Fraction]]:
        I = sorted(I)
        if not I:
            return [Fraction(0)] * self.k
        cols = I
        rows = [[v[c] for c in cols] for v in self.orthogonal_basis]
        # x_I = 1 + z, z >= 0, E_I x_I = 0
        rhs = [-sum(r) for r in rows]
        z = simplex_feasible(rows, rhs, len(cols))
        if z is None:
            return None
        x = [Fraction(0)] * self.k
        for c, zc in zip(cols, z):
            x[c] = 1 + zc
        return x

    def support_witness(self, I) -> Optional[tuple]:
        """An element of A with support exactly I, or None if there is none."""
        x = self._support_point(I)
        if x is None:
            return None
        w = [abs(v) for v in primitive(x)]
        w = tuple(self.saturation_factor * v for v in w)
        assert w in self, "saturation factor failed to land a witness in A"
        return w

    @cached_property
    def support_set(self) -> frozenset:
        """Supp(A): the supports of all elements of A (the empty set included)."""
        out = {frozenset()}
        for r in range(1, self.k + 1):
            for I in combinations(range(self.k), r):
                if self._support_point(I) is not None:
                    out.add(frozenset(I))
        return frozenset(out)

    def project(self, I) -> "FullAffineMonoid":
        """p_I(A) over the complement of I (coordinates in increasing order)."""
        keep = [j for j in range(self.k) if j not in set(I)]
        return FullAffineMonoid(self.lattice.project(keep))


def positive_kernel_trivial(V: Sequence[Sequence], d: int) -> bool:
    """True iff span(V) ∩ N0^d = {0} (simplex on x >= 0, x in span V, sum x = 1)."""
    perp = orthogonal_complement(V, d) if V else [[int(i == j) for j in range(d)] for i in range(d)]
    rows = [list(p) for p in perp] + [[1] * d]
    rhs = [0] * len(perp) + [1]
    return simplex_feasible(rows, rhs, d) is None


def orthogonal_has_positive(V: Sequence[Sequence], d: int) -> bool:
    """True iff V-perp contains a strictly positive vector (Fourier-Motzkin).

    Independent dual of :func:`positive_kernel_trivial`: the two agree on
    every subspace.
    """
    eq = [(list(v), 0) for v in V]
    ge = [([int(i == j) for j in range(d)], 1) for i in range(d)]
    return fm_feasible(d, eq=eq, ge=ge) is not None


def minimal_orthogonal_family(A: FullAffineMonoid, seed: Sequence[Sequence[int]] = ()) -> List[List[int]]:
    """Extend ``seed`` (vectors in A-perp) until its sign family equals Supp(A \\ {0}).

    Offending supports are handled in lexicographic order; each appended
    vector is nonnegative and nonzero on the offending set, which removes it.
    Any part of A-perp not yet spanned is appended at the end.
    """
    k = A.k
    family = [list(v) for v in seed]
    for v in family:
        if len(v) != k:
            raise ValueError(f"seed vector {v} does not have length {k}")
        for r in A.lattice.rows:
            if vec_dot(v, r):
                raise ValueError(f"seed vector {v} is not orthogonal to A")
    target = {I for I in A.support_set if I}
    basis = A.orthogonal_basis
    while True:
        extra = sorted(sign_family(family, k) - target, key=lambda s: tuple(sorted(s)))
        if not extra:
            break
        I = sorted(extra[0])
        # v = lam . basis with v_i >= 0 (i in I) and sum_I v_i >= 1
        ge = [([b[i] for b in basis], 0) for i in I]
        ge.append(([sum(b[i] for i in I) for b in basis], 1))
        lam = feasible_point(len(basis), ge=ge)
        if lam is None:
            raise ArithmeticError(f"no separating vector for support {[i + 1 for i in I]}")
        v = primitive([sum(l * b[j] for l, b in zip(lam, basis)) for j in range(k)])
        family.append(v)
    for b in basis:
        if rank(family + [b], k) > rank(family, k):
            family.append(list(b))
    return family


def _step_one(A: FullAffineMonoid) -> EqSystem:
    base = A.defining_system
    seed = [[a - b for a, b in zip(e.lhs, e.rhs)] for e in base.equalities]
    family = minimal_orthogonal_family(A, seed)
    extra = tuple(Equality(*split_signs(v)) for v in family[len(seed):])
    return EqSystem(A.k, base.congruences, base.equalities + extra)


def fas_system(A: FullAffineMonoid) -> EqSystem:
    """A system whose (N0*)^k-solutions are exactly A + inf*A."""
    k = A.k
    congs, eqs = [], []
    seen_c, seen_e = set(), set()
    everything = frozenset(range(k))
    for I in sorted(A.support_set, key=lambda s: (len(s), tuple(sorted(s)))):
        if I == everything:
            continue
        keep = [j for j in range(k) if j not in I]
        part = _step_one(A.project(I)) if I else _step_one(A)
        part = lift(part, k, keep) if I else part
        for c in part.congruences:
            if c not in seen_c:
                seen_c.add(c)
                congs.append(c)
        for e in part.equalities:
            if e not in seen_e:
                seen_e.add(e)
                eqs.append(e)
    return EqSystem(k, tuple(congs), tuple(eqs))
