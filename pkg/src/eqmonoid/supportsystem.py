"""Systems of supports and the conversions to and from equation systems.

A system of supports on k coordinates is a family S of index sets together
with a full affine monoid A_I on the complement of each I in S. It describes
the monoid M(S) of vectors x whose infinite support I lies in S and whose
finite part lies in A_I. Index sets are 0-based frozensets internally and
1-based in every rendering.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil
from typing import Dict, List, Optional, Sequence

from .eqsystem import (
    Congruence,
    EqSystem,
    Equality,
    infinite_support_patterns,
    intersect,
    lift,
    member,
    subsystem_for_support,
)
from .extvec import complement, format_index_set, inf_support, project, subset_sort_key
from .fullaffine import FullAffineMonoid, LatticeBasis, fas_system


class SupportSystemError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    condition: str  # "i", "ii", "iii" or "iv"
    message: str
    witness: Optional[tuple] = None

    def __str__(self):
        s = f"({self.condition}) {self.message}"
        if self.witness is not None:
            s += f" [witness {self.witness}]"
        return s


def _trivial(k: int) -> FullAffineMonoid:
    return FullAffineMonoid(LatticeBasis(k, []))


@dataclass(frozen=True, eq=False)
class SupportSystem:
    k: int
    unit: tuple
    monoids: Dict[frozenset, FullAffineMonoid] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "unit", tuple(self.unit))
        object.__setattr__(self, "monoids", {frozenset(I): A for I, A in self.monoids.items()})
        if len(self.unit) != self.k:
            raise SupportSystemError(f"unit {self.unit} does not have length {self.k}")

    @classmethod
    def from_generators(cls, k: int, unit, blocks) -> "SupportSystem":
        """Build from ``{index set: generator list}`` with 0-based index sets.

        Generators for A_I are vectors over the complement of I.
        """
        mons = {}
        for I, gens in blocks.items():
            I = frozenset(I)
            mons[I] = FullAffineMonoid.from_generators(list(gens), k - len(I))
        return cls(k, tuple(unit), mons)

    @property
    def supports(self) -> List[frozenset]:
        return sorted(self.monoids, key=subset_sort_key)

    def __eq__(self, other):
        return (isinstance(other, SupportSystem) and self.k == other.k
                and self.unit == other.unit and self.monoids == other.monoids)

    def __hash__(self):
        return hash((self.k, self.unit, frozenset(self.monoids.items())))

    def __repr__(self):
        parts = ", ".join(f"{format_index_set(I)}: {self.monoids[I].lattice.rows}" for I in self.supports)
        return f"SupportSystem(k={self.k}, unit={self.unit}, {{{parts}}})"

    def __contains__(self, x) -> bool:
        return member_MS(self, x)

    def describe(self) -> List[str]:
        lines = [f"k = {self.k}, unit = {self.unit}"]
        for I in self.supports:
            rows = [list(r) for r in self.monoids[I].lattice.rows]
            lines.append(f"  {format_index_set(I)}: lattice {rows}")
        return lines


def validate(ss: SupportSystem) -> List[Violation]:
    """Check the four defining conditions; an empty list means valid."""
    out: List[Violation] = []
    k = ss.k
    S = set(ss.monoids)
    empty, everything = frozenset(), frozenset(range(k))
    # (i)
    if empty not in S:
        out.append(Violation("i", "the empty set is not in S"))
    else:
        if any((not isinstance(v, int)) or v < 1 for v in ss.unit):
            out.append(Violation("i", f"unit {ss.unit} is not in N^k", (ss.unit,)))
        elif ss.unit not in ss.monoids[empty]:
            out.append(Violation("i", f"unit {ss.unit} is not in A_{{}}", (ss.unit,)))
    # (ii)
    for I, A in ss.monoids.items():
        if not I <= everything:
            out.append(Violation("ii", f"{format_index_set(I)} is not a subset of {{1..{k}}}"))
        elif A.k != k - len(I):
            out.append(Violation("ii", f"A_{format_index_set(I)} lives in dimension {A.k}, expected {k - len(I)}"))
    if out and any(v.condition == "ii" for v in out):
        return out
    # (iii)
    for I in sorted(S, key=subset_sort_key):
        for J in sorted(S, key=subset_sort_key):
            if I | J not in S:
                out.append(Violation("iii", f"S is not closed under unions: {format_index_set(I)} ∪ "
                                            f"{format_index_set(J)} is missing", (I, J)))
    for I in sorted(S, key=subset_sort_key):
        A = ss.monoids[I]
        coords = complement(k, I)
        for T in sorted(A.support_set, key=subset_sort_key):
            U = I | {coords[t] for t in T}
            if U not in S:
                w = A.support_witness(T)
                out.append(Violation("iii", f"A_{format_index_set(I)} has an element with support "
                                            f"{format_index_set(coords[t] for t in T)} but "
                                            f"{format_index_set(U)} is not in S", (I, w)))
    # (iv)
    for I in sorted(S, key=subset_sort_key):
        for K in sorted(S, key=subset_sort_key):
            if I < K:
                w = _projection_witness(ss, I, K)
                if w is not None:
                    out.append(Violation("iv", f"the projection of A_{format_index_set(I)} is not "
                                               f"inside A_{format_index_set(K)}", w))
    return out


def _projection_witness(ss: SupportSystem, I, K):
    """None if p(A_I) ⊆ A_K, else (a, p(a)) with a in A_I and p(a) not in A_K."""
    AI, AK = ss.monoids[I], ss.monoids[K]
    ci = complement(ss.k, I)
    keep = [t for t, c in enumerate(ci) if c not in K]
    projected = AI.lattice.project(keep)
    if AK.lattice.contains_lattice(projected):
        return None
    # a full-support element w of A_I; b + N w lands in A_I for large N
    top = frozenset().union(*AI.support_set)
    w = AI.support_witness(top)
    for b in AI.lattice.rows:
        if [b[t] for t in keep] in AK.lattice:
            continue
        n = max([ceil(-b[t] / w[t]) for t in top if b[t] < 0] + [0])
        for m in (n, n + 1):
            a = tuple(x + m * y for x, y in zip(b, w))
            pa = tuple(a[t] for t in keep)
            if pa not in AK:
                return (a, pa)
    raise AssertionError("lattice containment failed but no witness was found")


def support_warnings(ss: SupportSystem) -> List[str]:
    """Nonempty I in S that no element of any A_J (J ⊊ I) reaches via J ∪ supp(a).

    Such I occur in M(S) only through the pure pattern inf on I (together
    with larger patterns); they are legal, but worth flagging.
    """
    k = ss.k
    reached = set()
    for J, A in ss.monoids.items():
        coords = complement(k, J)
        for T in A.support_set:
            if T:
                reached.add(J | {coords[t] for t in T})
    return [f"{format_index_set(I)} is only realised as a pure infinite pattern"
            for I in ss.supports if I and I not in reached]


def member_MS(ss: SupportSystem, x: Sequence) -> bool:
    x = tuple(x)
    if len(x) != ss.k:
        raise SupportSystemError(f"vector of length {len(x)} for a support system with k={ss.k}")
    I = inf_support(x)
    A = ss.monoids.get(I)
    if A is None:
        return False
    return project(x, complement(ss.k, I)) in A


def derived_ss(ss: SupportSystem, I) -> SupportSystem:
    """The system S_I on the complement of I: K \\ I for K ⊇ I, with A_{K \\ I} = A_K."""
    I = frozenset(I)
    if I not in ss.monoids:
        raise SupportSystemError(f"{format_index_set(I)} is not in S")
    if ss.k and I == frozenset(range(ss.k)):
        raise SupportSystemError("cannot derive along the full index set")
    coords = complement(ss.k, I)
    relabel = {c: t for t, c in enumerate(coords)}
    mons = {}
    for K, A in ss.monoids.items():
        if I <= K:
            mons[frozenset(relabel[c] for c in K - I)] = A
    return SupportSystem(len(coords), project(ss.unit, coords), mons)


def eq_to_ss(sys: EqSystem, unit: Sequence[int]) -> SupportSystem:
    """The full affine system of supports describing the solutions of ``sys``."""
    unit = tuple(unit)
    if len(unit) != sys.k:
        raise SupportSystemError("unit length does not match the system")
    if any(v < 1 for v in unit):
        raise SupportSystemError(f"unit {unit} must be strictly positive")
    if not member(sys, unit):
        raise SupportSystemError(f"unit {unit} is not a solution of the system")
    mons = {}
    for I in infinite_support_patterns(sys):
        mons[I] = FullAffineMonoid.from_system(subsystem_for_support(sys, I))
    return SupportSystem(sys.k, unit, mons)


def hide(sysA: EqSystem, unit: Sequence[int], I, sysB: EqSystem) -> EqSystem:
    """Solutions: x in A with p(x) in B, or x infinite on all of I with p(x) in B.

    For each i in I every row r becomes r + (r . unit) e_i (the substitution
    t_j -> t_j + n_j t_i), the lifted rows of B are appended, and the
    systems for the different i are intersected.
    """
    k = sysA.k
    unit = tuple(unit)
    I = frozenset(I)
    if not I or not I <= frozenset(range(k)):
        raise SupportSystemError(f"hide needs a nonempty subset of {{1..{k}}}")
    coords = complement(k, I)
    if sysB.k != len(coords):
        raise SupportSystemError(f"B must live on {len(coords)} coordinates, got {sysB.k}")
    if not member(sysA, unit):
        raise SupportSystemError(f"unit {unit} is not a solution of A")
    if not member(sysB, project(unit, coords)):
        raise SupportSystemError("the projected unit is not a solution of B")
    lifted_b = lift(sysB, k, coords)
    out = EqSystem(k)

    def shift(row, i):
        r = list(row)
        r[i] += sum(a * b for a, b in zip(row, unit))
        return tuple(r)

    for i in sorted(I):
        part = EqSystem(
            k,
            tuple(Congruence(shift(c.coeffs, i), c.modulus) for c in sysA.congruences),
            tuple(Equality(shift(e.lhs, i), shift(e.rhs, i)) for e in sysA.equalities),
        )
        out = intersect(out, intersect(part, lifted_b))
    return _dedupe(out)


def _dedupe(sys: EqSystem) -> EqSystem:
    return EqSystem(sys.k, tuple(dict.fromkeys(sys.congruences)), tuple(dict.fromkeys(sys.equalities)))


def minimal_supports(ss: SupportSystem) -> List[frozenset]:
    rest = [I for I in ss.monoids if I]
    mins = [I for I in rest if not any(J < I for J in rest)]
    return sorted(mins, key=lambda s: tuple(sorted(s)))


def ss_to_eq(ss: SupportSystem, check: bool = True) -> EqSystem:
    """An equation system whose solutions are exactly M(S)."""
    if check:
        bad = validate(ss)
        if bad:
            raise SupportSystemError("invalid system of supports: " + "; ".join(map(str, bad)))
    return _ss_to_eq(ss, {})


def _ss_to_eq(ss: SupportSystem, memo) -> EqSystem:
    key = (ss.k, ss.unit, tuple(sorted(((tuple(sorted(I)), ss.monoids[I].lattice.rows)
                                          for I in ss.monoids))))
    if key in memo:
        return memo[key]
    k = ss.k
    if k == 0:
        result = EqSystem(0)
    elif len(ss.monoids) <= 2:
        A0 = ss.monoids[frozenset()]
        if not A0.is_cyclic():
            raise SupportSystemError(
                f"base case needs a cyclic A_{{}}, got lattice {[list(r) for r in A0.lattice.rows]}")
        result = fas_system(A0)
    else:
        result = fas_system(ss.monoids[frozenset()])
        for I in minimal_supports(ss):
            sub = _ss_to_eq(derived_ss(ss, I), memo)
            result = hide(result, ss.unit, I, sub)
    memo[key] = result
    return result
