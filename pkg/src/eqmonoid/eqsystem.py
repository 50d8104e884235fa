"""Submonoids of (N0*)^k cut out by congruences and linear equalities.

A system consists of congruence rows ``d . t in m N0*`` and equality rows
``e1 . t = e2 . t``, all coefficients nonnegative, solved over (N0*)^k.
N0* is not cancellative, so rows are never normalised: ``2x = x + y`` and
``x = y`` have the same solutions in N0^2 but differ at ``(inf, 3)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence, Tuple

from .extvec import INF, DimVector, ExtNat, dot, pattern

#: default cap on k for the 2^k pattern enumeration
PATTERN_CAP = 16


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class Congruence:
    coeffs: Tuple[int, ...]
    modulus: int

    def holds(self, x: Sequence[ExtNat]) -> bool:
        v = dot(self.coeffs, x)
        return v is INF or v % self.modulus == 0


@dataclass(frozen=True)
class Equality:
    lhs: Tuple[int, ...]
    rhs: Tuple[int, ...]

    def holds(self, x: Sequence[ExtNat]) -> bool:
        return dot(self.lhs, x) == dot(self.rhs, x)


@dataclass(frozen=True)
class EqSystem:
    k: int
    congruences: Tuple[Congruence, ...] = field(default=())
    equalities: Tuple[Equality, ...] = field(default=())

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be nonnegative")
        object.__setattr__(self, "congruences", tuple(self.congruences))
        object.__setattr__(self, "equalities", tuple(self.equalities))
        for c in self.congruences:
            self._check_row(c.coeffs)
            if c.modulus < 2:
                raise ValueError(f"modulus must be >= 2, got {c.modulus}")
        for e in self.equalities:
            self._check_row(e.lhs)
            self._check_row(e.rhs)

    def _check_row(self, row):
        if len(row) != self.k:
            raise DimensionError(f"row {row} does not have length {self.k}")
        if any((not isinstance(c, int)) or c < 0 for c in row):
            raise ValueError(f"row {row} must have nonnegative integer entries")

    @classmethod
    def build(cls, k: int, congruences=(), equalities=()) -> "EqSystem":
        """Convenience constructor from plain tuples.

        ``congruences``: iterable of ``(coeffs, modulus)``;
        ``equalities``: iterable of ``(lhs, rhs)``.
        """
        return cls(
            k,
            tuple(Congruence(tuple(c), int(m)) for c, m in congruences),
            tuple(Equality(tuple(a), tuple(b)) for a, b in equalities),
        )

    @classmethod
    def empty(cls, k: int) -> "EqSystem":
        return cls(k)

    # matrix views (D, m, E1, E2)
    @property
    def D(self):
        return [list(c.coeffs) for c in self.congruences]

    @property
    def moduli(self):
        return [c.modulus for c in self.congruences]

    @property
    def E1(self):
        return [list(e.lhs) for e in self.equalities]

    @property
    def E2(self):
        return [list(e.rhs) for e in self.equalities]

    def __len__(self):
        return len(self.congruences) + len(self.equalities)

    def __str__(self):
        return "\n".join(describe_rows(self)) or f"(no constraints on N0*^{self.k})"

    def _check_dim(self, x):
        if len(x) != self.k:
            raise DimensionError(f"vector of length {len(x)} for a system with k={self.k}")

    def violated(self, x: Sequence[ExtNat]) -> Optional[int]:
        """1-based index of the first violated row (congruences first), or None."""
        self._check_dim(x)
        for i, c in enumerate(self.congruences):
            if not c.holds(x):
                return i + 1
        for j, e in enumerate(self.equalities):
            if not e.holds(x):
                return len(self.congruences) + j + 1
        return None

    def __contains__(self, x) -> bool:
        return member(self, x)


def member(sys: EqSystem, x: Sequence[ExtNat]) -> bool:
    return sys.violated(x) is None


def intersect(a: EqSystem, b: EqSystem) -> EqSystem:
    if a.k != b.k:
        raise DimensionError(f"cannot intersect systems over k={a.k} and k={b.k}")
    return EqSystem(a.k, a.congruences + b.congruences, a.equalities + b.equalities)


def lift(sys: EqSystem, k: int, coords: Sequence[int]) -> EqSystem:
    """Re-express a system over ``coords`` (a subset of range(k)) inside (N0*)^k."""
    if len(coords) != sys.k:
        raise DimensionError("coordinate list does not match the system")

    def up(row):
        out = [0] * k
        for c, v in zip(coords, row):
            out[c] = v
        return tuple(out)

    return EqSystem(
        k,
        tuple(Congruence(up(c.coeffs), c.modulus) for c in sys.congruences),
        tuple(Equality(up(e.lhs), up(e.rhs)) for e in sys.equalities),
    )


def slack_embed(sys: EqSystem):
    """Trade each congruence for an equality with a fresh slack unknown.

    Returns ``(equality_system, embed)`` where the system lives over
    ``k + n`` unknowns and ``embed`` maps x to ``(x, d1.x/m1, ...)`` with
    inf/m = inf. The image lies in the equality system exactly when x is a
    member; the slack coordinates of a member are uniquely determined.
    """
    k, n = sys.k, len(sys.congruences)
    rows = []
    for i, c in enumerate(sys.congruences):
        slack = [0] * n
        slack[i] = c.modulus
        rows.append(Equality(tuple(c.coeffs) + (0,) * n, (0,) * k + tuple(slack)))
    for e in sys.equalities:
        rows.append(Equality(tuple(e.lhs) + (0,) * n, tuple(e.rhs) + (0,) * n))
    out = EqSystem(k + n, (), tuple(rows))

    def embed(x: Sequence[ExtNat]) -> Optional[DimVector]:
        """Image of x, or None when some congruence value is not divisible."""
        sys._check_dim(x)
        extra = []
        for c in sys.congruences:
            v = dot(c.coeffs, x)
            if v is INF:
                extra.append(INF)
            elif v % c.modulus:
                return None
            else:
                extra.append(v // c.modulus)
        return tuple(x) + tuple(extra)

    return out, embed


def infinite_support_patterns(sys: EqSystem, cap: int = PATTERN_CAP) -> set:
    """All I with the inf-pattern on I a solution (0-based frozensets).

    This is simultaneously the set of supports and the set of infinite
    supports realised by members, since inf * x stays in the monoid.
    """
    if sys.k > cap:
        raise ValueError(f"k={sys.k} exceeds the pattern enumeration cap {cap}")
    out = set()
    for r in range(sys.k + 1):
        for I in combinations(range(sys.k), r):
            if member(sys, pattern(sys.k, I)):
                out.add(frozenset(I))
    return out


def subsystem_for_support(sys: EqSystem, I) -> EqSystem:
    """The system whose N0-solutions over the complement of I form A_I.

    Rows touching I are satisfied automatically once every coordinate in I
    is infinite, so they are dropped; the I-columns of the remaining rows
    are deleted.
    """
    I = frozenset(I)
    if not member(sys, pattern(sys.k, I)):
        raise ValueError(f"{sorted(i + 1 for i in I)} is not an infinite support pattern of the system")
    keep = [j for j in range(sys.k) if j not in I]

    def touches(row):
        return any(row[j] for j in I)

    def cut(row):
        return tuple(row[j] for j in keep)

    congs = tuple(Congruence(cut(c.coeffs), c.modulus)
                  for c in sys.congruences if not touches(c.coeffs))
    eqs = tuple(Equality(cut(e.lhs), cut(e.rhs))
                for e in sys.equalities if not (touches(e.lhs) or touches(e.rhs)))
    return EqSystem(len(keep), congs, eqs)


def drop_trivial_rows(sys: EqSystem) -> EqSystem:
    """Remove all-zero congruence rows and equality rows with identical sides."""
    return EqSystem(
        sys.k,
        tuple(c for c in sys.congruences if any(c.coeffs)),
        tuple(e for e in sys.equalities if e.lhs != e.rhs),
    )


def _linear_form(row, names):
    terms = []
    for c, name in zip(row, names):
        if c == 0:
            continue
        terms.append(name if c == 1 else f"{c}{name}")
    return " + ".join(terms) if terms else "0"


def describe_rows(sys: EqSystem, names=None):
    names = names or [f"t{i + 1}" for i in range(sys.k)]
    lines = []
    for c in sys.congruences:
        lines.append(f"{_linear_form(c.coeffs, names)} in {c.modulus}N0*")
    for e in sys.equalities:
        lines.append(f"{_linear_form(e.lhs, names)} = {_linear_form(e.rhs, names)}")
    return lines
