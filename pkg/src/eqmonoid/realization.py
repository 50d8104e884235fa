"""Pullback realization plans.

A plan is a tree whose leaves carry fixed monoids (m N0*, the diagonal of
(N0*)^2, all of (N0*)^k) and whose nodes cut a bottom plan down by the
preimage of a top plan under a nonnegative integer matrix. Each leaf stands
for a semilocal ring with known projective modules and each node for a ring
pullback; only the monoid-level semantics are computed here.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from .eqsystem import EqSystem, drop_trivial_rows, member
from .extvec import INF, ExtNat, dot, format_vector


class PlanError(ValueError):
    pass


@dataclass(frozen=True)
class LeafFreeCyclic:
    """Monoid m N0* on one coordinate; unit m * ell."""

    m: int
    ell: int = 1

    @property
    def dim(self) -> int:
        return 1

    @property
    def unit(self) -> Tuple[int, ...]:
        return (self.m * self.ell,)


@dataclass(frozen=True)
class LeafFreeDiagonal:
    """Monoid {(x, x)}; unit (s, s)."""

    s: int = 1

    @property
    def dim(self) -> int:
        return 2

    @property
    def unit(self) -> Tuple[int, ...]:
        return (self.s, self.s)


@dataclass(frozen=True)
class LeafSemisimple:
    """All of (N0*)^k."""

    k: int
    unit_vector: Tuple[int, ...] = ()

    @property
    def dim(self) -> int:
        return self.k

    @property
    def unit(self) -> Tuple[int, ...]:
        return self.unit_vector or (1,) * self.k


@dataclass(frozen=True)
class PullbackNode:
    """x is accepted iff bottom accepts x and top accepts inducing . x."""

    top: "Plan"
    inducing: Tuple[Tuple[int, ...], ...]
    bottom: "Plan"
    intersection: bool = False  # built by intersect_plans; inducing is the identity

    def __post_init__(self):
        object.__setattr__(self, "inducing", tuple(tuple(r) for r in self.inducing))
        if len(self.inducing) != self.top.dim:
            raise PlanError(f"inducing matrix has {len(self.inducing)} rows, top has dimension {self.top.dim}")
        for r in self.inducing:
            if len(r) != self.bottom.dim or any(v < 0 for v in r):
                raise PlanError(f"inducing row {r} does not fit the bottom dimension {self.bottom.dim}")
        image = apply_matrix(self.inducing, self.bottom.unit)
        if not evaluate_plan(self.top, image):
            raise PlanError(f"bottom unit maps to {format_vector(image)}, outside the top monoid")

    @property
    def dim(self) -> int:
        return self.bottom.dim

    @property
    def unit(self) -> Tuple[int, ...]:
        return self.bottom.unit


Plan = Union[LeafFreeCyclic, LeafFreeDiagonal, LeafSemisimple, PullbackNode]


def apply_matrix(mat, x: Sequence[ExtNat]) -> Tuple[ExtNat, ...]:
    return tuple(dot(row, x) for row in mat)


def evaluate_plan(plan: Plan, x: Sequence[ExtNat]) -> bool:
    x = tuple(x)
    if len(x) != plan.dim:
        raise PlanError(f"vector of length {len(x)} for a plan of dimension {plan.dim}")
    if isinstance(plan, LeafSemisimple):
        return True
    if isinstance(plan, LeafFreeCyclic):
        return x[0] is INF or x[0] % plan.m == 0
    if isinstance(plan, LeafFreeDiagonal):
        return x[0] == x[1]
    return evaluate_plan(plan.bottom, x) and evaluate_plan(plan.top, apply_matrix(plan.inducing, x))


def _check_unit(unit, k):
    unit = tuple(unit)
    if len(unit) != k:
        raise PlanError(f"unit {unit} does not have length {k}")
    if any((not isinstance(v, int)) or v < 1 for v in unit):
        raise PlanError(f"unit {unit} must be strictly positive")
    return unit


def plan_congruence(a: Sequence[int], m: int, unit: Sequence[int]) -> PullbackNode:
    """Plan for {x : a . x in m N0*}."""
    a = tuple(a)
    unit = _check_unit(unit, len(a))
    if m < 2:
        raise PlanError("modulus must be at least 2")
    s = dot(a, unit)
    if s == 0:
        raise PlanError("a . unit is zero")
    if s % m:
        raise PlanError(f"a . unit = {s} is not divisible by {m}")
    return PullbackNode(LeafFreeCyclic(m, s // m), (a,), LeafSemisimple(len(a), unit))


def plan_equation(a: Sequence[int], b: Sequence[int], unit: Sequence[int]) -> PullbackNode:
    """Plan for {x : a . x = b . x}."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise PlanError("sides of different length")
    unit = _check_unit(unit, len(a))
    s, t = dot(a, unit), dot(b, unit)
    if s != t:
        raise PlanError(f"unit is not a solution: {s} != {t}")
    if s == 0:
        raise PlanError("a . unit is zero")
    return PullbackNode(LeafFreeDiagonal(s), (a, b), LeafSemisimple(len(a), unit))


def intersect_plans(p: Plan, q: Plan) -> PullbackNode:
    if p.dim != q.dim:
        raise PlanError("cannot intersect plans of different dimension")
    n = p.dim
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    return PullbackNode(q, ident, p, intersection=True)


def _chain(plans: List[Plan]) -> Plan:
    out = plans[0]
    for p in plans[1:]:
        out = intersect_plans(out, p)
    return out


def plan_system(sys: EqSystem, unit: Sequence[int]) -> Plan:
    """Plan whose monoid is the solution set of ``sys``."""
    unit = _check_unit(unit, sys.k)
    if not member(sys, unit):
        raise PlanError(f"unit {unit} is not a solution of the system")
    sys = drop_trivial_rows(sys)
    congs = [plan_congruence(c.coeffs, c.modulus, unit) for c in sys.congruences]
    eqs = [plan_equation(e.lhs, e.rhs, unit) for e in sys.equalities]
    parts = [p for p in (congs and _chain(congs), eqs and _chain(eqs)) if p]
    if not parts:
        return LeafSemisimple(sys.k, unit)
    return _chain(parts)


# serialization

def plan_to_dict(plan: Plan) -> dict:
    if isinstance(plan, LeafFreeCyclic):
        return {"kind": "free-cyclic", "m": plan.m, "ell": plan.ell}
    if isinstance(plan, LeafFreeDiagonal):
        return {"kind": "free-diagonal", "s": plan.s}
    if isinstance(plan, LeafSemisimple):
        return {"kind": "semisimple", "k": plan.k, "unit": list(plan.unit)}
    if plan.intersection:
        return {"kind": "intersection", "top": plan_to_dict(plan.top), "bottom": plan_to_dict(plan.bottom)}
    return {
        "kind": "pullback",
        "inducing": [list(r) for r in plan.inducing],
        "top": plan_to_dict(plan.top),
        "bottom": plan_to_dict(plan.bottom),
    }


def plan_from_dict(d: dict) -> Plan:
    try:
        kind = d["kind"]
        if kind == "free-cyclic":
            return LeafFreeCyclic(int(d["m"]), int(d.get("ell", 1)))
        if kind == "free-diagonal":
            return LeafFreeDiagonal(int(d.get("s", 1)))
        if kind == "semisimple":
            k = int(d["k"])
            unit = tuple(int(v) for v in d.get("unit", ())) or (1,) * k
            return LeafSemisimple(k, _check_unit(unit, k))
        if kind == "intersection":
            return intersect_plans(plan_from_dict(d["bottom"]), plan_from_dict(d["top"]))
        if kind == "pullback":
            return PullbackNode(plan_from_dict(d["top"]),
                                tuple(tuple(int(v) for v in r) for r in d["inducing"]),
                                plan_from_dict(d["bottom"]))
    except (KeyError, TypeError) as exc:
        raise PlanError(f"malformed plan: {exc}") from None
    raise PlanError(f"unknown plan node kind {kind!r}")


# description

def _row_text(row):
    terms = [(f"{c}" if c != 1 else "") + f"x{i + 1}" for i, c in enumerate(row) if c]
    return " + ".join(terms) or "0"


def describe_plan(plan: Plan, indent: int = 0) -> str:
    return "\n".join(_describe(plan, indent))


def _describe(plan: Plan, depth: int) -> List[str]:
    pad = "  " * depth
    if isinstance(plan, LeafFreeCyclic):
        m = plan.m
        return [
            f"{pad}free-cyclic leaf: m = {m}, ell = {plan.ell}",
            f"{pad}  ring: M_{m}(D) for a semilocal PID D with one simple factor (a skew polynomial ring",
            f"{pad}  localised at an Ore set); residue ring M_{m} over a division ring, all projectives free,",
            f"{pad}  dimension monoid {m}N0*",
        ]
    if isinstance(plan, LeafFreeDiagonal):
        return [
            f"{pad}free-diagonal leaf: s = {plan.s}",
            f"{pad}  ring: F1[x] localised at the complement of xF1[x] and (x-1)F1[x]; two simple factors,",
            f"{pad}  all projectives free, dimension monoid {{(x, x)}}",
        ]
    if isinstance(plan, LeafSemisimple):
        u = ", ".join(map(str, plan.unit))
        return [f"{pad}semisimple leaf: product of {plan.k} simple artinian rings "
                f"M_{{n_i}}(D_i), unit ({u}), dimension monoid (N0*)^{plan.k}"]
    if plan.intersection:
        head = f"{pad}intersection (pullback over a common semisimple quotient, j1 and j2 diagonal):"
    else:
        maps = "; ".join(_row_text(r) for r in plan.inducing)
        head = (f"{pad}pullback: j2 block-diagonal with multiplicities from [{maps}], "
                f"accepting x when the bottom accepts x and the top accepts ({maps})")
    return [head, f"{pad}  top:"] + _describe(plan.top, depth + 2) + \
           [f"{pad}  bottom:"] + _describe(plan.bottom, depth + 2)


def plan_size(plan: Plan) -> int:
    if isinstance(plan, PullbackNode):
        return 1 + plan_size(plan.top) + plan_size(plan.bottom)
    return 1


def count_leaves(plan: Plan, kind) -> int:
    if isinstance(plan, PullbackNode):
        return count_leaves(plan.top, kind) + count_leaves(plan.bottom, kind)
    return int(isinstance(plan, kind))
