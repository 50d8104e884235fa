"""Brute-force ground truth on finite boxes.

Every check here enumerates ``({0..B} ∪ {inf})^k`` (or ``{0..B}^k``) and
compares predicates pointwise, so an "equal" verdict always means "equal on
the stated box".
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, List, Optional, Sequence

from .extvec import INF, DimVector, add, format_vector, inf_scale, is_finite, leq, star

Predicate = Callable[[DimVector], bool]

DEFAULT_BOUND = 5


@dataclass(frozen=True)
class Box:
    k: int
    bound: int = DEFAULT_BOUND
    include_infinity: bool = True

    def values(self):
        vals = list(range(self.bound + 1))
        if self.include_infinity:
            vals.append(INF)
        return vals

    def __iter__(self):
        # lexicographic, inf ordered last
        return (tuple(p) for p in product(self.values(), repeat=self.k))

    def __len__(self):
        return len(self.values()) ** self.k

    def __contains__(self, x) -> bool:
        if len(x) != self.k:
            return False
        for v in x:
            if v is INF:
                if not self.include_infinity:
                    return False
            elif v > self.bound:
                return False
        return True

    def describe(self) -> str:
        top = "{0..%d%s}" % (self.bound, ", inf" if self.include_infinity else "")
        return f"{top}^{self.k}"


def _as_predicate(obj) -> Predicate:
    if callable(obj):
        return obj
    if hasattr(obj, "__contains__"):
        return lambda x: x in obj
    raise TypeError(f"cannot use {obj!r} as a membership predicate")


def enumerate_box(pred, box: Box, workers: int = 1) -> List[DimVector]:
    """All box elements satisfying ``pred``, in enumeration order.

    With ``workers > 1`` the box is split by its first coordinate and the
    slices are evaluated in a thread pool, then concatenated in order.
    """
    pred = _as_predicate(pred)
    if workers <= 1 or box.k == 0:
        return [x for x in box if pred(x)]
    head = box.values()
    tail = Box(box.k - 1, box.bound, box.include_infinity)

    def run(v):
        return [x for x in ((v,) + t for t in tail) if pred(x)]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(run, head))
    return [x for part in parts for x in part]


@dataclass
class CheckResult:
    """One report record: a named check, its status, and a witness if it failed."""

    check: str
    ok: bool
    box: Box
    witness: Optional[tuple] = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def line(self) -> str:
        status = "pass" if self.ok else "FAIL"
        s = f"{self.check}: {status} on {self.box.describe()}"
        if self.witness is not None:
            s += " witness " + "; ".join(
                format_vector(w) if isinstance(w, tuple) else str(w) for w in self.witness)
        if self.detail:
            s += f" ({self.detail})"
        return s


@dataclass
class MonoidReport:
    results: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def __bool__(self):
        return self.ok

    def __getitem__(self, name) -> CheckResult:
        for r in self.results:
            if r.check == name:
                return r
        raise KeyError(name)

    def lines(self) -> List[str]:
        return [r.line() for r in self.results]


def check_monoid_axioms(members: Iterable[DimVector], box: Box) -> MonoidReport:
    """Zero, closure under + (inside the box), and (M1)/(M2) when inf is in the box."""
    mem = list(members)
    s = set(mem)
    rep = MonoidReport()
    zero = (0,) * box.k
    rep.results.append(CheckResult("zero", zero in s, box, None if zero in s else (zero,)))
    bad = None
    for a in mem:
        for b in mem:
            c = add(a, b)
            if c in box and c not in s:
                bad = (a, b)
                break
        if bad:
            break
    rep.results.append(CheckResult("closure", bad is None, box, bad))
    if box.include_infinity:
        w1 = next(((x,) for x in mem if star(x) not in s), None)
        rep.results.append(CheckResult("M1", w1 is None, box, w1))
        w2 = next(((x,) for x in mem if inf_scale(x) not in s), None)
        rep.results.append(CheckResult("M2", w2 is None, box, w2))
    return rep


def equal_on_box(pred_a, pred_b, box: Box) -> CheckResult:
    """Pointwise comparison; the witness is the first disagreeing vector."""
    pa, pb = _as_predicate(pred_a), _as_predicate(pred_b)
    for x in box:
        if bool(pa(x)) != bool(pb(x)):
            return CheckResult("equal", False, box, (x,))
    return CheckResult("equal", True, box)


def fullness_check(members: Iterable[DimVector], box: Box) -> CheckResult:
    """Search a in members, t in box \\ members with a + t in members.

    Only the finite part of the box is searched.
    """
    mem = [x for x in members if is_finite(x)]
    s = set(mem)
    fbox = Box(box.k, box.bound, False)
    outside = [t for t in fbox if t not in s]
    for a in mem:
        for t in outside:
            if add(a, t) in s:
                return CheckResult("full", False, fbox, (a, t))
    return CheckResult("full", True, fbox)


def minimal_members(members: Iterable[DimVector], box: Optional[Box] = None) -> List[DimVector]:
    """Componentwise-minimal nonzero members."""
    nz = [x for x in members if any(v != 0 for v in x)]
    return [x for x in nz if not any(y != x and leq(y, x) for y in nz)]


def box_closure(generators: Sequence[DimVector], box: Box) -> List[DimVector]:
    """Elements of the N0*-span of ``generators`` that lie in the box.

    Sums only grow, so anything leaving the box can be discarded; the
    inf-multiples of generators are added as extra generators.
    """
    gens = [tuple(g) for g in generators]
    gens += [inf_scale(g) for g in gens]
    zero = (0,) * box.k
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = add(x, g)
                if y in box and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return [x for x in box if x in seen]
