"""JSON monoid documents: the single wire format of the command line tool.

A document has ``k``, an optional ``unit`` and exactly one payload:

* equations: ``congruences`` ``[{"coeffs", "modulus"}]`` and/or
  ``equalities`` ``[{"lhs", "rhs"}]`` (no payload at all means the empty
  system);
* ``lattice``: ``{"generators": [...]}``, the full affine monoid
  ``L ∩ N0^k`` for the group L they generate;
* ``support_system``: ``{"supports": [[1-based indices], ...],
  "monoids": {"1,2": block, ...}}`` where each block is a lattice or
  equation block over the complementary coordinates and ``""`` keys the
  empty set;
* ``plan``: a nested realization plan;
* ``builtin``: ``{"name": ..., "n": ...}``.

Vector entries may be ints or the string ``"inf"``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Callable, Optional

from .eqsystem import EqSystem, member
from .extvec import INF, format_extnat, index_set_key, parse_index_set, subset_sort_key
from .fixtures import FixtureEntry, builtin, names
from .fullaffine import FullAffineMonoid
from .realization import Plan, evaluate_plan, plan_from_dict, plan_to_dict
from .supportsystem import SupportSystem, member_MS

PAYLOADS = ("equations", "lattice", "support_system", "plan", "builtin")


class DocumentError(ValueError):
    pass


@dataclass
class MonoidDocument:
    k: int
    kind: str
    payload: Any
    unit: Optional[tuple] = None
    extra: Optional[dict] = None

    def predicate(self) -> Callable:
        if self.kind == "equations":
            return lambda x: member(self.payload, x)
        if self.kind == "lattice":
            return lambda x: all(v is not INF for v in x) and tuple(x) in self.payload
        if self.kind == "support_system":
            return lambda x: member_MS(self.payload, x)
        if self.kind == "plan":
            return lambda x: evaluate_plan(self.payload, x)
        return self.payload.predicate

    def system(self) -> EqSystem:
        """The equation system behind the document, when there is one."""
        if self.kind == "equations":
            return self.payload
        if self.kind == "builtin" and self.payload.system is not None:
            return self.payload.system
        raise DocumentError(f"a {self.kind} document does not carry an equation system")


def _int(v, what="value"):
    if isinstance(v, bool) or not isinstance(v, int):
        raise DocumentError(f"{what} must be an integer, got {v!r}")
    return v


def _nat_row(row, k, what):
    if not isinstance(row, list) or len(row) != k:
        raise DocumentError(f"{what} must be a list of length {k}, got {row!r}")
    out = tuple(_int(v, what) for v in row)
    if any(v < 0 for v in out):
        raise DocumentError(f"{what} must be nonnegative, got {row!r}")
    return out


def _equations(d: dict, k: int) -> EqSystem:
    congs, eqs = [], []
    for c in d.get("congruences", []):
        congs.append((_nat_row(c.get("coeffs"), k, "congruence coeffs"), _int(c.get("modulus"), "modulus")))
    for e in d.get("equalities", []):
        eqs.append((_nat_row(e.get("lhs"), k, "equality lhs"), _nat_row(e.get("rhs"), k, "equality rhs")))
    try:
        return EqSystem.build(k, congs, eqs)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def _lattice(d: dict, k: int) -> FullAffineMonoid:
    gens = d.get("generators")
    if not isinstance(gens, list):
        raise DocumentError("lattice block needs a generators list")
    rows = []
    for g in gens:
        if not isinstance(g, list) or len(g) != k:
            raise DocumentError(f"generator {g!r} must have length {k}")
        rows.append([_int(v, "generator entry") for v in g])
    return FullAffineMonoid.from_generators(rows, k)


def _monoid_block(d: dict, k: int) -> FullAffineMonoid:
    if not isinstance(d, dict):
        raise DocumentError(f"monoid block must be an object, got {d!r}")
    if "generators" in d:
        return _lattice(d, k)
    return FullAffineMonoid.from_system(_equations(d, k))


def _support_system(d: dict, k: int, unit) -> SupportSystem:
    if unit is None:
        raise DocumentError("a support_system document needs a unit")
    try:
        supports = [parse_index_set(s) for s in d.get("supports", [])]
        blocks = {parse_index_set(key): v for key, v in d.get("monoids", {}).items()}
    except (ValueError, TypeError) as exc:
        raise DocumentError(f"bad index set: {exc}") from None
    full = frozenset(range(k))
    mons = {}
    for I in supports:
        if any(i >= k for i in I):
            raise DocumentError(f"index set {index_set_key(I)!r} exceeds k={k}")
        if I in blocks:
            mons[I] = _monoid_block(blocks[I], k - len(I))
        elif I == full:
            mons[I] = FullAffineMonoid.from_generators([], 0)
        else:
            raise DocumentError(f"no monoid given for support {{{index_set_key(I)}}}")
    stray = set(blocks) - set(mons)
    if stray:
        raise DocumentError(f"monoids given for sets not in supports: "
                            f"{sorted('{' + index_set_key(s) + '}' for s in stray)}")
    return SupportSystem(k, unit, mons)


def from_dict(d: dict) -> MonoidDocument:
    if not isinstance(d, dict):
        raise DocumentError("document must be a JSON object")
    present = [p for p in ("lattice", "support_system", "plan", "builtin") if p in d]
    if "congruences" in d or "equalities" in d:
        present.insert(0, "equations")
    if len(present) > 1:
        raise DocumentError(f"document has several payloads: {', '.join(present)}")
    kind = present[0] if present else "equations"

    if kind == "builtin":
        b = d["builtin"]
        if isinstance(b, str):
            b = {"name": b}
        try:
            fx: FixtureEntry = builtin(b["name"], b.get("n"))
        except (KeyError, ValueError) as exc:
            raise DocumentError(str(exc)) from None
        k = d.get("k", fx.k)
        if k != fx.k:
            raise DocumentError(f"builtin {fx.name} has k={fx.k}, document says {k}")
        unit = tuple(d["unit"]) if "unit" in d else fx.unit
        return MonoidDocument(fx.k, kind, fx, unit)

    if "k" not in d:
        raise DocumentError("document needs k")
    k = _int(d["k"], "k")
    if k < 0:
        raise DocumentError("k must be nonnegative")
    unit = _nat_row(d["unit"], k, "unit") if "unit" in d else None
    if kind == "equations":
        payload = _equations(d, k)
    elif kind == "lattice":
        payload = _lattice(d["lattice"], k)
    elif kind == "support_system":
        payload = _support_system(d["support_system"], k, unit)
    else:
        try:
            payload = plan_from_dict(d["plan"])
        except ValueError as exc:
            raise DocumentError(str(exc)) from None
        if payload.dim != k:
            raise DocumentError(f"plan has dimension {payload.dim}, document says k={k}")
    return MonoidDocument(k, kind, payload, unit)


def loads(text: str) -> MonoidDocument:
    try:
        return from_dict(json.loads(text))
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None


def builtin_document(name: str, n: Optional[int] = None) -> MonoidDocument:
    return from_dict({"builtin": {"name": name, "n": n}})


# serialization

def _vec(x):
    return [v if isinstance(v, int) else format_extnat(v) for v in x]


def equations_dict(sys: EqSystem) -> dict:
    out = {}
    if sys.congruences:
        out["congruences"] = [{"coeffs": list(c.coeffs), "modulus": c.modulus} for c in sys.congruences]
    if sys.equalities:
        out["equalities"] = [{"lhs": list(e.lhs), "rhs": list(e.rhs)} for e in sys.equalities]
    return out


def support_system_dict(ss: SupportSystem) -> dict:
    order = sorted(ss.monoids, key=subset_sort_key)
    return {
        "supports": [[i + 1 for i in sorted(I)] for I in order],
        "monoids": {index_set_key(I): {"generators": [list(r) for r in ss.monoids[I].lattice.rows]}
                    for I in order},
    }


def to_dict(doc: MonoidDocument) -> dict:
    out: dict = {"k": doc.k}
    if doc.unit is not None:
        out["unit"] = _vec(doc.unit)
    if doc.kind == "equations":
        out.update(equations_dict(doc.payload))
    elif doc.kind == "lattice":
        out["lattice"] = {"generators": [list(r) for r in doc.payload.lattice.rows]}
    elif doc.kind == "support_system":
        out["support_system"] = support_system_dict(doc.payload)
    elif doc.kind == "plan":
        out["plan"] = plan_to_dict(doc.payload)
    else:
        fx = doc.payload
        base, _, tail = fx.name.rpartition("-")
        if fx.name in names() or not tail.isdigit():
            out["builtin"] = {"name": fx.name}
        else:
            out["builtin"] = {"name": base, "n": int(tail)}
    if doc.extra:
        out.update(doc.extra)
    return out


def _render(v, depth=0) -> str:
    # lists of scalars stay on one line, everything else is indented
    pad = "  " * (depth + 1)
    if isinstance(v, dict):
        if not v:
            return "{}"
        items = [f"{pad}{json.dumps(key, ensure_ascii=False)}: {_render(val, depth + 1)}" for key, val in v.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * depth + "}"
    if isinstance(v, list) and any(isinstance(e, (dict, list)) for e in v):
        if all(isinstance(e, list) and not any(isinstance(f, (dict, list)) for f in e) for e in v):
            return json.dumps(v, ensure_ascii=False)
        items = [pad + _render(e, depth + 1) for e in v]
        return "[\n" + ",\n".join(items) + "\n" + "  " * depth + "]"
    return json.dumps(v, ensure_ascii=False)


def dumps(doc: MonoidDocument) -> str:
    return _render(to_dict(doc)) + "\n"


def equations_document(sys: EqSystem, unit=None) -> MonoidDocument:
    return MonoidDocument(sys.k, "equations", sys, tuple(unit) if unit is not None else None)


def support_document(ss: SupportSystem) -> MonoidDocument:
    return MonoidDocument(ss.k, "support_system", ss, ss.unit)


def plan_document(plan: Plan, unit=None, extra=None) -> MonoidDocument:
    return MonoidDocument(plan.dim, "plan", plan, tuple(unit) if unit is not None else None, extra)
