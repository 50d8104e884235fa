"""Registry of named example monoids (positive and negative).

Each predicate is written from the set-builder or generator description of
the monoid, independently of any equation system registered next to it, so
the two can be compared on boxes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from .eqsystem import EqSystem
from .extvec import INF, DimVector, dot


@dataclass(frozen=True)
class FixtureEntry:
    name: str
    k: int
    predicate: Callable[[DimVector], bool]
    citation: str
    full: bool
    definability: str  # "equation-definable" or "unknown"
    system: Optional[EqSystem] = None
    generators: Optional[Tuple[DimVector, ...]] = None
    unit: Optional[Tuple[int, ...]] = None

    @property
    def equation_definable(self) -> bool:
        return self.definability == "equation-definable"

    def __contains__(self, x) -> bool:
        return self.predicate(tuple(x))


def _cong(x, n):
    # x + (n-1) y in n N0*
    v = dot((1, n - 1), x)
    return v is INF or v % n == 0


def _cong_text(n):
    c = "y" if n == 2 else f"{n - 1}y"
    return f"x + {c} in {n}N0*"


def _lin(a, x):
    return dot(a, x)


_FACTORIES: Dict[str, Callable[..., FixtureEntry]] = {}


def _register(name):
    def deco(fn):
        _FACTORIES[name] = fn
        return fn
    return deco


@_register("main-x=y")
def _main_xy():
    return FixtureEntry(
        "main-x=y", 2, lambda x: x[0] == x[1],
        "three-equation example: solutions of x=y are M ∪ {(inf,inf)}",
        True, "equation-definable",
        EqSystem.build(2, equalities=[((1, 0), (0, 1))]),
        ((1, 1),), (1, 1))


@_register("main-2x=x+y")
def _main_2x():
    return FixtureEntry(
        "main-2x=x+y", 2, lambda x: x[0] == x[1] or x[0] is INF,
        "three-equation example: M1 = M ∪ {(inf, n)}",
        True, "equation-definable",
        EqSystem.build(2, equalities=[((2, 0), (1, 1))]),
        ((1, 1), (INF, 0)), (1, 1))


@_register("main-2x+y=x+2y")
def _main_2xy():
    return FixtureEntry(
        "main-2x+y=x+2y", 2, lambda x: x[0] == x[1] or x[0] is INF or x[1] is INF,
        "three-equation example: M1 ∪ {(n, inf)}",
        True, "equation-definable",
        EqSystem.build(2, equalities=[((2, 1), (1, 2))]),
        ((1, 1), (INF, 0), (0, INF)), (1, 1))


@_register("nk2-0")
def _nk2_0():
    return FixtureEntry(
        "nk2-0", 2, lambda x: x[0] == x[1],
        "two simple factors, all projectives free: M0 = (1,1)N0*, the solutions of x=y",
        True, "equation-definable",
        EqSystem.build(2, equalities=[((1, 0), (0, 1))]),
        ((1, 1),), (1, 1))


@_register("nk2-1")
def _nk2_1():
    return FixtureEntry(
        "nk2-1", 2, lambda x: x[0] == x[1] or x[1] is INF,
        "M1 = (1,1)N0* + (0,inf)N0*, the solutions of x+y=2y",
        True, "equation-definable",
        EqSystem.build(2, equalities=[((1, 1), (0, 2))]),
        ((1, 1), (0, INF)), (1, 1))


@_register("nk2-1prime")
def _nk2_1p():
    return FixtureEntry(
        "nk2-1prime", 2, lambda x: x[0] == x[1] or x[0] is INF,
        "M1' = (1,1)N0* + (inf,0)N0*, the solutions of x+y=2x",
        True, "equation-definable",
        EqSystem.build(2, equalities=[((1, 1), (2, 0))]),
        ((1, 1), (INF, 0)), (1, 1))


@_register("nk2-2")
def _nk2_2():
    return FixtureEntry(
        "nk2-2", 2, lambda x: x[0] == x[1] or x[0] is INF or x[1] is INF,
        "M2 = (1,1)N0* + (inf,0)N0* + (0,inf)N0*, the solutions of 2x+y=x+2y",
        True, "equation-definable",
        EqSystem.build(2, equalities=[((2, 1), (1, 2))]),
        ((1, 1), (INF, 0), (0, INF)), (1, 1))


@_register("free")
def _free(n: int = 2):
    if n < 2:
        raise ValueError("free fixture needs n >= 2")
    return FixtureEntry(
        f"free-{n}", 2, lambda x: _cong(x, n),
        f"nonfree f.g. projectives: (1,1)N0* + ({n},0)N0* + (0,{n})N0* = {{{_cong_text(n)}}}",
        True, "equation-definable",
        EqSystem.build(2, congruences=[((1, n - 1), n)]),
        ((1, 1), (n, 0), (0, n)), (1, 1))


@_register("gs-right")
def _gs_right():
    return FixtureEntry(
        "gs-right", 2, lambda x: x[0] >= x[1],
        "non-noetherian example: right monoid {(x,y) : x >= y} = (1,1)N0 + (1,0)N0, extended by N0*-multiples",
        False, "unknown", None, ((1, 1), (1, 0)), (1, 1))


@_register("gs-left")
def _gs_left():
    return FixtureEntry(
        "gs-left", 2, lambda x: x[1] >= x[0],
        "non-noetherian example: left monoid {(x,y) : y >= x} = (1,1)N0 + (0,1)N0, extended by N0*-multiples",
        False, "unknown", None, ((1, 1), (0, 1)), (1, 1))


@_register("noniso-right")
def _noniso_right(n: int = 2):
    return FixtureEntry(
        f"noniso-right-{n}", 2, lambda x: x[0] >= x[1] and _cong(x, n),
        f"N1 = (1,1)N0* + ({n},0)N0* = {{x >= y and {_cong_text(n)}}}",
        False, "unknown", None, ((1, 1), (n, 0)), (1, 1))


@_register("noniso-left")
def _noniso_left(n: int = 2):
    return FixtureEntry(
        f"noniso-left-{n}", 2, lambda x: x[0] <= x[1] and _cong(x, n),
        f"N2 = (1,1)N0* + (0,{n})N0* = {{x <= y and {_cong_text(n)}}}",
        False, "unknown", None, ((1, 1), (0, n)), (1, 1))


@_register("noniso-ii-right")
def _noniso_ii_right(n: int = 2):
    return FixtureEntry(
        f"noniso-ii-right-{n}", 2,
        lambda x: _lin((2, 1), x) >= _lin((1, 2), x) and _cong(x, n),
        f"N1 + (0,inf)N0* = {{2x+y >= 2y+x and {_cong_text(n)}}}",
        False, "unknown", None, ((1, 1), (n, 0), (0, INF)), (1, 1))


@_register("noniso-ii-left")
def _noniso_ii_left(n: int = 2):
    return FixtureEntry(
        f"noniso-ii-left-{n}", 2,
        lambda x: _lin((2, 1), x) <= _lin((1, 2), x) and _cong(x, n),
        f"N2 + (inf,0)N0* = {{2x+y <= 2y+x and {_cong_text(n)}}}",
        False, "unknown", None, ((1, 1), (0, n), (INF, 0)), (1, 1))


@_register("noniso-iii-right")
def _noniso_iii_right():
    return FixtureEntry(
        "noniso-iii-right", 2, lambda x: x[0] == x[1] or x[0] is INF,
        "right monoid (1,1)N0* + (inf,0)N0*: projectives need not be sums of f.g. ones",
        True, "equation-definable",
        EqSystem.build(2, equalities=[((1, 1), (2, 0))]),
        ((1, 1), (INF, 0)), (1, 1))


@_register("noniso-iii-left")
def _noniso_iii_left():
    return FixtureEntry(
        "noniso-iii-left", 2, lambda x: x[0] == x[1],
        "left monoid (1,1)N0*: all left projectives free",
        True, "equation-definable",
        EqSystem.build(2, equalities=[((1, 0), (0, 1))]),
        ((1, 1),), (1, 1))


@_register("nodiv-right")
def _nodiv_right():
    return FixtureEntry(
        "nodiv-right", 3, lambda x: x[0] >= x[1] >= x[2],
        "no divisibility: M1 = {x >= y and y >= z}; b=(1,0,0) < a=(1,1,0) but a-b is not in M1",
        False, "unknown", None, ((1, 1, 1), (1, 1, 0), (1, 0, 0)), (1, 1, 1))


@_register("nodiv-left")
def _nodiv_left():
    return FixtureEntry(
        "nodiv-left", 3, lambda x: x[0] <= x[1] <= x[2],
        "no divisibility, left side: M2 = {y >= x and z >= y}",
        False, "unknown", None, ((1, 1, 1), (0, 1, 1), (0, 0, 1)), (1, 1, 1))


def names():
    return sorted(_FACTORIES)


def builtin(name: str, n: Optional[int] = None) -> FixtureEntry:
    """Look up a fixture; parameterised ones (free, noniso-*) accept ``n``.

    A trailing ``-<n>`` in the name also sets the parameter, e.g. ``free-3``.
    """
    if name not in _FACTORIES:
        base, _, tail = name.rpartition("-")
        if base in _FACTORIES and tail.isdigit():
            name, n = base, int(tail)
        else:
            raise KeyError(f"unknown fixture {name!r}; known: {', '.join(names())}")
    fn = _FACTORIES[name]
    if n is None:
        return fn()
    try:
        return fn(n)
    except TypeError:
        raise ValueError(f"fixture {name!r} takes no parameter") from None


def all_fixtures():
    """One instance of every fixture (parameterised ones at n = 2 and 3)."""
    out = []
    for name in names():
        fn = _FACTORIES[name]
        try:
            out.append(fn(2))
            out.append(fn(3))
        except TypeError:
            out.append(fn())
    return out
