"""Arithmetic over N0* = N0 + {inf} and vectors over it.

Finite values are plain Python ints (unbounded). The infinite value is the
singleton ``INF``; it is never encoded as a large integer or a float.
Vectors are tuples whose entries are ints >= 0 or ``INF``.
"""
from __future__ import annotations

from typing import Iterable, Sequence, Union


class Infinity:
    """The absorbing element of N0*."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    __str__ = __repr__

    def __reduce__(self):
        return (Infinity, ())

    def __hash__(self):
        return hash("eqmonoid.INF")

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __add__(self, other):
        if other is self or _is_nat(other):
            return self
        return NotImplemented

    __radd__ = __add__

    def __mul__(self, other):
        # inf * 0 = 0, inf * n = inf for n > 0
        if other is self:
            return self
        if _is_nat(other):
            return self if other > 0 else 0
        return NotImplemented

    __rmul__ = __mul__

    def __lt__(self, other):
        if other is self or _is_nat(other):
            return False
        return NotImplemented

    def __le__(self, other):
        if other is self:
            return True
        if _is_nat(other):
            return False
        return NotImplemented

    def __gt__(self, other):
        if other is self:
            return False
        if _is_nat(other):
            return True
        return NotImplemented

    def __ge__(self, other):
        if other is self or _is_nat(other):
            return True
        return NotImplemented

    def __floordiv__(self, other):
        # convention inf / m = inf
        if _is_nat(other) and other > 0:
            return self
        return NotImplemented


INF = Infinity()

ExtNat = Union[int, Infinity]
DimVector = tuple


def _is_nat(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool) and v >= 0


def is_extnat(v) -> bool:
    return v is INF or _is_nat(v)


def as_vector(entries: Iterable) -> DimVector:
    """Validate and freeze a sequence of N0* values."""
    out = []
    for e in entries:
        if isinstance(e, str):
            e = parse_extnat(e)
        elif isinstance(e, bool):
            raise TypeError("booleans are not N0* values")
        elif isinstance(e, float) and e == float("inf"):
            e = INF
        if not is_extnat(e):
            raise ValueError(f"not an element of N0*: {e!r}")
        out.append(e)
    return tuple(out)


def parse_extnat(token: str) -> ExtNat:
    token = token.strip()
    if token in ("inf", "∞"):
        return INF
    if not token.isdigit():
        raise ValueError(f"bad N0* token {token!r}")
    return int(token)


def parse_vector(text: str) -> DimVector:
    """Parse whitespace- or comma-separated tokens, e.g. ``"3 inf 0"``."""
    return tuple(parse_extnat(t) for t in text.replace(",", " ").split())


def format_extnat(v: ExtNat) -> str:
    return "inf" if v is INF else str(v)


def format_vector(x: Sequence[ExtNat]) -> str:
    return " ".join(format_extnat(v) for v in x)


def is_finite(x: Sequence[ExtNat]) -> bool:
    return all(v is not INF for v in x)


def add(x: Sequence[ExtNat], y: Sequence[ExtNat]) -> DimVector:
    if len(x) != len(y):
        raise ValueError("length mismatch")
    return tuple(a + b for a, b in zip(x, y))


def scale(c: ExtNat, x: Sequence[ExtNat]) -> DimVector:
    return tuple(c * v for v in x)


def leq(x: Sequence[ExtNat], y: Sequence[ExtNat]) -> bool:
    """Componentwise order; the all-inf vector is the top element."""
    return all(a <= b for a, b in zip(x, y))


def dot(row: Sequence[int], x: Sequence[ExtNat]) -> ExtNat:
    """sum row_i * x_i with inf*0 = 0 and inf*n = inf for n > 0."""
    if len(row) != len(x):
        raise ValueError(f"length mismatch: row has {len(row)}, vector has {len(x)}")
    total = 0
    for c, v in zip(row, x):
        if c < 0:
            raise ValueError("coefficients must be nonnegative")
        if c == 0:
            continue
        if v is INF:
            return INF
        total += c * v
    return total


def support(x: Sequence[ExtNat]) -> frozenset:
    return frozenset(i for i, v in enumerate(x) if v != 0)


def inf_support(x: Sequence[ExtNat]) -> frozenset:
    return frozenset(i for i, v in enumerate(x) if v is INF)


def support_data(x: Sequence[ExtNat]) -> tuple[frozenset, frozenset]:
    """Return (supp, inf_supp) as 0-based index sets."""
    return support(x), inf_support(x)


def star(x: Sequence[ExtNat]) -> DimVector:
    """x*: inf on the infinite support of x, 0 elsewhere."""
    return tuple(INF if v is INF else 0 for v in x)


def inf_scale(x: Sequence[ExtNat]) -> DimVector:
    """inf * x: inf on the support of x, 0 elsewhere."""
    return tuple(INF if v != 0 else 0 for v in x)


def pattern(k: int, indices: Iterable[int]) -> DimVector:
    """The vector that is inf on ``indices`` and 0 elsewhere."""
    idx = set(indices)
    return tuple(INF if i in idx else 0 for i in range(k))


def project(x: Sequence[ExtNat], keep: Sequence[int]) -> DimVector:
    return tuple(x[i] for i in keep)


def complement(k: int, indices: Iterable[int]) -> tuple[int, ...]:
    idx = set(indices)
    return tuple(i for i in range(k) if i not in idx)


def format_index_set(s: Iterable[int]) -> str:
    """1-based rendering used in documents and CLI output: ``{1,3}``."""
    return "{" + ",".join(str(i + 1) for i in sorted(s)) + "}"


def index_set_key(s: Iterable[int]) -> str:
    """Comma-joined 1-based indices; the empty set is ``""``."""
    return ",".join(str(i + 1) for i in sorted(s))


def parse_index_set(key) -> frozenset:
    """Accept a key string (``"1,2"``) or a list of 1-based ints."""
    if isinstance(key, str):
        parts = [p for p in key.replace(" ", "").split(",") if p]
        items = [int(p) for p in parts]
    else:
        items = [int(p) for p in key]
    if any(i < 1 for i in items):
        raise ValueError("index sets are 1-based")
    return frozenset(i - 1 for i in items)


def subset_sort_key(s: Iterable[int]) -> tuple:
    """Order subsets by size, then lexicographically by sorted indices."""
    t = tuple(sorted(s))
    return (len(t), t)
