"""Exact integer and rational linear algebra on lists of Python ints.

Matrices are lists of rows. Nothing here touches floating point, and every
intermediate is an unbounded int or a ``fractions.Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]


def _copy(m):
    return [list(r) for r in m]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][t] * b[t][j] for t in range(inner)) for j in range(cols)]
            for i in range(len(a))]


def transpose(m, ncols: Optional[int] = None):
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def vec_dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def primitive(v: Sequence) -> List[int]:
    """Scale a rational vector to the primitive integer vector on its ray.

    The sign is kept; the zero vector maps to itself.
    """
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    return [x // g for x in ints]


# --- Hermite normal form -------------------------------------------------

def hnf_with_transform(rows: Sequence[Sequence[int]], ncols: int) -> Tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U * rows = H``. ``H`` keeps
    all rows (zero rows at the bottom); the nonzero rows are in echelon form
    with positive pivots and entries above each pivot reduced into
    ``[0, pivot)``.
    """
    h = _copy(rows)
    n = len(h)
    u = identity(n)
    r = 0
    for c in range(ncols):
        if r >= n:
            break
        # gcd-combine column c into row r
        for i in range(r + 1, n):
            if h[i][c] == 0:
                continue
            a, b = h[r][c], h[i][c]
            g, s, t = xgcd(a, b)
            p, q = a // g, b // g
            hr, hi = h[r], h[i]
            h[r] = [s * x + t * y for x, y in zip(hr, hi)]
            h[i] = [-q * x + p * y for x, y in zip(hr, hi)]
            ur, ui = u[r], u[i]
            u[r] = [s * x + t * y for x, y in zip(ur, ui)]
            u[i] = [-q * x + p * y for x, y in zip(ur, ui)]
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        piv = h[r][c]
        for i in range(r):
            q = h[i][c] // piv
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return h, u


def hnf(rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Canonical basis (nonzero HNF rows) of the lattice spanned by ``rows``."""
    h, _ = hnf_with_transform(rows, ncols)
    return [row for row in h if any(row)]


def pivots(basis: Sequence[Sequence[int]]) -> List[int]:
    out = []
    for row in basis:
        for j, x in enumerate(row):
            if x:
                out.append(j)
                break
    return out


def lattice_coordinates(basis: Sequence[Sequence[int]], v: Sequence[int]) -> Optional[List[int]]:
    """Integer coordinates of ``v`` in an HNF ``basis``, or None if v is not in the lattice."""
    rest = list(v)
    coords = []
    for row, p in zip(basis, pivots(basis)):
        q, rem = divmod(rest[p], row[p])
        if rem:
            return None
        coords.append(q)
        if q:
            rest = [x - q * y for x, y in zip(rest, row)]
    if any(rest):
        return None
    return coords


def left_kernel(m: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Basis of the integer lattice {c : c * m = 0} (as HNF rows)."""
    nrows = len(m)
    if nrows == 0:
        return []
    h, u = hnf_with_transform(m, ncols)
    ker = [u[i] for i in range(nrows) if not any(h[i])]
    return hnf(ker, nrows)


def integer_kernel(m: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Basis of {x in Z^ncols : m x = 0}."""
    return left_kernel(transpose(m, ncols), len(m)) if m else identity(ncols)


# --- Smith normal form ---------------------------------------------------

def smith_normal_form(m: Sequence[Sequence[int]], ncols: int) -> Tuple[List[int], Matrix, Matrix]:
    """Return ``(d, U, V)`` with ``U * m * V`` diagonal, diagonal ``d``.

    ``d`` lists the nonzero invariant factors in divisibility order; U and V
    are unimodular (rows x rows and ncols x ncols).
    """
    a = _copy(m)
    nr = len(a)
    u = identity(nr)
    v = identity(ncols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(nr, ncols):
        # smallest nonzero entry in the trailing block becomes the pivot
        best = None
        for i in range(t, nr):
            for j in range(t, ncols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            dirty = False
            piv = a[t][t]
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // piv
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // piv
                    for row in a:
                        row[j] -= q * row[t]
                    for row in v:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        dirty = True
            if dirty:
                # move the smallest remainder in row/column t to the pivot
                best = (t, t)
                for i in range(t + 1, nr):
                    if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                        best = (i, t)
                for j in range(t + 1, ncols):
                    if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                        best = (t, j)
                if best[0] != t:
                    swap_rows(t, best[0])
                if best[1] != t:
                    swap_cols(t, best[1])
                continue
            # divisibility: pivot must divide the rest of the block
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, ncols):
                    if a[i][j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
            u[t] = [x + y for x, y in zip(u[t], u[bad])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    d = [a[i][i] for i in range(min(nr, ncols)) if a[i][i]]
    return d, u, v


def invariant_factors(m: Sequence[Sequence[int]], ncols: int) -> List[int]:
    return smith_normal_form(m, ncols)[0]


def unimodular_inverse(u: Sequence[Sequence[int]]) -> Matrix:
    inv = rational_inverse(u)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


# --- rational linear algebra -------------------------------------------

def rref(rows: Sequence[Sequence], ncols: int) -> Tuple[List[List[Fraction]], List[int]]:
    a = [[Fraction(x) for x in r] for r in rows]
    piv_cols = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], piv_cols


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[List[Fraction]]:
    """Rational basis of {x : rows x = 0}, one vector per free column."""
    red, piv = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, piv):
            x[p] = -row[f]
        basis.append(x)
    return basis


def integer_nullspace(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """Primitive integer vectors spanning {x : rows x = 0} over Q."""
    return [primitive(v) for v in nullspace(rows, ncols)]


def orthogonal_complement(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """Primitive integer basis of span(rows)^perp."""
    return integer_nullspace(rows, ncols)


def rational_inverse(m: Sequence[Sequence]) -> List[List[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    red, piv = rref(aug, 2 * n)
    if piv[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in red[:n]]


def in_span(rows: Sequence[Sequence], v: Sequence, ncols: int) -> bool:
    return rank(list(rows) + [list(v)], ncols) == rank(rows, ncols)
