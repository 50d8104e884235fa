"""Exact rational feasibility: a phase-1 simplex and Fourier-Motzkin elimination.

Both procedures work over ``fractions.Fraction`` only. They are deliberately
independent so that one can be used to cross-check the other.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .intlinalg import nullspace, rref


def simplex_feasible(a_eq: Sequence[Sequence], b_eq: Sequence, nvars: int) -> Optional[List[Fraction]]:
    """Find x >= 0 with ``a_eq x = b_eq``, or return None.

    Phase-1 simplex with one artificial variable per row and Bland's rule,
    so it cannot cycle.
    """
    rows = [[Fraction(x) for x in r] for r in a_eq]
    rhs = [Fraction(x) for x in b_eq]
    if not rows:
        return [Fraction(0)] * nvars
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    m = len(rows)
    n = nvars + m
    # tableau rows: [coeffs..., rhs]
    tab = [rows[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [nvars + i for i in range(m)]
    # objective: minimise sum of artificials -> reduced costs row
    cost = [Fraction(0)] * (n + 1)
    for i in range(m):
        for j in range(n + 1):
            cost[j] -= tab[i][j]
    for j in range(nvars, n):
        cost[j] += 1
    while True:
        enter = next((j for j in range(n) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][n] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # unbounded phase-1 objective cannot happen (bounded below by 0)
            raise ArithmeticError("phase-1 simplex reported unboundedness")
        _pivot(tab, cost, leave, enter)
        basis[leave] = enter
    if cost[n] != 0:
        return None
    x = [Fraction(0)] * nvars
    for i, b in enumerate(basis):
        if b < nvars:
            x[b] = tab[i][n]
    return x


def _pivot(tab, cost, r, c):
    p = tab[r][c]
    tab[r] = [x / p for x in tab[r]]
    for i in range(len(tab)):
        if i != r and tab[i][c] != 0:
            f = tab[i][c]
            tab[i] = [x - f * y for x, y in zip(tab[i], tab[r])]
    if cost[c] != 0:
        f = cost[c]
        cost[:] = [x - f * y for x, y in zip(cost, tab[r])]


def feasible_point(nvars: int,
                   eq: Sequence[Tuple[Sequence, object]] = (),
                   ge: Sequence[Tuple[Sequence, object]] = (),
                   free: bool = True) -> Optional[List[Fraction]]:
    """Find a rational x with ``a.x = b`` for eq and ``a.x >= b`` for ge.

    With ``free=True`` the variables are unrestricted in sign; otherwise
    x >= 0 is added. Solved by reduction to :func:`simplex_feasible`.
    """
    # variables: x = xp - xn (if free), plus one surplus per ge row
    nsplit = 2 * nvars if free else nvars
    total = nsplit + len(ge)
    a_rows, b_vals = [], []

    def expand(a):
        a = [Fraction(v) for v in a]
        return a + [-v for v in a] if free else a

    for a, b in eq:
        a_rows.append(expand(a) + [Fraction(0)] * len(ge))
        b_vals.append(Fraction(b))
    for t, (a, b) in enumerate(ge):
        surplus = [Fraction(0)] * len(ge)
        surplus[t] = Fraction(-1)
        a_rows.append(expand(a) + surplus)
        b_vals.append(Fraction(b))
    sol = simplex_feasible(a_rows, b_vals, total)
    if sol is None:
        return None
    if free:
        return [sol[i] - sol[nvars + i] for i in range(nvars)]
    return sol[:nvars]


# --- Fourier-Motzkin -----------------------------------------------------

def fm_feasible(nvars: int,
                eq: Sequence[Tuple[Sequence, object]] = (),
                ge: Sequence[Tuple[Sequence, object]] = ()) -> Optional[List[Fraction]]:
    """Decide ``a.x = b`` (eq), ``a.x >= b`` (ge) over Q^nvars by elimination.

    Equalities are removed by parametrising their solution set; the
    remaining inequalities go through Fourier-Motzkin elimination. A witness
    is rebuilt by back-substitution. Exponential in the worst case, so meant
    for small dimensions.
    """
    # particular solution + nullspace parametrisation of the equalities
    if eq:
        aug = [[Fraction(v) for v in a] + [Fraction(b)] for a, b in eq]
        red, piv = rref(aug, nvars + 1)
        if nvars in piv:
            return None
        x0 = [Fraction(0)] * nvars
        for row, p in zip(red, piv):
            x0[p] = row[nvars]
        basis = nullspace([r[:nvars] for r in red], nvars)
    else:
        x0 = [Fraction(0)] * nvars
        basis = [[Fraction(int(i == j)) for j in range(nvars)] for i in range(nvars)]
    dim = len(basis)
    # a.(x0 + sum z_j basis_j) >= b  <=>  sum z_j (a.basis_j) >= b - a.x0
    ineqs = []
    for a, b in ge:
        a = [Fraction(v) for v in a]
        coeffs = [sum(ai * bj for ai, bj in zip(a, bv)) for bv in basis]
        rhs = Fraction(b) - sum(ai * xi for ai, xi in zip(a, x0))
        ineqs.append((coeffs, rhs))
    z = _fm_solve(ineqs, dim)
    if z is None:
        return None
    return [x0[i] + sum(z[j] * basis[j][i] for j in range(dim)) for i in range(nvars)]


def _fm_solve(ineqs, dim):
    """Solve c.z >= r over Q^dim; returns a witness or None."""
    stages = []
    cur = [(list(c), r) for c, r in ineqs]
    for v in range(dim - 1, -1, -1):
        pos = [(c, r) for c, r in cur if c[v] > 0]
        neg = [(c, r) for c, r in cur if c[v] < 0]
        zero = [(c, r) for c, r in cur if c[v] == 0]
        stages.append((v, pos, neg))
        nxt = list(zero)
        for cp, rp in pos:
            for cn, rn in neg:
                # cp[v] z_v >= rp - rest_p ; cn[v] z_v >= rn - rest_n
                fp, fn = -cn[v], cp[v]
                c = [fp * a + fn * b for a, b in zip(cp, cn)]
                c[v] = Fraction(0)
                nxt.append((c, fp * rp + fn * rn))
        cur = _dedupe(nxt)
    for c, r in cur:
        if r > 0:  # 0 >= r fails
            return None
    z = [Fraction(0)] * dim
    for v, pos, neg in reversed(stages):
        lo, hi = None, None
        for c, r in pos:
            bound = (r - sum(c[j] * z[j] for j in range(dim) if j != v)) / c[v]
            lo = bound if lo is None or bound > lo else lo
        for c, r in neg:
            bound = (r - sum(c[j] * z[j] for j in range(dim) if j != v)) / c[v]
            hi = bound if hi is None or bound < hi else hi
        if lo is not None and hi is not None:
            z[v] = lo
        elif lo is not None:
            z[v] = lo
        elif hi is not None:
            z[v] = hi
    return z


def _dedupe(ineqs):
    seen = {}
    for c, r in ineqs:
        # normalise by a positive scalar so duplicates collapse
        lead = next((abs(x) for x in c if x != 0), None)
        if lead is None:
            key = (tuple(c), r)
        else:
            key = (tuple(x / lead for x in c), r / lead)
        seen.setdefault(key, (c, r))
    return list(seen.values())
