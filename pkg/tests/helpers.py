"""Independent oracles and generators shared by the tests.

Lattice membership here goes through sympy's Smith decomposition, not the
package's own integer linear algebra.
"""
import random
from itertools import product
from math import prod

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import smith_normal_decomp

from eqmonoid.eqsystem import EqSystem
from eqmonoid.extvec import INF


def _smith(gens):
    d, _, t = smith_normal_decomp(DM(gens, ZZ))
    d = d.to_Matrix()
    return [int(d[i, i]) for i in range(min(d.shape)) if d[i, i] != 0], t.to_Matrix()


def lattice_index(gens):
    """Product of the nonzero invariant factors of the generator matrix."""
    gens = [list(g) for g in gens if any(g)]
    return prod(_smith(gens)[0]) if gens else 1


def lattice_predicate(gens, k):
    """Membership in the group generated by ``gens`` (integer vectors of length k)."""
    gens = [list(g) for g in gens if any(g)]
    if not gens:
        return lambda x: not any(x)
    diag, t = _smith(gens)
    r = len(diag)
    cols = [[int(t[j, i]) for j in range(k)] for i in range(k)]

    def member(x):
        # x = c G with G = S^-1 D T^-1  <=>  x T = (c S^-1) D
        y = [sum(a * b for a, b in zip(x, col)) for col in cols]
        return all(y[i] % diag[i] == 0 for i in range(r)) and not any(y[r:])

    return member


def brute_monoid(gens, k, bound):
    """L ∩ {0..bound}^k for L generated by ``gens``."""
    member = lattice_predicate(gens, k)
    return {x for x in product(range(bound + 1), repeat=k) if member(x)}


def brute_fas(gens, k, bound, radius=None):
    """Box points of A + inf * A, A = L ∩ N0^k, searching A inside {0..radius}^k.

    The default radius scales with the lattice index, since witnesses of a
    support can need entries that large.
    """
    if radius is None:
        radius = max(30, 2 * lattice_index(gens) + bound)
    elems = brute_monoid(gens, k, radius)
    supports = {frozenset(i for i, v in enumerate(a) if v) for a in elems}
    shadows = {}
    for a in elems:
        for I in supports:
            shadows.setdefault(I, set()).add(tuple(0 if i in I else v for i, v in enumerate(a)))
    out = set()
    vals = list(range(bound + 1)) + [INF]
    for x in product(vals, repeat=k):
        I = frozenset(i for i, v in enumerate(x) if v is INF)
        if I not in supports:
            continue
        finite = tuple(0 if i in I else v for i, v in enumerate(x))
        if finite in shadows[I]:
            out.add(x)
    return out


def random_lattice(rng: random.Random, kmax=4, lo=-3, hi=3):
    k = rng.randint(1, kmax)
    n = rng.randint(1, k + 1)
    return k, [[rng.randint(lo, hi) for _ in range(k)] for _ in range(n)]


def random_system(rng: random.Random, kmax=4, coeff=3):
    """A random system with unit (1, u2, ..); u1 = 1 lets rows be fixed up."""
    k = rng.randint(2, kmax)
    unit = (1,) + tuple(rng.randint(1, 2) for _ in range(k - 1))
    congs, eqs = [], []
    for _ in range(rng.randint(0, 2)):
        m = rng.randint(2, 3)
        d = [rng.randint(0, coeff) for _ in range(k)]
        d[0] += -sum(a * b for a, b in zip(d, unit)) % m
        congs.append((tuple(d), m))
    for _ in range(rng.randint(0, 2)):
        a = [rng.randint(0, coeff) for _ in range(k)]
        b = [rng.randint(0, coeff) for _ in range(k)]
        gap = sum(x * u for x, u in zip(a, unit)) - sum(x * u for x, u in zip(b, unit))
        if gap > 0:
            b[0] += gap
        else:
            a[0] -= gap
        eqs.append((tuple(a), tuple(b)))
    return EqSystem.build(k, congs, eqs), unit
