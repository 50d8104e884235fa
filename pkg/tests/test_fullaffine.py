import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from helpers import brute_fas, brute_monoid, lattice_predicate, random_lattice
from eqmonoid.eqsystem import EqSystem, member
from eqmonoid.extvec import INF
from eqmonoid.fullaffine import (
    FullAffineMonoid,
    LatticeBasis,
    fas_system,
    lattice_from_generators,
    lattice_of_system,
    minimal_orthogonal_family,
    orthogonal_has_positive,
    positive_kernel_trivial,
    sign_family,
)
from eqmonoid.oracle import Box, check_monoid_axioms, enumerate_box, fullness_check

PARITY = [[1, 1], [0, 2]]


def solutions(sys, k, bound):
    return {x for x in product(range(bound + 1), repeat=k) if member(sys, x)}


def test_lattice_from_generators():
    assert lattice_from_generators([[1, 1]]).rows == ((1, 1),)
    L = lattice_from_generators([[2, 0], [0, 2], [1, 1]])
    assert L.rank == 2
    assert all(g in L for g in ([2, 0], [0, 2], [1, 1]))
    assert [1, 0] not in L
    assert lattice_from_generators([], 3).rank == 0


def test_canonical_form_equality():
    a = lattice_from_generators([[1, 1], [0, 2]])
    b = lattice_from_generators([[2, 0], [1, 1], [3, 5]])
    assert a == b and hash(a) == hash(b)
    assert a != lattice_from_generators([[1, 0], [0, 1]])


def test_defining_system_examples():
    par = FullAffineMonoid.from_generators(PARITY)
    assert str(par.defining_system) == "t1 + t2 in 2N0*"
    diag = FullAffineMonoid.from_generators([[1, 1]])
    (eq,) = diag.defining_system.equalities
    assert {eq.lhs, eq.rhs} == {(1, 0), (0, 1)}
    assert not diag.defining_system.congruences
    full = FullAffineMonoid.from_generators([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert len(full.defining_system) == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_defining_system_matches_lattice(seed):
    k, gens = random_lattice(random.Random(seed))
    A = FullAffineMonoid.from_generators(gens, k)
    sys = A.defining_system
    for e in sys.equalities:
        assert not any(a and b for a, b in zip(e.lhs, e.rhs))
    assert solutions(sys, k, 5) == brute_monoid(gens, k, 5)


def test_normalisation_keeps_the_monoid():
    # Z(1,-1) meets N0^2 only in 0; the stored lattice is the group of A
    A = FullAffineMonoid.from_generators([[1, -1]])
    assert A.rank == 0
    assert (0, 0) in A and (1, 1) not in A
    B = FullAffineMonoid.from_generators([[1, -1, 0], [0, 0, 1]])
    assert B.lattice == lattice_from_generators([[0, 0, 1]])


def test_lattice_of_system():
    sys = EqSystem.build(2, congruences=[((1, 1), 2)])
    assert lattice_of_system(sys) == lattice_from_generators(PARITY)
    sys = EqSystem.build(3, congruences=[((1, 2, 0), 3)], equalities=[((1, 0, 0), (0, 0, 1))])
    A = FullAffineMonoid.from_system(sys)
    assert {x for x in product(range(6), repeat=3) if x in A} == solutions(sys, 3, 5)


def test_duality_examples():
    assert positive_kernel_trivial([[1, -1]], 2)
    assert not positive_kernel_trivial([[1, 1]], 2)
    assert not positive_kernel_trivial([[1, 0], [0, 1]], 2)
    assert orthogonal_has_positive([[1, -1]], 2)
    assert not orthogonal_has_positive([[1, 1]], 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda d: st.tuples(
    st.just(d), st.lists(st.lists(st.integers(-3, 3), min_size=d, max_size=d), max_size=d))))
def test_duality(case):
    d, V = case
    assert positive_kernel_trivial(V, d) == orthogonal_has_positive(V, d)


def test_support_set_examples():
    e = frozenset()
    assert FullAffineMonoid.from_generators([[1, 1]]).support_set == {e, frozenset({0, 1})}
    everything = {e, frozenset({0}), frozenset({1}), frozenset({0, 1})}
    assert FullAffineMonoid.from_generators([[1, 0], [0, 1]]).support_set == everything
    par = FullAffineMonoid.from_generators(PARITY)
    assert par.support_set == everything
    assert par.support_witness({0}) == (2, 0)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_support_witnesses(seed):
    k, gens = random_lattice(random.Random(seed), kmax=3)
    A = FullAffineMonoid.from_generators(gens, k)
    member_ = lattice_predicate(gens, k)
    for I in A.support_set:
        w = A.support_witness(I)
        assert member_(w) and min(w) >= 0
        assert {i for i, v in enumerate(w) if v} == I
    # supports seen on a box are all predicted
    seen = {frozenset(i for i, v in enumerate(a) if v) for a in brute_monoid(gens, k, 6)}
    assert seen <= A.support_set


def test_minimal_orthogonal_family_examples():
    diag = FullAffineMonoid.from_generators([[1, 1]])
    assert minimal_orthogonal_family(diag, [[1, -1]]) == [[1, -1]]
    fam = minimal_orthogonal_family(diag, [])
    assert len(fam) == 1 and sorted(fam[0]) == [-1, 1]
    C = FullAffineMonoid.from_generators([[1, 1, 0], [0, 0, 1]])
    fam = minimal_orthogonal_family(C, [[1, -1, 0]])
    assert fam == [[1, -1, 0]]
    assert sign_family(fam, 3) == {frozenset(s) for s in ({2}, {0, 1}, {0, 1, 2})}
    with pytest.raises(ValueError):
        minimal_orthogonal_family(diag, [[1, 0]])


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_minimal_family_hits_supports(seed):
    k, gens = random_lattice(random.Random(seed), kmax=4)
    A = FullAffineMonoid.from_generators(gens, k)
    fam = minimal_orthogonal_family(A, [])
    assert sign_family(fam, k) == {I for I in A.support_set if I}
    for v in fam:
        assert all(sum(a * b for a, b in zip(v, r)) == 0 for r in A.lattice.rows)


def test_saturation_factor():
    par = FullAffineMonoid.from_generators(PARITY)
    assert par.invariant_factors == [1, 2]
    assert par.saturation_factor == 2
    rng = random.Random(8)
    for _ in range(10):
        k, gens = random_lattice(rng, kmax=3)
        A = FullAffineMonoid.from_generators(gens, k)
        d = A.saturation_factor
        for x in product(range(5), repeat=k):
            if list(x) in A.saturation:
                assert tuple(d * v for v in x) in A


def test_fullness_on_boxes():
    rng = random.Random(12)
    for _ in range(10):
        k, gens = random_lattice(rng, kmax=3)
        A = FullAffineMonoid.from_generators(gens, k)
        box = Box(k, 4, False)
        assert fullness_check([x for x in box if x in A], box).ok
        for I in A.support_set:
            if I and len(I) < k:
                P = A.project(I)
                pbox = Box(P.k, 4, False)
                assert fullness_check([x for x in pbox if x in P], pbox).ok


def test_fas_examples():
    diag = fas_system(FullAffineMonoid.from_generators([[1, 1]]))
    box = Box(2, 6)
    assert set(enumerate_box(diag, box)) == {(n, n) for n in range(7)} | {(INF, INF)}
    full = fas_system(FullAffineMonoid.from_generators([[1, 0], [0, 1]]))
    assert set(enumerate_box(full, box)) == set(box)
    par = fas_system(FullAffineMonoid.from_generators(PARITY))
    target = EqSystem.build(2, congruences=[((1, 1), 2)])
    assert set(enumerate_box(par, box)) == set(enumerate_box(target, box))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_fas_random(seed):
    k, gens = random_lattice(random.Random(seed), kmax=3, lo=-2, hi=2)
    sys = fas_system(FullAffineMonoid.from_generators(gens, k))
    box = Box(k, 4)
    members = enumerate_box(sys, box)
    assert set(members) == brute_fas(gens, k, 4)
    assert check_monoid_axioms(members, box).ok
    assert {x for x in members if INF not in x} == brute_monoid(gens, k, 4)


def test_project_and_restrict():
    L = LatticeBasis(3, [[1, 1, 0], [0, 0, 2]])
    assert L.project([0, 2]) == lattice_from_generators([[1, 0], [0, 2]])
    assert L.restrict_to_coordinates([2]) == lattice_from_generators([[0, 0, 2]])
