import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_system
from eqmonoid.eqsystem import EqSystem, member
from eqmonoid.extvec import INF, complement, inf_support, project
from eqmonoid.fixtures import builtin
from eqmonoid.oracle import Box, check_monoid_axioms, enumerate_box, equal_on_box
from eqmonoid.supportsystem import (
    SupportSystem,
    SupportSystemError,
    derived_ss,
    eq_to_ss,
    hide,
    member_MS,
    minimal_supports,
    ss_to_eq,
    support_warnings,
    validate,
)

XY = EqSystem.build(2, equalities=[((1, 0), (0, 1))])


def fs(*xs):
    return frozenset(xs)


def nk2_1():
    return SupportSystem.from_generators(2, (1, 1), {(): [(1, 1)], (1,): [(1,)], (0, 1): []})


def test_validate_examples():
    ok = SupportSystem.from_generators(2, (1, 1), {(): [(1, 1)], (0, 1): []})
    assert validate(ok) == []
    bad_unit = SupportSystem.from_generators(2, (1, 2), {(): [(1, 1)], (0, 1): []})
    (v,) = validate(bad_unit)
    assert v.condition == "i"
    missing = SupportSystem.from_generators(2, (1, 1), {(): [(1, 1)], (0,): [(1,)]})
    vs = validate(missing)
    assert {v.condition for v in vs} == {"iii"}
    assert any(v.witness == (fs(0), (1,)) for v in vs)


def test_validate_projection_condition():
    # p(1,1) = 1 is not in 2N0
    ss = SupportSystem.from_generators(2, (1, 1), {(): [(1, 1)], (0,): [(2,)], (0, 1): []})
    (v,) = validate(ss)
    assert v.condition == "iv"
    a, pa = v.witness
    assert a in ss.monoids[fs()] and pa not in ss.monoids[fs(0)]


def test_validate_missing_empty_set_and_dimensions():
    ss = SupportSystem.from_generators(2, (1, 1), {(0, 1): []})
    assert any(v.condition == "i" for v in validate(ss))
    from eqmonoid.fullaffine import FullAffineMonoid
    wrong = SupportSystem(2, (1, 1), {fs(): FullAffineMonoid.from_generators([[1]], 1)})
    assert "ii" in [v.condition for v in validate(wrong)]


def test_member_ms_examples():
    ss = nk2_1()
    assert member_MS(ss, (3, INF))
    assert not member_MS(ss, (INF, 3))
    assert member_MS(ss, ss.unit)
    assert (2, 2) in ss and (2, 3) not in ss
    with pytest.raises(SupportSystemError):
        member_MS(ss, (1,))


def test_derived_examples():
    d = derived_ss(nk2_1(), {1})
    assert d.k == 1 and set(d.monoids) == {fs(), fs(0)}
    assert d.monoids[fs()].lattice.rows == ((1,),)
    same = derived_ss(nk2_1(), set())
    assert same == nk2_1()
    nk2_2 = eq_to_ss(builtin("nk2-2").system, (1, 1))
    assert set(derived_ss(nk2_2, {0}).monoids) == {fs(), fs(0)}
    with pytest.raises(SupportSystemError):
        derived_ss(nk2_1(), {0})


def test_eq_to_ss_examples():
    ss = eq_to_ss(XY, (1, 1))
    assert set(ss.monoids) == {fs(), fs(0, 1)}
    assert ss.monoids[fs()].lattice.rows == ((1, 1),)
    m1 = eq_to_ss(EqSystem.build(2, equalities=[((2, 0), (1, 1))]), (1, 1))
    assert set(m1.monoids) == {fs(), fs(0), fs(0, 1)}
    assert m1.monoids[fs(0)].lattice.rows == ((1,),)
    par = eq_to_ss(EqSystem.build(2, congruences=[((1, 1), 2)]), (1, 1))
    assert len(par.monoids) == 4
    assert par.monoids[fs()].invariant_factors == [1, 2]
    with pytest.raises(SupportSystemError):
        eq_to_ss(XY, (1, 2))
    with pytest.raises(SupportSystemError):
        eq_to_ss(XY, (0, 0))


def test_hide_examples():
    box = Box(2, 5)
    a = hide(XY, (1, 1), {0}, EqSystem(1))
    assert str(a) == "2t1 = t1 + t2"
    both = hide(XY, (1, 1), {0, 1}, EqSystem(0))
    assert str(both) == "2t1 = t1 + t2\nt1 + t2 = 2t2"
    assert set(enumerate_box(both, box)) == {(n, n) for n in range(6)} | {(INF, INF)}
    k2 = hide(EqSystem(2), (1, 2), {0}, EqSystem.build(1, congruences=[((1,), 2)]))
    assert set(enumerate_box(k2, box)) == {x for x in box if x[1] is INF or x[1] % 2 == 0}


def test_hide_rejects_bad_inputs():
    with pytest.raises(SupportSystemError):
        hide(XY, (1, 1), set(), EqSystem(2))
    with pytest.raises(SupportSystemError):
        hide(XY, (1, 1), {2}, EqSystem(1))
    with pytest.raises(SupportSystemError):
        hide(XY, (1, 2), {0}, EqSystem(1))
    with pytest.raises(SupportSystemError):
        hide(XY, (1, 1), {0}, EqSystem(2))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_hide_semantics(seed):
    rng = random.Random(seed)
    sys_a, unit = random_system(rng, kmax=3)
    k = sys_a.k
    I = frozenset(rng.sample(range(k), rng.randint(1, k)))
    keep = complement(k, I)
    sys_b = EqSystem.build(len(keep), congruences=[((1,) * len(keep), 2)]) \
        if sum(unit[j] for j in keep) % 2 == 0 else EqSystem(len(keep))
    out = hide(sys_a, unit, I, sys_b)
    assert member(out, unit)
    for x in Box(k, 3):
        px = project(x, keep)
        expected = member(sys_b, px) and (member(sys_a, x) or all(x[i] is INF for i in I))
        assert member(out, x) == expected, x


def test_ss_to_eq_examples():
    box = Box(2, 5)
    assert equal_on_box(ss_to_eq(nk2_1()), EqSystem.build(2, equalities=[((1, 1), (0, 2))]), box)
    nk2_2 = SupportSystem.from_generators(2, (1, 1), {(): [(1, 1)], (0,): [(1,)], (1,): [(1,)], (0, 1): []})
    assert equal_on_box(ss_to_eq(nk2_2), EqSystem.build(2, equalities=[((2, 1), (1, 2))]), box)
    nk2_0 = SupportSystem.from_generators(2, (1, 1), {(): [(1, 1)], (0, 1): []})
    assert equal_on_box(ss_to_eq(nk2_0), XY, box)


def test_ss_to_eq_rejects_invalid():
    bad = SupportSystem.from_generators(2, (1, 1), {(): [(1, 1)], (0,): [(1,)]})
    with pytest.raises(SupportSystemError):
        ss_to_eq(bad)


def test_base_case_needs_cyclic():
    # not a valid system, so only reachable with check=False
    ss = SupportSystem.from_generators(2, (1, 1), {(): [(1, 0), (0, 1)], (0, 1): []})
    with pytest.raises(SupportSystemError, match="cyclic"):
        ss_to_eq(ss, check=False)


def test_support_warnings():
    m1 = eq_to_ss(EqSystem.build(2, equalities=[((2, 0), (1, 1))]), (1, 1))
    assert support_warnings(m1) == ["{1} is only realised as a pure infinite pattern"]
    assert support_warnings(eq_to_ss(XY, (1, 1))) == []


def test_minimal_supports_order():
    ss = eq_to_ss(EqSystem.build(3, congruences=[((1, 1, 1), 3)]), (1, 1, 1))
    assert minimal_supports(ss) == [fs(0), fs(1), fs(2)]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_round_trip_and_decomposition(seed):
    sys, unit = random_system(random.Random(seed), kmax=3)
    ss = eq_to_ss(sys, unit)
    assert validate(ss) == []
    box = Box(sys.k, 3)
    assert equal_on_box(sys, ss, box)
    back = ss_to_eq(ss)
    assert equal_on_box(sys, back, box)
    members = enumerate_box(ss, box)
    assert check_monoid_axioms(members, box).ok
    # M(S) = A_empty ∪ union of the pieces above the minimal supports
    A0 = ss.monoids[frozenset()]
    for x in box:
        pieces = []
        for I in minimal_supports(ss):
            if I == frozenset(range(sys.k)):
                pieces.append(I <= inf_support(x))
            elif I <= inf_support(x):
                pieces.append(member_MS(derived_ss(ss, I), project(x, complement(sys.k, I))))
        in_a0 = INF not in x and x in A0
        assert member_MS(ss, x) == (in_a0 or any(pieces))
