import random

import pytest

from codegroups.affine import (
    AffineElement,
    act,
    affine_from_json,
    affine_identity,
    affine_to_json,
    compose,
    element_order,
    enumerate_gl,
    gl_tables,
    gl_two_power_max_order,
    inverse,
    power_pow2,
    regular_order_bound,
)
from codegroups.gf2 import GF2Mat, GF2Vec, gl_order, mat_vec, rank

rng = random.Random(0xAFF1)


def rand_el(r):
    while True:
        A = GF2Mat(tuple(rng.randrange(1 << r) for _ in range(r)))
        if rank(A) == r:
            return AffineElement(GF2Vec(rng.randrange(1 << r), r), A)


def test_identity_and_inverse():
    for r in (2, 3, 4):
        e = rand_el(r)
        i = affine_identity(r)
        assert compose(e, i) == e and compose(i, e) == e
        assert compose(e, inverse(e)) == i
        assert compose(inverse(e), e) == i


def test_compose_is_associative():
    for _ in range(40):
        r = rng.choice((2, 3, 4))
        e1, e2, e3 = rand_el(r), rand_el(r), rand_el(r)
        assert compose(compose(e3, e2), e1) == compose(e3, compose(e2, e1))


def test_action_is_homomorphism():
    for _ in range(40):
        r = rng.choice((2, 3, 4))
        e1, e2 = rand_el(r), rand_el(r)
        v = GF2Vec(rng.randrange(1 << r), r)
        assert act(compose(e2, e1), v) == act(e2, act(e1, v))


def test_act_formula():
    e = rand_el(3)
    v = GF2Vec(6, 3)
    want = GF2Vec(e.a.bits ^ mat_vec(e.A, v).bits, 3)
    assert act(e, v) == want


def test_element_order_matches_brute_force():
    for _ in range(25):
        e = rand_el(3)
        k = element_order(e)
        p = e
        for _ in range(k - 1):
            p = compose(p, e)
        assert p == affine_identity(3)
        assert all(power_pow2(e, s) != affine_identity(3)
                   for s in range(0, 3) if (1 << s) < k and k & (k - 1) == 0)


def test_power_pow2_matches_iterated_composition():
    for _ in range(30):
        r = rng.choice((3, 4))
        e = rand_el(r)
        for s in (0, 1, 2, 3):
            p = affine_identity(r)
            for _ in range(1 << s):
                p = compose(p, e)
            assert power_pow2(e, s) == p


def test_order_bounds():
    assert [regular_order_bound(r) for r in (1, 2, 3, 4, 5, 8)] == \
        [2, 4, 4, 8, 8, 16]
    assert [gl_two_power_max_order(r) for r in (2, 3, 4, 5)] == [2, 4, 4, 8]
    with pytest.raises(ValueError):
        regular_order_bound(0)
    with pytest.raises(ValueError):
        gl_two_power_max_order(1)


def test_json_roundtrip():
    for _ in range(20):
        e = rand_el(4)
        d = affine_to_json(e)
        assert set(d) == {"a", "A"}
        assert affine_from_json(d) == e


def test_enumerate_gl_sizes():
    assert sum(1 for _ in enumerate_gl(2)) == 6
    assert sum(1 for _ in enumerate_gl(3)) == 168
    mats = set()
    for A in enumerate_gl(3):
        assert rank(A) == 3
        mats.add(A.rows)
    assert len(mats) == 168


def test_gl_tables_consistency():
    for r in (2, 3, 4):
        tb = gl_tables(r)
        assert tb.n == 1 << r
        assert tb.ngl == gl_order(r)
        # Steinberg: GL(r,2) has 2^(r(r-1)) unipotent elements
        assert tb.nu == 1 << (r * (r - 1))
        assert tb.acts[tb.unip[tb.iid]] == tuple(range(1 << r))


def test_unipotent_orders_are_two_powers():
    from codegroups.gf2 import mat_unpack

    tb = gl_tables(3)
    for g in tb.unip:
        A = mat_unpack(tb.mats[g], 3)
        k = element_order(AffineElement(GF2Vec(0, 3), A))
        assert k & (k - 1) == 0
