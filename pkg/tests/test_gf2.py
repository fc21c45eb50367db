import random

import numpy as np
import pytest

from codegroups.gf2 import (
    CapExceeded,
    GF2Mat,
    GF2Vec,
    NotInvertible,
    echelon,
    gl_order,
    identity,
    mat_add,
    mat_from_hex,
    mat_inverse,
    mat_mul,
    mat_order,
    mat_pack,
    mat_pow,
    mat_to_hex,
    mat_transpose,
    mat_unpack,
    mat_vec,
    nullspace,
    rank,
    reduce_by,
    solve_affine,
    span,
    vec_add,
    vec_from_bitstring,
    vec_to_bitstring,
    zero_mat,
    zero_vec,
)

rng = random.Random(0xC0DE)


def rand_mat(r):
    return GF2Mat(tuple(rng.randrange(1 << r) for _ in range(r)))


def rand_vec(r):
    return GF2Vec(rng.randrange(1 << r), r)


def to_np(A):
    return np.array([[(row >> j) & 1 for j in range(A.r)] for row in A.rows],
                    dtype=np.uint8)


def test_vec_basic():
    v = GF2Vec(5, 3)
    assert v.bits == 5 and v.m == 3
    assert vec_add(v, v) == zero_vec(3)
    assert vec_add(v, GF2Vec(3, 3)) == GF2Vec(6, 3)
    with pytest.raises(ValueError):
        vec_add(v, GF2Vec(1, 4))


def test_mat_vec_matches_numpy():
    for _ in range(50):
        r = rng.randrange(2, 7)
        A, v = rand_mat(r), rand_vec(r)
        got = mat_vec(A, v)
        vv = np.array([(v.bits >> j) & 1 for j in range(r)], dtype=np.uint8)
        want = to_np(A) @ vv % 2
        assert [(got.bits >> i) & 1 for i in range(r)] == list(want)


def test_mat_mul_matches_numpy():
    for _ in range(50):
        r = rng.randrange(2, 7)
        A, B = rand_mat(r), rand_mat(r)
        got = to_np(mat_mul(A, B))
        assert (got == to_np(A) @ to_np(B) % 2).all()


def test_mat_identities():
    for r in (2, 3, 4):
        I = identity(r)
        A = rand_mat(r)
        assert mat_mul(A, I) == A and mat_mul(I, A) == A
        assert mat_add(A, A) == zero_mat(r)
        assert mat_transpose(mat_transpose(A)) == A
        assert mat_pow(A, 0) == I and mat_pow(A, 1) == A
        assert mat_pow(A, 5) == mat_mul(A, mat_mul(A, mat_mul(A, mat_mul(A, A))))


def test_rank_and_inverse():
    assert rank(identity(4)) == 4
    assert rank(zero_mat(4)) == 0
    for _ in range(30):
        A = rand_mat(4)
        if rank(A) == 4:
            assert mat_mul(A, mat_inverse(A)) == identity(4)
        else:
            with pytest.raises(NotInvertible):
                mat_inverse(A)


def test_gl_order_values():
    assert gl_order(2) == 6
    assert gl_order(3) == 168
    assert gl_order(4) == 20160


def test_mat_order():
    assert mat_order(identity(3)) == 1
    jordan = GF2Mat((3, 6, 12, 8))
    assert mat_order(jordan) == 4
    with pytest.raises(NotInvertible):
        mat_order(zero_mat(3))


def test_order_divides_group_order():
    for _ in range(20):
        A = rand_mat(3)
        if rank(A) < 3:
            continue
        assert gl_order(3) % mat_order(A) == 0


def test_pack_roundtrip():
    for _ in range(20):
        A = rand_mat(4)
        assert mat_unpack(mat_pack(A), 4) == A


def test_hex_and_bitstring_roundtrip():
    for _ in range(20):
        A, v = rand_mat(4), rand_vec(4)
        assert mat_from_hex(mat_to_hex(A), 4) == A
        assert vec_from_bitstring(vec_to_bitstring(v)) == v
    assert vec_to_bitstring(GF2Vec(1, 3)) == "100"
    assert vec_from_bitstring("100").bits == 1


def test_echelon_preserves_span():
    for _ in range(30):
        rows = [rng.randrange(1 << 7) for _ in range(rng.randrange(6))]
        basis = echelon(rows)
        assert set(span(basis)) == set(span(tuple(rows)))
        assert len(set(span(basis))) == 1 << len(basis)
        for w in rows:
            assert reduce_by(basis, w) == 0


def test_reduce_by_membership():
    basis = echelon([0b1100, 0b0011])
    assert reduce_by(basis, 0b1111) == 0
    assert reduce_by(basis, 0b1000) != 0


def test_nullspace():
    for _ in range(30):
        nbits = 6
        rows = tuple(rng.randrange(1 << nbits) for _ in range(4))
        ker = nullspace(rows, nbits)
        for v in span(ker):
            for row in rows:
                assert bin(row & v).count("1") % 2 == 0
        assert len(ker) == nbits - len(echelon(rows))


def test_solve_affine():
    nbits = 5
    for _ in range(40):
        rows = [rng.randrange(1 << nbits) for _ in range(4)]
        x = rng.randrange(1 << nbits)
        rhs = 0
        for i, row in enumerate(rows):
            rhs |= (bin(row & x).count("1") % 2) << i
        sol = solve_affine(rows, rhs, nbits)
        assert sol is not None
        for i, row in enumerate(rows):
            assert bin(row & sol).count("1") % 2 == (rhs >> i) & 1
    # x1 = 0 and x1 = 1 simultaneously has no solution
    assert solve_affine([1, 1], 0b10, 3) is None


def test_cap_exceeded_is_exception():
    assert issubclass(CapExceeded, Exception)
