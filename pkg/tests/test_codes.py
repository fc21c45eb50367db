import random

import pytest

from codegroups import codes
from codegroups.affine import AffineElement, compose, enumerate_gl
from codegroups.gf2 import GF2Mat, GF2Vec, rank

rng = random.Random(0x0DE5)


def rand_affine(r):
    while True:
        A = GF2Mat(tuple(rng.randrange(1 << r) for _ in range(r)))
        if rank(A) == r:
            return AffineElement(GF2Vec(rng.randrange(1 << r), r), A)


def test_simplex_word_positions():
    # position i+1 carries <i+1, a>, low bit of the index = coordinate 1
    w = codes.simplex_word(GF2Vec(1, 2), 2)
    assert w == 0b101  # positions 1 and 3 pair oddly with a=e1


def test_build_hadamard():
    for r in (2, 3, 4):
        A = codes.build_hadamard(r)
        assert A.n == (1 << r) - 1
        assert A.dim == r and A.size == 1 << r
        assert codes.weight_distribution(A) == {0: 1, 1 << (r - 1): (1 << r) - 1}
    assert codes.build_hadamard(2).words_packed() == (0b000, 0b011, 0b101, 0b110)


def test_build_hamming():
    H = codes.build_hamming(4)
    assert H.n == 15 and H.dim == 11 and H.size == 2048
    assert codes.min_distance(H) == 3
    assert codes.min_distance(codes.build_hamming(3)) == 3


def test_duality_both_ways():
    for r in (2, 3, 4):
        A = codes.build_hadamard(r)
        H = codes.build_hamming(r)
        assert codes.dual(A) == H
        assert codes.dual(H) == A
        assert codes.dual(codes.dual(A)) == A


def test_simplex_self_orthogonal():
    A = codes.build_hadamard(4)
    H = codes.build_hamming(4)
    for w in A.words_packed():
        assert H.contains(w)


def test_kernel_of_linear_code():
    A = codes.build_hadamard(3)
    assert codes.kernel(A) == A


def test_permute_bits():
    perm = (2, 3, 1)  # 1->2, 2->3, 3->1
    assert codes.permute_bits(0b001, perm) == 0b010
    assert codes.permute_bits(0b100, perm) == 0b001
    ident = tuple(range(1, 8))
    for _ in range(10):
        w = rng.randrange(1 << 7)
        assert codes.permute_bits(w, ident) == w


def test_automorphism_group_axioms():
    n = 7
    auts = [codes.CodeAutomorphism(GF2Vec(rng.randrange(1 << n), n),
                                   tuple(rng.sample(range(1, n + 1), n)))
            for _ in range(8)]
    ident = codes.identity_automorphism(n)
    for t in auts:
        assert codes.compose_automorphisms(t, ident) == t
        assert codes.compose_automorphisms(ident, t) == t
        ti = codes.invert_automorphism(t)
        assert codes.compose_automorphisms(t, ti) == ident
        assert codes.compose_automorphisms(ti, t) == ident
    t1, t2, t3 = auts[:3]
    assert codes.compose_automorphisms(codes.compose_automorphisms(t3, t2), t1) \
        == codes.compose_automorphisms(t3, codes.compose_automorphisms(t2, t1))


def test_induced_permutation_homomorphism():
    from codegroups.gf2 import mat_mul

    mats = list(enumerate_gl(3))
    for _ in range(30):
        A, B = rng.choice(mats), rng.choice(mats)
        pa, pb = codes.induced_permutation(A), codes.induced_permutation(B)
        pab = codes.induced_permutation(mat_mul(A, B))
        composed = tuple(pa[pb[i] - 1] for i in range(len(pb)))
        assert pab == composed


def test_stabilizes():
    A7 = codes.build_hadamard(3)
    for M in list(enumerate_gl(3))[:40]:
        assert codes.stabilizes(codes.induced_permutation(M), A7)
    # a transposition of positions 1,2 does not preserve the simplex code
    assert not codes.stabilizes((2, 1, 3, 4, 5, 6, 7), A7)


def test_aut_iso_roundtrip_and_homomorphism():
    A15 = codes.build_hadamard(4)
    for _ in range(50):
        e1, e2 = rand_affine(4), rand_affine(4)
        t1, t2 = codes.aut_iso_inverse(e1), codes.aut_iso_inverse(e2)
        assert codes.is_automorphism(t1, A15)
        assert codes.aut_iso_map(t1) == e1
        assert codes.compose_automorphisms(t2, t1) == \
            codes.aut_iso_inverse(compose(e2, e1))


def test_is_automorphism_rejects():
    A7 = codes.build_hadamard(3)
    bad = codes.CodeAutomorphism(GF2Vec(1, 7), tuple(range(1, 8)))
    assert not codes.is_automorphism(bad, A7)  # 0000001 is not a codeword
    with pytest.raises(ValueError):
        codes.is_automorphism(codes.identity_automorphism(3), A7)


def test_apply_automorphism():
    A7 = codes.build_hadamard(3)
    t = codes.aut_iso_inverse(rand_affine(3))
    assert set(codes.apply_automorphism(t, A7).words_packed()) == \
        set(A7.words_packed())


def test_code_file_roundtrip(tmp_path):
    for C in (codes.build_hadamard(3), codes.build_hamming(4)):
        path = tmp_path / ("%s.txt" % C.name)
        codes.write_code_file(C, path)
        back = codes.read_code_file(path)
        assert back == C
        lines = path.read_text().splitlines()
        assert lines[0].startswith("{")
        body = lines[1:]
        assert body == sorted(body)
        assert len(body) == C.size


def test_automorphism_json_roundtrip():
    t = codes.CodeAutomorphism(GF2Vec(5, 7), (2, 3, 1, 4, 7, 5, 6))
    assert codes.automorphism_from_json(codes.automorphism_to_json(t)) == t
