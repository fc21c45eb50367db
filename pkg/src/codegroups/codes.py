"""Simplex and Hamming codes of length 2^r - 1 and their automorphisms.

Coordinate positions are indexed 1..n and position i corresponds to the
r-bit binary expansion of i, so position vectors run over the nonzero
vectors of F_2^r.  A code automorphism is a pair (x, perm) acting on a
word y as x + perm(y); for the simplex code these pairs are exactly
(c_a, pi_A) with c_a the evaluation word of the linear form <., a> and
pi_A the coordinate permutation induced by A in GL(r,2), and the map
(c_a, pi_A) -> (a, A) identifies the automorphism group with GA(r,2).
"""

import json
from dataclasses import dataclass

import numpy as np

from .affine import AffineElement
from .gf2 import (
    CapExceeded,
    GF2Mat,
    GF2Vec,
    echelon,
    mat_inverse,
    mat_transpose,
    mat_vec,
    nullspace,
    reduce_by,
    vec_from_bitstring,
    vec_to_bitstring,
)

MATERIALIZE_CAP = 1 << 16


def position_vector(i, r):
    """The vector of F_2^r indexing coordinate position i (1-based)."""
    if not 1 <= i < (1 << r):
        raise ValueError("position out of range")
    return GF2Vec(i, r)


def vector_position(v):
    """The coordinate position indexed by a nonzero vector."""
    if v.bits == 0:
        raise ValueError("the zero vector indexes no position")
    return v.bits


class BinaryCode:
    """A binary code of length n containing the zero word.

    Linear codes carry an echelon basis of packed words and answer
    membership through it; explicit codeword lists are materialized on
    demand and capped, so large linear codes stay usable.  Nonlinear
    codes are stored as explicit word sets.
    """

    __slots__ = ("n", "linear", "name", "basis", "_words", "_wordset")

    def __init__(self, n, linear, name, basis, words, wordset):
        self.n = n
        self.linear = linear
        self.name = name
        self.basis = basis
        self._words = words
        self._wordset = wordset

    @classmethod
    def from_words(cls, n, words, name=""):
        bits = sorted({w.bits if isinstance(w, GF2Vec) else int(w)
                       for w in words})
        if not bits or bits[0] != 0:
            raise ValueError("the zero word must be in the code")
        if bits[-1] >> n:
            raise ValueError("word wider than the code length")
        basis = tuple(echelon(bits))
        linear = len(bits) == 1 << len(basis)
        return cls(n, linear, name, basis if linear else None,
                   tuple(bits), frozenset(bits))

    @classmethod
    def from_basis(cls, n, rows, name=""):
        basis = tuple(echelon(list(rows)))
        if basis and (basis[0] >> n):
            raise ValueError("basis word wider than the code length")
        code = cls(n, True, name, basis, None, None)
        if len(basis) <= 16:
            code._materialize()
        return code

    def _materialize(self):
        if self._words is not None:
            return
        if 1 << self.dim > MATERIALIZE_CAP:
            raise CapExceeded(
                "code with 2^%d words exceeds the materialization cap"
                % self.dim
            )
        words = [0]
        for b in self.basis:
            words += [w ^ b for w in words]
        words.sort()
        self._words = tuple(words)
        self._wordset = frozenset(words)

    @property
    def dim(self):
        return len(self.basis) if self.linear else None

    @property
    def size(self):
        if self.linear:
            return 1 << self.dim
        return len(self._words)

    def words_packed(self):
        """All codewords as packed integers, ascending."""
        self._materialize()
        return self._words

    @property
    def codewords(self):
        return tuple(GF2Vec(w, self.n) for w in self.words_packed())

    def contains(self, w):
        bits = w.bits if isinstance(w, GF2Vec) else int(w)
        if self.linear:
            return reduce_by(self.basis, bits) == 0
        return bits in self._wordset

    def __contains__(self, w):
        return self.contains(w)

    def __eq__(self, other):
        if not isinstance(other, BinaryCode):
            return NotImplemented
        if self.n != other.n or self.linear != other.linear:
            return False
        if self.linear:
            return self.basis == other.basis
        return self._wordset == other._wordset

    def __hash__(self):
        return hash((self.n, self.linear,
                     self.basis if self.linear else self._wordset))

    def __repr__(self):
        d = self.dim if self.linear else "nonlinear:%d" % self.size
        return "BinaryCode(n=%d, %s%s)" % (
            self.n, d, ", name=%r" % self.name if self.name else "")


def simplex_word(a, r):
    """Packed evaluation word of the form <., a> over nonzero positions."""
    bits = a.bits if isinstance(a, GF2Vec) else int(a)
    w = 0
    for i in range(1, 1 << r):
        if (i & bits).bit_count() & 1:
            w |= 1 << (i - 1)
    return w


def build_hadamard(r):
    """The simplex code of length 2^r - 1 and dimension r."""
    if not 2 <= r <= 5:
        raise ValueError("2 <= r <= 5 required")
    n = (1 << r) - 1
    words = [simplex_word(a, r) for a in range(1 << r)]
    code = BinaryCode.from_words(n, words, name="simplex-%d" % n)
    assert code.linear and code.dim == r
    return code


def build_hamming(r):
    """The Hamming code of length 2^r - 1: null space of the position matrix.

    The rows of the parity-check matrix whose columns are the nonzero
    position vectors are exactly the simplex words of the standard basis
    forms, so this code is the dual of the simplex code.
    """
    if not 2 <= r <= 5:
        raise ValueError("2 <= r <= 5 required")
    n = (1 << r) - 1
    checks = [simplex_word(1 << j, r) for j in range(r)]
    return BinaryCode.from_basis(n, nullspace(checks, n),
                                 name="hamming-%d" % n)


def dual(C):
    """The code orthogonal to every word of a linear code C."""
    if not C.linear:
        raise ValueError("dual of a nonlinear code")
    name = "dual-%s" % C.name if C.name else ""
    return BinaryCode.from_basis(C.n, nullspace(list(C.basis), C.n),
                                 name=name)


def weight_distribution(C):
    """Exact map from Hamming weight to codeword count."""
    out = {}
    for w in C.words_packed():
        k = w.bit_count()
        out[k] = out.get(k, 0) + 1
    return out


def min_distance(C):
    """Smallest positive codeword weight of a linear code."""
    if not C.linear:
        raise ValueError("defined here for linear codes only")
    return min(k for k in weight_distribution(C) if k > 0)


def kernel(C):
    """The subgroup {x in C : x + C = C}; all of C when C is linear."""
    if C.linear:
        return C
    words = C.words_packed()
    wset = C._wordset
    ker = [x for x in words if all((x ^ w) in wset for w in words)]
    return BinaryCode.from_words(C.n, ker)


# ---------------- automorphisms ----------------

def permute_bits(w, perm):
    """Push a packed word through a coordinate permutation."""
    out = 0
    for i, p in enumerate(perm):
        out |= ((w >> i) & 1) << (p - 1)
    return out


@dataclass(frozen=True)
class CodeAutomorphism:
    """A pair (x, perm) acting on words as x + perm(y).

    perm is the tuple of 1-based images: perm[i-1] is where position i
    goes.
    """

    x: GF2Vec
    perm: tuple

    @property
    def n(self):
        return self.x.m

    @property
    def sort_key(self):
        return (self.x.bits, self.perm)

    def apply(self, w):
        if isinstance(w, GF2Vec):
            return GF2Vec(self.x.bits ^ permute_bits(w.bits, self.perm),
                          self.n)
        return self.x.bits ^ permute_bits(int(w), self.perm)


def identity_automorphism(n):
    return CodeAutomorphism(GF2Vec(0, n), tuple(range(1, n + 1)))


def compose_automorphisms(t2, t1):
    """The automorphism applying t1 first, then t2."""
    if t2.n != t1.n:
        raise ValueError("length mismatch")
    x = t2.x.bits ^ permute_bits(t1.x.bits, t2.perm)
    perm = tuple(t2.perm[p - 1] for p in t1.perm)
    return CodeAutomorphism(GF2Vec(x, t2.n), perm)


def invert_automorphism(t):
    pinv = [0] * len(t.perm)
    for i, p in enumerate(t.perm):
        pinv[p - 1] = i + 1
    pinv = tuple(pinv)
    return CodeAutomorphism(GF2Vec(permute_bits(t.x.bits, pinv), t.n), pinv)


def induced_permutation(A):
    """Coordinate permutation moving position vectors by inverse-transpose.

    This orientation is the one making both A -> pi_A and the pairing
    with simplex words group homomorphisms under the composition
    conventions used here; the tests pin it down.
    """
    M = mat_transpose(mat_inverse(A))
    r = A.r
    return tuple(mat_vec(M, GF2Vec(i, r)).bits for i in range(1, 1 << r))


def stabilizes(perm, C):
    """Whether the coordinate permutation maps C onto itself."""
    if C.linear:
        return all(C.contains(permute_bits(b, perm)) for b in C.basis)
    return {permute_bits(w, perm) for w in C.words_packed()} == C._wordset


def is_automorphism(t, C):
    """Whether x is in C and x + perm(C) = C."""
    if t.n != C.n:
        raise ValueError("length mismatch")
    if not C.contains(t.x):
        return False
    return stabilizes(t.perm, C)


def apply_automorphism(t, C):
    """The image word set {x + perm(y) : y in C}.

    For an automorphism this is C itself; in general the image can be a
    proper coset missing the zero word, returned as a plain nonlinear
    word set.
    """
    if t.n != C.n:
        raise ValueError("length mismatch")
    words = {t.apply(w) for w in C.words_packed()}
    if 0 in words:
        return BinaryCode.from_words(C.n, words)
    bits = tuple(sorted(words))
    return BinaryCode(C.n, False, "", None, bits, frozenset(bits))


# ---------------- correspondence with GA(r,2) ----------------

def aut_iso_inverse(e):
    """The simplex-code automorphism (c_a, pi_A) of an affine element."""
    r = e.r
    return CodeAutomorphism(
        GF2Vec(simplex_word(e.a, r), (1 << r) - 1),
        induced_permutation(e.A),
    )


def aut_iso_map(t):
    """Recover (a, A) from an automorphism of the required (c_a, pi_A) form.

    a is read off the word values at the power-of-two positions, A from
    the permutation images of those positions; the reconstruction is then
    verified exactly and anything else is rejected.
    """
    n = len(t.perm)
    r = n.bit_length()
    if (1 << r) - 1 != n or t.x.m != n:
        raise ValueError("length is not 2^r - 1")
    a = 0
    for j in range(r):
        a |= ((t.x.bits >> ((1 << j) - 1)) & 1) << j
    cols = [t.perm[(1 << j) - 1] for j in range(r)]
    rows = tuple(
        sum(((cols[j] >> i) & 1) << j for j in range(r)) for i in range(r)
    )
    try:
        A = mat_transpose(mat_inverse(GF2Mat(rows)))
    except Exception:
        raise ValueError("permutation is not induced by GL(r,2)") from None
    e = AffineElement(GF2Vec(a, r), A)
    if simplex_word(e.a, r) != t.x.bits or induced_permutation(A) != t.perm:
        raise ValueError("not of the form (simplex word, induced permutation)")
    return e


# ---------------- files ----------------

def write_code_file(C, path):
    """Write a code as a JSON header line plus sorted bitstring lines."""
    header = {"n": C.n, "dim": C.dim, "name": C.name}
    with open(path, "w") as f:
        f.write(json.dumps(header, sort_keys=True))
        f.write("\n")
        if C.linear and C.dim > 16:
            _write_words_numpy(f, C)
            return
        for line in sorted(vec_to_bitstring(GF2Vec(w, C.n))
                           for w in C.words_packed()):
            f.write(line)
            f.write("\n")


def _write_words_numpy(f, C):
    words = np.zeros(1, dtype=np.uint32)
    for b in C.basis:
        words = np.concatenate([words, words ^ np.uint32(b)])
    n = C.n
    rev = np.zeros_like(words)
    for k in range(n):
        rev |= ((words >> np.uint32(k)) & 1) << np.uint32(n - 1 - k)
    rev.sort()
    # string order of bitstrings equals numeric order with the leftmost
    # character as the high bit, so format from the reversed words
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint32)
    for lo in range(0, len(rev), 1 << 16):
        chunk = rev[lo:lo + (1 << 16)]
        bits = ((chunk[:, None] >> shifts) & 1).astype(np.uint8) + ord("0")
        block = np.empty((len(chunk), n + 1), dtype=np.uint8)
        block[:, :-1] = bits
        block[:, -1] = ord("\n")
        f.write(block.tobytes().decode("ascii"))


def read_code_file(path):
    with open(path) as f:
        header = json.loads(f.readline())
        words = [vec_from_bitstring(line.strip()) for line in f if line.strip()]
    code = BinaryCode.from_words(header["n"], words,
                                 name=header.get("name", ""))
    if header.get("dim") is not None and code.dim != header["dim"]:
        raise ValueError("file dimension disagrees with its words")
    return code


def automorphism_to_json(t):
    return {"x": vec_to_bitstring(t.x), "perm": list(t.perm)}


def automorphism_from_json(d):
    return CodeAutomorphism(vec_from_bitstring(d["x"]), tuple(d["perm"]))
