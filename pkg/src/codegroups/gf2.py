"""Bit-packed linear algebra over GF(2).

Conventions used throughout the package:

- A vector of dimension m is an int; coordinate i (1-based) is bit i-1,
  so the low bit is the first coordinate.
- A bitstring prints coordinate 1 first: "101" means x1=1, x2=0, x3=1.
- A matrix is a tuple of row ints, row 1 first; the low bit of a row is
  column 1.  Packed form concatenates rows, row 1 in the low r bits.
- Hex serialization is row-major, one fixed-width hex chunk per row.
"""

from dataclasses import dataclass


class NotInvertible(Exception):
    """Raised when a matrix inverse or order is requested for a singular matrix."""


class CapExceeded(Exception):
    """Raised when an iterative closure or order computation exceeds its cap."""


@dataclass(frozen=True)
class GF2Vec:
    bits: int
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("dimension must be positive")
        if not 0 <= self.bits < (1 << self.m):
            raise ValueError("bits out of range for dimension %d" % self.m)

    @property
    def weight(self):
        return self.bits.bit_count()


@dataclass(frozen=True)
class GF2Mat:
    rows: tuple

    def __post_init__(self):
        r = len(self.rows)
        if r < 1:
            raise ValueError("matrix must be nonempty")
        if any(not 0 <= row < (1 << r) for row in self.rows):
            raise ValueError("row out of range for a square %dx%d matrix" % (r, r))

    @property
    def r(self):
        return len(self.rows)


def zero_vec(m):
    return GF2Vec(0, m)


def identity(r):
    return GF2Mat(tuple(1 << i for i in range(r)))


def zero_mat(r):
    return GF2Mat((0,) * r)


def vec_add(u, v):
    if u.m != v.m:
        raise ValueError("dimension mismatch")
    return GF2Vec(u.bits ^ v.bits, u.m)


def mat_vec(A, v):
    """A*v for a column vector v."""
    if v.m != A.r:
        raise ValueError("dimension mismatch")
    out = 0
    for i, row in enumerate(A.rows):
        out |= ((row & v.bits).bit_count() & 1) << i
    return GF2Vec(out, v.m)


def mat_mul(A, B):
    if A.r != B.r:
        raise ValueError("dimension mismatch")
    rows = []
    for arow in A.rows:
        acc = 0
        w = arow
        while w:
            j = w & -w
            acc ^= B.rows[j.bit_length() - 1]
            w ^= j
        rows.append(acc)
    return GF2Mat(tuple(rows))


def mat_add(A, B):
    if A.r != B.r:
        raise ValueError("dimension mismatch")
    return GF2Mat(tuple(a ^ b for a, b in zip(A.rows, B.rows)))


def mat_transpose(A):
    r = A.r
    rows = []
    for j in range(r):
        out = 0
        for i in range(r):
            out |= ((A.rows[i] >> j) & 1) << i
        rows.append(out)
    return GF2Mat(tuple(rows))


def rank(A):
    rows = list(A.rows)
    rk = 0
    for j in range(A.r):
        piv = None
        for i in range(rk, len(rows)):
            if (rows[i] >> j) & 1:
                piv = i
                break
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        for i in range(len(rows)):
            if i != rk and (rows[i] >> j) & 1:
                rows[i] ^= rows[rk]
        rk += 1
    return rk


def mat_inverse(A):
    r = A.r
    aug = [A.rows[i] | (1 << (r + i)) for i in range(r)]
    rk = 0
    for j in range(r):
        piv = None
        for i in range(rk, r):
            if (aug[i] >> j) & 1:
                piv = i
                break
        if piv is None:
            raise NotInvertible("matrix is singular")
        aug[rk], aug[piv] = aug[piv], aug[rk]
        for i in range(r):
            if i != rk and (aug[i] >> j) & 1:
                aug[i] ^= aug[rk]
        rk += 1
    mask = (1 << r) - 1
    return GF2Mat(tuple((aug[i] >> r) & mask for i in range(r)))


def mat_pow(A, k):
    result = identity(A.r)
    base = A
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def gl_order(r):
    """|GL(r,2)| = prod over i of (2^r - 2^i)."""
    out = 1
    for i in range(r):
        out *= (1 << r) - (1 << i)
    return out


def mat_order(A):
    if rank(A) < A.r:
        raise NotInvertible("matrix is singular")
    cap = gl_order(A.r)
    ident = identity(A.r)
    p = A
    for k in range(1, cap + 1):
        if p == ident:
            return k
        p = mat_mul(p, A)
    raise NotInvertible("order cap exceeded")


def unipotent_nilpotency(A):
    """True iff (I+A)^r is the zero matrix."""
    return mat_pow(mat_add(identity(A.r), A), A.r) == zero_mat(A.r)


def mat_pack(A):
    r = A.r
    out = 0
    for i, row in enumerate(A.rows):
        out |= row << (r * i)
    return out


def mat_unpack(code, r):
    mask = (1 << r) - 1
    return GF2Mat(tuple((code >> (r * i)) & mask for i in range(r)))


# serialization

def vec_to_bitstring(v):
    return "".join("1" if (v.bits >> i) & 1 else "0" for i in range(v.m))


def vec_from_bitstring(s):
    if not s or any(c not in "01" for c in s):
        raise ValueError("bad bitstring %r" % s)
    bits = 0
    for i, c in enumerate(s):
        if c == "1":
            bits |= 1 << i
    return GF2Vec(bits, len(s))


def _hex_width(r):
    return (r + 3) // 4


def mat_to_hex(A):
    w = _hex_width(A.r)
    return "".join(format(row, "0%dx" % w) for row in A.rows)


def mat_from_hex(s, r):
    w = _hex_width(r)
    if len(s) != w * r:
        raise ValueError("hex length %d does not match dimension %d" % (len(s), r))
    rows = tuple(int(s[i * w:(i + 1) * w], 16) for i in range(r))
    if any(row >= (1 << r) for row in rows):
        raise ValueError("row value out of range in %r" % s)
    return GF2Mat(rows)


# helpers on plain int words (low bit = coordinate 1), used for codeword
# arithmetic where constructing GF2Vec objects would be wasteful

def echelon(rows):
    """Reduced echelon basis of the span, rows returned high pivot first."""
    basis = {}
    for w in rows:
        while w:
            p = w.bit_length() - 1
            if p in basis:
                w ^= basis[p]
            else:
                basis[p] = w
                break
    for p in sorted(basis):
        w = basis[p]
        for q in sorted(basis):
            if q == p:
                break
            if (w >> q) & 1:
                w ^= basis[q]
        basis[p] = w
    return tuple(basis[p] for p in sorted(basis, reverse=True))


def reduce_by(basis, w):
    for b in basis:
        if (w >> (b.bit_length() - 1)) & 1:
            w ^= b
    return w


def span(basis):
    out = [0]
    for b in basis:
        out += [w ^ b for w in out]
    return out


def nullspace(rows, nbits):
    """Basis (echelon) of all x with <row, x> = 0 for every row."""
    ech = echelon(rows)
    pivots = {b.bit_length() - 1 for b in ech}
    out = []
    for f in range(nbits):
        if f in pivots:
            continue
        x = 1 << f
        for b in ech:
            if (b >> f) & 1:
                x |= 1 << (b.bit_length() - 1)
        out.append(x)
    return echelon(out)


def solve_affine(rows, rhs, nbits):
    """One x with <rows[i], x> = rhs bit i for all i, or None.

    rhs is packed with bit i controlling equation i.  The homogeneous
    solutions come from nullspace(rows, nbits).
    """
    # augmented column at bit 0 so elimination treats it last; unknown j
    # lives at bit j+1
    aug = [(rows[i] << 1) | ((rhs >> i) & 1) for i in range(len(rows))]
    x = 0
    for b in echelon(aug):
        p = b.bit_length() - 1
        if p == 0:
            return None
        if b & 1:
            x |= 1 << (p - 1)
    for i, row in enumerate(rows):
        if (row & x).bit_count() & 1 != (rhs >> i) & 1:
            return None
    return x
