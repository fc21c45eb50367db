"""Arithmetic in GA(r,2) = F_2^r semidirect GL(r,2).

An element (a, A) acts on v by a + A*v.  compose(e2, e1) applies e1 first,
so act(compose(e2, e1), v) == act(e2, act(e1, v)); this is the unique
convention compatible with the action and is pinned by tests.

GLTables packs the whole of GL(r,2) (r <= 4) into lookup tables: action
tables per matrix, plus multiplication, inversion and order tables
restricted to the unipotent part, which is all the enumeration and
conjugacy machinery ever multiplies.
"""

from array import array
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gf2 import (
    GF2Mat,
    GF2Vec,
    NotInvertible,
    gl_order,
    identity,
    mat_from_hex,
    mat_inverse,
    mat_mul,
    mat_pack,
    mat_pow,
    mat_to_hex,
    mat_unpack,
    mat_vec,
    rank,
    vec_add,
    vec_from_bitstring,
    vec_to_bitstring,
    zero_vec,
)


@dataclass(frozen=True)
class AffineElement:
    a: GF2Vec
    A: GF2Mat

    def __post_init__(self):
        if self.a.m != self.A.r:
            raise ValueError("translation and matrix dimensions differ")

    @property
    def r(self):
        return self.A.r

    @property
    def sort_key(self):
        return (self.a.bits, mat_pack(self.A))


def affine_identity(r):
    return AffineElement(zero_vec(r), identity(r))


def act(e, v):
    return vec_add(e.a, mat_vec(e.A, v))


def compose(e2, e1):
    """The element acting as "e1 then e2": (a2 + A2*a1, A2*A1)."""
    return AffineElement(vec_add(e2.a, mat_vec(e2.A, e1.a)), mat_mul(e2.A, e1.A))


def inverse(e):
    ainv = mat_inverse(e.A)
    return AffineElement(mat_vec(ainv, e.a), ainv)


def regular_order_bound(r):
    """2^(floor(log2 r) + 1), the max element order in a regular subgroup."""
    if r < 1:
        raise ValueError("r must be positive")
    return 1 << r.bit_length()


def gl_two_power_max_order(r):
    """2^(1 + floor(log2(r-1))), the max 2-power element order in GL(r,2)."""
    if r < 2:
        raise ValueError("r must be at least 2")
    return 1 << (r - 1).bit_length()


def element_order(e):
    cap = 2 * regular_order_bound(e.r) * gl_order(e.r)
    ident = affine_identity(e.r)
    p = e
    for k in range(1, cap + 1):
        if p == ident:
            return k
        p = compose(p, e)
    raise NotInvertible("order cap exceeded")


def power_pow2(e, s):
    """e^(2^s) in closed form: ((I+A)^(2^s - 1) a, A^(2^s))."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    k = 1 << s
    m = mat_pow(GF2Mat(tuple(row ^ (1 << i) for i, row in enumerate(e.A.rows))), k - 1)
    return AffineElement(mat_vec(m, e.a), mat_pow(e.A, k))


def _packed_rank(rows, r):
    rows = list(rows)
    rk = 0
    for j in range(r):
        piv = None
        for i in range(rk, r):
            if (rows[i] >> j) & 1:
                piv = i
                break
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        for i in range(rk + 1, r):
            if (rows[i] >> j) & 1:
                rows[i] ^= rows[rk]
        rk += 1
    return rk


def enumerate_gl(r):
    """All invertible r x r matrices, in ascending packed-encoding order."""
    mask = (1 << r) - 1
    for code in range(1 << (r * r)):
        rows = tuple((code >> (r * i)) & mask for i in range(r))
        if 0 in rows:
            continue
        if _packed_rank(rows, r) == r:
            yield GF2Mat(rows)


def affine_to_json(e):
    return {"a": vec_to_bitstring(e.a), "A": mat_to_hex(e.A)}


def affine_from_json(d):
    a = vec_from_bitstring(d["a"])
    return AffineElement(a, mat_from_hex(d["A"], a.m))


def _act_table(rows, r):
    """Images of all 2^r vectors under the matrix, built by doubling."""
    n = 1 << r
    img = [0] * n
    for j in range(r):
        col = 0
        for i in range(r):
            col |= ((rows[i] >> j) & 1) << i
        step = 1 << j
        for v in range(step):
            img[v | step] = img[v] ^ col
    return img


def _rows_from_act(act, r):
    cols = [act[1 << j] for j in range(r)]
    return tuple(
        sum(((cols[j] >> i) & 1) << j for j in range(r)) for i in range(r)
    )


class GLTables:
    """Lookup tables for GL(r,2) and its unipotent part, r <= 4."""

    def __init__(self, r):
        if not 1 <= r <= 4:
            raise ValueError("tables are only built for 1 <= r <= 4")
        self.r = r
        self.n = 1 << r
        mask = self.n - 1
        mats = []
        rowlists = []
        for code in range(1 << (r * r)):
            rows = tuple((code >> (r * i)) & mask for i in range(r))
            if 0 in rows:
                continue
            if _packed_rank(rows, r) == r:
                mats.append(code)
                rowlists.append(rows)
        self.mats = tuple(mats)
        self.ngl = len(mats)
        assert self.ngl == gl_order(r)
        self.mat_index = {m: i for i, m in enumerate(mats)}
        self.acts = [tuple(_act_table(rows, r)) for rows in rowlists]

        ident_rows = tuple(1 << i for i in range(r))
        unip = []
        for idx, rows in enumerate(rowlists):
            m = list(a ^ b for a, b in zip(rows, ident_rows))
            steps = max(1, (r - 1).bit_length())
            for _ in range(steps):
                m = [self._rows_mul_row(m, row) for row in m]
            if not any(m):
                unip.append(idx)
        self.unip = tuple(unip)
        self.nu = len(unip)
        self.uindex = {mats[g]: i for i, g in enumerate(unip)}
        self.uacts = [self.acts[g] for g in unip]
        self.uact_np = np.array(self.uacts, dtype=np.int16)
        self.iid = self.uindex[mat_pack(identity(r))]

        code_to_uidx = np.full(1 << (r * r), -1, dtype=np.int16)
        for u, g in enumerate(unip):
            code_to_uidx[mats[g]] = u
        ucols = self.uact_np[:, [1 << t for t in range(r)]].astype(np.int32)
        umul = np.empty((self.nu, self.nu), dtype=np.int16)
        for i in range(self.nu):
            ai = self.uact_np[i].astype(np.int32)
            prod_cols = ai[ucols]
            codes = np.zeros(self.nu, dtype=np.int32)
            for row_i in range(r):
                row = np.zeros(self.nu, dtype=np.int32)
                for t in range(r):
                    row |= ((prod_cols[:, t] >> row_i) & 1) << t
                codes |= row << (r * row_i)
            umul[i] = code_to_uidx[codes]
        self.umul = umul
        self.umul_rows = [array("h", row) for row in umul]
        self.usq = np.array([umul[i, i] for i in range(self.nu)], dtype=np.int16)

        uinv = [0] * self.nu
        for i in range(self.nu):
            act = self.uacts[i]
            inv_act = [0] * self.n
            for v, w in enumerate(act):
                inv_act[w] = v
            code = 0
            rows = _rows_from_act(inv_act, r)
            for row_i, row in enumerate(rows):
                code |= row << (r * row_i)
            uinv[i] = self.uindex[code]
        self.uinv = tuple(uinv)

        uorders = [1] * self.nu
        for i in range(self.nu):
            k = 1
            x = i
            while x != self.iid:
                x = self.umul_rows[x][i]
                k += 1
            uorders[i] = k
        self.uorders = tuple(uorders)
        self._gl_gens = None

    @staticmethod
    def _rows_mul_row(rows, row):
        acc = 0
        while row:
            j = row & -row
            acc ^= rows[j.bit_length() - 1]
            row ^= j
        return acc

    def unip_mat(self, u):
        return mat_unpack(self.mats[self.unip[u]], self.r)

    def mat(self, g):
        return mat_unpack(self.mats[g], self.r)

    def gl_generators(self):
        """Indices of two matrices generating all of GL(r,2)."""
        if self._gl_gens is not None:
            return self._gl_gens
        r = self.r
        if r == 1:
            self._gl_gens = (0,)
            return self._gl_gens
        comp = [0] * r
        comp[0] = 1 << (r - 1)
        comp[1] = 1 | (1 << (r - 1))
        for i in range(2, r):
            comp[i] = 1 << (i - 1)
        transvection = [3 if i == 0 else 1 << i for i in range(r)]
        gens = []
        for rows in (comp, transvection):
            code = 0
            for i, row in enumerate(rows):
                code |= row << (r * i)
            gens.append(self.mat_index[code])
        seen = {self.mat_index[mat_pack(identity(r))]}
        frontier = list(seen)
        while frontier:
            g = frontier.pop()
            ag = self.acts[g]
            for h in gens:
                ah = self.acts[h]
                cols = [ag[ah[1 << t]] for t in range(r)]
                code = 0
                for row_i in range(r):
                    row = 0
                    for t in range(r):
                        row |= ((cols[t] >> row_i) & 1) << t
                    code |= row << (r * row_i)
                k = self.mat_index[code]
                if k not in seen:
                    seen.add(k)
                    frontier.append(k)
        assert len(seen) == self.ngl, "generator pair does not generate GL"
        self._gl_gens = tuple(gens)
        return self._gl_gens


@lru_cache(maxsize=None)
def gl_tables(r):
    return GLTables(r)
