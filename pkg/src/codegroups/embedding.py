"""Regular subgroups of Hamming code automorphism groups that extend a
regular simplex-code group without new permutation parts.

An automorphism of the length 2^r - 1 Hamming code H is a translation by a
codeword followed by a coordinate permutation stabilizing H.  A regular
subgroup P of the affine group acts on the simplex code A = dual(H) the
same way, and since A sits inside H every such P has candidate extensions
K with P <= K <= Aut(H), K regular on H, and the permutation parts of K
equal to those of P.  This module enumerates and classifies those K.

The search exploits a rigid normal form.  Writing T for the translations
in K (a subspace of H invariant under the permutation parts) and y_pi for
a coset representative per permutation part pi, the representatives are
forced: y_pi must agree modulo T with the translation word of any element
of P whose permutation part is pi.  Group closure then holds
automatically, and K is regular exactly when T meets A in the translation
kernel of P and nothing more.  Enumerating K therefore reduces to
enumerating the invariant subspaces T, done dually through annihilator
subspaces of the quotient of the ambient space by A.

Conjugacy under the full Aut(H) is decided without pairwise search: lifts
are bucketed by GL-conjugacy of their permutation parts, transported to a
common frame, and labeled by a canonical form that quotients out
conjugation by translations algebraically; a breadth-first orbit walk
under normalizer generators then merges frames related by permutations.
"""

import json
import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gf2 import (
    GF2Vec,
    echelon,
    identity,
    mat_from_hex,
    mat_inverse,
    mat_order,
    mat_pack,
    mat_to_hex,
    mat_transpose,
    nullspace,
    reduce_by,
    solve_affine,
    span,
    vec_from_bitstring,
    vec_to_bitstring,
)
from .affine import gl_tables
from .codes import (
    CodeAutomorphism,
    aut_iso_inverse,
    build_hamming,
    permute_bits,
    simplex_word,
)
from .regular import fingerprint_hash


class LiftContext:
    """Shared tables for one code length: GL action, codes, quotient coords."""

    def __init__(self, r):
        if not 2 <= r <= 4:
            raise ValueError("2 <= r <= 4 required")
        self.r = r
        self.n = (1 << r) - 1
        self.tb = tb = gl_tables(r)
        self.simplex = tuple(simplex_word(a, r) for a in range(1 << r))
        self.ham = build_hamming(r)
        self.ham_words = self.ham.words_packed()
        self.ham_basis = self.ham.basis
        self.hdim = self.ham.dim
        self.sbasis = echelon(self.simplex)
        pivots = {b.bit_length() - 1 for b in self.sbasis}
        self.free = tuple(i for i in range(self.n) if i not in pivots)
        self.qdim = self.n - r
        self.ident = tb.mat_index[mat_pack(identity(r))]
        self.act_index = {tb.acts[g]: g for g in range(tb.ngl)}
        self._perm = {}
        self._permw = {}
        self._inv = None
        self._invT = {}
        self._order = {}
        self._norm = {}
        self._transp = {}

    # -- GL element bookkeeping, all by index into tb.mats --

    def perm_of(self, g):
        """1-based position images of the matrix at index g."""
        p = self._perm.get(g)
        if p is None:
            p = self._perm[g] = tuple(self.tb.acts[g][1:])
        return p

    def word_image(self, g, w):
        return permute_bits(w, self.perm_of(g))

    def permw(self, g):
        """Full image table for words, as a numpy array."""
        t = self._permw.get(g)
        if t is None:
            w = np.arange(1 << self.n, dtype=np.int32)
            out = np.zeros_like(w)
            perm = self.perm_of(g)
            for i in range(self.n):
                out |= ((w >> i) & 1) << (perm[i] - 1)
            t = self._permw[g] = out
        return t

    def mul(self, a, b):
        ta, tbq = self.tb.acts[a], self.tb.acts[b]
        return self.act_index[tuple(ta[v] for v in tbq)]

    def inv(self, g):
        if self._inv is None:
            table = []
            for a in self.tb.acts:
                ia = [0] * len(a)
                for v, w in enumerate(a):
                    ia[w] = v
                table.append(self.act_index[tuple(ia)])
            self._inv = tuple(table)
        return self._inv[g]

    def conj(self, m, g):
        """Index of the conjugate m g m^-1."""
        return self.mul(self.mul(m, g), self.inv(m))

    def invT(self, g):
        """Index of the inverse transpose, the position action of matrix g."""
        q = self._invT.get(g)
        if q is None:
            M = mat_transpose(mat_inverse(self.tb.mat(g)))
            q = self._invT[g] = self.tb.mat_index[mat_pack(M)]
        return q

    def order_of(self, g):
        o = self._order.get(g)
        if o is None:
            o = self._order[g] = mat_order(self.tb.mat(g))
        return o

    # -- coordinates on the quotient of the ambient space by the simplex code --

    def qcoord(self, w):
        x = reduce_by(self.sbasis, w)
        c = 0
        for k, f in enumerate(self.free):
            c |= ((x >> f) & 1) << k
        return c

    def qlift(self, c):
        w = 0
        for k, f in enumerate(self.free):
            w |= ((c >> k) & 1) << f
        return w

    def qact(self, g, c):
        return self.qcoord(self.word_image(g, self.qlift(c)))


@lru_cache(maxsize=None)
def lift_context(r):
    return LiftContext(r)


# ---------------- permutation part subgroups ----------------

@dataclass(frozen=True)
class PiGroup:
    """Common permutation parts of a group of code automorphisms, stored as
    sorted indices of the inducing matrices."""

    r: int
    indices: tuple

    @property
    def order(self):
        return len(self.indices)

    def permutations(self):
        ctx = lift_context(self.r)
        return tuple(ctx.perm_of(g) for g in self.indices)

    def matrices(self):
        ctx = lift_context(self.r)
        return tuple(ctx.tb.mat(g) for g in self.indices)


def _close_indices(ctx, gens):
    seen = {ctx.ident}
    frontier = [ctx.ident]
    while frontier:
        a = frontier.pop()
        for g in gens:
            b = ctx.mul(a, g)
            if b not in seen:
                seen.add(b)
                frontier.append(b)
    return seen


def _subgroup_gens(ctx, elems):
    """Small generating set for a set of indices closed under product."""
    gens = []
    closed = {ctx.ident}
    for x in elems:
        if x not in closed:
            gens.append(x)
            closed = _close_indices(ctx, gens)
    return tuple(gens)


def pi_group(G):
    """Permutation parts of a closed set of code automorphisms."""
    auts = list(G)
    if not auts:
        raise ValueError("empty automorphism set")
    n = auts[0].n
    r = n.bit_length()
    if (1 << r) - 1 != n:
        raise ValueError("length is not 2^r - 1")
    ctx = lift_context(r)
    idxs = set()
    for t in auts:
        g = ctx.act_index.get((0,) + tuple(t.perm))
        if g is None:
            raise ValueError("permutation part is not induced by a matrix")
        idxs.add(g)
    closed = _close_indices(ctx, _subgroup_gens(ctx, sorted(idxs)))
    if closed != idxs:
        raise ValueError("permutation parts do not form a group")
    return PiGroup(r, tuple(sorted(idxs)))


def _keyset(G):
    if isinstance(G, LiftRecord):
        ctx = lift_context(G.r)
        return {(w, ctx.perm_of(q)) for w, q in G.element_keys()}
    return {(t.x.bits, tuple(t.perm)) for t in G}


def is_narrow_sense_embedded(H, G):
    """True when H is a subgroup of G with the same permutation parts."""
    hk = _keyset(H)
    gk = _keyset(G)
    if not hk <= gk:
        return False
    return {p for _, p in hk} == {p for _, p in gk}


def parent_automorphisms(record):
    """The image of an affine regular subgroup inside Aut(H)."""
    return tuple(aut_iso_inverse(e) for e in record.elements)


def code_automorphism_group(C):
    """Every automorphism of a short code, found by scanning all coordinate
    permutations.  Only lengths up to 7 are feasible."""
    from itertools import permutations as _perms

    from .codes import stabilizes

    if C.n > 7:
        raise ValueError("full automorphism groups need length <= 7")
    perms = [p for p in _perms(range(1, C.n + 1)) if stabilizes(p, C)]
    out = []
    for w in C.words_packed():
        x = GF2Vec(w, C.n)
        for p in perms:
            out.append(CodeAutomorphism(x, p))
    return tuple(out)


# ---------------- lift records ----------------

class LiftRecord:
    """One regular extension: an invariant translation subspace T of H plus
    forced coset representatives, one per permutation part."""

    __slots__ = ("r", "parent_class_id", "tbasis", "coset", "conj_class_id",
                 "_fingerprint")

    def __init__(self, r, tbasis, coset, parent_class_id=None):
        ctx = lift_context(r)
        self.r = r
        self.parent_class_id = parent_class_id
        tb2 = echelon(tbasis)
        self.tbasis = tb2
        self.coset = {q: reduce_by(tb2, w) for q, w in sorted(coset.items())}
        if self.coset.get(ctx.ident) != 0:
            raise ValueError("coset map must send the identity to 0")
        self.conj_class_id = None
        self._fingerprint = None

    @property
    def pi_indices(self):
        return tuple(self.coset)

    @property
    def pi(self):
        return PiGroup(self.r, self.pi_indices)

    @property
    def pi_order(self):
        return len(self.coset)

    @property
    def t_dim(self):
        return len(self.tbasis)

    @property
    def order(self):
        return len(self.coset) << len(self.tbasis)

    def sort_key(self):
        return (self.tbasis, tuple(self.coset.items()))

    def t_words(self):
        return sorted(span(self.tbasis))

    def translation_code(self):
        from .codes import BinaryCode

        rows = tuple(GF2Vec(b, lift_context(self.r).n) for b in self.tbasis)
        return BinaryCode.from_basis(lift_context(self.r).n, rows)

    def element_keys(self):
        """All group elements as (translation word, matrix index) pairs."""
        tw = span(self.tbasis)
        out = set()
        for q, c in self.coset.items():
            for t in tw:
                out.add((c ^ t, q))
        return frozenset(out)

    def elements(self):
        ctx = lift_context(self.r)
        keys = sorted(self.element_keys())
        return tuple(CodeAutomorphism(GF2Vec(w, ctx.n), ctx.perm_of(q))
                     for w, q in keys)

    @property
    def fingerprint(self):
        if self._fingerprint is None:
            self._fingerprint = lift_fingerprint(self)
        return self._fingerprint

    @property
    def fingerprint_hash(self):
        return fingerprint_hash(self.fingerprint)

    def is_abelian(self):
        return all(c == self.order for _, c, _ in self.fingerprint)

    def __repr__(self):
        return "LiftRecord(r=%d, parent=%s, |pi|=%d, dim T=%d)" % (
            self.r, self.parent_class_id, self.pi_order, self.t_dim)


def lift_from_elements(elements, parent_class_id=None):
    """Rebuild a record from explicit automorphisms, validating the shape."""
    auts = list(elements)
    keys = _keyset(auts)
    if len(keys) != len(auts):
        raise ValueError("duplicate elements")
    n = auts[0].n
    r = n.bit_length()
    ctx = lift_context(r)
    coset = {}
    twords = set()
    for w, p in sorted(keys):
        g = ctx.act_index.get((0,) + p)
        if g is None:
            raise ValueError("permutation part is not induced by a matrix")
        if g == ctx.ident:
            twords.add(w)
        coset.setdefault(g, w)
    tbasis = echelon(sorted(twords))
    if len(twords) != 1 << len(tbasis):
        raise ValueError("translations do not form a subspace")
    if len(twords) * len(coset) != len(auts):
        raise ValueError("not a union of equal cosets")
    rec = LiftRecord(r, tbasis, coset, parent_class_id=parent_class_id)
    if rec.element_keys() != {(w, ctx.act_index[(0,) + p]) for w, p in keys}:
        raise ValueError("elements are not a translation-coset union")
    verify_lift(rec)
    return rec


def verify_lift(lift, parent=None):
    """Check the structural invariants of a record; raises on failure."""
    ctx = lift_context(lift.r)
    qs = lift.pi_indices
    if _close_indices(ctx, _subgroup_gens(ctx, qs)) != set(qs):
        raise ValueError("permutation parts are not a group")
    for b in lift.tbasis:
        if reduce_by(ctx.ham.basis, b) != 0:
            raise ValueError("T is not inside the Hamming code")
        for q in qs:
            if reduce_by(lift.tbasis, ctx.word_image(q, b)) != 0:
                raise ValueError("T is not invariant")
    if len(qs) << len(lift.tbasis) != 1 << ctx.hdim:
        raise ValueError("wrong group order")
    seen = set(lift.coset.values())
    if len(seen) != len(qs):
        raise ValueError("coset representatives collapse, not regular")
    for q1, c1 in lift.coset.items():
        if reduce_by(ctx.ham.basis, c1) != 0:
            raise ValueError("representative outside the Hamming code")
        for q2, c2 in lift.coset.items():
            w = c1 ^ ctx.word_image(q1, c2) ^ lift.coset[ctx.mul(q1, q2)]
            if reduce_by(lift.tbasis, w) != 0:
                raise ValueError("coset map fails the closure law")
    if parent is not None:
        assign = parent.assign
        if not assign:
            raise ValueError("parent is not a regular transversal")
        pqs = set()
        for v, u in enumerate(assign):
            q = ctx.invT(ctx.tb.unip[u])
            pqs.add(q)
            w = ctx.simplex[v] ^ lift.coset.get(q, 0)
            if q not in lift.coset or reduce_by(lift.tbasis, w) != 0:
                raise ValueError("parent element missing from the lift")
        if pqs != set(qs):
            raise ValueError("permutation parts differ from the parent")
    return True


# ---------------- the lift search ----------------

def _parent_frame(ctx, parent):
    assign = parent.assign
    if not assign:
        raise ValueError("parent subgroup is not a regular transversal")
    if parent.r != ctx.r:
        raise ValueError("rank mismatch")
    qfirst = {}
    tker = []
    for v, u in enumerate(assign):
        if u == ctx.tb.iid:
            tker.append(v)
        q = ctx.invT(ctx.tb.unip[u])
        if q not in qfirst:
            qfirst[q] = v
    qmats = tuple(sorted(qfirst))
    coset = {q: ctx.simplex[qfirst[q]] for q in qmats}
    tker_words = [ctx.simplex[v] for v in tker]
    return qmats, coset, tker_words


def _orbit_span(ctx, qmats, c, cap):
    """Echelon basis of the smallest invariant subspace containing c, or
    None once its dimension exceeds cap."""
    piv = {}
    stack = [c]
    while stack:
        w = stack.pop()
        while w:
            p = w.bit_length() - 1
            if p in piv:
                w ^= piv[p]
            else:
                break
        if not w:
            continue
        if len(piv) == cap:
            return None
        piv[p] = w
        for q in qmats:
            stack.append(ctx.qact(q, w))
    return echelon(piv.values())


def _lifts_of_frame(ctx, qmats, coset, tker_words):
    npi = len(qmats)
    cexp = npi.bit_length() - 1
    if 1 << cexp != npi:
        raise ValueError("permutation part count is not a power of two")
    r = ctx.r
    if cexp == 0:
        candidates = [()]
    else:
        rows = []
        for t in tker_words:
            row = 0
            for k, f in enumerate(ctx.free):
                row |= ((t >> f) & 1) << k
            rows.append(row)
        zbasis = nullspace(rows, ctx.qdim)
        mods = set()
        for c in span(zbasis)[1:]:
            m = _orbit_span(ctx, qmats, c, cexp)
            if m is not None:
                mods.add(m)
        mods = sorted(mods)
        seen = set(mods)
        frontier = list(mods)
        while frontier:
            m = frontier.pop()
            if len(m) == cexp:
                continue
            for cy in mods:
                s = echelon(m + cy)
                if len(s) <= cexp and s not in seen:
                    seen.add(s)
                    frontier.append(s)
        candidates = sorted(m for m in seen if len(m) == cexp)
    n_tker = 1 << (r - cexp)
    out = []
    for bas in candidates:
        yws = [ctx.qlift(c) for c in bas]
        in_t = 1
        for w in ctx.simplex[1:]:
            if all(((y & w).bit_count() & 1) == 0 for y in yws):
                in_t += 1
        if in_t != n_tker:
            continue
        rows = []
        for y in yws:
            row = 0
            for j, h in enumerate(ctx.ham_basis):
                if (y & h).bit_count() & 1:
                    row |= 1 << j
            rows.append(row)
        ker = nullspace(rows, ctx.hdim)
        assert len(ker) == ctx.hdim - cexp
        tb_rows = []
        for k in ker:
            w = 0
            for j, h in enumerate(ctx.ham_basis):
                if (k >> j) & 1:
                    w ^= h
            tb_rows.append(w)
        out.append((echelon(tb_rows), dict(coset)))
    return out


def _contains_parent(ctx, lift, parent):
    for v, u in enumerate(parent.assign):
        q = ctx.invT(ctx.tb.unip[u])
        if q not in lift.coset:
            return False
        if reduce_by(lift.tbasis, ctx.simplex[v] ^ lift.coset[q]) != 0:
            return False
    return True


def lift_regular(parent, parent_class_id=None):
    """Every regular extension of one affine regular subgroup, sorted.

    For r >= 3 the simplex code sits inside the Hamming code and every
    record the frame search emits contains the parent image by
    construction; the containment filter still runs so the degenerate
    r=2 case (where the parent cannot fit) comes back empty instead of
    wrong.
    """
    ctx = lift_context(parent.r)
    if parent_class_id is None:
        parent_class_id = parent.conj_class_id
    qmats, coset, tker_words = _parent_frame(ctx, parent)
    found = _lifts_of_frame(ctx, qmats, coset, tker_words)
    records = [LiftRecord(parent.r, tbasis, cos, parent_class_id=parent_class_id)
               for tbasis, cos in found]
    records = [lf for lf in records if _contains_parent(ctx, lf, parent)]
    records.sort(key=LiftRecord.sort_key)
    return records


# ---------------- conjugacy classification ----------------

def _transporter(ctx, gens_src, dst_set):
    """A matrix index conjugating the group generated by gens_src into
    dst_set, or None.  Sizes must already agree."""
    key = (gens_src, dst_set)
    hit = ctx._transp.get(key, -1)
    if hit != -1:
        return hit
    found = None
    for m in range(ctx.tb.ngl):
        if all(ctx.conj(m, g) in dst_set for g in gens_src):
            found = m
            break
    ctx._transp[key] = found
    return found


def _normalizer(ctx, qmats):
    """All matrix indices whose conjugation maps the set qmats to itself."""
    hit = ctx._norm.get(qmats)
    if hit is not None:
        return hit
    gens = _subgroup_gens(ctx, qmats)
    qset = frozenset(qmats)
    out = tuple(m for m in range(ctx.tb.ngl)
                if all(ctx.conj(m, g) in qset for g in gens))
    ctx._norm[qmats] = out
    return out


class _Bucket:
    __slots__ = ("q0", "qset", "gen_data", "imgs", "labels")

    def __init__(self, ctx, q0):
        self.q0 = q0
        self.qset = frozenset(q0)
        norm = _normalizer(ctx, q0)
        gens = _subgroup_gens(ctx, norm)
        self.gen_data = [(ctx.permw(g), {q: ctx.conj(g, q) for q in q0})
                         for g in gens]
        self.imgs = {}
        self.labels = {}


def _ycanon(ctx, bucket, t2, cos):
    """Canonical label of the coset map modulo conjugation by translations."""
    imgs = bucket.imgs.get(t2)
    if imgs is None:
        rows = []
        for h in ctx.ham_basis:
            seg = 0
            for k, q in enumerate(bucket.q0):
                w = reduce_by(t2, h ^ ctx.word_image(q, h))
                seg |= w << (k * ctx.n)
            rows.append(seg)
        imgs = bucket.imgs[t2] = echelon(rows)
    vec = 0
    for k, q in enumerate(bucket.q0):
        vec |= reduce_by(t2, cos[q]) << (k * ctx.n)
    return reduce_by(imgs, vec)


def _node_of(ctx, bucket, t2, cos):
    return (t2, _ycanon(ctx, bucket, t2, cos))


def _orbit_label(ctx, bucket, t2, cos, key0, cid):
    bucket.labels[key0] = cid
    frontier = [(t2, cos)]
    while frontier:
        t2a, cosa = frontier.pop()
        for pw, smap in bucket.gen_data:
            t2b = echelon(int(pw[w]) for w in t2a)
            cosb = {smap[q]: int(pw[w]) for q, w in cosa.items()}
            key = _node_of(ctx, bucket, t2b, cosb)
            prev = bucket.labels.get(key)
            if prev is None:
                bucket.labels[key] = cid
                frontier.append((t2b, cosb))
            else:
                assert prev == cid


def classify_lifts_conjugacy(lifts, progress=None):
    """Partition lifts by conjugacy under the full Aut(H).

    Returns the partition as tuples of input indices, classes ordered by
    first appearance, and stamps conj_class_id on every record.
    """
    lifts = list(lifts)
    if not lifts:
        return ()
    r = lifts[0].r
    if any(lf.r != r for lf in lifts):
        raise ValueError("mixed ranks")
    ctx = lift_context(r)
    buckets = []
    by_qt = {}
    assignments = [None] * len(lifts)
    next_id = 0
    for i, lf in enumerate(lifts):
        qt = lf.pi_indices
        hit = by_qt.get(qt)
        if hit is None:
            gens_src = _subgroup_gens(ctx, qt)
            for bi, b in enumerate(buckets):
                if len(b.q0) != len(qt):
                    continue
                m0 = _transporter(ctx, gens_src, b.qset)
                if m0 is not None:
                    hit = (bi, m0)
                    break
            if hit is None:
                buckets.append(_Bucket(ctx, qt))
                hit = (len(buckets) - 1, ctx.ident)
            by_qt[qt] = hit
        bi, m0 = hit
        b = buckets[bi]
        if m0 == ctx.ident:
            t2, cos = lf.tbasis, dict(lf.coset)
        else:
            pw = ctx.permw(m0)
            t2 = echelon(int(pw[w]) for w in lf.tbasis)
            cos = {ctx.conj(m0, q): int(pw[w]) for q, w in lf.coset.items()}
        key = _node_of(ctx, b, t2, cos)
        cid = b.labels.get(key)
        if cid is None:
            cid = next_id
            next_id += 1
            _orbit_label(ctx, b, t2, cos, key, cid)
        assignments[i] = cid
        if progress is not None:
            progress(i + 1, len(lifts))
    classes = [[] for _ in range(next_id)]
    for i, cid in enumerate(assignments):
        lifts[i].conj_class_id = cid
        classes[cid].append(i)
    return tuple(tuple(c) for c in classes)


def classify_lifts_fingerprint(lifts):
    """Partition lifts by fingerprint.

    The fingerprint is conjugation and isomorphism invariant, so the number
    of parts only bounds the number of abstract group types from below:
    distinct groups can share a fingerprint.
    """
    parts = {}
    for i, lf in enumerate(lifts):
        parts.setdefault(lf.fingerprint, []).append(i)
    partition = tuple(tuple(p) for p in parts.values())
    return partition, len(partition)


def lift_fingerprint(lift):
    """Multiset of (element order, centralizer size), counted, computed
    coset by coset with word tables."""
    ctx = lift_context(lift.r)
    tspan = np.array(span(lift.tbasis), dtype=np.int32)
    qs = lift.pi_indices
    commuting = {q: [q2 for q2 in qs if ctx.mul(q, q2) == ctx.mul(q2, q)]
                 for q in qs}
    counts = {}
    for q in qs:
        pwq = ctx.permw(q)
        xs = tspan ^ lift.coset[q]
        m = ctx.order_of(q)
        acc = xs.copy()
        cur = xs
        for _ in range(m - 1):
            cur = pwq[cur]
            acc = acc ^ cur
        orders = np.where(acc == 0, m, 2 * m)
        fixt = int(np.count_nonzero(pwq[tspan] == tspan))
        it_basis = echelon(int(b) ^ int(pwq[b]) for b in lift.tbasis)
        table = np.zeros(1 << ctx.n, dtype=np.uint8)
        table[np.array(span(it_basis), dtype=np.int32)] = 1
        cnt = np.zeros(len(xs), dtype=np.int64)
        for q2 in commuting[q]:
            c2 = lift.coset[q2]
            shift = c2 ^ int(pwq[c2])
            cnt += table[(xs ^ ctx.permw(q2)[xs]) ^ shift]
        for o, c in zip(orders.tolist(), (cnt * fixt).tolist()):
            key = (int(o), int(c))
            counts[key] = counts.get(key, 0) + 1
    return tuple(sorted((o, c, k) for (o, c), k in counts.items()))


def are_conjugate_lifts(l1, l2):
    """Search for an explicit conjugating automorphism between two lifts."""
    if l1.r != l2.r or l1.pi_order != l2.pi_order or l1.t_dim != l2.t_dim:
        return False
    ctx = lift_context(l1.r)
    q1 = l1.pi_indices
    q2 = l2.pi_indices
    if q1 == q2:
        m0 = ctx.ident
    else:
        m0 = _transporter(ctx, _subgroup_gens(ctx, q2), frozenset(q1))
        if m0 is None:
            return False
    t2b = echelon(ctx.word_image(m0, w) for w in l2.tbasis)
    c2map = {ctx.conj(m0, q): reduce_by(t2b, ctx.word_image(m0, w))
             for q, w in l2.coset.items()}
    t21 = l1.tbasis
    c1map = l1.coset
    nh = len(ctx.ham_basis)
    for m in _normalizer(ctx, q1):
        if echelon(ctx.word_image(m, w) for w in t21) != t2b:
            continue
        minv = ctx.inv(m)
        rows = []
        rhs = 0
        neq = 0
        for qp in q1:
            q = ctx.conj(minv, qp)
            d = reduce_by(t2b, c2map[qp] ^ ctx.word_image(m, c1map[q]))
            cols = [reduce_by(t2b, h ^ ctx.word_image(qp, h))
                    for h in ctx.ham_basis]
            for bit in range(ctx.n):
                row = 0
                for k in range(nh):
                    row |= ((cols[k] >> bit) & 1) << k
                rows.append(row)
                rhs |= ((d >> bit) & 1) << neq
                neq += 1
        if solve_affine(rows, rhs, nh) is not None:
            return True
    return False


# ---------------- exhaustive oracles for short lengths ----------------

def aut_regular_brute(r):
    """Every regular subgroup of Aut(H) by direct transversal search.
    Feasible only up to length 7."""
    ctx = lift_context(r)
    if ctx.n > 7:
        raise ValueError("exhaustive search needs length <= 7")
    words = ctx.ham_words
    uset = frozenset(ctx.invT(g) for g in ctx.tb.unip)
    target = len(words)

    def close_partial(assign, pending):
        while pending:
            w1, g1 = pending.pop()
            for w2, g2 in list(assign.items()):
                for (wa, ga), (wb, gb) in (((w1, g1), (w2, g2)),
                                           ((w2, g2), (w1, g1))):
                    w = wa ^ ctx.word_image(ga, wb)
                    g = ctx.mul(ga, gb)
                    if g not in uset:
                        return None
                    prev = assign.get(w)
                    if prev is None:
                        assign[w] = g
                        pending.append((w, g))
                    elif prev != g:
                        return None
        return assign

    results = []

    def dfs(assign):
        if len(assign) == target:
            results.append(tuple(sorted(assign.items())))
            return
        missing = min(w for w in words if w not in assign)
        for g in sorted(uset):
            trial = dict(assign)
            if close_partial(trial, [(missing, g)]) is not None:
                dfs(trial)

    dfs({0: ctx.ident})
    return sorted(set(results))


def aut_orbit_partition(r, groups):
    """Partition explicit subgroups of Aut(H) into conjugacy classes by a
    plain orbit walk.  Feasible only up to length 7."""
    ctx = lift_context(r)
    if ctx.n > 7:
        raise ValueError("orbit walk needs length <= 7")
    keysets = []
    for g in groups:
        if isinstance(g, LiftRecord):
            keysets.append(tuple(sorted(g.element_keys())))
        else:
            keysets.append(tuple(sorted(g)))
    gl_gens = ctx.tb.gl_generators()
    labels = {}
    parts = []
    for i, g0 in enumerate(keysets):
        if g0 in labels:
            parts[labels[g0]].append(i)
            continue
        cid = len(parts)
        parts.append([i])
        labels[g0] = cid
        frontier = [g0]
        while frontier:
            s = frontier.pop()
            images = []
            for h in ctx.ham_basis:
                images.append(tuple(sorted(
                    (h ^ w ^ ctx.word_image(q, h), q) for w, q in s)))
            for m in gl_gens:
                images.append(tuple(sorted(
                    (ctx.word_image(m, w), ctx.conj(m, q)) for w, q in s)))
            for img in images:
                if img not in labels:
                    labels[img] = cid
                    frontier.append(img)
    return tuple(tuple(p) for p in parts)


# ---------------- serialization and reports ----------------

def lift_to_json(lift):
    ctx = lift_context(lift.r)
    return {
        "parent_class_id": lift.parent_class_id,
        "T_basis": [vec_to_bitstring(GF2Vec(b, ctx.n)) for b in lift.tbasis],
        "coset_map": sorted(
            ({"matrix": mat_to_hex(ctx.tb.mat(q)),
              "word": vec_to_bitstring(GF2Vec(w, ctx.n))}
             for q, w in lift.coset.items()),
            key=lambda d: d["matrix"]),
    }


def lift_from_json(d, r):
    ctx = lift_context(r)
    tbasis = tuple(vec_from_bitstring(s).bits for s in d["T_basis"])
    coset = {}
    for entry in d["coset_map"]:
        g = ctx.tb.mat_index[mat_pack(mat_from_hex(entry["matrix"], r))]
        coset[g] = vec_from_bitstring(entry["word"]).bits
    return LiftRecord(r, tbasis, coset,
                      parent_class_id=d.get("parent_class_id"))


def save_checkpoint(path, r, done):
    """Write completed per-parent lift lists; atomic so interrupts are safe."""
    data = {
        "r": r,
        "parents": {str(pid): [lift_to_json(lf) for lf in lifts]
                    for pid, lifts in sorted(done.items())},
    }
    tmp = "%s.tmp" % path
    with open(tmp, "w") as f:
        json.dump(data, f, indent=2, sort_keys=True)
        f.write("\n")
    os.replace(tmp, path)


def load_checkpoint(path):
    with open(path) as f:
        data = json.load(f)
    r = data["r"]
    done = {}
    for pid, rows in data["parents"].items():
        lifts = [lift_from_json(d, r) for d in rows]
        for lf in lifts:
            lf.parent_class_id = int(pid)
        done[int(pid)] = lifts
    return r, done


def lift_report_rows(lifts):
    """One JSON-ready row per lift.  Fingerprints are computed once per
    conjugacy class, so conj_class_id must already be stamped."""
    rep_hash = {}
    for lf in lifts:
        cid = lf.conj_class_id
        if cid is None:
            raise ValueError("classify lifts before reporting")
        if cid not in rep_hash:
            rep_hash[cid] = lf.fingerprint_hash
    rows = []
    for lf in lifts:
        row = lift_to_json(lf)
        row["pi_order"] = lf.pi_order
        row["fingerprint_hash"] = rep_hash[lf.conj_class_id]
        row["conj_class_id"] = lf.conj_class_id
        rows.append(row)
    return rows


def lift_summary_rows(lifts, partition):
    """One row per conjugacy class for the CSV summary."""
    lifts = list(lifts)
    rows = []
    for cid, members in enumerate(partition):
        rep = lifts[members[0]]
        parents = sorted({lifts[i].parent_class_id for i in members})
        rows.append({
            "conj_class_id": cid,
            "lift_count": len(members),
            "pi_order": rep.pi_order,
            "t_dim": rep.t_dim,
            "fingerprint_hash": rep.fingerprint_hash,
            "abelian": rep.is_abelian(),
            "parent_class_ids": ";".join(str(p) for p in parents),
        })
    return rows


_SUMMARY_COLUMNS = ("conj_class_id", "lift_count", "pi_order", "t_dim",
                    "fingerprint_hash", "abelian", "parent_class_ids")


def write_lift_report(rows, json_path):
    with open(json_path, "w") as f:
        json.dump(rows, f, indent=2, sort_keys=True)
        f.write("\n")


def write_lift_summary(rows, csv_path):
    import csv

    with open(csv_path, "w", newline="") as f:
        w = csv.DictWriter(f, fieldnames=_SUMMARY_COLUMNS)
        w.writeheader()
        for row in rows:
            w.writerow(row)
