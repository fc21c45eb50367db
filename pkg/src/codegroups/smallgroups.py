"""Multiplication-table group machinery and model groups of order <= 16.

A group is carried as (n, table) with table[i][j] the index of the product
and index 0 the identity.  Every 2-group of order <= 16 is matched by name
against the model list; the signature invariant separates all of them, and
exact_iso certifies the match.
"""

from itertools import product


def group_from_elements(els, op):
    """Build (n, table) from a closed element list and a binary operation."""
    els = list(els)
    ident = None
    for e in els:
        if all(op(e, x) == x for x in els):
            ident = e
            break
    if ident is None:
        raise ValueError("no identity in element list")
    els.remove(ident)
    els.insert(0, ident)
    index = {e: i for i, e in enumerate(els)}
    table = [[index[op(a, b)] for b in els] for a in els]
    return len(els), table


def close_elements(gens, op):
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        a = frontier.pop()
        for b in list(seen):
            for c in (op(a, b), op(b, a)):
                if c not in seen:
                    seen.add(c)
                    frontier.append(c)
    return seen


def g_orders(G):
    n, table = G
    out = [1] * n
    for i in range(n):
        k = 1
        x = i
        while x != 0:
            x = table[x][i]
            k += 1
            if k > n:
                raise ValueError("not a group table: power cycle misses identity")
        out[i] = k
    return out


def g_inverse(G):
    n, table = G
    inv = [0] * n
    for i in range(n):
        for j in range(n):
            if table[i][j] == 0:
                inv[i] = j
                break
    return inv


def subgroup_closure(G, gens):
    n, table = G
    seen = {0} | set(gens)
    frontier = list(seen)
    while frontier:
        a = frontier.pop()
        for b in list(seen):
            for c in (table[a][b], table[b][a]):
                if c not in seen:
                    seen.add(c)
                    frontier.append(c)
    return seen


def centralizer_sizes(G):
    n, table = G
    return [
        sum(1 for j in range(n) if table[i][j] == table[j][i]) for i in range(n)
    ]


def is_abelian(G):
    n, table = G
    return all(table[i][j] == table[j][i] for i in range(n) for j in range(i))


def derived_subgroup(G):
    n, table = G
    inv = g_inverse(G)
    comms = set()
    for a in range(n):
        for b in range(n):
            comms.add(table[table[inv[a]][inv[b]]][table[a][b]])
    return subgroup_closure(G, comms)


def _order_hist(orders):
    hist = {}
    for k in orders:
        hist[k] = hist.get(k, 0) + 1
    return tuple(sorted(hist.items()))


def signature(G):
    """(order histogram, |center|, |derived|, abelianization order histogram).

    Separates all groups of order <= 16 of 2-power order; used as a cheap
    complete invariant before exact_iso certifies a name.
    """
    n, table = G
    orders = g_orders(G)
    zsize = sum(
        1
        for i in range(n)
        if all(table[i][j] == table[j][i] for j in range(n))
    )
    der = derived_subgroup(G)
    dlist = sorted(der)
    dindex = {d: i for i, d in enumerate(dlist)}
    # quotient by the derived subgroup
    coset_of = [None] * n
    reps = []
    for i in range(n):
        if coset_of[i] is not None:
            continue
        c = len(reps)
        reps.append(i)
        for d in der:
            coset_of[table[i][d]] = c
    qn = len(reps)
    qtable = [
        [coset_of[table[reps[a]][reps[b]]] for b in range(qn)] for a in range(qn)
    ]
    qorders = g_orders((qn, qtable))
    return (_order_hist(orders), zsize, len(der), _order_hist(qorders))


def fingerprint(G):
    """Sorted multiset of (element order, centralizer size)."""
    orders = g_orders(G)
    cents = centralizer_sizes(G)
    return tuple(sorted(zip(orders, cents)))


def min_gens(G):
    """A small generating list, greedy by descending element order."""
    n, table = G
    orders = g_orders(G)
    order = sorted(range(n), key=lambda i: -orders[i])
    gens = []
    span = {0}
    for i in order:
        if i in span:
            continue
        gens.append(i)
        span = subgroup_closure(G, gens)
        if len(span) == n:
            break
    return gens


def exact_iso(G, H):
    """An isomorphism G -> H as an image list, or None.

    Backtracking over images of a minimal generating sequence, candidates
    filtered by (order, centralizer size).  A None return is a proof of
    non-isomorphism because the search is exhaustive over filtered images.
    """
    n, gt = G
    m, ht = H
    if n != m:
        return None
    if fingerprint(G) != fingerprint(H):
        return None
    gorders = g_orders(G)
    gcents = centralizer_sizes(G)
    horders = g_orders(H)
    hcents = centralizer_sizes(H)
    gens = min_gens(G)

    # express every element of G as (parent, generator) reachable from 0
    parent = {0: None}
    frontier = [0]
    while frontier:
        x = frontier.pop(0)
        for gi, g in enumerate(gens):
            y = gt[x][g]
            if y not in parent:
                parent[y] = (x, gi)
                frontier.append(y)
    if len(parent) != n:
        raise AssertionError("generating set does not generate")

    cand = []
    for g in gens:
        cand.append(
            [
                h
                for h in range(m)
                if horders[h] == gorders[g] and hcents[h] == gcents[g]
            ]
        )

    def build(images):
        phi = {0: 0}
        frontier = [0]
        while frontier:
            x = frontier.pop(0)
            for gi in range(len(gens)):
                y = gt[x][gens[gi]]
                fy = ht[phi[x]][images[gi]]
                if y in phi:
                    if phi[y] != fy:
                        return None
                else:
                    phi[y] = fy
                    frontier.append(y)
        if len(set(phi.values())) != n:
            return None
        for a in range(n):
            for b in range(n):
                if phi[gt[a][b]] != ht[phi[a]][phi[b]]:
                    return None
        return [phi[i] for i in range(n)]

    def rec(k, images):
        if k == len(gens):
            return build(images)
        for h in cand[k]:
            if h in images:
                continue
            images.append(h)
            got = rec(k + 1, images)
            if got is not None:
                return got
            images.pop()
        return None

    return rec(0, [])


# model groups

def _cyclic_product(factors):
    def op(x, y):
        return tuple((a + b) % f for a, b, f in zip(x, y, factors))

    els = list(product(*[range(f) for f in factors]))
    return group_from_elements(els, op)


def _metacyclic16(q, bsq):
    """<a, b | a^8 = 1, b^2 = a^bsq, b a b^-1 = a^q> as pairs (i, j)."""

    def op(x, y):
        i1, j1 = x
        i2, j2 = y
        i = (i1 + pow(q, j1, 8) * i2 + bsq * (j1 & j2)) % 8
        return (i, (j1 + j2) % 2)

    els = [(i, j) for i in range(8) for j in range(2)]
    return group_from_elements(els, op)


def _metacyclic8(q, bsq):
    def op(x, y):
        i1, j1 = x
        i2, j2 = y
        i = (i1 + pow(q, j1, 4) * i2 + bsq * (j1 & j2)) % 4
        return (i, (j1 + j2) % 2)

    els = [(i, j) for i in range(4) for j in range(2)]
    return group_from_elements(els, op)


def _direct(G, H):
    n1, t1 = G
    n2, t2 = H

    def op(x, y):
        return (t1[x[0]][y[0]], t2[x[1]][y[1]])

    els = [(a, b) for a in range(n1) for b in range(n2)]
    return group_from_elements(els, op)


def _pauli():
    """Central product of the order-8 dihedral group with Z_4.

    Concretely the closure of the complex 2x2 matrices X, Z and iI, with
    exact integer complex entries.
    """

    def mmul(p, q):
        (a, b), (c, d) = p[0], p[1]
        (e, f), (g, h) = q[0], q[1]

        def cm(z, w):
            return (z[0] * w[0] - z[1] * w[1], z[0] * w[1] + z[1] * w[0])

        def ca(z, w):
            return (z[0] + w[0], z[1] + w[1])

        return (
            (ca(cm(a, e), cm(b, g)), ca(cm(a, f), cm(b, h))),
            (ca(cm(c, e), cm(d, g)), ca(cm(c, f), cm(d, h))),
        )

    zero = (0, 0)
    one = (1, 0)
    ii = (0, 1)
    x = ((zero, one), (one, zero))
    z = ((one, zero), (zero, (-1, 0)))
    s = ((ii, zero), (zero, ii))
    els = close_elements([x, z, s], mmul)
    assert len(els) == 16
    return group_from_elements(els, mmul)


def _z4_semi_z4():
    def op(x, y):
        i1, j1 = x
        i2, j2 = y
        return ((i1 + pow(3, j1, 4) * i2) % 4, (j1 + j2) % 4)

    els = [(i, j) for i in range(4) for j in range(4)]
    return group_from_elements(els, op)


def _z22_semi_z4():
    def op(x, y):
        (x1, y1), j1 = x
        (x2, y2), j2 = y
        if j1 % 2:
            x2, y2 = y2, x2
        return (((x1 + x2) % 2, (y1 + y2) % 2), (j1 + j2) % 4)

    els = [((a, b), j) for a in range(2) for b in range(2) for j in range(4)]
    return group_from_elements(els, op)


def _models():
    out = {
        "Z1": _cyclic_product([1]),
        "Z2": _cyclic_product([2]),
        "Z4": _cyclic_product([4]),
        "Z2^2": _cyclic_product([2, 2]),
        "Z8": _cyclic_product([8]),
        "Z4xZ2": _cyclic_product([4, 2]),
        "Z2^3": _cyclic_product([2, 2, 2]),
        "D4": _metacyclic8(3, 0),
        "Q8": _metacyclic8(3, 2),
        "Z16": _cyclic_product([16]),
        "Z8xZ2": _cyclic_product([8, 2]),
        "Z4^2": _cyclic_product([4, 4]),
        "Z4xZ2^2": _cyclic_product([4, 2, 2]),
        "Z2^4": _cyclic_product([2, 2, 2, 2]),
        "D8": _metacyclic16(7, 0),
        "SD16": _metacyclic16(3, 0),
        "M4(2)": _metacyclic16(5, 0),
        "Q16": _metacyclic16(7, 4),
        "D4xZ2": _direct(_metacyclic8(3, 0), _cyclic_product([2])),
        "Q8xZ2": _direct(_metacyclic8(3, 2), _cyclic_product([2])),
        "D4oZ4": _pauli(),
        "Z4:Z4": _z4_semi_z4(),
        "Z2^2:Z4": _z22_semi_z4(),
    }
    return out


_MODEL_CACHE = None
_SIGNATURE_CACHE = None


def models():
    global _MODEL_CACHE
    if _MODEL_CACHE is None:
        _MODEL_CACHE = _models()
    return _MODEL_CACHE


def model_signatures():
    global _SIGNATURE_CACHE
    if _SIGNATURE_CACHE is None:
        sigs = {}
        for name, G in models().items():
            s = (G[0], signature(G))
            assert s not in sigs, "signature collision: %s vs %s" % (name, sigs[s])
            sigs[s] = name
        _SIGNATURE_CACHE = sigs
    return _SIGNATURE_CACHE


def identify(G, certify=True):
    """Name of the isomorphism type for groups of order <= 16, else None."""
    n = G[0]
    if n > 16:
        return None
    key = (n, signature(G))
    name = model_signatures().get(key)
    if name is None:
        return None
    if certify and exact_iso(G, models()[name]) is None:
        raise AssertionError("signature matched %s but exact_iso failed" % name)
    return name
