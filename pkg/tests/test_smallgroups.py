import random

from codegroups import smallgroups as sg

rng = random.Random(0x5A11)


def zmod(n):
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return n, table


def test_group_from_elements():
    els = list(range(8))
    G = sg.group_from_elements(els, lambda a, b: (a + b) % 8)
    assert G[0] == 8
    assert sg.g_orders(G) == [1, 8, 4, 8, 2, 8, 4, 8]
    assert sg.is_abelian(G)


def test_orders_and_inverse():
    G = zmod(12)
    orders = sg.g_orders(G)
    inv = sg.g_inverse(G)
    for i in range(12):
        assert G[1][i][inv[i]] == 0
        assert 12 % orders[i] == 0


def test_identify_model_names():
    m = sg.models()
    for name, G in m.items():
        assert sg.identify(G) == name


def test_identify_under_relabeling():
    for name in ("D4", "Q8", "Z4xZ2", "D8", "Q16", "Z8xZ2", "Z4^2", "M4(2)"):
        n, table = sg.models()[name]
        perm = [0] + rng.sample(range(1, n), n - 1)
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        shuffled = [
            [perm[table[inv[a]][inv[b]]] for b in range(n)] for a in range(n)
        ]
        assert sg.identify((n, shuffled)) == name
        assert sg.fingerprint((n, shuffled)) == sg.fingerprint((n, table))


def test_signature_separates_order16_models():
    sigs = {}
    for name, G in sg.models().items():
        if G[0] != 16:
            continue
        s = sg.signature(G)
        assert s not in sigs, (name, sigs.get(s))
        sigs[s] = name
    assert len(sigs) == 14


def test_fingerprint_does_not_separate_everything():
    fps = {}
    for name, G in sg.models().items():
        if G[0] == 16:
            fps.setdefault(sg.fingerprint(G), []).append(name)
    collisions = [v for v in fps.values() if len(v) > 1]
    assert collisions, "every order-16 model got a distinct fingerprint"


def test_exact_iso_distinguishes():
    m = sg.models()
    assert sg.exact_iso(m["D4"], m["Q8"]) is None
    iso = sg.exact_iso(m["D4"], m["D4"])
    assert iso is not None and iso[0] == 0


def test_derived_and_center():
    m = sg.models()
    assert len(sg.derived_subgroup(m["Z2^4"])) == 1
    assert len(sg.derived_subgroup(m["D8"])) == 4
    assert not sg.is_abelian(m["D8"])
    assert sg.is_abelian(m["Z4^2"])


def test_min_gens_generate():
    for name, G in sg.models().items():
        gens = sg.min_gens(G)
        assert len(sg.subgroup_closure(G, gens)) == G[0]
        if G[0] > 1 and sg.is_abelian(G) and name.startswith("Z") \
                and not any(c in name for c in "x^:"):
            assert len(gens) == 1
