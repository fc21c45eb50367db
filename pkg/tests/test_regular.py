import random

import pytest

from codegroups import regular
from codegroups.affine import AffineElement, affine_identity, compose, element_order
from codegroups.gf2 import CapExceeded, GF2Mat, GF2Vec

rng = random.Random(0x2E97)


def test_witness_is_regular_dihedral():
    rec = regular.dihedral_witness_r3()
    assert rec.order == 8
    assert regular.is_regular(rec, 3)
    assert rec.iso_type() == "D4"
    assert not rec.is_abelian()


def test_close_produces_group():
    rec = regular.dihedral_witness_r3()
    els = set(rec.elements)
    for e1 in els:
        for e2 in els:
            assert compose(e1, e2) in els
    assert affine_identity(3) in els


def test_close_empty_and_cap():
    with pytest.raises(ValueError):
        regular.close([])
    gens = regular.dihedral_witness_r3().generators
    with pytest.raises(CapExceeded):
        regular.close(gens, cap=4)


def test_enumerate_counts_small(subs2, subs3):
    assert len(subs2) == 4
    assert len(subs3) == 232


def test_enumerate_is_thread_independent(subs3):
    threaded = regular.enumerate_regular(3, threads=2)
    assert [s.assign for s in threaded] == [s.assign for s in subs3]


def test_transversal_bijection(subs3):
    for rec in rng.sample(subs3, 10):
        starts = {e.a.bits for e in rec.elements}
        assert starts == set(range(8))
        assert len(rec.elements) == 8


def test_all_matrix_parts_unipotent(subs3):
    from codegroups.affine import gl_tables

    tb = gl_tables(3)
    for rec in rng.sample(subs3, 10):
        assert all(0 <= u < tb.nu for u in rec.assign)


def test_conjugacy_r2(classes2):
    assert len(classes2) == 2
    types = sorted(cl.representative.iso_type() for cl in classes2)
    assert types == ["Z2^2", "Z4"]
    assert sorted(cl.orbit_size for cl in classes2) == [1, 3]


def test_conjugacy_r3(classes3):
    assert len(classes3) == 8
    assert sorted(cl.orbit_size for cl in classes3) == \
        [1, 7, 14, 21, 21, 42, 42, 84]
    assert sum(cl.orbit_size for cl in classes3) == 232
    for cl in classes3:
        assert len(cl.members) == cl.orbit_size


def test_iso_types_r3(classes3):
    reps = [cl.representative for cl in classes3]
    iso = regular.isomorphism_classes(reps)
    by_name = {}
    for c in iso:
        by_name.setdefault(c.type_name, 0)
        by_name[c.type_name] += len(c.members)
    assert by_name == {"D4": 2, "Q8": 1, "Z4xZ2": 3, "Z2^3": 2}
    abelian = {c.type_name for c in iso if c.abelian}
    assert abelian == {"Z4xZ2", "Z2^3"}


def test_conjugation_preserves_invariants(subs3, classes3):
    from codegroups.affine import enumerate_gl

    rec = subs3[17]
    mats = list(enumerate_gl(3))
    for _ in range(5):
        A = rng.choice(mats)
        g = AffineElement(GF2Vec(rng.randrange(8), 3), A)
        conj = regular.conjugate_subgroup(rec, g)
        assert conj.fingerprint == rec.fingerprint
        assert regular.find_class(classes3, conj).class_id == \
            regular.find_class(classes3, rec).class_id


def test_find_class_misses(classes3):
    dihedral, _ = regular.fixture_groups()
    assert regular.find_class(classes3, dihedral) is None


def test_max_element_order(subs3, classes3):
    assert regular.max_element_order(subs3, 3) == 4
    reps = [cl.representative for cl in classes3]
    assert regular.max_element_order(reps, 3) == 4
    for rec in rng.sample(subs3, 5):
        assert max(element_order(e) for e in rec.elements) <= 4


def test_fixture_groups():
    dihedral, abelian = regular.fixture_groups()
    assert dihedral.order == 16
    assert dihedral.iso_type() == "D8"
    assert not regular.is_regular(dihedral, 4)
    assert abelian.order == 16
    assert abelian.iso_type() == "Z8xZ2"
    assert regular.is_regular(abelian, 4)
    assert abelian.is_abelian()
    g1, g2 = abelian.generators
    assert sorted((element_order(g1), element_order(g2))) == [2, 8]
    assert compose(g1, g2) == compose(g2, g1)


def test_quartic_solutions():
    sols = {v.bits for v in regular.quartic_solutions()}
    assert sols == {0, 1, 3, 7, 15, 14, 12, 8}


def test_dihedral_existence_small():
    ok, cert = regular.dihedral_regular_exists(3)
    assert ok and cert["regular"] and cert["iso_type"] == "D4"
    ok, cert = regular.dihedral_regular_exists(2)
    assert not ok
    for r in (5, 6, 9):
        ok, cert = regular.dihedral_regular_exists(r)
        assert not ok
        assert cert["order_bound"] < cert["rotation_order"]
    with pytest.raises(ValueError):
        regular.dihedral_regular_exists(1)


def test_direct_product(classes2):
    by_type = {cl.representative.iso_type(): cl.representative
               for cl in classes2}
    z4sq = regular.direct_product(by_type["Z4"], by_type["Z4"])
    assert z4sq.r == 4 and z4sq.order == 16
    assert regular.is_regular(z4sq, 4)
    assert z4sq.iso_type() == "Z4^2"
    mixed = regular.direct_product(by_type["Z2^2"], by_type["Z4"])
    assert regular.is_regular(mixed, 4)
    assert mixed.iso_type() == "Z4xZ2^2"


def test_classification_rows(classes3):
    rows = regular.classification_rows(classes3)
    assert len(rows) == 8
    assert [row["class_id"] for row in rows] == list(range(8))
    for row in rows:
        assert set(row) == {"class_id", "order", "generators", "orbit_size",
                            "fingerprint_hash", "iso_type_name_or_null",
                            "abelian"}
        assert row["order"] == 8
        assert len(row["fingerprint_hash"]) == 16


def test_report_files_deterministic(classes3, tmp_path):
    rows = regular.classification_rows(classes3)
    j1, c1 = tmp_path / "a.json", tmp_path / "a.csv"
    j2, c2 = tmp_path / "b.json", tmp_path / "b.csv"
    regular.write_classification_report(rows, json_path=j1, csv_path=c1)
    regular.write_classification_report(rows, json_path=j2, csv_path=c2)
    assert j1.read_bytes() == j2.read_bytes()
    assert c1.read_bytes() == c2.read_bytes()
    assert c1.read_text().count("\n") == 9


def test_count_by_closure_small(subs2, subs3):
    assert regular.count_regular_by_closure(2) == len(subs2)
    assert regular.count_regular_by_closure(3) == len(subs3)


def test_fingerprint_hash_stable():
    fp = ((2, 4), (4, 8))
    h = regular.fingerprint_hash(fp)
    assert h == regular.fingerprint_hash(tuple(fp))
    assert len(h) == 16
    assert h != regular.fingerprint_hash(((2, 4),))
