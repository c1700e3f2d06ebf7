import json

import pytest

from homconf.cartan import parse_quiver, positive_roots
from homconf.errors import InputError, IntegrityError
from homconf.orbit import (
    cache_file_name,
    fundamental_domain,
    hom_orbit,
    hom_table,
    hom_table_cached,
    load_hom_table,
    obj,
    save_hom_table,
    table_document,
)


def test_domain_a1():
    q = parse_quiver("A1")
    assert fundamental_domain(q) == (obj((1,), 0),)


def test_domain_a2():
    q = parse_quiver("A2")
    assert fundamental_domain(q) == (
        obj((0, 1), 0),
        obj((1, 0), 0),
        obj((1, 1), 0),
        obj((1, 0), 1),
    )


@pytest.mark.parametrize("spec,size", [("A3", 9), ("D4", 20), ("E6", 66)])
def test_domain_size(spec, size):
    q = parse_quiver(spec)
    domain = fundamental_domain(q)
    assert len(domain) == size
    assert len(domain) == 2 * len(positive_roots(q)) - q.rank
    assert list(domain) == sorted(domain)


def test_hom_orbit_case_table_a2():
    q = parse_quiver("A2")
    assert hom_orbit(q, obj((0, 1), 0), obj((1, 0), 1)) == 1  # ext(S2, S1)
    assert hom_orbit(q, obj((1, 0), 1), obj((1, 1), 0)) == 0  # hom(P2, S1)
    for x in fundamental_domain(q):
        assert hom_orbit(q, x, x) == 1


def test_hom_orbit_rejects_non_domain_objects():
    q = parse_quiver("A2")
    with pytest.raises(InputError):
        hom_orbit(q, obj((0, 1), 1), obj((1, 0), 0))  # (0,1) is injective


def test_shift_flip_symmetry():
    for spec in ("A3", "D4"):
        q = parse_quiver(spec)
        table = hom_table(q)
        shifted = [x for x in table.objects if x.shift == 1]
        for x in shifted:
            for y in shifted:
                assert table.dim(x, y) == table.dim(obj(x.root, 0), obj(y.root, 0))


def test_table_a1():
    q = parse_quiver("A1")
    assert hom_table(q).dims == ((1,),)


def test_table_a2_has_two_maximal_orthogonal_pairs():
    q = parse_quiver("A2")
    table = hom_table(q)
    assert all(table.dims[i][i] == 1 for i in range(4))
    pairs = [
        (i, j)
        for i in range(4)
        for j in range(i + 1, 4)
        if table.dims[i][j] == 0 and table.dims[j][i] == 0
    ]
    assert len(pairs) == 2


def test_d4_table_symmetric_under_outer_automorphism():
    # All-inward orientation so permuting the outer vertices is an automorphism.
    q = parse_quiver("D4:1>2,3>2,4>2")
    table = hom_table(q)

    def relabel(x, perm):
        root = list(x.root)
        new = [0] * 4
        for v in range(1, 5):
            new[perm[v] - 1] = root[v - 1]
        return obj(tuple(new), x.shift)

    perm = {1: 3, 3: 4, 4: 1, 2: 2}
    for x in table.objects:
        for y in table.objects:
            assert table.dim(x, y) == table.dim(relabel(x, perm), relabel(y, perm))


def test_save_load_round_trip(tmp_path):
    q = parse_quiver("A3")
    table = hom_table(q)
    path = tmp_path / cache_file_name(q)
    save_hom_table(table, str(path))
    loaded = load_hom_table(str(path), q)
    assert loaded == table


def test_load_rejects_edited_dims(tmp_path):
    q = parse_quiver("A2")
    path = tmp_path / "t.json"
    save_hom_table(hom_table(q), str(path))
    doc = json.loads(path.read_text())
    doc["dims"][0][1] += 1
    path.write_text(json.dumps(doc))
    with pytest.raises(IntegrityError):
        load_hom_table(str(path))


def test_load_rejects_wrong_quiver(tmp_path):
    q3, q4 = parse_quiver("A3"), parse_quiver("A4")
    path = tmp_path / "t.json"
    save_hom_table(hom_table(q3), str(path))
    with pytest.raises(IntegrityError):
        load_hom_table(str(path), q4)


def test_load_rejects_garbage(tmp_path):
    path = tmp_path / "t.json"
    path.write_text("{not json")
    with pytest.raises(IntegrityError):
        load_hom_table(str(path))
    path.write_text(json.dumps({"quiver": "A2"}))
    with pytest.raises(IntegrityError):
        load_hom_table(str(path))


def test_disk_cache_round_trip(tmp_path):
    q = parse_quiver("A4")
    first = hom_table_cached(q, str(tmp_path))
    assert (tmp_path / cache_file_name(q)).exists()
    again = hom_table_cached(q, str(tmp_path))
    assert first == again


def test_table_document_schema():
    q = parse_quiver("A2")
    doc = table_document(hom_table(q))
    assert set(doc) == {"quiver", "objects", "dims", "sha256"}
    assert doc["quiver"] == "A2:2>1"
    assert doc["objects"][0] == {"root": [0, 1], "shift": 0}
