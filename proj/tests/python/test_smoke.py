import pytest

import triblock


def test_extremal_graph_is_tight():
    pg = triblock.extremal_graph(0)
    assert (pg.order, pg.size) == (70, 180)
    cert = triblock.certify(pg, "theta6-1", check_free=True)
    assert cert["identities_ok"]
    assert cert["all_nonpositive"]
    assert cert["pattern_free"]
    assert all(c["g"] == "0/1" for c in cert["clusters"])
    assert 17 * pg.size == 45 * (pg.order - 2)


def test_decompose_extremal():
    doc = triblock.decompose(triblock.extremal_graph(0))
    labels = {b["label"] for b in doc["blocks"]}
    assert labels == {"B5a"}
    assert len(doc["blocks"]) == 20


def test_catalog_has_nine_blocks():
    labels = [entry["label"] for entry in triblock.catalog()]
    assert labels == ["B2", "B3", "B4a", "B4b", "B5a", "B5b", "B5c", "B5d", "B6"]


def test_max_edges_small():
    r = triblock.max_edges(6, "theta6-1")
    assert r["max_edges"] == 10
    assert 17 * r["max_edges"] <= 45 * 4


def test_native_round_trip():
    pg = triblock.extremal_graph(0)
    again = triblock.parse_native(pg.to_native())
    assert again.rotations == pg.rotations
    assert sorted(again.face_lengths()) == sorted(pg.face_lengths())


def test_planarity_and_patterns():
    k5 = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    assert not triblock.is_planar(5, k5)
    hexagon = [(i, (i + 1) % 6) for i in range(6)]
    assert triblock.find_pattern(6, hexagon + [(0, 3)], "theta6-1") is not None
    assert triblock.find_pattern(6, hexagon, "theta6-1") is None


def test_errors_are_value_errors():
    with pytest.raises(triblock.TriblockError):
        triblock.certify(triblock.extremal_graph(0), "theta7")
    with pytest.raises(ValueError):
        triblock.parse_native("not a graph")
    with pytest.raises(triblock.TriblockError):
        triblock.certify(triblock.PlaneGraph(3, [[1, 2], [2, 0], [0, 1]]), "theta6-1")
