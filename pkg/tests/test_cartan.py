import json

import pytest

from klr import (
    CartanGraph,
    GraphError,
    a1xa1,
    a2,
    cycle,
    single_vertex,
    weight_add,
    weight_from_dict,
    weight_of_seq,
    weight_size,
)


def test_cartan_values():
    g = a2()
    assert g.cartan("i", "i") == 2
    assert g.cartan("i", "j") == -1
    assert g.cartan("j", "i") == -1
    assert a1xa1().cartan("i", "j") == 0


def test_cartan_symmetry_all_stock_graphs():
    for g in (single_vertex(), a2(), a1xa1(), cycle(3), cycle(5)):
        for i in g.vertices:
            assert g.cartan(i, i) == 2
            for j in g.vertices:
                assert g.cartan(i, j) == g.cartan(j, i)


def test_unknown_vertex():
    with pytest.raises(GraphError):
        a2().cartan("i", "z")


def test_loop_rejected():
    with pytest.raises(GraphError):
        CartanGraph(["a"], [("a", "a")])


def test_duplicate_edge_rejected():
    with pytest.raises(GraphError):
        CartanGraph(["a", "b"], [("a", "b"), ("b", "a")])


def test_dangling_edge_rejected():
    with pytest.raises(GraphError):
        CartanGraph(["a"], [("a", "b")])


def test_json_round_trip(tmp_path):
    g = cycle(4)
    path = tmp_path / "g.json"
    path.write_text(json.dumps(g.to_json()))
    g2 = CartanGraph.load(str(path))
    assert g2.vertices == g.vertices
    assert g2.edges == g.edges


def test_cycle_structure():
    g = cycle(3)
    assert g.cartan("1", "2") == -1
    assert g.cartan("1", "3") == -1
    g4 = cycle(4)
    assert g4.cartan("1", "3") == 0
    assert g4.cartan("4", "1") == -1


def test_weights():
    w = weight_of_seq(("i", "j", "i"))
    assert w == (("i", 2), ("j", 1))
    assert weight_size(w) == 3
    assert weight_add(w, (("j", 1),)) == (("i", 2), ("j", 2))
    assert weight_from_dict({"i": 2, "j": 0}) == (("i", 2),)
