from __future__ import annotations

import json
from pathlib import Path

import pytest

from weakstar.graph import (
    CapMap,
    CapMapError,
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    are_isomorphic,
    block_decomposition,
    connected_graphs,
    degeneracy,
    degeneracy_ordering,
    is_gallai_tree,
    is_gdp_tree,
    is_three_connected,
    load_graph,
    parse_caps_spec,
    parse_graph,
    parse_graph6,
    to_graph6,
    truncated_cap,
    vertex_connectivity_at_least,
)
from weakstar.graph import families
from weakstar.graph.degeneracy import earlier_neighbour_counts

GRAPHS_DIR = Path(__file__).resolve().parents[1] / "data" / "graphs"


def test_graph6_and_json_fixtures_agree() -> None:
    from_g6 = load_graph(GRAPHS_DIR / "c4.g6")
    from_json = load_graph(GRAPHS_DIR / "c4.json")
    assert from_g6 == from_json
    assert to_graph6(from_json) == "Cl"
    assert parse_graph6(to_graph6(families.petersen())).m == 15


def test_graph_rejects_loops_parallel_edges_and_unknown_ids() -> None:
    with pytest.raises(GraphFormatError):
        Graph.from_edges(["0"], [("0", "0")])
    with pytest.raises(GraphFormatError):
        Graph.from_edges(["0", "1"], [("0", "1"), ("1", "0")])
    with pytest.raises(GraphFormatError):
        Graph.from_edges(["0"], [("0", "9")])
    with pytest.raises(GraphFormatError):
        parse_graph('{"vertices": ["0"]}')
    with pytest.raises(GraphFormatError):
        parse_graph6("")


def test_graph_is_immutable_value() -> None:
    c4 = families.cycle(4)
    smaller = c4.remove_vertices(["0"])
    assert c4.n == 4 and smaller.n == 3
    assert smaller == families.path(3).relabel({"0": "1", "1": "2", "2": "3"})
    assert hash(c4) == hash(families.cycle(4))
    assert families.complete(4).is_complete()
    assert not c4.is_complete()


def test_vertex_order_is_numeric_then_lexical() -> None:
    graph = Graph.from_edges(["10", "2", "b", "a"], [("10", "2")])
    assert graph.vertices == ("2", "10", "a", "b")


def test_cap_map_grammar(tmp_path: Path) -> None:
    star = families.star(3)
    assert parse_caps_spec(star, "deg").as_dict() == {"0": 3, "1": 1, "2": 1, "3": 1}
    assert parse_caps_spec(star, "trunc:2")["0"] == 2
    assert set(parse_caps_spec(star, "const:5").values()) == {5}

    caps_file = tmp_path / "caps.json"
    caps_file.write_text(json.dumps({"caps": {"0": 1, "1": 2, "2": 3, "3": 4}}), encoding="utf-8")
    assert parse_caps_spec(star, f"file:{caps_file}")["3"] == 4

    with pytest.raises(CapMapError):
        parse_caps_spec(star, "const:-1")
    with pytest.raises(CapMapError):
        parse_caps_spec(star, "bogus")
    with pytest.raises(CapMapError):
        CapMap({"0": -1})


def test_cap_map_pointwise_operations() -> None:
    graph = families.path(3)
    f = CapMap.constant(graph, 3)
    g = CapMap.degree(graph)
    assert g.le(f)
    assert f.minus(g).as_dict() == {"0": 2, "1": 1, "2": 2}
    assert f.pointwise_min(g) == g
    assert f.total() == 9


def test_connected_catalogue_counts() -> None:
    assert [len(connected_graphs(n)) for n in range(1, 6)] == [1, 1, 2, 6, 21]


def test_catalogue_representatives_are_pairwise_non_isomorphic() -> None:
    graphs = connected_graphs(4)
    for i, a in enumerate(graphs):
        for b in graphs[i + 1 :]:
            assert not are_isomorphic(a, b)


def test_gallai_and_gdp_trees() -> None:
    assert is_gallai_tree(families.complete(4))
    assert is_gallai_tree(families.cycle(5))
    assert not is_gallai_tree(families.cycle(4))
    assert is_gdp_tree(families.cycle(4))
    assert is_gallai_tree(families.bowtie())
    assert is_gdp_tree(families.k4_with_pendant())
    assert not is_gdp_tree(families.diamond())
    assert not is_gdp_tree(families.complete_bipartite(2, 4))
    with pytest.raises(DisconnectedGraphError):
        is_gdp_tree(Graph.from_edges(["0", "1"], []))


def test_block_decomposition_of_bowtie() -> None:
    tree = block_decomposition(families.bowtie())
    assert tree.cut_vertices == frozenset({"0"})
    assert len(tree.blocks) == 2
    assert tree.non_root_leaf_vertices() == frozenset({"1", "2", "3", "4"})


def test_degeneracy_values() -> None:
    assert degeneracy(families.cycle(5)) == 2
    assert degeneracy(families.octahedron()) == 4
    assert degeneracy(families.icosahedron()) == 5
    assert degeneracy(families.petersen()) == 3


def test_degeneracy_ordering_respects_cap() -> None:
    graph = families.wheel(6)
    assert degeneracy_ordering(graph, 2) is None
    order = degeneracy_ordering(graph, 3)
    assert order is not None
    assert max(earlier_neighbour_counts(graph, order).values()) <= 3


def test_components_consecutive_ordering() -> None:
    graph = families.cycle(3).disjoint_union(families.path(2).relabel({"0": "a", "1": "b"}))
    order = degeneracy_ordering(graph, 2, components_consecutive=True)
    assert order is not None
    assert set(order[:3]) == {"0", "1", "2"}
    assert set(order[3:]) == {"a", "b"}


def test_connectivity() -> None:
    assert vertex_connectivity_at_least(families.cycle(5), 2)
    assert not vertex_connectivity_at_least(families.cycle(5), 3)
    assert is_three_connected(families.octahedron())
    assert is_three_connected(families.wheel(5))
    assert not is_three_connected(families.cycle(6))
    assert not is_three_connected(families.bowtie())


def test_truncated_cap_clips_high_degree_only() -> None:
    graph = families.star(3)
    caps = truncated_cap(graph, 2)
    assert caps["0"] == 2
    assert all(caps[leaf] == 1 for leaf in ("1", "2", "3"))
