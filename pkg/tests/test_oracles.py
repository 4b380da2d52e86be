from __future__ import annotations

import pytest

from weakstar.config import OracleLimits, SolverSettings
from weakstar.graph import CapMap, Graph
from weakstar.graph import families
from weakstar.oracles import (
    Cover,
    ListAssignment,
    ListAssignmentError,
    ParameterUndecidedError,
    decide_dp_paintable,
    decide_paintable,
    induced_cover,
    is_cover_colouring,
    is_dp_f_colourable,
    is_f_choosable,
    is_proper_list_colouring,
    parameter,
    solve_cover_colouring,
    solve_list_colouring,
)


def _constant_lists(graph: Graph, colours) -> ListAssignment:
    return ListAssignment.of({v: colours for v in graph.vertices})


def _c4_cover(twisted: bool) -> Cover:
    c4 = families.cycle(4)
    nodes = {v: (f"{v}:0", f"{v}:1") for v in c4.vertices}
    links = []
    for index, (u, v) in enumerate(c4.edges):
        if twisted and index == 0:
            links += [(f"{u}:0", f"{v}:1"), (f"{u}:1", f"{v}:0")]
        else:
            links += [(f"{u}:0", f"{v}:0"), (f"{u}:1", f"{v}:1")]
    return Cover.build(nodes, links)


def test_list_colouring_small_cases() -> None:
    triangle = families.complete(3)
    assert solve_list_colouring(triangle, _constant_lists(triangle, {1, 2})) is None

    c4 = families.cycle(4)
    lists = _constant_lists(c4, {1, 2})
    colouring = solve_list_colouring(c4, lists)
    assert colouring is not None
    assert is_proper_list_colouring(c4, lists, colouring)

    with pytest.raises(ListAssignmentError):
        solve_list_colouring(c4, lists.restrict(["0", "1"]))


def test_induced_cover_matches_list_colouring() -> None:
    for graph, colours in ((families.complete(3), {1, 2}), (families.cycle(4), {1, 2}), (families.cycle(5), {1, 2})):
        lists = _constant_lists(graph, colours)
        by_lists = solve_list_colouring(graph, lists)
        by_cover = solve_cover_colouring(graph, induced_cover(graph, lists))
        assert (by_lists is None) == (by_cover is None)


def test_twisted_cover_of_c4_has_no_colouring() -> None:
    c4 = families.cycle(4)
    twisted = _c4_cover(twisted=True)
    assert twisted.is_simple()
    assert solve_cover_colouring(c4, twisted) is None
    straight = _c4_cover(twisted=False)
    colouring = solve_cover_colouring(c4, straight)
    assert colouring is not None
    assert is_cover_colouring(straight, colouring)


def test_cover_colouring_of_empty_graph() -> None:
    assert solve_cover_colouring(Graph.empty(), Cover.build({}, [])) == {}


def test_choosability_spot_values() -> None:
    c4 = families.cycle(4)
    assert is_f_choosable(c4, CapMap.constant(c4, 2)).is_yes
    triangle = families.complete(3)
    assert is_f_choosable(triangle, CapMap.constant(triangle, 2)).is_no


def test_k24_is_not_2_choosable_and_witness_checks_out() -> None:
    graph = families.complete_bipartite(2, 4)
    result = is_f_choosable(graph, CapMap.constant(graph, 2))
    assert result.is_no
    witness = result.witness
    assert witness.is_f_assignment(CapMap.constant(graph, 2))
    assert solve_list_colouring(graph, witness) is None

    known = ListAssignment.of(
        {"0": {1, 2}, "1": {3, 4}, "2": {1, 3}, "3": {1, 4}, "4": {2, 3}, "5": {2, 4}}
    )
    assert solve_list_colouring(graph, known) is None


def test_dp_colourability_spot_values() -> None:
    c4 = families.cycle(4)
    result = is_dp_f_colourable(c4, CapMap.constant(c4, 2))
    assert result.is_no
    assert solve_cover_colouring(c4, result.witness) is None
    c5 = families.cycle(5)
    assert is_dp_f_colourable(c5, CapMap.constant(c5, 3)).is_yes
    k1 = Graph.from_edges(["0"], [])
    assert is_dp_f_colourable(k1, {"0": 1}).is_yes


def test_zero_cap_is_an_immediate_no() -> None:
    k1 = Graph.from_edges(["0"], [])
    assert is_f_choosable(k1, {"0": 0}).is_no
    assert is_dp_f_colourable(k1, {"0": 0}).is_no
    assert decide_paintable(k1, {"0": 0}).is_no


def test_painting_games() -> None:
    c4 = families.cycle(4)
    assert decide_paintable(c4, CapMap.constant(c4, 2)).is_yes
    assert decide_dp_paintable(c4, CapMap.constant(c4, 2)).is_no
    k1 = Graph.from_edges(["0"], [])
    assert decide_dp_paintable(k1, {"0": 1}).is_yes


def test_games_without_the_certificate_shortcut_agree() -> None:
    settings = SolverSettings(use_certificates=False)
    diamond = families.diamond()
    caps = CapMap.degree(diamond)
    played = decide_dp_paintable(diamond, caps, settings)
    assert played.is_yes and played.via == "game"
    assert decide_dp_paintable(diamond, caps).via == "weakstar"


def test_size_guard_reports_unknown() -> None:
    settings = SolverSettings(limits=OracleLimits(paintable_max_n=2, dp_paintable_max_n=2), use_certificates=False)
    c4 = families.cycle(4)
    result = decide_paintable(c4, CapMap.constant(c4, 2), settings)
    assert result.status == "unknown"
    assert result.reason


def test_parameters() -> None:
    assert parameter(families.complete_bipartite(2, 4), "ch") == 3
    assert parameter(families.cycle(4), "chi_P") == 2
    assert parameter(families.cycle(4), "chi_DP") == 3
    assert parameter(families.cycle(4), "chi_DPP") == 3
    assert parameter(families.complete(3), "ch") == 3
    assert parameter(Graph.empty(), "ch") == 0
    with pytest.raises(ValueError):
        parameter(families.cycle(4), "chi")  # type: ignore[arg-type]


def test_painting_refutes_from_nested_lists_before_the_size_guard() -> None:
    c5 = families.cycle(5)
    refuted = decide_dp_paintable(c5, CapMap.constant(c5, 2))
    assert refuted.is_no and refuted.via == "lists"
    assert parameter(c5, "chi_DPP") == 3
    assert parameter(c5, "chi_DPP", SolverSettings(use_certificates=False)) == 3


def test_parameter_reports_undecided_instances() -> None:
    settings = SolverSettings(limits=OracleLimits(paintable_max_n=2, dp_paintable_max_n=2), use_certificates=False)
    with pytest.raises(ParameterUndecidedError):
        parameter(families.cycle(4), "chi_P", settings)
