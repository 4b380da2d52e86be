from __future__ import annotations

import pytest

from weakstar.alon_tarsi import (
    EdgeWeighting,
    Orientation,
    SizeLimitError,
    all_orientations,
    at_number,
    certificate_to_at_orientation,
    coefficient_oracle,
    eulerian_diff,
    eulerian_diff_weighted,
    is_f_at,
    polynomial_coefficients,
)
from weakstar.calculus import Operation, PreconditionError, decide_weak_star, strict_certificate
from weakstar.config import OracleLimits, SolverSettings
from weakstar.graph import CapMap, Graph, connected_graphs, connected_graphs_up_to
from weakstar.graph import families


def _directed_cycle(n: int) -> Orientation:
    graph = families.cycle(n)
    return Orientation.from_arcs(graph, [(str(i), str((i + 1) % n)) for i in range(n)])


def test_eulerian_diff_small_orientations() -> None:
    k2 = families.complete(2)
    assert eulerian_diff(Orientation.from_arcs(k2, [("0", "1")])) == 1
    assert eulerian_diff(_directed_cycle(3)) == 0
    assert eulerian_diff(_directed_cycle(4)) == 2


def test_weighted_eulerian_diff() -> None:
    c4 = _directed_cycle(4)
    unit = EdgeWeighting.unit(c4.base)
    assert eulerian_diff_weighted(c4, unit) == eulerian_diff(c4)
    heavy = EdgeWeighting({**unit.weights, ("0", "1"): 2})
    assert eulerian_diff_weighted(c4, heavy) == 1


def test_frontier_and_subset_methods_agree() -> None:
    graph = families.wheel(4)
    for orientation in all_orientations(graph):
        assert eulerian_diff(orientation, method="subset") == eulerian_diff(orientation, method="frontier")


def test_coefficient_oracle_spot_values() -> None:
    k2 = families.complete(2)
    assert abs(coefficient_oracle(k2, {"0": 1, "1": 0})) == 1
    assert abs(coefficient_oracle(families.cycle(4), {v: 1 for v in "0123"})) == 2
    assert coefficient_oracle(families.cycle(3), {v: 1 for v in "012"}) == 0
    assert coefficient_oracle(k2, {"0": 2, "1": 0}) == 0


@pytest.mark.parametrize("graph", [families.complete(4), families.diamond(), families.wheel(4), families.cycle(5)])
def test_coefficient_matches_eulerian_difference(graph: Graph) -> None:
    for orientation in all_orientations(graph):
        expected = abs(eulerian_diff(orientation))
        assert abs(coefficient_oracle(graph, orientation.out_degree())) == expected


def test_weighted_identity_on_small_graphs() -> None:
    graph = families.diamond()
    weights = EdgeWeighting({edge: 1 + (i % 3) for i, edge in enumerate(graph.edges)})
    for orientation in all_orientations(graph):
        expected = abs(eulerian_diff_weighted(orientation, weights))
        out = orientation.weighted_out_degree(weights)
        assert abs(coefficient_oracle(graph, out, weights)) == expected


def test_is_f_at_spot_values() -> None:
    c4 = families.cycle(4)
    yes = is_f_at(c4, CapMap.constant(c4, 2))
    assert yes.is_yes
    assert yes.diff != 0
    assert all(t + 1 <= 2 for t in yes.orientation.out_degree().values())

    triangle = families.complete(3)
    assert is_f_at(triangle, CapMap.constant(triangle, 2)).status == "no"

    k2 = Graph.from_edges(["x", "y"], [("x", "y")])
    edge = is_f_at(k2, {"x": 2, "y": 1})
    assert edge.is_yes
    assert edge.orientation.arcs == (("x", "y"),)


def test_is_f_at_respects_edge_guard() -> None:
    settings = SolverSettings(limits=OracleLimits(at_max_edges=3))
    k4 = families.complete(4)
    assert is_f_at(k4, CapMap.constant(k4, 4), settings).status == "unknown"
    with pytest.raises(SizeLimitError):
        at_number(k4, settings)


def test_at_numbers() -> None:
    assert at_number(families.cycle(4)) == 2
    assert at_number(families.cycle(3)) == 3
    assert at_number(families.complete(4)) == 4
    assert at_number(Graph.empty()) == 0


def test_extraction_from_vertex_deletions_is_acyclic() -> None:
    c4 = families.cycle(4)
    caps = CapMap.constant(c4, 3)
    extracted = certificate_to_at_orientation(c4, caps, strict_certificate(c4, caps))
    assert extracted.weights.is_unit()
    assert extracted.check(caps) == (True, 1)


def test_extraction_from_edge_delete() -> None:
    k2 = Graph.from_edges(["x", "y"], [("x", "y")])
    caps = {"x": 2, "y": 1}
    ops = [Operation.edge_delete("x", "y"), Operation.vertex_delete("x"), Operation.vertex_delete("y")]
    extracted = certificate_to_at_orientation(k2, caps, ops)
    assert extracted.orientation.arcs == (("x", "y"),)
    assert extracted.weights[("x", "y")] == 1
    assert extracted.check(caps) == (True, 1)


def test_extraction_rejects_unverified_certificates() -> None:
    k2 = Graph.from_edges(["x", "y"], [("x", "y")])
    with pytest.raises(PreconditionError):
        certificate_to_at_orientation(k2, {"x": 2, "y": 2}, [Operation.edge_delete("x", "y")])


def test_extraction_on_every_search_certificate() -> None:
    for graph in connected_graphs(4):
        for k in (2, 3):
            caps = CapMap.constant(graph, k)
            outcome = decide_weak_star(graph, caps)
            if not outcome.is_yes:
                continue
            bounded, diff = certificate_to_at_orientation(graph, caps, outcome.certificate.ops).check(caps)
            assert bounded
            assert diff == 1


def test_coefficient_identity_over_the_small_catalogue() -> None:
    graphs = [g for g in connected_graphs_up_to(5) if 0 < g.m <= 8]
    assert graphs
    for graph in graphs:
        for orientation in all_orientations(graph):
            expected = abs(eulerian_diff(orientation))
            assert abs(coefficient_oracle(graph, orientation.out_degree())) == expected


def test_eulerian_diff_enforces_its_limit() -> None:
    c5 = _directed_cycle(5)
    with pytest.raises(SizeLimitError):
        eulerian_diff(c5, method="subset", max_edges=4)
    with pytest.raises(SizeLimitError):
        eulerian_diff(c5, method="frontier", max_edges=2)
    assert eulerian_diff(c5, method="subset", max_edges=5) == 0
    k7 = next(all_orientations(families.complete(7)))
    with pytest.raises(SizeLimitError):
        eulerian_diff(k7, method="subset")


def test_coefficient_oracle_enforces_its_limit() -> None:
    k6 = families.complete(6)
    exponents = {v: 3 if v in "012" else 2 for v in k6.vertices}
    with pytest.raises(SizeLimitError):
        coefficient_oracle(k6, exponents, settings=SolverSettings(limits=OracleLimits(coefficient_max_edges=10)))
    with pytest.raises(SizeLimitError):
        coefficient_oracle(families.complete(7), {v: 3 for v in "0123456"})


def test_is_f_at_agrees_with_the_polynomial() -> None:
    for graph in connected_graphs_up_to(4):
        for k in (1, 2, 3):
            expected = bool(polynomial_coefficients(graph, {v: k - 1 for v in graph.vertices}))
            result = is_f_at(graph, CapMap.constant(graph, k))
            assert result.is_yes == expected
            if result.is_yes:
                assert all(t <= k - 1 for t in result.orientation.out_degree().values())
