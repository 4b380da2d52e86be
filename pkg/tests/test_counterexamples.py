from __future__ import annotations

import pytest

from weakstar.config import OracleLimits, SolverSettings
from weakstar.counterexamples import (
    ALL_PAIRS,
    GadgetError,
    GadgetH,
    SharpnessBudgetError,
    ablation,
    build_gadget_h,
    build_glued_g,
    build_sharpness_instance,
    extend_pair,
    validate_gadget,
    verify_not_7_truncated_choosable,
)
from weakstar.counterexamples.gadget import claim_u1_or_v1, claim_u2_forced, claim_u3_blocked
from weakstar.oracles import solve_list_colouring


@pytest.fixture(scope="module")
def gadget() -> GadgetH:
    return build_gadget_h()


@pytest.fixture(scope="module")
def glued(gadget: GadgetH):
    return build_glued_g(gadget)


def test_gadget_structure_and_claims(gadget: GadgetH) -> None:
    assert gadget.graph.n == 28
    assert len(gadget.inner) == 26
    checks = validate_gadget(gadget)
    assert all(checks.values())
    assert claim_u1_or_v1(gadget.graph)
    assert claim_u2_forced(gadget.graph)
    assert claim_u3_blocked(gadget.graph)
    assert solve_list_colouring(gadget.graph, gadget.lists) is None


def test_broken_gadget_is_rejected(gadget: GadgetH) -> None:
    broken = GadgetH(gadget.graph.remove_edges([("u1", "v1")]), gadget.lists)
    with pytest.raises(GadgetError):
        validate_gadget(broken)


def test_glued_graph_checks(glued) -> None:
    assert glued.copies == 42
    assert glued.graph.n == 42 * 26 + 2
    assert glued.graph.has_edge("x", "y")
    assert glued.lists.is_f_assignment({v: min(7, glued.graph.degree(v)) for v in glued.graph.vertices})


def test_every_terminal_pair_is_refuted(glued) -> None:
    report = verify_not_7_truncated_choosable(glued)
    assert report.ok
    assert len(report.rows) == len(ALL_PAIRS) == 42
    assert report.extendable == []
    assert report.to_dict()["pairs_checked"] == 42


def test_blocked_pair_does_not_extend(glued) -> None:
    assert extend_pair(glued, ALL_PAIRS[0]) is None
    assert extend_pair(glued, ("a", "a")) is None


def test_dropping_a_copy_makes_its_pair_extendable(gadget: GadgetH) -> None:
    result = ablation(0, gadget)
    assert result["copies"] == 41
    assert result["uncovered"] == [list(ALL_PAIRS[0])]
    assert result["extendable"] is True
    assert result["proper"] is True


@pytest.mark.parametrize(("s", "k"), [(3, 2), (2, 3), (3, 3)])
def test_sharpness_instances_are_not_colourable(s: int, k: int) -> None:
    instance = build_sharpness_instance(s, k)
    assert instance.graph.n == (s - 1) + k ** (s - 1)
    checked = instance.check()
    assert checked["f_assignment"] is True
    assert checked["colourable"] is False


def test_sharpness_respects_vertex_limit() -> None:
    settings = SolverSettings(limits=OracleLimits(sharpness_max_vertices=10))
    with pytest.raises(SharpnessBudgetError):
        build_sharpness_instance(3, 4, settings)
    with pytest.raises(ValueError):
        build_sharpness_instance(1, 2)
