from __future__ import annotations

"""Least constant k for which a colouring decision holds."""

from typing import Callable, Dict, Mapping, Optional

from ..config import DEFAULT_SETTINGS, ParameterName, SolverSettings
from ..graph.core import CapMap, Graph, Vertex
from .base import OracleResult
from .choosability import is_f_choosable
from .dp import is_dp_f_colourable
from .painting import decide_dp_paintable, decide_paintable

Decision = Callable[[Graph, Mapping[Vertex, int], Optional[SolverSettings]], OracleResult]

DECISIONS: Dict[str, Decision] = {
    "ch": is_f_choosable,
    "chi_DP": is_dp_f_colourable,
    "chi_P": decide_paintable,
    "chi_DPP": decide_dp_paintable,
}


class ParameterUndecidedError(RuntimeError):
    def __init__(self, which: str, k: int, reason: Optional[str]) -> None:
        super().__init__(f"{which}: decision at k={k} is unknown ({reason or 'no reason given'})")
        self.which = which
        self.k = k


def parameter(graph: Graph, which: ParameterName, settings: Optional[SolverSettings] = None) -> int:
    """Least k such that G is k-choosable / DP-k-colourable / k-paintable / DP-k-paintable."""

    if which not in DECISIONS:
        raise ValueError(f"unknown parameter {which!r}; expected one of {sorted(DECISIONS)}")
    settings = settings or DEFAULT_SETTINGS
    if graph.n == 0:
        return 0
    decide = DECISIONS[which]
    # every such parameter is at most max degree + 1
    for k in range(1, graph.max_degree() + 2):
        result = decide(graph, CapMap.constant(graph, k), settings)
        if result.is_yes:
            return k
        if not result.is_no:
            raise ParameterUndecidedError(which, k, result.reason)
    raise ParameterUndecidedError(which, graph.max_degree() + 1, "no answer up to max degree + 1")
