from __future__ import annotations

"""Coefficients of the graph polynomial prod_{uv, u<v} (x_u^w - x_v^w).

The product is expanded edge by edge over exponent vectors, discarding any
partial monomial that already exceeds the bound. The vertex order "u < v" is
the package-wide vertex order; only absolute values are order independent.
"""

from collections import defaultdict
from typing import Dict, Mapping, Optional, Tuple

from ..config import DEFAULT_SETTINGS, SolverSettings
from ..graph.core import Graph, Vertex
from .eulerian import SizeLimitError
from .orientation import EdgeWeighting

Exponents = Tuple[int, ...]


def polynomial_coefficients(
    graph: Graph,
    bound: Mapping[Vertex, int],
    weights: Optional[EdgeWeighting] = None,
) -> Dict[Exponents, int]:
    """All nonzero coefficients of monomials with exponent <= bound (vertex order)."""

    index = {v: i for i, v in enumerate(graph.vertices)}
    limits = tuple(int(bound[v]) for v in graph.vertices)
    terms: Dict[Exponents, int] = {tuple(0 for _ in limits): 1}
    for u, v in graph.edges:
        weight = 1 if weights is None else weights[(u, v)]
        iu, iv = index[u], index[v]
        nxt: Dict[Exponents, int] = defaultdict(int)
        for exps, coeff in terms.items():
            if exps[iu] + weight <= limits[iu]:
                up = list(exps)
                up[iu] += weight
                nxt[tuple(up)] += coeff
            if exps[iv] + weight <= limits[iv]:
                down = list(exps)
                down[iv] += weight
                nxt[tuple(down)] -= coeff
        terms = {k: c for k, c in nxt.items() if c != 0}
        if not terms:
            break
    return terms


def coefficient_oracle(
    graph: Graph,
    exponents: Mapping[Vertex, int],
    weights: Optional[EdgeWeighting] = None,
    settings: Optional[SolverSettings] = None,
) -> int:
    """Coefficient of prod_v x_v^{t(v)} in the (weighted) graph polynomial."""

    limit = (settings or DEFAULT_SETTINGS).limits.coefficient_max_edges
    if graph.m > limit:
        raise SizeLimitError(f"coefficient expansion limited to {limit} edges, got {graph.m}")
    total = sum(int(exponents[v]) for v in graph.vertices)
    degree = graph.m if weights is None else sum(weights[e] for e in graph.edges)
    if total != degree:
        return 0
    target = tuple(int(exponents[v]) for v in graph.vertices)
    return polynomial_coefficients(graph, exponents, weights).get(target, 0)
