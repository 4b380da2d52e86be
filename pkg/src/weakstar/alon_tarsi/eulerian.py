from __future__ import annotations

"""Signed counts of Eulerian sub-digraphs: diff(D) and its weighted variant.

An arc subset H is Eulerian when every vertex has equal (weighted) in- and
out-weight inside H; diff counts even-sized such H minus odd-sized ones.

Two exact methods are available. ``subset`` enumerates all 2^m subsets in
NumPy chunks (bit matrix times incidence matrix). ``frontier`` sweeps the
arcs in order keeping a signed count per balance vector of the vertices
still touched by unprocessed arcs. ``auto`` picks the frontier sweep when
its state-space bound is below 2^m.
"""

from collections import defaultdict
from typing import Dict, List, Literal, Optional, Tuple

import numpy as np

from ..config import DEFAULT_SETTINGS
from ..graph.core import Vertex
from .orientation import EdgeWeighting, Orientation

Method = Literal["auto", "subset", "frontier"]

CHUNK_BITS = 16


class SizeLimitError(ValueError):
    """Raised when an instance exceeds the configured enumeration limit."""


def _arc_weights(orientation: Orientation, weights: Optional[EdgeWeighting]) -> List[int]:
    if weights is None:
        return [1] * len(orientation.arcs)
    return [weights[arc] for arc in orientation.arcs]


def _subset_diff(orientation: Orientation, arc_weights: List[int]) -> int:
    arcs = orientation.arcs
    m = len(arcs)
    if m == 0:
        return 1
    index = {v: i for i, v in enumerate(orientation.base.vertices)}
    incidence = np.zeros((m, len(index)), dtype=np.int64)
    for row, ((tail, head), weight) in enumerate(zip(arcs, arc_weights)):
        incidence[row, index[tail]] += weight
        incidence[row, index[head]] -= weight
    shifts = np.arange(m, dtype=np.int64)
    total = 0
    chunk = 1 << min(CHUNK_BITS, m)
    for start in range(0, 1 << m, chunk):
        masks = np.arange(start, min(start + chunk, 1 << m), dtype=np.int64)
        bits = (masks[:, None] >> shifts[None, :]) & 1
        balance = bits @ incidence
        eulerian = ~np.any(balance, axis=1)
        parity = bits[eulerian].sum(axis=1) & 1
        total += int(np.count_nonzero(parity == 0)) - int(np.count_nonzero(parity == 1))
    return total


def _frontier_plan(orientation: Orientation) -> Tuple[List[List[Vertex]], int]:
    """Vertices retired after each arc, and a bound on the frontier state count."""

    last: Dict[Vertex, int] = {}
    for position, (tail, head) in enumerate(orientation.arcs):
        last[tail] = position
        last[head] = position
    retire: List[List[Vertex]] = [[] for _ in orientation.arcs]
    for vertex, position in last.items():
        retire[position].append(vertex)
    return retire, len(last)


def _state_bound(orientation: Orientation, arc_weights: List[int]) -> int:
    retire, _ = _frontier_plan(orientation)
    spread: Dict[Vertex, int] = defaultdict(int)
    for (tail, head), weight in zip(orientation.arcs, arc_weights):
        spread[tail] += weight
        spread[head] += weight
    active: Dict[Vertex, None] = {}
    worst = 1
    for position, (tail, head) in enumerate(orientation.arcs):
        active[tail] = None
        active[head] = None
        size = 1
        for vertex in active:
            size *= 2 * spread[vertex] + 1
        worst = max(worst, size)
        for vertex in retire[position]:
            active.pop(vertex, None)
    return worst


def _frontier_diff(orientation: Orientation, arc_weights: List[int]) -> int:
    retire, _ = _frontier_plan(orientation)
    # state: sorted tuple of (vertex, balance) for active vertices with nonzero balance
    states: Dict[Tuple[Tuple[Vertex, int], ...], int] = {(): 1}
    for position, ((tail, head), weight) in enumerate(zip(orientation.arcs, arc_weights)):
        gone = set(retire[position])
        nxt: Dict[Tuple[Tuple[Vertex, int], ...], int] = defaultdict(int)
        for state, value in states.items():
            for take in (False, True):
                balance = dict(state)
                sign = value
                if take:
                    balance[tail] = balance.get(tail, 0) + weight
                    balance[head] = balance.get(head, 0) - weight
                    sign = -value
                if any(balance.get(v, 0) != 0 for v in gone):
                    continue
                key = tuple(sorted((v, b) for v, b in balance.items() if b != 0 and v not in gone))
                nxt[key] += sign
        states = {k: v for k, v in nxt.items() if v != 0}
        if not states:
            return 0
    return states.get((), 0)


def eulerian_diff(
    orientation: Orientation,
    weights: Optional[EdgeWeighting] = None,
    *,
    method: Method = "auto",
    max_edges: Optional[int] = None,
) -> int:
    """Raises SizeLimitError when the chosen method's work exceeds 2^max_edges (default ``eulerian_max_edges``)."""

    limit = DEFAULT_SETTINGS.limits.eulerian_max_edges if max_edges is None else max_edges
    arc_weights = _arc_weights(orientation, weights)
    m = len(arc_weights)
    bound = _state_bound(orientation, arc_weights)
    if method == "auto":
        method = "frontier" if bound < (1 << m) else "subset"
    if method == "subset":
        if m > limit:
            raise SizeLimitError(f"subset enumeration limited to {limit} arcs, got {m}")
        return _subset_diff(orientation, arc_weights)
    if bound > (1 << limit):
        raise SizeLimitError(f"frontier sweep needs up to {bound} states, limit is 2^{limit}")
    return _frontier_diff(orientation, arc_weights)


def eulerian_diff_weighted(
    orientation: Orientation,
    weights: EdgeWeighting,
    *,
    method: Method = "auto",
    max_edges: Optional[int] = None,
) -> int:
    return eulerian_diff(orientation, weights, method=method, max_edges=max_edges)
