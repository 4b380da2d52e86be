from __future__ import annotations

"""Canonical labelling by colour refinement plus individualisation.

The search branches on the first smallest non-singleton cell of an equitable
partition and keeps the lexicographically least leaf certificate. Twins
(vertices with equal neighbourhoods apart from each other) in the branching
cell are explored once, since swapping them is an automorphism.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from .core import Graph, Vertex

Partition = List[List[int]]


@dataclass(frozen=True)
class CanonicalForm:
    key: Tuple
    labelling: Tuple[Vertex, ...]

    def position(self) -> Dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.labelling)}


class _Labeller:
    def __init__(self, graph: Graph, colours: Optional[Mapping[Vertex, Hashable]]) -> None:
        self.vertices: List[Vertex] = list(graph.vertices)
        index = {v: i for i, v in enumerate(self.vertices)}
        self.nbrs: List[Tuple[int, ...]] = [tuple(index[u] for u in graph.neighbours(v)) for v in self.vertices]
        self.nbr_sets = [frozenset(n) for n in self.nbrs]
        if colours is None:
            self.colour = [0] * len(self.vertices)
        else:
            self.colour = [colours[v] for v in self.vertices]
        self.best_key: Optional[Tuple] = None
        self.best_lab: Optional[List[int]] = None

    def initial_partition(self) -> Partition:
        groups: Dict[Hashable, List[int]] = {}
        for i, c in enumerate(self.colour):
            groups.setdefault(c, []).append(i)
        return [groups[c] for c in sorted(groups)]

    def refine(self, partition: Partition) -> Partition:
        n = len(self.vertices)
        while True:
            cell_of = [0] * n
            for ci, cell in enumerate(partition):
                for v in cell:
                    cell_of[v] = ci
            refined: Partition = []
            changed = False
            for cell in partition:
                if len(cell) == 1:
                    refined.append(cell)
                    continue
                split: Dict[Tuple, List[int]] = {}
                for v in cell:
                    sig = tuple(sorted(Counter(cell_of[u] for u in self.nbrs[v]).items()))
                    split.setdefault(sig, []).append(v)
                if len(split) > 1:
                    changed = True
                for sig in sorted(split):
                    refined.append(split[sig])
            partition = refined
            if not changed:
                return partition

    def leaf_key(self, labelling: Sequence[int]) -> Tuple:
        pos = [0] * len(labelling)
        for i, v in enumerate(labelling):
            pos[v] = i
        edges = sorted(
            (min(pos[a], pos[b]), max(pos[a], pos[b]))
            for a in range(len(labelling))
            for b in self.nbrs[a]
            if a < b
        )
        colours = tuple(self.colour[v] for v in labelling)
        return (len(labelling), colours, tuple(edges))

    def _representatives(self, cell: List[int]) -> List[int]:
        reps: List[int] = []
        for v in cell:
            twin = False
            for r in reps:
                if self.nbr_sets[v] - {r} == self.nbr_sets[r] - {v}:
                    twin = True
                    break
            if not twin:
                reps.append(v)
        return reps

    def search(self, partition: Partition) -> None:
        partition = self.refine(partition)
        target = -1
        for i, cell in enumerate(partition):
            if len(cell) > 1 and (target < 0 or len(cell) < len(partition[target])):
                target = i
        if target < 0:
            labelling = [cell[0] for cell in partition]
            key = self.leaf_key(labelling)
            if self.best_key is None or key < self.best_key:
                self.best_key = key
                self.best_lab = labelling
            return
        cell = partition[target]
        for v in self._representatives(cell):
            rest = [w for w in cell if w != v]
            self.search(partition[:target] + [[v], rest] + partition[target + 1:])

    def run(self) -> CanonicalForm:
        if not self.vertices:
            return CanonicalForm(key=(0, (), ()), labelling=())
        self.search(self.initial_partition())
        assert self.best_key is not None and self.best_lab is not None
        return CanonicalForm(key=self.best_key, labelling=tuple(self.vertices[i] for i in self.best_lab))


def canonical_form(graph: Graph, colours: Optional[Mapping[Vertex, Hashable]] = None) -> CanonicalForm:
    """Canonical key and labelling of ``graph`` with optional vertex colours.

    Colours must be mutually comparable; isomorphisms must preserve them.
    """

    return _Labeller(graph, colours).run()


def canonical_key(graph: Graph, colours: Optional[Mapping[Vertex, Hashable]] = None) -> Tuple:
    return canonical_form(graph, colours).key


def are_isomorphic(first: Graph, second: Graph) -> bool:
    if first.n != second.n or first.m != second.m:
        return False
    return canonical_key(first) == canonical_key(second)
