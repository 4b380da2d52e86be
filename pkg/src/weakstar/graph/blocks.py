from __future__ import annotations

"""Block decomposition and the Gallai-tree / GDP-tree recognisers."""

from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple

import networkx as nx

from .core import Graph, Vertex, sort_vertices, vertex_key


class DisconnectedGraphError(ValueError):
    """Raised by recognisers that are only defined on connected graphs."""


@dataclass(frozen=True)
class LeafBlock:
    vertices: FrozenSet[Vertex]
    root: Optional[Vertex]

    @property
    def non_root(self) -> FrozenSet[Vertex]:
        if self.root is None:
            return self.vertices
        return self.vertices - {self.root}


@dataclass(frozen=True)
class BlockTree:
    blocks: Tuple[FrozenSet[Vertex], ...]
    cut_vertices: FrozenSet[Vertex]
    leaf_blocks: Tuple[LeafBlock, ...] = field(default=())

    def non_root_leaf_vertices(self) -> FrozenSet[Vertex]:
        found: set = set()
        for leaf in self.leaf_blocks:
            found |= leaf.non_root
        return frozenset(found)


def _block_order(block: FrozenSet[Vertex]) -> Tuple:
    return tuple(vertex_key(v) for v in sort_vertices(block))


def block_decomposition(graph: Graph) -> BlockTree:
    """Blocks (maximal 2-connected subgraphs, bridges, isolated vertices)."""

    nxg = graph.to_networkx()
    blocks = [frozenset(b) for b in nx.biconnected_components(nxg)]
    covered = set().union(*blocks) if blocks else set()
    blocks.extend(frozenset([v]) for v in graph.vertices if v not in covered)
    blocks.sort(key=_block_order)
    cuts = frozenset(nx.articulation_points(nxg))
    leaves = []
    for block in blocks:
        inside = sorted(block & cuts, key=vertex_key)
        if len(inside) <= 1:
            leaves.append(LeafBlock(vertices=block, root=inside[0] if inside else None))
    return BlockTree(blocks=tuple(blocks), cut_vertices=cuts, leaf_blocks=tuple(leaves))


def block_edge_count(graph: Graph, block: FrozenSet[Vertex]) -> int:
    return sum(len(graph.neighbours(v) & block) for v in block) // 2


def is_complete_block(graph: Graph, block: FrozenSet[Vertex]) -> bool:
    size = len(block)
    return block_edge_count(graph, block) == size * (size - 1) // 2


def is_cycle_block(graph: Graph, block: FrozenSet[Vertex]) -> bool:
    if len(block) < 3:
        return False
    return all(len(graph.neighbours(v) & block) == 2 for v in block)


def _require_connected(graph: Graph) -> None:
    if not graph.is_connected():
        raise DisconnectedGraphError("tree recognisers need a connected, nonempty graph")


def is_gallai_tree(graph: Graph) -> bool:
    """Every block complete or an odd cycle."""

    _require_connected(graph)
    tree = block_decomposition(graph)
    for block in tree.blocks:
        if is_complete_block(graph, block):
            continue
        if is_cycle_block(graph, block) and len(block) % 2 == 1:
            continue
        return False
    return True


def is_gdp_tree(graph: Graph) -> bool:
    """Every block complete or a cycle."""

    _require_connected(graph)
    tree = block_decomposition(graph)
    return all(is_complete_block(graph, b) or is_cycle_block(graph, b) for b in tree.blocks)


def bad_blocks(graph: Graph) -> List[FrozenSet[Vertex]]:
    """Blocks that are neither complete nor cycles."""

    tree = block_decomposition(graph)
    return [b for b in tree.blocks if not (is_complete_block(graph, b) or is_cycle_block(graph, b))]
