from __future__ import annotations

"""Named graph families used by tests, scans and the planar corpus."""

from typing import List, Tuple

import networkx as nx

from .core import Graph


def _from_nx(graph: nx.Graph) -> Graph:
    return Graph.from_networkx(nx.convert_node_labels_to_integers(graph, ordering="sorted"))


def complete(n: int) -> Graph:
    return _from_nx(nx.complete_graph(n))


def cycle(n: int) -> Graph:
    return _from_nx(nx.cycle_graph(n))


def path(n: int) -> Graph:
    return _from_nx(nx.path_graph(n))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre "0"."""

    return _from_nx(nx.star_graph(leaves))


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts "0".."a-1" and "a".."a+b-1"."""

    return _from_nx(nx.complete_bipartite_graph(a, b))


def wheel(rim: int) -> Graph:
    """W_rim: hub "0" joined to a cycle on "1".."rim"."""

    return _from_nx(nx.wheel_graph(rim + 1))


def octahedron() -> Graph:
    return _from_nx(nx.octahedral_graph())


def icosahedron() -> Graph:
    return _from_nx(nx.icosahedral_graph())


def cube() -> Graph:
    return _from_nx(nx.cubical_graph())


def dodecahedron() -> Graph:
    return _from_nx(nx.dodecahedral_graph())


def prism(n: int) -> Graph:
    return _from_nx(nx.circular_ladder_graph(n))


def antiprism(n: int) -> Graph:
    edges: List[Tuple[str, str]] = []
    for i in range(n):
        j = (i + 1) % n
        edges.extend([(f"a{i}", f"a{j}"), (f"b{i}", f"b{j}"), (f"a{i}", f"b{i}"), (f"a{i}", f"b{j}")])
    vertices = [f"a{i}" for i in range(n)] + [f"b{i}" for i in range(n)]
    return Graph.from_edges(vertices, edges)


def bipyramid(n: int) -> Graph:
    """Cycle r0..r{n-1} with apexes "top" and "bottom" joined to every rim vertex."""

    rim = [f"r{i}" for i in range(n)]
    edges = [(rim[i], rim[(i + 1) % n]) for i in range(n)]
    edges += [("top", r) for r in rim] + [("bottom", r) for r in rim]
    return Graph.from_edges(rim + ["top", "bottom"], edges)


def twin_hub_wheel(n: int = 32) -> Graph:
    """Rim cycle r0..r{n-1} with an outer apex "o" and two inner hubs.

    Hub "h1" sees r0..r{n/2}; hub "h2" sees r{n/2}..r{n-1} and r0, so the hubs
    share the quadrilateral face h1, r{n/2}, h2, r0 without being adjacent.
    """

    if n < 8 or n % 2:
        raise ValueError("twin_hub_wheel needs an even rim of at least 8 vertices")
    half = n // 2
    rim = [f"r{i}" for i in range(n)]
    edges = [(rim[i], rim[(i + 1) % n]) for i in range(n)]
    edges += [("o", r) for r in rim]
    edges += [("h1", rim[i]) for i in range(half + 1)]
    edges += [("h2", rim[i]) for i in range(half, n)] + [("h2", rim[0])]
    return Graph.from_edges(rim + ["o", "h1", "h2"], edges)


def petersen() -> Graph:
    return _from_nx(nx.petersen_graph())


def diamond() -> Graph:
    """K_4 minus an edge."""

    return Graph.from_edges(["0", "1", "2", "3"], [("0", "1"), ("0", "2"), ("1", "2"), ("1", "3"), ("2", "3")])


def bowtie() -> Graph:
    """Two triangles sharing vertex "0"."""

    return Graph.from_edges(
        ["0", "1", "2", "3", "4"],
        [("0", "1"), ("0", "2"), ("1", "2"), ("0", "3"), ("0", "4"), ("3", "4")],
    )


def k4_with_pendant() -> Graph:
    base = complete(4)
    return Graph.from_edges(list(base.vertices) + ["4"], list(base.edges) + [("3", "4")])
