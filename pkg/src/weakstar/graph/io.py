from __future__ import annotations

"""graph6 / JSON codecs for graphs and cap-map SPEC parsing."""

import json
from pathlib import Path
from typing import Any, Mapping

import networkx as nx

from ..utils import jsonio
from .core import CapMap, CapMapError, Graph, GraphFormatError, sort_vertices

GRAPH6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise GraphFormatError("empty graph6 string")
    try:
        graph = nx.from_graph6_bytes(data.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as exc:
        raise GraphFormatError(f"malformed graph6 input: {exc}") from exc
    return Graph.from_edges([str(v) for v in range(graph.number_of_nodes())], [(str(a), str(b)) for a, b in graph.edges])


def to_graph6(graph: Graph) -> str:
    """Encode with vertices in the deterministic order (relabelled 0..n-1)."""

    order = list(graph.vertices)
    index = {v: i for i, v in enumerate(order)}
    nxg = nx.Graph()
    nxg.add_nodes_from(range(len(order)))
    nxg.add_edges_from((index[a], index[b]) for a, b in graph.edges)
    raw = nx.to_graph6_bytes(nxg, nodes=list(range(len(order))), header=False)
    return raw.decode("ascii").strip()


def graph_from_json(payload: Mapping[str, Any]) -> Graph:
    if not isinstance(payload, Mapping):
        raise GraphFormatError("graph JSON must be an object")
    vertices = payload.get("vertices")
    edges = payload.get("edges")
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise GraphFormatError('graph JSON requires "vertices" and "edges" lists')
    return Graph.from_edges([str(v) for v in vertices], [[str(a) for a in e] for e in edges])


def parse_graph(text: str) -> Graph:
    """Accept either a JSON graph object or a graph6 string."""

    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            payload = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"malformed graph JSON: {exc}") from exc
        return graph_from_json(payload)
    return parse_graph6(stripped)


def load_graph(path: Path) -> Graph:
    if not path.exists():
        raise GraphFormatError(f"graph file not found: {path}")
    return parse_graph(path.read_text(encoding="utf-8"))


def parse_caps_spec(graph: Graph, spec: str) -> CapMap:
    """Cap maps from the CLI grammar ``const:k | deg | trunc:k | file:PATH``."""

    spec = spec.strip()
    if spec == "deg":
        return CapMap.degree(graph)
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise CapMapError(f"unrecognised caps spec {spec!r}")
    if kind == "file":
        return caps_from_file(Path(arg), graph)
    try:
        value = int(arg)
    except ValueError as exc:
        raise CapMapError(f"caps spec {spec!r} needs an integer argument") from exc
    if kind == "const":
        if value < 0:
            raise CapMapError("constant caps must be nonnegative")
        return CapMap.constant(graph, value)
    if kind == "trunc":
        return CapMap.truncated(graph, value)
    raise CapMapError(f"unrecognised caps spec {spec!r}")


def caps_from_file(path: Path, graph: Graph) -> CapMap:
    caps = CapMap.from_json(jsonio.read_json(path))
    caps.check_domain(graph)
    return caps


def describe(graph: Graph) -> str:
    ids = sort_vertices(graph.vertices)
    preview = ", ".join(ids[:6]) + (", ..." if len(ids) > 6 else "")
    return f"n={graph.n} m={graph.m} [{preview}]"
