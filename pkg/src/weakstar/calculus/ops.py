from __future__ import annotations

"""Operations of the weak* calculus and their application to (G, f) states."""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Literal, Mapping, Optional, Set

from ..graph.core import CapMap, Graph, Vertex

OpKind = Literal["reduce", "edgedel", "vdel", "deletesave"]
OP_KINDS = ("reduce", "edgedel", "vdel", "deletesave")


class IllegalOperationError(ValueError):
    """Raised when an operation's precondition fails; ``reason`` names it."""

    def __init__(self, message: str, *, reason: str) -> None:
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class Operation:
    kind: OpKind
    x: Vertex
    y: Optional[Vertex] = None
    s: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in OP_KINDS:
            raise ValueError(f"unknown operation kind {self.kind!r}")
        if self.kind == "reduce":
            if self.s is None or self.s < 1:
                raise ValueError("ReduceValue needs s >= 1")
            if self.y is not None:
                raise ValueError("ReduceValue takes a single vertex")
        elif self.kind == "vdel":
            if self.y is not None or self.s is not None:
                raise ValueError("VertexDelete takes a single vertex")
        else:
            if self.y is None or self.y == self.x:
                raise ValueError(f"{self.kind} needs two distinct vertices")
            if self.s is not None:
                raise ValueError(f"{self.kind} takes no amount")

    # constructors --------------------------------------------------------------
    @classmethod
    def reduce(cls, x: Vertex, s: int) -> "Operation":
        return cls("reduce", x, None, s)

    @classmethod
    def edge_delete(cls, x: Vertex, y: Vertex) -> "Operation":
        return cls("edgedel", x, y)

    @classmethod
    def vertex_delete(cls, x: Vertex) -> "Operation":
        return cls("vdel", x)

    @classmethod
    def delete_save(cls, x: Vertex, y: Vertex) -> "Operation":
        return cls("deletesave", x, y)

    # wire format ------------------------------------------------------------------
    def to_json(self) -> Dict[str, object]:
        payload: Dict[str, object] = {"op": self.kind, "x": self.x}
        if self.y is not None:
            payload["y"] = self.y
        if self.s is not None:
            payload["s"] = self.s
        return payload

    @classmethod
    def from_json(cls, payload: Mapping[str, object]) -> "Operation":
        kind = payload.get("op")
        if kind not in OP_KINDS:
            raise ValueError(f"unknown operation {kind!r}")
        x = payload.get("x")
        if x is None:
            raise ValueError("operation needs an 'x' field")
        y = payload.get("y")
        s = payload.get("s")
        return cls(kind, str(x), None if y is None else str(y), None if s is None else int(s))  # type: ignore[arg-type]

    def relabel(self, mapping: Mapping[Vertex, Vertex]) -> "Operation":
        return Operation(self.kind, mapping[self.x], None if self.y is None else mapping[self.y], self.s)

    def vertices(self) -> List[Vertex]:
        return [self.x] if self.y is None else [self.x, self.y]

    def __str__(self) -> str:
        if self.kind == "reduce":
            return f"ReduceValue({self.x}, {self.s})"
        if self.kind == "vdel":
            return f"VertexDelete({self.x})"
        name = "EdgeDelete" if self.kind == "edgedel" else "DeleteSave"
        return f"{name}({self.x}, {self.y})"


@dataclass(frozen=True)
class OpState:
    graph: Graph
    caps: CapMap

    def __post_init__(self) -> None:
        self.caps.check_domain(self.graph)

    @classmethod
    def empty(cls) -> "OpState":
        return cls(Graph.empty(), CapMap({}))

    @property
    def is_empty(self) -> bool:
        return self.graph.n == 0


class ReplayState:
    """Mutable (G, f) pair used for fast replay of long operation sequences.

    Caps never drop below zero: VertexDelete and DeleteSave leave a neighbour
    already at zero there, and such a vertex can no longer be deleted. An
    accepted sequence therefore never hits the clamp; only the intermediate
    caps a prefix replay reports for a doomed sequence differ from plain
    integer arithmetic, and they stay valid CapMap values.
    """

    __slots__ = ("adj", "caps")

    def __init__(self, adj: Dict[Vertex, Set[Vertex]], caps: Dict[Vertex, int]) -> None:
        self.adj = adj
        self.caps = caps

    @classmethod
    def from_graph(cls, graph: Graph, caps: Mapping[Vertex, int]) -> "ReplayState":
        return cls({v: set(graph.neighbours(v)) for v in graph.vertices}, {v: int(caps[v]) for v in graph.vertices})

    @classmethod
    def from_state(cls, state: OpState) -> "ReplayState":
        return cls.from_graph(state.graph, state.caps)

    def copy(self) -> "ReplayState":
        return ReplayState({v: set(n) for v, n in self.adj.items()}, dict(self.caps))

    # queries ------------------------------------------------------------------------
    @property
    def is_empty(self) -> bool:
        return not self.adj

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.adj

    def degree(self, vertex: Vertex) -> int:
        return len(self.adj[vertex])

    def has_edge(self, a: Vertex, b: Vertex) -> bool:
        return a in self.adj and b in self.adj[a]

    def graph(self) -> Graph:
        return Graph(self.adj)

    def freeze(self) -> OpState:
        return OpState(self.graph(), CapMap(self.caps))

    def surplus(self, vertex: Vertex) -> int:
        return self.caps[vertex] - len(self.adj[vertex])

    # legality ------------------------------------------------------------------------
    def illegal_reason(self, op: Operation) -> Optional[str]:
        caps = self.caps
        if op.x not in self.adj:
            return f"unknown vertex {op.x}"
        if op.kind == "reduce":
            if not caps[op.x] > op.s:  # type: ignore[operator]
                return f"ReduceValue needs f({op.x})={caps[op.x]} > s={op.s}"
            return None
        if op.kind == "vdel":
            if caps[op.x] <= 0:
                return f"VertexDelete needs f({op.x}) > 0 (cap {caps[op.x]})"
            return None
        assert op.y is not None
        if op.y not in self.adj:
            return f"unknown vertex {op.y}"
        if op.y not in self.adj[op.x]:
            return f"missing edge {op.x}-{op.y}"
        if not caps[op.x] > caps[op.y]:
            name = "EdgeDelete" if op.kind == "edgedel" else "DeleteSave"
            return f"{name} needs f({op.x})={caps[op.x]} > f({op.y})={caps[op.y]}"
        return None

    def apply(self, op: Operation) -> None:
        reason = self.illegal_reason(op)
        if reason is not None:
            raise IllegalOperationError(f"illegal {op}: {reason}", reason=reason)
        caps = self.caps
        if op.kind == "reduce":
            caps[op.x] -= op.s  # type: ignore[operator]
        elif op.kind == "edgedel":
            assert op.y is not None
            caps[op.x] -= caps[op.y]
            self.adj[op.x].discard(op.y)
            self.adj[op.y].discard(op.x)
        else:
            nbrs = self.adj.pop(op.x)
            del caps[op.x]
            for other in nbrs:
                self.adj[other].discard(op.x)
                if op.kind == "deletesave" and other == op.y:
                    continue
                if caps[other] > 0:
                    caps[other] -= 1

    def apply_all(self, ops: Iterable[Operation]) -> None:
        for op in ops:
            self.apply(op)


def apply_op(state: OpState, op: Operation) -> OpState:
    """Apply one legal operation; raises IllegalOperationError otherwise."""

    replay = ReplayState.from_state(state)
    replay.apply(op)
    return replay.freeze()
