from __future__ import annotations

"""3-connected non-complete plane graphs the planar procedures are exercised on."""

from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from ..graph import families
from ..graph.core import Graph
from .embedding import PlaneEmbedding


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    graph: Graph
    embedding: PlaneEmbedding


_BUILDERS: Tuple[Tuple[str, Callable[[], Graph]], ...] = (
    ("octahedron", families.octahedron),
    ("icosahedron", families.icosahedron),
    ("cube", families.cube),
    ("dodecahedron", families.dodecahedron),
    ("prism_5", lambda: families.prism(5)),
    ("prism_12", lambda: families.prism(12)),
    ("antiprism_6", lambda: families.antiprism(6)),
    ("antiprism_18", lambda: families.antiprism(18)),
    ("wheel_5", lambda: families.wheel(5)),
    ("wheel_12", lambda: families.wheel(12)),
    ("wheel_16", lambda: families.wheel(16)),
    ("wheel_20", lambda: families.wheel(20)),
    ("wheel_40", lambda: families.wheel(40)),
    ("bipyramid_5", lambda: families.bipyramid(5)),
    ("bipyramid_16", lambda: families.bipyramid(16)),
    ("bipyramid_24", lambda: families.bipyramid(24)),
    ("twin_hub_wheel_32", lambda: families.twin_hub_wheel(32)),
    ("twin_hub_wheel_40", lambda: families.twin_hub_wheel(40)),
    ("prism_20", lambda: families.prism(20)),
    ("antiprism_4", lambda: families.antiprism(4)),
)


def _glued_g42() -> Graph:
    from ..counterexamples import build_glued_g

    return build_glued_g(check=False).graph


LARGE_BUILDERS: Tuple[Tuple[str, Callable[[], Graph]], ...] = (("glued_g42", _glued_g42),)

CORPUS_NAMES: Tuple[str, ...] = tuple(name for name, _ in _BUILDERS)
LARGE_NAMES: Tuple[str, ...] = tuple(name for name, _ in LARGE_BUILDERS)


def corpus_entry(name: str) -> CorpusEntry:
    builders: Dict[str, Callable[[], Graph]] = dict(_BUILDERS + LARGE_BUILDERS)
    if name not in builders:
        raise KeyError(f"unknown corpus graph {name!r}; known: {', '.join(CORPUS_NAMES + LARGE_NAMES)}")
    graph = builders[name]()
    return CorpusEntry(name, graph, PlaneEmbedding.from_graph(graph))


def planar_corpus(*, include_large: bool = False) -> List[CorpusEntry]:
    names = CORPUS_NAMES + LARGE_NAMES if include_large else CORPUS_NAMES
    return [corpus_entry(name) for name in names]
