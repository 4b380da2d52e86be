from __future__ import annotations

"""Exhaustive cross-checks between the deciders over small connected graphs."""

from dataclasses import dataclass, field
from itertools import product
from multiprocessing.pool import Pool
from typing import Callable, Dict, List, Optional, Tuple

from .alon_tarsi import SizeLimitError, at_number, is_f_at
from .calculus import (
    BudgetExceededError,
    certificate_split,
    decide_strict_weak,
    decide_weak_star,
    strict_degeneracy,
    strict_weak_degeneracy,
    verify_certificate,
    weak_star_degeneracy,
)
from .config import DEFAULT_SETTINGS, ScanSuite, SolverSettings
from .graph.blocks import is_gallai_tree, is_gdp_tree
from .graph.catalogue import connected_graphs_up_to
from .graph.core import CapMap, Graph
from .graph.io import to_graph6
from .oracles import ParameterUndecidedError, decide_dp_paintable, is_dp_f_colourable, is_f_choosable, parameter
from .utils import get_logger

log = get_logger(__name__)

SUITE_MAX_N: Dict[str, int] = {"hierarchy": 5, "degree": 6, "implications": 4, "splits": 4}
SUITE_ALIASES: Dict[str, str] = {"theorem11": "degree", "theorem32": "implications"}
IMPLICATIONS_MAX_CAP = 4
SPLITS_MAX_CAP = 3
DP_DEGREE_MAX_N = 5


class ScanLimitError(ValueError):
    """Raised when --max-n exceeds what a suite supports."""


@dataclass
class ScanReport:
    suite: str
    max_n: int
    graphs: int = 0
    instances: int = 0
    violations: List[Dict[str, object]] = field(default_factory=list)
    unknown: List[Dict[str, object]] = field(default_factory=list)

    @property
    def outcome(self) -> str:
        if self.violations:
            return "no"
        return "unknown" if self.unknown else "yes"

    def merge(self, part: "ScanReport") -> None:
        self.graphs += part.graphs
        self.instances += part.instances
        self.violations.extend(part.violations)
        self.unknown.extend(part.unknown)

    def to_dict(self) -> Dict[str, object]:
        return {
            "suite": self.suite,
            "max_n": self.max_n,
            "graphs": self.graphs,
            "instances": self.instances,
            "violations": self.violations,
            "unknown": self.unknown,
        }


def _record(graph: Graph, caps: Optional[Dict[str, int]] = None, **extra: object) -> Dict[str, object]:
    row: Dict[str, object] = {"graph6": to_graph6(graph)}
    if caps is not None:
        row["caps"] = [caps[v] for v in graph.vertices]
    row.update(extra)
    return row


def _degree_suite(graph: Graph, settings: SolverSettings) -> ScanReport:
    report = ScanReport("degree", graph.n, graphs=1)
    caps = CapMap.degree(graph)
    choosable = is_f_choosable(graph, caps, settings)
    report.instances += 1
    if choosable.status == "unknown":
        report.unknown.append(_record(graph, check="choosable", reason=choosable.reason))
    elif choosable.is_yes == is_gallai_tree(graph):
        report.violations.append(_record(graph, check="degree-choosable iff not Gallai-tree", choosable=choosable.status))
    if graph.n > DP_DEGREE_MAX_N:
        return report
    report.instances += 1
    gdp = is_gdp_tree(graph)
    strict_weak = decide_strict_weak(graph, caps, settings)
    dp = is_dp_f_colourable(graph, caps, settings)
    if "unknown" in (strict_weak.status, dp.status):
        report.unknown.append(_record(graph, check="dp-degree", reason=dp.reason))
    elif not (dp.is_yes == strict_weak.is_yes == (not gdp)):
        report.violations.append(
            _record(graph, check="DP-degree iff strict-weak iff not GDP-tree", dp=dp.status, strict_weak=strict_weak.status)
        )
    return report


HIERARCHY_ORDER: Tuple[Tuple[str, str], ...] = (
    ("ch", "chi_P"),
    ("ch", "chi_DP"),
    ("chi_P", "chi_DPP"),
    ("chi_DP", "chi_DPP"),
    ("chi_DPP", "wd_star"),
    ("chi_P", "AT"),
    ("AT", "wd_star"),
    ("wd_star", "swd"),
    ("swd", "sd"),
)


def _hierarchy(graph: Graph, settings: SolverSettings) -> ScanReport:
    report = ScanReport("hierarchy", graph.n, graphs=1, instances=1)
    independent = settings.model_copy(update={"use_certificates": False})
    try:
        values = {
            "ch": parameter(graph, "ch", independent),
            "chi_DP": parameter(graph, "chi_DP", independent),
            "chi_P": parameter(graph, "chi_P", independent),
            "chi_DPP": parameter(graph, "chi_DPP", independent),
            "wd_star": weak_star_degeneracy(graph, settings),
            "swd": strict_weak_degeneracy(graph, settings),
            "sd": strict_degeneracy(graph),
            "AT": at_number(graph, independent),
        }
    except (ParameterUndecidedError, BudgetExceededError, SizeLimitError) as exc:
        report.unknown.append(_record(graph, reason=str(exc)))
        return report
    broken = [f"{a} <= {b}" for a, b in HIERARCHY_ORDER if values[a] > values[b]]
    if broken:
        report.violations.append(_record(graph, check=broken, values=values))
    return report


def _all_caps(graph: Graph, top: int):
    for values in product(range(1, top + 1), repeat=graph.n):
        yield dict(zip(graph.vertices, values))


def _implications_suite(graph: Graph, settings: SolverSettings) -> ScanReport:
    report = ScanReport("implications", graph.n, graphs=1)
    independent = settings.model_copy(update={"use_certificates": False})
    for caps in _all_caps(graph, IMPLICATIONS_MAX_CAP):
        weak = decide_weak_star(graph, caps, settings)
        if not weak.is_yes:
            continue
        report.instances += 1
        paint = decide_dp_paintable(graph, caps, independent)
        at = is_f_at(graph, caps, independent)
        if paint.status == "unknown" or at.status == "unknown":
            report.unknown.append(_record(graph, caps, paint=paint.status, at=at.status))
        elif not (paint.is_yes and at.is_yes):
            report.violations.append(_record(graph, caps, check="weak* implies DP-paintable and f-AT", paint=paint.status, at=at.status))
    return report


def _splits(graph: Graph, settings: SolverSettings) -> ScanReport:
    report = ScanReport("splits", graph.n, graphs=1)
    for caps in _all_caps(graph, SPLITS_MAX_CAP):
        weak = decide_weak_star(graph, caps, settings)
        if not weak.is_yes or weak.certificate is None:
            continue
        ops = weak.certificate.ops
        for lower in product(*(range(0, caps[v] + 1) for v in graph.vertices)):
            g = dict(zip(graph.vertices, lower))
            report.instances += 1
            try:
                result = certificate_split(graph, caps, g, ops)
            except Exception as exc:  # noqa: BLE001
                report.violations.append(_record(graph, caps, g=lower, error=str(exc)))
                continue
            for label, cert in (("X", result.cert_x), ("rest", result.cert_rest)):
                checked = verify_certificate(cert.graph, cert.caps, cert)
                if not checked.accepted:
                    report.violations.append(_record(graph, caps, g=lower, part=label, step=checked.step, reason=checked.reason))
    return report


SUITES: Dict[str, Callable[[Graph, SolverSettings], ScanReport]] = {
    "hierarchy": _hierarchy,
    "degree": _degree_suite,
    "implications": _implications_suite,
    "splits": _splits,
}


def _run_one(args: Tuple[str, Graph, SolverSettings]) -> ScanReport:
    suite, graph, settings = args
    return SUITES[suite](graph, settings)


def run_scan(suite: ScanSuite, max_n: int, settings: Optional[SolverSettings] = None) -> ScanReport:
    """``theorem11`` and ``theorem32`` name the degree and implications suites."""

    settings = settings or DEFAULT_SETTINGS
    name = SUITE_ALIASES.get(suite, suite)
    if name not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {sorted(SUITES) + sorted(SUITE_ALIASES)}")
    if max_n < 1 or max_n > SUITE_MAX_N[name]:
        raise ScanLimitError(f"suite {suite} supports 1 <= max_n <= {SUITE_MAX_N[name]}")
    graphs = connected_graphs_up_to(max_n)
    jobs = [(name, graph, settings) for graph in graphs]
    if settings.workers > 1 and not settings.deterministic:
        with Pool(processes=settings.workers) as pool:
            parts = pool.map(_run_one, jobs)
    else:
        parts = [_run_one(job) for job in jobs]
    report = ScanReport(suite, max_n)
    for part in parts:
        report.merge(part)
    log.info(
        "scan %s up to n=%d: %d graphs, %d instances, %d violations, %d unknown",
        suite,
        max_n,
        report.graphs,
        report.instances,
        len(report.violations),
        len(report.unknown),
    )
    return report
