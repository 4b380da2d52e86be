from __future__ import annotations

"""CLI entrypoint for weakstar.

JSON reports go to stdout, everything meant for people goes to stderr.
Exit codes: 0 yes/accept, 1 no/reject, 2 unknown (budget or size guard),
3 bad input or unmet precondition, 4 construction failure.
"""

import logging
from pathlib import Path
from typing import Annotated, Any, Dict, Optional

import typer
from rich.table import Table

from .alon_tarsi import is_f_at
from .calculus import (
    Certificate,
    CertificateFormatError,
    ConstructionFailure,
    PreconditionError,
    decide_strict_degenerate,
    decide_strict_weak,
    decide_weak_star,
    dump_certificate,
    load_certificate,
    strict_certificate,
    verify_certificate,
)
from .config import DecisionParam, ScanSuite, SolverSettings, VerifyMode, load_settings
from .counterexamples import (
    GadgetError,
    SharpnessBudgetError,
    build_gadget_h,
    build_glued_g,
    build_sharpness_instance,
    verify_not_7_truncated_choosable,
)
from .graph.catalogue import connected_graphs
from .graph.core import CapMap, CapMapError, Graph, GraphFormatError
from .graph.io import describe, load_graph, parse_caps_spec, to_graph6
from .oracles import ListAssignmentError, decide_dp_paintable, decide_paintable, is_dp_f_colourable, is_f_choosable
from .planar import EmbeddingError, MinorParams, PlaneEmbedding, general_certificate, planar_certificate
from .reports import EXIT_CONSTRUCTION, EXIT_INPUT, RunReport, input_digests
from .scan import ScanLimitError, run_scan
from .utils import configure_logging, jsonio, seed_everything, stderr_console

app = typer.Typer(help="Exact deciders and checkable certificates for weak* degeneracy.")
counterexample_app = typer.Typer(help="Build and check the planar counterexample and the sharpness family.")
app.add_typer(counterexample_app, name="counterexample")
console = stderr_console

INPUT_ERRORS = (
    GraphFormatError,
    CapMapError,
    CertificateFormatError,
    ListAssignmentError,
    EmbeddingError,
    FileNotFoundError,
    ValueError,
)

ConfigOption = Annotated[Optional[Path], typer.Option("--config", help="Settings YAML.")]
DeterministicOption = Annotated[bool, typer.Option("--deterministic", help="Fixed seeds, single worker.")]
ReportOption = Annotated[Optional[Path], typer.Option("--report", help="Also write the JSON report here.")]
VerboseOption = Annotated[bool, typer.Option("--verbose", "-v", help="Log progress to stderr.")]


def _settings(config: Optional[Path], deterministic: bool, verbose: bool) -> SolverSettings:
    configure_logging(logging.INFO if verbose else logging.WARNING)
    settings = load_settings(config)
    if deterministic:
        seed_everything()
        settings = settings.model_copy(update={"deterministic": True, "workers": 1})
    return settings


def _finish(report: RunReport, report_path: Optional[Path], deterministic: bool) -> None:
    typer.echo(report.to_json(deterministic=deterministic))
    if report_path is not None:
        report.write(report_path, deterministic=deterministic)
    colour = {"yes": "green", "accept": "green", "no": "red", "reject": "red"}.get(report.outcome, "yellow")
    console.print(f"{report.command}: [{colour}]{report.outcome}[/{colour}] (exit {report.exit_code})")
    raise typer.Exit(code=report.exit_code)


def _input_error(report: RunReport, exc: Exception, report_path: Optional[Path], deterministic: bool) -> None:
    report.details["error"] = str(exc)
    report.finish("error", EXIT_INPUT)
    console.print(f"[red]{type(exc).__name__}:[/red] {exc}")
    _finish(report, report_path, deterministic)


def _save_certificate(report: RunReport, cert: Certificate, out: Optional[Path]) -> None:
    checked = verify_certificate(cert.graph, cert.caps, cert)
    if not checked.accepted:
        raise ConstructionFailure(f"emitted certificate rejected at step {checked.step}", invariant="self-verify")
    report.counters["certificate_ops"] = len(cert.ops)
    if out is not None:
        dump_certificate(out, cert)
        report.certificate_path = str(out)


def _decide(param: DecisionParam, graph: Graph, caps: CapMap, settings: SolverSettings) -> Dict[str, Any]:
    """Outcome plus the certificate (when the decider produces one) and details."""

    if param in ("weakstar", "strictweak"):
        outcome = (decide_weak_star if param == "weakstar" else decide_strict_weak)(graph, caps, settings)
        return {"status": outcome.status, "certificate": outcome.certificate, "details": outcome.to_dict()}
    if param == "strict":
        result = decide_strict_degenerate(graph, caps)
        cert = None
        if result.degenerate:
            cert = Certificate.build(graph, caps, strict_certificate(graph, caps) or ())
        return {"status": result.outcome, "certificate": cert, "details": {"ordering": list(result.ordering), "stuck": list(result.stuck)}}
    if param == "at":
        at = is_f_at(graph, caps, settings)
        return {"status": at.status, "certificate": None, "details": at.to_dict()}
    oracle = {
        "choosable": is_f_choosable,
        "dp": is_dp_f_colourable,
        "paint": decide_paintable,
        "dppaint": decide_dp_paintable,
    }[param]
    result = oracle(graph, caps, settings)
    return {"status": result.status, "certificate": None, "details": result.to_dict()}


@app.command("decide")
def decide(
    graph_path: Annotated[Path, typer.Option("--graph", help="graph6 or JSON graph file.")],
    caps_spec: Annotated[str, typer.Option("--caps", help="const:k | deg | trunc:k | file:PATH")],
    param: Annotated[str, typer.Option("--param", help="weakstar|strictweak|strict|choosable|dp|paint|dppaint|at")] = "weakstar",
    out: Annotated[Optional[Path], typer.Option("--out", help="Write the certificate (JSONL).")] = None,
    config: ConfigOption = None,
    deterministic: DeterministicOption = False,
    report_path: ReportOption = None,
    verbose: VerboseOption = False,
) -> None:
    """Decide one property of (G, f)."""

    report = RunReport("decide", {"graph": str(graph_path), "caps": caps_spec, "param": param})
    try:
        if param not in DecisionParam.__args__:  # type: ignore[attr-defined]
            raise ValueError(f"unknown --param {param!r}")
        settings = _settings(config, deterministic, verbose)
        graph = load_graph(graph_path)
        caps = parse_caps_spec(graph, caps_spec)
    except INPUT_ERRORS as exc:
        _input_error(report, exc, report_path, deterministic)
        return
    report.inputs = input_digests({"graph": graph_path})
    console.print(f"graph {describe(graph)}")
    result = _decide(param, graph, caps, settings)  # type: ignore[arg-type]
    report.details = result["details"]
    if result["certificate"] is not None:
        try:
            _save_certificate(report, result["certificate"], out)
        except ConstructionFailure as exc:
            report.details["error"] = str(exc)
            report.finish("error", EXIT_CONSTRUCTION)
            _finish(report, report_path, deterministic)
    if result["status"] == "unknown":
        report.counters["node_budget"] = settings.node_budget
    report.finish(result["status"])
    _finish(report, report_path, deterministic)


@app.command("verify")
def verify(
    graph_path: Annotated[Path, typer.Option("--graph")],
    caps_spec: Annotated[str, typer.Option("--caps")],
    cert_path: Annotated[Path, typer.Option("--cert", help="Certificate JSONL.")],
    prefix: Annotated[bool, typer.Option("--prefix", help="Accept legal prefixes that leave vertices behind.")] = False,
    deterministic: DeterministicOption = False,
    report_path: ReportOption = None,
    verbose: VerboseOption = False,
) -> None:
    """Replay a certificate against (G, f)."""

    mode: VerifyMode = "prefix" if prefix else "full"
    report = RunReport("verify", {"graph": str(graph_path), "caps": caps_spec, "cert": str(cert_path), "mode": mode})
    try:
        _settings(None, deterministic, verbose)
        graph = load_graph(graph_path)
        caps = parse_caps_spec(graph, caps_spec)
        cert = load_certificate(cert_path)
    except INPUT_ERRORS as exc:
        _input_error(report, exc, report_path, deterministic)
        return
    report.inputs = input_digests({"graph": graph_path, "cert": cert_path})
    result = verify_certificate(graph, caps, cert, mode)
    report.details = result.to_dict()
    report.counters["steps_checked"] = result.steps_checked
    report.finish(result.outcome)
    _finish(report, report_path, deterministic)


def _certify(report: RunReport, build, out: Optional[Path], ledger_path: Optional[Path], report_path: Optional[Path], deterministic: bool) -> None:
    try:
        result = build()
    except (PreconditionError, EmbeddingError) as exc:
        _input_error(report, exc, report_path, deterministic)
        return
    except ConstructionFailure as exc:
        report.details = {"error": str(exc), "invariant": exc.invariant, "diagnostics": exc.details}
        report.finish("error", EXIT_CONSTRUCTION)
        _finish(report, report_path, deterministic)
        return
    report.details = result.to_dict()
    try:
        _save_certificate(report, result.certificate, out)
    except ConstructionFailure as exc:
        report.details["error"] = str(exc)
        report.finish("error", EXIT_CONSTRUCTION)
        _finish(report, report_path, deterministic)
    if ledger_path is not None and result.ledger is not None:
        result.ledger.write(ledger_path)
        report.details["ledger"] = str(ledger_path)
    report.finish("yes")
    _finish(report, report_path, deterministic)


@app.command("planar-cert")
def planar_cert(
    graph_path: Annotated[Path, typer.Option("--graph")],
    embedding_path: Annotated[Optional[Path], typer.Option("--embedding", help="Rotation-system JSON; computed when omitted.")] = None,
    k: Annotated[int, typer.Option("--k", min=1)] = 16,
    out: Annotated[Optional[Path], typer.Option("--out")] = None,
    ledger_path: Annotated[Optional[Path], typer.Option("--ledger", help="Write the per-round ledger (JSONL).")] = None,
    deterministic: DeterministicOption = False,
    report_path: ReportOption = None,
    verbose: VerboseOption = False,
) -> None:
    """Certificate for (G, min(k, d)) on a 3-connected non-complete plane graph."""

    report = RunReport("planar-cert", {"graph": str(graph_path), "embedding": str(embedding_path) if embedding_path else None, "k": k})
    try:
        _settings(None, deterministic, verbose)
        graph = load_graph(graph_path)
        embedding = PlaneEmbedding.from_json(jsonio.read_json(embedding_path)) if embedding_path else None
    except INPUT_ERRORS as exc:
        _input_error(report, exc, report_path, deterministic)
        return
    report.inputs = input_digests({"graph": graph_path, "embedding": embedding_path})
    _certify(report, lambda: planar_certificate(graph, embedding, k), out, ledger_path, report_path, deterministic)


@app.command("general-cert")
def general_cert(
    graph_path: Annotated[Path, typer.Option("--graph")],
    s: Annotated[int, typer.Option("--s", min=1)] = 3,
    t: Annotated[int, typer.Option("--t", min=1)] = 3,
    out: Annotated[Optional[Path], typer.Option("--out")] = None,
    ledger_path: Annotated[Optional[Path], typer.Option("--ledger")] = None,
    deterministic: DeterministicOption = False,
    report_path: ReportOption = None,
    verbose: VerboseOption = False,
) -> None:
    """Certificate for (G, min(k, d)) with k derived from an excluded K_{s,t}."""

    report = RunReport("general-cert", {"graph": str(graph_path), "s": s, "t": t})
    try:
        _settings(None, deterministic, verbose)
        graph = load_graph(graph_path)
        params = MinorParams(s=s, t=t)
    except INPUT_ERRORS as exc:
        _input_error(report, exc, report_path, deterministic)
        return
    report.inputs = input_digests({"graph": graph_path})
    report.counters.update({"q": params.q, "k": params.k})
    _certify(report, lambda: general_certificate(graph, params), out, ledger_path, report_path, deterministic)


@app.command("scan")
def scan(
    suite: Annotated[str, typer.Option("--suite", help="hierarchy|degree|implications|splits (theorem11 = degree, theorem32 = implications)")],
    max_n: Annotated[int, typer.Option("--max-n", min=1)] = 4,
    config: ConfigOption = None,
    deterministic: DeterministicOption = False,
    report_path: ReportOption = None,
    verbose: VerboseOption = False,
) -> None:
    """Run a cross-check suite over every connected graph up to --max-n vertices."""

    report = RunReport("scan", {"suite": suite, "max_n": max_n})
    try:
        if suite not in ScanSuite.__args__:  # type: ignore[attr-defined]
            raise ValueError(f"unknown --suite {suite!r}")
        settings = _settings(config, deterministic, verbose)
        result = run_scan(suite, max_n, settings)  # type: ignore[arg-type]
    except (ScanLimitError, *INPUT_ERRORS) as exc:
        _input_error(report, exc, report_path, deterministic)
        return
    report.details = result.to_dict()
    report.counters.update({"graphs": result.graphs, "instances": result.instances, "violations": len(result.violations)})
    table = Table(title=f"scan {suite}")
    for column in ("graphs", "instances", "violations", "unknown"):
        table.add_column(column)
    table.add_row(str(result.graphs), str(result.instances), str(len(result.violations)), str(len(result.unknown)))
    console.print(table)
    report.finish(result.outcome)
    _finish(report, report_path, deterministic)


@app.command("catalogue")
def catalogue(n: Annotated[int, typer.Option("--n", min=1, max=8)] = 4) -> None:
    """Print graph6 strings of the connected graphs on n vertices."""

    graphs = connected_graphs(n)
    for graph in graphs:
        typer.echo(to_graph6(graph))
    console.print(f"{len(graphs)} connected graphs on {n} vertices")


@counterexample_app.command("build-h")
def build_h(
    out: Annotated[Optional[Path], typer.Option("--out", help="Write H and its lists as JSON.")] = None,
    deterministic: DeterministicOption = False,
    report_path: ReportOption = None,
) -> None:
    """Load and validate the gadget H."""

    report = RunReport("counterexample build-h")
    try:
        gadget = build_gadget_h()
    except (GadgetError, *INPUT_ERRORS) as exc:
        _input_error(report, exc, report_path, deterministic)
        return
    if out is not None:
        jsonio.write_json_sorted(out, gadget.to_json())
        report.details["written"] = str(out)
    report.counters.update({"vertices": gadget.graph.n, "edges": gadget.graph.m})
    report.finish("yes")
    _finish(report, report_path, deterministic)


@counterexample_app.command("verify-h")
def verify_h(deterministic: DeterministicOption = False, report_path: ReportOption = None) -> None:
    """Check every structural invariant of H and that H is not L-colourable."""

    report = RunReport("counterexample verify-h")
    try:
        gadget = build_gadget_h()
    except GadgetError as exc:
        report.details = {"error": str(exc), "invariant": exc.invariant}
        report.finish("no")
        _finish(report, report_path, deterministic)
        return
    report.details = {"message": "H not L-colourable", "vertices": gadget.graph.n}
    report.finish("yes")
    _finish(report, report_path, deterministic)


@counterexample_app.command("verify-g42")
def verify_g42(
    workers: Annotated[int, typer.Option("--workers", min=1)] = 1,
    deterministic: DeterministicOption = False,
    report_path: ReportOption = None,
) -> None:
    """Build the glued graph and refute every colouring of its terminals."""

    report = RunReport("counterexample verify-g42", {"workers": workers})
    try:
        glued = build_glued_g()
    except GadgetError as exc:
        report.details = {"error": str(exc), "invariant": exc.invariant}
        report.finish("no")
        _finish(report, report_path, deterministic)
        return
    refutation = verify_not_7_truncated_choosable(glued, workers=1 if deterministic else workers)
    report.details = refutation.to_dict()
    blocked = sum(1 for row in refutation.rows if row["blocked"])
    report.counters.update({"vertices": glued.graph.n, "refuted": blocked, "pairs": len(refutation.rows)})
    console.print(f"{blocked}/{len(refutation.rows)} refuted")
    report.finish("yes" if refutation.ok else "no")
    _finish(report, report_path, deterministic)


@counterexample_app.command("sharpness")
def sharpness(
    s: Annotated[int, typer.Option("--s", min=2)] = 3,
    k: Annotated[int, typer.Option("--k", min=1)] = 2,
    config: ConfigOption = None,
    deterministic: DeterministicOption = False,
    report_path: ReportOption = None,
) -> None:
    """K_{s-1,k^{s-1}} is not min(k, d)-choosable."""

    report = RunReport("counterexample sharpness", {"s": s, "k": k})
    try:
        settings = _settings(config, deterministic, False)
        instance = build_sharpness_instance(s, k, settings)
    except (SharpnessBudgetError, *INPUT_ERRORS) as exc:
        _input_error(report, exc, report_path, deterministic)
        return
    report.details = instance.check()
    ok = report.details["f_assignment"] and not report.details["colourable"]
    report.finish("yes" if ok else "no")
    _finish(report, report_path, deterministic)


def main() -> None:  # pragma: no cover
    app()


if __name__ == "__main__":  # pragma: no cover
    main()
