from __future__ import annotations

import pytest

from weakstar.scan import SUITE_ALIASES, SUITE_MAX_N, ScanLimitError, run_scan


@pytest.mark.parametrize(
    ("suite", "max_n"),
    [("hierarchy", 4), ("degree", 5), ("implications", 3), ("splits", 3)],
)
def test_small_scans_find_no_violations(suite: str, max_n: int) -> None:
    report = run_scan(suite, max_n)  # type: ignore[arg-type]
    assert report.violations == []
    assert report.graphs == sum((1, 1, 2, 6, 21)[:max_n])
    assert report.instances > 0
    assert report.outcome in ("yes", "unknown")
    assert report.to_dict()["suite"] == suite


def test_degree_scan_is_fully_decided() -> None:
    report = run_scan("degree", 4)
    assert report.outcome == "yes"
    assert report.unknown == []


def test_scan_limits() -> None:
    with pytest.raises(ScanLimitError):
        run_scan("implications", SUITE_MAX_N["implications"] + 1)
    with pytest.raises(ScanLimitError):
        run_scan("hierarchy", 0)
    with pytest.raises(ValueError):
        run_scan("bogus", 3)  # type: ignore[arg-type]


@pytest.mark.parametrize(("alias", "suite"), sorted(SUITE_ALIASES.items()))
def test_suite_aliases_run_the_named_suite(alias: str, suite: str) -> None:
    aliased = run_scan(alias, 3)  # type: ignore[arg-type]
    direct = run_scan(suite, 3)  # type: ignore[arg-type]
    assert aliased.violations == []
    assert aliased.instances == direct.instances
    assert aliased.to_dict()["suite"] == alias
