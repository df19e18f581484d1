"""Acceptance suite: one test per acceptance criterion.

Each test records a PASS/FAIL line that ``conftest.pytest_terminal_summary``
prints at the end of the run.  The sweeps share one full ``verify_all`` at
default bounds; determinism reruns it with two workers and compares bytes.
"""

from __future__ import annotations

import contextlib
import subprocess
import sys
import time

import pytest

from topolab.harness import reports_json, verify, verify_all
from topolab.space import count_topologies, enumerate_preorders, from_preorder, topologies_by_family_filter

pytestmark = pytest.mark.slow

RESULTS: list[str] = []
MINUTES_5 = 300.0


@contextlib.contextmanager
def criterion(name: str):
    t0 = time.perf_counter()
    detail: list[str] = []
    try:
        yield detail
    except BaseException as exc:
        RESULTS.append(f"FAIL  {name} ({time.perf_counter() - t0:.1f}s): {exc}".splitlines()[0])
        raise
    note = "; ".join(detail)
    RESULTS.append(f"PASS  {name} ({time.perf_counter() - t0:.1f}s){': ' + note if note else ''}")


@pytest.fixture(scope="module")
def reports():
    t0 = time.perf_counter()
    run = verify_all(workers=1)
    return {r.theorem: r for r in run}, run, time.perf_counter() - t0


def expect_pass(report, detail, **bounds):
    for axis, value in bounds.items():
        assert getattr(report.bounds, axis) == value, f"{report.theorem} ran at {report.bounds}"
    assert report.instances_checked > 0, f"{report.theorem} checked nothing"
    assert report.passed, f"{report.theorem}: {report.counterexample_count} counterexamples"
    detail.append(f"{report.theorem} {report.instances_checked} instances in {report.wall_time:.1f}s")


def test_enumeration_cross_check():
    with criterion("topology enumeration: two oracles agree for n=1..4, < 30 s") as detail:
        t0 = time.perf_counter()
        counts = []
        for n in range(1, 5):
            by_filter = topologies_by_family_filter(n)
            by_preorder = sorted(from_preorder(p).opens for p in enumerate_preorders(n))
            assert len(set(by_preorder)) == len(by_preorder), f"duplicate topology at n={n}"
            assert by_filter == by_preorder, f"oracles disagree at n={n}"
            assert count_topologies(n) == len(by_filter), f"library count differs at n={n}"
            counts.append(len(by_filter))
        elapsed = time.perf_counter() - t0
        assert counts == [1, 4, 29, 355]
        assert elapsed < 30, f"took {elapsed:.1f}s"
        detail.append(f"counts {counts}")


def test_closed_projection_equivalence(reports):
    by_id, _, _ = reports
    with criterion("closed-projection equivalence, spaces <= 3, < 5 min") as detail:
        r = by_id["closed-projection-equiv"]
        expect_pass(r, detail, max_x=3, max_z=3)
        assert r.wall_time < MINUTES_5


def test_witness_construction(reports):
    by_id, _, _ = reports
    with criterion("witness space for every directed cover, X <= 4") as detail:
        expect_pass(by_id["witness-space"], detail, max_x=4)


def test_proper_maps(reports):
    by_id, _, _ = reports
    with criterion("five properness criteria and closed-map methods, X, Y, Z <= 3") as detail:
        expect_pass(by_id["proper-equiv"], detail, max_x=3, max_y=3, max_z=3)
        expect_pass(by_id["closed-map-reform"], detail, max_x=3, max_y=3, max_z=3)


def test_way_below(reports):
    by_id, _, _ = reports
    with criterion("way-below: four conditions, closed form, corollaries") as detail:
        expect_pass(by_id["way-below-equiv"], detail, max_x=3, max_z=3)
        expect_pass(by_id["way-below-closed-form"], detail, max_x=4)
        for tid in ("way-below-hausdorff-closure", "way-below-closed-compact",
                    "way-below-image", "way-below-product"):
            expect_pass(by_id[tid], detail)


def test_compactness_propositions(reports):
    by_id, _, _ = reports
    with criterion("compactness propositions (seven claims), bounds <= 3") as detail:
        for tid in ("hausdorff-compact-closed", "closed-in-compact", "image-compact",
                    "product-compact", "exponential-hausdorff", "exponential-discrete",
                    "subbasic-open"):
            r = by_id[tid]
            assert max(r.bounds.as_dict().values()) <= 3
            expect_pass(r, detail)
        # the product claim defaults to 2-point factors; also run it at its limit
        expect_pass(verify("product-compact", 3, 2, 2), detail, max_x=3)


def test_function_spaces(reports):
    by_id, _, _ = reports
    with criterion("exponentials, quantifier, opens-space compactness and Scott topology") as detail:
        expect_pass(by_id["exponential-universal"], detail, max_x=3, max_y=3, max_z=3)
        expect_pass(by_id["sierpinski-quantifier"], detail)
        expect_pass(by_id["c-compact-equiv"], detail, max_x=3, max_y=3)
        expect_pass(by_id["c-compact-coincide"], detail)
        expect_pass(by_id["c-compact-projection"], detail)
        expect_pass(by_id["opens-space-scott"], detail)


def test_product_theorems(reports):
    by_id, _, _ = reports
    with criterion("product characterization and Scott products, < 5 min combined") as detail:
        a, b = by_id["product-charac"], by_id["sigma-products"]
        expect_pass(a, detail, max_x=3, max_y=3)
        expect_pass(b, detail, max_x=3, max_y=3)
        assert a.wall_time + b.wall_time < MINUTES_5
        detail.append(f"{a.wall_time + b.wall_time:.1f}s")


def test_every_theorem_passes(reports):
    _, run, elapsed = reports
    with criterion("coverage: every registered theorem passes at default bounds") as detail:
        failing = [r.theorem for r in run if not r.passed]
        assert not failing, f"failing: {failing}"
        detail.append(f"{len(run)} theorems in {elapsed:.0f}s")


def test_determinism(reports):
    _, run, _ = reports
    with criterion("determinism: byte-identical reports across runs and worker counts") as detail:
        first = reports_json(run)
        assert reports_json(verify_all(workers=2)) == first
        detail.append("library 1 vs 2 workers at defaults")
        cmd = [sys.executable, "-m", "topolab.cli", "verify", "--all", "--json",
               "--max-x", "2", "--max-y", "2", "--max-z", "2"]
        outs = [subprocess.run(cmd + ["--workers", w], capture_output=True, check=True).stdout
                for w in ("1", "1", "3")]
        assert outs[0] == outs[1] == outs[2]
        detail.append("CLI twice and 1 vs 3 workers at bounds 2")
