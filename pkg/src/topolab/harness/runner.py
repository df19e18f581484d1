"""Sweep orchestration and verification reports.

Jobs are run in canonical order, optionally spread over worker processes.
``Executor.map`` returns results in submission order, so the merged report
does not depend on the number of workers.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from ..errors import TopolabError
from ..formats import dumps
from .registry import Bounds, JobResult, get, theorem_ids

MAX_REPORTED = 25


@dataclass
class VerificationReport:
    theorem: str
    claim: str
    bounds: Bounds
    instances_checked: int
    counterexample_count: int
    counterexamples: list[dict]
    notes: list[str] = field(default_factory=list)
    wall_time: float | None = None

    @property
    def verdict(self) -> str:
        return "pass" if self.counterexample_count == 0 else "fail"

    @property
    def passed(self) -> bool:
        return self.counterexample_count == 0

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "claim": self.claim,
            "bounds": self.bounds.as_dict(),
            "instances_checked": self.instances_checked,
            "verdict": self.verdict,
            "counterexample_count": self.counterexample_count,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        }
        if timing and self.wall_time is not None:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def summary(self) -> str:
        return (
            f"{self.theorem}: {self.verdict} "
            f"({self.instances_checked} instances, {self.counterexample_count} counterexamples)"
        )


def run_job(theorem_id: str, job: tuple, bounds: Bounds) -> JobResult:
    """Run one job; a library invariant tripping inside it counts as a counterexample."""
    theorem = get(theorem_id)
    try:
        return theorem.check(job, bounds)
    except TopolabError as exc:
        res = JobResult(0)
        res.fail(job, f"{type(exc).__name__}: {exc}")
        return res


def _run_chunk(theorem_id: str, jobs: Sequence[tuple], bounds: Bounds) -> list[JobResult]:
    return [run_job(theorem_id, job, bounds) for job in jobs]


def _chunks(jobs: list[tuple], size: int) -> list[list[tuple]]:
    return [jobs[i : i + size] for i in range(0, len(jobs), size)]


def verify(theorem_id: str, max_x: int | None = None, max_y: int | None = None,
           max_z: int | None = None, *, workers: int = 1,
           executor: ProcessPoolExecutor | None = None) -> VerificationReport:
    """Sweep ``theorem_id`` exhaustively at the given bounds (defaults per theorem)."""
    theorem = get(theorem_id)
    bounds = theorem.resolve(max_x, max_y, max_z)
    jobs = theorem.jobs(bounds)
    start = time.perf_counter()
    results: list[JobResult] = []
    if workers <= 1 and executor is None:
        results = _run_chunk(theorem_id, jobs, bounds)
    else:
        own = executor is None
        pool = executor or ProcessPoolExecutor(max_workers=workers)
        try:
            size = max(1, len(jobs) // (8 * max(workers, 1)))
            chunks = _chunks(jobs, size)
            for part in pool.map(_run_chunk, [theorem_id] * len(chunks), chunks,
                                 [bounds] * len(chunks)):
                results.extend(part)
        finally:
            if own:
                pool.shutdown()
    found = [cx for r in results for cx in r.counterexamples]
    return VerificationReport(
        theorem=theorem.id,
        claim=theorem.claim,
        bounds=bounds,
        instances_checked=sum(r.instances for r in results),
        counterexample_count=len(found),
        counterexamples=found[:MAX_REPORTED],
        notes=list(theorem.notes),
        wall_time=time.perf_counter() - start,
    )


def verify_all(max_x: int | None = None, max_y: int | None = None, max_z: int | None = None,
               *, workers: int = 1) -> list[VerificationReport]:
    """Every registered theorem; explicit bounds are clipped to each theorem's limits."""
    reports = []
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for tid in theorem_ids():
            lim = get(tid).limits
            clip = lambda v, m: None if v is None else min(v, m)  # noqa: E731
            reports.append(verify(
                tid, clip(max_x, lim.max_x), clip(max_y, lim.max_y), clip(max_z, lim.max_z),
                workers=workers, executor=pool,
            ))
    finally:
        if pool is not None:
            pool.shutdown()
    return reports


def replay(theorem_id: str, counterexample: dict, bounds: Bounds) -> bool:
    """True iff re-running the counterexample's job reproduces it exactly."""
    res = run_job(theorem_id, tuple(counterexample["job"]), bounds)
    return counterexample in res.counterexamples


def reports_json(reports: Sequence[VerificationReport], timing: bool = False) -> str:
    if len(reports) == 1:
        return dumps(reports[0].to_json(timing))
    return dumps([r.to_json(timing) for r in reports])
