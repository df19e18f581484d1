"""Exhaustive verification of the characterizations on small finite spaces."""

from .registry import THEOREMS, Bounds, JobResult, Theorem, get, spaces, theorem_ids
from .runner import MAX_REPORTED, VerificationReport, replay, reports_json, verify, verify_all

__all__ = [
    "MAX_REPORTED",
    "THEOREMS",
    "Bounds",
    "JobResult",
    "Theorem",
    "VerificationReport",
    "get",
    "replay",
    "reports_json",
    "spaces",
    "theorem_ids",
    "verify",
    "verify_all",
]
