"""Theorem registry: one checker per claim, with its bounds and job layout.

A checker never sees the whole sweep.  The sweep is cut into jobs, each a
tuple of small integers (usually indices into the canonical list of spaces
up to a bound), and a checker maps one job to a :class:`JobResult`.  Jobs are
plain data so they can be shipped to worker processes and replayed.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from ..errors import BoundExceeded, UnknownTheorem
from ..space import FiniteSpace, spaces_up_to

AXES = ("x", "y", "z")


@dataclass(frozen=True)
class Bounds:
    max_x: int = 3
    max_y: int = 3
    max_z: int = 3

    def as_dict(self) -> dict[str, int]:
        return {"max_x": self.max_x, "max_y": self.max_y, "max_z": self.max_z}


@dataclass
class JobResult:
    instances: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    def fail(self, job: Sequence[int], reason: str, **instance) -> None:
        self.counterexamples.append({"job": list(job), "reason": reason, "instance": instance})


Check = Callable[[tuple, Bounds], JobResult]
Jobs = Callable[[Bounds], list[tuple]]


@dataclass(frozen=True)
class Theorem:
    id: str
    claim: str
    axes: tuple[str, ...]
    defaults: Bounds
    limits: Bounds
    jobs: Jobs
    check: Check
    notes: tuple[str, ...] = ()

    def resolve(self, max_x: int | None = None, max_y: int | None = None,
                max_z: int | None = None) -> Bounds:
        """Fill unset bounds from the defaults and reject anything over the limits.

        Axes the claim does not quantify over are reported as 0.
        """
        given = {"x": max_x, "y": max_y, "z": max_z}
        out = {}
        for axis in AXES:
            key = f"max_{axis}"
            if axis not in self.axes:
                out[key] = 0
                continue
            value = given[axis] if given[axis] is not None else getattr(self.defaults, key)
            if value < 1:
                raise ValueError(f"{key} must be at least 1")
            limit = getattr(self.limits, key)
            if value > limit:
                raise BoundExceeded(f"{self.id} {key}", value, limit)
            out[key] = value
        return Bounds(**out)


THEOREMS: dict[str, Theorem] = {}


def register(id: str, claim: str, *, axes: str, jobs: Jobs,
             defaults: tuple[int, ...], limits: tuple[int, ...],
             notes: Sequence[str] = ()) -> Callable[[Check], Check]:
    """Decorator adding a checker; ``defaults``/``limits`` follow ``axes`` order."""

    def deco(check: Check) -> Check:
        if id in THEOREMS:
            raise ValueError(f"duplicate theorem id {id}")
        d = dict(zip(axes, defaults))
        lim = dict(zip(axes, limits))
        THEOREMS[id] = Theorem(
            id, claim, tuple(axes),
            Bounds(d.get("x", 0), d.get("y", 0), d.get("z", 0)),
            Bounds(lim.get("x", 0), lim.get("y", 0), lim.get("z", 0)),
            jobs, check, tuple(notes),
        )
        return check

    return deco


def get(theorem_id: str) -> Theorem:
    _load_claims()
    try:
        return THEOREMS[theorem_id]
    except KeyError:
        raise UnknownTheorem(theorem_id) from None


def theorem_ids() -> list[str]:
    _load_claims()
    return list(THEOREMS)


def _load_claims() -> None:
    # importing the claim modules fills the registry
    from . import claims_compact, claims_classic, claims_relative, claims_function  # noqa: F401


@functools.lru_cache(maxsize=None)
def spaces(bound: int) -> tuple[FiniteSpace, ...]:
    """Every topology on 1..bound labelled points, in canonical order."""
    return tuple(spaces_up_to(bound))


def space_jobs(*axes: str) -> Jobs:
    """Jobs indexing one space per axis, e.g. ``space_jobs("x", "z")``."""

    def jobs(b: Bounds) -> list[tuple]:
        ranges = [range(len(spaces(getattr(b, f"max_{a}")))) for a in axes]
        return list(itertools.product(*ranges))

    return jobs
