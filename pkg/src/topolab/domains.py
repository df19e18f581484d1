"""Finite posets as dcpos, their Scott topology, and product criteria.

Every directed subset of a finite poset has a largest element, so the Scott
open sets are exactly the up-sets.  Products in the category of
compactly generated spaces coincide with topological products for finite
spaces (all of them are exponentiable), and every check here is phrased for
the plain product.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import NotAPoset, NotMonotone
from .maps import ContinuousMap, make_map
from .space import (
    FiniteSpace,
    PointSet,
    SpacePreorder,
    box,
    check_carrier,
    check_subset,
    enumerate_topologies,
    full_mask,
    mask_of,
    product,
)


@dataclass(frozen=True)
class FinitePoset:
    """``up[a]`` holds every ``b`` with ``a <= b``."""

    n: int
    up: tuple[int, ...]

    def __post_init__(self):
        try:
            SpacePreorder(self.n, self.up)
        except ValueError as exc:
            raise NotAPoset(str(exc)) from None
        for a in range(self.n):
            for b in range(a + 1, self.n):
                if self.up[a] >> b & 1 and self.up[b] >> a & 1:
                    raise NotAPoset(f"{a} <= {b} <= {a} with {a} != {b}")

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def matrix(self) -> list[list[bool]]:
        return [[self.leq(a, b) for b in range(self.n)] for a in range(self.n)]

    @classmethod
    def from_matrix(cls, leq: Sequence[Sequence[bool]]) -> FinitePoset:
        n = len(leq)
        return cls(n, tuple(mask_of(b for b in range(n) if leq[a][b]) for a in range(n)))

    @classmethod
    def from_relation(cls, n: int, pairs: Sequence[tuple[int, int]]) -> FinitePoset:
        """Reflexive-transitive closure of ``pairs``."""
        up = [1 << a for a in range(n)]
        for a, b in pairs:
            up[a] |= 1 << b
        changed = True
        while changed:
            changed = False
            for a in range(n):
                acc = up[a]
                for b in range(n):
                    if acc >> b & 1:
                        acc |= up[b]
                if acc != up[a]:
                    up[a] = acc
                    changed = True
        return cls(n, tuple(up))


def chain(k: int) -> FinitePoset:
    return FinitePoset(k, tuple(full_mask(k) & ~full_mask(a) for a in range(k)))


def antichain(k: int) -> FinitePoset:
    return FinitePoset(k, tuple(1 << a for a in range(k)))


def diamond() -> FinitePoset:
    """Bottom 0, two incomparable middles 1 and 2, top 3."""
    return FinitePoset.from_relation(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def enumerate_posets(n: int) -> list[FinitePoset]:
    """All partial orders on ``n`` labelled elements (the T0 finite spaces)."""
    out = []
    for s in enumerate_topologies(n):
        if len(set(s.nbhds)) == n:
            out.append(FinitePoset(n, s.nbhds))
    return out


def posets_up_to(k: int) -> list[FinitePoset]:
    return [p for n in range(1, k + 1) for p in enumerate_posets(n)]


@functools.lru_cache(maxsize=8192)
def scott_topology(p: FinitePoset) -> FiniteSpace:
    return FiniteSpace(p.n, p.up)


def sigma_functor(p: FinitePoset) -> FiniteSpace:
    return scott_topology(p)


def is_monotone(d: FinitePoset, e: FinitePoset, graph: Sequence[int]) -> bool:
    return all(
        e.up[graph[a]] >> graph[b] & 1
        for a in range(d.n)
        for b in range(d.n)
        if d.up[a] >> b & 1
    )


def sigma_map(d: FinitePoset, e: FinitePoset, graph: Sequence[int]) -> ContinuousMap:
    for a in range(d.n):
        for b in range(d.n):
            if d.up[a] >> b & 1 and not e.up[graph[a]] >> graph[b] & 1:
                raise NotMonotone((a, b))
    return make_map(scott_topology(d), scott_topology(e), graph)


def poset_product(d: FinitePoset, e: FinitePoset) -> FinitePoset:
    """Componentwise order; pair ``(a, b)`` sits at ``a * |e| + b``."""
    check_carrier(d.n * e.n)
    return FinitePoset(
        d.n * e.n, tuple(box(d.up[a], e.up[b], e.n) for a in range(d.n) for b in range(e.n))
    )


def inclusion_order(sets: Sequence[int]) -> FinitePoset:
    return FinitePoset(
        len(sets),
        tuple(mask_of(j for j, v in enumerate(sets) if u & ~v == 0) for u in sets),
    )


@functools.lru_cache(maxsize=4096)
def scott_open_families(x: FiniteSpace) -> tuple[int, ...]:
    """Scott open sets of the lattice of opens of ``x``, as masks over ``x.opens`` positions."""
    return scott_topology(inclusion_order(x.opens)).opens


class ProdCharac(NamedTuple):
    cond1: bool
    cond2: bool
    cond3: bool


def _sections_criterion(
    a: FiniteSpace, b: FiniteSpace, sections: Sequence[int]
) -> bool:
    # sections[i] is a subset of b for each point i of a
    where = {u: k for k, u in enumerate(b.opens)}
    try:
        idx = [where[s] for s in sections]
    except KeyError:
        return False
    for fam in scott_open_families(b):
        inside = 0
        for i, k in enumerate(idx):
            if fam >> k & 1:
                inside |= 1 << i
        if not a.is_open(inside):
            return False
    return True


def row_sections(w: PointSet, ny: int, nx: int) -> list[int]:
    full = full_mask(nx)
    return [(w >> (y * nx)) & full for y in range(ny)]


def column_sections(w: PointSet, ny: int, nx: int) -> list[int]:
    return [
        mask_of(y for y in range(ny) if w >> (y * nx + x) & 1) for x in range(nx)
    ]


def check_prod_charac(y: FiniteSpace, x: FiniteSpace, w: PointSet) -> ProdCharac:
    """Three descriptions of openness of ``w`` inside ``y x x``.

    1. ``w`` is open in the product.
    2. Every row ``U_y`` is open in ``x`` and, for each Scott open family of
       opens of ``x``, the rows landing in it form an open set of ``y``.
    3. The mirror image of 2 with columns and ``y``.
    """
    check_carrier(y.n * x.n)
    check_subset(w, y.n * x.n)
    c1 = product(y, x).is_open(w)
    c2 = _sections_criterion(y, x, row_sections(w, y.n, x.n))
    c3 = _sections_criterion(x, y, column_sections(w, y.n, x.n))
    return ProdCharac(c1, c2, c3)


def check_sigma_products(d: FinitePoset, e: FinitePoset) -> bool:
    """Scott topology of the product order equals the product of Scott topologies."""
    return scott_topology(poset_product(d, e)) == product(scott_topology(d), scott_topology(e))


def upsets_by_filter(p: FinitePoset) -> list[int]:
    """Up-sets found by testing every subset; an oracle for small posets."""
    out = []
    for s in range(1 << p.n):
        if all(p.up[a] & ~s == 0 for a in range(p.n) if s >> a & 1):
            out.append(s)
    return out
