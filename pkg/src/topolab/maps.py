"""Continuous maps, closed maps and proper maps."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .compactness import IndexedFamily, is_compact_subset, is_continuously_indexed
from .errors import BoundExceeded, InvariantViolation, NotContinuous, PointOutOfRange
from .space import (
    FiniteSpace,
    PointSet,
    check_subset,
    mask_of,
    points,
    product,
    spaces_up_to,
    MAX_ENUM_POINTS,
)


def _continuity_failure(dom: FiniteSpace, cod: FiniteSpace, graph: Sequence[int]) -> int | None:
    for x in range(dom.n):
        target = cod.nbhds[graph[x]]
        for y in points(dom.nbhds[x]):
            if not target >> graph[y] & 1:
                return x
    return None


def is_continuous(dom: FiniteSpace, cod: FiniteSpace, graph: Sequence[int]) -> bool:
    return _continuity_failure(dom, cod, graph) is None


@dataclass(frozen=True)
class ContinuousMap:
    dom: FiniteSpace
    cod: FiniteSpace
    graph: tuple[int, ...]

    def __post_init__(self):
        graph = tuple(self.graph)
        object.__setattr__(self, "graph", graph)
        if len(graph) != self.dom.n:
            raise ValueError("graph must assign a value to every point of the domain")
        for v in graph:
            if not 0 <= v < self.cod.n:
                raise PointOutOfRange(1 << v if v >= 0 else -1, self.cod.n)
        bad = _continuity_failure(self.dom, self.cod, graph)
        if bad is not None:
            raise NotContinuous(self._witness(bad))

    def _witness(self, bad: int) -> int:
        # first failing open in canonical order when the codomain is small
        if self.cod.n <= 16:
            for v in self.cod.opens:
                if not self.dom.is_open(preimage_of(self.graph, v)):
                    return v
        return self.cod.nbhds[self.graph[bad]]

    def __call__(self, x: int) -> int:
        return self.graph[x]


def make_map(dom: FiniteSpace, cod: FiniteSpace, graph: Sequence[int]) -> ContinuousMap:
    return ContinuousMap(dom, cod, tuple(graph))


def identity(space: FiniteSpace) -> ContinuousMap:
    return ContinuousMap(space, space, tuple(range(space.n)))


def constant(dom: FiniteSpace, cod: FiniteSpace, value: int) -> ContinuousMap:
    return ContinuousMap(dom, cod, (value,) * dom.n)


def preimage_of(graph: Sequence[int], b: PointSet) -> PointSet:
    out = 0
    for x, v in enumerate(graph):
        if b >> v & 1:
            out |= 1 << x
    return out


def image(f: ContinuousMap, a: PointSet) -> PointSet:
    check_subset(a, f.dom.n)
    out = 0
    for x in points(a):
        out |= 1 << f.graph[x]
    return out


def preimage(f: ContinuousMap, b: PointSet) -> PointSet:
    check_subset(b, f.cod.n)
    return preimage_of(f.graph, b)


def fiber(f: ContinuousMap, y: int) -> PointSet:
    if not 0 <= y < f.cod.n:
        raise PointOutOfRange(1 << y if y >= 0 else -1, f.cod.n)
    return preimage_of(f.graph, 1 << y)


def closed_by_images(f: ContinuousMap) -> bool:
    """Image of every closed set is closed."""
    return all(f.cod.is_closed(image(f, c)) for c in f.dom.closeds)


def closed_by_fibers(f: ContinuousMap) -> bool:
    """For each open ``U``, the points whose fibre lies in ``U`` form an open set."""
    fibers = [fiber(f, b) for b in range(f.cod.n)]
    for u in f.dom.opens:
        inside = mask_of(b for b, fb in enumerate(fibers) if fb & ~u == 0)
        if not f.cod.is_open(inside):
            return False
    return True


def is_closed_map(f: ContinuousMap) -> bool:
    a = closed_by_images(f)
    b = closed_by_fibers(f)
    if a != b:
        raise InvariantViolation(f"closed-map methods disagree on {f.graph}")
    return a


def product_with_identity(z: FiniteSpace, f: ContinuousMap) -> ContinuousMap:
    """``(p, x) -> (p, f(x))`` from ``z x dom`` to ``z x cod``."""
    dom = product(z, f.dom)
    cod = product(z, f.cod)
    ny = f.cod.n
    graph = tuple(p * ny + f.graph[x] for p in range(z.n) for x in range(f.dom.n))
    return make_map(dom, cod, graph)


def projections(x: FiniteSpace, y: FiniteSpace) -> tuple[FiniteSpace, ContinuousMap, ContinuousMap]:
    xy = product(x, y)
    px = make_map(xy, x, [i for i in range(x.n) for _ in range(y.n)])
    py = make_map(xy, y, [j for _ in range(x.n) for j in range(y.n)])
    return xy, px, py


@functools.lru_cache(maxsize=65536)
def continuous_maps(dom: FiniteSpace, cod: FiniteSpace) -> tuple[tuple[int, ...], ...]:
    """Every continuous map as a graph, in lexicographic order of graphs."""
    n, m = dom.n, cod.n
    dn, cn = dom.nbhds, cod.nbhds
    below = [[j for j in range(i) if dn[i] >> j & 1] for i in range(n)]
    above = [[j for j in range(i) if dn[j] >> i & 1] for i in range(n)]
    out: list[tuple[int, ...]] = []
    g = [0] * n

    def fill(i: int):
        if i == n:
            out.append(tuple(g))
            return
        for v in range(m):
            nv = cn[v]
            if all(nv >> g[j] & 1 for j in below[i]) and all(cn[g[j]] >> v & 1 for j in above[i]):
                g[i] = v
                fill(i + 1)

    fill(0)
    return tuple(out)


def enumerate_maps(dom: FiniteSpace, cod: FiniteSpace) -> list[ContinuousMap]:
    return [ContinuousMap(dom, cod, g) for g in continuous_maps(dom, cod)]


class ProperVerdict(NamedTuple):
    criteria: tuple[bool, bool, bool, bool, bool]
    agree: bool


def _fiber_box_set(z: FiniteSpace, f: ContinuousMap, w: PointSet) -> PointSet:
    nx, ny = f.dom.n, f.cod.n
    fibers = [fiber(f, y) for y in range(ny)]
    out = 0
    for p in range(z.n):
        row = (w >> (p * nx)) & f.dom.full
        for y, fb in enumerate(fibers):
            if fb & ~row == 0:
                out |= 1 << (p * ny + y)
    return out


def is_proper(f: ContinuousMap, z_bound: int = 3) -> ProperVerdict:
    """Evaluate the five equivalent characterizations of properness.

    1. ``id_Z x f`` is closed for every ``Z`` with at most ``z_bound`` points.
    2. For those ``Z`` and every open ``W`` of ``Z x dom``, the set of
       ``(z, y)`` with ``{z} x f^-1(y)`` inside ``W`` is open.
    3. ``f`` is closed and preimages of compact sets are compact.
    4. ``f`` is closed and every fibre is compact.
    5. The fibres form a continuously indexed family of compact sets.
    """
    if z_bound > MAX_ENUM_POINTS:
        raise BoundExceeded("z_bound", z_bound, MAX_ENUM_POINTS)
    zs = spaces_up_to(z_bound)
    c1 = all(is_closed_map(product_with_identity(z, f)) for z in zs)
    c2 = all(
        product(z, f.cod).is_open(_fiber_box_set(z, f, w))
        for z in zs
        for w in product(z, f.dom).opens
    )
    closed = is_closed_map(f)
    c3 = closed and all(
        is_compact_subset(f.dom, preimage(f, q)) for q in range(1 << f.cod.n)
        if is_compact_subset(f.cod, q)
    )
    c4 = closed and all(is_compact_subset(f.dom, fiber(f, y)) for y in range(f.cod.n))
    fam = IndexedFamily(f.cod, f.dom, tuple(fiber(f, y) for y in range(f.cod.n)), "compacts")
    c5 = is_continuously_indexed(fam)
    crit = (c1, c2, c3, c4, c5)
    return ProperVerdict(crit, len(set(crit)) == 1)
