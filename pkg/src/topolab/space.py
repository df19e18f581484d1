"""Finite topological spaces.

A point set is a plain ``int`` used as a bit vector: bit ``i`` set means point
``i`` belongs to the set.  A :class:`FiniteSpace` is stored by the smallest
open neighbourhood of each point; since every finite space is determined by
its specialization preorder, this is a complete and canonical description.
The full family of open sets is materialized lazily, sorted ascending by
bit-pattern value.

Convention: ``x <= y`` in the specialization preorder iff every open set
containing ``x`` also contains ``y``.  Open sets are exactly the up-sets.

Pairs ``(x, y)`` of a product ``X x Y`` are encoded as ``x * |Y| + y``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import BoundExceeded, CarrierOverflow, NotATopology, PointOutOfRange

PointSet = int

MAX_POINTS = 4096
MAX_ENUM_POINTS = 4
MAX_COUNT_POINTS = 5


def points(mask: PointSet) -> list[int]:
    out = []
    i = 0
    while mask:
        low = mask & -mask
        i = low.bit_length() - 1
        out.append(i)
        mask ^= low
    return out


def mask_of(pts: Iterable[int]) -> PointSet:
    m = 0
    for p in pts:
        if p < 0:
            raise ValueError(f"negative point index {p}")
        m |= 1 << p
    return m


def full_mask(n: int) -> PointSet:
    return (1 << n) - 1


def check_subset(mask: PointSet, n: int) -> None:
    if mask < 0 or mask >> n:
        raise PointOutOfRange(mask, n)


def check_carrier(n: int) -> None:
    if n > MAX_POINTS:
        raise CarrierOverflow(n, MAX_POINTS)


def _upsets(n: int, up: Sequence[int]) -> list[int]:
    # Points sharing a neighbourhood are equivalent and enter together;
    # classes are added top-down so every class's strict upper part is decided first.
    classes: dict[int, int] = {}
    for x in range(n):
        classes[up[x]] = classes.get(up[x], 0) | (1 << x)
    result = [0]
    for nb, members in sorted(classes.items(), key=lambda kv: (kv[0].bit_count(), kv[0])):
        need = nb & ~members
        result += [s | members for s in result if s & need == need]
    result.sort()
    return result


@dataclass(frozen=True)
class FiniteSpace:
    """A finite topological space on points ``0..n-1``.

    ``nbhds[x]`` is the smallest open set containing ``x``.  Two spaces are
    equal iff they have the same carrier size and the same open sets.
    """

    n: int
    nbhds: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        check_carrier(self.n)
        if len(self.nbhds) != self.n:
            raise ValueError("need exactly one neighbourhood per point")
        for x, nb in enumerate(self.nbhds):
            check_subset(nb, self.n)
            if not nb >> x & 1:
                raise NotATopology(f"neighbourhood of point {x} does not contain it")
            for y in points(nb & ~(1 << x)):
                if self.nbhds[y] & ~nb:
                    raise NotATopology(
                        f"neighbourhoods of points {x} and {y} are not nested", (nb, self.nbhds[y])
                    )
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("need exactly one label per point")

    @property
    def full(self) -> PointSet:
        return full_mask(self.n)

    @cached_property
    def opens(self) -> tuple[int, ...]:
        return tuple(_upsets(self.n, self.nbhds))

    @cached_property
    def open_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    @cached_property
    def closeds(self) -> tuple[int, ...]:
        f = self.full
        return tuple(sorted(f ^ u for u in self.opens))

    def is_open(self, a: PointSet) -> bool:
        check_subset(a, self.n)
        nb = self.nbhds
        m = a
        while m:
            low = m & -m
            if nb[low.bit_length() - 1] & ~a:
                return False
            m ^= low
        return True

    def is_closed(self, a: PointSet) -> bool:
        check_subset(a, self.n)
        return self.is_open(self.full ^ a)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def __repr__(self) -> str:
        return f"FiniteSpace(n={self.n}, opens={[points(u) for u in self.opens]})"


@dataclass(frozen=True)
class SpacePreorder:
    """Reflexive, transitive relation; ``up[x]`` is the set of ``y`` with ``x <= y``."""

    n: int
    up: tuple[int, ...]

    def __post_init__(self):
        if len(self.up) != self.n:
            raise ValueError("need one row per point")
        for x, row in enumerate(self.up):
            check_subset(row, self.n)
            if not row >> x & 1:
                raise ValueError(f"relation is not reflexive at {x}")
            for y in points(row):
                if self.up[y] & ~row:
                    raise ValueError(f"relation is not transitive through {x} <= {y}")

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def matrix(self) -> list[list[bool]]:
        return [[self.leq(x, y) for y in range(self.n)] for x in range(self.n)]

    @classmethod
    def from_matrix(cls, leq: Sequence[Sequence[bool]]) -> SpacePreorder:
        n = len(leq)
        return cls(n, tuple(mask_of(y for y in range(n) if leq[x][y]) for x in range(n)))


def make_space(
    n: int, opens: Iterable[PointSet], labels: Sequence[str] | None = None
) -> FiniteSpace:
    """Validate ``opens`` as a topology on ``n`` points; never repairs the family."""
    check_carrier(n)
    family = sorted(set(opens))
    for u in family:
        check_subset(u, n)
    full = full_mask(n)
    if not family or family[0] != 0:
        raise NotATopology("empty set missing")
    if family[-1] != full:
        raise NotATopology("full set missing")
    members = set(family)
    for a, b in itertools.combinations(family, 2):
        if a | b not in members:
            raise NotATopology("union of two members missing", (a, b))
        if a & b not in members:
            raise NotATopology("intersection of two members missing", (a, b))
    nbhds = []
    for x in range(n):
        nb = full
        for u in family:
            if u >> x & 1:
                nb &= u
        nbhds.append(nb)
    space = FiniteSpace(n, tuple(nbhds), tuple(labels) if labels is not None else None)
    space.__dict__["opens"] = tuple(family)
    return space


def generate_topology(
    n: int, subbasis: Iterable[PointSet], labels: Sequence[str] | None = None
) -> FiniteSpace:
    """The coarsest topology containing every set of ``subbasis``."""
    check_carrier(n)
    full = full_mask(n)
    nbhds = [full] * n
    for s in subbasis:
        check_subset(s, n)
        for x in points(s):
            nbhds[x] &= s
    return FiniteSpace(n, tuple(nbhds), tuple(labels) if labels is not None else None)


def specialization_preorder(space: FiniteSpace) -> SpacePreorder:
    rows = []
    for x in range(space.n):
        row = space.full
        for u in space.opens:
            if u >> x & 1:
                row &= u
        rows.append(row)
    return SpacePreorder(space.n, tuple(rows))


def from_preorder(order: SpacePreorder, labels: Sequence[str] | None = None) -> FiniteSpace:
    """Alexandrov topology of ``order``: the open sets are its up-sets."""
    space = FiniteSpace(order.n, order.up, tuple(labels) if labels is not None else None)
    return space


def interior(space: FiniteSpace, a: PointSet) -> PointSet:
    check_subset(a, space.n)
    return mask_of(x for x in range(space.n) if space.nbhds[x] & ~a == 0)


def closure(space: FiniteSpace, a: PointSet) -> PointSet:
    check_subset(a, space.n)
    return mask_of(x for x in range(space.n) if space.nbhds[x] & a)


def min_open_nbhd(space: FiniteSpace, a: PointSet) -> PointSet:
    check_subset(a, space.n)
    out = 0
    for x in points(a):
        out |= space.nbhds[x]
    return out


def box(a: PointSet, b: PointSet, nb: int) -> PointSet:
    """The product set ``a x b`` under the pair encoding ``x * nb + y``."""
    out = 0
    while a:
        low = a & -a
        out |= b << ((low.bit_length() - 1) * nb)
        a ^= low
    return out


def pair(x: int, y: int, ny: int) -> int:
    return x * ny + y


@functools.lru_cache(maxsize=8192)
def product(x: FiniteSpace, y: FiniteSpace) -> FiniteSpace:
    """Product topology; its basic opens are the boxes ``U x V``."""
    size = x.n * y.n
    check_carrier(size)
    ny = y.n
    nbhds = tuple(box(x.nbhds[i], y.nbhds[j], ny) for i in range(x.n) for j in range(ny))
    return FiniteSpace(size, nbhds)


def product_by_boxes(x: FiniteSpace, y: FiniteSpace) -> FiniteSpace:
    """Product built by closing all boxes of open sets under union.

    Quadratic in the number of opens; used to cross-check :func:`product`.
    """
    size = x.n * y.n
    check_carrier(size)
    family = {0}
    for u in x.opens:
        for v in y.opens:
            b = box(u, v, y.n)
            family |= {s | b for s in family}
    return make_space(size, family)


def subspace(space: FiniteSpace, a: PointSet) -> FiniteSpace:
    check_subset(a, space.n)
    pts = points(a)
    index = {p: i for i, p in enumerate(pts)}
    nbhds = tuple(
        mask_of(index[q] for q in points(space.nbhds[p] & a)) for p in pts
    )
    labels = None
    if space.labels is not None:
        labels = tuple(space.labels[p] for p in pts)
    return FiniteSpace(len(pts), nbhds, labels)


class DiagonalClass(NamedTuple):
    hausdorff: bool
    discrete: bool


def diagonal(n: int) -> PointSet:
    return mask_of(i * n + i for i in range(n))


def diagonal_class(space: FiniteSpace) -> DiagonalClass:
    sq = product(space, space)
    diag = diagonal(space.n)
    return DiagonalClass(hausdorff=sq.is_open(sq.full ^ diag), discrete=sq.is_open(diag))


def one_point() -> FiniteSpace:
    return FiniteSpace(1, (1,))


def discrete(n: int) -> FiniteSpace:
    return FiniteSpace(n, tuple(1 << i for i in range(n)))


def indiscrete(n: int) -> FiniteSpace:
    return FiniteSpace(n, (full_mask(n),) * n)


def sierpinski() -> FiniteSpace:
    """Two points, bottom = 0 and top = 1; ``{top}`` is open, ``{bottom}`` is not."""
    return FiniteSpace(2, (0b11, 0b10), ("bot", "top"))


BOT, TOP = 0, 1


# -- enumeration -------------------------------------------------------------


def _extend_preorders(orders: list[SpacePreorder]) -> list[SpacePreorder]:
    # A new last point is placed by choosing the points above it (an up-set)
    # and below it (a down-set) with everything below it under everything above it.
    out = []
    for p in orders:
        n = p.n
        ups = _upsets(n, p.up)
        down_rows = tuple(mask_of(x for x in range(n) if p.up[x] >> y & 1) for y in range(n))
        downs = _upsets(n, down_rows)
        new = 1 << n
        for d in downs:
            for u in ups:
                if any(p.up[x] & u != u for x in points(d)):
                    continue
                rows = [p.up[x] | (new | u if d >> x & 1 else 0) for x in range(n)]
                rows.append(u | new)
                out.append(SpacePreorder(n + 1, tuple(rows)))
    return out


@functools.lru_cache(maxsize=None)
def _topologies(n: int) -> tuple[FiniteSpace, ...]:
    orders = [SpacePreorder(0, ())]
    for _ in range(n):
        orders = _extend_preorders(orders)
    spaces = [FiniteSpace(p.n, p.up) for p in orders]
    spaces.sort(key=lambda s: s.opens)
    return tuple(spaces)


def enumerate_topologies(
    n: int, start: int = 0, *, limit: int = MAX_ENUM_POINTS
) -> Iterator[FiniteSpace]:
    """Every topology on ``n`` labelled points once, ordered by open family.

    ``start`` skips that many spaces so work can be split deterministically.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > limit:
        raise BoundExceeded("points", n, limit)
    yield from _topologies(n)[start:]


def count_topologies(n: int) -> int:
    if n > MAX_COUNT_POINTS:
        raise BoundExceeded("points", n, MAX_COUNT_POINTS)
    return len(_topologies(n))


def spaces_up_to(max_points: int, min_points: int = 1) -> list[FiniteSpace]:
    out = []
    for n in range(min_points, max_points + 1):
        out.extend(enumerate_topologies(n))
    return out


def topologies_by_family_filter(n: int) -> list[tuple[int, ...]]:
    """Brute force: every family of subsets satisfying the topology axioms.

    Independent of the preorder machinery; feasible up to 4 points.
    """
    if n > MAX_ENUM_POINTS:
        raise BoundExceeded("points", n, MAX_ENUM_POINTS)
    full = full_mask(n)
    middle = list(range(1, full))
    found = []
    for bits in range(1 << len(middle)):
        fam = [0] + [s for k, s in enumerate(middle) if bits >> k & 1]
        if full:
            fam.append(full)
        members = set(fam)
        if all(a | b in members and a & b in members for a, b in itertools.combinations(fam, 2)):
            found.append(tuple(sorted(members)))
    found.sort()
    return found


def enumerate_preorders(n: int) -> list[SpacePreorder]:
    """Brute force over all relations on ``n`` points, keeping preorders."""
    if n > MAX_ENUM_POINTS:
        raise BoundExceeded("points", n, MAX_ENUM_POINTS)
    off = [(x, y) for x in range(n) for y in range(n) if x != y]
    out = []
    for bits in range(1 << len(off)):
        rel = [[x == y for y in range(n)] for x in range(n)]
        for k, (x, y) in enumerate(off):
            if bits >> k & 1:
                rel[x][y] = True
        if all(
            not (rel[x][y] and rel[y][z]) or rel[x][z]
            for x in range(n)
            for y in range(n)
            for z in range(n)
        ):
            out.append(SpacePreorder.from_matrix(rel))
    return out


def to_dot(space: FiniteSpace, name: str = "space") -> str:
    """Hasse diagram of the specialization preorder, arrows pointing upward."""
    up = space.nbhds
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for x in range(space.n):
        lines.append(f'  p{x} [label="{space.label(x)}"];')
    for x in range(space.n):
        for y in range(space.n):
            if x == y or not up[x] >> y & 1:
                continue
            if up[y] >> x & 1:
                if x < y:
                    lines.append(f"  p{x} -> p{y} [dir=both];")
                continue
            between = up[x] & ~up[y] & ~(1 << x)
            if any(up[z] >> y & 1 and not up[z] >> x & 1 for z in points(between)):
                continue
            lines.append(f"  p{x} -> p{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
