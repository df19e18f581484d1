"""Compactness, relative compactness and continuously indexed families.

Compactness here is always checked the long way, against directed open
covers, and then compared with what finiteness predicts.  Directed covers
are generated from antichains of open sets closed under finite unions; a
cover's largest member is all that matters for "some member covers the set",
so these generators reach every verdict an arbitrary directed cover could.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Literal, NamedTuple, Sequence

from .errors import InvariantViolation, NotDirected, NotOpen, RoleViolation
from .space import (
    FiniteSpace,
    PointSet,
    _upsets,
    box,
    check_carrier,
    check_subset,
    generate_topology,
    interior,
    make_space,
    min_open_nbhd,
    points,
    product,
)

# Above this many open sets the directed-cover sweep is skipped and the
# finite-space closed forms are used on their own.
DEFINITIONAL_MAX_OPENS = 16


@dataclass(frozen=True)
class DirectedCover:
    space: FiniteSpace
    members: tuple[int, ...]
    target: PointSet

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", members)
        check_subset(self.target, self.space.n)
        if not members:
            raise NotDirected(None)
        union = 0
        for m in members:
            if not self.space.is_open(m):
                raise NotOpen(m)
            union |= m
        if self.target & ~union:
            raise ValueError("members do not cover the target")
        for i, a in enumerate(members):
            for b in members[i + 1 :]:
                ab = a | b
                if not any(ab & ~c == 0 for c in members):
                    raise NotDirected((a, b))

    @property
    def union(self) -> PointSet:
        u = 0
        for m in self.members:
            u |= m
        return u


def directed_completion(members: Sequence[PointSet]) -> tuple[int, ...]:
    """Add every finite union of members."""
    family: set[int] = set()
    for m in members:
        family |= {s | m for s in family}
        family.add(m)
    return tuple(sorted(family))


def _antichains(elements: Sequence[int]) -> list[tuple[int, ...]]:
    out = []

    def grow(start: int, chosen: tuple[int, ...]):
        if chosen:
            out.append(chosen)
        for i in range(start, len(elements)):
            e = elements[i]
            if all(e & ~c and c & ~e for c in chosen):
                grow(i + 1, chosen + (e,))

    grow(0, ())
    return out


@functools.lru_cache(maxsize=4096)
def _generated_families(space: FiniteSpace) -> tuple[tuple[tuple[int, ...], int], ...]:
    seen = {}
    for chain in _antichains(space.opens):
        fam = directed_completion(chain)
        seen.setdefault(fam, fam[-1])
    return tuple(sorted(seen.items()))


def directed_covers(space: FiniteSpace, target: PointSet) -> list[DirectedCover]:
    """Directed open covers of ``target`` generated by antichains of opens."""
    check_subset(target, space.n)
    return [
        DirectedCover(space, fam, target)
        for fam, top in _generated_families(space)
        if target & ~top == 0
    ]


def _cover_families(space: FiniteSpace, target: PointSet):
    for fam, top in _generated_families(space):
        if target & ~top == 0:
            yield fam


def compact_by_covers(space: FiniteSpace, q: PointSet) -> bool:
    return all(
        any(q & ~m == 0 for m in fam) for fam in _cover_families(space, q)
    )


def is_compact_subset(space: FiniteSpace, q: PointSet) -> bool:
    """Every directed open cover of ``q`` has a member containing ``q``.

    The sweep runs when the space has at most ``DEFINITIONAL_MAX_OPENS`` open
    sets; its verdict must match finiteness (always compact).
    """
    check_subset(q, space.n)
    if len(space.opens) > DEFINITIONAL_MAX_OPENS:
        return True
    verdict = compact_by_covers(space, q)
    if not verdict:
        raise InvariantViolation(f"directed-cover sweep found {points(q)} not compact")
    return verdict


def way_below_by_covers(space: FiniteSpace, s: PointSet, t: PointSet) -> bool:
    return all(any(s & ~m == 0 for m in fam) for fam in _cover_families(space, t))


def way_below(space: FiniteSpace, s: PointSet, t: PointSet) -> bool:
    """``s`` is compact relative to ``t``.

    Closed form: ``s`` lies inside the smallest open set containing ``t``.
    For spaces with few enough opens, the directed-cover sweep is run as well
    and must agree.
    """
    check_subset(s, space.n)
    check_subset(t, space.n)
    closed_form = s & ~min_open_nbhd(space, t) == 0
    if len(space.opens) <= DEFINITIONAL_MAX_OPENS:
        swept = way_below_by_covers(space, s, t)
        if swept != closed_form:
            raise InvariantViolation(
                f"way-below sweep and closed form disagree on {points(s)}, {points(t)}"
            )
    return closed_form


def interior_containment(space: FiniteSpace, s: PointSet, t: PointSet) -> bool:
    check_subset(s, space.n)
    return s & ~interior(space, t) == 0


def quantified_open(z: FiniteSpace, x: FiniteSpace, w: PointSet, q: PointSet) -> PointSet:
    """``{p in z | (p, a) in w for every a in q}``; openness is not implied."""
    check_carrier(z.n * x.n)
    check_subset(w, z.n * x.n)
    check_subset(q, x.n)
    nx = x.n
    out = 0
    for p in range(z.n):
        if (w >> (p * nx)) & q == q:
            out |= 1 << p
    return out


Role = Literal["opens", "compacts"]


@dataclass(frozen=True)
class IndexedFamily:
    """``assign[i]`` is the member of the family at index point ``i``."""

    index: FiniteSpace
    target: FiniteSpace
    assign: tuple[int, ...]
    role: Role = "opens"

    def __post_init__(self):
        object.__setattr__(self, "assign", tuple(self.assign))
        if len(self.assign) != self.index.n:
            raise ValueError("need one member per index point")
        if self.role not in ("opens", "compacts"):
            raise ValueError(f"unknown role {self.role!r}")
        for i, a in enumerate(self.assign):
            check_subset(a, self.target.n)
            if self.role == "opens" and not self.target.is_open(a):
                raise RoleViolation(i, a)

    def graph(self) -> PointSet:
        """``{(z, i) | z in assign[i]}`` inside ``target x index``."""
        ni = self.index.n
        g = 0
        for i, a in enumerate(self.assign):
            g |= box(a, 1 << i, ni)
        return g


def is_continuously_indexed(family: IndexedFamily) -> bool:
    if family.role == "opens":
        return product(family.target, family.index).is_open(family.graph())
    index = family.index
    for u in family.target.opens:
        inside = 0
        for y, q in enumerate(family.assign):
            if q & ~u == 0:
                inside |= 1 << y
        if not index.is_open(inside):
            return False
    return True


def family_intersection(family: IndexedFamily) -> PointSet:
    out = family.target.full
    for i, a in enumerate(family.assign):
        if not family.target.is_open(a):
            raise RoleViolation(i, a)
        out &= a
    return out


class UpperVietoris(NamedTuple):
    space: FiniteSpace
    subsets: tuple[int, ...]


def submasks(u: PointSet):
    s = u
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & u


def upper_vietoris(space: FiniteSpace) -> UpperVietoris:
    """Hyperspace of all subsets; point ``i`` is the subset with bit pattern ``i``."""
    size = 1 << space.n
    check_carrier(size)
    boxes = []
    for u in space.opens:
        b = 0
        for q in submasks(u):
            b |= 1 << q
        boxes.append(b)
    return UpperVietoris(generate_topology(size, boxes), tuple(range(size)))


class WitnessSpace(NamedTuple):
    space: FiniteSpace
    membership: PointSet
    points_as_opens: tuple[int, ...]


@functools.lru_cache(maxsize=1024)
def _validated(n: int, family: tuple[int, ...]) -> FiniteSpace:
    return make_space(n, family)


def witness_space(space: FiniteSpace, cover: DirectedCover) -> WitnessSpace:
    """Space whose points are the open sets of ``space``, topologized by ``cover``.

    A set ``V`` of opens is open iff it is closed upward under inclusion and,
    whenever it contains the union of the cover, it contains some member.
    ``membership`` is ``{(U, x) | x in U}``, which must come out open.
    """
    if cover.space != space:
        raise ValueError("cover belongs to a different space")
    opens = space.opens
    k = len(opens)
    where = {u: i for i, u in enumerate(opens)}
    incl = tuple(
        sum(1 << j for j, v in enumerate(opens) if u & ~v == 0) for u in opens
    )
    top = where[cover.union]
    member_bits = sum(1 << where[m] for m in cover.members)
    family = tuple(
        v for v in _upsets(k, incl) if not v >> top & 1 or v & member_bits
    )
    z = _validated(k, family)
    nx = space.n
    membership = 0
    for i, u in enumerate(opens):
        membership |= u << (i * nx)
    if not product(z, space).is_open(membership):
        raise InvariantViolation("membership relation of the witness space is not open")
    return WitnessSpace(z, membership, opens)


def cover_member_from_witness(
    space: FiniteSpace, cover: DirectedCover, witness: WitnessSpace, target: PointSet
) -> PointSet:
    """Recover a member of ``cover`` containing ``target`` through the witness space.

    The set of opens containing ``target`` is computed as a quantified set
    over the membership relation; it must be open in the witness space,
    contain the cover's union, and therefore hold some member.
    """
    z = witness.space
    v = quantified_open(z, space, witness.membership, target)
    if not z.is_open(v):
        raise InvariantViolation(f"opens containing {points(target)} do not form an open set")
    where = {u: i for i, u in enumerate(witness.points_as_opens)}
    if not v >> where[cover.union] & 1:
        raise InvariantViolation("cover union does not contain the target")
    for m in cover.members:
        if v >> where[m] & 1:
            return m
    raise InvariantViolation("open set holds the union but no member")
