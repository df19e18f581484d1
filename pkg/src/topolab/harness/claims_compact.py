"""Compactness through quantifiers: intersections, projections, witnesses."""

from __future__ import annotations

import itertools

from ..compactness import (
    DirectedCover,
    IndexedFamily,
    _generated_families,
    cover_member_from_witness,
    family_intersection,
    is_compact_subset,
    is_continuously_indexed,
    quantified_open,
    submasks,
    upper_vietoris,
    witness_space,
)
from ..formats import space_to_json
from ..function_spaces import exponential, universal_quantifier_graph, sierpinski
from ..maps import is_closed_map, is_continuous, projections
from ..space import TOP, FiniteSpace, box, points, product
from .fast import family_failures
from .registry import Bounds, JobResult, register, space_jobs, spaces


def intersections_open(z: FiniteSpace, x: FiniteSpace) -> tuple[int, int | None]:
    """Count continuously indexed open families of ``z`` over ``x``; first bad one."""
    count = 0
    for assign in itertools.product(z.opens, repeat=x.n):
        fam = IndexedFamily(x, z, assign, "opens")
        if not is_continuously_indexed(fam):
            continue
        count += 1
        if not z.is_open(family_intersection(fam)):
            return count, assign
    return count, None


def projections_open(z: FiniteSpace, x: FiniteSpace, q: int | None = None):
    """Count opens ``W`` of ``z x x``; first one whose quantified set is not open."""
    q = x.full if q is None else q
    opens = product(z, x).opens
    for w in opens:
        if not z.is_open(quantified_open(z, x, w, q)):
            return len(opens), w
    return len(opens), None


@register(
    "compact-intersection",
    "For compact X, the intersection of any continuously X-indexed family of opens of Z is open.",
    axes="xz", jobs=space_jobs("x", "z"), defaults=(3, 3), limits=(3, 3),
)
def _intersection(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    z = spaces(b.max_z)[job[1]]
    res = JobResult()
    compact = is_compact_subset(x, x.full)
    count, bad = intersections_open(z, x)
    res.instances = count
    if compact and bad is not None:
        res.fail(job, "intersection of a continuously indexed family is not open",
                 X=space_to_json(x), Z=space_to_json(z), family=[points(a) for a in bad])
    return res


@register(
    "compact-universal",
    "For compact X and open W in Z x X, the set {z | (z, x) in W for all x} is open in Z.",
    axes="xz", jobs=space_jobs("x", "z"), defaults=(3, 3), limits=(4, 3),
)
def _universal(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    z = spaces(b.max_z)[job[1]]
    res = JobResult()
    compact = is_compact_subset(x, x.full)
    res.instances, bad = projections_open(z, x)
    if compact and bad is not None:
        res.fail(job, "universally quantified set is not open",
                 X=space_to_json(x), Z=space_to_json(z), W=points(bad))
    return res


@register(
    "closed-projection-equiv",
    "Z's opens are closed under continuously X-indexed intersections iff quantifying "
    "opens of Z x X over X gives opens iff the projection Z x X -> Z is closed.",
    axes="xz", jobs=space_jobs("x", "z"), defaults=(3, 3), limits=(3, 3),
)
def _projection_equiv(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    z = spaces(b.max_z)[job[1]]
    res = JobResult(instances=1)
    c1 = intersections_open(z, x)[1] is None
    c2 = projections_open(z, x)[1] is None
    _, pz, _ = projections(z, x)
    c3 = is_closed_map(pz)
    if not c1 == c2 == c3:
        res.fail(job, "conditions disagree", X=space_to_json(x), Z=space_to_json(z),
                 conditions=[c1, c2, c3])
    return res


@register(
    "sierpinski-quantifier",
    "X is compact iff the universal quantifier A: S^X -> S is continuous.",
    axes="x", jobs=space_jobs("x"), defaults=(4,), limits=(4,),
)
def _quantifier(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    res = JobResult(instances=1)
    compact = is_compact_subset(x, x.full)
    fs = exponential(x, sierpinski())
    graph = universal_quantifier_graph(x, x.full)
    continuous = is_continuous(fs.space, fs.cod, graph)
    # the proof's route: A^-1(top) is the quantified evaluation preimage of top
    nx = x.n
    w = sum(1 << (i * nx + a) for i, g in enumerate(fs.maps) for a in range(nx) if g[a] == TOP)
    ev_open = product(fs.space, x).is_open(w)
    via_w = quantified_open(fs.space, x, w, x.full)
    direct = sum(1 << i for i, v in enumerate(graph) if v == TOP)
    if compact != continuous or not ev_open or via_w != direct:
        res.fail(job, "quantifier continuity does not match compactness",
                 X=space_to_json(x), compact=compact, continuous=continuous,
                 evaluation_preimage_open=ev_open)
    return res


def _family_jobs(b: Bounds) -> list[tuple]:
    return space_jobs("x", "y")(b)


@register(
    "indexed-compact-family",
    "For a continuously Y-indexed family of compact sets Q_y of X and open W in Z x X, "
    "{(z, y) | {z} x Q_y inside W} is open in Z x Y; continuity of the family matches "
    "continuity into the upper Vietoris hyperspace.",
    axes="xyz", jobs=_family_jobs, defaults=(3, 3, 3), limits=(3, 3, 3),
)
def _indexed(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    y = spaces(b.max_y)[job[1]]
    zs = spaces(b.max_z)
    hyper = upper_vietoris(x).space
    tables = [family_failures(z, x) for z in zs]
    near = [(p, r) for p in range(y.n) for r in points(y.nbhds[p])]
    res = JobResult()
    for assign in itertools.product(range(1 << x.n), repeat=y.n):
        fam = IndexedFamily(y, x, assign, "compacts")
        indexed = is_continuously_indexed(fam)
        if indexed != is_continuous(y, hyper, assign):
            res.fail(job, "indexed continuity differs from hyperspace continuity",
                     X=space_to_json(x), Y=space_to_json(y), family=[points(a) for a in assign])
        if not indexed:
            continue
        for zi, table in enumerate(tables):
            res.instances += 1
            hit = next((int(table[assign[p], assign[r]]) for p, r in near
                        if table[assign[p], assign[r]] >= 0), None)
            if hit is not None:
                z = zs[zi]
                res.fail(job, "quantified family set is not open",
                         X=space_to_json(x), Y=space_to_json(y), Z=space_to_json(z),
                         family=[points(a) for a in assign],
                         W=points(product(z, x).opens[hit]))
    return res


@register(
    "witness-space",
    "For every directed open cover C of X, the space of opens of X topologized by C is a "
    "valid space in which membership is open, and it recovers a member of C containing any "
    "set C covers.",
    axes="x", jobs=space_jobs("x"), defaults=(4,), limits=(4,),
)
def _witness(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    res = JobResult()
    for fam, top in _generated_families(x):
        cover = DirectedCover(x, fam, top)
        ws = witness_space(x, cover)
        for target in submasks(top):
            res.instances += 1
            member = cover_member_from_witness(x, cover, ws, target)
            if target & ~member:
                res.fail(job, "recovered member does not contain the target",
                         X=space_to_json(x), cover=[points(m) for m in fam],
                         target=points(target))
    return res


@register(
    "compact-set-equiv",
    "Q is compact iff for every Z and open W in Z x X, {z | (z, q) in W for all q in Q} is "
    "open iff {z | {z} x Q inside W} is open.",
    axes="xz", jobs=space_jobs("x"), defaults=(3, 3), limits=(4, 3),
)
def _compact_set(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    zs = spaces(b.max_z)
    res = JobResult()
    for q in range(1 << x.n):
        res.instances += 1
        c1 = is_compact_subset(x, q)
        c2 = c3 = True
        for z in zs:
            nx = x.n
            for w in product(z, x).opens:
                pointwise = quantified_open(z, x, w, q)
                boxed = sum(1 << p for p in range(z.n) if box(1 << p, q, nx) & ~w == 0)
                c2 = c2 and z.is_open(pointwise)
                c3 = c3 and z.is_open(boxed)
            if not (c2 and c3):
                break
        if not c1 == c2 == c3:
            res.fail(job, "conditions disagree", X=space_to_json(x), Q=points(q),
                     conditions=[c1, c2, c3])
    return res
