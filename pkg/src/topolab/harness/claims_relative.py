"""Relative compactness (the way-below relation on subsets)."""

from __future__ import annotations

from ..compactness import (
    DirectedCover,
    _cover_families,
    is_compact_subset,
    quantified_open,
    way_below,
    way_below_by_covers,
    witness_space,
)
from ..formats import space_to_json
from ..maps import enumerate_maps, image
from ..space import box, closure, diagonal_class, min_open_nbhd, points, product
from .fast import way_below_tables
from .registry import Bounds, JobResult, register, space_jobs, spaces


@register(
    "way-below-closed-form",
    "S is way below T (every directed open cover of T has a member containing S) iff S lies "
    "in the smallest open set containing T.",
    axes="x", jobs=space_jobs("x"), defaults=(4,), limits=(4,),
)
def _closed_form(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    res = JobResult()
    for t in range(1 << x.n):
        nb = min_open_nbhd(x, t)
        for s in range(1 << x.n):
            res.instances += 1
            if way_below_by_covers(x, s, t) != (s & ~nb == 0):
                res.fail(job, "definition and closed form disagree", X=space_to_json(x),
                         S=points(s), T=points(t))
    return res


def _witness_neighbourhood(x, fam, t) -> tuple[int, int]:
    """Smallest neighbourhood of the cover's union in its witness space, and membership."""
    cover = DirectedCover(x, fam, t)
    ws = witness_space(x, cover)
    return ws.space.nbhds[ws.points_as_opens.index(cover.union)], ws.membership


@register(
    "way-below-equiv",
    "S way below T iff for all Z and open W of Z x X, {z | {z} x T in W} lies in the interior "
    "of {z | {z} x S in W} iff every {z} x T in W extends to V x S in W for a neighbourhood V "
    "of z iff M inside int N implies the T-set of M lies in the interior of the S-set of N.",
    axes="xz", jobs=space_jobs("x"), defaults=(3, 3), limits=(3, 3),
    notes=("the neighbourhood condition is also evaluated at the witness space of every "
           "directed cover of T",),
)
def _equiv(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    res = JobResult()
    size = 1 << x.n
    tables = [way_below_tables(z, x) for z in spaces(b.max_z)]
    for t in range(size):
        witnesses = [(fam, *_witness_neighbourhood(x, fam, t)) for fam in _cover_families(x, t)]
        for s in range(size):
            res.instances += 1
            c1 = way_below(x, s, t)
            c2 = all(bool(tb[0][s, t]) for tb in tables)
            c3 = all(bool(tb[1][s, t]) for tb in tables)
            c4 = all(bool(tb[2][s, t]) for tb in tables)
            if not c1 == c2 == c3 == c4:
                res.fail(job, "conditions disagree", X=space_to_json(x), S=points(s),
                         T=points(t), conditions=[c1, c2, c3, c4])
            for fam, near, membership in witnesses:
                # the neighbourhood condition at the witness point versus a covering member
                nbhd_ok = box(near, s, x.n) & ~membership == 0
                member_ok = any(s & ~m == 0 for m in fam)
                if nbhd_ok != member_ok or (c1 and not member_ok):
                    res.fail(job, "witness space does not decide the cover",
                             X=space_to_json(x), S=points(s), T=points(t),
                             cover=[points(m) for m in fam])
    return res


@register(
    "way-below-hausdorff-closure",
    "If X is Hausdorff and S is way below T then the closure of S lies in T.",
    axes="x", jobs=space_jobs("x"), defaults=(4,), limits=(4,),
)
def _hausdorff_closure(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    res = JobResult()
    if not diagonal_class(x).hausdorff:
        return res
    for t in range(1 << x.n):
        for s in range(1 << x.n):
            res.instances += 1
            if way_below(x, s, t) and closure(x, s) & ~t:
                res.fail(job, "closure escapes T", X=space_to_json(x), S=points(s), T=points(t))
    return res


@register(
    "way-below-closed-compact",
    "A closed set F with F way below X is compact.",
    axes="xz", jobs=space_jobs("x"), defaults=(4, 3), limits=(4, 3),
)
def _closed_compact(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    res = JobResult()
    for f in x.closeds:
        if not way_below(x, f, x.full):
            continue
        res.instances += 1
        if not is_compact_subset(x, f):
            res.fail(job, "closed set is not compact", X=space_to_json(x), F=points(f))
            continue
        for z in spaces(b.max_z):
            widen = box(z.full, x.full ^ f, x.n)
            for w in product(z, x).opens:
                w2 = widen | w
                m = quantified_open(z, x, w2, x.full)
                n = quantified_open(z, x, w2, f)
                if m != n or n != quantified_open(z, x, w, f) or not z.is_open(n):
                    res.fail(job, "quantified sets over F are not open", X=space_to_json(x),
                             F=points(f), Z=space_to_json(z), W=points(w))
    return res


@register(
    "way-below-image",
    "If f: X -> Y is continuous and S is way below T then f(S) is way below f(T).",
    axes="xy", jobs=space_jobs("x", "y"), defaults=(3, 3), limits=(3, 3),
)
def _image(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    y = spaces(b.max_y)[job[1]]
    res = JobResult()
    pairs = [(s, t) for t in range(1 << x.n) for s in range(1 << x.n) if way_below(x, s, t)]
    for f in enumerate_maps(x, y):
        for s, t in pairs:
            res.instances += 1
            if not way_below(y, image(f, s), image(f, t)):
                res.fail(job, "image pair is not way below", X=space_to_json(x),
                         Y=space_to_json(y), map=list(f.graph), S=points(s), T=points(t))
    return res


@register(
    "way-below-product",
    "If S is way below T in X and A way below B in Y then S x A is way below T x B.",
    axes="xy", jobs=space_jobs("x", "y"), defaults=(3, 3), limits=(3, 3),
)
def _product(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    y = spaces(b.max_y)[job[1]]
    res = JobResult()
    xy = product(x, y)
    px = [(s, t) for t in range(1 << x.n) for s in range(1 << x.n) if way_below(x, s, t)]
    py = [(a, c) for c in range(1 << y.n) for a in range(1 << y.n) if way_below(y, a, c)]
    for s, t in px:
        for a, c in py:
            res.instances += 1
            if not way_below(xy, box(s, a, y.n), box(t, c, y.n)):
                res.fail(job, "product pair is not way below", X=space_to_json(x),
                         Y=space_to_json(y), S=points(s), T=points(t), A=points(a), B=points(c))
    return res
