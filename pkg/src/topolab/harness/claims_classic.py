"""Classical consequences and proper maps, each checked over its full sweep."""

from __future__ import annotations

from ..compactness import is_compact_subset, quantified_open
from ..formats import space_to_json
from ..function_spaces import exponential, subbasic_open
from ..maps import (
    closed_by_fibers,
    closed_by_images,
    continuous_maps,
    enumerate_maps,
    image,
    is_closed_map,
    is_proper,
    make_map,
    product_with_identity,
)
from ..space import FiniteSpace, box, diagonal, diagonal_class, one_point, points, product
from .registry import Bounds, JobResult, register, space_jobs, spaces


def _codiagonal(space: FiniteSpace) -> int:
    return product(space, space).full ^ diagonal(space.n)


@register(
    "hausdorff-compact-closed",
    "In a Hausdorff space every compact set is closed.",
    axes="x", jobs=space_jobs("x"), defaults=(3,), limits=(4,),
)
def _p1(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    res = JobResult()
    hausdorff = diagonal_class(x).hausdorff
    codiag = _codiagonal(x)
    for q in range(1 << x.n):
        res.instances += 1
        if not (hausdorff and is_compact_subset(x, q)):
            continue
        outside = quantified_open(x, x, codiag, q)
        if not x.is_closed(q) or outside != x.full ^ q or not x.is_open(outside):
            res.fail(job, "compact set is not closed", X=space_to_json(x), Q=points(q))
    return res


@register(
    "closed-in-compact",
    "A closed subset of a compact space is compact.",
    axes="xz", jobs=space_jobs("x"), defaults=(3, 3), limits=(4, 3),
)
def _p2(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    res = JobResult()
    if not is_compact_subset(x, x.full):
        return res
    for f in x.closeds:
        res.instances += 1
        if not is_compact_subset(x, f):
            res.fail(job, "closed set is not compact", X=space_to_json(x), F=points(f))
            continue
        for z in spaces(b.max_z):
            zx = product(z, x)
            widen = box(z.full, x.full ^ f, x.n)
            for w in zx.opens:
                w2 = widen | w
                v = quantified_open(z, x, w, f)
                if not zx.is_open(w2) or quantified_open(z, x, w2, x.full) != v or not z.is_open(v):
                    res.fail(job, "quantifier over the closed set is not open",
                             X=space_to_json(x), F=points(f), Z=space_to_json(z), W=points(w))
                    break
    return res


@register(
    "image-compact",
    "Continuous images of compact sets are compact.",
    axes="xy", jobs=space_jobs("x", "y"), defaults=(3, 3), limits=(3, 3),
)
def _p3(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    y = spaces(b.max_y)[job[1]]
    res = JobResult()
    for f in enumerate_maps(x, y):
        for q in range(1 << x.n):
            res.instances += 1
            if is_compact_subset(x, q) and not is_compact_subset(y, image(f, q)):
                res.fail(job, "image is not compact", X=space_to_json(x), Y=space_to_json(y),
                         map=list(f.graph), Q=points(q))
    return res


@register(
    "product-compact",
    "If X and Y are compact then so is X x Y.",
    axes="xyz", jobs=space_jobs("x", "y", "z"), defaults=(2, 2, 2), limits=(3, 2, 2),
)
def _p4(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    y = spaces(b.max_y)[job[1]]
    z = spaces(b.max_z)[job[2]]
    res = JobResult()
    xy = product(x, y)
    zx = product(z, x)
    if product(zx, y) != product(z, xy):
        res.fail(job, "product encoding is not associative",
                 X=space_to_json(x), Y=space_to_json(y), Z=space_to_json(z))
        return res
    hyp = is_compact_subset(x, x.full) and is_compact_subset(y, y.full)
    if hyp and not is_compact_subset(xy, xy.full):
        res.fail(job, "product is not compact", X=space_to_json(x), Y=space_to_json(y))
    for w in product(z, xy).opens:
        res.instances += 1
        v = quantified_open(z, xy, w, xy.full)
        inner = quantified_open(zx, y, w, y.full)
        if hyp and (not z.is_open(v) or not zx.is_open(inner)
                    or quantified_open(z, x, inner, x.full) != v):
            res.fail(job, "quantifier over the product is not open",
                     X=space_to_json(x), Y=space_to_json(y), Z=space_to_json(z), W=points(w))
    return res


@register(
    "exponential-hausdorff",
    "If Y is Hausdorff then so is the exponential Y^X.",
    axes="xy", jobs=space_jobs("x", "y"), defaults=(3, 3), limits=(3, 3),
)
def _p5(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    y = spaces(b.max_y)[job[1]]
    res = JobResult()
    if not diagonal_class(y).hausdorff:
        return res
    res.instances = 1
    fs = exponential(x, y)
    e = fs.space
    ee = product(e, e)
    k = e.n
    parts_open = True
    union = 0
    for a in range(x.n):
        part = sum(1 << (i * k + j) for i, f in enumerate(fs.maps)
                   for j, g in enumerate(fs.maps) if f[a] != g[a])
        parts_open = parts_open and ee.is_open(part)
        union |= part
    if not diagonal_class(e).hausdorff or not parts_open or union != _codiagonal(e):
        res.fail(job, "exponential is not Hausdorff", X=space_to_json(x), Y=space_to_json(y))
    return res


@register(
    "exponential-discrete",
    "If X is compact and Y is discrete then the exponential Y^X is discrete.",
    axes="xy", jobs=space_jobs("x", "y"), defaults=(3, 3), limits=(3, 3),
)
def _p6(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    y = spaces(b.max_y)[job[1]]
    res = JobResult()
    if not (is_compact_subset(x, x.full) and diagonal_class(y).discrete):
        return res
    res.instances = 1
    fs = exponential(x, y)
    e = fs.space
    ee = product(e, e)
    nx, k = x.n, e.n
    agree = sum(1 << ((i * k + j) * nx + a) for i, f in enumerate(fs.maps)
                for j, g in enumerate(fs.maps) for a in range(nx) if f[a] == g[a])
    w_open = product(ee, x).is_open(agree)
    diag = quantified_open(ee, x, agree, x.full)
    if not diagonal_class(e).discrete or not w_open or diag != diagonal(k):
        res.fail(job, "exponential is not discrete", X=space_to_json(x), Y=space_to_json(y))
    return res


@register(
    "subbasic-open",
    "For every Q of X and open V of Y, N(Q, V) = {f | f(Q) inside V} is open in Y^X.",
    axes="xy", jobs=space_jobs("x", "y"), defaults=(3, 3), limits=(3, 3),
)
def _p7(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    y = spaces(b.max_y)[job[1]]
    res = JobResult()
    fs = exponential(x, y)
    e = fs.space
    ex = product(e, x)
    nx = x.n
    for v in y.opens:
        w = sum(1 << (i * nx + a) for i, f in enumerate(fs.maps) for a in range(nx) if v >> f[a] & 1)
        w_open = ex.is_open(w)
        for q in range(1 << nx):
            res.instances += 1
            n = subbasic_open(fs, q, v)
            if not e.is_open(n) or not w_open or quantified_open(e, x, w, q) != n:
                res.fail(job, "N(Q, V) is not open", X=space_to_json(x), Y=space_to_json(y),
                         Q=points(q), V=points(v))
    return res


@register(
    "proper-equiv",
    "For continuous f: X -> Y the five properness criteria agree: id_Z x f closed; the "
    "fibre-box sets are open; closed with compact preimages of compacts; closed with compact "
    "fibres; fibres form a continuously indexed family of compacts.",
    axes="xyz", jobs=space_jobs("x", "y"), defaults=(3, 3, 3), limits=(3, 3, 3),
)
def _proper(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    y = spaces(b.max_y)[job[1]]
    res = JobResult()
    for f in enumerate_maps(x, y):
        res.instances += 1
        verdict = is_proper(f, b.max_z)
        single = is_closed_map(product_with_identity(one_point(), f)) == is_closed_map(f)
        if not verdict.agree or not single:
            res.fail(job, "properness criteria disagree", X=space_to_json(x),
                     Y=space_to_json(y), map=list(f.graph), criteria=list(verdict.criteria))
    return res


@register(
    "closed-map-reform",
    "g is closed iff for every open U the set {b | g^-1(b) inside U} is open; checked for "
    "every map X -> Y and every id_Z x f.",
    axes="xyz", jobs=space_jobs("x", "y"), defaults=(3, 3, 3), limits=(3, 3, 3),
)
def _closed_reform(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    y = spaces(b.max_y)[job[1]]
    res = JobResult()
    for f in enumerate_maps(x, y):
        for z in (None, *spaces(b.max_z)):
            g = f if z is None else product_with_identity(z, f)
            res.instances += 1
            if closed_by_images(g) != closed_by_fibers(g):
                res.fail(job, "closed-map methods disagree", X=space_to_json(x),
                         Y=space_to_json(y), map=list(f.graph),
                         Z=None if z is None else space_to_json(z))
    return res


@register(
    "compact-hausdorff-proper",
    "Every continuous map from a compact space to a Hausdorff space is proper.",
    axes="xyz", jobs=space_jobs("x", "y"), defaults=(3, 3, 3), limits=(3, 3, 3),
)
def _ch_proper(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    y = spaces(b.max_y)[job[1]]
    res = JobResult()
    if not (is_compact_subset(x, x.full) and diagonal_class(y).hausdorff):
        return res
    for graph in continuous_maps(x, y):
        res.instances += 1
        verdict = is_proper(make_map(x, y, graph), b.max_z)
        if not all(verdict.criteria):
            res.fail(job, "map is not proper", X=space_to_json(x), Y=space_to_json(y),
                     map=list(graph), criteria=list(verdict.criteria))
    return res
