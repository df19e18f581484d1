"""Function spaces, the opens-space, product criteria and Scott topologies."""

from __future__ import annotations

import functools
import itertools

from ..compactness import is_compact_subset, quantified_open
from ..domains import (
    check_prod_charac,
    check_sigma_products,
    inclusion_order,
    is_monotone,
    posets_up_to,
    row_sections,
    scott_topology,
)
from ..formats import poset_to_json, space_to_json
from ..function_spaces import (
    evaluation_graph,
    exponential,
    sierpinski_exponential_as_opens,
    transpose,
    universal_quantifier_is_continuous,
)
from ..maps import is_closed_map, is_continuous, projections
from ..space import FiniteSpace, points, product
from .fast import transpose_verdicts
from .registry import Bounds, JobResult, register, space_jobs, spaces


PRODUCT_NOTE = (
    "Products in the compactly generated sense are identified with topological products; "
    "every finite space is exponentiable, so the two agree on finite spaces."
)


@functools.lru_cache(maxsize=None)
def posets(bound: int):
    return tuple(posets_up_to(bound))


def poset_jobs(b: Bounds) -> list[tuple]:
    return list(itertools.product(range(len(posets(b.max_x))), range(len(posets(b.max_y)))))


def opens_space_transpose_ok(y: FiniteSpace, x: FiniteSpace, w: int) -> bool:
    """Rows of ``w`` are open and ``y -> row`` is continuous into the opens-space."""
    os_ = sierpinski_exponential_as_opens(x)
    where = {u: i for i, u in enumerate(os_.opens)}
    rows = row_sections(w, y.n, x.n)
    if any(r not in where for r in rows):
        return False
    return is_continuous(y, os_.space, [where[r] for r in rows])


@register(
    "product-charac",
    "W inside Y x X is open iff its rows are open and, for every Scott open family of opens "
    "of X, the rows in it form an open set of Y, iff the same holds with the roles of X and "
    "Y swapped, iff the rows are open and y -> row is continuous into the opens-space.",
    axes="xy", jobs=space_jobs("y", "x"), defaults=(3, 3), limits=(3, 3),
    notes=(PRODUCT_NOTE,),
)
def _prod_charac(job, b: Bounds) -> JobResult:
    y = spaces(b.max_y)[job[0]]
    x = spaces(b.max_x)[job[1]]
    res = JobResult()
    for w in range(1 << (y.n * x.n)):
        res.instances += 1
        verdict = check_prod_charac(y, x, w)
        t = opens_space_transpose_ok(y, x, w)
        if len({*verdict, t}) != 1:
            res.fail(job, "conditions disagree", Y=space_to_json(y), X=space_to_json(x),
                     W=points(w), conditions=[*verdict, t])
    return res


def c_compact(x: FiniteSpace, q: int) -> bool:
    """``{U | q inside U}`` is open in the opens-space of ``x``."""
    os_ = sierpinski_exponential_as_opens(x)
    return os_.space.is_open(sum(1 << i for i, u in enumerate(os_.opens) if q & ~u == 0))


@register(
    "c-compact-equiv",
    "{U | Q inside U} is open in the opens-space iff quantifying any open W of Y x X over Q "
    "gives an open set of Y iff the quantifier A_Q is continuous; every compact Q satisfies "
    "them.",
    axes="xy", jobs=space_jobs("x"), defaults=(3, 3), limits=(3, 3),
    notes=(PRODUCT_NOTE,),
)
def _c_compact(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    res = JobResult()
    for q in range(1 << x.n):
        res.instances += 1
        c1 = c_compact(x, q)
        c2 = all(
            y.is_open(quantified_open(y, x, w, q))
            for y in spaces(b.max_y) for w in product(y, x).opens
        )
        c3 = universal_quantifier_is_continuous(x, q)
        compact = is_compact_subset(x, q)
        if not c1 == c2 == c3 or (compact and not c1):
            res.fail(job, "conditions disagree", X=space_to_json(x), Q=points(q),
                     conditions=[c1, c2, c3], compact=compact)
    return res


@register(
    "c-compact-projection",
    "X is compact in the opens-space sense iff every projection Y x X -> Y is closed.",
    axes="xy", jobs=space_jobs("x"), defaults=(3, 3), limits=(4, 3),
    notes=(PRODUCT_NOTE,),
)
def _c_projection(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    res = JobResult(instances=1)
    c = c_compact(x, x.full)
    closed = all(is_closed_map(projections(y, x)[1]) for y in spaces(b.max_y))
    if c != closed:
        res.fail(job, "compactness and closed projections disagree", X=space_to_json(x),
                 c_compact=c, projections_closed=closed)
    return res


@register(
    "c-compact-coincide",
    "A subset is compact iff it is compact in the opens-space sense.",
    axes="x", jobs=space_jobs("x"), defaults=(4,), limits=(4,),
    notes=(PRODUCT_NOTE,),
)
def _c_coincide(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    res = JobResult()
    for q in range(1 << x.n):
        res.instances += 1
        if is_compact_subset(x, q) != c_compact(x, q):
            res.fail(job, "notions differ", X=space_to_json(x), Q=points(q))
    return res


@register(
    "opens-space-scott",
    "The topology on the opens of X transported from S^X is the Scott topology of the "
    "inclusion order, and membership is open in the opens-space times X.",
    axes="x", jobs=space_jobs("x"), defaults=(4,), limits=(4,),
    notes=(PRODUCT_NOTE,),
)
def _opens_scott(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    res = JobResult(instances=1)
    os_ = sierpinski_exponential_as_opens(x)
    scott = scott_topology(inclusion_order(os_.opens))
    nx = x.n
    membership = sum(u << (i * nx) for i, u in enumerate(os_.opens))
    member_open = product(os_.space, x).is_open(membership)
    if os_.space != scott or not member_open:
        res.fail(job, "opens-space differs from the Scott topology", X=space_to_json(x),
                 membership_open=member_open)
    return res


@register(
    "sigma-products",
    "The Scott topology of a product of posets is the product of their Scott topologies, "
    "and monotone maps are exactly the Scott-continuous ones.",
    axes="xy", jobs=poset_jobs, defaults=(3, 3), limits=(4, 3),
    notes=(PRODUCT_NOTE,),
)
def _sigma(job, b: Bounds) -> JobResult:
    d = posets(b.max_x)[job[0]]
    e = posets(b.max_y)[job[1]]
    res = JobResult(instances=1)
    if not check_sigma_products(d, e):
        res.fail(job, "Scott topology of the product differs", D=poset_to_json(d),
                 E=poset_to_json(e))
    sd, se = scott_topology(d), scott_topology(e)
    for graph in itertools.product(range(e.n), repeat=d.n):
        res.instances += 1
        if is_monotone(d, e, graph) != is_continuous(sd, se, graph):
            res.fail(job, "monotonicity and continuity differ", D=poset_to_json(d),
                     E=poset_to_json(e), map=list(graph))
    return res


@register(
    "exponential-universal",
    "Evaluation Y^X x X -> Y is continuous, and h: Z x X -> Y is continuous iff its "
    "transpose Z -> Y^X is.",
    axes="xyz", jobs=space_jobs("x", "y"), defaults=(3, 3, 3), limits=(3, 3, 3),
    notes=(PRODUCT_NOTE,),
)
def _exp_universal(job, b: Bounds) -> JobResult:
    x = spaces(b.max_x)[job[0]]
    y = spaces(b.max_y)[job[1]]
    res = JobResult(instances=1)
    fs = exponential(x, y)
    if not is_continuous(product(fs.space, x), y, evaluation_graph(fs)):
        res.fail(job, "evaluation is not continuous", X=space_to_json(x), Y=space_to_json(y))
    for z in spaces(b.max_z):
        h_ok, t_ok = transpose_verdicts(z, x, y, fs.maps, fs.space)
        res.instances += int(h_ok.sum())
        bad = (h_ok != t_ok).nonzero()[0]
        if len(bad):
            k = len(fs.maps)
            tup = [int(bad[0]) // k ** (z.n - 1 - p) % k for p in range(z.n)]
            graph = [g for i in tup for g in fs.maps[i]]
            res.fail(job, "map and transpose disagree on continuity", X=space_to_json(x),
                     Y=space_to_json(y), Z=space_to_json(z), map=graph,
                     transpose=list(transpose(fs, z, graph)))
    return res
