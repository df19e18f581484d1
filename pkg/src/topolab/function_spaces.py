"""Exponentials of finite spaces and the Sierpinski object.

The exponential ``Y^X`` has the continuous maps ``X -> Y`` as points, listed
in lexicographic order of their graphs.  Its topology is generated by the
sets ``N(Q, V) = {f | f(Q) inside V}`` for every ``Q`` (every subset of a
finite space is compact) and every open ``V`` of ``Y``.  Evaluation and
transposition are exposed so the two universal properties can be checked.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import InvariantViolation, NotContinuous, NotOpen
from .maps import ContinuousMap, continuous_maps, is_continuous, make_map
from .space import (
    BOT,
    TOP,
    FiniteSpace,
    PointSet,
    check_carrier,
    check_subset,
    generate_topology,
    product,
    sierpinski,
)

__all__ = [
    "FunctionSpace",
    "OpensSpace",
    "evaluation_graph",
    "exponential",
    "sierpinski",
    "sierpinski_exponential_as_opens",
    "subbasic_open",
    "transpose",
    "universal_quantifier",
    "universal_quantifier_graph",
]


@dataclass(frozen=True)
class FunctionSpace:
    dom: FiniteSpace
    cod: FiniteSpace
    maps: tuple[tuple[int, ...], ...]
    space: FiniteSpace

    def index(self, graph: Sequence[int]) -> int:
        return self._where[tuple(graph)]

    @functools.cached_property
    def _where(self) -> dict[tuple[int, ...], int]:
        return {g: i for i, g in enumerate(self.maps)}


def _n_set(maps: Sequence[Sequence[int]], q: PointSet, v: PointSet, nx: int) -> PointSet:
    pts = [x for x in range(nx) if q >> x & 1]
    out = 0
    for i, g in enumerate(maps):
        if all(v >> g[x] & 1 for x in pts):
            out |= 1 << i
    return out


@functools.lru_cache(maxsize=4096)
def exponential(x: FiniteSpace, y: FiniteSpace) -> FunctionSpace:
    maps = continuous_maps(x, y)
    check_carrier(len(maps))
    subbasis = [
        _n_set(maps, q, v, x.n) for q in range(1 << x.n) for v in y.opens
    ]
    return FunctionSpace(x, y, maps, generate_topology(len(maps), subbasis))


def subbasic_open(fs: FunctionSpace, q: PointSet, v: PointSet) -> PointSet:
    """``N(q, v)``: the maps sending all of ``q`` into the open set ``v``."""
    check_subset(q, fs.dom.n)
    check_subset(v, fs.cod.n)
    if not fs.cod.is_open(v):
        raise NotOpen(v)
    return _n_set(fs.maps, q, v, fs.dom.n)


def evaluation_graph(fs: FunctionSpace) -> tuple[int, ...]:
    """Graph of ``(f, x) -> f(x)`` on ``space x dom``."""
    return tuple(g[x] for g in fs.maps for x in range(fs.dom.n))


def evaluation(fs: FunctionSpace) -> ContinuousMap:
    return make_map(product(fs.space, fs.dom), fs.cod, evaluation_graph(fs))


def transpose(fs: FunctionSpace, z: FiniteSpace, h_graph: Sequence[int]) -> tuple[int, ...]:
    """For ``h`` on ``z x dom``, the graph of ``p -> h(p, .)`` into ``fs``.

    Raises ``KeyError`` if some slice ``h(p, .)`` is not continuous.
    """
    nx = fs.dom.n
    return tuple(fs.index(h_graph[p * nx : (p + 1) * nx]) for p in range(z.n))


class OpensSpace(NamedTuple):
    """Open sets of ``dom`` with the topology transported from ``S^dom``.

    ``opens[i]`` is the open set at point ``i`` and ``chi[i]`` the index of
    its characteristic map in the exponential.
    """

    space: FiniteSpace
    opens: tuple[int, ...]
    chi: tuple[int, ...]


def characteristic_graph(x: FiniteSpace, u: PointSet) -> tuple[int, ...]:
    return tuple(TOP if u >> p & 1 else BOT for p in range(x.n))


@functools.lru_cache(maxsize=4096)
def sierpinski_exponential_as_opens(x: FiniteSpace) -> OpensSpace:
    fs = exponential(x, sierpinski())
    opens = x.opens
    chi = tuple(fs.index(characteristic_graph(x, u)) for u in opens)
    if sorted(chi) != list(range(len(fs.maps))):
        raise InvariantViolation("characteristic maps do not biject with the exponential")
    where = {c: i for i, c in enumerate(chi)}
    nbhds = []
    for c in chi:
        nb = 0
        m = fs.space.nbhds[c]
        for j in range(len(chi)):
            if m >> j & 1:
                nb |= 1 << where[j]
        nbhds.append(nb)
    return OpensSpace(FiniteSpace(len(opens), tuple(nbhds)), opens, chi)


def universal_quantifier_graph(x: FiniteSpace, q: PointSet) -> tuple[int, ...]:
    """``A_q(p)`` is top iff ``p`` is top on every point of ``q``."""
    check_subset(q, x.n)
    fs = exponential(x, sierpinski())
    pts = [p for p in range(x.n) if q >> p & 1]
    return tuple(TOP if all(g[p] == TOP for p in pts) else BOT for g in fs.maps)


def universal_quantifier_is_continuous(x: FiniteSpace, q: PointSet) -> bool:
    fs = exponential(x, sierpinski())
    return is_continuous(fs.space, fs.cod, universal_quantifier_graph(x, q))


def universal_quantifier(x: FiniteSpace, q: PointSet) -> ContinuousMap:
    fs = exponential(x, sierpinski())
    try:
        return make_map(fs.space, fs.cod, universal_quantifier_graph(x, q))
    except NotContinuous as exc:
        raise InvariantViolation(f"universal quantifier over a finite set is discontinuous: {exc}")
