"""Vectorized tables for the heaviest sweeps.

Each routine computes, for a fixed pair of spaces, a table that a direct
loop would rebuild for every instance.  The reductions are exact and each
one is compared against the direct route in the test suite.  Carriers are
packed into ``int64`` words, so ``|Z| * |X|`` must stay below 63.
"""

from __future__ import annotations

import functools

import numpy as np

from ..space import FiniteSpace, product

WORD_BITS = 62


def _check_width(bits: int) -> None:
    if bits > WORD_BITS:
        raise ValueError(f"{bits}-point carrier does not fit a machine word")


def interior_table(space: FiniteSpace) -> np.ndarray:
    """``t[s]`` is the interior of subset ``s``, for every subset."""
    _check_width(space.n)
    s = np.arange(1 << space.n, dtype=np.int64)
    out = np.zeros_like(s)
    for x, nb in enumerate(space.nbhds):
        out |= ((s & nb) == nb).astype(np.int64) << x
    return out


def quantified_rows(sets: np.ndarray, nz: int, nx: int) -> np.ndarray:
    """``q[i, a]`` is ``{p | {p} x a inside sets[i]}`` for every subset ``a`` of ``x``."""
    _check_width(nz * nx)
    a = np.arange(1 << nx, dtype=np.int64)
    full = (1 << nx) - 1
    out = np.zeros((len(sets), 1 << nx), dtype=np.int64)
    for p in range(nz):
        row = (sets >> (p * nx)) & full
        out |= ((row[:, None] & a[None, :]) == a[None, :]).astype(np.int64) << p
    return out


@functools.lru_cache(maxsize=4096)
def open_quantified(z: FiniteSpace, x: FiniteSpace) -> tuple[np.ndarray, np.ndarray]:
    """Opens ``W`` of ``z x x`` and their quantified rows ``q[W, a]``."""
    ws = np.array(product(z, x).opens, dtype=np.int64)
    return ws, quantified_rows(ws, z.n, x.n)


@functools.lru_cache(maxsize=4096)
def family_failures(z: FiniteSpace, x: FiniteSpace) -> np.ndarray:
    """``t[a, b]``: first open ``W`` of ``z x x`` (by position) with
    ``q(W, a)`` not inside the interior of ``q(W, b)``, or -1.

    A compact family ``y -> Q_y`` gives an open set
    ``{(p, y) | {p} x Q_y inside W}`` in ``z x y`` iff the row at ``y`` sits
    inside the interior of the row at every ``y'`` near ``y``, so a family
    fails for ``z`` exactly when ``t[Q_y, Q_y']`` is set for such a pair.
    """
    _, q = open_quantified(z, x)
    inner = interior_table(z)[q]
    bad = (q[:, :, None] & ~inner[:, None, :]) != 0
    first = bad.argmax(axis=0)
    return np.where(bad.any(axis=0), first, -1)


@functools.lru_cache(maxsize=4096)
def way_below_tables(z: FiniteSpace, x: FiniteSpace):
    """Per-``(s, t)`` verdicts of the three universal conditions over ``z``.

    Returns boolean arrays ``c2, c3, c4`` indexed ``[s, t]``:

    * ``c2``: for every open ``W``, ``q(W, t)`` lies in the interior of ``q(W, s)``.
    * ``c3``: for every open ``W`` and ``p`` in ``q(W, t)``, some open
      neighbourhood ``V`` of ``p`` has ``V x s`` inside ``W``.
    * ``c4``: for every subset ``N``, ``q(int N, t)`` lies in the interior
      of ``q(N, s)``.  Shrinking ``M`` only shrinks ``q(M, t)``, so
      ``M = int N`` is the hardest case of ``M`` inside ``int N``.
    """
    nz, nx = z.n, x.n
    size = 1 << nx
    inner = interior_table(z)
    _, q = open_quantified(z, x)
    c2 = ~((q[:, None, :] & ~inner[q][:, :, None]) != 0).any(axis=0)

    # nb_inside[p, a]: some open V containing p lies inside a
    a = np.arange(1 << nz, dtype=np.int64)
    nb_inside = np.zeros((nz, 1 << nz), dtype=bool)
    for v in z.opens:
        inside = (a & v) == v
        for p in range(nz):
            if v >> p & 1:
                nb_inside[p] |= inside
    c3 = np.ones((size, size), dtype=bool)
    for p in range(nz):
        holds = nb_inside[p][q]  # [W, s]
        has_p = ((q >> p) & 1).astype(bool)  # [W, t]
        c3 &= ~(has_p[:, None, :] & ~holds[:, :, None]).any(axis=0)

    zx = product(z, x)
    every = np.arange(1 << zx.n, dtype=np.int64)
    qn = quantified_rows(every, nz, nx)
    qm = qn[interior_table(zx)]
    c4 = ~((qm[:, None, :] & ~inner[qn][:, :, None]) != 0).any(axis=0)
    return c2, c3, c4


def transpose_verdicts(z: FiniteSpace, x: FiniteSpace, y: FiniteSpace,
                       maps: tuple[tuple[int, ...], ...], fs_space: FiniteSpace):
    """Continuity of every ``h: z x x -> y`` whose slices are continuous.

    Such an ``h`` is a tuple ``(t_p)`` of points of the exponential with
    ``h(p, a) = maps[t_p][a]``.  Returns ``(h_ok, t_ok)``: continuity of
    ``h`` and of its transpose ``p -> t_p``, one entry per tuple in
    lexicographic order.  ``h`` is continuous iff ``maps[t_p]`` sends
    each neighbourhood pair of ``x`` into ``y``'s specialization order
    towards ``maps[t_p']`` for every ``p'`` near ``p``.
    """
    k = len(maps)
    arr = np.array(maps, dtype=np.int64).reshape(k, x.n)
    near_y = np.array([[y.nbhds[u] >> v & 1 for v in range(y.n)] for u in range(y.n)], dtype=bool)
    compat = np.ones((k, k), dtype=bool)
    for a in range(x.n):
        for b in range(x.n):
            if x.nbhds[a] >> b & 1:
                compat &= near_y[arr[:, a][:, None], arr[:, b][None, :]]
    near_fs = np.array(
        [[fs_space.nbhds[i] >> j & 1 for j in range(k)] for i in range(k)], dtype=bool
    )
    idx = np.indices((k,) * z.n, dtype=np.int64).reshape(z.n, -1)
    h_ok = np.ones(idx.shape[1], dtype=bool)
    t_ok = np.ones(idx.shape[1], dtype=bool)
    for p in range(z.n):
        for r in range(z.n):
            if z.nbhds[p] >> r & 1:
                h_ok &= compat[idx[p], idx[r]]
                t_ok &= near_fs[idx[p], idx[r]]
    return h_ok, t_ok
