"""JSON encodings of spaces, maps, covers, families, posets and function spaces.

Point sets are written as ascending lists of point indices; families of
point sets are sorted by bit-pattern value.
"""

from __future__ import annotations

import json
from typing import Any

from .compactness import DirectedCover, IndexedFamily, WitnessSpace
from .domains import FinitePoset
from .function_spaces import FunctionSpace
from .maps import ContinuousMap, make_map
from .space import FiniteSpace, make_space, mask_of, points

# Spaces with more open sets than this are written by neighbourhoods.
OPENS_JSON_LIMIT = 4096


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _mask(value: Any, what: str) -> int:
    if not isinstance(value, list) or not all(isinstance(p, int) and not isinstance(p, bool) for p in value):
        raise ValueError(f"{what} must be a list of point indices")
    return mask_of(value)


def space_to_json(space: FiniteSpace) -> dict:
    out: dict[str, Any] = {"points": space.n}
    if space.n <= 12 or len(space.opens) <= OPENS_JSON_LIMIT:
        out["opens"] = [points(u) for u in space.opens]
    else:
        out["nbhds"] = [points(u) for u in space.nbhds]
    if space.labels is not None:
        out["labels"] = list(space.labels)
    return out


def space_from_json(data: Any) -> FiniteSpace:
    if not isinstance(data, dict) or "points" not in data:
        raise ValueError("space JSON needs a 'points' field")
    n = data["points"]
    if not isinstance(n, int) or n < 0:
        raise ValueError("'points' must be a non-negative integer")
    labels = data.get("labels")
    if labels is not None:
        labels = [str(s) for s in labels]
    if "opens" in data:
        return make_space(n, [_mask(u, "open set") for u in data["opens"]], labels)
    if "nbhds" in data:
        return FiniteSpace(
            n, tuple(_mask(u, "neighbourhood") for u in data["nbhds"]),
            tuple(labels) if labels is not None else None,
        )
    raise ValueError("space JSON needs 'opens' or 'nbhds'")


def map_to_json(f: ContinuousMap) -> dict:
    return {"dom": space_to_json(f.dom), "cod": space_to_json(f.cod), "graph": list(f.graph)}


def map_from_json(data: dict) -> ContinuousMap:
    return make_map(space_from_json(data["dom"]), space_from_json(data["cod"]), data["graph"])


def cover_to_json(cover: DirectedCover) -> dict:
    return {
        "space": space_to_json(cover.space),
        "members": [points(m) for m in cover.members],
        "target": points(cover.target),
    }


def cover_from_json(data: dict, space: FiniteSpace | None = None) -> DirectedCover:
    if space is None:
        space = space_from_json(data["space"])
    members = tuple(_mask(m, "cover member") for m in data["members"])
    target = _mask(data.get("target", []), "target")
    return DirectedCover(space, members, target)


def family_to_json(family: IndexedFamily) -> dict:
    return {
        "index": space_to_json(family.index),
        "target": space_to_json(family.target),
        "assign": [points(a) for a in family.assign],
        "role": family.role,
    }


def family_from_json(data: dict) -> IndexedFamily:
    return IndexedFamily(
        space_from_json(data["index"]),
        space_from_json(data["target"]),
        tuple(_mask(a, "family member") for a in data["assign"]),
        data.get("role", "opens"),
    )


def poset_to_json(p: FinitePoset) -> dict:
    return {"elements": p.n, "leq": p.matrix()}


def poset_from_json(data: dict) -> FinitePoset:
    leq = data["leq"]
    if len(leq) != data["elements"]:
        raise ValueError("'leq' must have one row per element")
    return FinitePoset.from_matrix([[bool(v) for v in row] for row in leq])


def function_space_to_json(fs: FunctionSpace) -> dict:
    return {
        "dom": space_to_json(fs.dom),
        "cod": space_to_json(fs.cod),
        "maps": [list(g) for g in fs.maps],
        "space": space_to_json(fs.space),
    }


def witness_to_json(space: FiniteSpace, cover: DirectedCover, ws: WitnessSpace) -> dict:
    nx = space.n
    return {
        "cover": cover_to_json(cover),
        "space": space_to_json(ws.space),
        "points_as_opens": [points(u) for u in ws.points_as_opens],
        "membership": [[p // nx, p % nx] for p in points(ws.membership)],
    }


def load(path: str) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
