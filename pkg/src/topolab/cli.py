"""Command-line interface: ``topolab <command> ...``.

Exit codes: 0 pass or valid, 1 counterexample found, 2 usage error,
3 invalid input.  Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import formats
from .compactness import (
    DirectedCover,
    cover_member_from_witness,
    interior_containment,
    way_below,
    witness_space,
)
from .errors import BoundExceeded, NotATopology, TopolabError, UnknownTheorem
from .function_spaces import exponential
from .harness import get, reports_json, theorem_ids, verify, verify_all
from .space import (
    count_topologies,
    diagonal_class,
    enumerate_topologies,
    mask_of,
    min_open_nbhd,
    points,
    product,
    to_dot,
)

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_INVALID = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_json(path: str):
    try:
        return formats.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_space(path: str):
    return formats.space_from_json(_read_json(path))


def _point_set(text: str, n: int) -> int:
    text = text.strip()
    if not text:
        return 0
    try:
        pts = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated point indices, got {text!r}") from None
    mask = mask_of(pts)
    if mask >> n:
        raise UsageError(f"point index out of range for a {n}-point space: {text}")
    return mask


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_check(args) -> int:
    space = _load_space(args.space)
    if args.dot:
        sys.stdout.write(to_dot(space))
        return EXIT_OK
    dc = diagonal_class(space)
    print(formats.dumps({
        "valid": True,
        "points": space.n,
        "opens": len(space.opens),
        "hausdorff": dc.hausdorff,
        "discrete": dc.discrete,
    }), end="")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.count:
        print(count_topologies(args.points))
        return EXIT_OK
    found = enumerate_topologies(args.points, args.start)
    if args.dot:
        sys.stdout.write("".join(to_dot(s, f"space{args.start + i}") for i, s in enumerate(found)))
    else:
        sys.stdout.write(formats.dumps([formats.space_to_json(s) for s in found]))
    return EXIT_OK


def cmd_product(args) -> int:
    xy = product(_load_space(args.a), _load_space(args.b))
    _emit(to_dot(xy) if args.dot else formats.dumps(formats.space_to_json(xy)), args.output)
    return EXIT_OK


def cmd_exponential(args) -> int:
    fs = exponential(_load_space(args.x), _load_space(args.y))
    text = to_dot(fs.space) if args.dot else formats.dumps(formats.function_space_to_json(fs))
    _emit(text, args.output)
    return EXIT_OK


def cmd_waybelow(args) -> int:
    space = _load_space(args.space)
    s = _point_set(args.s, space.n)
    t = _point_set(args.t, space.n)
    print(formats.dumps({
        "S": points(s),
        "T": points(t),
        "way_below": way_below(space, s, t),
        "min_open_nbhd_T": points(min_open_nbhd(space, t)),
        "interior_containment": interior_containment(space, s, t),
    }), end="")
    return EXIT_OK


def cmd_witness(args) -> int:
    space = _load_space(args.space)
    if os.path.exists(args.cover):
        data = _read_json(args.cover)
    else:
        try:
            data = json.loads(args.cover)
        except json.JSONDecodeError:
            raise UsageError("--cover must be a cover JSON file or an inline JSON list") from None
    if isinstance(data, list):
        data = {"members": data}
    cover = formats.cover_from_json(data, space)
    if "target" not in data:
        cover = DirectedCover(space, cover.members, cover.union)
    ws = witness_space(space, cover)
    out = formats.witness_to_json(space, cover, ws)
    out["member_containing_target"] = points(cover_member_from_witness(space, cover, ws, cover.target))
    if args.dot:
        sys.stdout.write(to_dot(ws.space, "witness"))
    else:
        sys.stdout.write(formats.dumps(out))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.list:
        for tid in theorem_ids():
            print(f"{tid}: {get(tid).claim}")
        return EXIT_OK
    if args.all:
        reports = verify_all(args.max_x, args.max_y, args.max_z, workers=args.workers)
    elif args.theorem:
        reports = [verify(args.theorem, args.max_x, args.max_y, args.max_z, workers=args.workers)]
    else:
        raise UsageError("verify needs --theorem ID, --all or --list")
    if args.json:
        sys.stdout.write(reports_json(reports, timing=args.timing))
    else:
        for r in reports:
            line = r.summary()
            if args.timing:
                line += f" [{r.wall_time:.2f}s]"
            print(line)
            for cx in r.counterexamples[:3]:
                print(f"  {cx['reason']}: {json.dumps(cx['instance'], sort_keys=True)}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topolab",
        description="Finite topological spaces: constructions, compactness and theorem sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a space JSON file")
    p.add_argument("space")
    p.add_argument("--dot", action="store_true", help="print the Hasse diagram instead")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="list or count topologies on n labelled points")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--start", type=int, default=0, help="skip this many spaces")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("product", help="product of two spaces")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--output")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("exponential", help="function space Y^X")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("-o", "--output")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_exponential)

    p = sub.add_parser("waybelow", help="decide whether S is way below T")
    p.add_argument("space")
    p.add_argument("--s", required=True, help="comma-separated point indices")
    p.add_argument("--t", required=True, help="comma-separated point indices")
    p.set_defaults(func=cmd_waybelow)

    p = sub.add_parser("witness", help="witness space of a directed cover")
    p.add_argument("space")
    p.add_argument("--cover", required=True, help="cover JSON file or inline list of members")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="sweep a theorem over all small spaces")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--theorem")
    which.add_argument("--all", action="store_true")
    which.add_argument("--list", action="store_true")
    p.add_argument("--max-x", type=int)
    p.add_argument("--max-y", type=int)
    p.add_argument("--max-z", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall times")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UnknownTheorem, BoundExceeded) as exc:
        print(f"topolab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotATopology as exc:
        msg = f"topolab: invalid space: {exc.reason}"
        if exc.witness is not None:
            msg += f" (witness pair: {points(exc.witness[0])}, {points(exc.witness[1])})"
        print(msg, file=sys.stderr)
        return EXIT_INVALID
    except (TopolabError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"topolab: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
