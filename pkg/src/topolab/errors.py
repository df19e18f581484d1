"""Exception hierarchy shared by every topolab module."""

from __future__ import annotations


class TopolabError(Exception):
    """Base class for all errors raised by topolab."""


class PointOutOfRange(TopolabError):
    def __init__(self, mask: int, n: int):
        self.mask = mask
        self.n = n
        super().__init__(f"point set {bin(mask)} has points outside 0..{n - 1}")


class NotATopology(TopolabError):
    """A family of sets failed one of the topology axioms.

    ``witness`` is the offending pair of members (for a missing union or
    intersection) or ``None`` when the empty or full set is absent.
    """

    def __init__(self, reason: str, witness: tuple[int, int] | None = None):
        self.reason = reason
        self.witness = witness
        msg = reason if witness is None else f"{reason}: witness pair {witness}"
        super().__init__(msg)


class CarrierOverflow(TopolabError):
    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"carrier of {size} points exceeds the limit of {limit}")


class BoundExceeded(TopolabError):
    def __init__(self, what: str, value: int, limit: int):
        self.what = what
        self.value = value
        self.limit = limit
        super().__init__(f"{what}={value} exceeds the configured bound {limit}")


class NotContinuous(TopolabError):
    """Preimage of the open set ``witness`` (in the codomain) is not open."""

    def __init__(self, witness: int):
        self.witness = witness
        super().__init__(f"preimage of open set {sorted_points(witness)} is not open")


class NotOpen(TopolabError):
    def __init__(self, mask: int):
        self.mask = mask
        super().__init__(f"set {sorted_points(mask)} is not open")


class RoleViolation(TopolabError):
    def __init__(self, index_point: int, mask: int):
        self.index_point = index_point
        self.mask = mask
        super().__init__(
            f"family member at index {index_point} ({sorted_points(mask)}) is not open"
        )


class NotDirected(TopolabError):
    """``pair`` lacks an upper bound among the members; ``None`` for an empty family."""

    def __init__(self, pair: tuple[int, int] | None):
        self.pair = pair
        if pair is None:
            super().__init__("an empty family is not directed")
        else:
            a, b = (sorted_points(m) for m in pair)
            super().__init__(f"no member contains the union of {a} and {b}")


class NotMonotone(TopolabError):
    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"order not preserved on {pair[0]} <= {pair[1]}")


class NotAPoset(TopolabError):
    pass


class InvariantViolation(TopolabError):
    """Two routes that must agree disagreed; always a bug or a false claim."""


class UnknownTheorem(TopolabError):
    def __init__(self, theorem_id: str):
        self.theorem_id = theorem_id
        super().__init__(f"unknown theorem id {theorem_id!r} (see 'verify --list')")


def sorted_points(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out
