"""The seven permutation move operators and their enumeration.

Operators act on positions in the sequence, not on job identities:

* APEX        -- exchange of two adjacent positions.
* BR4/BR5/BR6 -- reversal of a block of 4/5/6 consecutive positions.
* EX\\APEX    -- exchange of two non-adjacent positions.
* FSH\\APEX   -- remove a job and reinsert it at least two positions later
                 (jobs in between shift one position forward).
* BSH\\APEX   -- remove a job and reinsert it at least two positions earlier
                 (jobs in between shift one position back).

With nested mode on, the adjacent exclusion of EX/FSH/BSH is abolished and
those three operators contain APEX as a special case.
"""

from enum import Enum
from functools import lru_cache
from typing import NamedTuple

from .core import Sequence


class Neighborhood(Enum):
    """The seven operators, in canonical order."""

    APEX = "apex"
    BR4 = "br4"
    BR5 = "br5"
    BR6 = "br6"
    EX_NO_APEX = "ex"
    FSH_NO_APEX = "fsh"
    BSH_NO_APEX = "bsh"


CANONICAL_ORDER: tuple[Neighborhood, ...] = tuple(Neighborhood)

_BLOCK_LENGTH = {Neighborhood.BR4: 4, Neighborhood.BR5: 5, Neighborhood.BR6: 6}


class Move(NamedTuple):
    """One move: operator kind plus the position indices that determine it.

    `j` is None for block reversals, which are fully determined by `i`;
    APEX stores j = i + 1.
    """

    kind: Neighborhood
    i: int
    j: int | None


class SizeCounts(NamedTuple):
    """Distinct neighbor count and the ordered-pair count.

    The two differ only for EX, where every exchange can be written as the
    ordered pairs (i, j) and (j, i); enumeration and descent always use
    distinct neighbors.
    """

    distinct: int
    ordered: int


class InvalidMoveError(ValueError):
    """A move whose positions are out of range for the given sequence."""


@lru_cache(maxsize=None)
def enumerate_moves(
    kind: Neighborhood, n: int, nested: bool = False
) -> tuple[Move, ...]:
    """Every distinct move of `kind` on a sequence of length n, exactly once,
    in ascending (i, j) scan order.  Empty when n is below the operator's
    minimum size."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind is Neighborhood.APEX:
        return tuple(Move(kind, i, i + 1) for i in range(n - 1))
    if kind in _BLOCK_LENGTH:
        k = _BLOCK_LENGTH[kind]
        return tuple(Move(kind, i, None) for i in range(n - k + 1))
    gap = 1 if nested else 2
    if kind in (Neighborhood.EX_NO_APEX, Neighborhood.FSH_NO_APEX):
        return tuple(
            Move(kind, i, j) for i in range(n) for j in range(i + gap, n)
        )
    if kind is Neighborhood.BSH_NO_APEX:
        return tuple(
            Move(kind, i, j) for i in range(n) for j in range(i - gap + 1)
        )
    raise ValueError(f"unknown neighborhood kind: {kind!r}")


def neighborhood_size(kind: Neighborhood, n: int, nested: bool = False) -> int:
    """Closed-form distinct neighbor count; equals len(enumerate_moves(...))."""
    return neighborhood_size_counts(kind, n, nested).distinct


def neighborhood_size_counts(
    kind: Neighborhood, n: int, nested: bool = False
) -> SizeCounts:
    """Closed-form sizes of `kind` for sequences of length n, clamped at 0."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind is Neighborhood.APEX:
        size = max(0, n - 1)
        return SizeCounts(size, size)
    if kind in _BLOCK_LENGTH:
        size = max(0, n - _BLOCK_LENGTH[kind] + 1)
        return SizeCounts(size, size)
    if kind is Neighborhood.EX_NO_APEX:
        if nested:
            return SizeCounts(n * (n - 1) // 2, n * (n - 1))
        return SizeCounts((n - 1) * (n - 2) // 2, n * (n - 3) + 2 if n >= 2 else 0)
    # FSH/BSH: a shift (i, j) is already directed, so both counts coincide.
    if nested:
        size = n * (n - 1) // 2
    else:
        size = (n - 1) * (n - 2) // 2
    return SizeCounts(size, size)


def apply_move(order: Sequence, move: Move) -> Sequence:
    """Apply `move` to `order` and return the new sequence.

    Purely positional: the input is left untouched and need not be a
    0-based permutation.
    """
    n = len(order)
    kind, i, j = move
    if kind is Neighborhood.APEX:
        if not 0 <= i <= n - 2:
            raise InvalidMoveError(f"APEX position {i} out of range for n={n}")
        lst = list(order)
        lst[i], lst[i + 1] = lst[i + 1], lst[i]
        return tuple(lst)
    if kind in _BLOCK_LENGTH:
        k = _BLOCK_LENGTH[kind]
        if not (0 <= i and i + k <= n):
            raise InvalidMoveError(
                f"{kind.name} block at {i} out of range for n={n}"
            )
        return order[:i] + tuple(reversed(order[i:i + k])) + order[i + k:]
    if kind is Neighborhood.EX_NO_APEX:
        if j is None or not 0 <= i < j < n:
            raise InvalidMoveError(f"EX positions ({i}, {j}) out of range for n={n}")
        lst = list(order)
        lst[i], lst[j] = lst[j], lst[i]
        return tuple(lst)
    if kind is Neighborhood.FSH_NO_APEX:
        if j is None or not 0 <= i < j < n:
            raise InvalidMoveError(f"FSH positions ({i}, {j}) out of range for n={n}")
    elif kind is Neighborhood.BSH_NO_APEX:
        if j is None or not 0 <= j < i < n:
            raise InvalidMoveError(f"BSH positions ({i}, {j}) out of range for n={n}")
    else:
        raise InvalidMoveError(f"unknown neighborhood kind: {kind!r}")
    lst = list(order)
    job = lst.pop(i)
    lst.insert(j, job)
    return tuple(lst)
