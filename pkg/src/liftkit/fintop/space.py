"""Finite topological spaces encoded as specialisation preorders.

A finite space is stored as a reflexive-transitive boolean relation on its
points: ``x -> y`` (written ``arrow(x, y)``) means ``y`` lies in the closure
of ``x``.  Closed subsets are exactly the arrow-successor-closed ones, open
subsets their complements, and the monotone point maps are the continuous
maps.  Rows of the relation are kept as integer bitmasks so that subset and
closure computations are single machine-word operations for the sizes this
package cares about (at most 7 points).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

MAX_POINTS = 7


class SizeGuardError(ValueError):
    """Raised when an enumeration request exceeds the hard size guard."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class FiniteSpace:
    """A finite preorder: ``rel[i]`` has bit ``j`` set iff point i ↘ point j."""

    labels: tuple[str, ...]
    rel: tuple[int, ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(self.rel) != n:
            raise ValueError("relation size does not match point count")
        if len(set(self.labels)) != n:
            raise ValueError(f"duplicate labels: {self.labels}")
        full = (1 << n) - 1
        for i, row in enumerate(self.rel):
            if row & ~full:
                raise ValueError("relation mentions points outside the space")
            if not row >> i & 1:
                raise ValueError(f"relation not reflexive at point {i}")
        for i in range(n):
            acc = self.rel[i]
            for j in _bits(self.rel[i]):
                acc |= self.rel[j]
            if acc != self.rel[i]:
                raise ValueError(f"relation not transitive at point {i}")

    @property
    def n(self) -> int:
        return len(self.labels)

    def arrow(self, x: int, y: int) -> bool:
        """True iff x ↘ y, i.e. y is in the closure of x."""
        return bool(self.rel[x] >> y & 1)

    @cached_property
    def preds(self) -> tuple[int, ...]:
        """preds[j] = bitmask of points x with x ↘ j (the minimal open at j)."""
        masks = [0] * self.n
        for i in range(self.n):
            for j in _bits(self.rel[i]):
                masks[j] |= 1 << i
        return tuple(masks)

    def closure(self, subset: int) -> int:
        acc = subset
        for i in _bits(subset):
            acc |= self.rel[i]
        return acc

    def is_closed(self, subset: int) -> bool:
        return self.closure(subset) == subset

    def is_open(self, subset: int) -> bool:
        acc = subset
        for j in _bits(subset):
            acc |= self.preds[j]
        return acc == subset

    @cached_property
    def open_sets(self) -> tuple[int, ...]:
        return tuple(s for s in range(1 << self.n) if self.is_open(s))

    @cached_property
    def closed_sets(self) -> tuple[int, ...]:
        return tuple(s for s in range(1 << self.n) if self.is_closed(s))

    @cached_property
    def clopen_sets(self) -> tuple[int, ...]:
        closed = set(self.closed_sets)
        return tuple(s for s in self.open_sets if s in closed)

    def min_open(self, x: int) -> int:
        return self.preds[x]

    def label_index(self, label: str) -> int:
        return self.labels.index(label)

    def __repr__(self):
        from . import canon  # late import, avoids a cycle at module load

        return f"FiniteSpace({canon.describe(self)})"


def space_from_relation(labels, rel) -> FiniteSpace:
    """Build a space from an arbitrary relation, closing it as needed."""
    n = len(labels)
    rows = list(rel)
    for i in range(n):
        rows[i] |= 1 << i
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = rows[i]
            for j in _bits(rows[i]):
                acc |= rows[j]
            if acc != rows[i]:
                rows[i] = acc
                changed = True
    return FiniteSpace(tuple(labels), tuple(rows))


def space_from_arrows(points, arrows) -> FiniteSpace:
    """Space on the given point labels with the reflexive-transitive closure
    of the listed ``(src, dst)`` arrows (src ↘ dst)."""
    labels = tuple(points)
    if len(set(labels)) != len(labels):
        raise ValueError(f"duplicate labels: {labels}")
    index = {p: i for i, p in enumerate(labels)}
    rows = [0] * len(labels)
    for src, dst in arrows:
        if src not in index or dst not in index:
            raise ValueError(f"arrow endpoint not among points: {src}->{dst}")
        rows[index[src]] |= 1 << index[dst]
    return space_from_relation(labels, rows)


_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def default_labels(n: int) -> tuple[str, ...]:
    if n <= len(_LETTERS):
        return tuple(_LETTERS[:n])
    return tuple(f"p{i}" for i in range(n))


EMPTY = FiniteSpace((), ())
POINT = space_from_arrows(("*",), [])
SIERPINSKI = space_from_arrows(("a", "b"), [("a", "b")])
DISCRETE2 = space_from_arrows(("a", "b"), [])
ANTIDISCRETE2 = space_from_arrows(("a", "b"), [("a", "b"), ("b", "a")])


def discrete(n: int) -> FiniteSpace:
    return space_from_arrows(default_labels(n), [])


def antidiscrete(n: int) -> FiniteSpace:
    labels = default_labels(n)
    pairs = list(itertools.permutations(labels, 2))
    return space_from_arrows(labels, pairs)


def terminal_map_points(space: FiniteSpace) -> tuple[int, ...]:
    return (0,) * space.n


def subset_labels(space: FiniteSpace, mask: int) -> str:
    return "{" + ",".join(space.labels[i] for i in _bits(mask)) + "}"


popcount = _popcount
bits = _bits
