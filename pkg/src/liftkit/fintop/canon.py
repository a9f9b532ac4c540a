"""Canonical forms, homeomorphism testing and space enumeration.

Canonical labelling works nauty-style: points are first partitioned by an
iterated degree refinement (an isomorphism invariant), then the canonical
encoding is the minimum relation matrix over all permutations that respect
the refinement cells.  Isomorphic spaces produce byte-identical encodings
because the refinement itself is invariant under relabelling, and equal
encodings are realised by actual relabelings, so the form is exact.

Spaces are enumerated up to homeomorphism by extending each (n-1)-point
representative with a fresh point in every transitively consistent way and
deduplicating by canonical form.  Every n-point class arises this way since
deleting a point of any space leaves a space of the previous size.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .space import (
    MAX_POINTS,
    EMPTY,
    FiniteSpace,
    SizeGuardError,
    bits,
    default_labels,
    popcount,
)
from .maps import SpaceMap

SpaceKey = tuple[int, tuple[int, ...]]


def _refinement_cells(space: FiniteSpace) -> list[list[int]]:
    """Partition points into ordered cells by iterated (out, in)-degree colors."""
    n = space.n
    colors = [(popcount(space.rel[i]), popcount(space.preds[i])) for i in range(n)]
    ranks = _rank(colors)
    while True:
        new = []
        for i in range(n):
            succ = tuple(sorted(ranks[j] for j in bits(space.rel[i])))
            pred = tuple(sorted(ranks[j] for j in bits(space.preds[i])))
            new.append((ranks[i], succ, pred))
        new_ranks = _rank(new)
        if new_ranks == ranks:
            break
        ranks = new_ranks
    cells: dict[int, list[int]] = {}
    for i, r in enumerate(ranks):
        cells.setdefault(r, []).append(i)
    return [cells[r] for r in sorted(cells)]


def _rank(keys) -> list[int]:
    order = {k: r for r, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _candidate_perms(space: FiniteSpace):
    """Permutations point -> slot consistent with the refinement cells."""
    cells = _refinement_cells(space)
    starts = []
    s = 0
    for cell in cells:
        starts.append(s)
        s += len(cell)
    for choice in itertools.product(*(itertools.permutations(c) for c in cells)):
        perm = [0] * space.n
        for cell_order, start in zip(choice, starts):
            for offset, point in enumerate(cell_order):
                perm[point] = start + offset
        yield tuple(perm)


def _encode(space: FiniteSpace, perm: tuple[int, ...]) -> tuple[int, ...]:
    rows = [0] * space.n
    for i in range(space.n):
        row = 0
        for j in bits(space.rel[i]):
            row |= 1 << perm[j]
        rows[perm[i]] = row
    return tuple(rows)


@lru_cache(maxsize=None)
def _canonical(space: FiniteSpace) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """(minimal encoding, all permutations achieving it)."""
    best = None
    best_perms = []
    for perm in _candidate_perms(space):
        enc = _encode(space, perm)
        if best is None or enc < best:
            best = enc
            best_perms = [perm]
        elif enc == best:
            best_perms.append(perm)
    if best is None:  # empty space: one (empty) permutation
        return (), ((),)
    return best, tuple(best_perms)


def canonical_form(space: FiniteSpace) -> SpaceKey:
    """Relabelling-invariant encoding: equal iff the spaces are homeomorphic."""
    return (space.n, _canonical(space)[0])


def canonical_perms(space: FiniteSpace) -> tuple[tuple[int, ...], ...]:
    return _canonical(space)[1]


def canonical_space(space: FiniteSpace) -> FiniteSpace:
    """The representative of the homeomorphism class, with default labels."""
    enc = _canonical(space)[0]
    return FiniteSpace(default_labels(space.n), enc)


def is_homeomorphic(a: FiniteSpace, b: FiniteSpace) -> bool:
    if a.n > MAX_POINTS or b.n > MAX_POINTS:
        raise SizeGuardError(f"homeomorphism test limited to {MAX_POINTS} points")
    return canonical_form(a) == canonical_form(b)


def describe(space: FiniteSpace) -> str:
    arrows = [
        f"{space.labels[i]}->{space.labels[j]}"
        for i in range(space.n)
        for j in bits(space.rel[i])
        if i != j
    ]
    return "{" + ",".join(space.labels) + ("; " + ",".join(arrows) if arrows else "") + "}"


MorKey = tuple[SpaceKey, SpaceKey, tuple[int, ...]]


def map_canonical_form(f: SpaceMap) -> MorKey:
    """Arrow-category canonical form: invariant under composing with
    homeomorphisms on either side, distinct otherwise."""
    dk = canonical_form(f.dom)
    ck = canonical_form(f.cod)
    best = None
    for pd in canonical_perms(f.dom):
        inv = [0] * f.dom.n
        for point, slot in enumerate(pd):
            inv[slot] = point
        for pc in canonical_perms(f.cod):
            graph = tuple(pc[f.points[inv[s]]] for s in range(f.dom.n))
            if best is None or graph < best:
                best = graph
    return (dk, ck, best if best is not None else ())


def maps_isomorphic(f: SpaceMap, g: SpaceMap) -> bool:
    return map_canonical_form(f) == map_canonical_form(g)


# ---------------------------------------------------------------------------
# Enumeration


@lru_cache(maxsize=None)
def _classes_of_size(n: int) -> tuple[FiniteSpace, ...]:
    if n == 0:
        return (EMPTY,)
    reps: dict[SpaceKey, FiniteSpace] = {}
    for base in _classes_of_size(n - 1):
        closed = base.closed_sets
        opens = base.open_sets
        for down in closed:  # points the new one specialises to
            for up in opens:  # points specialising to the new one
                ok = True
                for x in bits(up):
                    if base.rel[x] & down != down:
                        ok = False
                        break
                if not ok:
                    continue
                new_bit = 1 << (n - 1)
                rows = [
                    row | (new_bit if up >> i & 1 else 0)
                    for i, row in enumerate(base.rel)
                ]
                rows.append(down | new_bit)
                cand = FiniteSpace(default_labels(n), tuple(rows))
                key = canonical_form(cand)
                if key not in reps:
                    reps[key] = canonical_space(cand)
    return tuple(reps[k] for k in sorted(reps))


def enumerate_spaces(max_size: int, up_to_homeomorphism: bool = True):
    """All spaces with at most ``max_size`` points (the empty space included),
    one canonical representative per homeomorphism class, in canonical order.

    With ``up_to_homeomorphism=False`` returns every labelled space instead,
    i.e. every reflexive-transitive relation on {0..n-1} for each size.
    """
    if not 0 <= max_size <= MAX_POINTS:
        raise SizeGuardError(f"space enumeration limited to {MAX_POINTS} points")
    if up_to_homeomorphism:
        out = []
        for n in range(max_size + 1):
            out.extend(_classes_of_size(n))
        return out
    out = []
    for n in range(max_size + 1):
        out.extend(_labelled_of_size(n))
    return out


@lru_cache(maxsize=None)
def _labelled_of_size(n: int) -> tuple[FiniteSpace, ...]:
    if n > 5:
        raise SizeGuardError("labelled enumeration limited to 5 points")
    out = []
    labels = default_labels(n)
    for rep in _classes_of_size(n):
        seen = set()
        for perm in itertools.permutations(range(n)):
            enc = _encode(rep, perm)
            if enc not in seen:
                seen.add(enc)
                out.append(FiniteSpace(labels, enc))
    out.sort(key=lambda s: s.rel)
    return tuple(out)


def count_classes(n: int) -> int:
    """Number of homeomorphism classes with exactly n points."""
    if not 0 <= n <= MAX_POINTS:
        raise SizeGuardError(f"space enumeration limited to {MAX_POINTS} points")
    return len(_classes_of_size(n))
