"""Direct set-theoretic oracles for space and map properties.

Every predicate here is evaluated straight from the definition, with no
lifting machinery, so the oracles stay independent of the engine they are
checked against.  Quantifiers over subsets run over raw bitmask ranges.
"""

from __future__ import annotations

import enum

from .space import FiniteSpace, bits, popcount
from .maps import SpaceMap


class SpaceProperty(enum.Enum):
    T0 = "T0"
    R0 = "R0"
    T1 = "T1"
    HAUSDORFF = "Hausdorff"
    URYSOHN = "Urysohn"
    REGULAR = "Regular"
    NORMAL = "Normal"
    COMPLETELY_NORMAL = "CompletelyNormal"
    EXTREMALLY_DISCONNECTED = "ExtremallyDisconnected"
    CONNECTED = "Connected"  # connected or empty: no proper nonempty clopen
    DISCRETE = "Discrete"
    ANTIDISCRETE = "Antidiscrete"
    EMPTY = "Empty"
    NONEMPTY = "NonEmpty"


class MapProperty(enum.Enum):
    SURJECTIVE = "Surjective"
    INJECTIVE = "Injective"
    DENSE_IMAGE = "DenseImage"
    SUBSPACE_EMBEDDING = "SubspaceEmbedding"
    CLOSED_INCLUSION = "ClosedInclusion"
    CLOSED_MAP = "ClosedMap"
    OPEN_MAP = "OpenMap"
    INDUCED_TOPOLOGY = "InducedTopology"
    FIBREWISE_T0 = "FibrewiseT0"
    FIBREWISE_T1 = "FibrewiseT1"
    CLOPEN_IMAGE_LAW = "ClopenImageLaw"
    PI0_INJECTIVE = "Pi0Injective"
    NONEMPTY_DOMAIN_LAW = "NonEmptyDomainLaw"  # dom nonempty, or dom = cod = empty
    DISCRETE_EXTENSION = "DiscreteExtension"  # iso onto a clopen part, discrete rest


def _separated_by_opens(space: FiniteSpace, amask: int, bmask: int) -> bool:
    for u in space.open_sets:
        if amask & u == amask:
            for v in space.open_sets:
                if bmask & v == bmask and u & v == 0:
                    return True
    return False


def _separated_sets(space: FiniteSpace, amask: int, bmask: int) -> bool:
    return space.closure(amask) & bmask == 0 and space.closure(bmask) & amask == 0


def space_oracle(space: FiniteSpace, prop: SpaceProperty) -> bool:
    n = space.n
    full = (1 << n) - 1
    if prop is SpaceProperty.T0:
        # pairwise distinguishable: closures (= relation rows) all distinct
        return len(set(space.rel)) == n
    if prop is SpaceProperty.R0:
        # distinguishable points are separated: the relation is symmetric
        return all(
            not space.arrow(x, y) or space.arrow(y, x)
            for x in range(n)
            for y in range(n)
        )
    if prop is SpaceProperty.T1:
        return all(space.rel[x] == 1 << x for x in range(n))
    if prop is SpaceProperty.HAUSDORFF:
        return all(
            _separated_by_opens(space, 1 << x, 1 << y)
            for x in range(n)
            for y in range(x + 1, n)
        )
    if prop is SpaceProperty.URYSOHN:
        # distinct points have neighbourhoods with disjoint closures
        for x in range(n):
            for y in range(x + 1, n):
                if not any(
                    space.closure(u) & space.closure(v) == 0
                    for u in space.open_sets
                    if u >> x & 1
                    for v in space.open_sets
                    if v >> y & 1
                ):
                    return False
        return True
    if prop is SpaceProperty.REGULAR:
        for f in space.closed_sets:
            for x in range(n):
                if f >> x & 1:
                    continue
                if not _separated_by_opens(space, 1 << x, f):
                    return False
        return True
    if prop is SpaceProperty.NORMAL:
        for e in space.closed_sets:
            for f in space.closed_sets:
                if e & f == 0 and not _separated_by_opens(space, e, f):
                    return False
        return True
    if prop is SpaceProperty.COMPLETELY_NORMAL:
        for a in range(1 << n):
            for b in range(1 << n):
                if _separated_sets(space, a, b) and not _separated_by_opens(
                    space, a, b
                ):
                    return False
        return True
    if prop is SpaceProperty.EXTREMALLY_DISCONNECTED:
        return all(space.is_open(space.closure(u)) for u in space.open_sets)
    if prop is SpaceProperty.CONNECTED:
        return all(s in (0, full) for s in space.clopen_sets)
    if prop is SpaceProperty.DISCRETE:
        return all(space.rel[x] == 1 << x for x in range(n))
    if prop is SpaceProperty.ANTIDISCRETE:
        return all(row == full for row in space.rel) if n else True
    if prop is SpaceProperty.EMPTY:
        return n == 0
    if prop is SpaceProperty.NONEMPTY:
        return n > 0
    raise ValueError(f"no oracle for {prop}")


def components(space: FiniteSpace) -> list[int]:
    """Connected components as bitmasks (finite spaces are locally connected,
    so components = minimal nonempty clopens)."""
    seen = 0
    out = []
    for x in range(space.n):
        if seen >> x & 1:
            continue
        comp = 1 << x
        while True:
            grown = comp
            for i in bits(comp):
                grown |= space.rel[i] | space.preds[i]
            if grown == comp:
                break
            comp = grown
        out.append(comp)
        seen |= comp
    return out


def map_oracle(f: SpaceMap, prop: MapProperty) -> bool:
    dom, cod = f.dom, f.cod
    if prop is MapProperty.SURJECTIVE:
        return f.image_mask == (1 << cod.n) - 1
    if prop is MapProperty.INJECTIVE:
        return len(set(f.points)) == dom.n
    if prop is MapProperty.DENSE_IMAGE:
        return cod.closure(f.image_mask) == (1 << cod.n) - 1
    if prop is MapProperty.INDUCED_TOPOLOGY:
        return all(
            dom.arrow(x, y) == cod.arrow(f.points[x], f.points[y])
            for x in range(dom.n)
            for y in range(dom.n)
        )
    if prop is MapProperty.SUBSPACE_EMBEDDING:
        return map_oracle(f, MapProperty.INJECTIVE) and map_oracle(
            f, MapProperty.INDUCED_TOPOLOGY
        )
    if prop is MapProperty.CLOSED_INCLUSION:
        return map_oracle(f, MapProperty.SUBSPACE_EMBEDDING) and cod.is_closed(
            f.image_mask
        )
    if prop is MapProperty.CLOSED_MAP:
        def fwd(mask):
            out = 0
            for i in bits(mask):
                out |= 1 << f.points[i]
            return out

        return all(cod.is_closed(fwd(s)) for s in dom.closed_sets)
    if prop is MapProperty.OPEN_MAP:
        def fwd(mask):
            out = 0
            for i in bits(mask):
                out |= 1 << f.points[i]
            return out

        return all(cod.is_open(fwd(u)) for u in dom.open_sets)
    if prop is MapProperty.FIBREWISE_T0:
        return not any(
            f.points[x] == f.points[y] and dom.arrow(x, y) and dom.arrow(y, x)
            for x in range(dom.n)
            for y in range(dom.n)
            if x != y
        )
    if prop is MapProperty.FIBREWISE_T1:
        return not any(
            f.points[x] == f.points[y] and dom.arrow(x, y)
            for x in range(dom.n)
            for y in range(dom.n)
            if x != y
        )
    if prop is MapProperty.CLOPEN_IMAGE_LAW:
        im = f.image_mask
        return all(s == 0 or s & im for s in cod.clopen_sets)
    if prop is MapProperty.PI0_INJECTIVE:
        cod_comps = components(cod)
        hit: set[int] = set()
        for comp in components(dom):
            x = next(bits(comp))
            target = next(
                k for k, c in enumerate(cod_comps) if c >> f.points[x] & 1
            )
            if target in hit:
                return False
            hit.add(target)
        return True
    if prop is MapProperty.NONEMPTY_DOMAIN_LAW:
        return dom.n > 0 or cod.n == 0
    if prop is MapProperty.DISCRETE_EXTENSION:
        if not map_oracle(f, MapProperty.SUBSPACE_EMBEDDING):
            return False
        im = f.image_mask
        rest = ((1 << cod.n) - 1) & ~im
        for x in bits(rest):
            if cod.rel[x] != 1 << x or cod.preds[x] != 1 << x:
                return False
        return True
    raise ValueError(f"no oracle for {prop}")


def clopen_disjoint_images(f: SpaceMap) -> bool:
    """Images of disjoint nonempty clopen subsets of the domain are disjoint.

    One candidate reading of the connectedness-flavoured left class; compared
    against the computed class by the experimental suite, never asserted.
    """
    dom = f.dom

    def fwd(mask):
        out = 0
        for i in bits(mask):
            out |= 1 << f.points[i]
        return out

    for u in dom.clopen_sets:
        for v in dom.clopen_sets:
            if u and v and u & v == 0 and fwd(u) & fwd(v):
                return False
    return True
