"""Continuous (= monotone) maps between finite spaces."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .space import FiniteSpace, bits


@dataclass(frozen=True)
class SpaceMap:
    dom: FiniteSpace
    cod: FiniteSpace
    points: tuple[int, ...]

    def __post_init__(self):
        if len(self.points) != self.dom.n:
            raise ValueError("point assignment size mismatch")
        for i, img in enumerate(self.points):
            if not 0 <= img < self.cod.n:
                raise ValueError(f"image of point {i} out of range")
        for i in range(self.dom.n):
            for j in bits(self.dom.rel[i]):
                if not self.cod.arrow(self.points[i], self.points[j]):
                    raise ValueError(
                        f"not monotone: {i}->{j} but images unrelated"
                    )

    def __call__(self, i: int) -> int:
        return self.points[i]

    @property
    def image_mask(self) -> int:
        m = 0
        for p in self.points:
            m |= 1 << p
        return m

    def preimage_mask(self, mask: int) -> int:
        m = 0
        for i, p in enumerate(self.points):
            if mask >> p & 1:
                m |= 1 << i
        return m

    def is_identity(self) -> bool:
        return self.dom == self.cod and self.points == tuple(range(self.dom.n))

    def __repr__(self):
        from ..notation import render_map

        return f"SpaceMap({render_map(self)!r})"


def identity(space: FiniteSpace) -> SpaceMap:
    return SpaceMap(space, space, tuple(range(space.n)))


def compose(f: SpaceMap, g: SpaceMap) -> SpaceMap:
    """Diagrammatic composition: apply f first, then g."""
    if f.cod != g.dom:
        raise ValueError("maps not composable")
    return SpaceMap(f.dom, g.cod, tuple(g.points[p] for p in f.points))


def terminal_map(space: FiniteSpace, point: FiniteSpace) -> SpaceMap:
    if point.n != 1:
        raise ValueError("codomain is not a single point")
    return SpaceMap(space, point, (0,) * space.n)


def initial_map(empty: FiniteSpace, space: FiniteSpace) -> SpaceMap:
    if empty.n != 0:
        raise ValueError("domain is not the empty space")
    return SpaceMap(empty, space, ())


@lru_cache(maxsize=None)
def enumerate_maps(dom: FiniteSpace, cod: FiniteSpace) -> tuple[SpaceMap, ...]:
    """All monotone maps dom -> cod, in lexicographic order of assignments.

    hom(empty, X) has exactly one member (the empty assignment) and
    hom(X, empty) is empty unless X is empty too.
    """
    n, m = dom.n, cod.n
    if n == 0:
        return (SpaceMap(dom, cod, ()),)
    if m == 0:
        return ()
    out = []
    assign = [0] * n

    def backtrack(i: int):
        if i == n:
            out.append(SpaceMap(dom, cod, tuple(assign)))
            return
        for c in range(m):
            ok = True
            for j in range(i):
                if dom.rel[i] >> j & 1 and not cod.rel[c] >> assign[j] & 1:
                    ok = False
                    break
                if dom.rel[j] >> i & 1 and not cod.rel[assign[j]] >> c & 1:
                    ok = False
                    break
            if ok:
                assign[i] = c
                backtrack(i + 1)

    backtrack(0)
    return tuple(out)


def hom_count(dom: FiniteSpace, cod: FiniteSpace) -> int:
    return len(enumerate_maps(dom, cod))
