"""The category of finite topological spaces as an engine instance."""

from __future__ import annotations

from ..engine import Category
from . import canon
from .maps import SpaceMap, compose, enumerate_maps, identity
from .space import FiniteSpace, bits


class FinTop(Category):
    """Finite spaces and monotone maps.  Pure and stateless apart from
    enumeration caches, so shared instances are safe to use concurrently."""

    def objects(self, max_size: int) -> list[FiniteSpace]:
        return canon.enumerate_spaces(max_size)

    def hom(self, a: FiniteSpace, b: FiniteSpace):
        return enumerate_maps(a, b)

    def compose(self, f: SpaceMap, g: SpaceMap) -> SpaceMap:
        return compose(f, g)

    def identity(self, a: FiniteSpace) -> SpaceMap:
        return identity(a)

    def dom(self, f: SpaceMap) -> FiniteSpace:
        return f.dom

    def cod(self, f: SpaceMap) -> FiniteSpace:
        return f.cod

    def size(self, a: FiniteSpace) -> int:
        return a.n

    def obj_key(self, a: FiniteSpace):
        return canon.canonical_form(a)

    def mor_key(self, f: SpaceMap):
        return canon.map_canonical_form(f)

    def render(self, f: SpaceMap) -> str:
        from ..notation import render_map

        return render_map(f)

    def diagonals(self, f: SpaceMap, i: SpaceMap, g: SpaceMap, j: SpaceMap):
        """Diagonals d: cod(f) -> dom(g) with f;d = i and d;g = j, built
        pointwise: points hit by f are forced to the i-image, the rest range
        over the g-fibre of their j-image, pruning on partial monotonicity."""
        B, X = f.cod, g.dom
        n = B.n
        forced = [-1] * n
        for a in range(f.dom.n):
            b = f.points[a]
            want = i.points[a]
            if forced[b] >= 0 and forced[b] != want:
                return
            forced[b] = want
        fibre = [0] * n
        for b in range(n):
            mask = 0
            for x in range(X.n):
                if g.points[x] == j.points[b]:
                    mask |= 1 << x
            if forced[b] >= 0:
                mask &= 1 << forced[b]
            if not mask:
                return
            fibre[b] = mask
        assign = [0] * n
        found = []

        def backtrack(b: int):
            if found:
                return
            if b == n:
                found.append(SpaceMap(B, X, tuple(assign)))
                return
            for x in bits(fibre[b]):
                ok = True
                for b2 in range(b):
                    if B.rel[b] >> b2 & 1 and not X.rel[x] >> assign[b2] & 1:
                        ok = False
                        break
                    if B.rel[b2] >> b & 1 and not X.rel[assign[b2]] >> x & 1:
                        ok = False
                        break
                if ok:
                    assign[b] = x
                    backtrack(b + 1)

        backtrack(0)
        yield from found


FINTOP = FinTop()
