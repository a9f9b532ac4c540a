"""Products, coproducts, pullbacks and pushouts of finite spaces."""

from __future__ import annotations

import itertools

from .space import FiniteSpace, space_from_relation, bits
from .maps import SpaceMap


def product(a: FiniteSpace, b: FiniteSpace):
    """Componentwise-ordered product with its two projections."""
    pairs = list(itertools.product(range(a.n), range(b.n)))
    idx = {p: k for k, p in enumerate(pairs)}
    labels = tuple(f"({a.labels[i]},{b.labels[j]})" for i, j in pairs)
    rows = []
    for i, j in pairs:
        row = 0
        for i2, j2 in pairs:
            if a.arrow(i, i2) and b.arrow(j, j2):
                row |= 1 << idx[(i2, j2)]
        rows.append(row)
    space = FiniteSpace(labels, tuple(rows))
    p = SpaceMap(space, a, tuple(i for i, _ in pairs))
    q = SpaceMap(space, b, tuple(j for _, j in pairs))
    return space, p, q


def coproduct(a: FiniteSpace, b: FiniteSpace):
    """Disjoint union with its two inclusions."""
    labels = tuple(f"l.{x}" for x in a.labels) + tuple(f"r.{x}" for x in b.labels)
    rows = list(a.rel) + [row << a.n for row in b.rel]
    space = FiniteSpace(labels, tuple(rows))
    inl = SpaceMap(a, space, tuple(range(a.n)))
    inr = SpaceMap(b, space, tuple(a.n + i for i in range(b.n)))
    return space, inl, inr


def pullback(f: SpaceMap, g: SpaceMap):
    """Equalising subspace of dom(f) x dom(g) over the common codomain,
    with the two projections."""
    if f.cod != g.cod:
        raise ValueError("pullback needs a common codomain")
    a, b = f.dom, g.dom
    pairs = [
        (i, j)
        for i, j in itertools.product(range(a.n), range(b.n))
        if f.points[i] == g.points[j]
    ]
    idx = {p: k for k, p in enumerate(pairs)}
    labels = tuple(f"({a.labels[i]},{b.labels[j]})" for i, j in pairs)
    rows = []
    for i, j in pairs:
        row = 0
        for i2, j2 in pairs:
            if a.arrow(i, i2) and b.arrow(j, j2):
                row |= 1 << idx[(i2, j2)]
        rows.append(row)
    space = FiniteSpace(labels, tuple(rows))
    p = SpaceMap(space, a, tuple(i for i, _ in pairs))
    q = SpaceMap(space, b, tuple(j for _, j in pairs))
    return space, p, q


def pushout(f: SpaceMap, g: SpaceMap):
    """Set-level pushout of a span, relation generated by the two images,
    with the two injections."""
    if f.dom != g.dom:
        raise ValueError("pushout needs a common domain")
    z, a, b = f.dom, f.cod, g.cod
    # glue a-point i with b-point j whenever some z-point maps to both
    parent = list(range(a.n + b.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for k in range(z.n):
        union(f.points[k], a.n + g.points[k])
    roots = sorted({find(x) for x in range(a.n + b.n)})
    slot = {r: s for s, r in enumerate(roots)}

    def cls(x):
        return slot[find(x)]

    labels = []
    for r in roots:
        members = [x for x in range(a.n + b.n) if find(x) == r]
        labels.append(
            "=".join(
                a.labels[x] if x < a.n else b.labels[x - a.n] for x in members
            )
        )
    rows = [0] * len(roots)
    for i in range(a.n):
        for j in bits(a.rel[i]):
            rows[cls(i)] |= 1 << cls(j)
    for i in range(b.n):
        for j in bits(b.rel[i]):
            rows[cls(a.n + i)] |= 1 << cls(a.n + j)
    space = space_from_relation(tuple(labels), rows)
    inl = SpaceMap(a, space, tuple(cls(i) for i in range(a.n)))
    inr = SpaceMap(b, space, tuple(cls(a.n + i) for i in range(b.n)))
    return space, inl, inr


def product_map(f: SpaceMap, g: SpaceMap) -> SpaceMap:
    """The induced map dom(f) x dom(g) -> cod(f) x cod(g)."""
    dom, pd, qd = product(f.dom, g.dom)
    cod, pc, qc = product(f.cod, g.cod)
    cod_idx = {
        (pc.points[k], qc.points[k]): k for k in range(cod.n)
    }
    points = tuple(
        cod_idx[(f.points[pd.points[k]], g.points[qd.points[k]])]
        for k in range(dom.n)
    )
    return SpaceMap(dom, cod, points)


def coproduct_map(f: SpaceMap, g: SpaceMap) -> SpaceMap:
    """The induced map dom(f) + dom(g) -> cod(f) + cod(g)."""
    dom, _, _ = coproduct(f.dom, g.dom)
    cod, _, _ = coproduct(f.cod, g.cod)
    points = tuple(f.points) + tuple(f.cod.n + p for p in g.points)
    return SpaceMap(dom, cod, points)
