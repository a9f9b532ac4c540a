"""Finite groups as Cayley tables, with a small named catalog, homomorphism
enumeration by generator images, and the group category for the engine."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .engine import Category

MAX_ORDER = 16


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.table)
        if n == 0 or any(len(row) != n for row in self.table):
            raise ValueError("Cayley table must be square and nonempty")
        if any(not 0 <= x < n for row in self.table for x in row):
            raise ValueError("Cayley table entries out of range")
        if self.identity is None:
            raise ValueError(f"{self.name}: no identity element")
        for a in range(n):
            if self.identity not in self.table[a]:
                raise ValueError(f"{self.name}: element {a} has no inverse")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        raise ValueError(f"{self.name}: not associative")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def identity(self) -> int | None:
        n = len(self.table)
        for e in range(n):
            if all(self.table[e][x] == x == self.table[x][e] for x in range(n)):
                return e
        return None

    def inverse(self, a: int) -> int:
        return self.table[a].index(self.identity)

    def element_order(self, a: int) -> int:
        x, k = a, 1
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(sorted(self.element_order(a) for a in range(self.order)))

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, greedily built."""
        gens: list[int] = []
        span = {self.identity}
        for a in sorted(range(self.order), key=lambda x: -self.element_order(x)):
            if a in span:
                continue
            gens.append(a)
            span = _span(self, gens)
            if len(span) == self.order:
                break
        return tuple(gens)

    def is_abelian(self) -> bool:
        return all(
            self.mul(a, b) == self.mul(b, a)
            for a in range(self.order)
            for b in range(self.order)
        )

    def commutator_subgroup(self) -> frozenset[int]:
        comms = {
            self.mul(self.mul(a, b), self.mul(self.inverse(a), self.inverse(b)))
            for a in range(self.order)
            for b in range(self.order)
        }
        return _subgroup_closure(self, comms)

    def is_solvable(self) -> bool:
        cur = frozenset(range(self.order))
        while True:
            nxt = _derived(self, cur)
            if nxt == cur:
                return len(cur) == 1
            cur = nxt

    def is_nilpotent(self) -> bool:
        """Lower central series reaches the trivial subgroup."""
        cur = frozenset(range(self.order))
        while True:
            comms = {
                self.mul(self.mul(a, b), self.mul(self.inverse(a), self.inverse(b)))
                for a in range(self.order)
                for b in cur
            }
            nxt = _subgroup_closure(self, comms)
            if nxt == cur:
                return len(cur) == 1
            cur = nxt

    def is_p_group(self, p: int) -> bool:
        n = self.order
        while n % p == 0:
            n //= p
        return n == 1

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def _span(g: FiniteGroup, gens) -> set[int]:
    span = {g.identity}
    frontier = [g.identity]
    while frontier:
        x = frontier.pop()
        for a in gens:
            y = g.mul(x, a)
            if y not in span:
                span.add(y)
                frontier.append(y)
    return span


def _subgroup_closure(g: FiniteGroup, seed) -> frozenset[int]:
    span = set(seed) | {g.identity}
    changed = True
    while changed:
        changed = False
        for a in list(span):
            for b in list(span):
                c = g.mul(a, b)
                if c not in span:
                    span.add(c)
                    changed = True
            inv = g.inverse(a)
            if inv not in span:
                span.add(inv)
                changed = True
    return frozenset(span)


def _derived(g: FiniteGroup, sub: frozenset[int]) -> frozenset[int]:
    comms = {
        g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b)))
        for a in sub
        for b in sub
    }
    return _subgroup_closure(g, comms)


@dataclass(frozen=True)
class GroupHom:
    dom: FiniteGroup
    cod: FiniteGroup
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.dom.order:
            raise ValueError("image list size mismatch")
        for a in range(self.dom.order):
            for b in range(self.dom.order):
                if self.images[self.dom.mul(a, b)] != self.cod.mul(
                    self.images[a], self.images[b]
                ):
                    raise ValueError("not a homomorphism")

    def __call__(self, a: int) -> int:
        return self.images[a]

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.cod.order

    def is_injective(self) -> bool:
        return len(set(self.images)) == self.dom.order

    def kernel(self) -> frozenset[int]:
        e = self.cod.identity
        return frozenset(a for a, i in enumerate(self.images) if i == e)

    def __repr__(self):
        return f"GroupHom({self.dom.name}->{self.cod.name}, {self.images})"


def identity_hom(g: FiniteGroup) -> GroupHom:
    return GroupHom(g, g, tuple(range(g.order)))


def compose_homs(f: GroupHom, g: GroupHom) -> GroupHom:
    if f.cod != g.dom:
        raise ValueError("homs not composable")
    return GroupHom(f.dom, g.cod, tuple(g.images[i] for i in f.images))


def trivial_hom(g: FiniteGroup, h: FiniteGroup) -> GroupHom:
    return GroupHom(g, h, (h.identity,) * g.order)


@lru_cache(maxsize=None)
def enumerate_homs(dom: FiniteGroup, cod: FiniteGroup) -> tuple[GroupHom, ...]:
    """All homomorphisms dom -> cod by searching generator images and
    extending through products, pruning on the first inconsistency."""
    if dom.order > MAX_ORDER:
        raise ValueError(f"hom enumeration limited to order {MAX_ORDER}")
    gens = dom.generators
    if not gens:
        return (trivial_hom(dom, cod),)
    homs = []
    for images in itertools.product(range(cod.order), repeat=len(gens)):
        # element orders must divide: cheap pre-filter
        if any(
            dom.element_order(g) % cod.element_order(i)
            for g, i in zip(gens, images)
        ):
            continue
        phi = _extend(dom, cod, gens, images)
        if phi is not None:
            homs.append(GroupHom(dom, cod, phi))
    homs.sort(key=lambda h: h.images)
    return tuple(homs)


def _extend(dom, cod, gens, images) -> tuple[int, ...] | None:
    phi = {dom.identity: cod.identity}
    frontier = [dom.identity]
    while frontier:
        x = frontier.pop()
        for g, i in zip(gens, images):
            y = dom.mul(x, g)
            v = cod.mul(phi[x], i)
            if y in phi:
                if phi[y] != v:
                    return None
            else:
                phi[y] = v
                frontier.append(y)
    if len(phi) != dom.order:
        return None  # generators fail to generate (cannot happen)
    out = tuple(phi[a] for a in range(dom.order))
    # full verification: generator-consistent extensions are homomorphisms,
    # but the Cayley check is cheap at this scale and keeps us honest
    for a in range(dom.order):
        for b in range(dom.order):
            if out[dom.mul(a, b)] != cod.mul(out[a], out[b]):
                return None
    return out


@lru_cache(maxsize=None)
def automorphisms(g: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    return tuple(
        h.images for h in enumerate_homs(g, g) if h.is_injective()
    )


def are_isomorphic(a: FiniteGroup, b: FiniteGroup) -> bool:
    if a.order != b.order or a.element_orders != b.element_orders:
        return False
    return any(h.is_injective() for h in enumerate_homs(a, b))


# ---------------------------------------------------------------------------
# Catalog


def cyclic(n: int, name: str | None = None) -> FiniteGroup:
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(name or f"Z{n}", table)


def direct_product(a: FiniteGroup, b: FiniteGroup, name: str | None = None) -> FiniteGroup:
    pairs = list(itertools.product(range(a.order), range(b.order)))
    idx = {p: k for k, p in enumerate(pairs)}
    table = tuple(
        tuple(idx[(a.mul(x1, x2), b.mul(y1, y2))] for (x2, y2) in pairs)
        for (x1, y1) in pairs
    )
    return FiniteGroup(name or f"{a.name}x{b.name}", table)


def _perm_group(name: str, perms: list[tuple[int, ...]]) -> FiniteGroup:
    perms = sorted(set(perms))
    idx = {p: k for k, p in enumerate(perms)}
    table = tuple(
        tuple(idx[tuple(p[q[i]] for i in range(len(q)))] for q in perms)
        for p in perms
    )
    return FiniteGroup(name, table)


def symmetric(n: int, name: str | None = None) -> FiniteGroup:
    return _perm_group(name or f"S{n}", list(itertools.permutations(range(n))))


def alternating(n: int, name: str | None = None) -> FiniteGroup:
    def parity(p):
        inv = sum(
            1
            for i in range(len(p))
            for j in range(i + 1, len(p))
            if p[i] > p[j]
        )
        return inv % 2

    return _perm_group(
        name or f"A{n}",
        [p for p in itertools.permutations(range(n)) if parity(p) == 0],
    )


def dihedral(n: int, name: str | None = None) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((n - i) % n for i in range(n))
    perms = []
    cur = tuple(range(n))
    for _ in range(n):
        perms.append(cur)
        perms.append(tuple(ref[c] for c in cur))
        cur = tuple(rot[c] for c in cur)
    return _perm_group(name or f"D{n}", perms)


def quaternion8(name: str = "Q8") -> FiniteGroup:
    # elements 1, -1, i, -i, j, -j, k, -k as 0..7
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    mult = {}

    def canon(sign, sym):
        if sym == "1":
            return "1" if sign > 0 else "-1"
        return sym if sign > 0 else "-" + sym

    base = {
        ("1", "1"): (1, "1"),
        ("1", "i"): (1, "i"),
        ("1", "j"): (1, "j"),
        ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"),
        ("j", "1"): (1, "j"),
        ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"),
        ("j", "j"): (-1, "1"),
        ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"),
        ("j", "i"): (-1, "k"),
        ("j", "k"): (1, "i"),
        ("k", "j"): (-1, "i"),
        ("k", "i"): (1, "j"),
        ("i", "k"): (-1, "j"),
    }
    for x in names:
        for y in names:
            sx, bx = (-1, x[1:]) if x.startswith("-") else (1, x)
            sy, by = (-1, y[1:]) if y.startswith("-") else (1, y)
            s, b = base[(bx, by)]
            mult[(x, y)] = canon(sx * sy * s, b)
    idx = {nm: i for i, nm in enumerate(names)}
    table = tuple(
        tuple(idx[mult[(x, y)]] for y in names) for x in names
    )
    return FiniteGroup(name, table)


@lru_cache(maxsize=None)
def catalog() -> dict[str, FiniteGroup]:
    """Validated named groups up to order 16."""
    groups = [cyclic(n) for n in range(1, MAX_ORDER + 1)]
    groups += [
        direct_product(cyclic(2), cyclic(2), "Z2xZ2"),
        direct_product(cyclic(3), cyclic(3), "Z3xZ3"),
        symmetric(3),
        dihedral(4),
        quaternion8(),
        alternating(4),
    ]
    return {g.name: g for g in groups}


TRIVIAL_NAME = "Z1"


def trivial() -> FiniteGroup:
    return catalog()[TRIVIAL_NAME]


def load_cayley_table(text: str, name: str) -> FiniteGroup:
    """Parse the user group format: the order n followed by n*n table entries,
    whitespace separated."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty Cayley table file")
    n = int(tokens[0])
    entries = [int(t) for t in tokens[1:]]
    if len(entries) != n * n:
        raise ValueError(f"expected {n * n} table entries, got {len(entries)}")
    table = tuple(tuple(entries[i * n : (i + 1) * n]) for i in range(n))
    return FiniteGroup(name, table)


# ---------------------------------------------------------------------------
# The category


class FinGrp(Category):
    """Finite groups (the catalog plus any extras) and homomorphisms."""

    cache_size_limit = MAX_ORDER

    def __init__(self, extra: tuple[FiniteGroup, ...] = ()):
        self.extra = tuple(extra)
        self._obj_keys: dict[FiniteGroup, tuple] = {}

    def objects(self, max_size: int) -> list[FiniteGroup]:
        pool = list(catalog().values()) + list(self.extra)
        return sorted(
            (g for g in pool if g.order <= max_size),
            key=lambda g: (g.order, g.name),
        )

    def hom(self, a, b):
        return enumerate_homs(a, b)

    def compose(self, f, g):
        return compose_homs(f, g)

    def identity(self, a):
        return identity_hom(a)

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def size(self, a) -> int:
        return a.order

    def obj_key(self, a: FiniteGroup):
        key = self._obj_keys.get(a)
        if key is None:
            key = (a.order, a.name)
            for g in self.objects(a.order):
                if are_isomorphic(a, g):
                    key = (a.order, g.name)
                    break
            self._obj_keys[a] = key
        return key

    def mor_key(self, f: GroupHom):
        dk = self.obj_key(f.dom)
        ck = self.obj_key(f.cod)
        best = min(
            tuple(pc[f.images[pd.index(s)]] for s in range(f.dom.order))
            for pd in automorphisms(f.dom)
            for pc in automorphisms(f.cod)
        )
        return (dk, ck, best)

    def render(self, f: GroupHom) -> str:
        return f"{f.dom.name}->{f.cod.name}{f.images}"


FINGRP = FinGrp()


def zero_map(g: FiniteGroup) -> GroupHom:
    """The morphism to the trivial group."""
    return GroupHom(g, trivial(), (0,) * g.order)


def from_zero(g: FiniteGroup) -> GroupHom:
    return GroupHom(trivial(), g, (g.identity,))


def has_section(f: GroupHom) -> bool:
    """Section oracle: some hom s with s;f the identity."""
    ident = tuple(range(f.cod.order))
    return any(
        tuple(f.images[s.images[i]] for i in range(f.cod.order)) == ident
        for s in enumerate_homs(f.cod, f.dom)
    )
