"""ASCII arrow notation for finite spaces, maps and orthogonal expressions.

Transliteration of the arrow glyphs:

    ==========  =====  =============================================
    glyph       ASCII  meaning
    ==========  =====  =============================================
    x ↘ y       ->     y lies in the closure of x
    x ↙ y       <-     x lies in the closure of y
    x ↔ y       <->    x and y topologically indistinguishable
    x = y       =      x and y are the same point (labels glued)
    ==========  =====  =============================================

Grammar (whitespace insignificant, labels are ``[A-Za-z0-9*']+``)::

    space := '{' [chain (',' chain)*] '}'
    chain := label (link label)*
    link  := '->' | '<-' | '<->' | '='
    map   := space '->' space
    expr  := '(' map (',' map)* ')' step+
    step  := '^' ('l'|'r')+ ['_{<' INT '}']

A ``_{<N}`` bound attaches to the immediately preceding side letter.  In a
map the codomain inherits every point and arrow of the domain, so
``{a} -> {b}`` is the map from a point into the two-point discrete space;
``strict=True`` disables that shorthand and requires all domain labels to
appear verbatim in the codomain.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .engine import OrthExpr, Side, Step
from .fintop.maps import SpaceMap
from .fintop.space import FiniteSpace, space_from_relation

_LABEL_RE = re.compile(r"[A-Za-z0-9*']+")
_SAFE_LABEL_RE = re.compile(r"[A-Za-z0-9*']+\Z")


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: str):
        self.text = text
        self.pos = pos
        self.expected = expected
        super().__init__(f"at offset {pos}: expected {expected}")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def done(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self, token: str) -> bool:
        self.skip_ws()
        return self.text.startswith(token, self.pos)

    def take(self, token: str) -> bool:
        if self.peek(token):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.take(token):
            raise ParseError(self.text, self.pos, repr(token))

    def label(self) -> str:
        self.skip_ws()
        m = _LABEL_RE.match(self.text, self.pos)
        if not m:
            raise ParseError(self.text, self.pos, "a label")
        self.pos = m.end()
        return m.group()

    def integer(self) -> int:
        self.skip_ws()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            raise ParseError(self.text, self.pos, "an integer")
        self.pos = m.end()
        return int(m.group())

    def link(self) -> str | None:
        for tok in ("<->", "->", "<-", "="):
            if self.take(tok):
                return tok
        return None


@dataclass
class _RawSpace:
    order: list[str]  # labels in order of first appearance
    merges: list[tuple[str, str]]
    arrows: list[tuple[str, str]]  # src specialises to dst


def _parse_raw_space(cur: _Cursor) -> _RawSpace:
    cur.expect("{")
    raw = _RawSpace([], [], [])
    seen = set()

    def note(lbl):
        if lbl not in seen:
            seen.add(lbl)
            raw.order.append(lbl)

    if cur.take("}"):
        return raw
    while True:
        left = cur.label()
        note(left)
        while True:
            link = cur.link()
            if link is None:
                break
            pos_before = cur.pos
            try:
                right = cur.label()
            except ParseError:
                raise ParseError(cur.text, pos_before, "a label after a link")
            note(right)
            if link == "->":
                raw.arrows.append((left, right))
            elif link == "<-":
                raw.arrows.append((right, left))
            elif link == "<->":
                raw.arrows.append((left, right))
                raw.arrows.append((right, left))
            else:
                raw.merges.append((left, right))
            left = right
        if cur.take("}"):
            return raw
        cur.expect(",")


class _Classes:
    """Union-find over labels, preserving first-appearance order."""

    def __init__(self, order):
        self.order = list(order)
        self.parent = {l: l for l in self.order}

    def find(self, l):
        while self.parent[l] != l:
            self.parent[l] = self.parent[self.parent[l]]
            l = self.parent[l]
        return l

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the earlier-appearing label as representative
            if self.order.index(ra) > self.order.index(rb):
                ra, rb = rb, ra
            self.parent[rb] = ra

    def classes(self) -> list[list[str]]:
        groups: dict[str, list[str]] = {}
        for l in self.order:
            groups.setdefault(self.find(l), []).append(l)
        return [groups[r] for r in groups]


def _build_space(raw: _RawSpace) -> tuple[FiniteSpace, dict[str, int]]:
    cls = _Classes(raw.order)
    for a, b in raw.merges:
        cls.union(a, b)
    groups = cls.classes()
    index = {}
    for k, group in enumerate(groups):
        for l in group:
            index[l] = k
    labels = tuple("=".join(g) for g in groups)
    rows = [0] * len(groups)
    for a, b in raw.arrows:
        rows[index[a]] |= 1 << index[b]
    return space_from_relation(labels, rows), index


def parse_space(text: str) -> FiniteSpace:
    cur = _Cursor(text)
    raw = _parse_raw_space(cur)
    if not cur.done():
        raise ParseError(text, cur.pos, "end of input")
    return _build_space(raw)[0]


def _parse_map_at(cur: _Cursor, strict: bool = False) -> SpaceMap:
    raw_dom = _parse_raw_space(cur)
    cur.expect("->")
    raw_cod = _parse_raw_space(cur)
    dom, dom_index = _build_space(raw_dom)

    if strict:
        missing = [l for l in raw_dom.order if l not in raw_cod.order]
        if missing:
            raise ParseError(
                cur.text, cur.pos, f"domain labels {missing} in the codomain (strict mode)"
            )
    cod_order = list(raw_cod.order) + [
        l for l in raw_dom.order if l not in set(raw_cod.order)
    ]
    cls = _Classes(cod_order)
    for a, b in raw_cod.merges:
        cls.union(a, b)
    groups = cls.classes()
    cod_index = {}
    for k, group in enumerate(groups):
        for l in group:
            cod_index[l] = k
    labels = tuple("=".join(g) for g in groups)
    rows = [0] * len(groups)
    for a, b in raw_cod.arrows + raw_dom.arrows:
        rows[cod_index[a]] |= 1 << cod_index[b]
    cod = space_from_relation(labels, rows)

    # each domain point goes to the codomain class of its labels, which must
    # agree for every label glued on the domain side
    dom_cls = _Classes(raw_dom.order)
    for a, b in raw_dom.merges:
        dom_cls.union(a, b)
    points = []
    for group_labels in dom_cls.classes():
        targets = {cod_index[l] for l in group_labels}
        if len(targets) > 1:
            raise ParseError(
                cur.text,
                cur.pos,
                f"labels {group_labels} glued in the domain but in different "
                "codomain classes",
            )
        points.append(targets.pop())
    try:
        return SpaceMap(dom, cod, tuple(points))
    except ValueError as exc:  # unreachable under the label-union convention
        raise ParseError(cur.text, cur.pos, f"a monotone assignment ({exc})")


def parse_map(text: str, strict: bool = False) -> SpaceMap:
    cur = _Cursor(text)
    m = _parse_map_at(cur, strict)
    if not cur.done():
        raise ParseError(text, cur.pos, "end of input")
    return m


def parse_class_expr(text: str) -> OrthExpr:
    cur = _Cursor(text)
    cur.expect("(")
    generators = [_parse_map_at(cur)]
    while cur.take(","):
        generators.append(_parse_map_at(cur))
    cur.expect(")")
    steps: list[Step] = []
    if cur.peek("_{<"):
        raise ParseError(text, cur.pos, "a step before any bound")
    while cur.take("^"):
        got = False
        while True:
            if cur.take("l"):
                steps.append(Step(Side.LEFT))
            elif cur.take("r"):
                steps.append(Step(Side.RIGHT))
            else:
                break
            got = True
            if cur.take("_{<"):
                n = cur.integer()
                cur.expect("}")
                steps[-1] = Step(steps[-1].side, n)
        if not got:
            raise ParseError(text, cur.pos, "'l' or 'r'")
    if not steps:
        raise ParseError(text, cur.pos, "at least one '^' step")
    if not cur.done():
        raise ParseError(text, cur.pos, "end of input")
    return OrthExpr(tuple(generators), tuple(steps))


# ---------------------------------------------------------------------------
# Rendering


def _safe_labels(space: FiniteSpace, prefix: str = "") -> tuple[str, ...]:
    labels = tuple(prefix + l for l in space.labels)
    if all(_SAFE_LABEL_RE.match(l) for l in labels) and len(set(labels)) == len(labels):
        return labels
    if space.n <= 26:
        return tuple(prefix + chr(ord("a") + i) for i in range(space.n))
    return tuple(f"{prefix}p{i}" for i in range(space.n))


def _mutual_classes(space: FiniteSpace) -> list[list[int]]:
    out = []
    seen = set()
    for i in range(space.n):
        if i in seen:
            continue
        cls = [
            j
            for j in range(space.n)
            if space.arrow(i, j) and space.arrow(j, i)
        ]
        seen.update(cls)
        out.append(cls)
    return out


def _space_chunks(space: FiniteSpace, labels) -> list[str]:
    classes = _mutual_classes(space)
    rep = {}
    for cls in classes:
        for p in cls:
            rep[p] = cls[0]
    chunks = []
    covered = set()
    for cls in classes:
        if len(cls) > 1:
            chunks.append("<->".join(labels[p] for p in cls))
            covered.update(cls)
    # covering arrows of the strict order on representatives
    reps = [c[0] for c in classes]
    for i in reps:
        for j in reps:
            if i == j or not space.arrow(i, j):
                continue
            if any(
                k not in (i, j) and space.arrow(i, k) and space.arrow(k, j)
                for k in reps
            ):
                continue  # implied by transitivity
            chunks.append(f"{labels[i]}->{labels[j]}")
            covered.update((i, j))
    for i in range(space.n):
        if i not in covered and rep[i] == i:
            chunks.append(labels[i])
    return chunks


def render_space(space: FiniteSpace) -> str:
    return "{" + ",".join(_space_chunks(space, _safe_labels(space))) + "}"


def _label_faithful(f: SpaceMap) -> bool:
    dl, cl = f.dom.labels, f.cod.labels
    if len(set(dl)) != len(dl) or len(set(cl)) != len(cl):
        return False
    if not all(_SAFE_LABEL_RE.match(l) for l in dl + cl):
        return False
    pos = {l: i for i, l in enumerate(cl)}
    return all(l in pos and pos[l] == f.points[i] for i, l in enumerate(dl))


def render_map(f: SpaceMap) -> str:
    if _label_faithful(f):
        return f"{render_space(f.dom)} -> {render_space(f.cod)}"
    dom_labels = _safe_labels(f.dom, "")
    cod_labels = _safe_labels(f.cod, "q")
    if set(dom_labels) & set(cod_labels):
        dom_labels = tuple("d" + l for l in dom_labels)
    dom_text = "{" + ",".join(_space_chunks(f.dom, dom_labels)) + "}"
    chunks = []
    for j in range(f.cod.n):
        srcs = [dom_labels[i] for i in range(f.dom.n) if f.points[i] == j]
        if srcs:
            chunks.append("=".join(srcs + [cod_labels[j]]))
    chunks.extend(_space_chunks(f.cod, cod_labels))
    return f"{dom_text} -> {{{','.join(chunks)}}}"


def render_expr(expr: OrthExpr) -> str:
    gens = ", ".join(render_map(g) for g in expr.generators)
    steps = "".join("^" + s.text() for s in expr.steps)
    return f"({gens}){steps}"
