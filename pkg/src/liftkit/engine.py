"""Category-generic lifting properties and iterated orthogonal classes.

``check_lifting(f, g, cat)`` decides f ⧄ g by exhausting commuting squares
and searching diagonals.  ``Evaluator`` evaluates iterated orthogonal
expressions such as ``(C)^r_{<5}^l^r``: each step flips sides, an explicit
``<n`` bound restricts a step's class to morphisms whose domain and codomain
both have fewer than n points, and quantifiers over classes that are not
explicitly bounded are truncated at a working bound, which the returned
``Verdict`` records honestly.

Verdict semantics:

* single-step expressions over explicit generators are always Exact;
* a truncated quantifier can only make a *yes* too eager, so a positive
  answer there is ``BOUNDED_YES`` (an over-approximation of membership);
* a failure witnessed by a morphism that provably belongs to the inner
  class refutes membership in the full, unbounded class as well, so such a
  ``BOUNDED_NO`` is definitive.
"""

from __future__ import annotations

import enum
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable, Iterable


class Category(ABC):
    """A finitely enumerable category: everything the engine needs to
    exhaust commuting squares and quantify over morphisms up to a size."""

    #: objects above this size are too expensive to canonicalise; results
    #: about them are computed but not memoised
    cache_size_limit = 5

    @abstractmethod
    def objects(self, max_size: int) -> list:
        """Canonical representatives of objects of size <= max_size."""

    @abstractmethod
    def hom(self, a, b) -> tuple:
        """All morphisms a -> b, duplicate-free, in a fixed order."""

    @abstractmethod
    def compose(self, f, g):
        """Diagrammatic composition: f first, then g."""

    @abstractmethod
    def identity(self, a):
        ...

    @abstractmethod
    def dom(self, f):
        ...

    @abstractmethod
    def cod(self, f):
        ...

    @abstractmethod
    def size(self, a) -> int:
        ...

    @abstractmethod
    def obj_key(self, a):
        """Canonical form: equal iff the objects are isomorphic."""

    @abstractmethod
    def mor_key(self, f):
        """Canonical form in the arrow category: equal iff the morphisms are
        isomorphic via a commuting square of isomorphisms."""

    def diagonals(self, f, i, g, j) -> Iterable:
        """Candidates d: cod(f) -> dom(g) with f;d = i and d;g = j.

        The default filters the full hom-set; instances may override with a
        constraint-propagating search.
        """
        for d in self.hom(self.cod(f), self.dom(g)):
            if self.compose(f, d) == i and self.compose(d, g) == j:
                yield d

    def render(self, f) -> str:
        return repr(f)

    def morphisms(self, max_size: int) -> list:
        """One representative per isomorphism class of morphisms between
        objects of size <= max_size, in canonical order."""
        cache = getattr(self, "_mor_cache", None)
        if cache is None:
            cache = self._mor_cache = {}
        if max_size not in cache:
            reps = {}
            for a in self.objects(max_size):
                for b in self.objects(max_size):
                    for f in self.hom(a, b):
                        key = self.mor_key(f)
                        if key not in reps:
                            reps[key] = f
            cache[max_size] = [reps[k] for k in sorted(reps)]
        return cache[max_size]


@dataclass(frozen=True)
class Square:
    """A commuting square (i, j) around a pair (f, g)."""

    i: Any
    j: Any


@dataclass(frozen=True)
class LiftResult:
    holds: bool
    square: Square | None = None  # counterexample, or the square the diagonal fills
    diagonal: Any = None

    def __bool__(self):
        return self.holds


def check_lifting(f, g, cat: Category) -> LiftResult:
    """Decide f ⧄ g: every commuting square (i, j) with i;g = f;j admits a
    diagonal d with f;d = i and d;g = j.

    Empty hom-sets make the property hold vacuously.  The returned witness is
    the first counterexample square (or first filled square) in the canonical
    hom enumeration order, so results are reproducible.
    """
    A, B = cat.dom(f), cat.cod(f)
    X, Y = cat.dom(g), cat.cod(g)
    first_filled = None
    for i in cat.hom(A, X):
        ig = cat.compose(i, g)
        for j in cat.hom(B, Y):
            if ig != cat.compose(f, j):
                continue
            d = next(iter(cat.diagonals(f, i, g, j)), None)
            if d is None:
                return LiftResult(False, Square(i, j), None)
            if first_filled is None:
                first_filled = (Square(i, j), d)
    if first_filled is None:
        return LiftResult(True, None, None)
    return LiftResult(True, first_filled[0], first_filled[1])


# ---------------------------------------------------------------------------
# Iterated orthogonal expressions


class Side(enum.Enum):
    LEFT = "l"
    RIGHT = "r"


@dataclass(frozen=True)
class Step:
    side: Side
    bound: int | None = None  # "<bound" on both domain and codomain size

    def text(self) -> str:
        return self.side.value + (f"_{{<{self.bound}}}" if self.bound else "")


@dataclass(frozen=True)
class OrthExpr:
    generators: tuple
    steps: tuple[Step, ...]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("empty generator list")

    def inner(self) -> "OrthExpr":
        return OrthExpr(self.generators, self.steps[:-1])

    def key(self, cat: Category):
        return (
            tuple(sorted(cat.mor_key(m) for m in self.generators)),
            tuple((s.side.value, s.bound) for s in self.steps),
        )


class UnboundedClassError(ValueError):
    """An inner quantifier ranges over an unbounded class and no bound or
    registered oracle makes it enumerable."""


class VerdictKind(enum.Enum):
    EXACT_YES = "ExactYes"
    EXACT_NO = "ExactNo"
    BOUNDED_YES = "BoundedYes"
    BOUNDED_NO = "BoundedNo"


@dataclass(frozen=True)
class Approximation:
    step: int  # 1-based index of the step whose quantifier was truncated
    bound: int  # morphism size cap that was used
    effect: str  # 'over': membership in the step's class is over-approximated


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    witness: Any = None  # inner-class morphism the candidate failed against
    approximations: tuple[Approximation, ...] = ()
    definitive: bool = True
    via_oracle: str | None = None

    @property
    def yes(self) -> bool:
        return self.kind in (VerdictKind.EXACT_YES, VerdictKind.BOUNDED_YES)

    @property
    def exact(self) -> bool:
        return self.kind in (VerdictKind.EXACT_YES, VerdictKind.EXACT_NO)

    def describe(self) -> str:
        bits = [self.kind.value]
        if self.via_oracle:
            bits.append(f"oracle:{self.via_oracle}")
        for a in self.approximations:
            bits.append(f"step{a.step}~{a.effect}@<={a.bound}")
        if not self.definitive:
            bits.append("witness-not-definitive")
        return " ".join(bits)


@dataclass(frozen=True)
class OracleEntry:
    name: str
    predicate: Callable[[Any], bool]
    verified_bound: int  # size up to which oracle == lifting was checked


class OracleTable:
    """Registered exact characterisations of orthogonal classes.

    Registration is only sound once the characterisation has been verified
    to agree with the lifting definition at the working bound; the harness
    does that before it registers anything (the bound is recorded here).
    """

    def __init__(self):
        self._entries: dict = {}

    def register(self, expr: OrthExpr, cat: Category, entry: OracleEntry):
        self._entries[expr.key(cat)] = entry

    def lookup(self, expr: OrthExpr, cat: Category) -> OracleEntry | None:
        return self._entries.get(expr.key(cat))

    def copy(self) -> "OracleTable":
        t = OracleTable()
        t._entries = dict(self._entries)
        return t


@dataclass
class _ClassEnum:
    members: list  # (morphism, Verdict) pairs, verdict.yes only
    complete: bool  # enumeration equals the entire class
    bound: int  # size cap used for the enumeration
    truncated_steps: tuple[Approximation, ...] = ()


class Evaluator:
    """Evaluates membership and enumerations of iterated orthogonal classes.

    ``work_bound`` caps quantifiers over steps that carry no explicit bound;
    with ``strict=True`` such steps raise ``UnboundedClassError`` instead
    (unless an oracle is registered for the class in question).
    """

    def __init__(
        self,
        cat: Category,
        work_bound: int = 4,
        oracles: OracleTable | None = None,
        strict: bool = False,
    ):
        self.cat = cat
        self.work_bound = work_bound
        self.oracles = oracles or OracleTable()
        self.strict = strict
        self._member_cache: dict = {}
        self._enum_cache: dict = {}

    # -- membership --------------------------------------------------------

    def member(self, expr: OrthExpr, h) -> Verdict:
        """Verdict for h ∈ expr."""
        if not expr.steps:
            key = self.cat.mor_key(h)
            ok = any(self.cat.mor_key(g) == key for g in expr.generators)
            return Verdict(VerdictKind.EXACT_YES if ok else VerdictKind.EXACT_NO)
        # canonical forms of large objects (products of members, pushouts)
        # are expensive; only memoize morphisms of enumerable size
        limit = self.cat.cache_size_limit
        cacheable = (
            self.cat.size(self.cat.dom(h)) <= limit
            and self.cat.size(self.cat.cod(h)) <= limit
        )
        if not cacheable:
            return self._member(expr, h)
        cache_key = (expr.key(self.cat), self.cat.mor_key(h))
        hit = self._member_cache.get(cache_key)
        if hit is not None:
            return hit
        verdict = self._member(expr, h)
        self._member_cache[cache_key] = verdict
        return verdict

    def _member(self, expr: OrthExpr, h) -> Verdict:
        oracle = self.oracles.lookup(expr, self.cat)
        if oracle is not None:
            ok = oracle.predicate(h)
            kind = VerdictKind.EXACT_YES if ok else VerdictKind.EXACT_NO
            return Verdict(kind, via_oracle=oracle.name)
        step = expr.steps[-1]
        inner = self._inner_enum(expr)
        side = step.side
        bad_soft = None
        for g, gv in inner.members:
            if not self._lifts(h, g, side):
                if gv.exact:
                    # the witness certainly belongs to the inner class, so it
                    # refutes membership in the unbounded class as well
                    kind = (
                        VerdictKind.EXACT_NO
                        if inner.complete
                        else VerdictKind.BOUNDED_NO
                    )
                    return Verdict(
                        kind,
                        witness=g,
                        approximations=inner.truncated_steps,
                        definitive=True,
                    )
                if bad_soft is None:
                    bad_soft = g
        if bad_soft is not None:
            # failed only against possible (not certain) members of the
            # inner class: refutation is not definitive
            return Verdict(
                VerdictKind.BOUNDED_NO,
                witness=bad_soft,
                approximations=inner.truncated_steps,
                definitive=False,
            )
        if inner.complete:
            return Verdict(VerdictKind.EXACT_YES)
        return Verdict(
            VerdictKind.BOUNDED_YES,
            approximations=inner.truncated_steps,
            definitive=False,
        )

    def _lifts(self, h, g, side: Side) -> bool:
        if side is Side.LEFT:
            return check_lifting(h, g, self.cat).holds
        return check_lifting(g, h, self.cat).holds

    # -- enumeration -------------------------------------------------------

    def _inner_enum(self, expr: OrthExpr) -> _ClassEnum:
        """Enumerate the class quantified over by the last step of expr."""
        inner_expr = expr.inner()
        depth = len(expr.steps)
        if not inner_expr.steps:
            members = [
                (g, Verdict(VerdictKind.EXACT_YES)) for g in inner_expr.generators
            ]
            return _ClassEnum(members, complete=True, bound=0)
        inner_step = inner_expr.steps[-1]
        if inner_step.bound is not None:
            bound = inner_step.bound - 1
            explicit = True
        else:
            oracle = self.oracles.lookup(inner_expr, self.cat)
            if self.strict and oracle is None:
                raise UnboundedClassError(
                    f"step {depth - 1} quantifies over an unbounded class; "
                    "give it a <n bound or register an oracle"
                )
            bound = self.work_bound
            explicit = False
        enum = self.enumerate_class(inner_expr, bound)
        members = [(g, v) for g, v in enum if v.yes]
        # the enumeration equals the whole inner class only if the bound is
        # part of the expression and membership below it was exact
        complete = explicit and all(v.exact for _, v in members)
        truncated = ()
        if not explicit:
            truncated = (Approximation(depth, bound, "over"),)
        extra = tuple(
            a for _, v in members for a in v.approximations
        )
        return _ClassEnum(
            members,
            complete=complete,
            bound=bound,
            truncated_steps=tuple(dict.fromkeys(truncated + extra)),
        )

    def enumerate_class(self, expr: OrthExpr, output_bound: int):
        """(morphism representative, Verdict) pairs for every isomorphism
        class of morphisms within output_bound, in canonical order."""
        if output_bound < 0:
            raise ValueError("output bound must be nonnegative")
        cache_key = (expr.key(self.cat), output_bound)
        hit = self._enum_cache.get(cache_key)
        if hit is None:
            hit = [
                (m, self.member(expr, m))
                for m in self.cat.morphisms(output_bound)
            ]
            self._enum_cache[cache_key] = hit
        return hit


def is_member_one_step(expr: OrthExpr, h, cat: Category) -> Verdict:
    """Exact membership for a single-step expression over explicit generators."""
    if len(expr.steps) != 1:
        raise ValueError("expression must have exactly one step")
    return Evaluator(cat).member(expr, h)


def member(
    expr: OrthExpr,
    h,
    cat: Category,
    work_bound: int = 4,
    oracles: OracleTable | None = None,
    strict: bool = False,
) -> Verdict:
    return Evaluator(cat, work_bound, oracles, strict).member(expr, h)
