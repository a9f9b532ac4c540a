"""The lifting dictionary: one executable row per characterised property.

Each space property is either a single lifting check against a fixed small
map (possibly quantified over points of the space under test) or a class
membership statement about its terminal or initial arrow.  Each map property
is membership in an iterated orthogonal class.  Exact rows have a one-step
quantifier over explicit generators and decide membership outright; the
remaining rows produce bounded verdicts and are exercised by the
experimental suite only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..engine import Evaluator, OracleEntry, OracleTable, OrthExpr, Verdict, check_lifting
from .category import FINTOP
from .maps import SpaceMap, enumerate_maps
from .oracles import MapProperty, SpaceProperty, map_oracle
from .space import EMPTY, POINT, FiniteSpace, discrete


@dataclass(frozen=True)
class SpaceEntry:
    prop: SpaceProperty
    formula: str  # citation text: the formula itself
    template: str  # gen_vs_terminal | initial_vs_gen | inj_pairs_vs_gen | points_vs_gen | member
    text: str  # map text, or class-expression text for 'member'
    subject: str = "terminal"  # member rows: which arrow of X is tested
    exact: bool = True
    experimental: bool = False


@dataclass(frozen=True)
class MapEntry:
    prop: MapProperty
    formula: str
    expr_text: str | None  # None: oracle-only property, no lifting formula
    exact: bool = True
    experimental: bool = False


_SPACE_ENTRIES = (
    SpaceEntry(
        SpaceProperty.T0,
        "X is T0 iff {x<->y}->{x=y} lifts against X->{*}",
        "gen_vs_terminal",
        "{x<->y} -> {x=y}",
    ),
    SpaceEntry(
        SpaceProperty.R0,
        "X is R0 iff {x->y}->{x<->y} lifts against X->{*}",
        "gen_vs_terminal",
        "{x->y} -> {x<->y}",
    ),
    SpaceEntry(
        SpaceProperty.T1,
        "X is T1 iff {x->y}->{x=y} lifts against X->{*}",
        "gen_vs_terminal",
        "{x->y} -> {x=y}",
    ),
    SpaceEntry(
        SpaceProperty.HAUSDORFF,
        "X is Hausdorff iff each injective {x,y}->X lifts against "
        "{x->o<-y}->{x=o=y}",
        "inj_pairs_vs_gen",
        "{x->o<-y} -> {x=o=y}",
    ),
    SpaceEntry(
        SpaceProperty.URYSOHN,
        "X is Urysohn iff each injective {x,y}->X lifts against "
        "{x->x'<-X->y'<-y}->{x=x'=X=y'=y}",
        "inj_pairs_vs_gen",
        "{x->x'<-X->y'<-y} -> {x=x'=X=y'=y}",
    ),
    SpaceEntry(
        SpaceProperty.REGULAR,
        "X is regular iff each {x}->X lifts against "
        "{x->X<-U->F}->{x=X=U->F}",
        "points_vs_gen",
        "{x->X<-U->F} -> {x=X=U->F}",
    ),
    SpaceEntry(
        SpaceProperty.NORMAL,
        "X is normal iff {}->X lifts against "
        "{a<-U->x<-V->b}->{a<-U=x=V->b}",
        "initial_vs_gen",
        "{a<-U->x<-V->b} -> {a<-U=x=V->b}",
    ),
    SpaceEntry(
        SpaceProperty.COMPLETELY_NORMAL,
        "X completely normal iff {}->X lifts against "
        "{X<-A<->U->U'<-W->V'<-V<->B->X}->{U=U',V=V'} (formula uncertain)",
        "initial_vs_gen",
        "{X<-A<->U->U'<-W->V'<-V<->B->X} -> {U=U',V=V'}",
        experimental=True,
    ),
    SpaceEntry(
        SpaceProperty.EXTREMALLY_DISCONNECTED,
        "X extremally disconnected iff {}->X lifts against "
        "{U->Z',Z<-V}->{U->Z'=Z<-V}",
        "initial_vs_gen",
        "{U->Z',Z<-V} -> {U->Z'=Z<-V}",
    ),
    SpaceEntry(
        SpaceProperty.CONNECTED,
        "X connected or empty iff X->{*} in ({a,b}->{a=b})^l",
        "member",
        "({a,b}->{a=b})^l",
    ),
    SpaceEntry(
        SpaceProperty.NONEMPTY,
        "X nonempty iff X->{*} in ({}->{*})^l",
        "member",
        "({}->{*})^l",
    ),
    SpaceEntry(
        SpaceProperty.EMPTY,
        "X empty iff X->{*} in ({}->{*})^ll",
        "member",
        "({}->{*})^ll",
        exact=False,
        experimental=True,
    ),
    SpaceEntry(
        SpaceProperty.DISCRETE,
        "X discrete iff {}->X in ({}->{*})^rl",
        "member",
        "({}->{*})^rl",
        subject="initial",
        exact=False,
        experimental=True,
    ),
    SpaceEntry(
        SpaceProperty.ANTIDISCRETE,
        "X antidiscrete iff X->{*} in ({a<->b}->{a=b})^lr",
        "member",
        "({a<->b}->{a=b})^lr",
        exact=False,
        experimental=True,
    ),
)

_MAP_ENTRIES = (
    MapEntry(
        MapProperty.SURJECTIVE,
        "surjections = ({}->{*})^r",
        "({}->{*})^r",
    ),
    MapEntry(
        MapProperty.INJECTIVE,
        "injections = ({a,b}->{a=b})^r",
        "({a,b}->{a=b})^r",
    ),
    MapEntry(
        MapProperty.DENSE_IMAGE,
        "dense image = ({b}->{a->b})^l",
        "({b}->{a->b})^l",
    ),
    MapEntry(
        MapProperty.INDUCED_TOPOLOGY,
        "domain topology induced from the codomain = ({a->b}->{a=b})^l",
        "({a->b}->{a=b})^l",
    ),
    MapEntry(
        MapProperty.FIBREWISE_T0,
        "all fibres T0 = ({a<->b}->{a=b})^r",
        "({a<->b}->{a=b})^r",
    ),
    MapEntry(
        MapProperty.FIBREWISE_T1,
        "all fibres T1 = ({a->b}->{a=b})^r",
        "({a->b}->{a=b})^r",
    ),
    MapEntry(
        MapProperty.CLOPEN_IMAGE_LAW,
        "every nonempty clopen of the codomain meets the image = "
        "({a}->{a,b})^l",
        "({a}->{a,b})^l",
    ),
    MapEntry(
        MapProperty.OPEN_MAP,
        "open maps of finite spaces = ({b}->{a->b})^r",
        "({b}->{a->b})^r",
    ),
    MapEntry(
        MapProperty.NONEMPTY_DOMAIN_LAW,
        "nonempty domain, or both sides empty = ({}->{*})^l",
        "({}->{*})^l",
    ),
    MapEntry(
        MapProperty.PI0_INJECTIVE,
        "component map injective: candidate reading of ({a,b}->{a=b})^l",
        "({a,b}->{a=b})^l",
        experimental=True,
    ),
    MapEntry(
        MapProperty.SUBSPACE_EMBEDDING,
        "subsets (injective, topology induced) = ({}->{*})^rr",
        "({}->{*})^rr",
        exact=False,
        experimental=True,
    ),
    MapEntry(
        MapProperty.CLOSED_INCLUSION,
        "closed inclusions = ({b}->{a->b})^lr",
        "({b}->{a->b})^lr",
        exact=False,
        experimental=True,
    ),
    MapEntry(
        MapProperty.CLOSED_MAP,
        "closed maps: oracle only; ({a}->{a->b})^r members are closed",
        None,
        experimental=True,
    ),
    MapEntry(
        MapProperty.DISCRETE_EXTENSION,
        "inclusion into a disjoint discrete extension = ({}->{*})^rl",
        "({}->{*})^rl",
        exact=False,
        experimental=True,
    ),
)


def lifting_dictionary() -> dict:
    """Property -> dictionary entry, the single source of truth for the
    harness suites."""
    table: dict = {e.prop: e for e in _SPACE_ENTRIES}
    table.update({e.prop: e for e in _MAP_ENTRIES})
    return table


@lru_cache(maxsize=None)
def _map(text: str) -> SpaceMap:
    from ..notation import parse_map

    return parse_map(text)


@lru_cache(maxsize=None)
def _expr(text: str) -> OrthExpr:
    from ..notation import parse_class_expr

    return parse_class_expr(text)


def terminal_arrow(x: FiniteSpace) -> SpaceMap:
    return SpaceMap(x, POINT, (0,) * x.n)


def initial_arrow(x: FiniteSpace) -> SpaceMap:
    return SpaceMap(EMPTY, x, ())


def space_formula_holds(prop: SpaceProperty, x: FiniteSpace) -> bool:
    """Evaluate an exact (plain lifting) dictionary row on a space."""
    entry = lifting_dictionary()[prop]
    if entry.template == "gen_vs_terminal":
        return check_lifting(_map(entry.text), terminal_arrow(x), FINTOP).holds
    if entry.template == "initial_vs_gen":
        return check_lifting(initial_arrow(x), _map(entry.text), FINTOP).holds
    if entry.template == "inj_pairs_vs_gen":
        g = _map(entry.text)
        pair = discrete(2)
        return all(
            check_lifting(SpaceMap(pair, x, (p, q)), g, FINTOP).holds
            for p in range(x.n)
            for q in range(x.n)
            if p != q
        )
    if entry.template == "points_vs_gen":
        g = _map(entry.text)
        pt = discrete(1)
        return all(
            check_lifting(SpaceMap(pt, x, (p,)), g, FINTOP).holds
            for p in range(x.n)
        )
    raise ValueError(f"{prop} is a class-membership row, use space_member_verdict")


def space_member_verdict(
    prop: SpaceProperty, x: FiniteSpace, evaluator: Evaluator
) -> Verdict:
    """Evaluate a class-membership dictionary row on a space."""
    entry = lifting_dictionary()[prop]
    if entry.template != "member":
        raise ValueError(f"{prop} is a plain lifting row, use space_formula_holds")
    subject = initial_arrow(x) if entry.subject == "initial" else terminal_arrow(x)
    return evaluator.member(_expr(entry.text), subject)


def map_member_verdict(prop: MapProperty, f: SpaceMap, evaluator: Evaluator) -> Verdict:
    entry = lifting_dictionary()[prop]
    if entry.expr_text is None:
        raise ValueError(f"{prop} has no lifting formula")
    return evaluator.member(_expr(entry.expr_text), f)


def default_oracles(verified_bound: int = 4) -> OracleTable:
    """Oracle registrations for the exact one-step map characterisations.

    The verification harness checks every one of these against the lifting
    definition on all morphisms within ``verified_bound`` before anything
    downstream relies on them (tests/test_acceptance.py is that check).
    """
    table = OracleTable()
    for entry in _MAP_ENTRIES:
        if not entry.exact or entry.experimental or entry.expr_text is None:
            continue
        expr = _expr(entry.expr_text)
        if len(expr.steps) != 1:
            continue
        prop = entry.prop
        table.register(
            expr,
            FINTOP,
            OracleEntry(
                name=prop.value,
                predicate=lambda m, _p=prop: map_oracle(m, _p),
                verified_bound=verified_bound,
            ),
        )
    return table


C_T_TEXT = "({a<->b}->{a=b}, {a->b}->{a=b}, {b}->{a->b}, {a<-o->b}->{a=o=b})^lr"

PROPERNESS_CORE_TEXT = "({a}->{a->b})^r_{<5}"
