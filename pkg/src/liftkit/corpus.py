"""The bundled notation corpus.

Every arrow-notation string the law registry, the docs and the CLI help rely
on, in one place, so tests can assert that each of them parses.  The names
group the strings by what they denote.
"""

SPACES = (
    "{}",
    "{*}",
    "{a}",
    "{a,b}",
    "{a->b}",
    "{a<->b}",
    "{a=b}",
    "{0}",
    "{0<->1}",
    "{x->o<-y}",
    "{x=o=y}",
    "{a<-o->b}",
    "{a=o=b}",
    "{a<-U->x<-V->b}",
    "{a<-U=x=V->b}",
    "{U=x=V}",
    "{x->X<-U->F}",
    "{x=X=U->F}",
    "{x->x'<-X->y'<-y}",
    "{x=x'=X=y'=y}",
    "{U->Z',Z<-V}",
    "{U->Z'=Z<-V}",
    "{Z'=Z}",
    "{X<-A<->U->U'<-W->V'<-V<->B->X}",
    "{U=U',V=V'}",
)

MAPS = (
    "{} -> {*}",
    "{a,b} -> {a=b}",
    "{a<->b} -> {a=b}",
    "{a->b} -> {a=b}",
    "{x->y} -> {x<->y}",
    "{b} -> {a->b}",
    "{a} -> {a->b}",
    "{a} -> {a,b}",
    "{a} -> {b}",
    "{a} -> {a<->b}",
    "{0} -> {0<->1}",
    "{x->o<-y} -> {x=o=y}",
    "{a<-o->b} -> {a=o=b}",
    "{a<-U->x<-V->b} -> {a<-U=x=V->b}",
    "{a<-U->x<-V->b} -> {U=x=V}",
    "{x->X<-U->F} -> {x=X=U->F}",
    "{x->x'<-X->y'<-y} -> {x=x'=X=y'=y}",
    "{U->Z',Z<-V} -> {U->Z'=Z<-V}",
    "{U->Z',Z<-V} -> {Z'=Z}",
    "{X<-A<->U->U'<-W->V'<-V<->B->X} -> {U=U',V=V'}",
)

EXPRS = (
    "({}->{*})^r",
    "({}->{*})^rr",
    "({}->{*})^rl",
    "({}->{*})^rll",
    "({}->{*})^l",
    "({}->{*})^ll",
    "({}->{*})^lll",
    "({0}->{0<->1})^l",
    "({b}->{a->b})^l",
    "({b}->{a->b})^lr",
    "({b}->{a->b})^lrr",
    "({b}->{a->b})^r",
    "({b}->{a->b})^r_{<5}^lr",
    "({a}->{a->b})^l",
    "({a}->{a->b})^r",
    "({a}->{a->b})^r_{<5}",
    "({a}->{a->b})^r_{<5}^lr",
    "({a<->b}->{a=b})^l",
    "({a<->b}->{a=b})^r",
    "({a<->b}->{a=b})^lr",
    "({a->b}->{a=b})^l",
    "({a->b}->{a=b})^r",
    "({a,b}->{a=b})^l",
    "({a,b}->{a=b})^r",
    "({a,b}->{a=b})^lr",
    "({a,b}->{a=b})^rr",
    "({a}->{a<->b})^l",
    "({a}->{a<->b})^r",
    "({a}->{a,b})^l",
    "({a<->b}->{a=b}, {a->b}->{a=b}, {b}->{a->b}, {a<-o->b}->{a=o=b})^lr",
    "({a<-U->x<-V->b}->{a<-U=x=V->b})^lr",
)
