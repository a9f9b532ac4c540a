from .space import (
    ANTIDISCRETE2,
    DISCRETE2,
    EMPTY,
    MAX_POINTS,
    POINT,
    SIERPINSKI,
    FiniteSpace,
    SizeGuardError,
    antidiscrete,
    discrete,
    space_from_arrows,
    space_from_relation,
)
from .maps import SpaceMap, compose, enumerate_maps, hom_count, identity, initial_map, terminal_map
from .canon import (
    canonical_form,
    canonical_space,
    count_classes,
    enumerate_spaces,
    is_homeomorphic,
    map_canonical_form,
    maps_isomorphic,
)
from .build import coproduct, coproduct_map, product, product_map, pullback, pushout
from .oracles import MapProperty, SpaceProperty, components, map_oracle, space_oracle
from .category import FINTOP, FinTop

__all__ = [
    "ANTIDISCRETE2",
    "DISCRETE2",
    "EMPTY",
    "FINTOP",
    "FinTop",
    "FiniteSpace",
    "MAX_POINTS",
    "MapProperty",
    "POINT",
    "SIERPINSKI",
    "SizeGuardError",
    "SpaceMap",
    "SpaceProperty",
    "antidiscrete",
    "canonical_form",
    "canonical_space",
    "components",
    "compose",
    "coproduct",
    "coproduct_map",
    "count_classes",
    "discrete",
    "enumerate_maps",
    "enumerate_spaces",
    "hom_count",
    "identity",
    "initial_map",
    "is_homeomorphic",
    "map_canonical_form",
    "map_oracle",
    "maps_isomorphic",
    "product",
    "product_map",
    "pullback",
    "pushout",
    "space_from_arrows",
    "space_from_relation",
    "space_oracle",
    "terminal_map",
]
