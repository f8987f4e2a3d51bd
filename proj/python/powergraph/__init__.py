"""Power graphs of finite groups and their graph products."""

from ._core import (
    FiniteGroup,
    Generalization,
    Graph,
    GraphError,
    GroupError,
    SpecParseError,
    aps_intersect,
    are_isomorphic,
    cartesian_product_graph,
    cyclic,
    dihedral,
    direct_product,
    direct_product_graph,
    exponent_set_window,
    find_isomorphism,
    generalized_product_graph,
    has_universal_vertex,
    normal_product_graph,
    parse_group,
    power_graph,
    power_weights,
    quaternion8,
    symmetric,
    verify_all,
)

__all__ = [name for name in dir() if not name.startswith("_")]
