"""hochalg: exact symbolic computation in the free Hoch-algebra.

A Hoch-algebra is an associative algebra with an extra magmatic product
satisfying the Hochschild two-cocycle relation.  The free one on a set of
generators has forests of planar rooted trees as a basis; this package
computes its two products, its infinitesimal coproduct, primitive
elements, and the Schroeder-number dimension counts, all in exact
rational arithmetic.
"""

from .trees import (
    Forest,
    ParseError,
    PlanarTree,
    compare,
    decompose,
    enumerate_forests,
    enumerate_trees,
    forest,
    format_forest,
    format_tree,
    graft,
    leaf,
    parse_forest,
    parse_tree,
)
from .algebra import (
    Element,
    add,
    format_element,
    generator,
    nary_bracket,
    parse_element,
    pbw_basis_element,
    scale,
    star,
    succ,
    succ_basis,
    tree_to_primitive,
)
from .coalgebra import (
    ONE,
    CoproductEngine,
    TensorElement,
    UnitalElement,
    check_compatibility,
    check_unital_compatibility,
    coproduct,
    coproduct_basis,
    filtration_level,
    format_tensor,
    format_unital_element,
    is_primitive,
    iterated_coproduct,
    parse_unital_element,
    primitive_basis,
    unital_coproduct,
    unital_ops,
    unital_star,
    unital_succ,
)
from .series import compose, hoch_series, schroeder, tinf_series

__version__ = "0.1.0"

__all__ = [
    "Forest",
    "ParseError",
    "PlanarTree",
    "compare",
    "decompose",
    "enumerate_forests",
    "enumerate_trees",
    "forest",
    "format_forest",
    "format_tree",
    "graft",
    "leaf",
    "parse_forest",
    "parse_tree",
    "Element",
    "add",
    "format_element",
    "generator",
    "nary_bracket",
    "parse_element",
    "pbw_basis_element",
    "scale",
    "star",
    "succ",
    "succ_basis",
    "tree_to_primitive",
    "ONE",
    "CoproductEngine",
    "TensorElement",
    "UnitalElement",
    "check_compatibility",
    "check_unital_compatibility",
    "coproduct",
    "coproduct_basis",
    "filtration_level",
    "format_tensor",
    "format_unital_element",
    "is_primitive",
    "iterated_coproduct",
    "parse_unital_element",
    "primitive_basis",
    "unital_coproduct",
    "unital_ops",
    "unital_star",
    "unital_succ",
    "compose",
    "hoch_series",
    "schroeder",
    "tinf_series",
]
