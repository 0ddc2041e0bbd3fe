"""
Primitives, brackets, and the PBW change of basis
=================================================

Two exactly checkable facts witness that the span of forests is cofree
over its primitives and that the primitives form the free algebra with
one n-ary bracket per arity:

  1. dim Prim_n equals the number of trees with n leaves (little
     Schroeder numbers), and
  2. the products of tree primitives, indexed by forests, form a basis:
     the change of basis is unitriangular in the canonical order.
"""

from hochalg import (
    enumerate_trees,
    format_element,
    generator,
    is_primitive,
    nary_bracket,
    parse_forest,
    parse_tree,
    pbw_basis_element,
    primitive_basis,
    tree_to_primitive,
)
from hochalg.linalg import is_invertible
from hochalg.verify import pbw_matrix

# primitive dimensions match tree counts degree by degree
for n in range(1, 6):
    print(f"degree {n}: dim Prim = {len(primitive_basis(n))},",
          f"trees = {len(enumerate_trees(n))}")
print()

# the n-ary bracket of primitives is primitive; on plain generators the
# brackets are (up to lower terms) the corollas
g = generator()
for n in (2, 3, 4):
    b = nary_bracket([g] * n)
    print(f"[|,...,|]_{n} =", format_element(b), "  primitive:", is_primitive(b))
print()

# every tree yields a primitive: itself plus canonically earlier forests
for text in ("[|,|]", "[|,[|,|]]"):
    t = parse_tree(text)
    print(f"P({text}) =", format_element(tree_to_primitive(t)))
print()

# multiplying tree primitives along a forest gives the PBW element
f = parse_forest("[|,|] |")
print("pbw([|,|] |) =", format_element(pbw_basis_element(f)))

# the change of basis is square and invertible in every degree
for n in range(1, 6):
    m = pbw_matrix(n)
    print(f"degree {n}: PBW matrix {m.nrows}x{m.ncols}, invertible: {is_invertible(m)}")
