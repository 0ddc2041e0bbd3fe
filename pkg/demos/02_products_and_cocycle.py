"""
The two products and the Hochschild two-cocycle relation
========================================================

The span of forests carries the associative concatenation * and the
magmatic product succ, which brackets a suffix of the left word with a
prefix of the right word in every possible way.  Together they satisfy

    (x succ y) * z + (x * y) succ z = x succ (y * z) + x * (y succ z).
"""

import itertools

from hochalg import enumerate_forests, format_element, parse_element, star, succ
from hochalg.algebra import Element

E = parse_element

# concatenation just glues words
print("| * [|,|]  =", format_element(star(E("|"), E("[|,|]"))))

# the magmatic product of a 3-leaf word with a leaf has 3 terms:
# bracket the last 1, 2, or all 3 trees with the new leaf
print("| | | succ |      =", format_element(succ(E("| | |"), E("|"))))

# and against a longer right word, prefixes of it enter the bracket too
print("| succ | [|,|]    =", format_element(succ(E("|"), E("| [|,|]"))))

# succ is magmatic: no associativity
left = succ(succ(E("|"), E("|")), E("|"))
right = succ(E("|"), succ(E("|"), E("|")))
print("(| succ |) succ | =", format_element(left))
print("| succ (| succ |) =", format_element(right), "  (different trees!)")
print()

# the two-cocycle relation, checked exhaustively in low degree
def cocycle_holds(x, y, z):
    return star(succ(x, y), z) + succ(star(x, y), z) == succ(x, star(y, z)) + star(x, succ(y, z))


basis = [Element.from_forest(f) for n in (1, 2) for f in enumerate_forests(n)]
checked = 0
for x, y, z in itertools.product(basis, repeat=3):
    assert cocycle_holds(x, y, z)
    checked += 1
print(f"two-cocycle relation holds on all {checked} low-degree basis triples")

# it also holds for arbitrary rational combinations
x = E("3/2*| - [|,|]")
y = E("| | + 2*|")
z = E("[|,[|,|]]")
print("and on a random-looking rational triple:", cocycle_holds(x, y, z))
