"""
Generating series and the forest = words-of-trees identity
==========================================================

The tree series T(x) solves T = x + T^2/(1 - T) (a tree is a leaf or a
grafting of at least two trees).  Forests are nonempty words of trees,
so their series is x/(1-x) composed with T.  Everything here is exact
rational arithmetic; no square roots are ever taken.
"""

from hochalg import enumerate_forests, enumerate_trees
from hochalg.series import (
    compose,
    geometric_series,
    hoch_series,
    large_by_convolution,
    schroeder,
    tinf_series,
)

N = 10
trees = tinf_series(N)
forests = hoch_series(N)

print("tree   series:", [int(trees.coefficient(n)) for n in range(1, N + 1)])
print("forest series:", [int(forests.coefficient(n)) for n in range(1, N + 1)])

# the defining identity, coefficient by coefficient
assert forests == compose(geometric_series(N), tinf_series(N))
print("forest series == x/(1-x) o tree series: True")

# the same identity at the level of single counts, by direct convolution
for n in (5, 8):
    print(f"large({n}) by convolution of littles: {large_by_convolution(n)}",
          f"(series says {schroeder('large', n)})")

# and both agree with brute-force enumeration
for n in range(1, 8):
    assert schroeder("little", n) == len(enumerate_trees(n))
    assert schroeder("large", n) == len(enumerate_forests(n))
print("series agree with brute-force enumeration for degrees 1..7")
