"""
Planar rooted trees, forests, and Schroeder numbers
===================================================

Trees are written in a bracket notation: '|' is a leaf, '[|,|]' is two
leaves under a root, and so on.  A forest is a space-separated word of
trees.  Counting trees by leaves gives the little Schroeder numbers;
counting forests gives the large ones.
"""

from hochalg import (
    decompose,
    enumerate_forests,
    enumerate_trees,
    format_forest,
    format_tree,
    graft,
    leaf,
    parse_forest,
)

# build the 3-leaf trees by hand: graft joins trees under a new root
bar = leaf()
corolla = graft([bar, bar])
print("graft(|, |)        =", format_tree(corolla))
print("graft([|,|], |)    =", format_tree(graft([corolla, bar])))
print("graft(|, [|,|])    =", format_tree(graft([bar, corolla])))
print("graft(|, |, |)     =", format_tree(graft([bar, bar, bar])))

# decompose is the exact inverse: the root's ordered children
print("decompose([[|,|],|]) =", tuple(map(format_tree, decompose(graft([corolla, bar])))))
print()

# every degree is enumerated in a canonical order (the all-leaves word
# first, then fewer and fewer trees)
for n in range(1, 5):
    forests = enumerate_forests(n)
    print(f"degree {n}: {len(forests)} forests")
    if n <= 3:
        for f in forests:
            print("   ", format_forest(f))

# the counts are the Schroeder numbers
print()
print("trees  per degree:", [len(enumerate_trees(n)) for n in range(1, 8)])
print("forests per degree:", [len(enumerate_forests(n)) for n in range(1, 8)])

# text round-trips are exact, whitespace inside brackets is free
f = parse_forest("[ | , [|,|] ]  |")
print()
print("parsed and canonicalized:", format_forest(f))

# leaves can carry generator labels for the multi-generator algebra
g = parse_forest("|1 [|,|2]", alphabet_size=3)
print("labeled forest:", format_forest(g))
print("with 2 generators there are", len(enumerate_trees(3, 2)), "trees of degree 3 (3 * 2^3)")
