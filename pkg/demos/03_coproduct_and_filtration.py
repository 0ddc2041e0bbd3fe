"""
The infinitesimal coproduct, primitives, and connectedness
==========================================================

The coproduct D sends generators to zero and unfolds both products by
the infinitesimal compatibility rules.  Elements killed by D are called
primitive; iterating D long enough kills everything (connectedness), and
the number of steps needed filters the algebra.
"""

from hochalg import (
    coproduct,
    filtration_level,
    format_tensor,
    is_primitive,
    iterated_coproduct,
    parse_element,
)

E = parse_element

# generators are primitive by definition
print("D(|)         =", format_tensor(coproduct(E("|"))))

# a word of two leaves deconcatenates
print("D(| |)       =", format_tensor(coproduct(E("| |"))))

# the 2-corolla has the same coproduct, so their difference is primitive
print("D([|,|])     =", format_tensor(coproduct(E("[|,|]"))))
print("D([|,|]-| |) =", format_tensor(coproduct(E("[|,|] - | |"))))

# the 3-corolla is primitive on the nose
print("D([|,|,|])   =", format_tensor(coproduct(E("[|,|,|]"))))
print()

# iterated coproducts raise the tensor arity and eventually vanish
word = E("| | |")
print("D   (| | |) =", format_tensor(iterated_coproduct(word, 1)))
print("D^2 (| | |) =", format_tensor(iterated_coproduct(word, 2)))
print("D^3 (| | |) =", format_tensor(iterated_coproduct(word, 3)))
print()

# the filtration level is the first vanishing power, at most the degree
for text in ("|", "| |", "| | |", "[|,|] - | |", "| [|,|] + [|,|,|]"):
    x = E(text)
    print(f"filtration_level({text})".ljust(40), "=", filtration_level(x))

print()
print("is_primitive([|,|] - | |):", is_primitive(E("[|,|] - | |")))
print("is_primitive([|,|]):      ", is_primitive(E("[|,|]")))
