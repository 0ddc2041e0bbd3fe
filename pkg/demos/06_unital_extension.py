"""
Adjoining a unit
================

The unital extension adds an element 1 acting as a two-sided unit for
both products.  The coproduct becomes d(x) = 1 (x) x + x (x) 1 + D(x),
and the compatibility rules hold with the cross term subtracted instead
of added.
"""

from hochalg import (
    ONE,
    UnitalElement,
    check_unital_compatibility,
    format_tensor,
    format_unital_element,
    parse_element,
    parse_unital_element,
    unital_coproduct,
    unital_star,
    unital_succ,
)

bar = UnitalElement.from_element(parse_element("|"))

# 1 is a unit for both operations
print("1 * 1        =", format_unital_element(unital_star(ONE, ONE)))
print("1 succ [|,|] =", format_unital_element(unital_succ(ONE, parse_unital_element("[|,|]"))))
print("(1 + |) * |  =", format_unital_element(unital_star(parse_unital_element("1 + |"), bar)))
print()

# the unital coproduct pins d(1) = 1 (x) 1 and wraps D with unit terms
print("d(1)   =", format_tensor(unital_coproduct(ONE)))
print("d(|)   =", format_tensor(unital_coproduct(bar)))
print("d(| |) =", format_tensor(unital_coproduct(parse_unital_element("| |"))))
print()

# the minus-sign compatibility rules hold exactly
checks = [
    (ONE, ONE),
    (bar, ONE),
    (bar, bar),
    (parse_unital_element("1 + |"), parse_unital_element("[|,|]")),
]
for x, y in checks:
    for which in ("star", "succ"):
        ok = check_unital_compatibility(x, y, which)
        print(f"minus-sign {which} rule on ({format_unital_element(x)}, "
              f"{format_unital_element(y)}): {ok}")
