"""Verification suites: each check recomputes an identity two ways.

Every suite returns a list of CheckResult and never raises on a FAIL; the
CLI turns the results into a PASS/FAIL table and an exit code.  Suites
accept an optional CoproductEngine so the negative-control tests can run
them against a deliberately broken coproduct.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from . import linalg
from .algebra import (
    Element,
    format_element,
    nary_bracket,
    parse_element,
    pbw_basis_element,
    star,
    succ,
)
from .coalgebra import (
    ONE,
    CoproductEngine,
    TensorElement,
    UnitalElement,
    apply_coproduct_at,
    check_compatibility,
    check_unital_compatibility,
    filtration_level,
    is_primitive,
    iterated_coproduct,
    primitive_basis,
    tensor_of_elements,
    unital_coproduct,
    unital_ops,
)
from .series import (
    compose,
    geometric_series,
    hoch_series,
    large_by_convolution,
    schroeder,
    tinf_series,
)
from .trees import Forest, enumerate_forests, enumerate_trees, parse_forest

RANDOM_SEED = 271828

LITTLE_SCHROEDER = (1, 1, 3, 11, 45, 197, 903, 4279, 20793)
LARGE_SCHROEDER = (1, 2, 6, 22, 90, 394, 1806, 8558, 41586)


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _result(suite: str, name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(suite, name, bool(passed), detail)


def random_element(
    rng: random.Random, max_degree: int = 3, max_terms: int = 3, alphabet_size: int = 1
) -> Element:
    """A small random linear combination of basis forests."""
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        degree = rng.randint(1, max_degree)
        forests = enumerate_forests(degree, alphabet_size)
        f = forests[rng.randrange(len(forests))]
        num = rng.randint(-9, 9) or 1
        den = rng.randint(1, 9)
        terms.append((f, Fraction(num, den)))
    return Element(terms)


def _basis_tuples(total_degree: int, arity: int) -> Iterator[tuple[Forest, ...]]:
    """All tuples of basis forests whose degrees sum to at most total_degree."""

    def rec(remaining: int, slots: int) -> Iterator[tuple[Forest, ...]]:
        if slots == 0:
            yield ()
            return
        for d in range(1, remaining - (slots - 1) + 1):
            for f in enumerate_forests(d):
                for rest in rec(remaining - d, slots - 1):
                    yield (f,) + rest

    return rec(total_degree, arity)


# --- suites -------------------------------------------------------------


def suite_dims(max_degree: int = 5, engine: CoproductEngine | None = None) -> list[CheckResult]:
    """Enumerated tree/forest counts against the series oracles and the
    known Schroeder values."""
    out = []
    tree_series = tinf_series(max_degree)
    forest_series = hoch_series(max_degree)
    for n in range(1, max_degree + 1):
        t_count = len(enumerate_trees(n))
        f_count = len(enumerate_forests(n))
        t_ok = t_count == tree_series.coefficient(n)
        f_ok = f_count == forest_series.coefficient(n)
        if n <= len(LITTLE_SCHROEDER):
            t_ok = t_ok and t_count == LITTLE_SCHROEDER[n - 1]
            f_ok = f_ok and f_count == LARGE_SCHROEDER[n - 1]
        out.append(
            _result("dims", f"degree {n}: trees={t_count} forests={f_count}", t_ok and f_ok)
        )
    return out


def suite_genfunc(max_degree: int = 12, engine: CoproductEngine | None = None) -> list[CheckResult]:
    """Forest series == geometric composed with tree series; convolution
    identity for the large Schroeder numbers."""
    order = max(max_degree, 2)
    lhs = hoch_series(order)
    rhs = compose(geometric_series(order), tinf_series(order))
    out = [_result("genfunc", f"composition identity to order {order}", lhs == rhs)]
    conv_ok = all(
        large_by_convolution(n) == schroeder("large", n) for n in range(1, min(order, 9) + 1)
    )
    out.append(_result("genfunc", f"convolution identity to order {min(order, 9)}", conv_ok))
    return out


def suite_products(max_degree: int = 5, engine: CoproductEngine | None = None) -> list[CheckResult]:
    """The two worked magmatic products, term for term."""
    checks = [
        ("| | |", "|", "| | [|,|] + | [|,|,|] + [|,|,|,|]"),
        ("|", "| [|,|]", "[|,|] [|,|] + [|,|,[|,|]]"),
    ]
    out = []
    for left, right, expected in checks:
        got = format_element(succ(parse_element(left), parse_element(right)))
        out.append(
            _result(
                "products",
                f"({left}) succ ({right})",
                got == expected,
                f"got {got}",
            )
        )
    return out


def _cocycle_holds(x: Element, y: Element, z: Element) -> bool:
    lhs = star(succ(x, y), z) + succ(star(x, y), z)
    rhs = succ(x, star(y, z)) + star(x, succ(y, z))
    return lhs == rhs


def suite_cocycle(
    max_degree: int = 6, engine: CoproductEngine | None = None, n_random: int = 100
) -> list[CheckResult]:
    """The Hochschild two-cocycle relation, exhaustively on basis triples
    of bounded total degree and on seeded random elements."""
    bad = 0
    count = 0
    for x, y, z in _basis_tuples(max_degree, 3):
        count += 1
        if not _cocycle_holds(Element.from_forest(x), Element.from_forest(y), Element.from_forest(z)):
            bad += 1
    out = [
        _result("cocycle", f"all {count} basis triples, total degree <= {max_degree}", bad == 0)
    ]
    rng = random.Random(RANDOM_SEED)
    rand_bad = sum(
        not _cocycle_holds(random_element(rng), random_element(rng), random_element(rng))
        for _ in range(n_random)
    )
    out.append(_result("cocycle", f"{n_random} random element triples", rand_bad == 0))
    return out


def suite_coassoc(max_degree: int = 6, engine: CoproductEngine | None = None) -> list[CheckResult]:
    """(D (x) id) D == (id (x) D) D on all basis forests."""
    engine = engine or CoproductEngine()
    bad = 0
    count = 0
    for n in range(1, max_degree + 1):
        for f in enumerate_forests(n):
            count += 1
            d = engine.coproduct_basis(f)
            if apply_coproduct_at(d, 0, engine) != apply_coproduct_at(d, 1, engine):
                bad += 1
    return [_result("coassoc", f"all {count} basis forests, degree <= {max_degree}", bad == 0)]


def suite_compat(max_degree: int = 5, engine: CoproductEngine | None = None) -> list[CheckResult]:
    """Both compatibility rules, recursion versus formula, on all basis
    pairs of bounded total degree."""
    engine = engine or CoproductEngine()
    out = []
    for which in ("star", "succ"):
        bad = 0
        count = 0
        for x, y in _basis_tuples(max_degree, 2):
            count += 1
            if not check_compatibility(
                Element.from_forest(x), Element.from_forest(y), which, engine
            ):
                bad += 1
        out.append(
            _result(
                "compat", f"{which} rule on {count} basis pairs, total degree <= {max_degree}", bad == 0
            )
        )
    return out


def suite_filtration(max_degree: int = 7, engine: CoproductEngine | None = None) -> list[CheckResult]:
    """Connectedness: the filtration level never exceeds the degree, and
    the degree-fold coproduct vanishes."""
    engine = engine or CoproductEngine()
    bad = 0
    count = 0
    for n in range(1, max_degree + 1):
        for f in enumerate_forests(n):
            count += 1
            x = Element.from_forest(f)
            level = filtration_level(x, engine)
            if not (1 <= level <= n):
                bad += 1
            elif not iterated_coproduct(x, n, engine).is_zero:
                bad += 1
    return [_result("filtration", f"all {count} basis forests, degree <= {max_degree}", bad == 0)]


def suite_primdims(max_degree: int = 5, engine: CoproductEngine | None = None) -> list[CheckResult]:
    """dim Prim in each degree equals the little Schroeder number."""
    out = []
    for n in range(1, max_degree + 1):
        size = len(primitive_basis(n, engine=engine))
        expected = schroeder("little", n)
        out.append(
            _result("primdims", f"degree {n}: dim Prim = {size}", size == expected, f"expected {expected}")
        )
    return out


def pbw_matrix(n: int) -> linalg.RatMatrix:
    """Change-of-basis matrix of the PBW elements over the canonical
    forest basis in degree n (rows and columns canonically ordered)."""
    forests = enumerate_forests(n)
    index = {f: i for i, f in enumerate(forests)}
    entries = {}
    for col, f in enumerate(forests):
        for g, c in pbw_basis_element(f).terms().items():
            entries[(index[g], col)] = c
    return linalg.RatMatrix(len(forests), len(forests), entries)


def _pbw_unitriangular(n: int) -> bool:
    """pbw(f) = f + strictly earlier forests in the canonical order,
    coefficient 1 on f."""
    for f in enumerate_forests(n):
        x = pbw_basis_element(f)
        if x.coefficient(f) != 1:
            return False
        key = f.sort_key()
        for g in x.support():
            if g != f and not g.sort_key() < key:
                return False
    return True


def suite_pbw(max_degree: int = 5, engine: CoproductEngine | None = None) -> list[CheckResult]:
    """PBW change of basis is unitriangular and invertible per degree."""
    out = []
    for n in range(1, max_degree + 1):
        tri = _pbw_unitriangular(n)
        inv = linalg.is_invertible(pbw_matrix(n))
        out.append(_result("pbw", f"degree {n}: unitriangular and invertible", tri and inv))
    return out


def deconcatenation_tensor(primitives: list[Element]) -> TensorElement:
    """Expected coproduct of a product of primitives: the sum of the k-1
    ways to cut the word in two."""
    acc = TensorElement.zero(2)
    k = len(primitives)
    for i in range(1, k):
        left = primitives[0]
        for p in primitives[1:i]:
            left = star(left, p)
        right = primitives[i]
        for p in primitives[i + 1:]:
            right = star(right, p)
        acc = acc + tensor_of_elements(left, right)
    return acc


def suite_brackets(max_degree: int = 5, engine: CoproductEngine | None = None) -> list[CheckResult]:
    """Brackets of primitives are primitive; products of primitives
    deconcatenate."""
    engine = engine or CoproductEngine()
    bases = {n: primitive_basis(n, engine=engine) for n in range(1, max_degree)}
    out = []
    for arity in (2, 3, 4):
        bad = 0
        count = 0
        for degs in _degree_tuples(max_degree, arity):
            for args in _pick_all(bases, degs):
                count += 1
                if not is_primitive(nary_bracket(list(args)), engine):
                    bad += 1
        out.append(
            _result(
                "brackets",
                f"{arity}-ary brackets of primitives ({count} cases), total degree <= {max_degree}",
                bad == 0,
            )
        )
    bad = 0
    count = 0
    for k in (2, 3, 4):
        for degs in _degree_tuples(max_degree, k):
            for args in _pick_all(bases, degs):
                count += 1
                word = args[0]
                for p in args[1:]:
                    word = star(word, p)
                if engine.coproduct(word) != deconcatenation_tensor(list(args)):
                    bad += 1
    out.append(
        _result(
            "brackets",
            f"deconcatenation of primitive products ({count} cases), total degree <= {max_degree}",
            bad == 0,
        )
    )
    return out


def _degree_tuples(total: int, arity: int) -> Iterator[tuple[int, ...]]:
    def rec(remaining: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            yield ()
            return
        for d in range(1, remaining - (slots - 1) + 1):
            for rest in rec(remaining - d, slots - 1):
                yield (d,) + rest

    return rec(total, arity)


def _pick_all(bases: dict[int, list[Element]], degs: tuple[int, ...]) -> Iterator[tuple[Element, ...]]:
    pools = [bases.get(d, []) for d in degs]
    if any(not pool for pool in pools):
        return iter(())
    return itertools.product(*pools)


def suite_unital(max_degree: int = 4, engine: CoproductEngine | None = None) -> list[CheckResult]:
    """The unit laws, the two pinned coproduct values, and the minus-sign
    relations on all unital basis pairs of bounded total degree."""
    engine = engine or CoproductEngine()
    out = []
    d_one = unital_coproduct(ONE, engine)
    out.append(_result("unital", "d(1) = 1 (x) 1", d_one == TensorElement(2, {(None, None): 1})))
    bar = UnitalElement.from_element(Element.from_forest(parse_forest("|")))
    d_bar = unital_coproduct(bar, engine)
    expected = TensorElement(2, {(None, parse_forest("|")): 1, (parse_forest("|"), None): 1})
    out.append(_result("unital", "d(|) = 1 (x) | + | (x) 1", d_bar == expected))

    basis: list[UnitalElement] = [ONE]
    for n in range(1, max_degree + 1):
        basis.extend(
            UnitalElement.from_element(Element.from_forest(f)) for f in enumerate_forests(n)
        )

    def deg(u: UnitalElement) -> int:
        return u.body.max_degree()

    for which in ("star", "succ"):
        bad = 0
        count = 0
        for x in basis:
            for y in basis:
                if deg(x) + deg(y) > max_degree:
                    continue
                count += 1
                if not check_unital_compatibility(x, y, which, engine):
                    bad += 1
        out.append(
            _result(
                "unital",
                f"minus-sign {which} rule on {count} unital basis pairs, total degree <= {max_degree}",
                bad == 0,
            )
        )
    unit_law_ok = all(
        unital_ops(ONE, x, w) == x and unital_ops(x, ONE, w) == x
        for x in basis[:10]
        for w in ("star", "succ")
    )
    out.append(_result("unital", "1 is a two-sided unit for both operations", unit_law_ok))
    return out


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "dims": suite_dims,
    "genfunc": suite_genfunc,
    "products": suite_products,
    "cocycle": suite_cocycle,
    "coassoc": suite_coassoc,
    "compat": suite_compat,
    "filtration": suite_filtration,
    "primdims": suite_primdims,
    "pbw": suite_pbw,
    "brackets": suite_brackets,
    "unital": suite_unital,
}


def run_suites(
    names: Iterable[str], max_degree: int = 5, engine: CoproductEngine | None = None
) -> list[CheckResult]:
    """Run the named suites in the registry order; 'all' runs everything.

    Every suite sweeps up to the given degree bound (total degree for the
    pair/triple sweeps, truncation order for genfunc).
    """
    requested = list(names)
    if "all" in requested:
        requested = list(SUITES)
    unknown = [n for n in requested if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    results: list[CheckResult] = []
    for name in SUITES:
        if name not in requested:
            continue
        results.extend(SUITES[name](max_degree=max_degree, engine=engine))
    return results
