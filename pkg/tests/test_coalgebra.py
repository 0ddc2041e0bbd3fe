import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hochalg.algebra import Element, nary_bracket, parse_element, scale, star
from hochalg.coalgebra import (
    ONE,
    CoproductEngine,
    TensorElement,
    UnitalElement,
    apply_coproduct_at,
    check_compatibility,
    check_unital_compatibility,
    coproduct,
    coproduct_basis,
    coproduct_matrix,
    filtration_level,
    format_tensor,
    format_unital_element,
    is_primitive,
    iterated_coproduct,
    parse_unital_element,
    primitive_basis,
    tensor_of_elements,
    unital_coproduct,
    unital_ops,
    unital_star,
    unital_succ,
)
from hochalg.trees import enumerate_forests, parse_forest

E = parse_element
F = parse_forest


def forests_upto(n):
    return [f for k in range(1, n + 1) for f in enumerate_forests(k)]


small_coeff = st.fractions(min_value=-4, max_value=4, max_denominator=6)
small_elements = st.builds(
    Element,
    st.lists(st.tuples(st.sampled_from(forests_upto(3)), small_coeff), min_size=0, max_size=3),
)


class TestCoproductValues:
    def test_leaf_is_primitive(self):
        assert coproduct(E("|")).is_zero

    def test_two_leaf_word(self):
        assert coproduct(E("| |")) == tensor_of_elements(E("|"), E("|"))

    def test_corolla(self):
        assert coproduct(E("[|,|]")) == tensor_of_elements(E("|"), E("|"))

    def test_three_corolla_vanishes(self):
        assert coproduct(E("[|,|,|]")).is_zero

    def test_primitive_combination(self):
        assert coproduct(E("[|,|] - | |")).is_zero

    def test_linearity(self):
        assert coproduct(Element.zero()).is_zero
        assert coproduct(E("2*| |")) == tensor_of_elements(E("|"), E("|")).scaled(2)
        x, y = E("| |"), E("[|,[|,|]]")
        assert coproduct(x + y) == coproduct(x) + coproduct(y)

    def test_three_leaf_word(self):
        expected = tensor_of_elements(E("| |"), E("|")) + tensor_of_elements(E("|"), E("| |"))
        assert coproduct(E("| | |")) == expected

    def test_grading_of_slots(self):
        for n in range(2, 6):
            for f in enumerate_forests(n):
                for (a, b), _ in coproduct_basis(f).terms().items():
                    assert a.degree >= 1 and b.degree >= 1
                    assert a.degree + b.degree == n


class TestIteratedCoproduct:
    def test_three_leaf_word_twice(self):
        got = iterated_coproduct(E("| | |"), 2)
        assert got == tensor_of_elements(E("|"), E("|"), E("|"))

    def test_two_leaf_word_twice(self):
        assert iterated_coproduct(E("| |"), 2).is_zero

    def test_degree_kills_every_basis_forest(self):
        for n in range(1, 6):
            for f in enumerate_forests(n):
                assert iterated_coproduct(Element.from_forest(f), n).is_zero

    def test_arity(self):
        assert iterated_coproduct(E("| | | |"), 3).arity == 4

    def test_invalid_iteration(self):
        with pytest.raises(ValueError):
            iterated_coproduct(E("|"), 0)


class TestPrimitivity:
    def test_examples(self):
        assert is_primitive(E("|"))
        assert not is_primitive(E("[|,|]"))
        assert is_primitive(E("[|,|] - | |"))

    def test_zero_is_primitive(self):
        assert is_primitive(Element.zero())


class TestFiltration:
    def test_levels_of_leaf_words(self):
        assert filtration_level(E("|")) == 1
        assert filtration_level(E("| |")) == 2
        assert filtration_level(E("| | |")) == 3

    def test_zero_marker(self):
        assert filtration_level(Element.zero()) == 0

    def test_connectedness(self):
        for n in range(1, 6):
            for f in enumerate_forests(n):
                assert 1 <= filtration_level(Element.from_forest(f)) <= n

    def test_filtration_is_increasing(self):
        for text in ("| | - 2*[|,|]", "| [|,|] + [|,|,|]", "| | | |"):
            x = E(text)
            level = filtration_level(x)
            assert iterated_coproduct(x, level).is_zero
            assert iterated_coproduct(x, level + 1).is_zero


class TestPrimitiveBasis:
    def test_degree_one(self):
        assert primitive_basis(1) == [E("|")]

    def test_degree_two_spans_the_stated_line(self):
        basis = primitive_basis(2)
        assert len(basis) == 1
        assert basis[0] in (E("| | - [|,|]"), E("[|,|] - | |"))
        assert scale(-1, basis[0]) in (E("| | - [|,|]"), E("[|,|] - | |"))

    def test_dimensions_match_little_schroeder(self):
        assert [len(primitive_basis(n)) for n in range(1, 5)] == [1, 1, 3, 11]

    def test_members_are_primitive_and_homogeneous(self):
        for n in range(1, 5):
            for p in primitive_basis(n):
                assert coproduct(p).is_zero
                assert p.degrees() == {n}

    def test_rref_normalization(self):
        # each pivot coefficient 1, pivot columns distinct and increasing,
        # and zero in every earlier vector's pivot column
        for n in range(2, 5):
            forests = enumerate_forests(n)
            basis = primitive_basis(n)
            pivots = []
            for p in basis:
                coords = [p.coefficient(f) for f in forests]
                pivot = next(i for i, c in enumerate(coords) if c)
                assert coords[pivot] == 1
                pivots.append(pivot)
            assert pivots == sorted(pivots)
            for i, p in enumerate(basis):
                for j, q in enumerate(basis):
                    if i != j:
                        assert q.coefficient(forests[pivots[i]]) == 0

    def test_invalid_degree(self):
        with pytest.raises(ValueError):
            primitive_basis(0)

    def test_multi_generator_bracket_is_primitive(self):
        x, y = E("|0"), E("|1")
        assert is_primitive(nary_bracket([x, y]))
        assert is_primitive(nary_bracket([x, y, x]))

    def test_coproduct_matrix_shape(self):
        matrix, forests, keys = coproduct_matrix(2)
        assert matrix.nrows == 1 and matrix.ncols == 2
        assert [str(f) for f in forests] == ["| |", "[|,|]"]


class TestCoassociativity:
    def test_exhaustive(self):
        engine = CoproductEngine()
        for n in range(1, 6):
            for f in enumerate_forests(n):
                d = engine.coproduct_basis(f)
                assert apply_coproduct_at(d, 0) == apply_coproduct_at(d, 1)

    @settings(max_examples=40)
    @given(small_elements)
    def test_random_elements(self, x):
        d = coproduct(x)
        assert apply_coproduct_at(d, 0) == apply_coproduct_at(d, 1)


class TestCompatibility:
    def test_examples(self):
        assert check_compatibility(E("|"), E("|"), "succ")
        assert check_compatibility(E("| |"), E("[|,|]"), "star")

    def test_exhaustive_pairs(self):
        for which in ("star", "succ"):
            for f, g in itertools.product(forests_upto(2), repeat=2):
                assert check_compatibility(
                    Element.from_forest(f), Element.from_forest(g), which
                )

    @settings(max_examples=30)
    @given(small_elements, small_elements, st.sampled_from(["star", "succ"]))
    def test_random_elements(self, x, y, which):
        assert check_compatibility(x, y, which)

    def test_symbol_aliases(self):
        assert check_compatibility(E("|"), E("|"), "*")
        assert check_compatibility(E("|"), E("|"), ">")
        with pytest.raises(ValueError):
            check_compatibility(E("|"), E("|"), "plus")


class TestDeconcatenationOfPrimitives:
    def test_products_of_primitives(self):
        bases = {n: primitive_basis(n) for n in range(1, 4)}
        picks = [
            [bases[1][0], bases[1][0]],
            [bases[1][0], bases[2][0]],
            [bases[2][0], bases[2][0]],
            [bases[1][0], bases[1][0], bases[1][0]],
            [bases[3][1], bases[1][0]],
            [bases[1][0], bases[1][0], bases[1][0], bases[1][0]],
        ]
        for ps in picks:
            word = ps[0]
            for p in ps[1:]:
                word = star(word, p)
            expected = TensorElement.zero(2)
            for i in range(1, len(ps)):
                left = ps[0]
                for p in ps[1:i]:
                    left = star(left, p)
                right = ps[i]
                for p in ps[i + 1:]:
                    right = star(right, p)
                expected = expected + tensor_of_elements(left, right)
            assert coproduct(word) == expected


class TestEngine:
    def test_concurrent_sweep_matches_sequential(self):
        # the memo table behaves as a cache of a pure function
        import concurrent.futures

        shared = CoproductEngine()
        forests = [f for n in range(1, 6) for f in enumerate_forests(n)]
        expected = [CoproductEngine().coproduct_basis(f) for f in forests]
        with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(shared.coproduct_basis, forests))
        assert results == expected

    def test_memoization_transparent(self):
        plain = CoproductEngine(memoize=False)
        memo = CoproductEngine(memoize=True)
        for n in range(1, 6):
            for f in enumerate_forests(n):
                assert plain.coproduct_basis(f) == memo.coproduct_basis(f)

    def test_flipped_sign_negates_everything(self):
        flipped = CoproductEngine(cross_sign=-1)
        normal = CoproductEngine()
        for n in range(1, 5):
            for f in enumerate_forests(n):
                assert flipped.coproduct_basis(f) == -normal.coproduct_basis(f)

    def test_flipped_sign_breaks_compatibility(self):
        flipped = CoproductEngine(cross_sign=-1)
        assert not check_compatibility(E("|"), E("|"), "star", flipped)

    def test_invalid_sign(self):
        with pytest.raises(ValueError):
            CoproductEngine(cross_sign=2)


class TestTensorElement:
    def test_arity_validation(self):
        with pytest.raises(ValueError):
            TensorElement(0)
        with pytest.raises(ValueError):
            TensorElement(2, {(F("|"),): 1})

    def test_normalization(self):
        t = TensorElement(2, [((F("|"), F("|")), 1), ((F("|"), F("|")), -1)])
        assert t.is_zero

    def test_format(self):
        t = tensor_of_elements(E("| |"), E("|")) + tensor_of_elements(E("|"), E("| |"))
        assert format_tensor(t) == "| (x) | | + | | (x) |"
        assert format_tensor(TensorElement.zero(2)) == "0"

    def test_scaled_format_has_coefficient(self):
        t = tensor_of_elements(E("|"), E("|")).scaled(Fraction(3, 2))
        assert format_tensor(t) == "3/2*| (x) |"


class TestUnital:
    def test_coproduct_of_one(self):
        assert unital_coproduct(ONE) == TensorElement(2, {(None, None): 1})

    def test_coproduct_of_generator(self):
        got = unital_coproduct(UnitalElement.from_element(E("|")))
        assert got == TensorElement(2, {(None, F("|")): 1, (F("|"), None): 1})
        assert format_tensor(got) == "1 (x) | + | (x) 1"

    def test_coproduct_of_two_leaf_word(self):
        got = unital_coproduct(parse_unital_element("| |"))
        expected = TensorElement(
            2, {(None, F("| |")): 1, (F("| |"), None): 1, (F("|"), F("|")): 1}
        )
        assert got == expected

    def test_unit_laws(self):
        x = UnitalElement.from_element(E("[|,|]"))
        assert unital_succ(ONE, x) == x
        assert unital_succ(x, ONE) == x
        assert unital_star(ONE, ONE) == ONE
        assert unital_ops(ONE, ONE, "succ") == ONE

    def test_mixed_product(self):
        one_plus_bar = parse_unital_element("1 + |")
        got = unital_star(one_plus_bar, UnitalElement.from_element(E("|")))
        assert got == parse_unital_element("| + | |")

    def test_minus_sign_relations_exhaustive(self):
        basis = [ONE] + [
            UnitalElement.from_element(Element.from_forest(f)) for f in forests_upto(3)
        ]
        for which in ("star", "succ"):
            for x, y in itertools.product(basis, repeat=2):
                if x.body.max_degree() + y.body.max_degree() <= 3:
                    assert check_unital_compatibility(x, y, which)

    def test_delta_restricts_to_nonunital_coproduct(self):
        # removing 1 (x) x + x (x) 1 from d(x) leaves D(x) on the ideal
        for f in forests_upto(4):
            x = Element.from_forest(f)
            d = unital_coproduct(UnitalElement.from_element(x))
            stripped = TensorElement(
                2, {k: c for k, c in d.terms().items() if None not in k}
            )
            assert stripped == coproduct(x)

    def test_unital_text_roundtrip(self):
        for text in ("1", "2*1 - 3/2*[|,|]", "-1 + | |", "0"):
            u = parse_unital_element(text)
            assert parse_unital_element(format_unital_element(u)) == u

    def test_format_examples(self):
        assert format_unital_element(ONE) == "1"
        assert format_unital_element(parse_unital_element("2*1 + |")) == "2*1 + |"
        assert format_unital_element(UnitalElement(Fraction(0), Element.zero())) == "0"
