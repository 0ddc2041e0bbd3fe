import itertools

import pytest
from hypothesis import given, strategies as st

from hochalg.trees import (
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

LITTLE = [1, 1, 3, 11, 45, 197, 903]
LARGE = [1, 2, 6, 22, 90, 394, 1806]

BAR = leaf()
COROLLA2 = graft([BAR, BAR])


def trees_upto(n, alphabet_size=1):
    return [t for k in range(1, n + 1) for t in enumerate_trees(k, alphabet_size)]


small_trees = st.sampled_from(trees_upto(4))
small_forests = st.builds(lambda ts: Forest(tuple(ts)), st.lists(small_trees, min_size=1, max_size=3))


class TestGraftDecompose:
    def test_graft_two_leaves(self):
        assert graft([BAR, BAR]) == COROLLA2
        assert format_tree(COROLLA2) == "[|,|]"

    def test_graft_nested(self):
        t = graft([COROLLA2, BAR, BAR])
        assert format_tree(t) == "[[|,|],|,|]"
        assert t.leaf_count == 4

    def test_graft_arity_error(self):
        with pytest.raises(ValueError):
            graft([BAR])
        with pytest.raises(ValueError):
            graft([])

    def test_decompose_examples(self):
        assert decompose(COROLLA2) == (BAR, BAR)
        assert decompose(graft([COROLLA2, BAR, BAR])) == (COROLLA2, BAR, BAR)

    def test_decompose_leaf_error(self):
        with pytest.raises(ValueError):
            decompose(BAR)

    @given(st.lists(small_trees, min_size=2, max_size=4))
    def test_decompose_graft_roundtrip(self, children):
        assert decompose(graft(children)) == tuple(children)

    def test_graft_decompose_roundtrip_all_nonleaves(self):
        for t in trees_upto(5):
            if not t.is_leaf:
                assert graft(decompose(t)) == t

    def test_leaf_count_additive(self):
        for t in trees_upto(5):
            if not t.is_leaf:
                assert t.leaf_count == sum(c.leaf_count for c in t.children)

    def test_unary_node_unrepresentable(self):
        with pytest.raises(ValueError):
            PlanarTree(children=(BAR,))


class TestEnumeration:
    def test_tree_counts_little_schroeder(self):
        assert [len(enumerate_trees(n)) for n in range(1, 8)] == LITTLE

    def test_forest_counts_large_schroeder(self):
        assert [len(enumerate_forests(n)) for n in range(1, 8)] == LARGE

    def test_degree_one(self):
        assert enumerate_trees(1) == [BAR]
        assert enumerate_forests(1) == [forest(BAR)]

    def test_degree_three_trees(self):
        expected = {"[|,[|,|]]", "[[|,|],|]", "[|,|,|]"}
        assert {format_tree(t) for t in enumerate_trees(3)} == expected

    def test_degree_two_forests(self):
        assert [format_forest(f) for f in enumerate_forests(2)] == ["| |", "[|,|]"]

    def test_invalid_degree(self):
        with pytest.raises(ValueError):
            enumerate_trees(0)
        with pytest.raises(ValueError):
            enumerate_forests(0)
        with pytest.raises(ValueError):
            enumerate_trees(2, 0)

    def test_every_enumerated_tree_has_right_leaf_count(self):
        for n in range(1, 6):
            assert all(t.leaf_count == n for t in enumerate_trees(n))
            assert all(f.degree == n for f in enumerate_forests(n))

    @pytest.mark.parametrize("m", [2, 3])
    def test_alphabet_scaling(self, m):
        for n in range(1, 5):
            assert len(enumerate_trees(n, m)) == m**n * LITTLE[n - 1]

    def test_sorted_and_duplicate_free(self):
        for n in range(1, 6):
            fs = enumerate_forests(n)
            assert len(set(fs)) == len(fs)
            assert fs == sorted(fs, key=Forest.sort_key)


class TestCompare:
    def test_all_leaves_word_first_in_degree(self):
        # descending tree count: | | before [|,|]
        assert compare(parse_forest("| |"), parse_forest("[|,|]")) == -1

    def test_equal(self):
        assert compare(forest(BAR), forest(BAR)) == 0

    def test_degree_dominates(self):
        assert compare(forest(BAR), forest(COROLLA2)) == -1

    def test_strict_total_order_on_enumerations(self):
        for n in range(1, 5):
            fs = enumerate_forests(n)
            for a, b in itertools.combinations(fs, 2):
                assert compare(a, b) == -compare(b, a) != 0

    @given(small_forests, small_forests, small_forests)
    def test_transitive(self, a, b, c):
        if compare(a, b) <= 0 and compare(b, c) <= 0:
            assert compare(a, c) <= 0

    @given(small_forests, small_forests)
    def test_antisymmetric(self, a, b):
        if compare(a, b) == 0:
            assert a == b


class TestTextForm:
    def test_parse_basic(self):
        f = parse_forest("[|,|] |")
        assert f == forest(COROLLA2, BAR)

    def test_format_canonicalizes(self):
        assert format_forest(parse_forest("[ | , | ]")) == "[|,|]"

    def test_unary_bracket_rejected(self):
        with pytest.raises(ParseError):
            parse_forest("[|]")

    def test_labels(self):
        f = parse_forest("|2 [|,|1]", alphabet_size=3)
        assert f.trees[0] == leaf(2)
        assert format_forest(f) == "|2 [|,|1]"
        assert parse_forest("|0") == forest(BAR)

    def test_unknown_label_rejected(self):
        with pytest.raises(ParseError):
            parse_forest("|3", alphabet_size=2)

    def test_error_position(self):
        with pytest.raises(ParseError) as exc:
            parse_forest("[|,|")
        assert exc.value.position == 4

    def test_missing_separator(self):
        with pytest.raises(ParseError):
            parse_forest("||")
        with pytest.raises(ParseError):
            parse_forest("[|,|][|,|]")

    def test_garbage_rejected(self):
        for bad in ["", "x", "[,|]", "[|,]", "| ,", "[|;|]"]:
            with pytest.raises(ParseError):
                parse_forest(bad)

    def test_whitespace_free_inside_brackets(self):
        assert parse_forest("[ [ |,| ] , | ]") == forest(graft([COROLLA2, BAR]))

    def test_roundtrip_exhaustive(self):
        for n in range(1, 6):
            for f in enumerate_forests(n):
                assert parse_forest(format_forest(f)) == f

    @given(small_forests)
    def test_roundtrip_random(self, f):
        assert parse_forest(format_forest(f)) == f

    def test_parse_tree_rejects_forest(self):
        with pytest.raises(ParseError):
            parse_tree("| |")
        assert parse_tree(" [|,|] ") == COROLLA2
