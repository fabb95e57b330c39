import itertools

import pytest
from hypothesis import given

from arboretum.enumeration import SizeKey, generate
from arboretum.trees import (
    HYPER,
    LEAF,
    REDUCED,
    VERTEX,
    DecorationScheme,
    Forest,
    HyperTree,
    Node,
    ParseError,
    beta,
    bplus,
    butcher,
    grade,
    leaf_count,
    parse,
    parse_forest,
    strip_tags,
    to_text,
    vee,
    vertex_count,
    weight,
)

from conftest import hyper_trees, reduced_trees

Y = parse("(| |)")
DOT = VERTEX
A = parse("*[(*)]")


def P(text):
    return parse(text)


class TestVee:
    def test_y(self):
        assert to_text(vee([LEAF, LEAF])) == "(| |)"

    def test_y_vee_leaf(self):
        assert to_text(vee([Y, LEAF])) == "((| |) |)"

    def test_corolla(self):
        assert to_text(vee([LEAF] * 3)) == "(| | |)"

    def test_arity_one_rejected(self):
        with pytest.raises(ValueError):
            vee([LEAF])

    def test_decoration_checked_against_scheme(self):
        scheme = DecorationScheme({2: ["a"], 3: ["c"]})
        assert vee([LEAF, LEAF], "a", scheme).tag == "a"
        with pytest.raises(ValueError):
            vee([LEAF, LEAF], "c", scheme)


class TestHyperConstructors:
    def test_bplus_empty(self):
        assert bplus([]) == VERTEX

    def test_bplus_one(self):
        assert to_text(bplus([DOT])) == "*[(*)]"

    def test_bplus_two(self):
        assert to_text(bplus([A, DOT])) == "*[((*[(*)]))(*)]"

    def test_bplus_rejects_hyperedges(self):
        with pytest.raises(ValueError):
            bplus([P("*[(* *)]")])

    def test_butcher(self):
        assert to_text(butcher(DOT, DOT)) == "*[(*)]"
        assert butcher(A, DOT) == bplus([A])
        assert to_text(butcher(A, DOT)) == "*[((*[(*)]))]"
        assert to_text(butcher(DOT, A)) == "*[(*)(*)]"

    def test_butcher_rejects_hyperedges(self):
        with pytest.raises(ValueError):
            butcher(P("*[(* *)]"), DOT)

    def test_beta(self):
        assert to_text(beta([DOT, DOT])) == "*[(*)]"
        assert to_text(beta([DOT, DOT, DOT])) == "*[(* *)]"
        # members are listed t_{n-1}, ..., t_1
        assert to_text(beta([A, DOT, DOT])) == "*[(* (*[(*)]))]"

    def test_beta_needs_two(self):
        with pytest.raises(ValueError):
            beta([DOT])


def test_beta_extends_butcher_on_small_rooted_trees():
    trees = [t for n in range(1, 5) for t in generate(SizeKey("rootedtree", "vertices", n))]
    for t, u in itertools.product(trees, repeat=2):
        assert beta([t, u]) == butcher(t, u)


def test_butcher_is_not_associative_commutative_or_nap():
    trees = [t for n in range(1, 4) for t in generate(SizeKey("rootedtree", "vertices", n))]
    assert any(butcher(t, u) != butcher(u, t) for t, u in itertools.product(trees, repeat=2))
    triples = list(itertools.product(trees, repeat=3))
    assert any(butcher(butcher(t, u), v) != butcher(t, butcher(u, v)) for t, u, v in triples)
    witness = [(t, u, v) for t, u, v in triples if butcher(t, butcher(u, v)) != butcher(u, butcher(t, v))]
    assert witness
    t, u, v = DOT, A, DOT
    assert butcher(t, butcher(u, v)) != butcher(u, butcher(t, v))


class TestMeasures:
    def test_grade(self):
        assert grade(LEAF) == 0
        assert grade(P("((| |) |)")) == 2
        assert grade(P("*[(* *)]")) == 1
        assert grade(parse_forest("(| |);(| | |)")) == 2

    def test_counts(self):
        assert leaf_count(P("(| | |)")) == 3
        assert vertex_count(P("*[(* *)]")) == 3
        assert leaf_count(LEAF) == 1 and vertex_count(VERTEX) == 1

    def test_weight(self):
        assert weight(P("(| | |)")) == 2
        assert weight(parse_forest("*[(*)];*[(* *)]")) == 3

    @given(reduced_trees(4), reduced_trees(4))
    def test_vee_grades(self, t1, t2):
        ts = [t1, LEAF, t2]
        t = vee(ts)
        assert grade(t) == 1 + sum(grade(x) for x in ts)
        assert leaf_count(t) == sum(leaf_count(x) for x in ts)

    @given(hyper_trees(4), hyper_trees(4))
    def test_beta_grades(self, s, u):
        t = beta([s, u, s])
        assert grade(t) == 1 + 2 * grade(s) + grade(u)
        assert vertex_count(t) == 2 * vertex_count(s) + vertex_count(u)


class TestForest:
    def test_unit_is_empty(self):
        assert Forest.unit(REDUCED).is_unit()
        assert parse_forest("|") == Forest.unit(REDUCED)
        assert parse_forest("*") == Forest.unit(HYPER)
        assert parse_forest("", REDUCED) == Forest.unit(REDUCED)

    def test_unit_tree_not_stored(self):
        with pytest.raises(ValueError):
            Forest(REDUCED, (LEAF,))

    def test_concatenation(self):
        f = parse_forest("(| |)")
        assert to_text(f * f) == "(| |);(| |)"
        assert Forest.unit(REDUCED) * f == f

    def test_kind_mismatch(self):
        with pytest.raises(ValueError):
            parse_forest("(| |)") * parse_forest("*[(*)]")


class TestText:
    def test_parse_y(self):
        assert parse("(| |)") == Node((LEAF, LEAF))

    def test_print_beta(self):
        assert to_text(beta([DOT] * 3)) == "*[(* *)]"

    def test_arity_error_with_position(self):
        with pytest.raises(ParseError) as exc:
            parse("( | )")
        assert "node arity 1" in str(exc.value)
        assert exc.value.position == 0

    def test_empty_edge(self):
        with pytest.raises(ParseError, match="empty edge"):
            parse("*[()]")

    @pytest.mark.parametrize("text", ["(| |", "(| |))", "*[(*)", "(| x)", "*[(*)]@", "| |"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse(text)

    def test_whitespace_insensitive(self):
        assert parse(" ( |   ( | | ) ) ") == parse("(| (| |))")
        assert parse("* [ ( * ) ( *  * ) ]") == parse("*[(*)(* *)]")

    def test_decorations(self):
        t = parse("((| |)@a |)@b")
        assert t.tag == "b" and t.children[0].tag == "a"
        assert to_text(t) == "((| |)@a |)@b"
        s = parse("*[((*[(*)@a]))@b]")
        assert to_text(s) == "*[((*[(*)@a]))@b]"
        assert strip_tags(t) == parse("((| |) |)")

    def test_unparenthesised_member_accepted(self):
        assert parse("*[(* *[(*)])]") == parse("*[(* (*[(*)]))]")

    def test_round_trip_all_small(self):
        for n in range(1, 7):
            for t in generate(SizeKey("reduced", "leaves", n)):
                assert parse(to_text(t)) == t
            for s in generate(SizeKey("hyper", "vertices", n)):
                assert parse(to_text(s)) == s

    @given(reduced_trees())
    def test_round_trip_reduced(self, t):
        assert parse(to_text(t)) == t

    @given(hyper_trees())
    def test_round_trip_hyper(self, s):
        assert parse(to_text(s)) == s


def test_values_are_hashable_and_immutable():
    t = P("(| (| |))")
    assert hash(t) == hash(P("(| (| |))"))
    with pytest.raises(AttributeError):
        t.tag = "x"
    assert isinstance(P("*"), HyperTree)


def test_decoration_scheme_disjoint():
    with pytest.raises(ValueError):
        DecorationScheme({2: ["a"], 3: ["a"]})
    scheme = DecorationScheme({2: ["a", "b"], 3: ["c"]})
    scheme.validate(P("((| |)@a | |)@c"))
    with pytest.raises(ValueError):
        scheme.validate(P("(| | |)@a"))
