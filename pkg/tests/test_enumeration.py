import itertools
from math import comb

import pytest

from arboretum.enumeration import (
    SizeKey,
    contractions,
    count,
    generate,
    hyper_edge_sets,
    leq_hyper,
    leq_reduced,
    minimal_maximal,
)
from arboretum.rotation import phi
from arboretum.trees import LEAF, Node, is_binary, is_rooted_tree, leaf_count, parse, to_text, vertex_count


def schroeder_oracle(n):
    """Little Schroeder numbers from the three-term recurrence (independent of the package)."""
    s = {1: 1, 2: 1}
    for k in range(3, n + 1):
        s[k] = (3 * (2 * k - 3) * s[k - 1] - (k - 3) * s[k - 2]) // k
    return s[n]


def catalan_oracle(n):
    return comb(2 * n, n) // (n + 1)


def test_oracles_themselves():
    assert [schroeder_oracle(n) for n in range(1, 9)] == [1, 1, 3, 11, 45, 197, 903, 4279]
    assert [catalan_oracle(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]


@pytest.mark.parametrize("n", range(1, 9))
def test_reduced_counts(n):
    key = SizeKey("reduced", "leaves", n)
    assert count(key) == schroeder_oracle(n)
    if n <= 7:
        assert len(generate(key)) == schroeder_oracle(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_hyper_counts_match_reduced(n):
    assert len(generate(SizeKey("hyper", "vertices", n))) == schroeder_oracle(n)
    assert count(SizeKey("hyper", "vertices", n)) == schroeder_oracle(n)


@pytest.mark.parametrize("n", range(0, 7))
def test_binary_and_rooted_counts(n):
    c = catalan_oracle(n)
    assert count(SizeKey("binary", "internal", n)) == c
    assert len(generate(SizeKey("binary", "internal", n))) == c
    assert len(generate(SizeKey("binary", "leaves", n + 1))) == c
    assert len(generate(SizeKey("rootedtree", "edges", n))) == c
    assert len(generate(SizeKey("rootedtree", "vertices", n + 1))) == c


def test_generated_classes_are_correct_and_distinct():
    for n in range(1, 7):
        red = generate(SizeKey("reduced", "leaves", n))
        assert len(set(red)) == len(red)
        assert all(leaf_count(t) == n for t in red)
        hyp = generate(SizeKey("hyper", "vertices", n))
        assert all(vertex_count(s) == n for s in hyp)
        assert {phi(t) for t in red} == set(hyp)
        assert all(is_binary(t) for t in generate(SizeKey("binary", "leaves", n)))
        assert all(is_rooted_tree(s) for s in generate(SizeKey("rootedtree", "vertices", n)))


def test_generate_sorted_and_small_examples():
    assert [to_text(t) for t in generate(SizeKey("reduced", "leaves", 3))] == [
        "((| |) |)", "(| (| |))", "(| | |)"]
    assert [to_text(s) for s in generate(SizeKey("hyper", "vertices", 3))] == [
        "*[((*[(*)]))]", "*[(* *)]", "*[(*)(*)]"]
    assert generate(SizeKey("reduced", "leaves", 0)) == []


def test_alias_and_errors():
    assert SizeKey("binary", "internalVertices", 2).measure == "internal"
    with pytest.raises(ValueError):
        SizeKey("reduced", "internal", 3)  # reduced trees have infinitely many of each inner size
    with pytest.raises(ValueError):
        SizeKey("forest", "leaves", 3)
    with pytest.raises(ValueError):
        generate(SizeKey("reduced", "leaves", 9))
    with pytest.raises(ValueError):
        count(SizeKey("reduced", "leaves", 12), bound=10)
    assert count(SizeKey("reduced", "leaves", 10), bound=10) == 103049


def _single_contractions(t):
    """Trees obtained by contracting exactly one internal edge (written independently)."""
    out = set()

    def walk(node, rebuild):
        if node == LEAF:
            return
        for i, c in enumerate(node.children):
            if c != LEAF:
                merged = Node(node.children[:i] + c.children + node.children[i + 1:])
                out.add(rebuild(merged))
            walk(c, lambda x, i=i, node=node: rebuild(Node(node.children[:i] + (x,) + node.children[i + 1:])))

    walk(t, lambda x: x)
    return out


def _closure(t):
    seen = {t}
    todo = [t]
    while todo:
        for u in _single_contractions(todo.pop()):
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return seen


def test_contractions_against_closure_oracle():
    for n in range(1, 7):
        for t in generate(SizeKey("reduced", "leaves", n)):
            assert contractions(t) == _closure(t)


class TestReducedOrder:
    def test_examples(self):
        corolla = parse("(| | |)")
        assert leq_reduced(corolla, parse("((| |) |)"))
        assert leq_reduced(corolla, parse("(| (| |))"))
        assert not leq_reduced(parse("((| |) |)"), corolla)
        assert not leq_reduced(parse("((| |) |)"), parse("(| (| |))"))
        assert not leq_reduced(parse("(| |)"), parse("(| | |)"))

    def test_partial_order_laws(self):
        for n in range(1, 6):
            items = generate(SizeKey("reduced", "leaves", n))
            for a in items:
                assert leq_reduced(a, a)
            for a, b in itertools.permutations(items, 2):
                assert not (leq_reduced(a, b) and leq_reduced(b, a))
            for a, b, c in itertools.product(items, repeat=3):
                if leq_reduced(a, b) and leq_reduced(b, c):
                    assert leq_reduced(a, c)


class TestHyperOrder:
    def test_edge_sets(self):
        assert hyper_edge_sets(parse("*[(* *)]")) == [frozenset({1, 2, 3})]
        assert sorted(map(sorted, hyper_edge_sets(parse("*[(*)(*)]")))) == [[1, 3], [2, 3]]

    def test_examples(self):
        blob = parse("*[(* *)]")
        assert leq_hyper(blob, parse("*[(*)(*)]"))
        assert leq_hyper(blob, parse("*[((*[(*)]))]"))
        assert not leq_hyper(parse("*[(*)(*)]"), blob)

    def test_phi_monotone(self):
        for n in range(1, 6):
            red = generate(SizeKey("reduced", "leaves", n))
            for a, b in itertools.product(red, repeat=2):
                assert leq_reduced(a, b) == leq_hyper(phi(a), phi(b))


def test_minimal_maximal_four():
    lo, hi = minimal_maximal(SizeKey("reduced", "leaves", 4))
    assert lo == [parse("(| | | |)")]
    assert sorted(hi, key=to_text) == generate(SizeKey("binary", "leaves", 4))
    lo, hi = minimal_maximal(SizeKey("hyper", "vertices", 4))
    assert lo == [parse("*[(* * *)]")]
    assert sorted(hi, key=to_text) == generate(SizeKey("rootedtree", "vertices", 4))
