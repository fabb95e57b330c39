import sys

import pytest
from hypothesis import strategies as st

from arboretum.trees import LEAF, VERTEX, HyperEdge, HyperTree, Node, parse

# Names of the small trees in the printed coproduct tables.  The binary ones are
# pinned by their grafting definitions and by the shape of their coproducts.
REDUCED_NAMES = {
    "Y": "(| |)",
    "treeA": "(| (| |))",         # | v Y
    "treeB": "((| |) |)",         # Y v |
    "treeC": "(| (| (| |)))",     # right comb
    "treeD": "((| |) (| |))",     # Y v Y
    "treeE": "(((| |) |) |)",     # left comb
    "treeF": "((| (| |)) |)",     # treeA v |
    "treeG": "(| ((| |) |))",     # | v treeB
    "treec": "(| | |)",
}

HYPER_NAMES = {
    "racine": "*",
    "arbrea": "*[(*)]",
    "arbreba": "*[((*[(*)]))]",           # ladder
    "arbrebb": "*[(*)(*)]",               # 2-corolla
    "arbreca": "*[((*[((*[(*)]))]))]",    # ladder
    "arbrecb": "*[((*[(*)(*)]))]",        # B+(2-corolla)
    "arbrecc": "*[((*[(*)]))(*)]",        # B+(arbrea racine)
    "arbrecd": "*[(*)(*)(*)]",            # 3-corolla
    "arbrece": "*[(*)((*[(*)]))]",        # B+(racine arbrea)
    "hab": "*[(* *)]",
}


@pytest.fixture
def R():
    return {k: parse(v) for k, v in REDUCED_NAMES.items()}


@pytest.fixture
def H():
    return {k: parse(v) for k, v in HYPER_NAMES.items()}


def reduced_trees(max_leaves=6):
    """Hypothesis strategy for reduced trees with at most ``max_leaves`` leaves."""
    def extend(children):
        return st.lists(children, min_size=2, max_size=3).map(lambda cs: Node(tuple(cs)))
    return st.recursive(st.just(LEAF), extend, max_leaves=max_leaves)


def hyper_trees(max_leaves=6):
    def extend(inner):
        edge = st.lists(inner, min_size=1, max_size=3).map(lambda ms: HyperEdge(tuple(ms)))
        return st.lists(edge, min_size=0, max_size=3).map(lambda es: HyperTree(tuple(es)))
    return st.recursive(st.just(VERTEX), extend, max_leaves=max_leaves)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
