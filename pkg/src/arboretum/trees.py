"""Planar reduced trees, planar rooted hypertrees and their forests.

Both families are immutable and compared structurally, so they can be used
directly as basis elements (dictionary keys) of free modules.

Text format, whitespace-insensitive between tokens::

    reduced := "|" | "(" reduced reduced+ ")" deco?
    hyper   := "*" edges?        edges := "[" edge+ "]"
    edge    := "(" member+ ")" deco?
    member  := hyper | "(" hyper ")"
    deco    := "@" identifier
    forest  := term (";" term)*  (the empty string is the unit)

A member carrying edges of its own is printed in parentheses, e.g. the
three-vertex ladder is ``*[((*[(*)]))]``.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

__all__ = [
    "Leaf",
    "Node",
    "LEAF",
    "HyperTree",
    "HyperEdge",
    "VERTEX",
    "Forest",
    "DecorationScheme",
    "ParseError",
    "ReducedTree",
    "Tree",
    "REDUCED",
    "HYPER",
    "vee",
    "bplus",
    "butcher",
    "beta",
    "grade",
    "weight",
    "leaf_count",
    "vertex_count",
    "is_unit",
    "is_rooted_tree",
    "is_binary",
    "kind_of",
    "strip_tags",
    "parse",
    "parse_tree",
    "parse_forest",
    "to_text",
]

REDUCED = "reduced"
HYPER = "hyper"
_KINDS = (REDUCED, HYPER)


@dataclass(frozen=True, slots=True)
class Leaf:
    """The one-edge tree ``|``."""

    def __str__(self) -> str:
        return "|"


@dataclass(frozen=True, slots=True)
class Node:
    """Internal vertex with at least two ordered children."""

    children: tuple
    tag: str | None = None

    def __post_init__(self):
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ValueError(f"node arity {len(self.children)}: reduced trees need at least 2 children")

    def __str__(self) -> str:
        return to_text(self)


ReducedTree = Union[Leaf, Node]
LEAF = Leaf()


@dataclass(frozen=True, slots=True)
class HyperEdge:
    """An edge rooted at some vertex.

    ``members`` are the other vertices of the edge (each with everything
    growing above it), listed counterclockwise after the edge's root.
    """

    members: tuple
    tag: str | None = None

    def __post_init__(self):
        if not isinstance(self.members, tuple):
            object.__setattr__(self, "members", tuple(self.members))
        if not self.members:
            raise ValueError("empty edge: a hyperedge needs at least 2 vertices")

    @property
    def size(self) -> int:
        """Number of vertices of the edge, root included."""
        return len(self.members) + 1


@dataclass(frozen=True, slots=True)
class HyperTree:
    """A vertex together with the ordered edges rooted at it."""

    edges: tuple = ()

    def __post_init__(self):
        if not isinstance(self.edges, tuple):
            object.__setattr__(self, "edges", tuple(self.edges))

    def __str__(self) -> str:
        return to_text(self)


VERTEX = HyperTree()
Tree = Union[Leaf, Node, HyperTree]


def kind_of(tree: Tree) -> str:
    if isinstance(tree, (Leaf, Node)):
        return REDUCED
    if isinstance(tree, HyperTree):
        return HYPER
    raise TypeError(f"not a tree: {tree!r}")


def is_unit(tree: Tree) -> bool:
    return tree == LEAF or tree == VERTEX


@dataclass(frozen=True, slots=True)
class Forest:
    """Word of non-unit trees of one kind; the empty word is the unit."""

    kind: str
    trees: tuple = ()

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown forest kind {self.kind!r}")
        if not isinstance(self.trees, tuple):
            object.__setattr__(self, "trees", tuple(self.trees))
        for t in self.trees:
            if kind_of(t) != self.kind:
                raise ValueError(f"{t} is not a {self.kind} tree")
            if is_unit(t):
                raise ValueError("the unit tree cannot be stored in a forest")

    @classmethod
    def unit(cls, kind: str) -> Forest:
        return cls(kind, ())

    @classmethod
    def of(cls, *trees: Tree, kind: str | None = None) -> Forest:
        """Forest of the given trees, dropping unit trees."""
        if kind is None:
            if not trees:
                raise ValueError("cannot infer the kind of an empty forest")
            kind = kind_of(trees[0])
        return cls(kind, tuple(t for t in trees if not is_unit(t)))

    def is_unit(self) -> bool:
        return not self.trees

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)

    def __mul__(self, other: Forest) -> Forest:
        if not isinstance(other, Forest):
            return NotImplemented
        if other.kind != self.kind:
            raise ValueError(f"cannot concatenate {self.kind} and {other.kind} forests")
        return Forest(self.kind, self.trees + other.trees)

    def __str__(self) -> str:
        return to_text(self)


class DecorationScheme:
    """Pairwise disjoint tag sets ``I_2, I_3, ...`` indexed by arity.

    For reduced trees the arity is the number of children of a node, for
    hypertrees the number of vertices of an edge.
    """

    def __init__(self, tags_by_arity: Mapping[int, Iterable[str]]):
        self._sets = {}
        self._arity = {}
        for n, tags in tags_by_arity.items():
            if n < 2:
                raise ValueError(f"arity {n} cannot carry decorations")
            self._sets[n] = frozenset(tags)
            for tag in self._sets[n]:
                if tag in self._arity:
                    raise ValueError(f"tag {tag!r} appears in I_{self._arity[tag]} and I_{n}")
                self._arity[tag] = n

    def tags(self, arity: int) -> frozenset:
        return self._sets.get(arity, frozenset())

    def arity(self, tag: str) -> int:
        try:
            return self._arity[tag]
        except KeyError:
            raise ValueError(f"unknown tag {tag!r}") from None

    def check(self, arity: int, tag: str | None) -> None:
        if tag is not None and self.arity(tag) != arity:
            raise ValueError(f"tag {tag!r} belongs to I_{self.arity(tag)}, used on arity {arity}")

    def validate(self, tree: Tree) -> None:
        """Raise ``ValueError`` unless every tag in ``tree`` has the right arity."""
        if isinstance(tree, Node):
            self.check(len(tree.children), tree.tag)
            for c in tree.children:
                self.validate(c)
        elif isinstance(tree, HyperTree):
            for e in tree.edges:
                self.check(e.size, e.tag)
                for m in e.members:
                    self.validate(m)

    def __repr__(self) -> str:
        body = ", ".join(f"{n}: {sorted(s)}" for n, s in sorted(self._sets.items()))
        return f"DecorationScheme({{{body}}})"


# --- constructors -------------------------------------------------------


def vee(children: Iterable[ReducedTree], tag: str | None = None,
        scheme: DecorationScheme | None = None) -> Node:
    """Graft ``children`` left to right on a new root vertex."""
    children = tuple(children)
    if len(children) < 2:
        raise ValueError(f"vee needs at least 2 children, got {len(children)}")
    if scheme is not None:
        scheme.check(len(children), tag)
    return Node(children, tag)


def _check_rooted_tree(t: HyperTree, what: str) -> None:
    if not is_rooted_tree(t):
        raise ValueError(f"{what} is only defined on planar rooted trees, got {t}")


def bplus(forest: Iterable[HyperTree]) -> HyperTree:
    """Graft the given planar rooted trees on a common new root."""
    trees = tuple(forest)
    for t in trees:
        _check_rooted_tree(t, "B+")
    return HyperTree(tuple(HyperEdge((t,)) for t in trees))


def butcher(t: HyperTree, u: HyperTree) -> HyperTree:
    """Left Butcher product: ``t`` becomes the leftmost branch of ``u``."""
    _check_rooted_tree(t, "the Butcher product")
    _check_rooted_tree(u, "the Butcher product")
    return HyperTree((HyperEdge((t,)),) + u.edges)


def beta(ts: Iterable[HyperTree], tag: str | None = None,
         scheme: DecorationScheme | None = None) -> HyperTree:
    """Collect the roots of ``t_1 ... t_n`` into a new leftmost edge at the root of ``t_n``.

    The edge lists ``t_{n-1}, ..., t_1`` after its root ``r_n``.
    """
    ts = tuple(ts)
    if len(ts) < 2:
        raise ValueError(f"beta needs at least 2 hypertrees, got {len(ts)}")
    if scheme is not None:
        scheme.check(len(ts), tag)
    *rest, last = ts
    return HyperTree((HyperEdge(tuple(reversed(rest)), tag),) + last.edges)


# --- measures -----------------------------------------------------------


@functools.lru_cache(maxsize=None)
def leaf_count(t: ReducedTree) -> int:
    if isinstance(t, Leaf):
        return 1
    return sum(leaf_count(c) for c in t.children)


@functools.lru_cache(maxsize=None)
def vertex_count(s: HyperTree) -> int:
    return 1 + sum(vertex_count(m) for e in s.edges for m in e.members)


@functools.lru_cache(maxsize=None)
def _tree_grade(t: Tree) -> int:
    if isinstance(t, Leaf):
        return 0
    if isinstance(t, Node):
        return 1 + sum(_tree_grade(c) for c in t.children)
    return sum(1 + sum(_tree_grade(m) for m in e.members) for e in t.edges)


def grade(x: Tree | Forest) -> int:
    """Inner vertices (reduced side) or edges (hyper side), summed over a forest."""
    if isinstance(x, Forest):
        return sum(_tree_grade(t) for t in x.trees)
    return _tree_grade(x)


def weight(x: Tree | Forest) -> int:
    """Leaves (resp. vertices) minus one, summed over the trees of a forest.

    Unlike ``grade`` this grading has finite-dimensional components, and
    both coproducts and the concatenation product preserve it.
    """
    if isinstance(x, Forest):
        return sum(weight(t) for t in x.trees)
    if isinstance(x, HyperTree):
        return vertex_count(x) - 1
    return leaf_count(x) - 1


def is_rooted_tree(s: HyperTree) -> bool:
    """True when every edge of ``s`` has exactly two vertices."""
    return all(len(e.members) == 1 and is_rooted_tree(e.members[0]) for e in s.edges)


def is_binary(t: ReducedTree) -> bool:
    if isinstance(t, Leaf):
        return True
    return len(t.children) == 2 and all(is_binary(c) for c in t.children)


def strip_tags(x):
    """Copy of a tree or forest with every decoration removed."""
    if isinstance(x, Forest):
        return Forest(x.kind, tuple(strip_tags(t) for t in x.trees))
    if isinstance(x, Leaf):
        return x
    if isinstance(x, Node):
        return Node(tuple(strip_tags(c) for c in x.children))
    return HyperTree(tuple(HyperEdge(tuple(strip_tags(m) for m in e.members)) for e in x.edges))


# --- text format --------------------------------------------------------


class ParseError(ValueError):
    """Malformed expression; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(@[A-Za-z0-9_]+)|([|()*\[\];@]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                if text[pos:].strip() == "":
                    break
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", bad)
            tok = m.group(1) or m.group(2)
            if tok == "@":
                raise ParseError("decoration '@' needs an identifier", m.start(2))
            self.tokens.append((tok, m.start(1) if m.group(1) else m.start(2)))
            pos = m.end()
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r}", self.pos())
        self.i += 1
        return tok

    def deco(self) -> str | None:
        tok = self.peek()
        if tok is not None and tok.startswith("@"):
            self.i += 1
            return tok[1:]
        return None

    def reduced(self) -> ReducedTree:
        tok = self.peek()
        if tok == "|":
            self.i += 1
            return LEAF
        if tok != "(":
            raise ParseError(f"expected '|' or '(', found {tok!r}" if tok else "unexpected end of input",
                             self.pos())
        start = self.pos()
        self.i += 1
        children = []
        while self.peek() != ")":
            children.append(self.reduced())
        self.take(")")
        if len(children) < 2:
            raise ParseError(f"node arity {len(children)}", start)
        return Node(tuple(children), self.deco())

    def hyper(self) -> HyperTree:
        self.take("*")
        if self.peek() != "[":
            return VERTEX
        self.i += 1
        edges = []
        while self.peek() != "]":
            edges.append(self.edge())
        if not edges:
            raise ParseError("empty edge list", self.pos())
        self.take("]")
        return HyperTree(tuple(edges))

    def edge(self) -> HyperEdge:
        start = self.pos()
        self.take("(")
        members = []
        while self.peek() != ")":
            if self.peek() == "(":
                self.i += 1
                members.append(self.hyper())
                self.take(")")
            else:
                members.append(self.hyper())
        self.take(")")
        if not members:
            raise ParseError("empty edge", start)
        return HyperEdge(tuple(members), self.deco())

    def term(self) -> Tree:
        tok = self.peek()
        if tok == "*":
            return self.hyper()
        return self.reduced()

    def done(self) -> None:
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r}", self.pos())


def _detect_kind(text: str) -> str:
    stripped = text.lstrip()
    if stripped.startswith("*"):
        return HYPER
    return REDUCED


def parse_tree(text: str, kind: str | None = None) -> Tree:
    """Parse a single tree; ``kind`` is inferred from the first token when omitted."""
    kind = kind or _detect_kind(text)
    p = _Parser(text)
    tree = p.hyper() if kind == HYPER else p.reduced()
    p.done()
    return tree


def parse_forest(text: str, kind: str | None = None) -> Forest:
    kind = kind or _detect_kind(text)
    p = _Parser(text)
    trees = []
    if p.peek() is not None:
        while True:
            trees.append(p.hyper() if kind == HYPER else p.reduced())
            if p.peek() != ";":
                break
            p.i += 1
    p.done()
    return Forest.of(*trees, kind=kind)


def parse(text: str, kind: str | None = None) -> Tree | Forest:
    """Parse a tree, or a forest when the text contains ``;`` or is empty."""
    if ";" in text or not text.strip():
        return parse_forest(text, kind)
    return parse_tree(text, kind)


def _deco(tag: str | None) -> str:
    return "" if tag is None else "@" + tag


@functools.lru_cache(maxsize=None)
def _tree_text(t: Tree) -> str:
    if isinstance(t, Leaf):
        return "|"
    if isinstance(t, Node):
        return "(" + " ".join(_tree_text(c) for c in t.children) + ")" + _deco(t.tag)
    if not t.edges:
        return "*"
    parts = []
    for e in t.edges:
        members = " ".join(_tree_text(m) if not m.edges else "(" + _tree_text(m) + ")" for m in e.members)
        parts.append("(" + members + ")" + _deco(e.tag))
    return "*[" + "".join(parts) + "]"


def to_text(x: Tree | Forest) -> str:
    """Canonical text; the unit forest prints as ``|`` or ``*``."""
    if isinstance(x, Forest):
        if not x.trees:
            return "|" if x.kind == REDUCED else "*"
        return ";".join(_tree_text(t) for t in x.trees)
    return _tree_text(x)
