"""Exhaustive generation of the four tree families, and the two partial orders."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .rotation import vertex_leaf_map, vertex_at
from .trees import LEAF, VERTEX, HyperEdge, HyperTree, Leaf, Node, leaf_count, to_text, vertex_count, strip_tags

__all__ = [
    "SizeKey",
    "DEFAULT_BOUND",
    "generate",
    "count",
    "contractions",
    "leq_reduced",
    "leq_hyper",
    "hyper_edge_sets",
    "minimal_maximal",
]

DEFAULT_BOUND = 8

BINARY = "binary"
REDUCED = "reduced"
ROOTEDTREE = "rootedtree"
HYPER = "hyper"

# measures allowed for each kind; each gives finite size classes
_MEASURES = {
    BINARY: ("internal", "leaves"),
    REDUCED: ("leaves",),
    ROOTEDTREE: ("edges", "vertices"),
    HYPER: ("vertices",),
}


@dataclass(frozen=True)
class SizeKey:
    kind: str
    measure: str
    value: int

    def __post_init__(self):
        if self.kind not in _MEASURES:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.measure == "internalVertices":
            object.__setattr__(self, "measure", "internal")
        if self.measure not in _MEASURES[self.kind]:
            raise ValueError(
                f"measure {self.measure!r} is not valid for {self.kind} trees "
                f"(use one of {', '.join(_MEASURES[self.kind])})")
        if self.value < 0:
            raise ValueError("size must be nonnegative")

    def normalized(self) -> tuple[str, int]:
        """(kind, number of leaves or vertices)."""
        if self.kind == BINARY and self.measure == "internal":
            return BINARY, self.value + 1
        if self.kind == ROOTEDTREE and self.measure == "edges":
            return ROOTEDTREE, self.value + 1
        return self.kind, self.value


def _compositions(n: int, min_parts: int):
    """Ordered compositions of n into positive parts, at least ``min_parts`` of them."""
    if n == 0:
        if min_parts <= 0:
            yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first, min_parts - 1):
            yield (first,) + rest


@functools.lru_cache(maxsize=None)
def _reduced(n: int, binary: bool) -> tuple:
    if n == 1:
        return (LEAF,)
    out = []
    for comp in _compositions(n, 2):
        if binary and len(comp) != 2:
            continue
        for children in itertools.product(*(_reduced(k, binary) for k in comp)):
            out.append(Node(children))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _edge_lists(n: int, binary: bool) -> tuple:
    """Tuples of edges carrying n vertices in total (the root excluded)."""
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for edge in _edges(first, binary):
            for rest in _edge_lists(n - first, binary):
                out.append((edge,) + rest)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _edges(n: int, binary: bool) -> tuple:
    """Single edges whose members carry n vertices in total."""
    out = []
    for comp in _compositions(n, 1):
        if binary and len(comp) != 1:
            continue
        for members in itertools.product(*(_hyper(k, binary) for k in comp)):
            out.append(HyperEdge(members))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _hyper(n: int, binary: bool) -> tuple:
    if n == 1:
        return (VERTEX,)
    return tuple(HyperTree(edges) for edges in _edge_lists(n - 1, binary))


def generate(key: SizeKey, bound: int = DEFAULT_BOUND) -> list:
    """All trees of one size class, sorted by canonical text."""
    if key.value > bound:
        raise ValueError(f"size {key.value} exceeds the bound {bound}")
    kind, n = key.normalized()
    if n == 0:
        return []
    if kind in (BINARY, REDUCED):
        trees = _reduced(n, kind == BINARY)
    else:
        trees = _hyper(n, kind == ROOTEDTREE)
    return sorted(trees, key=to_text)


def count(key: SizeKey, bound: int = DEFAULT_BOUND) -> int:
    """Size of a class, from the counting recurrences (no materialisation)."""
    if key.value > bound:
        raise ValueError(f"size {key.value} exceeds the bound {bound}")
    kind, n = key.normalized()
    if n == 0:
        return 0
    if kind in (BINARY, ROOTEDTREE):
        return _catalan(n - 1)
    return _little_schroeder(n)


@functools.lru_cache(maxsize=None)
def _catalan(n: int) -> int:
    if n == 0:
        return 1
    return sum(_catalan(i) * _catalan(n - 1 - i) for i in range(n))


@functools.lru_cache(maxsize=None)
def _little_schroeder(n: int) -> int:
    # reduced trees by leaves: s(1) = 1, s(n) = sum over compositions into >= 2 parts
    if n == 1:
        return 1
    return _compositions_weight(n, 2)


@functools.lru_cache(maxsize=None)
def _compositions_weight(n: int, min_parts: int) -> int:
    if n == 0:
        return 1 if min_parts <= 0 else 0
    top = n - max(min_parts - 1, 0)
    return sum(_little_schroeder(k) * _compositions_weight(n - k, max(min_parts - 1, 0))
               for k in range(1, top + 1))


# --- partial orders -------------------------------------------------------


def _contract(t, chosen: frozenset, path: tuple = ()):
    if isinstance(t, Leaf):
        return t
    children = []
    for i, c in enumerate(t.children):
        c2 = _contract(c, chosen, path + (i,))
        if path + (i,) in chosen:
            children.extend(c2.children)
        else:
            children.append(c2)
    return Node(tuple(children))


def _internal_edges(t, path: tuple = ()) -> list[tuple]:
    """Paths of the upper endpoint of every internal edge."""
    out = []
    if isinstance(t, Node):
        for i, c in enumerate(t.children):
            if isinstance(c, Node):
                out.append(path + (i,))
                out.extend(_internal_edges(c, path + (i,)))
    return out


def contractions(t) -> set:
    """Every tree obtained from ``t`` by glueing the ends of some internal edges."""
    t = strip_tags(t)
    edges = _internal_edges(t)
    out = set()
    for r in range(len(edges) + 1):
        for subset in itertools.combinations(edges, r):
            out.add(_contract(t, frozenset(subset)))
    return out


def leq_reduced(t1, t2) -> bool:
    """``t1 <= t2`` when ``t1`` comes from ``t2`` by glueing inner vertices."""
    if leaf_count(t1) != leaf_count(t2):
        return False
    return strip_tags(t1) in contractions(t2)


def hyper_edge_sets(s: HyperTree) -> list[frozenset]:
    """Edges of ``s`` as sets of vertex labels (labels from ``vertex_leaf_map``)."""
    labels = vertex_leaf_map(s)
    out = []
    for p, lab in labels.items():
        v = vertex_at(s, p)
        for e, edge in enumerate(v.edges):
            members = {labels[p + ((e, m),)] for m in range(len(edge.members))}
            out.append(frozenset(members | {lab}))
    return out


def leq_hyper(s1: HyperTree, s2: HyperTree) -> bool:
    """``s1 <= s2`` when every edge of ``s2`` lies inside an edge of ``s1``.

    Both vertex sets are identified through the canonical labelling, which
    gives the root the highest label in each.
    """
    if vertex_count(s1) != vertex_count(s2):
        return False
    big = hyper_edge_sets(s1)
    return all(any(e <= f for f in big) for e in hyper_edge_sets(s2))


def minimal_maximal(key: SizeKey) -> tuple[list, list]:
    """Minimal and maximal elements of a size class under its order."""
    items = generate(key)
    if key.kind in (BINARY, REDUCED):
        leq = leq_reduced
    else:
        leq = leq_hyper
    minimal = [x for x in items if not any(y != x and leq(y, x) for y in items)]
    maximal = [x for x in items if not any(y != x and leq(x, y) for y in items)]
    return minimal, maximal
