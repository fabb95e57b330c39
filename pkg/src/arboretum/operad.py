"""Nonsymmetric operad structure on leaf-labelled reduced trees and vertex-labelled hypertrees.

Labels are positional.  On a reduced tree of arity n the leaves are 1..n
from left to right; on a hypertree the vertices carry the labels of
``vertex_leaf_map`` (the root has the largest).  The unit ``e`` is the
one-edge tree ``|`` (resp. the single vertex ``*``).
"""

from __future__ import annotations

from .linear import LinComb
from .rotation import vertex_leaf_map
from .trees import HyperEdge, HyperTree, Leaf, Node, kind_of, leaf_count, vertex_count

__all__ = ["arity", "compose", "compose_hyper", "partial_compose", "gamma", "right_pre_lie", "right_bracket"]


def arity(t) -> int:
    if isinstance(t, HyperTree):
        return vertex_count(t)
    return leaf_count(t)


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"position {i} out of range 1..{n}")


def compose(sigma, i: int, tau):
    """``sigma o_i tau``: leaf number ``i`` of ``sigma`` replaced by ``tau``."""
    _check_index(i, leaf_count(sigma))
    return _substitute(sigma, i, tau)[0]


def _substitute(t, i: int, tau):
    """Return (tree, number of leaves consumed) with leaf ``i`` (1-based, local) replaced."""
    if isinstance(t, Leaf):
        return (tau if i == 1 else t), 1
    seen = 0
    children = list(t.children)
    for k, c in enumerate(children):
        n = leaf_count(c)
        if seen < i <= seen + n:
            children[k] = _substitute(c, i - seen, tau)[0]
        seen += n
    return Node(tuple(children), t.tag), seen


def compose_hyper(t1: HyperTree, i: int, t2: HyperTree) -> HyperTree:
    """Vertex number ``i`` of ``t1`` becomes the root of ``t2``; the edges of
    ``t2`` at its root go to the right of the edges already at that vertex."""
    labels = vertex_leaf_map(t1)
    _check_index(i, len(labels))
    (path,) = [p for p, lab in labels.items() if lab == i]
    return _graft_at(t1, path, t2.edges)


def _graft_at(s: HyperTree, path: tuple, edges: tuple) -> HyperTree:
    if not path:
        return HyperTree(s.edges + edges)
    (e, m), rest = path[0], path[1:]
    edge = s.edges[e]
    members = edge.members[:m] + (_graft_at(edge.members[m], rest, edges),) + edge.members[m + 1:]
    return HyperTree(s.edges[:e] + (HyperEdge(members, edge.tag),) + s.edges[e + 1:])


def partial_compose(x, i: int, y):
    """``x o_i y`` on either side."""
    if kind_of(x) != kind_of(y):
        raise ValueError("cannot compose a reduced tree with a hypertree")
    return compose_hyper(x, i, y) if isinstance(x, HyperTree) else compose(x, i, y)


def gamma(t, args):
    """Full composition: every position ``i`` of ``t`` is replaced by ``args[i-1]``.

    Folded from the right so that earlier positions never shift.
    """
    args = list(args)
    if len(args) != arity(t):
        raise ValueError(f"gamma needs {arity(t)} arguments, got {len(args)}")
    for i in range(len(args), 0, -1):
        t = partial_compose(t, i, args[i - 1])
    return t


def right_pre_lie(x, y) -> LinComb:
    """``x <- y = sum_i x o_i y``."""
    return LinComb((partial_compose(x, i, y), 1) for i in range(1, arity(x) + 1))


def right_bracket(x, y) -> LinComb:
    """``[x, y] = x <- y - y <- x``."""
    return right_pre_lie(x, y) - right_pre_lie(y, x)
