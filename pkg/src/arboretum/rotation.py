"""The rotation correspondence between reduced trees and hypertrees.

Locations are root-to-node paths.  A node of a reduced tree is addressed by
the tuple of child indices leading to it; a vertex of a hypertree by a tuple
of ``(edge index, member index)`` steps; an edge of a hypertree by the pair
``(vertex path of its root, edge index)``.  All indices are 0-based.
"""

from __future__ import annotations

import functools

from .trees import (
    LEAF,
    VERTEX,
    DecorationScheme,
    HyperEdge,
    HyperTree,
    Leaf,
    Node,
    beta,
    butcher,
    is_binary,
)

__all__ = [
    "phi",
    "phi_inv",
    "phi_binary",
    "decompose",
    "omega",
    "vertex_leaf_map",
    "phi_decorated",
    "node_at",
    "vertex_at",
    "internal_paths",
    "vertex_paths",
    "edge_addresses",
    "edge_at",
]


@functools.lru_cache(maxsize=None)
def phi(t) -> HyperTree:
    """Map a reduced tree to its hypertree; decorations follow the vertices."""
    if isinstance(t, Leaf):
        return VERTEX
    return beta([phi(c) for c in t.children], t.tag)


def decompose(s: HyperTree) -> tuple[list[HyperTree], str | None]:
    """Unique ``(s_1, ..., s_n), tag`` with ``s = beta(s_1, ..., s_n)`` built on the leftmost root edge."""
    if not s.edges:
        raise ValueError("the single vertex is not a beta product")
    first, rest = s.edges[0], s.edges[1:]
    return list(reversed(first.members)) + [HyperTree(rest)], first.tag


@functools.lru_cache(maxsize=None)
def phi_inv(s: HyperTree):
    if not s.edges:
        return LEAF
    parts, tag = decompose(s)
    return Node(tuple(phi_inv(p) for p in parts), tag)


def phi_binary(t) -> HyperTree:
    """Knuth's map on planar binary trees, through the Butcher product."""
    if not is_binary(t):
        raise ValueError(f"{t} is not a binary tree")
    if isinstance(t, Leaf):
        return VERTEX
    left, right = t.children
    return butcher(phi_binary(left), phi_binary(right))


def phi_decorated(t, scheme: DecorationScheme) -> HyperTree:
    """Decorated bijection: an edge with n vertices keeps the tag of its n-ary node."""
    scheme.validate(t)
    return phi(t)


# --- addressing -----------------------------------------------------------


def node_at(t, path: tuple):
    for i in path:
        t = t.children[i]
    return t


def vertex_at(s: HyperTree, path: tuple) -> HyperTree:
    for e, m in path:
        s = s.edges[e].members[m]
    return s


def edge_at(s: HyperTree, address: tuple) -> HyperEdge:
    vpath, e = address
    return vertex_at(s, vpath).edges[e]


def internal_paths(t, prefix: tuple = ()) -> list[tuple]:
    """Paths of internal nodes in preorder."""
    if isinstance(t, Leaf):
        return []
    out = [prefix]
    for i, c in enumerate(t.children):
        out.extend(internal_paths(c, prefix + (i,)))
    return out


def vertex_paths(s: HyperTree, prefix: tuple = ()) -> list[tuple]:
    out = [prefix]
    for e, edge in enumerate(s.edges):
        for m, member in enumerate(edge.members):
            out.extend(vertex_paths(member, prefix + ((e, m),)))
    return out


def edge_addresses(s: HyperTree) -> list[tuple]:
    return [(p, e) for p in vertex_paths(s) for e in range(len(vertex_at(s, p).edges))]


def _shift_root_edges(path: tuple) -> tuple:
    # paths of t_n inside beta(..., t_n): root edges move one slot right
    if not path:
        return path
    (e, m), *rest = path
    return ((e + 1, m), *rest)


def omega(t) -> dict[tuple, tuple]:
    """Bijection from internal nodes of ``t`` to edges of ``phi(t)``.

    Returns ``{node path: edge address}``.  A node with n children goes to
    an edge with n vertices; the root goes to the leftmost root edge.
    """
    if isinstance(t, Leaf):
        return {}
    n = len(t.children)
    out = {(): ((), 0)}
    for k, child in enumerate(t.children):
        sub = omega(child)
        if k < n - 1:
            step = (0, n - 2 - k)
            for p, (vpath, e) in sub.items():
                out[(k,) + p] = ((step,) + vpath, e)
        else:
            for p, (vpath, e) in sub.items():
                out[(k,) + p] = (_shift_root_edges(vpath), e + 1 if not vpath else e)
    return out


def vertex_leaf_map(s: HyperTree) -> dict[tuple, int]:
    """Label the vertices of ``s`` by the leaves ``1..n`` of ``phi_inv(s)``.

    The root gets the rightmost leaf, ``n``.
    """
    labels: dict[tuple, int] = {}
    _label(s, (), 0, labels)
    return labels


def _label(s: HyperTree, prefix: tuple, offset: int, out: dict) -> int:
    """Fill ``out`` for ``s`` sitting at ``prefix``; return the number of vertices."""
    if not s.edges:
        out[prefix] = offset + 1
        return 1
    first, rest = s.edges[0], HyperTree(s.edges[1:])
    used = 0
    for m in reversed(range(len(first.members))):
        used += _label(first.members[m], prefix + ((0, m),), offset + used, out)
    tail: dict = {}
    used += _label(rest, (), offset + used, tail)
    for p, lab in tail.items():
        out[prefix + _shift_root_edges(p)] = lab
    return used
