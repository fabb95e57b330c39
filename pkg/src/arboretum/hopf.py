"""Hopf algebras of reduced planar forests and of planar rooted hyperforests.

Both are free noncommutative algebras (product = concatenation of forests)
with a cut coproduct:

* reduced side: admissible cuts of inner edges; the pruning is the word of
  cut subtrees read left to right, the trunk is what is left with a leaf in
  place of each cut subtree;
* hyper side: right admissible vertex-cuts, a single cut at ``v`` taking the
  ``i`` rightmost edges rooted at ``v`` (with everything above them) and
  grafting them on a new root.

Graded pieces for the inner-vertex (edge) grading are infinite, since a
corolla of any width has degree one.  Truncated computations therefore use
``weight`` (leaves minus trees), which both coproducts preserve and whose
pieces are finite.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Callable

from . import enumeration
from .linear import LinComb
from .rotation import phi, phi_inv, vertex_leaf_map
from .trees import (
    HYPER,
    LEAF,
    REDUCED,
    VERTEX,
    Forest,
    HyperTree,
    Leaf,
    Node,
    grade,
    is_binary,
    is_unit,
    kind_of,
    weight,
)

__all__ = [
    "Cut",
    "GradedMap",
    "DEFAULT_TRUNCATION",
    "concat",
    "mul",
    "tensor_mul",
    "admissible_cuts",
    "right_admissible_cuts",
    "apply_cut",
    "apply_right_cut",
    "coproduct",
    "coproduct_reduced",
    "coproduct_hyper",
    "reduced_coproduct",
    "counit",
    "antipode",
    "basis_forests",
    "convolve",
    "identity_map",
    "unit_map",
    "antipode_map",
    "dual_character",
    "grading_derivation",
    "pre_lie_graft",
    "pre_lie_hyper",
    "lie_bracket",
    "graft_count",
    "cut_count",
    "is_primitive",
    "is_binary_forest",
    "is_right_comb",
    "is_left_comb",
    "is_ladder",
    "is_corolla",
    "is_blob",
    "right_comb",
    "left_comb",
]

DEFAULT_TRUNCATION = 5


def _as_forest(x) -> Forest:
    if isinstance(x, Forest):
        return x
    return Forest.of(x, kind=kind_of(x))


def _as_lincomb(x) -> LinComb:
    if isinstance(x, LinComb):
        return x
    return LinComb.basis(_as_forest(x))


def concat(f1: Forest, f2: Forest) -> Forest:
    return _as_forest(f1) * _as_forest(f2)


def mul(a, b) -> LinComb:
    """Product of two elements (forests, trees or LinCombs of forests)."""
    return _as_lincomb(a).bilinear(_as_lincomb(b), concat)


def tensor_mul(a: LinComb, b: LinComb) -> LinComb:
    """Componentwise product in the tensor square (or any tensor power)."""
    return a.bilinear(b, lambda x, y: tuple(p * q for p, q in zip(x, y)))


# --- cuts ---------------------------------------------------------------------


@dataclass(frozen=True)
class Cut:
    """An admissible cut.

    ``parts`` holds node paths (reduced side; the edge entering each node
    is cut) or ``(vertex path, i)`` single right cuts (hyper side).  The
    reduced total cut has no edges and is flagged by ``total``.
    """

    parts: frozenset = frozenset()
    total: bool = False


def _antichains(t, path: tuple) -> list[frozenset]:
    if isinstance(t, Leaf):
        return [frozenset()]
    per_child = []
    for i, c in enumerate(t.children):
        options = _antichains(c, path + (i,))
        if isinstance(c, Node):
            options = options + [frozenset({path + (i,)})]
        per_child.append(options)
    return [frozenset().union(*combo) for combo in itertools.product(*per_child)]


def admissible_cuts(t) -> list[Cut]:
    """Empty cut, total cut and every nonempty antichain of inner edges."""
    if isinstance(t, Leaf):
        raise ValueError("the unit tree has no admissible cuts")
    cuts = [Cut(c) for c in sorted(_antichains(t, ()), key=lambda c: (len(c), sorted(c)))]
    return cuts + [Cut(total=True)]


def _replace_paths(t, paths: frozenset, path: tuple = ()):
    if path in paths:
        return LEAF
    if isinstance(t, Leaf):
        return t
    return Node(tuple(_replace_paths(c, paths, path + (i,)) for i, c in enumerate(t.children)), t.tag)


def _subtree(t, path: tuple):
    for i in path:
        t = t.children[i]
    return t


def apply_cut(t, cut: Cut) -> tuple[Forest, Forest]:
    """(pruning, trunk) of a reduced tree."""
    if cut.total:
        return Forest.of(t, kind=REDUCED), Forest.unit(REDUCED)
    pieces = [_subtree(t, p) for p in sorted(cut.parts)]
    return Forest(REDUCED, tuple(pieces)), Forest.of(_replace_paths(t, cut.parts), kind=REDUCED)


def _right_cut_sets(s: HyperTree, path: tuple) -> list[frozenset]:
    f = len(s.edges)
    out = []
    for i in range(f + 1):
        here = frozenset({(path, i)}) if i else frozenset()
        per_member = [
            _right_cut_sets(m, path + ((e, k),))
            for e in range(f - i)
            for k, m in enumerate(s.edges[e].members)
        ]
        for combo in itertools.product(*per_member):
            out.append(here.union(*combo))
    return out


def right_admissible_cuts(s: HyperTree) -> list[Cut]:
    """Collections of single right vertex-cuts met at most once on every path from the root.

    Includes the empty cut and the total cut ``{(root, f(root))}``.
    """
    return [Cut(c) for c in sorted(_right_cut_sets(s, ()), key=lambda c: (len(c), sorted(c)))]


def _strip_right(s: HyperTree, cuts: dict, path: tuple) -> HyperTree:
    i = cuts.get(path, 0)
    kept = s.edges[: len(s.edges) - i]
    return HyperTree(tuple(
        type(e)(tuple(_strip_right(m, cuts, path + ((j, k),)) for k, m in enumerate(e.members)), e.tag)
        for j, e in enumerate(kept)))


def _vertex(s: HyperTree, path: tuple) -> HyperTree:
    for e, m in path:
        s = s.edges[e].members[m]
    return s


def apply_right_cut(s: HyperTree, cut: Cut) -> tuple[Forest, Forest]:
    """(pruning, trunk) of a hypertree; pieces are ordered left to right.

    Left to right means by the leaves they become under ``phi_inv``, i.e.
    by the smallest vertex label they contain.
    """
    if not cut.parts:
        return Forest.unit(HYPER), Forest.of(s, kind=HYPER)
    labels = vertex_leaf_map(s)
    keyed = []
    for vpath, i in cut.parts:
        v = _vertex(s, vpath)
        f = len(v.edges)
        piece = HyperTree(v.edges[f - i:])
        first = min(lab for p, lab in labels.items()
                    if len(p) > len(vpath) and p[: len(vpath)] == vpath and p[len(vpath)][0] >= f - i)
        keyed.append((first, piece))
    keyed.sort(key=lambda kp: kp[0])
    trunk = _strip_right(s, dict(cut.parts), ())
    return Forest.of(*(p for _, p in keyed), kind=HYPER), Forest.of(trunk, kind=HYPER)


@functools.lru_cache(maxsize=None)
def _tree_coproduct(t) -> LinComb:
    if is_unit(t):
        u = Forest.unit(kind_of(t))
        return LinComb.basis((u, u))
    if isinstance(t, HyperTree):
        return LinComb((apply_right_cut(t, c), 1) for c in right_admissible_cuts(t))
    return LinComb((apply_cut(t, c), 1) for c in admissible_cuts(t))


def coproduct(x) -> LinComb:
    """Coproduct of a tree, forest, or LinComb of forests (multiplicative on forests)."""
    if isinstance(x, LinComb):
        return x.map_basis(coproduct)
    f = _as_forest(x)
    u = Forest.unit(f.kind)
    out = LinComb.basis((u, u))
    for t in f.trees:
        out = tensor_mul(out, _tree_coproduct(t))
    return out


def coproduct_reduced(x) -> LinComb:
    if _kind(x) != REDUCED:
        raise ValueError("coproduct_reduced expects reduced forests")
    return coproduct(x)


def coproduct_hyper(x) -> LinComb:
    if _kind(x) != HYPER:
        raise ValueError("coproduct_hyper expects hyperforests")
    return coproduct(x)


def _kind(x) -> str:
    if isinstance(x, LinComb):
        kinds = {b.kind for b in x}
        if len(kinds) > 1:
            raise ValueError("mixed kinds in one combination")
        return kinds.pop() if kinds else REDUCED
    return _as_forest(x).kind


def reduced_coproduct(x) -> LinComb:
    """``Delta(x) - x (x) 1 - 1 (x) x`` on the augmentation ideal."""
    x = _as_lincomb(x)
    total = coproduct(x)
    for f, c in x.items():
        if f.is_unit():
            continue
        u = Forest.unit(f.kind)
        total = total - LinComb({(f, u): c, (u, f): c})
    return total


def counit(x) -> int:
    if isinstance(x, LinComb):
        return sum(c for f, c in x.items() if f.is_unit())
    return 1 if _as_forest(x).is_unit() else 0


@functools.lru_cache(maxsize=None)
def _antipode(f: Forest, side: str) -> LinComb:
    if f.is_unit():
        return LinComb.basis(f)
    out = -LinComb.basis(f)
    for (p, r), c in reduced_coproduct(f).items():
        if side == "left":
            out = out - c * mul(_antipode(p, side), r)
        else:
            out = out - c * mul(p, _antipode(r, side))
    return out


def antipode(x, formula: str = "left") -> LinComb:
    """Antipode from the recursion ``S(x) = -x - sum S(x')x''`` (or ``- sum x'S(x'')`` with ``formula="right"``)."""
    if formula not in ("left", "right"):
        raise ValueError("formula must be 'left' or 'right'")
    if isinstance(x, LinComb):
        return x.map_basis(lambda f: _antipode(f, formula))
    return _antipode(_as_forest(x), formula)


# --- truncated linear maps ---------------------------------------------------


@functools.lru_cache(maxsize=None)
def _trees_of_weight(kind: str, w: int) -> tuple:
    if kind == REDUCED:
        key = enumeration.SizeKey("reduced", "leaves", w + 1)
    else:
        key = enumeration.SizeKey("hyper", "vertices", w + 1)
    return tuple(enumeration.generate(key, bound=max(enumeration.DEFAULT_BOUND, w + 1)))


@functools.lru_cache(maxsize=None)
def basis_forests(kind: str, max_weight: int, max_grade: int | None = None) -> tuple:
    """All forests of weight <= ``max_weight`` (and grade <= ``max_grade``), unit included."""
    out = []

    def extend(prefix: tuple, budget: int):
        out.append(Forest(kind, prefix))
        for w in range(1, budget + 1):
            for t in _trees_of_weight(kind, w):
                extend(prefix + (t,), budget - w)

    extend((), max_weight)
    if max_grade is not None:
        out = [f for f in out if grade(f) <= max_grade]
    return tuple(out)


class GradedMap:
    """Linear map given on every basis forest of weight <= ``truncation``."""

    def __init__(self, kind: str, truncation: int, table: dict):
        missing = [f for f in basis_forests(kind, truncation) if f not in table]
        if missing:
            raise ValueError(f"map undefined on {len(missing)} basis forests, e.g. {missing[0]}")
        self.kind = kind
        self.truncation = truncation
        self.table = {f: _as_value(v) for f, v in table.items()}

    @classmethod
    def from_function(cls, kind: str, truncation: int, fn: Callable) -> GradedMap:
        return cls(kind, truncation, {f: fn(f) for f in basis_forests(kind, truncation)})

    def __call__(self, x) -> LinComb:
        if isinstance(x, LinComb):
            return x.map_basis(self._at)
        return self._at(_as_forest(x))

    def _at(self, f: Forest) -> LinComb:
        try:
            return self.table[f]
        except KeyError:
            raise ValueError(f"{f} lies beyond truncation weight {self.truncation}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMap):
            return NotImplemented
        return (self.kind, self.truncation) == (other.kind, other.truncation) and all(
            self.table[f] == other.table[f] for f in basis_forests(self.kind, self.truncation))

    def __add__(self, other: GradedMap) -> GradedMap:
        _check_compatible(self, other)
        return GradedMap(self.kind, self.truncation, {f: self.table[f] + other.table[f] for f in self.table})

    def __sub__(self, other: GradedMap) -> GradedMap:
        _check_compatible(self, other)
        return GradedMap(self.kind, self.truncation, {f: self.table[f] - other.table[f] for f in self.table})

    def __repr__(self) -> str:
        return f"GradedMap({self.kind}, truncation={self.truncation}, {len(self.table)} entries)"


def _as_value(v) -> LinComb:
    if isinstance(v, LinComb):
        return v
    if isinstance(v, int):
        raise TypeError("use a LinComb (scalars are multiples of the unit forest)")
    return _as_lincomb(v)


def _check_compatible(f: GradedMap, g: GradedMap) -> None:
    if f.kind != g.kind:
        raise ValueError(f"cannot combine maps on {f.kind} and {g.kind} forests")
    if f.truncation != g.truncation:
        raise ValueError(f"truncation mismatch: {f.truncation} vs {g.truncation}")


def convolve(f: GradedMap, g: GradedMap) -> GradedMap:
    """``f * g = m (f (x) g) Delta``."""
    _check_compatible(f, g)
    table = {}
    for x in basis_forests(f.kind, f.truncation):
        acc = LinComb()
        for (p, r), c in coproduct(x).items():
            acc = acc + c * mul(f.table[p], g.table[r])
        table[x] = acc
    return GradedMap(f.kind, f.truncation, table)


def identity_map(kind: str, truncation: int = DEFAULT_TRUNCATION) -> GradedMap:
    return GradedMap.from_function(kind, truncation, LinComb.basis)


def unit_map(kind: str, truncation: int = DEFAULT_TRUNCATION) -> GradedMap:
    """``eta o epsilon``, the unit for convolution."""
    u = Forest.unit(kind)
    return GradedMap.from_function(kind, truncation, lambda f: LinComb.basis(u, counit(f)))


def antipode_map(kind: str, truncation: int = DEFAULT_TRUNCATION, formula: str = "left") -> GradedMap:
    return GradedMap.from_function(kind, truncation, lambda f: antipode(f, formula))


def dual_character(x, truncation: int = DEFAULT_TRUNCATION) -> GradedMap:
    """Linear form ``<delta'_x, .>`` valued in multiples of the unit.

    ``x`` is a tree, or a LinComb of trees extended linearly.  Symmetry
    factors of planar trees are 1, so this is the plain dual basis.
    """
    x = x if isinstance(x, LinComb) else LinComb.basis(x)
    kinds = {kind_of(t) for t in x} or {REDUCED}
    kind = kinds.pop()
    u = Forest.unit(kind)
    coeffs = {Forest.of(t, kind=kind): c for t, c in x.items()}
    return GradedMap.from_function(kind, truncation, lambda f: LinComb.basis(u, coeffs.get(f, 0)))


def grading_derivation(x) -> LinComb:
    """``Y(x) = n x`` on elements of degree n."""
    return _as_lincomb(x).map_basis(lambda f: LinComb.basis(f, grade(f)))


# --- pre-Lie structure ----------------------------------------------------------


def _graftings(t, u) -> list:
    """All trees obtained by putting ``t`` on one leaf of ``u``."""
    if isinstance(u, Leaf):
        return [t]
    out = []
    for i, c in enumerate(u.children):
        for g in _graftings(t, c):
            out.append(Node(u.children[:i] + (g,) + u.children[i + 1:], u.tag))
    return out


def pre_lie_graft(t, u) -> LinComb:
    """``t -> u``: sum of the graftings of ``t`` on every leaf of ``u``."""
    if is_unit(t) or is_unit(u):
        raise ValueError("the pre-Lie product is defined on non-unit trees")
    if kind_of(t) != REDUCED or kind_of(u) != REDUCED:
        raise ValueError("pre_lie_graft expects reduced trees")
    return LinComb((g, 1) for g in _graftings(t, u))


def pre_lie_hyper(s1: HyperTree, s2: HyperTree) -> LinComb:
    """Pre-Lie product on hypertrees, transported through ``phi``."""
    if is_unit(s1) or is_unit(s2):
        raise ValueError("the pre-Lie product is defined on non-unit hypertrees")
    return pre_lie_graft(phi_inv(s1), phi_inv(s2)).map_basis(lambda v: LinComb.basis(phi(v)))


def lie_bracket(t, u) -> LinComb:
    """``t -> u - u -> t`` on either side."""
    if is_unit(t) or is_unit(u):
        raise ValueError("the Lie bracket is defined on non-unit trees")
    product = pre_lie_hyper if kind_of(t) == HYPER else pre_lie_graft
    return product(t, u) - product(u, t)


def graft_count(t, u, v) -> int:
    """Number of ways to graft ``t`` on a leaf of ``u`` and obtain ``v``."""
    return pre_lie_graft(t, u)[v]


def cut_count(t, u, v) -> int:
    """Number of elementary cuts of ``v`` with pruning ``t`` and trunk ``u``."""
    target = (Forest.of(t, kind=REDUCED), Forest.of(u, kind=REDUCED))
    return sum(1 for c in admissible_cuts(v) if len(c.parts) == 1 and apply_cut(v, c) == target)


# --- primitives and subalgebras ----------------------------------------------


def is_primitive(x) -> bool:
    return reduced_coproduct(x) == 0


def is_binary_forest(f: Forest) -> bool:
    return f.kind == REDUCED and all(is_binary(t) for t in f.trees)


def right_comb(n: int):
    """``t_r^(n)``: n leaves, growing to the right."""
    t = LEAF
    for _ in range(n - 1):
        t = Node((LEAF, t))
    return t


def left_comb(n: int):
    t = LEAF
    for _ in range(n - 1):
        t = Node((t, LEAF))
    return t


def _forest_trees(x) -> tuple:
    return _as_forest(x).trees


def is_right_comb(x) -> bool:
    return all(kind_of(t) == REDUCED and t == right_comb(_leaves(t)) for t in _forest_trees(x))


def is_left_comb(x) -> bool:
    return all(kind_of(t) == REDUCED and t == left_comb(_leaves(t)) for t in _forest_trees(x))


def _leaves(t) -> int:
    return 1 if isinstance(t, Leaf) else sum(_leaves(c) for c in t.children)


def _is_ladder_tree(s: HyperTree) -> bool:
    if not s.edges:
        return True
    return len(s.edges) == 1 and len(s.edges[0].members) == 1 and _is_ladder_tree(s.edges[0].members[0])


def is_ladder(x) -> bool:
    return all(kind_of(s) == HYPER and _is_ladder_tree(s) for s in _forest_trees(x))


def is_corolla(x) -> bool:
    """Rooted-tree corollas: every edge at the root has one member, a single vertex."""
    return all(kind_of(s) == HYPER and all(e.members == (VERTEX,) for e in s.edges)
               for s in _forest_trees(x))


def is_blob(x) -> bool:
    """One edge holding every vertex (the image of a reduced corolla)."""
    return all(kind_of(s) == HYPER and len(s.edges) == 1 and all(m == VERTEX for m in s.edges[0].members)
               for s in _forest_trees(x))
