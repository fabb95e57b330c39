"""Exhaustive property suites used by ``arboretum check``.

``max_grade`` bounds the total weight (leaves minus one, resp. vertices
minus one) of the arguments of every checked identity.  Each suite is a
generator of failure descriptions; an empty suite means every identity held.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, Iterator

from . import hopf, operad
from .enumeration import SizeKey, generate, leq_hyper, leq_reduced
from .linear import LinComb
from .rotation import omega, phi, phi_binary, phi_inv, edge_at
from .trees import HYPER, LEAF, REDUCED, Forest, grade, is_binary, leaf_count, to_text, vertex_count, weight

__all__ = ["SUITES", "run_suite"]


def _reduced_trees(max_weight: int, unit: bool = False) -> list:
    lo = 1 if unit else 2
    return [t for n in range(lo, max_weight + 2) for t in generate(SizeKey("reduced", "leaves", n), bound=max_weight + 1)]


def _hyper_trees(max_weight: int, unit: bool = False) -> list:
    lo = 1 if unit else 2
    return [t for n in range(lo, max_weight + 2) for t in generate(SizeKey("hyper", "vertices", n), bound=max_weight + 1)]


def _phi_forest(f: Forest) -> Forest:
    return Forest.of(*(phi(t) for t in f.trees), kind=HYPER)


def bijection(max_grade: int, seed: int = 0) -> Iterator[str]:
    for t in _reduced_trees(max_grade, unit=True):
        s = phi(t)
        if phi_inv(s) != t:
            yield f"phi_inv(phi(t)) != t for t = {to_text(t)}"
        if grade(s) != grade(t) or vertex_count(s) != leaf_count(t):
            yield f"grading not transported for t = {to_text(t)}"
        for node, addr in omega(t).items():
            n = len(_node(t, node).children)
            if edge_at(s, addr).size != n:
                yield f"omega breaks arity at node {node} of {to_text(t)}"
        if is_binary(t) and phi_binary(t) != s:
            yield f"phi disagrees with the Butcher recursion on {to_text(t)}"
    for s in _hyper_trees(max_grade, unit=True):
        if phi(phi_inv(s)) != s:
            yield f"phi(phi_inv(s)) != s for s = {to_text(s)}"


def _node(t, path):
    for i in path:
        t = t.children[i]
    return t


def order(max_grade: int, seed: int = 0) -> Iterator[str]:
    for n in range(1, max_grade + 2):
        red = generate(SizeKey("reduced", "leaves", n), bound=max_grade + 1)
        hyp = generate(SizeKey("hyper", "vertices", n), bound=max_grade + 1)
        for name, items, leq in (("reduced", red, leq_reduced), ("hyper", hyp, leq_hyper)):
            rel = {(a, b): leq(a, b) for a in items for b in items}
            for a in items:
                if not rel[a, a]:
                    yield f"{name} order not reflexive at {to_text(a)}"
            for a, b in itertools.permutations(items, 2):
                if rel[a, b] and rel[b, a]:
                    yield f"{name} order not antisymmetric: {to_text(a)}, {to_text(b)}"
            for a, b, c in itertools.product(items, repeat=3):
                if rel[a, b] and rel[b, c] and not rel[a, c]:
                    yield f"{name} order not transitive: {to_text(a)}, {to_text(b)}, {to_text(c)}"
        for a in red:
            for b in red:
                if leq_reduced(a, b) != leq_hyper(phi(a), phi(b)):
                    yield f"phi not monotone on {to_text(a)} <= {to_text(b)}"


def _tensor3(x: LinComb, left: bool) -> LinComb:
    out = LinComb()
    for (p, r), c in x.items():
        if left:
            out = out + c * hopf.coproduct(p).map_basis(lambda pq: LinComb.basis(pq + (r,)))
        else:
            out = out + c * hopf.coproduct(r).map_basis(lambda pq: LinComb.basis((p,) + pq))
    return out


def hopf_axioms(max_grade: int, seed: int = 0) -> Iterator[str]:
    for kind in (REDUCED, HYPER):
        basis = hopf.basis_forests(kind, max_grade)
        unit = Forest.unit(kind)
        for f in basis:
            d = hopf.coproduct(f)
            if _tensor3(d, True) != _tensor3(d, False):
                yield f"coassociativity fails on {to_text(f)}"
            left = d.map_basis(lambda pr: LinComb.basis(pr[1], hopf.counit(pr[0])))
            right = d.map_basis(lambda pr: LinComb.basis(pr[0], hopf.counit(pr[1])))
            if left != LinComb.basis(f) or right != LinComb.basis(f):
                yield f"counit law fails on {to_text(f)}"
            if any(grade(p) + grade(r) != grade(f) for p, r in d):
                yield f"grading not conserved by the coproduct of {to_text(f)}"
            eps = LinComb.basis(unit, hopf.counit(f))
            for side in ("left", "right"):
                s_id = d.map_basis(lambda pr: hopf.mul(hopf.antipode(pr[0], side), pr[1]))
                id_s = d.map_basis(lambda pr: hopf.mul(pr[0], hopf.antipode(pr[1], side)))
                if s_id != eps or id_s != eps:
                    yield f"antipode ({side} recursion) fails on {to_text(f)}"
            if hopf.antipode(f, "left") != hopf.antipode(f, "right"):
                yield f"the two antipode recursions disagree on {to_text(f)}"
        for f, g in itertools.product(basis, repeat=2):
            if f.is_unit() or g.is_unit() or weight(f) + weight(g) > max_grade:
                continue
            if hopf.coproduct(f * g) != hopf.tensor_mul(hopf.coproduct(f), hopf.coproduct(g)):
                yield f"coproduct not multiplicative on {to_text(f)} . {to_text(g)}"
    for t in _reduced_trees(max_grade):
        transported = hopf.coproduct(t).map_basis(
            lambda pr: LinComb.basis((_phi_forest(pr[0]), _phi_forest(pr[1]))))
        if hopf.coproduct(phi(t)) != transported:
            yield f"transfer identity fails on {to_text(t)}"
    rng = random.Random(seed)
    trunc = min(max_grade, 3)
    maps = [_random_map(rng, REDUCED, trunc) for _ in range(3)]
    f, g, h = maps
    if hopf.convolve(hopf.convolve(f, g), h) != hopf.convolve(f, hopf.convolve(g, h)):
        yield f"convolution not associative (seed {seed})"


def _random_map(rng: random.Random, kind: str, truncation: int) -> hopf.GradedMap:
    basis = hopf.basis_forests(kind, truncation)
    table = {}
    for f in basis:
        terms = {}
        for _ in range(rng.randint(0, 2)):
            terms[rng.choice(basis)] = rng.randint(-3, 3)
        table[f] = LinComb(terms)
    return hopf.GradedMap(kind, truncation, table)


def pre_lie(max_grade: int, seed: int = 0) -> Iterator[str]:
    trees = _reduced_trees(max_grade)

    def graft(a: LinComb, b: LinComb) -> LinComb:
        return a.bilinear(b, hopf.pre_lie_graft)

    def rgraft(a: LinComb, b: LinComb) -> LinComb:
        return a.bilinear(b, operad.right_pre_lie)

    w = {t: leaf_count(t) - 1 for t in trees}
    for s, t, u in itertools.product(trees, repeat=3):
        if w[s] + w[t] + w[u] > max_grade:
            continue
        S, T, U = (LinComb.basis(x) for x in (s, t, u))
        lhs = graft(graft(S, T), U) - graft(S, graft(T, U))
        rhs = graft(graft(T, S), U) - graft(T, graft(S, U))
        if lhs != rhs:
            yield f"left pre-Lie identity fails on {to_text(s)}, {to_text(t)}, {to_text(u)}"
        lhs = rgraft(rgraft(S, T), U) - rgraft(S, rgraft(T, U))
        rhs = rgraft(rgraft(S, U), T) - rgraft(S, rgraft(U, T))
        if lhs != rhs:
            yield f"right pre-Lie identity fails on {to_text(s)}, {to_text(t)}, {to_text(u)}"
    for t, u in itertools.product(trees, repeat=2):
        if w[t] + w[u] > max_grade:
            continue
        if hopf.pre_lie_graft(t, u) != operad.right_pre_lie(u, t):
            yield f"grafting differs from partial compositions on {to_text(t)}, {to_text(u)}"
        for v in hopf.pre_lie_graft(t, u):
            if hopf.graft_count(t, u, v) != hopf.cut_count(t, u, v):
                yield f"M != N at {to_text(t)}, {to_text(u)}, {to_text(v)}"


def operad_axioms(max_grade: int, seed: int = 0) -> Iterator[str]:
    trees = _reduced_trees(max_grade, unit=True)
    w = {t: leaf_count(t) - 1 for t in trees}
    for x in trees:
        if operad.compose(LEAF, 1, x) != x:
            yield f"left unit law fails on {to_text(x)}"
        for i in range(1, leaf_count(x) + 1):
            if operad.compose(x, i, LEAF) != x:
                yield f"right unit law fails on {to_text(x)} at {i}"
    for x, y in itertools.product(trees, repeat=2):
        if w[x] + w[y] > max_grade:
            continue
        for i in range(1, leaf_count(x) + 1):
            if phi(operad.compose(x, i, y)) != operad.compose_hyper(phi(x), i, phi(y)):
                yield f"phi-equivariance fails on {to_text(x)} o_{i} {to_text(y)}"
    for x, y, z in itertools.product(trees, repeat=3):
        if w[x] + w[y] + w[z] > max_grade:
            continue
        nx, ny = leaf_count(x), leaf_count(y)
        for i in range(1, nx + 1):
            for j in range(1, ny + 1):
                if operad.compose(operad.compose(x, i, y), i - 1 + j, z) != operad.compose(x, i, operad.compose(y, j, z)):
                    yield f"sequential axiom fails on {to_text(x)}, {to_text(y)}, {to_text(z)} ({i}, {j})"
            for k in range(i + 1, nx + 1):
                if operad.compose(operad.compose(x, i, y), k + ny - 1, z) != operad.compose(operad.compose(x, k, z), i, y):
                    yield f"parallel axiom fails on {to_text(x)}, {to_text(y)}, {to_text(z)} ({i}, {k})"


SUITES: dict[str, Callable[..., Iterator[str]]] = {
    "bijection": bijection,
    "order": order,
    "hopf": hopf_axioms,
    "prelie": pre_lie,
    "operad": operad_axioms,
}


def run_suite(name: str, max_grade: int = 4, seed: int = 0) -> str | None:
    """First failure of a suite, or None when every identity holds."""
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return next(iter(suite(max_grade, seed)), None)
