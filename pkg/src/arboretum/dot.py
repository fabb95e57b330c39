"""Graphviz DOT text for trees, hypertrees and forests.

Hypertrees: vertices are points, two-vertex edges are plain arcs, and an
edge with three or more vertices becomes a hub node (a circle, the "blob")
joined to its root and then to its members in order.
"""

from __future__ import annotations

from .trees import Forest, HyperTree, Leaf

__all__ = ["render_dot"]


def render_dot(x, name: str = "tree") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [label=\"\"];"]
    counter = {"v": 0, "h": 0}
    trees = x.trees if isinstance(x, Forest) else (x,)
    if isinstance(x, Forest) and x.is_unit():
        trees = (Leaf() if x.kind == "reduced" else HyperTree(),)
    for t in trees:
        if isinstance(t, HyperTree):
            _hyper(t, lines, counter)
        else:
            _reduced(t, lines, counter)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _new(counter: dict, prefix: str) -> str:
    ident = f"{prefix}{counter[prefix]}"
    counter[prefix] += 1
    return ident


def _reduced(t, lines: list, counter: dict) -> str:
    me = _new(counter, "v")
    if isinstance(t, Leaf):
        lines.append(f"  {me} [shape=point];")
        return me
    label = f", label=\"{t.tag}\"" if t.tag else ""
    lines.append(f"  {me} [shape=circle, width=0.15{label}];")
    for c in t.children:
        child = _reduced(c, lines, counter)
        lines.append(f"  {me} -> {child} [dir=none];")
    return me


def _hyper(s: HyperTree, lines: list, counter: dict) -> str:
    me = _new(counter, "v")
    lines.append(f"  {me} [shape=point, width=0.1];")
    for e in s.edges:
        label = f" [label=\"{e.tag}\", dir=none]" if e.tag else " [dir=none]"
        if len(e.members) == 1:
            child = _hyper(e.members[0], lines, counter)
            lines.append(f"  {me} -> {child}{label};")
            continue
        hub = _new(counter, "h")
        hub_label = f", label=\"{e.tag}\"" if e.tag else ""
        lines.append(f"  {hub} [shape=circle, style=dashed{hub_label}];")
        lines.append(f"  {me} -> {hub} [dir=none, taillabel=\"0\"];")
        for k, m in enumerate(e.members, start=1):
            child = _hyper(m, lines, counter)
            lines.append(f"  {hub} -> {child} [dir=none, headlabel=\"{k}\"];")
    return me
