"""Finite integer linear combinations over a hashable basis."""

from __future__ import annotations

from collections.abc import Mapping
from typing import Callable, Hashable, Iterable

from .trees import Forest, to_text

__all__ = ["LinComb", "sort_key", "format_term"]


def sort_key(b) -> tuple:
    """Lexicographic key on canonical text; the unit forest sorts as the empty word."""
    if isinstance(b, tuple):
        return tuple(k for x in b for k in sort_key(x))
    if isinstance(b, Forest) and b.is_unit():
        return ("",)
    return (to_text(b),)


class LinComb(Mapping):
    """Immutable formal sum ``sum c_b * b`` with nonzero integer coefficients.

    Basis elements are trees, forests, or tuples of forests (tensors).
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable[tuple[Hashable, int]] | None = None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for b, c in items:
                acc[b] = acc.get(b, 0) + c
        self._terms = {b: c for b, c in acc.items() if c}
        self._hash = None

    @classmethod
    def basis(cls, b, coeff: int = 1) -> LinComb:
        return cls({b: coeff})

    def __getitem__(self, b) -> int:
        return self._terms.get(b, 0)

    def __contains__(self, b) -> bool:
        return b in self._terms

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: LinComb) -> LinComb:
        if not isinstance(other, LinComb):
            return NotImplemented
        out = dict(self._terms)
        for b, c in other._terms.items():
            out[b] = out.get(b, 0) + c
        return LinComb(out)

    def __sub__(self, other: LinComb) -> LinComb:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> LinComb:
        return LinComb({b: -c for b, c in self._terms.items()})

    def __mul__(self, k: int) -> LinComb:
        if not isinstance(k, int):
            return NotImplemented
        return LinComb({b: k * c for b, c in self._terms.items()})

    __rmul__ = __mul__

    def map_basis(self, f: Callable) -> LinComb:
        """Extend ``f: basis -> LinComb`` linearly."""
        out: dict = {}
        for b, c in self._terms.items():
            for b2, c2 in f(b).items():
                out[b2] = out.get(b2, 0) + c * c2
        return LinComb(out)

    def bilinear(self, other: LinComb, f: Callable) -> LinComb:
        """``sum c d f(b, b')`` where ``f`` returns a basis element or a LinComb."""
        out: dict = {}
        for b, c in self._terms.items():
            for b2, c2 in other._terms.items():
                r = f(b, b2)
                if isinstance(r, LinComb):
                    for b3, c3 in r.items():
                        out[b3] = out.get(b3, 0) + c * c2 * c3
                else:
                    out[r] = out.get(r, 0) + c * c2
        return LinComb(out)

    def sorted_terms(self) -> list[tuple]:
        return sorted(self._terms.items(), key=lambda bc: sort_key(bc[0]))

    def lines(self) -> list[str]:
        return [format_term(b, c) for b, c in self.sorted_terms()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(format_term(b, c) for b, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"LinComb({self})"


def format_term(b, c: int) -> str:
    if isinstance(b, tuple):
        body = " (x) ".join(to_text(x) for x in b)
    else:
        body = to_text(b)
    return f"{c} * {body}"
