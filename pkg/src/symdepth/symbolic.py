"""Symbolic powers of edge ideals.

The reference construction intersects the powers of the cover primes. Two
shortcut constructions (odd cycles, chordal graphs) exist only to be checked
against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .graph import (Graph, GraphError, cliques, edge_ideal, is_bipartite, is_chordal,
                    make_cycle, minimal_vertex_covers)
from .monomial import (Monomial, MonomialIdeal, _as_exponents, add, colon, intersect,
                       minimalize, power, prime_power, scale)

METHODS = ("intersection", "ghos-odd-cycle", "sullivant-chordal")
_ALIASES = {"ghos": "ghos-odd-cycle", "sullivant": "sullivant-chordal"}


@dataclass(frozen=True)
class SymbolicPowerRequest:
    graph: Graph
    s: int
    method: str = "intersection"

    def __post_init__(self):
        object.__setattr__(self, "method", _ALIASES.get(self.method, self.method))
        if self.s < 1:
            raise ValueError("symbolic power exponent must be >= 1")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; choose from {METHODS}")


def symbolic_power(req: SymbolicPowerRequest | Graph, s: int | None = None,
                   method: str = "intersection") -> MonomialIdeal:
    """``I(G)^(s)``. Accepts a request object or ``(graph, s, method)``."""
    if not isinstance(req, SymbolicPowerRequest):
        req = SymbolicPowerRequest(req, s, method)
    G, s = req.graph, req.s
    if req.method == "ghos-odd-cycle":
        n = _odd_cycle_length(G)
        return ghos_odd_cycle_expansion(n, s)
    if req.method == "sullivant-chordal":
        return sullivant_chordal(G, s)
    return _intersection(G, s)


@lru_cache(maxsize=256)
def _intersection(G: Graph, s: int) -> MonomialIdeal:
    if not G.edges:
        return MonomialIdeal.zero(G.n)
    covers = minimal_vertex_covers(G)
    result = None
    for cover in covers:
        p = prime_power(G.n, sorted(cover), s)
        result = p if result is None else intersect(result, p)
    return result


def symbolic_colon(G: Graph, s: int, m) -> MonomialIdeal:
    """``I(G)^(s) : m`` as the intersection of the colons ``P_C^s : m``.

    Colon distributes over intersection, so the large symbolic power itself is
    never formed.
    """
    e = _as_exponents(m)
    if not G.edges:
        return MonomialIdeal.zero(G.n)
    parts = sorted((colon(prime_power(G.n, sorted(c), s), e) for c in minimal_vertex_covers(G)),
                   key=lambda J: len(J.gens))
    result = parts[0]
    for J in parts[1:]:
        result = intersect(result, J)
    return result


def _odd_cycle_length(G: Graph) -> int:
    if G.n % 2 == 0 or G.n < 3 or G != make_cycle(G.n):
        raise GraphError("the odd-cycle expansion needs the cycle C_n (labelled 1..n) with n odd")
    return G.n


def symbolic_membership(G: Graph, s: int, m) -> bool:
    """Whether ``m`` lies in ``I(G)^(s)``, tested cover by cover."""
    e = _as_exponents(m)
    if len(e) != G.n:
        raise ValueError(f"monomial has {len(e)} variables, graph has {G.n}")
    if not G.edges:
        return False
    return all(sum(e[i - 1] for i in cover) >= s for cover in minimal_vertex_covers(G))


def ghos_odd_cycle_expansion(n: int, s: int) -> MonomialIdeal:
    """``sum_j I(C_n)^(s - j(k+1)) * f^j`` with ``n = 2k+1``, ``f = x_1...x_n``."""
    if n < 3 or n % 2 == 0:
        raise GraphError("odd-cycle expansion needs an odd n >= 3")
    if s < 1:
        raise ValueError("s must be >= 1")
    k = (n - 1) // 2
    a = s // (k + 1)
    I = edge_ideal(make_cycle(n))
    f = (1,) * n
    result = MonomialIdeal.zero(n)
    for j in range(a + 1):
        term = scale(power(I, s - j * (k + 1)), tuple(j * x for x in f))
        result = add(result, term)
    return result


def sullivant_chordal(G: Graph, s: int) -> MonomialIdeal:
    """Products ``m_{C_1}...m_{C_t}`` over clique multisets with ``sum(|C_i| - 1) == s``."""
    if not is_chordal(G):
        raise GraphError("Sullivant's clique formula needs a chordal graph")
    if s < 1:
        raise ValueError("s must be >= 1")
    if not G.edges:
        return MonomialIdeal.zero(G.n)
    cls = [tuple(sorted(c)) for c in cliques(G)]
    gens: set[tuple[int, ...]] = set()

    def rec(start: int, budget: int, expo: list[int]) -> None:
        if budget == 0:
            gens.add(tuple(expo))
            return
        for idx in range(start, len(cls)):
            c = cls[idx]
            w = len(c) - 1
            if w > budget:
                continue
            for v in c:
                expo[v - 1] += 1
            rec(idx, budget - w, expo)
            for v in c:
                expo[v - 1] -= 1

    rec(0, s, [0] * G.n)
    return minimalize(gens, G.n)


def leaf_edge_monomial(G: Graph, e: Sequence[int] | None = None) -> tuple[tuple[int, int], Monomial]:
    if e is None:
        leaf = G.leaf_edges()
        if not leaf:
            raise GraphError("graph has no leaf edge")
        e = leaf[0]
    e = (min(e), max(e))
    if e not in G.edges or not G.is_leaf_edge(e):
        raise GraphError(f"{e} is not a leaf edge")
    return e, Monomial.from_support(G.n, e)


def check_leaf_colon(G: Graph, s: int, e: Sequence[int] | None = None) -> bool:
    """``I(G)^(s) : e == I(G)^(s-1)`` for a leaf edge ``e``."""
    if s < 2:
        raise ValueError("leaf colon identity needs s >= 2")
    _, m = leaf_edge_monomial(G, e)
    return colon(symbolic_power(G, s), m) == symbolic_power(G, s - 1)


def ordinary_power(G: Graph, s: int) -> MonomialIdeal:
    return power(edge_ideal(G), s)


def powers_agree_for_bipartite(G: Graph, s: int) -> bool:
    if not is_bipartite(G):
        raise GraphError("expected a bipartite graph")
    return symbolic_power(G, s) == ordinary_power(G, s)
