"""Maximal induced bipartite subgraphs and the invariants bc(G), bc'(G)."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import MAX_COVER_VERTICES, Graph, GraphError, _mask_to_set


class BouquetError(GraphError):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def mask_is_bipartite(G: Graph, mask: int) -> bool:
    adj = G.adjacency_masks
    colour: dict[int, int] = {}
    for root in _bits(mask):
        if root in colour:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in _bits(adj[u] & mask):
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def _components(G: Graph, mask: int) -> list[int]:
    adj = G.adjacency_masks
    comps = []
    left = mask
    while left:
        low = left & -left
        comp, frontier = low, low
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u] & mask
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        left &= ~comp
    return comps


@dataclass(frozen=True)
class BipartiteWitness:
    vertices: frozenset[int]
    c: int
    isolated: tuple[int, ...]
    bouquet_count: int | None = None

    @property
    def c_H(self) -> int:
        return self.c + len(self.isolated)

    @property
    def c_prime(self) -> int | None:
        return None if self.bouquet_count is None else self.c + self.bouquet_count

    def to_json(self) -> dict:
        return {"vertices": sorted(self.vertices), "components_with_edge": self.c,
                "isolated": list(self.isolated), "c": self.c_H,
                "bouquets": self.bouquet_count, "c_prime": self.c_prime}


def witness_for(G: Graph, S) -> BipartiteWitness:
    mask = sum(1 << (v - 1) for v in S)
    c, iso = 0, []
    for comp in _components(G, mask):
        if comp & (comp - 1):
            c += 1
        else:
            iso.append(comp.bit_length())
    return BipartiteWitness(frozenset(S), c, tuple(sorted(iso)))


def is_maximal_bipartite(G: Graph, S) -> bool:
    mask = sum(1 << (v - 1) for v in S)
    if not mask_is_bipartite(G, mask):
        return False
    return all(not mask_is_bipartite(G, mask | (1 << (v - 1)))
               for v in G.vertices if not mask >> (v - 1) & 1)


def maximal_induced_bipartite(G: Graph) -> list[BipartiteWitness]:
    """Every vertex set inducing a bipartite subgraph that no single vertex can extend.

    Branch on vertices in order; a vertex may only be left out if it can still
    close an odd cycle with what is chosen or undecided, which cuts the search
    down to (nearly) the maximal sets themselves.
    """
    if not G.edges:
        raise GraphError("maximal induced bipartite subgraphs need at least one edge")
    if G.n > MAX_COVER_VERTICES:
        raise GraphError(f"enumeration is capped at {MAX_COVER_VERTICES} vertices")
    n = G.n
    found: list[int] = []

    def rec(v: int, chosen: int, excluded: int) -> None:
        undecided = ((1 << n) - 1) & ~((1 << (v - 1)) - 1)
        reach = chosen | undecided
        for u in _bits(excluded):
            if mask_is_bipartite(G, reach | (1 << (u - 1))):
                return
        if v > n:
            found.append(chosen)
            return
        bit = 1 << (v - 1)
        if mask_is_bipartite(G, chosen | bit):
            rec(v + 1, chosen | bit, excluded)
        rec(v + 1, chosen, excluded | bit)

    rec(1, 0, 0)
    witnesses = [witness_for(G, _mask_to_set(m)) for m in found]
    witnesses.sort(key=lambda w: (-len(w.vertices), sorted(w.vertices)))
    return witnesses


def bouquet_number(G: Graph, H: BipartiteWitness) -> int:
    """Fewest outside vertices whose neighbourhoods cover the isolated points of ``H``."""
    points = frozenset(H.isolated)
    if not points:
        return 0
    outside = [v for v in G.vertices if v not in H.vertices]
    sets = {v: G.adjacency[v] & points for v in outside}
    for p in sorted(points):
        if not any(p in s for s in sets.values()):
            raise BouquetError(f"isolated vertex {p} has no neighbour outside H; "
                               "bou_G(H) is undefined")
    candidates = [frozenset(s) for s in sets.values() if s]
    # drop dominated sets
    candidates = [s for s in candidates if not any(s < t for t in candidates)]
    candidates = sorted(set(candidates), key=lambda s: (-len(s), sorted(s)))

    # greedy upper bound
    left, best = set(points), 0
    while left:
        s = max(candidates, key=lambda c: len(c & left))
        left -= s
        best += 1

    def search(uncovered: frozenset[int], used: int) -> None:
        nonlocal best
        if not uncovered:
            best = min(best, used)
            return
        largest = max(len(s & uncovered) for s in candidates)
        lower = used + -(-len(uncovered) // largest)
        if lower >= best:
            return
        p = min(uncovered, key=lambda q: (sum(q in s for s in candidates), q))
        for s in candidates:
            if p in s:
                search(uncovered - s, used + 1)

    search(points, 0)
    return best


def with_bouquets(G: Graph, H: BipartiteWitness) -> BipartiteWitness:
    return BipartiteWitness(H.vertices, H.c, H.isolated, bouquet_number(G, H))


def bc(G: Graph) -> tuple[int, BipartiteWitness]:
    """``min c(H)`` over maximal induced bipartite subgraphs, with a minimiser."""
    ws = maximal_induced_bipartite(G)
    best = min(ws, key=lambda w: w.c_H)
    return best.c_H, best


def bc_prime(G: Graph) -> tuple[int, BipartiteWitness]:
    """``min c'(H) = c + bou_G(H)`` over maximal induced bipartite subgraphs."""
    ws = [with_bouquets(G, w) for w in maximal_induced_bipartite(G)]
    best = min(ws, key=lambda w: w.c_prime)
    return best.c_prime, best
