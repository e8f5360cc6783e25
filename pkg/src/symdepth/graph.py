"""Simple graphs on vertices ``1..n`` and their edge ideals."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .monomial import MonomialIdeal

MAX_COVER_VERTICES = 24


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise GraphError(f"edge {e} uses a vertex outside 1..{self.n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        return cls(n, frozenset((int(i), int(j)) for i, j in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(s) for v, s in adj.items()}

    @cached_property
    def adjacency_masks(self) -> list[int]:
        """``masks[v]`` is the bitmask of neighbours of ``v`` (bit ``u-1`` for vertex ``u``)."""
        masks = [0] * (self.n + 1)
        for i, j in self.edges:
            masks[i] |= 1 << (j - 1)
            masks[j] |= 1 << (i - 1)
        return masks

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def leaves(self) -> list[int]:
        return [v for v in self.vertices if self.degree(v) == 1]

    def is_leaf_edge(self, e: tuple[int, int]) -> bool:
        return self.degree(e[0]) == 1 or self.degree(e[1]) == 1

    def leaf_edges(self) -> list[tuple[int, int]]:
        return [e for e in self.sorted_edges() if self.is_leaf_edge(e)]

    def to_json(self) -> dict:
        return {"vertices": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        return cls.from_edges(int(data["vertices"]), data["edges"])

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class WhiskerSpec:
    """Complete graph ``K_n`` with ``a[i]`` pendant leaves glued to vertex ``i+1``."""

    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if len(self.a) < 2:
            raise GraphError("whisker graphs need a base clique of size >= 2")
        if any(x < 0 for x in self.a):
            raise GraphError("whisker counts must be non-negative")

    @property
    def base(self) -> int:
        return len(self.a)


def make_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def make_complete(n: int) -> Graph:
    if n < 2:
        raise GraphError("complete graph needs n >= 2")
    return Graph.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def make_whisker(spec: WhiskerSpec | Sequence[int]) -> Graph:
    """Whisker graph ``W_a``.

    Base vertices are ``1..n``; the leaves ``y_{i,l}`` follow in row order, so
    ``y_{i,l}`` is vertex ``n + a_1 + ... + a_{i-1} + l``.
    """
    if not isinstance(spec, WhiskerSpec):
        spec = WhiskerSpec(tuple(spec))
    n = spec.base
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    v = n
    for i, count in enumerate(spec.a, start=1):
        for _ in range(count):
            v += 1
            edges.append((i, v))
    return Graph.from_edges(v, edges)


def whisker_leaves(spec: WhiskerSpec | Sequence[int]) -> list[list[int]]:
    """Vertex labels of the leaves attached to each base vertex of ``W_a``."""
    a = spec.a if isinstance(spec, WhiskerSpec) else tuple(spec)
    out, v = [], len(a)
    for count in a:
        out.append(list(range(v + 1, v + count + 1)))
        v += count
    return out


def make_example_w() -> Graph:
    """Triangle on 1-3 with two leaves on each triangle vertex (leaves 4-9)."""
    return make_whisker(WhiskerSpec((2, 2, 2)))


def parse_graph(text: str) -> Graph:
    """Parse CLI shorthand (``cycle:5``, ``whisker:1,1,1``, ...) or a graph JSON file."""
    kind, _, arg = text.partition(":")
    kind = kind.strip().lower()
    if kind == "cycle":
        return make_cycle(int(arg))
    if kind == "path":
        return make_path(int(arg))
    if kind == "complete":
        return make_complete(int(arg))
    if kind == "whisker":
        return make_whisker(WhiskerSpec(tuple(int(x) for x in arg.split(","))))
    if kind == "example" and arg.strip().lower() == "w":
        return make_example_w()
    with open(text) as fh:
        return Graph.from_json(json.load(fh))


def edge_ideal(G: Graph) -> MonomialIdeal:
    return MonomialIdeal.from_support_sets(G.n, G.sorted_edges()) if G.edges \
        else MonomialIdeal.zero(max(G.n, 1))


def _mask_to_set(mask: int) -> frozenset[int]:
    out, v = [], 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def maximal_independent_sets(G: Graph) -> list[frozenset[int]]:
    """All maximal independent sets (Bron-Kerbosch with pivoting on the complement)."""
    if G.n > MAX_COVER_VERTICES:
        raise GraphError(f"cover enumeration is capped at {MAX_COVER_VERTICES} vertices")
    full = (1 << G.n) - 1
    # non-neighbours (excluding self) play the role of neighbours in the complement
    comp = [0] + [full & ~G.adjacency_masks[v] & ~(1 << (v - 1)) for v in G.vertices]
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        px = p | x
        pivot_bits, best = 0, -1
        while px:
            low = px & -px
            u = low.bit_length()
            c = bin(p & comp[u]).count("1")
            if c > best:
                best, pivot_bits = c, comp[u]
            px ^= low
        cand = p & ~pivot_bits
        while cand:
            low = cand & -cand
            v = low.bit_length()
            expand(r | low, p & comp[v], x & comp[v])
            p &= ~low
            x |= low
            cand ^= low

    expand(0, full, 0)
    return sorted((_mask_to_set(m) for m in found), key=lambda s: (len(s), sorted(s)))


def minimal_vertex_covers(G: Graph) -> list[frozenset[int]]:
    """All inclusion-minimal vertex covers, ordered by size then lexicographically."""
    all_v = frozenset(G.vertices)
    covers = [all_v - s for s in maximal_independent_sets(G)]
    return sorted(covers, key=lambda c: (len(c), sorted(c)))


def bipartite_partition(G: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A 2-colouring ``(X, Y)``; the smallest vertex of each component lands in ``X``."""
    colour: dict[int, int] = {}
    for root in G.vertices:
        if root in colour:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    X = frozenset(v for v, c in colour.items() if c == 0)
    Y = frozenset(v for v, c in colour.items() if c == 1)
    return X, Y


def is_bipartite(G: Graph) -> bool:
    return bipartite_partition(G) is not None


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    """Induced subgraph on ``S``, keeping the ambient labels ``1..n``."""
    S = frozenset(S)
    bad = [v for v in S if not 1 <= v <= G.n]
    if bad:
        raise GraphError(f"vertices {sorted(bad)} are not in the graph")
    return Graph(G.n, frozenset(e for e in G.edges if e[0] in S and e[1] in S))


def connected_components(G: Graph, vertices: Iterable[int] | None = None) -> list[frozenset[int]]:
    todo = sorted(vertices) if vertices is not None else list(G.vertices)
    allowed = set(todo)
    seen: set[int] = set()
    comps = []
    for root in todo:
        if root in seen:
            continue
        comp = {root}
        queue = deque([root])
        seen.add(root)
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def nonleaf_degree_vector(H: Graph) -> tuple[int, ...]:
    """``d_H(i)``: number of non-leaf edges of ``H`` at each vertex."""
    d = [0] * H.n
    for e in H.edges:
        if not H.is_leaf_edge(e):
            d[e[0] - 1] += 1
            d[e[1] - 1] += 1
    return tuple(d)


def bipartite_completion(H: Graph) -> Graph:
    part = bipartite_partition(H)
    if part is None:
        raise GraphError("bipartite completion needs a bipartite graph")
    X, Y = part
    edges = set()
    for comp in connected_components(H):
        if len(comp) < 2:
            continue
        for u in comp & X:
            for w in comp & Y:
                edges.add((min(u, w), max(u, w)))
    return Graph(H.n, frozenset(edges))


def is_chordal(G: Graph) -> bool:
    """Maximum cardinality search followed by a perfect-elimination-ordering check."""
    weight = {v: 0 for v in G.vertices}
    order: list[int] = []
    numbered: set[int] = set()
    for _ in range(G.n):
        v = max((u for u in G.vertices if u not in numbered), key=lambda u: (weight[u], -u))
        order.append(v)
        numbered.add(v)
        for w in G.adjacency[v]:
            if w not in numbered:
                weight[w] += 1
    # reverse of the MCS order is a PEO iff G is chordal
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [w for w in G.adjacency[v] if pos[w] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=lambda w: pos[w])
        for w in earlier:
            if w != parent and w not in G.adjacency[parent]:
                return False
    return True


def cliques(G: Graph) -> list[frozenset[int]]:
    """All cliques of size >= 2 (every vertex set inducing a complete subgraph)."""
    out: list[frozenset[int]] = []

    def grow(current: list[int], candidates: list[int]) -> None:
        for idx, v in enumerate(candidates):
            nxt = current + [v]
            if len(nxt) >= 2:
                out.append(frozenset(nxt))
            grow(nxt, [w for w in candidates[idx + 1:] if w in G.adjacency[v]])

    grow([], list(G.vertices))
    return sorted(out, key=lambda c: (len(c), sorted(c)))
