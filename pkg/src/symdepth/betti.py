"""Multigraded Betti numbers, projective dimension and depth of ``S/I``.

Betti numbers are read off the upper Koszul simplicial complexes

    K^b(I) = { F ⊆ supp(b) : x^(b - F) ∈ I },   β_{i,b}(I) = dim H̃_{i-1}(K^b(I)),

for ``b`` running over the LCM lattice of ``I`` (outside it every ``K^b`` is a
cone). All lattice elements are processed at once on an order-compressed
exponent box: coordinate ``j`` only ever takes the values that occur in
generators (plus 0), and membership ``x^c ∈ I`` depends on ``c_j`` only
through the largest such value ``<= c_j``.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field as dc_field
from typing import Iterable

import numpy as np

from .graph import Graph, edge_ideal
from .linalg import FieldSpec
from .monomial import Exponents, MonomialIdeal, contains, power
from .simplicial import (SimplicialComplex, homology_from_faces, hochster_depth,
                         stanley_reisner_complex)
from .symbolic import symbolic_power

log = logging.getLogger(__name__)

DEFAULT_LATTICE_CAP = 500_000
BOX_CAP = 50_000_000
_CHUNK_CELLS = 1 << 22


class LatticeTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class LcmLattice:
    n: int
    elements: frozenset[Exponents]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, b) -> bool:
        return tuple(b) in self.elements


@dataclass
class BettiTable:
    """Nonzero ``β_{i,b}(S/I)``; ``β_{0,0} = 1`` by convention."""

    n: int
    field: FieldSpec
    entries: dict[tuple[int, Exponents], int] = dc_field(default_factory=dict)

    def beta(self, i: int, b: Iterable[int] | None = None) -> int:
        if b is None:
            return sum(v for (j, _), v in self.entries.items() if j == i)
        return self.entries.get((i, tuple(b)), 0)

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, _), v in self.entries.items():
            out[i] = out.get(i, 0) + v
        return dict(sorted(out.items()))

    @property
    def pd(self) -> int:
        return max(i for (i, _) in self.entries)

    @property
    def depth(self) -> int:
        return self.n - self.pd


def _check_ideal(I: MonomialIdeal) -> None:
    if I.is_unit:
        raise ValueError("S/I is zero for the unit ideal")


class _Box:
    """Compressed exponent box for the generators of ``I``."""

    def __init__(self, I: MonomialIdeal):
        self.n = I.n
        G = np.array(I.gens, dtype=np.int64)
        self.values = [np.unique(np.concatenate([[0], G[:, j]])) for j in range(self.n)]
        self.shape = tuple(len(v) for v in self.values)
        size = int(np.prod(self.shape, dtype=np.float64))
        if size > BOX_CAP:
            raise LatticeTooLarge(
                f"compressed exponent box has {size} cells (cap {BOX_CAP}); reduce s or n")
        comp = np.stack([np.searchsorted(self.values[j], G[:, j]) for j in range(self.n)], axis=1)
        counts = np.zeros(self.shape, dtype=np.int32)
        np.add.at(counts, tuple(comp.T), 1)
        for ax in range(self.n):
            np.cumsum(counts, axis=ax, out=counts)
        # counts[c] = number of generators dividing x^c
        self.counts = counts.reshape(-1)
        self.member = self.counts > 0
        self.strides = np.array([int(np.prod(self.shape[j + 1:])) for j in range(self.n)],
                                dtype=np.int64)

    def lattice_flat(self, cap: int) -> np.ndarray:
        """Flat indices of the LCM lattice (the zero vector excluded)."""
        coords = np.indices(self.shape, dtype=np.int32).reshape(self.n, -1)
        ok = self.member.copy()
        ok[0] = False
        for j in range(self.n):
            pos = coords[j] > 0
            prev = np.where(pos, np.arange(self.counts.size) - self.strides[j], 0)
            # some generator below b must reach b_j exactly
            ok &= ~pos | (self.counts > self.counts[prev])
        flat = np.flatnonzero(ok)
        if flat.size > cap:
            raise LatticeTooLarge(
                f"LCM lattice has {flat.size} elements (cap {cap}); reduce s or the number of variables")
        return flat

    def decode(self, flat: np.ndarray) -> np.ndarray:
        coords = np.stack(np.unravel_index(flat, self.shape), axis=1)
        return np.stack([self.values[j][coords[:, j]] for j in range(self.n)], axis=1)

    def support_bits(self, flat: np.ndarray) -> np.ndarray:
        coords = np.stack(np.unravel_index(flat, self.shape), axis=1)
        weights = (1 << np.arange(self.n, dtype=np.int64))
        return ((coords > 0).astype(np.int64) * weights).sum(axis=1)

    def face_rows(self, flat: np.ndarray) -> np.ndarray:
        """Packed face indicator rows: bit ``F`` set iff ``F`` is a face of ``K^b``."""
        n = self.n
        subsets = np.arange(1 << n, dtype=np.int64)
        offsets = np.zeros(1 << n, dtype=np.int64)
        for j in range(n):
            offsets += ((subsets >> j) & 1) * self.strides[j]
        supp = self.support_bits(flat)
        rows = []
        step = max(1, _CHUNK_CELLS >> n)
        for lo in range(0, flat.size, step):
            f = flat[lo:lo + step]
            sp = supp[lo:lo + step]
            valid = (sp[:, None] & subsets[None, :]) == subsets[None, :]
            idx = np.where(valid, f[:, None] - offsets[None, :], 0)
            faces = valid & self.member[idx]
            rows.append(np.packbits(faces, axis=1, bitorder="little"))
        return np.concatenate(rows) if rows else np.zeros((0, max(1, (1 << n) // 8)), np.uint8)


_HOMOLOGY_CACHE: dict[tuple, dict[int, int]] = {}
_CACHE_LIMIT = 400_000


def _faces_from_row(row: bytes, n: int) -> list[int]:
    bits = np.unpackbits(np.frombuffer(row, dtype=np.uint8), bitorder="little")[: 1 << n]
    return np.flatnonzero(bits).tolist()


def _is_cone(faces: set[int], support: int) -> bool:
    v = support
    while v:
        low = v & -v
        if all((f | low) in faces for f in faces):
            return True
        v ^= low
    return False


def mask_complex_homology(face_masks: list[int], n: int, field: FieldSpec) -> dict[int, int]:
    """Reduced homology of the complex whose faces are the given vertex bitmasks."""
    faces = set(face_masks)
    if not faces:
        return {}
    support = 0
    for f in faces:
        support |= f
    if _is_cone(faces, support):
        return {}
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in sorted(faces):
        t = tuple(j for j in range(n) if f >> j & 1)
        by_dim.setdefault(len(t) - 1, []).append(t)
    for q in by_dim:
        by_dim[q].sort()
    return {q: v for q, v in homology_from_faces(by_dim, field).items() if v}


def _cached_homology(row: bytes, n: int, field: FieldSpec) -> dict[int, int]:
    key = (n, field.p, row)
    hit = _HOMOLOGY_CACHE.get(key)
    if hit is None:
        hit = mask_complex_homology(_faces_from_row(row, n), n, field)
        if len(_HOMOLOGY_CACHE) > _CACHE_LIMIT:
            _HOMOLOGY_CACHE.clear()
        _HOMOLOGY_CACHE[key] = hit
    return hit


def lcm_lattice(I: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP) -> LcmLattice:
    if I.is_zero or I.is_unit:
        raise ValueError("LCM lattice needs a nonzero proper ideal")
    box = _Box(I)
    flat = box.lattice_flat(cap)
    return LcmLattice(I.n, frozenset(tuple(int(x) for x in row) for row in box.decode(flat)))


def lcm_lattice_closure(I: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP) -> LcmLattice:
    """Join-closure of the generators, built directly (slow; used as a cross-check)."""
    gens = list(I.gens)
    elems = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                j = tuple(max(x, y) for x, y in zip(a, g))
                if j not in elems:
                    elems.add(j)
                    nxt.append(j)
        if len(elems) > cap:
            raise LatticeTooLarge(f"LCM lattice exceeds cap {cap}")
        frontier = nxt
    return LcmLattice(I.n, frozenset(elems))


def koszul_upper_complex(I: MonomialIdeal, b: Iterable[int]) -> SimplicialComplex:
    """``K^b(I)`` on the support of ``b``; void when ``x^b`` is not in ``I``."""
    b = tuple(int(x) for x in b)
    if len(b) != I.n or min(b) < 0:
        raise ValueError("b must be a non-negative vector of the ring's length")
    supp = [j for j in range(I.n) if b[j] > 0]
    faces = []
    for mask in range(1 << len(supp)):
        F = [supp[k] for k in range(len(supp)) if mask >> k & 1]
        c = list(b)
        for j in F:
            c[j] -= 1
        if contains(I, tuple(c)):
            faces.append([j + 1 for j in F])
    return SimplicialComplex.from_facets(I.n, faces)


def betti_table(I: MonomialIdeal, field: FieldSpec | None = None,
                cap: int = DEFAULT_LATTICE_CAP) -> BettiTable:
    field = field or FieldSpec.default()
    _check_ideal(I)
    table = BettiTable(I.n, field, {(0, (0,) * I.n): 1})
    if I.is_zero:
        return table
    box = _Box(I)
    flat = box.lattice_flat(cap)
    rows = box.face_rows(flat)
    degrees = box.decode(flat)
    n = I.n
    for k in range(flat.size):
        h = _cached_homology(rows[k].tobytes(), n, field)
        if not h:
            continue
        b = tuple(int(x) for x in degrees[k])
        for q, v in h.items():
            # β_{q+1,b}(I) = dim H̃_q(K^b), shifted once more for S/I
            table.entries[(q + 2, b)] = v
    return table


def pd(I: MonomialIdeal, field: FieldSpec | None = None, cap: int = DEFAULT_LATTICE_CAP) -> int:
    """Projective dimension of ``S/I``."""
    return betti_table(I, field, cap).pd


def depth(I: MonomialIdeal, field: FieldSpec | None = None, cap: int = DEFAULT_LATTICE_CAP) -> int:
    """``depth S/I = n - pd S/I``; the zero ideal gives ``n``."""
    return I.n - pd(I, field, cap)


def polarize(I: MonomialIdeal) -> tuple[MonomialIdeal, int]:
    """Squarefree polarization and the number of variables it adds.

    Variable ``x_i`` becomes ``x_{i,1}, ..., x_{i,r_i}`` (``r_i`` = largest
    exponent of ``x_i``, at least 1), laid out consecutively in ``i``.
    """
    _check_ideal(I)
    if I.is_zero:
        return I, 0
    widths = [max(1, max(g[i] for g in I.gens)) for i in range(I.n)]
    starts = np.concatenate([[0], np.cumsum(widths)[:-1]]).tolist()
    total = sum(widths)
    gens = []
    for g in I.gens:
        e = [0] * total
        for i, a in enumerate(g):
            for t in range(a):
                e[starts[i] + t] = 1
        gens.append(tuple(e))
    return MonomialIdeal.from_generators(total, gens), total - I.n


def depth_via_polarization(I: MonomialIdeal, field: FieldSpec | None = None) -> int:
    """Independent route: Hochster's formula on ``Δ(pol I)`` minus the added variables."""
    P, added = polarize(I)
    return hochster_depth(stanley_reisner_complex(P), field) - added


@dataclass(frozen=True)
class DepthRow:
    s: int
    depth: int
    pd: int
    field: str
    method: str
    seconds: float


def graph_power(G: Graph, s: int, kind: str) -> MonomialIdeal:
    if kind == "symbolic":
        return symbolic_power(G, s)
    if kind == "ordinary":
        return power(edge_ideal(G), s)
    raise ValueError(f"kind must be 'ordinary' or 'symbolic', not {kind!r}")


def depth_rows(G: Graph, kind: str, s_max: int, field: FieldSpec | None = None,
               cap: int = DEFAULT_LATTICE_CAP, s_min: int = 1) -> list[DepthRow]:
    field = field or FieldSpec.default()
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    rows = []
    for s in range(s_min, s_max + 1):
        t0 = time.perf_counter()
        I = graph_power(G, s, kind)
        p = pd(I, field, cap)
        rows.append(DepthRow(s, I.n - p, p, str(field), "lcm-betti", time.perf_counter() - t0))
        log.info("%s power s=%d: depth %d (%.2fs)", kind, s, I.n - p, rows[-1].seconds)
    return rows


def depth_sequence(G: Graph, kind: str, s_max: int, field: FieldSpec | None = None,
                   cap: int = DEFAULT_LATTICE_CAP) -> list[int]:
    return [r.depth for r in depth_rows(G, kind, s_max, field, cap)]


@dataclass(frozen=True)
class Stabilization:
    index: int | None
    value: int | None
    tentative: bool


def stabilization_index(seq: list[int], proven_from: int | None = None) -> Stabilization:
    """First ``s`` (1-based) from which ``seq`` is constant.

    The answer is tentative unless ``proven_from`` (an exponent known to lie in
    the stable range) is at most ``len(seq)``.
    """
    if not seq:
        return Stabilization(None, None, True)
    final = seq[-1]
    idx = len(seq)
    while idx > 1 and seq[idx - 2] == final:
        idx -= 1
    tentative = proven_from is None or proven_from > len(seq)
    return Stabilization(idx, final, tentative)
