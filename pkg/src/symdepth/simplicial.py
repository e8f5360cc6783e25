"""Simplicial complexes, Stanley-Reisner bridges, links, nerves and reduced homology."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .linalg import FieldSpec, rank
from .monomial import MonomialIdeal

Face = tuple[int, ...]


class ComplexError(ValueError):
    pass


def _maximal_sets(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    uniq = sorted(set(sets), key=len, reverse=True)
    out: list[frozenset[int]] = []
    for s in uniq:
        if not any(s <= t for t in out):
            out.append(s)
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on the ground set ``1..ground`` given by its facets.

    ``facets == ()`` is the void complex (no faces at all); ``facets == ((),)``
    is the empty complex ``{∅}``.
    """

    ground: int
    facets: tuple[Face, ...]

    @classmethod
    def from_facets(cls, ground: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
        sets = [frozenset(int(v) for v in f) for f in facets]
        for s in sets:
            bad = [v for v in s if not 1 <= v <= ground]
            if bad:
                raise ComplexError(f"vertices {sorted(bad)} outside 1..{ground}")
        maxi = _maximal_sets(sets)
        return cls(ground, tuple(sorted((tuple(sorted(f)) for f in maxi), key=lambda f: (len(f), f))))

    @classmethod
    def void(cls, ground: int) -> SimplicialComplex:
        return cls(ground, ())

    @classmethod
    def empty(cls, ground: int) -> SimplicialComplex:
        return cls(ground, ((),))

    @classmethod
    def simplex(cls, vertices: Iterable[int], ground: int | None = None) -> SimplicialComplex:
        vs = sorted(vertices)
        return cls.from_facets(ground if ground is not None else max(vs, default=0), [vs])

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension; -1 for ``{∅}`` and (by convention) -2 for the void complex."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        seen: set[Face] = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                seen.update(combinations(f, k))
        return tuple(sorted(seen, key=lambda f: (len(f), f)))

    def faces_by_dim(self) -> dict[int, list[Face]]:
        out: dict[int, list[Face]] = {}
        for f in self.faces:
            out.setdefault(len(f) - 1, []).append(f)
        return out

    def f_vector(self) -> dict[int, int]:
        return {q: len(fs) for q, fs in self.faces_by_dim().items()}

    def __contains__(self, face: Iterable[int]) -> bool:
        s = set(face)
        return any(s.issubset(f) for f in self.facets)

    def vertices(self) -> list[int]:
        return sorted({v for f in self.facets for v in f})

    def to_json(self) -> dict:
        return {"vertices": self.ground, "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json(cls, data: dict) -> SimplicialComplex:
        return cls.from_facets(int(data["vertices"]), data["facets"])

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def stanley_reisner_complex(I: MonomialIdeal) -> SimplicialComplex:
    """``Δ(I)``: faces are the sets ``F`` with ``x_F`` outside ``I``."""
    if not I.is_squarefree():
        raise ComplexError("Stanley-Reisner complex needs a squarefree ideal")
    if I.is_unit:
        raise ComplexError("the unit ideal has no Stanley-Reisner complex")
    n = I.n
    gen_masks = [sum(1 << i for i, e in enumerate(g) if e) for g in I.gens]
    # depth-first growth of faces in increasing vertex order; record maximal ones
    facets: list[int] = []

    def is_face(mask: int) -> bool:
        return not any(g & mask == g for g in gen_masks)

    def grow(mask: int, start: int) -> None:
        extended = False
        for v in range(start, n):
            bit = 1 << v
            if is_face(mask | bit):
                extended = True
                grow(mask | bit, v + 1)
        if not extended:
            # maximal unless some smaller vertex can still be added
            if all(mask & (1 << v) or not is_face(mask | (1 << v)) for v in range(start)):
                facets.append(mask)

    grow(0, 0)
    return SimplicialComplex.from_facets(n, [[i + 1 for i in range(n) if m >> i & 1] for m in facets])


def stanley_reisner_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """``I_Δ`` generated by the minimal non-faces."""
    n = delta.ground
    if n == 0:
        raise ComplexError("ground set must be non-empty")
    if delta.is_void:
        return MonomialIdeal.unit(n)
    facet_masks = [sum(1 << (v - 1) for v in f) for f in delta.facets]

    def is_face(mask: int) -> bool:
        return any(mask & fm == mask for fm in facet_masks)

    minimal: list[int] = []
    # a minimal non-face has every codimension-one subset a face; search by size
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            mask = sum(1 << i for i in combo)
            if is_face(mask) or any(mask & m == m for m in minimal):
                continue
            minimal.append(mask)
    return MonomialIdeal.from_support_sets(n, [[i + 1 for i in range(n) if m >> i & 1] for m in minimal]) \
        if minimal else MonomialIdeal.zero(n)


def link(delta: SimplicialComplex, F: Iterable[int]) -> SimplicialComplex:
    F = frozenset(F)
    if F not in delta:
        raise ComplexError(f"{sorted(F)} is not a face")
    return SimplicialComplex.from_facets(
        delta.ground, [set(f) - F for f in delta.facets if F <= set(f)])


def nerve(delta: SimplicialComplex) -> SimplicialComplex:
    """Nerve on facet indices ``1..r`` (in the complex's canonical facet order)."""
    if delta.is_void:
        raise ComplexError("the void complex has no facets")
    r = len(delta.facets)
    containing: dict[int, set[int]] = {}
    for idx, f in enumerate(delta.facets, start=1):
        for v in f:
            containing.setdefault(v, set()).add(idx)
    if not containing:
        return SimplicialComplex.empty(r)
    return SimplicialComplex.from_facets(r, containing.values())


def boundary_matrix(rows: Sequence[Face], cols: Sequence[Face]) -> np.ndarray:
    """Matrix of ``∂: C_q -> C_{q-1}``; ``cols`` are q-faces, ``rows`` (q-1)-faces.

    Orientation follows sorted vertex order: deleting the j-th vertex carries
    sign ``(-1)^j``.
    """
    index = {f: i for i, f in enumerate(rows)}
    M = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for c, face in enumerate(cols):
        for j in range(len(face)):
            M[index[face[:j] + face[j + 1:]], c] = -1 if j % 2 else 1
    return M


def homology_from_faces(faces_by_dim: dict[int, list[Face]], field: FieldSpec,
                        max_degree: int | None = None) -> dict[int, int]:
    """Reduced homology dimensions ``{q: dim H̃_q}`` for ``q = -1..top``.

    ``faces_by_dim`` must contain the empty face at key -1 unless the complex is void.
    """
    if not faces_by_dim:
        return {}
    top = max(faces_by_dim)
    if max_degree is not None:
        top_needed = min(top, max_degree)
    else:
        top_needed = top
    ranks: dict[int, int] = {}

    def bd_rank(q: int) -> int:
        # rank of ∂_q : C_q -> C_{q-1}; zero outside the chain range
        if q not in ranks:
            if q not in faces_by_dim or (q - 1) not in faces_by_dim:
                ranks[q] = 0
            else:
                ranks[q] = rank(boundary_matrix(faces_by_dim[q - 1], faces_by_dim[q]), field)
        return ranks[q]

    out = {}
    for q in range(-1, top_needed + 1):
        cq = len(faces_by_dim.get(q, ()))
        out[q] = cq - bd_rank(q) - bd_rank(q + 1)
    return out


def reduced_homology_dims(delta: SimplicialComplex, field: FieldSpec | None = None) -> dict[int, int]:
    """``{q: dim_k H̃_q(Δ; k)}`` for ``q = -1..dim Δ``; empty dict for the void complex."""
    field = field or FieldSpec.default()
    if delta.is_void:
        return {}
    return homology_from_faces(delta.faces_by_dim(), field)


def euler_check(delta: SimplicialComplex, field: FieldSpec | None = None) -> bool:
    """Reduced Euler relation: alternating sum of Betti numbers equals that of face counts."""
    h = reduced_homology_dims(delta, field)
    f = delta.f_vector()
    return sum((-1) ** q * v for q, v in h.items()) == sum((-1) ** q * v for q, v in f.items())


def _faces_of_size(facets: Sequence[Face], k: int) -> list[Face]:
    out: set[Face] = set()
    for f in facets:
        if len(f) >= k:
            out.update(combinations(f, k))
    return sorted(out)


def _homology_in_degree(facets: Sequence[Face], q: int, field: FieldSpec) -> int:
    """``dim H̃_q`` using only the faces of dimensions ``q-1``, ``q`` and ``q+1``."""
    faces = {d: _faces_of_size(facets, d + 1) for d in (q - 1, q, q + 1) if d >= -1}
    cq = len(faces[q])
    if not cq:
        return 0
    lower = rank(boundary_matrix(faces[q - 1], faces[q]), field) if q >= 0 else 0
    upper = rank(boundary_matrix(faces[q], faces[q + 1]), field) if faces[q + 1] else 0
    return cq - lower - upper


def hochster_depth(delta: SimplicialComplex, field: FieldSpec | None = None) -> int:
    """``min{|F| + i : H̃_{i-1}(lk F) != 0}`` over all faces ``F`` including ``∅``.

    Candidate values ``d`` are tried in increasing order, so each link is only
    asked for the single homology degree ``d - |F| - 1``.
    """
    field = field or FieldSpec.default()
    if delta.is_void:
        raise ComplexError("depth of the void complex is undefined")
    # a facet's link is {∅}, so the smallest facet already bounds the minimum
    bound = min(len(f) for f in delta.facets)
    links: dict[Face, SimplicialComplex] = {}
    for d in range(bound):
        for k in range(d + 1):
            q = d - k - 1
            for F in _faces_of_size(delta.facets, k):
                if F not in links:
                    links[F] = link(delta, F)
                lk = links[F]
                if q > lk.dim:
                    continue
                # a cone has no reduced homology
                if lk.facets != ((),) and set(lk.facets[0]).intersection(*lk.facets[1:]):
                    continue
                if _homology_in_degree(lk.facets, q, field):
                    return d
    return bound


def nerve_theorem_check(delta: SimplicialComplex, field: FieldSpec | None = None) -> bool:
    field = field or FieldSpec.default()
    a = reduced_homology_dims(delta, field)
    b = reduced_homology_dims(nerve(delta), field)
    keys = set(a) | set(b)
    return all(a.get(q, 0) == b.get(q, 0) for q in keys)
