"""Monomials and monomial ideals in a polynomial ring with ``n`` indexed variables.

Exponent vectors are plain tuples of ints. Ideals always store their minimal
generators, sorted in descending lexicographic order (the lex monomial order
with ``x1 > x2 > ... > xn``), so two ideals are equal iff their generator
tuples are equal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

import numpy as np

Exponents = tuple[int, ...]

MAX_EXPONENT = 2**31 - 1


class DimensionMismatch(ValueError):
    """Raised when objects living in rings with different variable counts meet."""


def _check_exponents(exps: Sequence[int]) -> Exponents:
    out = tuple(int(e) for e in exps)
    for e in out:
        if e < 0:
            raise ValueError(f"negative exponent in {out}")
        if e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
    return out


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: Exponents

    def __post_init__(self):
        object.__setattr__(self, "exponents", _check_exponents(self.exponents))
        if not self.exponents:
            raise ValueError("a monomial needs at least one variable")

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> Monomial:
        """Squarefree monomial ``prod x_i`` over 1-based indices ``support``."""
        e = [0] * n
        for i in support:
            e[i - 1] = 1
        return cls(tuple(e))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e)

    def divides(self, other: Monomial) -> bool:
        _same_n(self.n, other.n)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        _same_n(self.n, other.n)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, t: int) -> Monomial:
        return Monomial(tuple(a * t for a in self.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        _same_n(self.n, other.n)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: Monomial) -> Monomial:
        _same_n(self.n, other.n)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        return format_monomial(self.exponents)


def format_monomial(exps: Sequence[int], names: Sequence[str] | None = None) -> str:
    parts = []
    for i, e in enumerate(exps):
        if not e:
            continue
        name = names[i] if names else f"x{i + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _same_n(a: int, b: int) -> None:
    if a != b:
        raise DimensionMismatch(f"ambient variable counts differ: {a} != {b}")


def _as_exponents(m) -> Exponents:
    if isinstance(m, Monomial):
        return m.exponents
    return _check_exponents(m)


def minimal_elements(vectors: Iterable[Sequence[int]], n: int) -> tuple[Exponents, ...]:
    """Divisibility-minimal subset of ``vectors``, deduplicated, canonically ordered.

    Candidates are processed in degree blocks: two distinct vectors of equal
    degree never divide each other, so each block only has to be tested
    against the survivors of lower degree.
    """
    uniq = {tuple(v) for v in vectors}
    if not uniq:
        return ()
    for v in uniq:
        if len(v) != n:
            raise DimensionMismatch(f"exponent vector {v} does not have length {n}")
    if len(uniq) == 1:
        return (_check_exponents(next(iter(uniq))),)
    arr = np.array(sorted(uniq), dtype=np.int64)
    if arr.min() < 0:
        raise ValueError("negative exponent")
    if arr.max() > MAX_EXPONENT:
        raise OverflowError(f"exponent exceeds {MAX_EXPONENT}")
    deg = arr.sum(axis=1)
    order = np.argsort(deg, kind="stable")
    arr, deg = arr[order], deg[order]
    bounds = np.flatnonzero(np.diff(deg)) + 1
    kept: list[np.ndarray] = []
    kept_arr = np.empty((0, n), dtype=np.int64)
    for block in np.split(arr, bounds):
        if kept_arr.shape[0]:
            survivors = np.ones(block.shape[0], dtype=bool)
            # chunk to keep the broadcast tensor bounded
            step = max(1, 4_000_000 // max(1, kept_arr.shape[0] * n))
            for lo in range(0, block.shape[0], step):
                chunk = block[lo:lo + step]
                div = np.all(kept_arr[None, :, :] <= chunk[:, None, :], axis=2)
                survivors[lo:lo + step] = ~div.any(axis=1)
            block = block[survivors]
        if block.shape[0]:
            kept.append(block)
            kept_arr = np.concatenate(kept)
    out = sorted((tuple(int(x) for x in row) for row in kept_arr), reverse=True)
    return tuple(out)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Build instances with :func:`minimalize` or :meth:`from_generators`; the
    raw constructor trusts that ``gens`` is already minimal and canonical.
    """

    n: int
    gens: tuple[Exponents, ...]

    @classmethod
    def from_generators(cls, n: int, gens: Iterable) -> MonomialIdeal:
        return minimalize([_as_exponents(g) for g in gens], n)

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> MonomialIdeal:
        return cls(n, ((0,) * n,))

    @classmethod
    def maximal(cls, n: int) -> MonomialIdeal:
        return cls.from_support_sets(n, [[i] for i in range(1, n + 1)])

    @classmethod
    def from_support_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> MonomialIdeal:
        """Squarefree ideal generated by ``x_F`` for each 1-based index set ``F``."""
        return minimalize([Monomial.from_support(n, s).exponents for s in sets], n)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, m) -> bool:
        return contains(self, m)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def monomials(self) -> list[Monomial]:
        return [Monomial(g) for g in self.gens]

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return add(self, other)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return multiply(self, other)

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)

    def __pow__(self, t: int) -> MonomialIdeal:
        return power(self, t)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"

    def to_json(self) -> dict:
        return {"vars": self.n, "generators": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict) -> MonomialIdeal:
        n = int(data["vars"])
        if n < 1:
            raise ValueError("'vars' must be positive")
        return minimalize([_check_exponents(g) for g in data["generators"]], n)

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> MonomialIdeal:
        return cls.from_json(json.loads(text))


def minimalize(gens: Iterable, n: int | None = None) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``gens``."""
    vecs = [_as_exponents(g) for g in gens]
    if n is None:
        if not vecs:
            raise ValueError("cannot infer the ambient ring of an empty generator list")
        n = len(vecs[0])
    for v in vecs:
        if len(v) != n:
            raise DimensionMismatch(f"generator {v} does not live in {n} variables")
    return MonomialIdeal(n, minimal_elements(vecs, n))


def contains(ideal: MonomialIdeal, m) -> bool:
    e = _as_exponents(m)
    _same_n(ideal.n, len(e))
    return any(all(a <= b for a, b in zip(g, e)) for g in ideal.gens)


def add(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_n(I.n, J.n)
    return MonomialIdeal(I.n, minimal_elements(I.gens + J.gens, I.n))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_n(I.n, J.n)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.n)
    a = np.array(I.gens, dtype=np.int64)
    b = np.array(J.gens, dtype=np.int64)
    lcms = np.maximum(a[:, None, :], b[None, :, :]).reshape(-1, I.n)
    return MonomialIdeal(I.n, minimal_elements(map(tuple, lcms.tolist()), I.n))


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_n(I.n, J.n)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.n)
    a = np.array(I.gens, dtype=np.int64)
    b = np.array(J.gens, dtype=np.int64)
    prods = (a[:, None, :] + b[None, :, :]).reshape(-1, I.n)
    return MonomialIdeal(I.n, minimal_elements(map(tuple, prods.tolist()), I.n))


def power(I: MonomialIdeal, t: int) -> MonomialIdeal:
    """``I^t`` by repeated squaring; ``t == 0`` gives the unit ideal."""
    if t < 0:
        raise ValueError("power exponent must be non-negative")
    if t == 0:
        return MonomialIdeal.unit(I.n)
    result = None
    base = I
    while t:
        if t & 1:
            result = base if result is None else multiply(result, base)
        t >>= 1
        if t:
            base = multiply(base, base)
    return result


def scale(I: MonomialIdeal, m) -> MonomialIdeal:
    """The ideal ``m * I``."""
    e = _as_exponents(m)
    _same_n(I.n, len(e))
    return MonomialIdeal(I.n, minimal_elements(
        (tuple(a + b for a, b in zip(g, e)) for g in I.gens), I.n))


def colon(I: MonomialIdeal, m) -> MonomialIdeal:
    """``I : m``; each generator ``g`` becomes ``g / gcd(g, m)``."""
    e = _as_exponents(m)
    _same_n(I.n, len(e))
    return MonomialIdeal(I.n, minimal_elements(
        (tuple(max(a - b, 0) for a, b in zip(g, e)) for g in I.gens), I.n))


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.n, minimal_elements(
        (tuple(min(a, 1) for a in g) for g in I.gens), I.n))


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_n(I.n, J.n)
    return I.gens == J.gens


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff ``I`` is contained in ``J``."""
    _same_n(I.n, J.n)
    return all(contains(J, g) for g in I.gens)


def monomials_of_degree(n: int, d: int, support: Sequence[int] | None = None) -> list[Exponents]:
    """All exponent vectors of total degree ``d`` supported on the 1-based ``support``."""
    idx = [i - 1 for i in support] if support is not None else list(range(n))
    out = []
    for combo in combinations_with_replacement(idx, d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def prime_power(n: int, support: Sequence[int], s: int) -> MonomialIdeal:
    """``P^s`` for the monomial prime ``P = (x_i : i in support)``."""
    if not support:
        return MonomialIdeal.zero(n) if s > 0 else MonomialIdeal.unit(n)
    return MonomialIdeal(n, tuple(sorted(monomials_of_degree(n, s, support), reverse=True)))
