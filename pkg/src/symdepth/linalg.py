"""Exact matrix ranks over prime fields and over the rationals."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

DEFAULT_FIELD = "gf:32003"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``GF(p)`` when ``p`` is set, the rationals when ``p is None``."""

    p: int | None = 32003

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p is not None and self.p >= 2**31:
            raise ValueError("prime must be below 2^31 for int64 elimination")

    @property
    def kind(self) -> str:
        return "rationals" if self.p is None else "prime"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        t = text.strip().lower()
        if t in ("qq", "q", "rationals"):
            return cls(None)
        if t.startswith("gf:"):
            return cls(int(t[3:]))
        if t.startswith("gf(") and t.endswith(")"):
            return cls(int(t[3:-1]))
        raise ValueError(f"unrecognised field {text!r}; use gf:<prime> or qq")

    @classmethod
    def default(cls) -> FieldSpec:
        return cls.parse(os.environ.get("SYMDEPTH_FIELD", DEFAULT_FIELD))

    def __str__(self) -> str:
        return "qq" if self.p is None else f"gf:{self.p}"


QQ = FieldSpec(None)
GF2 = FieldSpec(2)
GF32003 = FieldSpec(32003)


def _rank_sparse_mod_p(M: np.ndarray, p: int) -> int:
    """Column reduction on dict columns keyed by their lowest nonzero row."""
    rows, cols = np.nonzero(M)
    vals = M[rows, cols]
    columns: list[dict[int, int]] = [dict() for _ in range(M.shape[1])]
    for r, c, v in zip(rows.tolist(), cols.tolist(), vals.tolist()):
        columns[c][r] = v
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for col in columns:
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                inv = pow(col[low], -1, p)
                pivots[low] = {k: v * inv % p for k, v in col.items()}
                r += 1
                break
            f = col[low]
            for k, v in piv.items():
                nv = (col.get(k, 0) - f * v) % p
                if nv:
                    col[k] = nv
                else:
                    col.pop(k, None)
    return r


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p) by row reduction."""
    if mat.size == 0:
        return 0
    M = np.array(mat, dtype=np.int64) % p
    if np.count_nonzero(M) * 8 < M.size:
        return _rank_sparse_mod_p(M, p)
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        below = M[r + 1:, c]
        hit = np.flatnonzero(below)
        if hit.size:
            idx = hit + r + 1
            M[idx] = (M[idx] - np.outer(M[idx, c], M[r])) % p
        r += 1
    return r


def _rank_sparse_rational(M: np.ndarray) -> int:
    """Fraction-free column reduction over the integers, each column kept primitive."""
    rows, cols = np.nonzero(M)
    columns: list[dict[int, int]] = [dict() for _ in range(M.shape[1])]
    for r, c, v in zip(rows.tolist(), cols.tolist(), M[rows, cols].tolist()):
        columns[c][r] = int(v)
    pivots: dict[int, dict[int, int]] = {}
    for col in columns:
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = col
                break
            a, b = piv[low], col[low]
            new = {}
            for k in col.keys() | piv.keys():
                v = a * col.get(k, 0) - b * piv.get(k, 0)
                if v:
                    new[k] = v
            g = math.gcd(*new.values()) if new else 1
            col = {k: v // g for k, v in new.items()}
    return len(pivots)


def rank_bareiss(mat) -> int:
    """Rank over the rationals on Python ints.

    Sparse input (boundary matrices) goes through fraction-free column
    reduction; dense input through Bareiss elimination.
    """
    arr = np.asarray(mat)
    if arr.size and np.count_nonzero(arr) * 8 < arr.size:
        return _rank_sparse_rational(arr)
    M = [[int(x) for x in row] for row in arr.tolist()]
    if not M or not M[0]:
        return 0
    rows, cols = len(M), len(M[0])
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pr = M[r]
        pv = pr[c]
        for i in range(r + 1, rows):
            row = M[i]
            a = row[c]
            # exact division is guaranteed by Sylvester's identity
            M[i] = [(pv * row[j] - a * pr[j]) // prev for j in range(cols)]
        prev = pv
        r += 1
    return r


def rank(mat, field: FieldSpec) -> int:
    if field.p is None:
        return rank_bareiss(mat)
    return rank_mod_p(np.asarray(mat), field.p)
