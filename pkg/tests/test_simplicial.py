import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import rank_mod
from strategies import ideals, random_complex
from symdepth.graph import edge_ideal, make_cycle, make_whisker, whisker_leaves
from symdepth.linalg import (GF2, GF32003, QQ, FieldSpec, _rank_sparse_mod_p, _rank_sparse_rational,
                            rank, rank_bareiss, rank_mod_p)
from symdepth.monomial import MonomialIdeal
from symdepth.simplicial import (ComplexError, SimplicialComplex, boundary_matrix, euler_check,
                                 hochster_depth, link, nerve, nerve_theorem_check,
                                 reduced_homology_dims, stanley_reisner_complex,
                                 stanley_reisner_ideal)

FIELDS = [GF2, GF32003, QQ]
TRIANGLE = SimplicialComplex.from_facets(3, [[1, 2], [1, 3], [2, 3]])


def cx(n, *facets):
    return SimplicialComplex.from_facets(n, facets)


# ---- fields and ranks

def test_field_parsing():
    assert FieldSpec.parse("gf:2") == GF2
    assert FieldSpec.parse("qq") == QQ
    assert str(FieldSpec.parse("GF(32003)")) == "gf:32003"
    with pytest.raises(ValueError):
        FieldSpec.parse("gf:4")
    with pytest.raises(ValueError):
        FieldSpec.parse("reals")


def test_field_env_default(monkeypatch):
    monkeypatch.setenv("SYMDEPTH_FIELD", "gf:2")
    assert FieldSpec.default() == GF2
    monkeypatch.delenv("SYMDEPTH_FIELD")
    assert FieldSpec.default() == GF32003


def test_rank_char_dependence():
    M = np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert rank(M, QQ) == 3
    assert rank(M, GF2) == 2


@given(st.integers(1, 7), st.integers(1, 7), st.data())
def test_ranks_match_reference(r, c, data):
    rows = [[data.draw(st.integers(-3, 3)) for _ in range(c)] for _ in range(r)]
    M = np.array(rows)
    for p in (2, 3, 32003):
        assert rank_mod_p(M, p) == rank_mod(rows, p)
    assert rank_bareiss(M) == np.linalg.matrix_rank(M.astype(float))
    for p in (2, 32003):
        assert _rank_sparse_mod_p(M % p, p) == rank_mod(rows, p)
    assert _rank_sparse_rational(M) == np.linalg.matrix_rank(M.astype(float))


# ---- Stanley-Reisner

def test_sr_complex_examples():
    assert stanley_reisner_complex(MonomialIdeal.from_generators(2, [(1, 1)])).facets == ((1,), (2,))
    assert stanley_reisner_complex(edge_ideal(make_cycle(3))).facets == ((1,), (2,), (3,))
    assert stanley_reisner_complex(MonomialIdeal.zero(4)).facets == ((1, 2, 3, 4),)
    with pytest.raises(ComplexError):
        stanley_reisner_complex(MonomialIdeal.from_generators(2, [(2, 0)]))
    with pytest.raises(ComplexError):
        stanley_reisner_complex(MonomialIdeal.unit(2))


def test_sr_ideal_examples():
    assert stanley_reisner_ideal(cx(2, [1], [2])).gens == ((1, 1),)
    assert stanley_reisner_ideal(cx(3, [1, 2, 3])).is_zero
    assert stanley_reisner_ideal(TRIANGLE).gens == ((1, 1, 1),)


@given(ideals(n_min=1, n_max=8, squarefree=True, max_gens=6))
def test_sr_round_trip(I):
    if I.is_unit:
        return
    assert stanley_reisner_ideal(stanley_reisner_complex(I)) == I


# ---- links and nerves

def test_link_examples():
    assert link(TRIANGLE, []) == TRIANGLE
    assert link(TRIANGLE, [1]).facets == ((2,), (3,))
    assert link(cx(3, [1, 2, 3]), [1, 2]).facets == ((3,),)
    with pytest.raises(ComplexError):
        link(TRIANGLE, [1, 2, 3])


def test_nerve_examples():
    # facets of the complex from the whisker colon argument, a = (1,1,1):
    # F_i = all vertices except x_i and its leaf
    spec = (1, 1, 1)
    W = make_whisker(spec)
    leaves = whisker_leaves(spec)
    facets = [[v for v in W.vertices if v != i + 1 and v not in leaves[i]] for i in range(3)]
    N = nerve(cx(W.n, *facets))
    assert reduced_homology_dims(N, GF32003) == {-1: 0, 0: 0, 1: 1}
    assert nerve(cx(3, [1, 2, 3])).facets == ((1,),)
    assert nerve(cx(4, [1, 2], [3, 4])).facets == ((1,), (2,))
    with pytest.raises(ComplexError):
        nerve(SimplicialComplex.void(3))


# ---- homology

@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_homology_examples(field):
    assert reduced_homology_dims(TRIANGLE, field) == {-1: 0, 0: 0, 1: 1}
    assert reduced_homology_dims(cx(2, [1], [2]), field) == {-1: 0, 0: 1}
    sphere3 = cx(5, *[[v for v in range(1, 6) if v != i] for i in range(1, 6)])
    h = reduced_homology_dims(sphere3, field)
    assert h[3] == 1 and sum(h.values()) == 1
    assert reduced_homology_dims(SimplicialComplex.empty(3), field) == {-1: 1}
    assert reduced_homology_dims(SimplicialComplex.void(3), field) == {}


def test_projective_plane_is_char_dependent():
    rp2 = cx(6, [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6], [2, 3, 5], [2, 4, 5],
             [2, 4, 6], [3, 4, 6], [3, 5, 6])
    assert reduced_homology_dims(rp2, GF2) == {-1: 0, 0: 0, 1: 1, 2: 1}
    assert reduced_homology_dims(rp2, QQ) == {-1: 0, 0: 0, 1: 0, 2: 0}
    assert reduced_homology_dims(rp2, GF32003) == {-1: 0, 0: 0, 1: 0, 2: 0}


# ---- Hochster

@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_hochster_examples(field):
    assert hochster_depth(stanley_reisner_complex(MonomialIdeal.from_generators(2, [(1, 1)])), field) == 1
    assert hochster_depth(cx(4, [1, 2, 3, 4]), field) == 4
    assert hochster_depth(stanley_reisner_complex(edge_ideal(make_cycle(5))), field) == 2
    with pytest.raises(ComplexError):
        hochster_depth(SimplicialComplex.void(2), field)


# ---- random complexes

@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_nerve_theorem_random(field):
    rng = random.Random(20260 + (field.p or 0))
    for _ in range(200):
        delta = random_complex(rng, 6)
        assert nerve_theorem_check(delta, field)


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_euler_and_boundary_squared(field):
    rng = random.Random(7)
    for _ in range(60):
        delta = random_complex(rng, 6)
        assert euler_check(delta, field)
        fd = delta.faces_by_dim()
        for q in fd:
            if q - 1 in fd and q + 1 in fd:
                d1 = boundary_matrix(fd[q - 1], fd[q])
                d2 = boundary_matrix(fd[q], fd[q + 1])
                assert not (d1 @ d2).any()
        assert hochster_depth(delta, field) <= delta.dim + 1


def test_complex_json_round_trip():
    assert SimplicialComplex.from_json(TRIANGLE.to_json()) == TRIANGLE
    assert TRIANGLE.to_json() == {"vertices": 3, "facets": [[1, 2], [1, 3], [2, 3]]}
    with pytest.raises(ComplexError):
        cx(2, [1, 3])


def test_void_and_empty_are_distinct():
    assert SimplicialComplex.void(2) != SimplicialComplex.empty(2)
    assert SimplicialComplex.void(2).dim == -2
    assert SimplicialComplex.empty(2).dim == -1


def hochster_reference(delta, field):
    """The formula literally: full homology of every link."""
    best = None
    for F in delta.faces:
        h = reduced_homology_dims(link(delta, F), field)
        for q, v in h.items():
            if v:
                val = len(F) + q + 1
                best = val if best is None else min(best, val)
    return best


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_hochster_matches_literal_formula(field):
    rng = random.Random(11)
    for _ in range(80):
        delta = random_complex(rng, 6)
        assert hochster_depth(delta, field) == hochster_reference(delta, field)
