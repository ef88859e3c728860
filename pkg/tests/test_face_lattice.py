"""Tests for hypersimplex face lattices, dualization, and Eulerian checks."""

import json
from math import comb

import pytest

from hypersimplex.face_lattice import (EulerianPoset, dualize, f_vector,
                                       hypersimplex_face_poset, is_eulerian,
                                       lower_interval, poset_debug_json)


def counts_by_rank(poset):
    counts = {}
    for r in poset.ranks:
        counts[r] = counts.get(r, 0) + 1
    return counts


def test_triangle_lattice():
    tri = hypersimplex_face_poset(1, 3)
    assert len(tri) == 8
    assert counts_by_rank(tri) == {0: 1, 1: 3, 2: 3, 3: 1}
    assert f_vector(tri) == (3, 3)


def test_octahedron_lattice():
    octa = hypersimplex_face_poset(2, 4)
    assert f_vector(octa) == (6, 12, 8)
    # each |ones| = |zeros| = 1 pair really is an edge with two endpoints
    edges = [p for p in range(len(octa)) if octa.ranks[p] == 2]
    assert all(len(octa.down[e]) == 2 for e in edges)


def test_dual_octahedron_is_cube():
    cube = dualize(hypersimplex_face_poset(2, 4))
    assert f_vector(cube) == (8, 12, 6)


def test_dual_reverses_f_vector():
    for n in range(2, 8):
        for k in range(1, n):
            lattice = hypersimplex_face_poset(k, n)
            assert f_vector(dualize(lattice)) == f_vector(lattice)[::-1]


def test_dualize_is_involution():
    lattice = hypersimplex_face_poset(2, 5)
    double = dualize(dualize(lattice))
    assert double.ranks == lattice.ranks
    assert sorted(double.covers) == sorted(lattice.covers)
    assert double.structure_keys == lattice.structure_keys


def test_edge_count_3_6():
    lattice = hypersimplex_face_poset(3, 6)
    edges = [p for p in range(len(lattice)) if lattice.ranks[p] == 2]
    assert len(edges) == comb(6, 2) * comb(4, 2)  # 90


def test_dual_f_vector_closed_form():
    # 2^(r+1) C(n, r+1) faces of dimension r, for r below k
    for n in range(4, 9):
        for k in range(1, n // 2 + 1):
            fv = f_vector(dualize(hypersimplex_face_poset(k, n)))
            for r in range(k):
                assert fv[r] == 2 ** (r + 1) * comb(n, r + 1), (k, n, r)


def test_dual_f0_2_5():
    assert f_vector(dualize(hypersimplex_face_poset(2, 5)))[0] == 10


def test_euler_relation():
    for n in range(2, 8):
        for k in range(1, n):
            fv = f_vector(hypersimplex_face_poset(k, n))
            total = sum((-1) ** r * v for r, v in enumerate(fv))
            assert total == 1 - (-1) ** (n - 1), (k, n)


def test_quasi_simplicial_edge_covers():
    # every edge lies in exactly n - 2 two-dimensional faces
    for n in range(4, 8):
        for k in range(1, n):
            lattice = hypersimplex_face_poset(k, n)
            for p in range(len(lattice)):
                if lattice.ranks[p] == 2:
                    assert len(lattice.up[p]) == n - 2, (k, n)


def test_dual_low_rank_intervals_are_boolean():
    # in the dual, every element of rank <= n - 2 has a Boolean lower
    # interval (all proper faces of low enough dimension are simplices)
    for (k, n) in [(2, 4), (2, 5), (3, 6)]:
        dual = dualize(hypersimplex_face_poset(k, n))
        for p in range(len(dual)):
            if dual.ranks[p] <= n - 2:
                assert len(dual.downset(p)) == 2 ** dual.ranks[p], (k, n, p)


def test_rejects_degenerate_parameters():
    for (k, n) in [(0, 4), (4, 4), (5, 4), (1, 1)]:
        with pytest.raises(ValueError):
            hypersimplex_face_poset(k, n)


def test_is_eulerian_on_hypersimplex_lattices():
    for n in range(2, 7):
        for k in range(1, n):
            lattice = hypersimplex_face_poset(k, n)
            assert is_eulerian(lattice), (k, n)
            assert is_eulerian(dualize(lattice)), (k, n)


def test_three_element_chain_is_not_eulerian():
    chain = EulerianPoset([0, 1, 2], [(0, 1), (1, 2)])
    assert not is_eulerian(chain)


def test_one_element_poset_is_eulerian():
    assert is_eulerian(EulerianPoset([0], []))


def test_lower_interval_trivial_cases():
    lattice = hypersimplex_face_poset(2, 4)
    bottom = lower_interval(lattice, lattice.bottom)
    assert len(bottom) == 1
    full = lower_interval(lattice, lattice.top)
    assert len(full) == len(lattice)
    assert full.ranks == lattice.ranks


def test_lower_interval_of_cube_facet_is_square():
    cube = dualize(hypersimplex_face_poset(2, 4))
    facets = [p for p in range(len(cube)) if cube.ranks[p] == 3]
    square = lower_interval(cube, facets[0])
    assert f_vector(square) == (4, 4)
    assert is_eulerian(square)


def test_constructor_rejects_bad_covers():
    with pytest.raises(ValueError):
        EulerianPoset([0, 2], [(0, 1)])  # cover must raise rank by one
    with pytest.raises(ValueError):
        EulerianPoset([0, 1, 1], [(0, 1)])  # element 2 isolated: two tops


def test_leq_and_downsets():
    lattice = hypersimplex_face_poset(2, 5)
    top, bottom = lattice.top, lattice.bottom
    for p in range(len(lattice)):
        assert lattice.leq(bottom, p)
        assert lattice.leq(p, top)
    verts = [p for p in range(len(lattice)) if lattice.ranks[p] == 1]
    assert not lattice.leq(verts[0], verts[1])


def test_debug_json_round_trip():
    lattice = hypersimplex_face_poset(1, 3)
    doc = json.loads(poset_debug_json(lattice))
    assert len(doc["elements"]) == 8
    assert {"id", "rank", "key"} <= set(doc["elements"][0])
    ranks = {e["id"]: e["rank"] for e in doc["elements"]}
    assert all(ranks[hi] == ranks[lo] + 1 for lo, hi in doc["covers"])
