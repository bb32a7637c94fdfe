import random
from itertools import combinations

import pytest

from idealpowers import SimplicialComplex, reduced_homology_ranks
from idealpowers.errors import HomologyCrossCheckError, InputError
from idealpowers.homology import boundary_matrix, integer_rank, rank_mod_prime

from oracles import numpy_rank


def test_void_complex_has_no_homology():
    assert reduced_homology_ranks(SimplicialComplex.void()) == []


def test_irrelevant_complex():
    assert reduced_homology_ranks(SimplicialComplex.irrelevant()) == [1]


def test_isolated_vertices():
    K = SimplicialComplex.from_facets([(0,), (1,), (2,)])
    # three components: reduced H_0 has rank 2
    assert reduced_homology_ranks(K) == [0, 2]


def test_circle():
    K = SimplicialComplex.from_facets([(0, 1), (1, 2), (0, 2)])
    assert reduced_homology_ranks(K) == [0, 0, 1]


def test_filled_triangle_is_contractible():
    K = SimplicialComplex.from_facets([(0, 1, 2)])
    assert reduced_homology_ranks(K) == [0, 0, 0, 0]


def test_two_sphere():
    # boundary of the 3-simplex
    facets = list(combinations(range(4), 3))
    K = SimplicialComplex.from_facets(facets)
    assert reduced_homology_ranks(K) == [0, 0, 0, 1]


def test_downward_closure_is_enforced():
    with pytest.raises(InputError):
        SimplicialComplex(frozenset({(0, 1)})).assert_downward_closed()


def test_permutation_invariance():
    rng = random.Random(401)
    for _ in range(30):
        verts = list(range(5))
        facets = [tuple(rng.sample(verts, rng.randint(1, 4))) for _ in range(4)]
        K = SimplicialComplex.from_facets(facets)
        perm = verts[:]
        rng.shuffle(perm)
        relabeled = K.relabel(dict(zip(verts, perm)))
        assert reduced_homology_ranks(K) == reduced_homology_ranks(relabeled)


def test_euler_characteristic_consistency():
    rng = random.Random(402)
    for _ in range(30):
        facets = [tuple(rng.sample(range(5), rng.randint(1, 4))) for _ in range(4)]
        K = SimplicialComplex.from_facets(facets)
        ranks = reduced_homology_ranks(K)
        chain = [len(K.faces_of_dim(d)) for d in range(-1, K.dim + 1)]
        lhs = sum((-1) ** i * c for i, c in enumerate(chain))
        rhs = sum((-1) ** i * r for i, r in enumerate(ranks))
        assert lhs == rhs


def test_integer_rank_against_numpy():
    rng = random.Random(403)
    for _ in range(100):
        nr = rng.randint(1, 6)
        nc = rng.randint(1, 6)
        mat = [[rng.randint(-3, 3) for _ in range(nc)] for _ in range(nr)]
        assert integer_rank(mat) == numpy_rank(mat)
        assert rank_mod_prime(mat, 2_147_483_647) == numpy_rank(mat)


def test_integer_rank_edge_cases():
    assert integer_rank([]) == 0
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank([[1, 2], [2, 4]]) == 1


def test_cross_check_path_runs():
    K = SimplicialComplex.from_facets([(0, 1), (1, 2), (0, 2)])
    assert reduced_homology_ranks(K, cross_check=True) == [0, 0, 1]


def test_cross_check_detects_mismatch(monkeypatch):
    import idealpowers.homology as hm

    monkeypatch.setattr(hm, "rank_mod_prime", lambda rows, p: 99)
    K = SimplicialComplex.from_facets([(0, 1)])
    with pytest.raises(HomologyCrossCheckError):
        hm.reduced_homology_ranks(K, cross_check=True)


def test_boundary_matrix_shape():
    K = SimplicialComplex.from_facets([(0, 1, 2)])
    d1 = boundary_matrix(K, 1)
    assert len(d1) == 3 and len(d1[0]) == 3
    d0 = boundary_matrix(K, 0)
    assert len(d0) == 1 and d0[0] == [1, 1, 1]
