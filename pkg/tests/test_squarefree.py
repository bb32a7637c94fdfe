import random

import pytest

from idealpowers import (
    InputError,
    MonomialIdeal,
    NotSquarefreeError,
    big_height,
    coordinate_arrangement_ideal,
    minimal_primes,
    minimalize,
    symbolic_membership,
    symbolic_power,
)
from idealpowers.squarefree import arrangement_by_intersection, validate_prime_list

from conftest import random_squarefree_ideal
from oracles import box_monomials, brute_minimal_covers


def test_minimal_primes_of_triangle(triangle):
    assert minimal_primes(triangle) == ((0, 1), (0, 2), (1, 2))


def test_minimal_primes_simple_cases():
    assert minimal_primes(minimalize(2, [(1, 1)])) == ((0,), (1,))
    assert minimal_primes(minimalize(2, [(1, 0), (0, 1)])) == ((0, 1),)


def test_minimal_primes_match_brute_force():
    rng = random.Random(301)
    for _ in range(60):
        I = random_squarefree_ideal(rng)
        if not I.is_proper:
            continue
        primes = minimal_primes(I)
        assert set(primes) == brute_minimal_covers(I)
        validate_prime_list(I, primes)


def test_minimal_primes_rejects_bad_input(triangle):
    with pytest.raises(NotSquarefreeError):
        minimal_primes(minimalize(2, [(2, 0)]))
    with pytest.raises(InputError):
        minimal_primes(MonomialIdeal.unit(3))
    with pytest.raises(InputError):
        minimal_primes(MonomialIdeal.zero(3))


def test_big_height_examples(triangle):
    assert big_height(triangle) == 2
    assert big_height(coordinate_arrangement_ideal(5, 3)) == 3
    assert big_height(minimalize(2, [(1, 1)])) == 1


def test_symbolic_power_one_is_identity():
    rng = random.Random(302)
    for _ in range(25):
        I = random_squarefree_ideal(rng)
        if not I.is_proper:
            continue
        assert symbolic_power(I, 1) == I


def test_symbolic_square_of_triangle(triangle):
    S = symbolic_power(triangle, 2)
    assert S.gens == ((1, 1, 1), (0, 2, 2), (2, 0, 2), (2, 2, 0))


def test_symbolic_contains_ordinary(triangle):
    for p in (1, 2, 3, 4):
        assert (triangle ** p).issubset(symbolic_power(triangle, p))


def test_symbolic_strictly_larger_at_four(triangle):
    S = symbolic_power(triangle, 4)
    assert S.contains((2, 2, 2))
    assert not (triangle ** 4).contains((2, 2, 2))


def test_symbolic_product_rule(triangle):
    for p, q in ((1, 1), (1, 2), (2, 2)):
        lhs = symbolic_power(triangle, p).multiply(symbolic_power(triangle, q))
        assert lhs.issubset(symbolic_power(triangle, p + q))


def test_symbolic_membership_examples(triangle):
    assert symbolic_membership((2, 2, 2), triangle, 4)
    I = minimalize(2, [(1, 1)])
    assert not symbolic_membership((3, 0), I, 1)


def test_symbolic_membership_agrees_with_generators(triangle):
    for p in (1, 2, 3, 4):
        S = symbolic_power(triangle, p)
        for m in box_monomials(3, 6):
            assert symbolic_membership(m, triangle, p) == S.contains(m)


def test_symbolic_membership_agrees_on_random_ideals():
    rng = random.Random(303)
    for _ in range(12):
        I = random_squarefree_ideal(rng, n_max=4, gens_max=4)
        if not I.is_proper:
            continue
        p = rng.randint(1, 3)
        S = symbolic_power(I, p)
        for m in box_monomials(I.ambient, 5):
            assert symbolic_membership(m, I, p) == S.contains(m)


def test_symbolic_rejects_non_squarefree():
    with pytest.raises(NotSquarefreeError):
        symbolic_power(minimalize(2, [(2, 0), (0, 1)]), 2)


def test_arrangement_small_cases(triangle):
    assert coordinate_arrangement_ideal(3, 2) == triangle
    quad = coordinate_arrangement_ideal(4, 2)
    assert quad.gens == ((0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0))
    prod = coordinate_arrangement_ideal(4, 1)
    assert prod.gens == ((1, 1, 1, 1),)


def test_arrangement_two_constructions_agree():
    for n in range(2, 7):
        for e in range(1, n):
            assert coordinate_arrangement_ideal(n, e) == arrangement_by_intersection(n, e)


def test_arrangement_rejects_bad_params():
    with pytest.raises(InputError):
        coordinate_arrangement_ideal(3, 3)
    with pytest.raises(InputError):
        coordinate_arrangement_ideal(3, 0)
