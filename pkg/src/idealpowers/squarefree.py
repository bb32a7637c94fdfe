"""Structure of squarefree monomial ideals.

A squarefree monomial ideal is the ideal of a reduced union of coordinate
subspaces.  Its minimal primes are coordinate primes (x_i : i in S) where S
runs over the minimal vertex covers of the hypergraph of generator supports,
and its symbolic powers are intersections of powers of those primes.
"""

from __future__ import annotations

from itertools import combinations

from .errors import AmbientMismatchError, InputError, NotSquarefreeError
from .ideals import Monomial, MonomialIdeal, intersect, minimalize

Prime = tuple[int, ...]  # sorted 0-based variable indices


def _require_squarefree_proper(I: MonomialIdeal) -> None:
    if not I.is_squarefree:
        raise NotSquarefreeError(f"{I} is not squarefree")
    if I.is_zero or I.is_unit:
        raise InputError("operation requires a proper nonzero ideal")


def minimal_primes(I: MonomialIdeal) -> tuple[Prime, ...]:
    """All minimal primes of a squarefree ideal, as variable-index tuples.

    Branch and bound over the support hypergraph: always branch on the
    smallest uncovered edge, prune partial covers that already contain a
    recorded cover, and filter the survivors down to the inclusion-minimal
    ones.
    """
    _require_squarefree_proper(I)
    edges = [frozenset(i for i, e in enumerate(g) if e) for g in I.gens]
    found: list[frozenset[int]] = []

    def extend(cover: frozenset[int], remaining: list[frozenset[int]]) -> None:
        if not remaining:
            found.append(cover)
            return
        edge = min(remaining, key=lambda s: (len(s), sorted(s)))
        for v in sorted(edge):
            nxt = cover | {v}
            if any(c <= nxt for c in found):
                continue  # any completion would be dominated
            extend(nxt, [e for e in remaining if v not in e])

    extend(frozenset(), edges)
    minimal = [
        c for c in found if not any(o < c for o in found)
    ]
    primes = sorted((tuple(sorted(c)) for c in set(minimal)), key=lambda p: (len(p), p))
    return tuple(primes)


def big_height(I: MonomialIdeal) -> int:
    """Largest codimension among the minimal primes."""
    return max(len(p) for p in minimal_primes(I))


def prime_power_ideal(prime: Prime, p: int, n: int) -> MonomialIdeal:
    """The ideal (x_i : i in prime)^p, generated in the single degree p."""
    if p < 1:
        raise InputError(f"symbolic exponent must be >= 1, got {p}")
    gens = []
    k = len(prime)
    for split in combinations(range(p + k - 1), k - 1):
        parts = []
        prev = -1
        for s in split:
            parts.append(s - prev - 1)
            prev = s
        parts.append(p + k - 2 - prev)
        vec = [0] * n
        for idx, e in zip(prime, parts):
            vec[idx] = e
        gens.append(tuple(vec))
    return minimalize(n, gens, _validated=True)


def symbolic_power(I: MonomialIdeal, p: int) -> MonomialIdeal:
    """p-th symbolic power: intersection of p-th powers of minimal primes."""
    if p < 1:
        raise InputError(f"symbolic exponent must be >= 1, got {p}")
    primes = minimal_primes(I)
    return intersect(*(prime_power_ideal(q, p, I.ambient) for q in primes))


def symbolic_membership(m: Monomial, I: MonomialIdeal, p: int) -> bool:
    """True iff x^m lies in the p-th symbolic power.

    Per minimal prime P this is the exponent-sum test: the coordinates of
    m over P's variables must sum to at least p.  Agrees with membership
    in the ideal computed by :func:`symbolic_power`.
    """
    if p < 1:
        raise InputError(f"symbolic exponent must be >= 1, got {p}")
    if len(m) != I.ambient:
        raise AmbientMismatchError(f"monomial {m} does not live in ambient {I.ambient}")
    return all(sum(m[i] for i in q) >= p for q in minimal_primes(I))


def coordinate_arrangement_ideal(n: int, e: int) -> MonomialIdeal:
    """Ideal of the union of all codimension-e coordinate subspaces of n-space.

    Closed form: all squarefree monomials of degree n - e + 1.  Equals the
    intersection of the primes (x_i : i in sigma) over all e-subsets sigma.
    """
    _check_arrangement_params(n, e)
    d = n - e + 1
    gens = []
    for support in combinations(range(n), d):
        vec = [0] * n
        for i in support:
            vec[i] = 1
        gens.append(tuple(vec))
    return minimalize(n, gens, _validated=True)


def arrangement_by_intersection(n: int, e: int) -> MonomialIdeal:
    """Same arrangement ideal, built the slow way as a prime intersection."""
    _check_arrangement_params(n, e)
    primes = []
    for sigma in combinations(range(n), e):
        gens = []
        for i in sigma:
            vec = [0] * n
            vec[i] = 1
            gens.append(tuple(vec))
        primes.append(minimalize(n, gens, _validated=True))
    return intersect(*primes)


def _check_arrangement_params(n: int, e: int) -> None:
    if n < 2 or not 1 <= e <= n - 1:
        raise InputError(f"arrangement needs n >= 2 and 1 <= e <= n-1, got n={n}, e={e}")


def validate_prime_list(I: MonomialIdeal, primes: tuple[Prime, ...]) -> None:
    """Check the vertex-cover invariants of a computed prime list."""
    sets = [set(p) for p in primes]
    for s in sets:
        if not s:
            raise InputError("empty prime in prime list")
    for a in sets:
        for b in sets:
            if a is not b and a <= b:
                raise InputError("prime list is not an antichain")
    for g in I.gens:
        support = {i for i, e in enumerate(g) if e}
        for s in sets:
            if not support & s:
                raise InputError(f"prime {sorted(s)} misses generator {g}")
