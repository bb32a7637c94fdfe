"""Reduced simplicial homology over the rationals, computed exactly.

Complexes are stored as their full face sets (small by construction: the
upper Koszul complexes this package builds live on at most one vertex per
ambient variable).  Ranks of boundary maps come from fraction-free integer
elimination, so no tolerance or floating point is involved.  An optional
cross-check recomputes every rank modulo a large prime and aborts on any
disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import HomologyCrossCheckError, InputError

Face = tuple[int, ...]

CROSS_CHECK_PRIME = 2_147_483_647


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite simplicial complex as a downward-closed set of faces.

    Faces are sorted vertex tuples; the empty tuple is the empty face.
    Two degenerate states are distinct: the void complex (no faces, not
    even the empty one) and the irrelevant complex whose only face is
    the empty face.
    """

    faces: frozenset[Face]

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls(frozenset())

    @classmethod
    def irrelevant(cls) -> "SimplicialComplex":
        return cls(frozenset({()}))

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        normalized = {tuple(sorted(set(f))) for f in faces}
        if normalized:
            normalized.add(())
        k = cls(frozenset(normalized))
        k.assert_downward_closed()
        return k

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        faces: set[Face] = set()
        for facet in facets:
            vs = tuple(sorted(set(facet)))
            for r in range(len(vs) + 1):
                faces.update(combinations(vs, r))
        return cls(frozenset(faces))

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def is_irrelevant(self) -> bool:
        return self.faces == frozenset({()})

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for f in self.faces if len(f) == 1 for v in f))

    @property
    def dim(self) -> int:
        """Dimension of the complex; -1 for {empty face}, -2 for void."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.faces) - 1

    def faces_of_dim(self, d: int) -> list[Face]:
        return sorted(f for f in self.faces if len(f) == d + 1)

    def assert_downward_closed(self) -> None:
        for f in self.faces:
            for i in range(len(f)):
                if f[:i] + f[i + 1 :] not in self.faces:
                    raise InputError(f"face set not downward closed at {f}")

    def relabel(self, mapping: dict[int, int]) -> "SimplicialComplex":
        return SimplicialComplex(
            frozenset(tuple(sorted(mapping[v] for v in f)) for f in self.faces)
        )


def boundary_matrix(K: SimplicialComplex, d: int) -> list[list[int]]:
    """Matrix of the boundary map from d-faces to (d-1)-faces.

    Rows are indexed by (d-1)-faces, columns by d-faces, both in sorted
    order; the map from vertices hits the empty face with coefficient 1.
    """
    lower = {f: i for i, f in enumerate(K.faces_of_dim(d - 1))}
    upper = K.faces_of_dim(d)
    rows = [[0] * len(upper) for _ in lower]
    for j, f in enumerate(upper):
        for pos in range(len(f)):
            sub = f[:pos] + f[pos + 1 :]
            rows[lower[sub]][j] = (-1) ** pos
    return rows


def reduced_homology_ranks(K: SimplicialComplex, *, cross_check: bool = False) -> list[int]:
    """Ranks of reduced rational homology, listed from dimension -1 up.

    Entry i of the result is the rank in dimension i - 1, so the
    irrelevant complex returns [1] and the void complex returns [].
    """
    if K.is_void:
        return []
    top = K.dim
    chain_sizes = [len(K.faces_of_dim(d)) for d in range(-1, top + 1)]
    boundary_ranks = []
    for d in range(0, top + 1):
        mat = boundary_matrix(K, d)
        r = integer_rank(mat)
        if cross_check:
            rp = rank_mod_prime(mat, CROSS_CHECK_PRIME)
            if rp != r:
                raise HomologyCrossCheckError(
                    f"rank disagreement in dimension {d}: exact {r}, mod-p {rp}"
                )
        boundary_ranks.append(r)
    boundary_ranks.append(0)  # no faces above the top dimension
    ranks = []
    for idx in range(len(chain_sizes)):
        incoming = boundary_ranks[idx] if idx < len(boundary_ranks) else 0
        outgoing = boundary_ranks[idx - 1] if idx >= 1 else 0
        ranks.append(chain_sizes[idx] - incoming - outgoing)
    return ranks


def integer_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by Bareiss fraction-free elimination.

    Every division below is exact (entries stay determinantal minors),
    so the computation is over the integers throughout.
    """
    if not rows or not rows[0]:
        return 0
    m = [list(r) for r in rows]
    nr, nc = len(m), len(m[0])
    rank = 0
    prev = 1
    pr = 0
    for col in range(nc):
        piv = next((r for r in range(pr, nr) if m[r][col]), None)
        if piv is None:
            continue
        m[pr], m[piv] = m[piv], m[pr]
        for r in range(pr + 1, nr):
            # Bareiss updates every remaining row, including those with a
            # zero in the pivot column; skipping them breaks exactness of
            # the later divisions.
            factor = m[r][col]
            for c in range(col + 1, nc):
                m[r][c] = (m[r][c] * m[pr][col] - factor * m[pr][c]) // prev
            m[r][col] = 0
        prev = m[pr][col]
        pr += 1
        rank += 1
        if pr == nr:
            break
    return rank


def rank_mod_prime(rows: list[list[int]], p: int) -> int:
    """Rank of an integer matrix over the field with p elements."""
    if not rows or not rows[0]:
        return 0
    m = [[x % p for x in r] for r in rows]
    nr, nc = len(m), len(m[0])
    rank = 0
    pr = 0
    for col in range(nc):
        piv = next((r for r in range(pr, nr) if m[r][col]), None)
        if piv is None:
            continue
        m[pr], m[piv] = m[piv], m[pr]
        inv = pow(m[pr][col], p - 2, p)
        m[pr] = [(x * inv) % p for x in m[pr]]
        for r in range(nr):
            if r != pr and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[pr])]
        pr += 1
        rank += 1
        if pr == nr:
            break
    return rank
