"""Multigraded Betti numbers and Castelnuovo-Mumford regularity.

The Betti number beta_{i,a} of a monomial ideal equals the rank of reduced
homology in dimension i - 1 of the upper Koszul complex at the multidegree
a, and every nonzero Betti number sits at a multidegree inside the lcm
closure of the generators.  Regularity is then max(|a| - i) over the
nonzero entries, in two flavours: for the ideal itself ("module") and for
its irrelevant saturation ("sheaf"), which is the value all the asymptotic
bounds in this package refer to.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError, InputError
from .homology import SimplicialComplex, reduced_homology_ranks
from .ideals import Monomial, MonomialIdeal

DEFAULT_CLOSURE_CAP = 100_000


def lcm_closure(I: MonomialIdeal, *, cap: int = DEFAULT_CLOSURE_CAP) -> list[Monomial]:
    """Smallest join-closed set of multidegrees containing the generators.

    Every element is a join of generators, so closing under joins with
    single generators reaches a fixpoint.
    """
    if I.is_zero:
        raise InputError("lcm closure of the zero ideal")
    seen = set(I.gens)
    queue = list(I.gens)
    while queue:
        x = queue.pop()
        for g in I.gens:
            j = tuple(a if a >= b else b for a, b in zip(x, g))
            if j not in seen:
                seen.add(j)
                if len(seen) > cap:
                    raise CapExceededError("lcm closure", cap)
                queue.append(j)
    return sorted(seen)


def upper_koszul(I: MonomialIdeal, a: Monomial) -> SimplicialComplex:
    """Upper Koszul complex of the ideal at multidegree a.

    Vertices are the variables with a_i >= 1; a squarefree vector b below
    the support is a face exactly when x^(a-b) lies in the ideal.  The
    face set is downward closed because membership is monotone under
    divisibility; this is asserted.
    """
    if len(a) != I.ambient or any(e < 0 for e in a):
        raise InputError(f"bad multidegree {a} for ambient {I.ambient}")
    if not I.contains(a):
        return SimplicialComplex.void()
    support = [i for i, e in enumerate(a) if e >= 1]
    faces: set[tuple[int, ...]] = set()
    for mask in range(1 << len(support)):
        chosen = [support[i] for i in range(len(support)) if mask >> i & 1]
        shifted = list(a)
        for i in chosen:
            shifted[i] -= 1
        if I.contains(tuple(shifted)):
            faces.add(tuple(chosen))
    K = SimplicialComplex(frozenset(faces))
    K.assert_downward_closed()
    return K


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers, as sorted (i, multidegree, rank)."""

    ambient: int
    entries: tuple[tuple[int, Monomial, int], ...]

    def rank(self, i: int, a: Monomial) -> int:
        for j, b, r in self.entries:
            if j == i and b == a:
                return r
        return 0

    def generator_entries(self) -> list[tuple[Monomial, int]]:
        return [(a, r) for i, a, r in self.entries if i == 0]

    def max_shift(self) -> int:
        return max(sum(a) - i for i, a, _ in self.entries)


def betti_table(
    I: MonomialIdeal,
    *,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
    cross_check: bool = False,
) -> BettiTable:
    """All nonzero beta_{i,a} of a proper nonzero monomial ideal."""
    if I.is_zero or I.is_unit:
        raise InputError("Betti table requires a proper nonzero ideal")
    entries = []
    for a in lcm_closure(I, cap=closure_cap):
        K = upper_koszul(I, a)
        ranks = reduced_homology_ranks(K, cross_check=cross_check)
        for idx, r in enumerate(ranks):  # idx 0 is homological dimension -1
            if r:
                entries.append((idx, a, r))
    entries.sort(key=lambda e: (e[0], sum(e[1]), e[1]))  # grlex within each i
    return BettiTable(I.ambient, tuple(entries))


@dataclass(frozen=True)
class RegularityValue:
    """Regularity of an ideal and of its irrelevant saturation."""

    module_reg: int
    sheaf_reg: int

    @property
    def saturation_gap(self) -> bool:
        return self.module_reg != self.sheaf_reg


def regularity(
    I: MonomialIdeal,
    *,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
    cross_check: bool = False,
) -> RegularityValue:
    """Module and sheaf regularity of a nonzero monomial ideal.

    The unit ideal has regularity 0 by convention; the sheaf value is the
    module regularity of the irrelevant saturation (0 when the saturation
    is the unit ideal).
    """
    if I.is_zero:
        raise InputError("regularity of the zero ideal is undefined")
    module = _module_regularity(I, closure_cap, cross_check)
    sat = I.saturate()
    if sat == I:
        sheaf = module
    else:
        sheaf = _module_regularity(sat, closure_cap, cross_check)
    return RegularityValue(module, sheaf)


def _module_regularity(I: MonomialIdeal, closure_cap: int, cross_check: bool) -> int:
    if I.is_unit:
        return 0
    table = betti_table(I, closure_cap=closure_cap, cross_check=cross_check)
    return table.max_shift()
