"""Exact arithmetic for monomials and monomial ideals.

A monomial in n variables is an exponent tuple of n non-negative integers,
so x1^2*x3 in three variables is (2, 0, 1).  A monomial ideal is stored by
its unique minimal generating set, kept in graded lexicographic order, so
two equal ideals have identical representations and compare equal as plain
dataclasses.

The unit ideal is generated by the zero monomial; the zero ideal has no
generators.  All values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AmbientMismatchError, InputError

Monomial = tuple[int, ...]


def total_degree(m: Monomial) -> int:
    return sum(m)


def _check_pair(m1: Monomial, m2: Monomial) -> None:
    if len(m1) != len(m2):
        raise AmbientMismatchError(f"monomials of length {len(m1)} and {len(m2)}")


def divides(m1: Monomial, m2: Monomial) -> bool:
    """True iff m1 divides m2, i.e. componentwise m1 <= m2."""
    _check_pair(m1, m2)
    return all(a <= b for a, b in zip(m1, m2))


def lcm(m1: Monomial, m2: Monomial) -> Monomial:
    _check_pair(m1, m2)
    return tuple(a if a >= b else b for a, b in zip(m1, m2))


def gcd(m1: Monomial, m2: Monomial) -> Monomial:
    _check_pair(m1, m2)
    return tuple(a if a <= b else b for a, b in zip(m1, m2))


def mul(m1: Monomial, m2: Monomial) -> Monomial:
    _check_pair(m1, m2)
    return tuple(a + b for a, b in zip(m1, m2))


def grlex_key(m: Monomial) -> tuple[int, Monomial]:
    return (sum(m), m)


def monomial_text(m: Monomial) -> str:
    """Render (2, 0, 1) as "x1^2*x3"; the zero vector renders as "1"."""
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def _validate_monomial(m: Sequence[int], n: int) -> Monomial:
    t = tuple(m)
    if len(t) != n:
        raise AmbientMismatchError(f"monomial {t} has length {len(t)}, ambient is {n}")
    for e in t:
        if not isinstance(e, int) or e < 0:
            raise InputError(f"exponents must be non-negative integers, got {e!r}")
    return t


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators in canonical order.

    Construct through :func:`minimalize` (or the classmethods below); the
    raw constructor trusts its arguments.
    """

    ambient: int
    gens: tuple[Monomial, ...]

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    @classmethod
    def principal(cls, m: Sequence[int]) -> "MonomialIdeal":
        t = tuple(m)
        return cls(len(t), (t,))

    # -- predicates ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_proper(self) -> bool:
        return bool(self.gens) and any(self.gens[0])

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    @property
    def max_degree(self) -> int:
        """Largest total degree among generators (0 for the zero ideal)."""
        return max((sum(g) for g in self.gens), default=0)

    @property
    def min_degree(self) -> int:
        return min((sum(g) for g in self.gens), default=0)

    def _check_ambient(self, other: "MonomialIdeal") -> None:
        if self.ambient != other.ambient:
            raise AmbientMismatchError(
                f"ideals with ambients {self.ambient} and {other.ambient}"
            )

    # -- membership and containment --------------------------------------

    def contains(self, m: Sequence[int]) -> bool:
        """True iff the monomial with exponents m lies in the ideal."""
        t = _validate_monomial(m, self.ambient)
        return any(all(a <= b for a, b in zip(g, t)) for g in self.gens)

    def issubset(self, other: "MonomialIdeal") -> bool:
        self._check_ambient(other)
        og = other.gens
        return all(
            any(all(a <= b for a, b in zip(g, m)) for g in og) for m in self.gens
        )

    def __le__(self, other: "MonomialIdeal") -> bool:
        return self.issubset(other)

    # -- arithmetic -------------------------------------------------------

    def multiply(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ambient(other)
        prods = {
            tuple(a + b for a, b in zip(f, g)) for f in self.gens for g in other.gens
        }
        return minimalize(self.ambient, prods, _validated=True)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return self.multiply(other)

    def power(self, p: int) -> "MonomialIdeal":
        """p-th power by iterated products, minimalizing after each step."""
        if p < 0:
            raise InputError(f"power exponent must be >= 0, got {p}")
        result = MonomialIdeal.unit(self.ambient)
        for _ in range(p):
            result = result.multiply(self)
        return result

    def __pow__(self, p: int) -> "MonomialIdeal":
        return self.power(p)

    def colon(self, m: Sequence[int]) -> "MonomialIdeal":
        """Colon ideal (I : m) = { g / gcd(g, m) : g generator }."""
        t = _validate_monomial(m, self.ambient)
        quots = {tuple(max(a - b, 0) for a, b in zip(g, t)) for g in self.gens}
        return minimalize(self.ambient, quots, _validated=True)

    def saturate_variable(self, i: int) -> "MonomialIdeal":
        """Saturation I : x_i^inf, by zeroing the i-th exponent (0-based)."""
        if not 0 <= i < self.ambient:
            raise InputError(f"variable index {i} out of range for ambient {self.ambient}")
        zeroed = {g[:i] + (0,) + g[i + 1 :] for g in self.gens}
        return minimalize(self.ambient, zeroed, _validated=True)

    def saturate(self) -> "MonomialIdeal":
        """Saturation with respect to the irrelevant maximal ideal.

        Computed as the intersection of I : x_i^inf over all variables;
        removes exactly the component primary to (x1, ..., xn).
        """
        return intersect(*(self.saturate_variable(i) for i in range(self.ambient)))

    def radical(self) -> "MonomialIdeal":
        parts = {tuple(min(e, 1) for e in g) for g in self.gens}
        return minimalize(self.ambient, parts, _validated=True)

    # -- misc -------------------------------------------------------------

    def validate(self) -> None:
        """Check the canonical-form invariants; used by the test suite."""
        seen = set()
        for g in self.gens:
            _validate_monomial(g, self.ambient)
            if g in seen:
                raise InputError(f"duplicate generator {g}")
            seen.add(g)
        if list(self.gens) != sorted(self.gens, key=grlex_key):
            raise InputError("generators not in graded lexicographic order")
        for g in self.gens:
            for h in self.gens:
                if g != h and all(a <= b for a, b in zip(g, h)):
                    raise InputError(f"generator {g} divides generator {h}")

    def __str__(self) -> str:
        return f"ideal({', '.join(monomial_text(g) for g in self.gens)})"


def minimalize(
    n: int, gens: Iterable[Sequence[int]], *, _validated: bool = False
) -> MonomialIdeal:
    """Build the ideal generated by ``gens``, reduced to minimal generators.

    Survivors are exactly the generators not strictly divisible by another
    listed generator.  Idempotent: minimalizing a minimal set returns an
    equal ideal.
    """
    if n < 1:
        raise InputError(f"ambient variable count must be >= 1, got {n}")
    if _validated:
        pool = set(gens)  # already tuples with n entries each
    else:
        pool = {_validate_monomial(g, n) for g in gens}
    ordered = sorted(pool, key=grlex_key)
    # A strict divisor has strictly smaller total degree, so sweeping in
    # degree order and testing only against smaller-degree survivors is
    # both correct and fast for equigenerated inputs.
    kept: list[Monomial] = []
    by_degree: list[tuple[int, list[Monomial]]] = []
    for cand in ordered:
        deg = sum(cand)
        dominated = False
        for d, bucket in by_degree:
            if d >= deg:
                break
            for g in bucket:
                if all(a <= b for a, b in zip(g, cand)):
                    dominated = True
                    break
            if dominated:
                break
        if dominated:
            continue
        kept.append(cand)
        if by_degree and by_degree[-1][0] == deg:
            by_degree[-1][1].append(cand)
        else:
            by_degree.append((deg, [cand]))
    return MonomialIdeal(n, tuple(kept))


def intersect(*ideals: MonomialIdeal) -> MonomialIdeal:
    """Intersection of one or more ideals in the same ambient ring.

    Folds pairwise, smallest generator count first, which bounds the
    intermediate blowup; each pairwise step takes lcms of generator pairs
    and minimalizes.
    """
    if not ideals:
        raise InputError("intersect needs at least one ideal")
    first = ideals[0]
    for other in ideals[1:]:
        first._check_ambient(other)
    ordered = sorted(ideals, key=lambda i: len(i.gens))
    result = ordered[0]
    for other in ordered[1:]:
        result = _intersect_pair(result, other)
    return result


def _intersect_pair(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    joins = {
        tuple(x if x >= y else y for x, y in zip(f, g))
        for f in a.gens
        for g in b.gens
    }
    return minimalize(a.ambient, joins, _validated=True)
