"""Integral closure of monomial ideal powers via Newton-polyhedron feasibility.

x^a lies in the integral closure of I^p exactly when a dominates a point of
p times the Newton polyhedron of I, i.e. when there are rational lambda_g >= 0
over the generators g with sum(lambda_g) = p and sum(lambda_g * g) <= a
componentwise.  Feasibility is decided by exact rational simplex pivoting;
no floating point enters the decision.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import AmbientMismatchError, CapExceededError, InputError
from .ideals import Monomial, MonomialIdeal, minimalize

RationalVector = tuple[Fraction, ...]

DEFAULT_ENUM_CAP = 500_000


def newton_multipliers(I: MonomialIdeal, m: Monomial, p: int) -> RationalVector | None:
    """Exact multipliers certifying x^m in the closure of I^p, or None.

    Returns one vector (lambda_g) per generator with lambda_g >= 0,
    sum = p and sum(lambda_g * g) <= m, when such a vector exists.
    """
    if p < 1:
        raise InputError(f"closure exponent must be >= 1, got {p}")
    if len(m) != I.ambient:
        raise AmbientMismatchError(f"monomial {m} does not live in ambient {I.ambient}")
    if I.is_zero:
        return None
    k = len(I.gens)
    n = I.ambient
    # Tableau with one slack per coordinate bound and a single artificial
    # variable for the sum constraint; phase-1 minimizes the artificial.
    # Columns: k lambdas, n slacks, 1 artificial, rhs.
    width = k + n + 2
    rows: list[list[Fraction]] = []
    for i in range(n):
        row = [Fraction(g[i]) for g in I.gens]
        row += [Fraction(int(j == i)) for j in range(n)]
        row += [Fraction(0), Fraction(m[i])]
        rows.append(row)
    eq = [Fraction(1)] * k + [Fraction(0)] * n + [Fraction(1), Fraction(p)]
    rows.append(eq)
    basis = list(range(k, k + n)) + [k + n]
    # Objective row for "minimize artificial": start from the equality row
    # so the basic artificial has reduced cost zero.
    obj = [-c for c in eq[: width - 1]] + [-eq[-1]]

    art_col = k + n
    while True:
        enter = next((j for j in range(width - 1) if j != art_col and obj[j] < 0), None)
        if enter is None:
            break
        # Bland's rule on both choices prevents cycling.
        leave = None
        best: Fraction | None = None
        for r in range(n + 1):
            coef = rows[r][enter]
            if coef > 0:
                ratio = rows[r][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        if leave is None:
            # Cannot happen: lambdas are bounded by the sum constraint.
            raise AssertionError("unbounded phase-1 simplex")
        piv = rows[leave][enter]
        rows[leave] = [c / piv for c in rows[leave]]
        for r in range(n + 1):
            if r != leave and rows[r][enter] != 0:
                f = rows[r][enter]
                rows[r] = [c - f * d for c, d in zip(rows[r], rows[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [c - f * d for c, d in zip(obj, rows[leave])]
        basis[leave] = enter

    if -obj[-1] != 0:  # leftover artificial value
        return None
    lam = [Fraction(0)] * k
    for r, b in enumerate(basis):
        if b < k:
            lam[b] = rows[r][-1]
    cert = tuple(lam)
    _check_certificate(I, m, p, cert)
    return cert


def _check_certificate(I: MonomialIdeal, m: Monomial, p: int, lam: RationalVector) -> None:
    if any(x < 0 for x in lam) or sum(lam) != p:
        raise AssertionError("invalid feasibility certificate")
    for i in range(I.ambient):
        if sum(x * g[i] for x, g in zip(lam, I.gens)) > m[i]:
            raise AssertionError("certificate violates a coordinate bound")


def integral_closure_membership(m: Monomial, I: MonomialIdeal, p: int) -> bool:
    """True iff x^m lies in the integral closure of I^p."""
    return newton_multipliers(I, m, p) is not None


def integral_closure_power(
    I: MonomialIdeal, p: int, *, cap: int = DEFAULT_ENUM_CAP
) -> MonomialIdeal:
    """Minimal generators of the integral closure of I^p.

    Enumerates exponent vectors of total degree at most p * (largest
    generator degree) in graded order, keeping the feasible ones that are
    not multiples of an earlier survivor.  The result contains I^p.
    """
    if p < 1:
        raise InputError(f"closure exponent must be >= 1, got {p}")
    if I.is_zero:
        return I
    n = I.ambient
    dmax = p * I.max_degree
    dmin = p * I.min_degree
    count = comb(dmax + n, n)
    if count > cap:
        raise CapExceededError("integral closure enumeration", cap, count)
    found: list[Monomial] = []
    for deg in range(dmin, dmax + 1):
        for vec in _compositions(deg, n):
            if any(all(a <= b for a, b in zip(g, vec)) for g in found):
                continue
            if newton_multipliers(I, vec, p) is not None:
                found.append(vec)
    return minimalize(n, found, _validated=True)


def _compositions(total: int, parts: int):
    """All exponent vectors of the given length summing to total (lex order)."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail
