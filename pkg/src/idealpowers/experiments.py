"""Reproducible experiments on powers, symbolic powers and regularity.

Every driver in this module turns a containment or regularity statement
into a machine-checkable report: containment verdicts carry an explicit
witness monomial whenever they are negative, regularity scans carry the
per-exponent values plus a detected linear tail, and the greedy
decomposition certifies power membership as an explicit product of
generators.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from .betti import DEFAULT_CLOSURE_CAP, RegularityValue, regularity
from .closure import DEFAULT_ENUM_CAP, integral_closure_power
from .errors import CapExceededError, InputError
from .ideals import Monomial, MonomialIdeal, minimalize
from .squarefree import (
    big_height,
    coordinate_arrangement_ideal,
    minimal_primes,
    symbolic_membership,
    symbolic_power,
)

RegFn = Callable[[MonomialIdeal], RegularityValue]


# ---------------------------------------------------------------------------
# report types


@dataclass(frozen=True)
class ContainmentReport:
    """Outcome of one containment query.

    ``witness`` is mandatory when the verdict is negative: a monomial in
    the left side that is missing from the right side.  ``expected`` is
    the theoretically predicted verdict when one exists; probes are
    reported without judgment (expected None).
    """

    mode: str
    left: str
    right: str
    verdict: bool
    witness: Monomial | None = None
    base: str | None = None
    r: int | None = None
    m: int | None = None
    expected: bool | None = None
    probe: bool = False
    height_used: int | None = None
    note: str = ""

    @property
    def violates_expectation(self) -> bool:
        return self.expected is not None and self.verdict != self.expected


@dataclass(frozen=True)
class LinearFit:
    slope: int
    intercept: int
    onset: int

    def value(self, p: int) -> int:
        return self.slope * p + self.intercept


@dataclass(frozen=True)
class RegularitySequence:
    """Per-exponent regularity values with an optional linear tail.

    The fitted slope is only a surrogate for the asymptotic slope of the
    true regularity function; the blowup s-invariant itself is never
    computed here.  ``e_obs`` is the largest observed sheaf_reg - slope*p
    over the computed range, so slope*p <= sheaf_reg <= slope*p + e_obs
    holds by construction whenever ``lower_bound_ok`` is true.
    """

    ideal: str
    variant: str  # "power" | "symbolic" | "closure"
    values: tuple[tuple[int, int, int], ...]  # (p, module_reg, sheaf_reg)
    fit: LinearFit | None
    e_obs: int | None
    lower_bound_ok: bool | None
    truncated_at: int | None = None
    note: str = "slope is the fitted tail slope; the s-invariant is not computed"


@dataclass(frozen=True)
class GreedyTrace:
    """Stepwise removal of generators certifying power membership."""

    n: int
    e: int
    t: int
    start: Monomial
    steps: tuple[Monomial, ...]
    intermediates: tuple[Monomial, ...]  # beta_0 .. beta_nt

    @property
    def d(self) -> int:
        return self.n - self.e + 1

    def validate(self) -> None:
        n, d, t = self.n, self.d, self.t
        nt, ndt = n * t, n * d * t
        if len(self.steps) != nt:
            raise InputError(f"trace has {len(self.steps)} steps, expected {nt}")
        if self.intermediates[0] != self.start or len(self.intermediates) != nt + 1:
            raise InputError("trace intermediates do not start at the input vector")
        for i, u in enumerate(self.steps):
            if any(x not in (0, 1) for x in u) or sum(u) != d:
                raise InputError(f"step {i} is not a squarefree degree-{d} vector")
            cur, nxt = self.intermediates[i], self.intermediates[i + 1]
            if tuple(a - b for a, b in zip(cur, u)) != nxt or any(x < 0 for x in nxt):
                raise InputError(f"step {i} does not subtract cleanly")
        for i, beta in enumerate(self.intermediates):
            if sum(beta) != ndt - d * i:
                raise InputError(f"degree invariant fails at step {i}")
            if any(x > nt - i for x in beta):
                raise InputError(f"coordinate bound fails at step {i}")
        if any(self.intermediates[-1]):
            raise InputError("trace does not terminate at zero")


@dataclass(frozen=True)
class BoundCheckEntry:
    p: int
    bound: int
    module_reg: int
    sheaf_reg: int
    holds: bool
    slack: int


@dataclass(frozen=True)
class BoundCheckReport:
    ideal: str
    degrees: tuple[int, ...]
    codim: int
    entries: tuple[BoundCheckEntry, ...]
    note: str = (
        "cutting degrees and codimension are caller assertions; the local "
        "complete intersection and log canonical hypotheses are not checked"
    )


# ---------------------------------------------------------------------------
# closed-form powers and the greedy certificate


def power_closed_form(n: int, e: int, t: int, *, cap: int = DEFAULT_ENUM_CAP) -> MonomialIdeal:
    """Generators of the nt-th power of the codim-e arrangement ideal.

    These are exactly the exponent vectors with every entry between 0 and
    nt summing to ndt, where d = n - e + 1; must coincide with the power
    computed by iterated multiplication.
    """
    if n < 2 or not 1 <= e <= n - 1:
        raise InputError(f"need n >= 2 and 1 <= e <= n-1, got n={n}, e={e}")
    if t < 1:
        raise InputError(f"need t >= 1, got t={t}")
    d = n - e + 1
    nt, ndt = n * t, n * d * t
    gens = []
    for vec in _bounded_compositions(ndt, n, nt):
        gens.append(vec)
        if len(gens) > cap:
            raise CapExceededError("closed-form power enumeration", cap)
    return minimalize(n, gens, _validated=True)


def _bounded_compositions(total: int, parts: int, bound: int):
    if parts == 1:
        if 0 <= total <= bound:
            yield (total,)
        return
    lo = max(0, total - (parts - 1) * bound)
    hi = min(bound, total)
    for head in range(hi, lo - 1, -1):
        for tail in _bounded_compositions(total - head, parts - 1, bound):
            yield (head,) + tail


def greedy_decompose(b: Sequence[int], n: int, e: int, t: int) -> GreedyTrace:
    """Strip generators of the arrangement ideal off b until zero.

    At each step subtract the indicator vector of the d largest
    coordinates.  Requires the two generator conditions; the diagnostic
    names the violated one.
    """
    if n < 2 or not 1 <= e <= n - 1 or t < 1:
        raise InputError(f"bad family parameters n={n}, e={e}, t={t}")
    vec = tuple(b)
    if len(vec) != n:
        raise InputError(f"vector has length {len(vec)}, expected {n}")
    d = n - e + 1
    nt, ndt = n * t, n * d * t
    for i, x in enumerate(vec):
        if not 0 <= x <= nt:
            raise InputError(
                f"condition (1) violated: entry {i + 1} is {x}, outside [0, nt={nt}]"
            )
    if sum(vec) != ndt:
        raise InputError(
            f"condition (2) violated: total degree {sum(vec)} differs from ndt={ndt}"
        )
    steps = []
    intermediates = [vec]
    cur = list(vec)
    for i in range(nt):
        largest = sorted(range(n), key=lambda j: (-cur[j], j))[:d]
        # The degree and bound invariants force the d largest coordinates
        # to stay positive until the vector is exhausted.
        assert all(cur[j] >= 1 for j in largest), "greedy step hit a zero coordinate"
        u = tuple(1 if j in largest else 0 for j in range(n))
        for j in largest:
            cur[j] -= 1
        steps.append(u)
        intermediates.append(tuple(cur))
    assert not any(cur), "greedy did not reach zero in nt steps"
    trace = GreedyTrace(n, e, t, vec, tuple(steps), tuple(intermediates))
    trace.validate()
    return trace


# ---------------------------------------------------------------------------
# containment scans


def _containment(
    left: MonomialIdeal, right: MonomialIdeal, preferred_witness: Monomial | None = None
) -> tuple[bool, Monomial | None]:
    failing = next((g for g in left.gens if not right.contains(g)), None)
    if failing is None:
        return True, None
    if (
        preferred_witness is not None
        and left.contains(preferred_witness)
        and not right.contains(preferred_witness)
    ):
        return False, preferred_witness
    return False, failing


def check_containment_report(
    rep: ContainmentReport, left: MonomialIdeal, right: MonomialIdeal
) -> None:
    """Independent witness re-check used by the test suite and the CLI."""
    if rep.verdict:
        if not left.issubset(right):
            raise InputError("report says contained but a generator escapes")
        return
    if rep.witness is None:
        raise InputError("negative verdict without witness")
    if not left.contains(rep.witness):
        raise InputError("witness fails left membership")
    if right.contains(rep.witness):
        raise InputError("witness does not escape the right side")


def family_containments(n: int, e: int, t: int) -> list[ContainmentReport]:
    """The two containment verdicts of the arrangement family.

    For d = n - e + 1: the edt-th symbolic power escapes the (nt+1)-th
    ordinary power, witnessed by (x1...xn)^(dt), but lies inside the
    nt-th ordinary power.
    """
    I = coordinate_arrangement_ideal(n, e)
    d = n - e + 1
    edt, nt = e * d * t, n * t
    S = symbolic_power(I, edt)
    # Cross-validate the computed symbolic power against the per-prime
    # exponent-sum test before using it.
    assert all(symbolic_membership(g, I, edt) for g in S.gens)
    base = str(I)
    y = (d * t,) * n
    assert symbolic_membership(y, I, edt)
    upper = I.power(nt)
    upper_plus = upper.multiply(I)

    verdict_i, witness_i = _containment(S, upper_plus, preferred_witness=y)
    rep_i = ContainmentReport(
        mode="symbolic-in-power",
        left=f"symbolic({base},{edt})",
        right=f"power({base},{nt + 1})",
        verdict=verdict_i,
        witness=witness_i,
        base=base,
        r=edt,
        m=nt + 1,
        expected=False,
        note=f"family n={n} e={e} t={t}, d={d}",
    )
    verdict_ii, witness_ii = _containment(S, upper)
    rep_ii = ContainmentReport(
        mode="symbolic-in-power",
        left=f"symbolic({base},{edt})",
        right=f"power({base},{nt})",
        verdict=verdict_ii,
        witness=witness_ii,
        base=base,
        r=edt,
        m=nt,
        expected=True,
        note=f"family n={n} e={e} t={t}, d={d}",
    )
    return [rep_i, rep_ii]


def els_scan(I: MonomialIdeal, pmax: int) -> list[ContainmentReport]:
    """Check the uniform containments I^(hp) in I^p for h the big height.

    A negative verdict would contradict a theorem, so it signals a bug
    and downstream consumers treat it as fatal.
    """
    if pmax < 1:
        raise InputError(f"pmax must be >= 1, got {pmax}")
    h = big_height(I)
    base = str(I)
    reports = []
    power = MonomialIdeal.unit(I.ambient)
    for p in range(1, pmax + 1):
        power = power.multiply(I)
        S = symbolic_power(I, h * p)
        verdict, witness = _containment(S, power)
        reports.append(
            ContainmentReport(
                mode="symbolic-in-power",
                left=f"symbolic({base},{h * p})",
                right=f"power({base},{p})",
                verdict=verdict,
                witness=witness,
                base=base,
                r=h * p,
                m=p,
                expected=True,
                height_used=h,
            )
        )
    return reports


def harbourne_scan(I: MonomialIdeal, mmax: int) -> list[ContainmentReport]:
    """Threshold containments I^(em-e+1) in I^m, with sharpness probes.

    e is the big height.  The probe at exponent em-e is reported without
    judgment; the containment at the threshold itself is expected to hold
    for every monomial ideal.
    """
    if mmax < 1:
        raise InputError(f"mmax must be >= 1, got {mmax}")
    e = big_height(I)
    base = str(I)
    reports = []
    power = MonomialIdeal.unit(I.ambient)
    for m in range(1, mmax + 1):
        power = power.multiply(I)
        r = e * m - (e - 1)
        S = symbolic_power(I, r)
        verdict, witness = _containment(S, power)
        reports.append(
            ContainmentReport(
                mode="symbolic-in-power",
                left=f"symbolic({base},{r})",
                right=f"power({base},{m})",
                verdict=verdict,
                witness=witness,
                base=base,
                r=r,
                m=m,
                expected=True,
                height_used=e,
            )
        )
        if r - 1 >= 1:
            Sp = symbolic_power(I, r - 1)
            verdict_p, witness_p = _containment(Sp, power)
            reports.append(
                ContainmentReport(
                    mode="symbolic-in-power",
                    left=f"symbolic({base},{r - 1})",
                    right=f"power({base},{m})",
                    verdict=verdict_p,
                    witness=witness_p,
                    base=base,
                    r=r - 1,
                    m=m,
                    expected=None,
                    probe=True,
                    height_used=e,
                    note="sharpness probe below the threshold",
                )
            )
    return reports


def ratio_scan(n: int, e: int, rmax: int, mmax: int) -> list[ContainmentReport]:
    """Grid of containments I^(r) in I^m for the arrangement family.

    Whenever r*n/e >= d*m the containment is predicted to hold; cells
    below the ratio threshold are reported as observations.
    """
    if rmax < 1 or mmax < 1:
        raise InputError("rmax and mmax must be >= 1")
    I = coordinate_arrangement_ideal(n, e)
    d = n - e + 1
    base = str(I)
    symbolics = {r: symbolic_power(I, r) for r in range(1, rmax + 1)}
    reports = []
    power = MonomialIdeal.unit(I.ambient)
    for m in range(1, mmax + 1):
        power = power.multiply(I)
        for r in range(1, rmax + 1):
            ratio_ok = r * n >= d * m * e
            verdict, witness = _containment(symbolics[r], power)
            reports.append(
                ContainmentReport(
                    mode="symbolic-in-power",
                    left=f"symbolic({base},{r})",
                    right=f"power({base},{m})",
                    verdict=verdict,
                    witness=witness,
                    base=base,
                    r=r,
                    m=m,
                    expected=True if ratio_ok else None,
                    probe=not ratio_ok,
                    note=f"ratio test r*n/e >= d*m is {'met' if ratio_ok else 'not met'}",
                )
            )
    return reports


# ---------------------------------------------------------------------------
# regularity scans


def _variant_power(I: MonomialIdeal, p: int, variant: str, enum_cap: int) -> MonomialIdeal:
    if variant == "power":
        return I.power(p)
    if variant == "symbolic":
        return symbolic_power(I, p)
    if variant == "closure":
        return integral_closure_power(I, p, cap=enum_cap)
    raise InputError(f"unknown scan variant {variant!r}")


def _reg_cell(args: tuple) -> tuple[int, int | None, int | None]:
    I, p, variant, closure_cap, enum_cap, cross_check, cache_dir, engine_version = args
    try:
        J = _variant_power(I, p, variant, enum_cap)
        if cache_dir is not None:
            from .cache import ResultCache

            rc = ResultCache(cache_dir, engine_version)
            payload = rc.get_or_compute(
                ideal=str(J),
                operation="regularity",
                parameters={"closure_cap": closure_cap},
                compute=lambda: _reg_payload(J, closure_cap, cross_check),
            )
            return p, payload["module_reg"], payload["sheaf_reg"]
        value = regularity(J, closure_cap=closure_cap, cross_check=cross_check)
        return p, value.module_reg, value.sheaf_reg
    except CapExceededError:
        return p, None, None


def _reg_payload(J: MonomialIdeal, closure_cap: int, cross_check: bool) -> dict:
    value = regularity(J, closure_cap=closure_cap, cross_check=cross_check)
    return {"module_reg": value.module_reg, "sheaf_reg": value.sheaf_reg}


def _reg_scan(
    I: MonomialIdeal,
    pmax: int,
    variant: str,
    *,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
    enum_cap: int = DEFAULT_ENUM_CAP,
    cross_check: bool = False,
    cache_dir=None,
    engine_version: str = "",
    workers: int = 1,
) -> RegularitySequence:
    if not I.is_proper:
        raise InputError("regularity scans need a proper nonzero ideal")
    if pmax < 1:
        raise InputError(f"pmax must be >= 1, got {pmax}")
    cells = [
        (I, p, variant, closure_cap, enum_cap, cross_check, cache_dir, engine_version)
        for p in range(1, pmax + 1)
    ]
    if workers > 1:
        try:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                raw = list(pool.map(_reg_cell, cells))
        except OSError:
            raw = _serial_cells(cells)
    else:
        raw = _serial_cells(cells)
    values: list[tuple[int, int, int]] = []
    truncated_at = None
    for p, module, sheaf in raw:
        if module is None:
            truncated_at = p
            break
        values.append((p, module, sheaf))
    fit = _detect_linear_tail(values)
    e_obs = None
    lower_ok = None
    if fit is not None:
        e_obs = max(sheaf - fit.slope * p for p, _, sheaf in values)
        lower_ok = all(fit.slope * p <= sheaf for p, _, sheaf in values)
    return RegularitySequence(
        ideal=str(I),
        variant=variant,
        values=tuple(values),
        fit=fit,
        e_obs=e_obs,
        lower_bound_ok=lower_ok,
        truncated_at=truncated_at,
    )


def _serial_cells(cells: list[tuple]) -> list[tuple[int, int | None, int | None]]:
    out = []
    for cell in cells:
        res = _reg_cell(cell)
        out.append(res)
        if res[1] is None:  # cap hit, later exponents only get bigger
            break
    return out


def _detect_linear_tail(values: list[tuple[int, int, int]]) -> LinearFit | None:
    """Longest suffix of the sheaf values with one first difference.

    Demands at least three points (two points always fit a line) and a
    positive integer slope.
    """
    if len(values) < 3:
        return None
    ps = [p for p, _, _ in values]
    vs = [sheaf for _, _, sheaf in values]
    slope = vs[-1] - vs[-2]
    i = len(vs) - 2
    while i > 0 and vs[i] - vs[i - 1] == slope:
        i -= 1
    if len(vs) - i < 3 or slope < 1:
        return None
    return LinearFit(slope=slope, intercept=vs[-1] - slope * ps[-1], onset=ps[i])


def asymptotic_reg_scan(I: MonomialIdeal, pmax: int, **kw) -> RegularitySequence:
    """Regularity of ordinary powers I^p for p = 1..pmax."""
    return _reg_scan(I, pmax, "power", **kw)


def symbolic_reg_scan(I: MonomialIdeal, pmax: int, **kw) -> RegularitySequence:
    """Regularity of symbolic powers; the ideal must be squarefree."""
    minimal_primes(I)  # validates squarefree proper nonzero
    return _reg_scan(I, pmax, "symbolic", **kw)


def closure_reg_scan(I: MonomialIdeal, pmax: int, **kw) -> RegularitySequence:
    """Regularity of integral closures of powers."""
    return _reg_scan(I, pmax, "closure", **kw)


def bel_bound_check(
    I: MonomialIdeal,
    degrees: Sequence[int],
    codim: int,
    pmax: int,
    *,
    reg_fn: RegFn | None = None,
) -> BoundCheckReport:
    """Compare sheaf regularity of powers against the linear degree bound.

    The bound is p*d1 + d2 + ... + d_codim - codim + 1 for cutting degrees
    d1 >= d2 >= ...; whether the geometric hypotheses behind the bound
    hold for this ideal is the caller's assertion and is recorded as such.
    """
    degs = tuple(int(x) for x in degrees)
    if not degs or any(a < b for a, b in zip(degs, degs[1:])):
        raise InputError("degrees must be a nonincreasing nonempty sequence")
    if not 1 <= codim <= len(degs):
        raise InputError(f"codim must be between 1 and {len(degs)}, got {codim}")
    if pmax < 1:
        raise InputError(f"pmax must be >= 1, got {pmax}")
    reg_fn = reg_fn or regularity
    head = sum(degs[1:codim]) - codim + 1
    entries = []
    power = MonomialIdeal.unit(I.ambient)
    for p in range(1, pmax + 1):
        power = power.multiply(I)
        value = reg_fn(power)
        bound = p * degs[0] + head
        entries.append(
            BoundCheckEntry(
                p=p,
                bound=bound,
                module_reg=value.module_reg,
                sheaf_reg=value.sheaf_reg,
                holds=value.sheaf_reg <= bound,
                slack=bound - value.sheaf_reg,
            )
        )
    return BoundCheckReport(ideal=str(I), degrees=degs, codim=codim, entries=tuple(entries))
