"""Command-line entry point.

Every subcommand evaluates its inputs exactly, writes a deterministic JSON
report (plus a CSV view for tabular results and a timing sidecar) into the
output directory, and prints a short human summary.  Exit codes: 0 success,
1 a scan found a violated expected property, 2 usage or input error, 3 a
resource cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import ENGINE_VERSION
from .betti import RegularityValue, betti_table, regularity
from .cache import ResultCache
from .config import Settings, resolve_settings
from .errors import CapExceededError, IdealPowersError, InputError, ParseError
from .experiments import (
    bel_bound_check,
    check_containment_report,
    ContainmentReport,
    els_scan,
    family_containments,
    greedy_decompose,
    harbourne_scan,
    ratio_scan,
    _reg_scan,
)
from .exprs import Graded, IdealLit, evaluate, infer_ambient, parse_ideal, pretty
from .ideals import MonomialIdeal, monomial_text
from .reports import (
    CONTAINMENT_HEADER,
    bound_check_json,
    betti_json,
    containment_json,
    containment_rows,
    envelope,
    greedy_json,
    ideal_json,
    regularity_json,
    sequence_json,
    write_csv,
    write_json,
    write_meta,
)

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out-dir", default="reports", help="directory for report files")
    common.add_argument("--ambient", type=int, default=None, help="declare the variable count")
    common.add_argument("--cache-dir", default=None, help="result cache directory")
    common.add_argument("--config", default=None, help="JSON config file")
    common.add_argument("--max-closure", type=int, default=None, help="lcm closure cap")
    common.add_argument("--max-enum", type=int, default=None, help="enumeration cap")
    common.add_argument("--workers", type=int, default=None, help="parallel scan workers")

    parser = argparse.ArgumentParser(
        prog="idealpowers",
        description="exact computations with powers of monomial ideals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("eval", "evaluate an ideal expression to minimal generators"),
        ("saturate", "irrelevant saturation of an ideal"),
        ("radical", "radical of an ideal"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("expression")

    p = sub.add_parser("reg", parents=[common], help="module and sheaf regularity")
    p.add_argument("expression")

    p = sub.add_parser("betti", parents=[common], help="multigraded Betti table")
    p.add_argument("expression")

    for name in ("power", "symbolic", "closure"):
        p = sub.add_parser(name, parents=[common], help=f"{name} of an ideal expression")
        p.add_argument("expression")
        p.add_argument("exponent", type=int)

    p = sub.add_parser("contains", parents=[common], help="decide a containment")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    for name in ("scan-asymptotic", "scan-symbolic", "scan-closure"):
        p = sub.add_parser(name, parents=[common], help=f"regularity scan ({name.split('-')[1]})")
        p.add_argument("expression")
        p.add_argument("--pmax", type=int, required=True)

    p = sub.add_parser("scan-els", parents=[common], help="uniform containment scan")
    p.add_argument("expression")
    p.add_argument("--pmax", type=int, required=True)

    p = sub.add_parser("scan-harbourne", parents=[common], help="threshold containment scan")
    p.add_argument("expression")
    p.add_argument("--mmax", type=int, required=True)

    p = sub.add_parser("scan-ratio", parents=[common], help="ratio criterion grid scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--mmax", type=int, required=True)

    p = sub.add_parser("family-check", parents=[common], help="arrangement family containments")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("greedy-cert", parents=[common], help="greedy membership certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--monomial", required=True, help="monomial text like x1^2*x2^2*x3^2")

    p = sub.add_parser("bel-check", parents=[common], help="linear degree bound check")
    p.add_argument("expression")
    p.add_argument("--degrees", required=True, help="comma-separated nonincreasing degrees")
    p.add_argument("--codim", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        settings = resolve_settings(
            cache_dir=args.cache_dir,
            max_closure=args.max_closure,
            max_enum=args.max_enum,
            workers=args.workers,
            config_path=args.config,
        )
        return _dispatch(args, settings)
    except ParseError as exc:
        _diagnostic("parse-error", exc, line=exc.line, column=exc.column, expected=list(exc.expected))
        return EXIT_USAGE
    except CapExceededError as exc:
        _diagnostic("cap-exceeded", exc, cap=exc.cap, what=exc.what)
        return EXIT_CAP
    except IdealPowersError as exc:
        _diagnostic(type(exc).__name__, exc)
        return EXIT_USAGE


def _diagnostic(kind: str, exc: Exception, **extra) -> None:
    payload = {"error": kind, "message": str(exc)}
    payload.update(extra)
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)


def _dispatch(args, settings: Settings) -> int:
    handlers = {
        "eval": _cmd_eval,
        "saturate": _cmd_eval,
        "radical": _cmd_eval,
        "power": _cmd_graded,
        "symbolic": _cmd_graded,
        "closure": _cmd_graded,
        "reg": _cmd_reg,
        "betti": _cmd_betti,
        "contains": _cmd_contains,
        "scan-asymptotic": _cmd_reg_scan,
        "scan-symbolic": _cmd_reg_scan,
        "scan-closure": _cmd_reg_scan,
        "scan-els": _cmd_els,
        "scan-harbourne": _cmd_harbourne,
        "scan-ratio": _cmd_ratio,
        "family-check": _cmd_family,
        "greedy-cert": _cmd_greedy,
        "bel-check": _cmd_bel,
    }
    return handlers[args.command](args, settings)


def _out(args) -> Path:
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _reg_fn(settings: Settings):
    def plain(J: MonomialIdeal) -> RegularityValue:
        return regularity(J, closure_cap=settings.max_closure, cross_check=settings.cross_check)

    if settings.cache_dir is None:
        return plain
    rc = ResultCache(settings.cache_dir, ENGINE_VERSION, audit_rate=settings.audit_rate)

    def cached(J: MonomialIdeal) -> RegularityValue:
        payload = rc.get_or_compute(
            ideal=str(J),
            operation="regularity",
            parameters={"closure_cap": settings.max_closure},
            compute=lambda: regularity_json(plain(J)),
        )
        return RegularityValue(payload["module_reg"], payload["sheaf_reg"])

    return cached


def _emit(args, name: str, payload: dict, started: float, header=None, rows=None) -> None:
    out = _out(args)
    write_json(out / f"{name}.json", payload)
    if header is not None:
        write_csv(out / f"{name}.csv", header, rows or [])
    write_meta(out / f"{name}.meta.json", started)


# ---------------------------------------------------------------------------
# handlers


def _cmd_eval(args, settings: Settings) -> int:
    started = time.time()
    expr = parse_ideal(args.expression)
    I = evaluate(expr, ambient=args.ambient, enum_cap=settings.max_enum)
    if args.command == "saturate":
        I = I.saturate()
    elif args.command == "radical":
        I = I.radical()
    payload = envelope("ideal", ENGINE_VERSION, args.command, {"expression": args.expression, "ambient": I.ambient})
    payload["result"] = ideal_json(I)
    rows = [[sum(g), monomial_text(g), ";".join(map(str, g))] for g in I.gens]
    _emit(args, args.command, payload, started, ["degree", "monomial", "exponents"], rows)
    print(f"{args.command}: {I}")
    return EXIT_OK


def _cmd_graded(args, settings: Settings) -> int:
    started = time.time()
    text = f"{args.command}({args.expression},{args.exponent})"
    expr = parse_ideal(text)
    I = evaluate(expr, ambient=args.ambient, enum_cap=settings.max_enum)
    payload = envelope(
        "ideal",
        ENGINE_VERSION,
        args.command,
        {"expression": args.expression, "exponent": args.exponent, "ambient": I.ambient},
    )
    payload["result"] = ideal_json(I)
    rows = [[sum(g), monomial_text(g), ";".join(map(str, g))] for g in I.gens]
    _emit(args, args.command, payload, started, ["degree", "monomial", "exponents"], rows)
    print(f"{args.command}^{args.exponent}: {len(I.gens)} minimal generators")
    return EXIT_OK


def _cmd_reg(args, settings: Settings) -> int:
    started = time.time()
    I = evaluate(parse_ideal(args.expression), ambient=args.ambient, enum_cap=settings.max_enum)
    value = _reg_fn(settings)(I)
    payload = envelope(
        "regularity",
        ENGINE_VERSION,
        "reg",
        {"expression": args.expression, "ambient": I.ambient, "max_closure": settings.max_closure},
    )
    payload["ideal"] = ideal_json(I)
    payload["regularity"] = regularity_json(value)
    _emit(
        args,
        "reg",
        payload,
        started,
        ["module_reg", "sheaf_reg", "saturation_gap"],
        [[value.module_reg, value.sheaf_reg, value.saturation_gap]],
    )
    print(f"reg: module {value.module_reg}, sheaf {value.sheaf_reg}")
    return EXIT_OK


def _cmd_betti(args, settings: Settings) -> int:
    started = time.time()
    I = evaluate(parse_ideal(args.expression), ambient=args.ambient, enum_cap=settings.max_enum)
    table = betti_table(I, closure_cap=settings.max_closure, cross_check=settings.cross_check)
    payload = envelope(
        "betti",
        ENGINE_VERSION,
        "betti",
        {"expression": args.expression, "ambient": I.ambient, "max_closure": settings.max_closure},
    )
    payload["ideal"] = ideal_json(I)
    payload["betti"] = betti_json(table)
    rows = [[i, sum(a), ";".join(map(str, a)), r] for i, a, r in table.entries]
    _emit(args, "betti", payload, started, ["i", "total_degree", "multidegree", "rank"], rows)
    print(f"betti: {len(table.entries)} nonzero entries, max shift {table.max_shift()}")
    return EXIT_OK


def _infer_mode(left_expr, right_expr) -> tuple[str, int | None, int | None]:
    if isinstance(right_expr, Graded) and right_expr.op == "power" and isinstance(left_expr, Graded):
        if left_expr.base == right_expr.base:
            mode = {
                "symbolic": "symbolic-in-power",
                "power": "power-in-power",
                "closure": "closure-in-power",
            }[left_expr.op]
            return mode, left_expr.exponent, right_expr.exponent
    return "expression", None, None


def _cmd_contains(args, settings: Settings) -> int:
    started = time.time()
    left_expr = parse_ideal(args.left)
    right_expr = parse_ideal(args.right)
    ambient = max(infer_ambient(left_expr), infer_ambient(right_expr), args.ambient or 1)
    left = evaluate(left_expr, ambient=ambient, enum_cap=settings.max_enum)
    right = evaluate(right_expr, ambient=ambient, enum_cap=settings.max_enum)
    verdict = left.issubset(right)
    witness = None
    if not verdict:
        witness = next(g for g in left.gens if not right.contains(g))
    mode, r, m = _infer_mode(left_expr, right_expr)
    rep = ContainmentReport(
        mode=mode, left=pretty(left_expr), right=pretty(right_expr),
        verdict=verdict, witness=witness, r=r, m=m,
    )
    check_containment_report(rep, left, right)
    payload = envelope(
        "containment",
        ENGINE_VERSION,
        "contains",
        {"left": args.left, "right": args.right, "ambient": ambient},
    )
    payload["report"] = containment_json(rep)
    _emit(args, "contains", payload, started, CONTAINMENT_HEADER, containment_rows([rep]))
    suffix = "" if verdict else f" (witness {monomial_text(witness)})"
    print(f"contains: {verdict}{suffix}")
    return EXIT_OK


def _scan_exit(reports: list[ContainmentReport]) -> int:
    return EXIT_VERDICT if any(rep.violates_expectation for rep in reports) else EXIT_OK


def _emit_containment_scan(args, settings, name, reports, parameters, started) -> int:
    payload = envelope("containment-scan", ENGINE_VERSION, name, parameters)
    payload["reports"] = [containment_json(rep) for rep in reports]
    payload["violations"] = sum(rep.violates_expectation for rep in reports)
    _emit(args, name, payload, started, CONTAINMENT_HEADER, containment_rows(reports))
    code = _scan_exit(reports)
    status = "ok" if code == EXIT_OK else "VIOLATED EXPECTATION"
    print(f"{name}: {len(reports)} checks, {status}")
    return code


def _cmd_els(args, settings: Settings) -> int:
    started = time.time()
    I = evaluate(parse_ideal(args.expression), ambient=args.ambient, enum_cap=settings.max_enum)
    reports = els_scan(I, args.pmax)
    params = {"expression": args.expression, "pmax": args.pmax, "height_used": reports[0].height_used}
    return _emit_containment_scan(args, settings, "scan-els", reports, params, started)


def _cmd_harbourne(args, settings: Settings) -> int:
    started = time.time()
    I = evaluate(parse_ideal(args.expression), ambient=args.ambient, enum_cap=settings.max_enum)
    reports = harbourne_scan(I, args.mmax)
    params = {"expression": args.expression, "mmax": args.mmax, "height_used": reports[0].height_used}
    return _emit_containment_scan(args, settings, "scan-harbourne", reports, params, started)


def _cmd_ratio(args, settings: Settings) -> int:
    started = time.time()
    reports = ratio_scan(args.n, args.e, args.rmax, args.mmax)
    params = {"n": args.n, "e": args.e, "rmax": args.rmax, "mmax": args.mmax}
    return _emit_containment_scan(args, settings, "scan-ratio", reports, params, started)


def _cmd_family(args, settings: Settings) -> int:
    started = time.time()
    reports = family_containments(args.n, args.e, args.t)
    params = {"n": args.n, "e": args.e, "t": args.t}
    code = _emit_containment_scan(args, settings, "family-check", reports, params, started)
    for rep in reports:
        wit = f" witness {monomial_text(rep.witness)}" if rep.witness is not None else ""
        print(f"  {rep.left} in {rep.right}: {rep.verdict}{wit}")
    return code


def _cmd_reg_scan(args, settings: Settings) -> int:
    started = time.time()
    variant = {"scan-asymptotic": "power", "scan-symbolic": "symbolic", "scan-closure": "closure"}[
        args.command
    ]
    I = evaluate(parse_ideal(args.expression), ambient=args.ambient, enum_cap=settings.max_enum)
    seq = _reg_scan(
        I,
        args.pmax,
        variant,
        closure_cap=settings.max_closure,
        enum_cap=settings.max_enum,
        cross_check=settings.cross_check,
        cache_dir=settings.cache_dir,
        engine_version=ENGINE_VERSION,
        workers=settings.workers,
    )
    payload = envelope(
        "regularity-scan",
        ENGINE_VERSION,
        args.command,
        {
            "expression": args.expression,
            "pmax": args.pmax,
            "variant": variant,
            "ambient": I.ambient,
            "max_closure": settings.max_closure,
            "max_enum": settings.max_enum,
        },
    )
    payload["sequence"] = sequence_json(seq)
    rows = [[p, mod, sh] for p, mod, sh in seq.values]
    _emit(args, args.command, payload, started, ["p", "module_reg", "sheaf_reg"], rows)
    if seq.fit is not None:
        print(
            f"{args.command}: fit slope {seq.fit.slope}, intercept {seq.fit.intercept}, "
            f"onset {seq.fit.onset}, e_obs {seq.e_obs}, lower bound ok {seq.lower_bound_ok}"
        )
    else:
        print(f"{args.command}: no linear tail detected over {len(seq.values)} points")
    if seq.truncated_at is not None:
        print(f"{args.command}: truncated at p={seq.truncated_at} by a resource cap")
        return EXIT_CAP
    if seq.fit is not None and not seq.lower_bound_ok:
        return EXIT_VERDICT
    return EXIT_OK


def _cmd_greedy(args, settings: Settings) -> int:
    started = time.time()
    expr = parse_ideal(f"ideal({args.monomial})")
    assert isinstance(expr, IdealLit) and len(expr.monomials) == 1
    vec = [0] * args.n
    for idx, e in expr.monomials[0]:
        if idx >= args.n:
            raise ParseError(f"monomial uses x{idx + 1} beyond n={args.n}", 1, 1)
        vec[idx] = e
    trace = greedy_decompose(tuple(vec), args.n, args.e, args.t)
    payload = envelope(
        "greedy", ENGINE_VERSION, "greedy-cert", {"n": args.n, "e": args.e, "t": args.t, "monomial": args.monomial}
    )
    payload["trace"] = greedy_json(trace)
    rows = [
        [i, monomial_text(u), ";".join(map(str, trace.intermediates[i + 1]))]
        for i, u in enumerate(trace.steps)
    ]
    _emit(args, "greedy-cert", payload, started, ["step", "generator", "remaining"], rows)
    print(f"greedy-cert: {len(trace.steps)} steps, certificate valid")
    return EXIT_OK


def _cmd_bel(args, settings: Settings) -> int:
    started = time.time()
    I = evaluate(parse_ideal(args.expression), ambient=args.ambient, enum_cap=settings.max_enum)
    try:
        degrees = tuple(int(x) for x in args.degrees.split(","))
    except ValueError as exc:
        raise InputError(f"--degrees must be comma-separated integers: {exc}") from exc
    report = bel_bound_check(I, degrees, args.codim, args.pmax, reg_fn=_reg_fn(settings))
    payload = envelope(
        "bound-check",
        ENGINE_VERSION,
        "bel-check",
        {
            "expression": args.expression,
            "degrees": list(degrees),
            "codim": args.codim,
            "pmax": args.pmax,
        },
    )
    payload["report"] = bound_check_json(report)
    rows = [
        [e.p, e.bound, e.module_reg, e.sheaf_reg, e.holds, e.slack] for e in report.entries
    ]
    _emit(args, "bel-check", payload, started, ["p", "bound", "module_reg", "sheaf_reg", "holds", "slack"], rows)
    worst = min(e.slack for e in report.entries)
    print(f"bel-check: bound {'holds' if all(e.holds for e in report.entries) else 'FAILS'}, min slack {worst}")
    return EXIT_VERDICT if not all(e.holds for e in report.entries) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
