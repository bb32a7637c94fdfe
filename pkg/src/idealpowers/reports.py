"""Serialization of results to deterministic JSON and tabular CSV.

JSON is the source of truth; the CSV next to it is a lossy tabular view.
Report bytes are reproducible: identical invocations produce identical
files, and anything time-dependent goes into a ``*.meta.json`` sidecar
that is excluded from comparisons.
"""

from __future__ import annotations

import csv
import json
import time
from pathlib import Path

from .betti import BettiTable, RegularityValue
from .experiments import (
    BoundCheckReport,
    ContainmentReport,
    GreedyTrace,
    RegularitySequence,
)
from .ideals import MonomialIdeal, monomial_text

SCHEMA_PREFIX = "idealpowers"


def schema_id(kind: str) -> str:
    return f"{SCHEMA_PREFIX}/{kind}/v1"


def envelope(kind: str, engine_version: str, command: str, parameters: dict) -> dict:
    return {
        "schema": schema_id(kind),
        "engine_version": engine_version,
        "command": command,
        "parameters": parameters,
    }


def monomial_json(m) -> dict:
    return {"exponents": list(m), "text": monomial_text(m)}


def ideal_json(I: MonomialIdeal) -> dict:
    return {
        "ambient": I.ambient,
        "canonical_form": str(I),
        "generators": [monomial_json(g) for g in I.gens],
    }


def containment_json(rep: ContainmentReport) -> dict:
    return {
        "mode": rep.mode,
        "left": rep.left,
        "right": rep.right,
        "base": rep.base,
        "r": rep.r,
        "m": rep.m,
        "verdict": rep.verdict,
        "witness": monomial_json(rep.witness) if rep.witness is not None else None,
        "expected": rep.expected,
        "probe": rep.probe,
        "height_used": rep.height_used,
        "note": rep.note,
    }


def betti_json(table: BettiTable) -> dict:
    return {
        "ambient": table.ambient,
        "entries": [
            {"i": i, "multidegree": list(a), "total_degree": sum(a), "rank": r}
            for i, a, r in table.entries
        ],
    }


def regularity_json(value: RegularityValue) -> dict:
    return {
        "module_reg": value.module_reg,
        "sheaf_reg": value.sheaf_reg,
        "saturation_gap": value.saturation_gap,
    }


def sequence_json(seq: RegularitySequence) -> dict:
    return {
        "ideal": seq.ideal,
        "variant": seq.variant,
        "values": [
            {"p": p, "module_reg": mod, "sheaf_reg": sh} for p, mod, sh in seq.values
        ],
        "fit": None
        if seq.fit is None
        else {"slope": seq.fit.slope, "intercept": seq.fit.intercept, "onset": seq.fit.onset},
        "e_obs": seq.e_obs,
        "lower_bound_ok": seq.lower_bound_ok,
        "truncated_at": seq.truncated_at,
        "note": seq.note,
    }


def greedy_json(trace: GreedyTrace) -> dict:
    return {
        "n": trace.n,
        "e": trace.e,
        "t": trace.t,
        "d": trace.d,
        "start": monomial_json(trace.start),
        "steps": [monomial_json(u) for u in trace.steps],
        "intermediates": [list(b) for b in trace.intermediates],
    }


def bound_check_json(rep: BoundCheckReport) -> dict:
    return {
        "ideal": rep.ideal,
        "degrees": list(rep.degrees),
        "codim": rep.codim,
        "entries": [
            {
                "p": ent.p,
                "bound": ent.bound,
                "module_reg": ent.module_reg,
                "sheaf_reg": ent.sheaf_reg,
                "holds": ent.holds,
                "slack": ent.slack,
            }
            for ent in rep.entries
        ],
        "note": rep.note,
    }


def write_json(path: Path, obj: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def write_meta(path: Path, started: float) -> None:
    meta = {"written_at": time.time(), "elapsed_seconds": time.time() - started}
    path.write_text(json.dumps(meta, sort_keys=True, indent=2) + "\n")


def write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def containment_rows(reports: list[ContainmentReport]) -> list[list]:
    return [
        [
            rep.mode,
            rep.r if rep.r is not None else "",
            rep.m if rep.m is not None else "",
            rep.verdict,
            monomial_text(rep.witness) if rep.witness is not None else "",
            "" if rep.expected is None else rep.expected,
            rep.probe,
        ]
        for rep in reports
    ]


CONTAINMENT_HEADER = ["mode", "r", "m", "verdict", "witness", "expected", "probe"]
