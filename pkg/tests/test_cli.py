import json
from pathlib import Path

import jsonschema

from idealpowers.cli import main

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "schemas"


def load_schema(kind):
    return json.loads((SCHEMA_DIR / f"{kind}.v1.json").read_text())


def read_report(out_dir, name):
    return json.loads((Path(out_dir) / f"{name}.json").read_text())


def validate(out_dir, name, kind):
    report = read_report(out_dir, name)
    jsonschema.validate(report, load_schema(kind))
    assert report["schema"] == f"idealpowers/{kind}/v1"
    assert report["engine_version"]
    return report


def test_eval_writes_all_three_files(tmp_path):
    assert main(["eval", "ideal(x1*x2, x2*x1)", "--out-dir", str(tmp_path)]) == 0
    report = validate(tmp_path, "eval", "ideal")
    assert report["result"]["canonical_form"] == "ideal(x1*x2)"
    assert (tmp_path / "eval.csv").read_text().splitlines()[0] == "degree,monomial,exponents"
    assert (tmp_path / "eval.meta.json").exists()


def test_reg_command(tmp_path):
    assert main(["reg", "arrangement(3,2)", "--out-dir", str(tmp_path)]) == 0
    report = validate(tmp_path, "reg", "regularity")
    assert report["regularity"] == {"module_reg": 2, "sheaf_reg": 2, "saturation_gap": False}


def test_betti_command(tmp_path):
    assert main(["betti", "ideal(x1^2, x2^3)", "--out-dir", str(tmp_path)]) == 0
    report = validate(tmp_path, "betti", "betti")
    entries = report["betti"]["entries"]
    assert {"i": 1, "multidegree": [2, 3], "total_degree": 5, "rank": 1} in entries


def test_power_symbolic_closure_saturate_radical(tmp_path):
    assert main(["power", "arrangement(3,2)", "2", "--out-dir", str(tmp_path)]) == 0
    validate(tmp_path, "power", "ideal")
    assert main(["symbolic", "arrangement(3,2)", "2", "--out-dir", str(tmp_path)]) == 0
    rep = validate(tmp_path, "symbolic", "ideal")
    assert rep["result"]["generators"][0]["text"] == "x1*x2*x3"
    assert main(["closure", "ideal(x1^2, x2^2)", "1", "--out-dir", str(tmp_path)]) == 0
    rep = validate(tmp_path, "closure", "ideal")
    assert [g["text"] for g in rep["result"]["generators"]] == ["x2^2", "x1*x2", "x1^2"]
    assert main(["saturate", "ideal(x1^2, x1*x2)", "--out-dir", str(tmp_path)]) == 0
    rep = validate(tmp_path, "saturate", "ideal")
    assert rep["result"]["canonical_form"] == "ideal(x1)"
    assert main(["radical", "ideal(x1^2*x2)", "--out-dir", str(tmp_path)]) == 0
    rep = validate(tmp_path, "radical", "ideal")
    assert rep["result"]["canonical_form"] == "ideal(x1*x2)"


def test_contains_infers_mode_and_witness(tmp_path):
    code = main([
        "contains",
        "--left", "symbolic(arrangement(3,2),4)",
        "--right", "power(arrangement(3,2),3)",
        "--out-dir", str(tmp_path),
    ])
    assert code == 0
    report = validate(tmp_path, "contains", "containment")
    assert report["report"]["mode"] == "symbolic-in-power"
    assert report["report"]["verdict"] is True
    code = main([
        "contains",
        "--left", "symbolic(arrangement(3,2),4)",
        "--right", "power(arrangement(3,2),4)",
        "--out-dir", str(tmp_path),
    ])
    assert code == 0  # a plain query has no expectation to violate
    report = validate(tmp_path, "contains", "containment")
    assert report["report"]["verdict"] is False
    assert report["report"]["witness"]["text"] == "x1^2*x2^2*x3^2"


def test_family_check(tmp_path):
    assert main(["family-check", "--n", "3", "--e", "2", "--t", "1", "--out-dir", str(tmp_path)]) == 0
    report = validate(tmp_path, "family-check", "containment-scan")
    assert report["violations"] == 0
    verdicts = [r["verdict"] for r in report["reports"]]
    assert verdicts == [False, True]
    assert report["reports"][0]["witness"]["text"] == "x1^2*x2^2*x3^2"


def test_scan_els_and_harbourne_and_ratio(tmp_path):
    assert main(["scan-els", "arrangement(3,2)", "--pmax", "3", "--out-dir", str(tmp_path)]) == 0
    report = validate(tmp_path, "scan-els", "containment-scan")
    assert report["parameters"]["height_used"] == 2
    assert main(["scan-harbourne", "arrangement(3,2)", "--mmax", "2", "--out-dir", str(tmp_path)]) == 0
    validate(tmp_path, "scan-harbourne", "containment-scan")
    assert main(["scan-ratio", "--n", "3", "--e", "2", "--rmax", "4", "--mmax", "3", "--out-dir", str(tmp_path)]) == 0
    validate(tmp_path, "scan-ratio", "containment-scan")


def test_scan_asymptotic(tmp_path):
    assert main(["scan-asymptotic", "arrangement(3,2)", "--pmax", "4", "--out-dir", str(tmp_path)]) == 0
    report = validate(tmp_path, "scan-asymptotic", "regularity-scan")
    seq = report["sequence"]
    assert seq["fit"] == {"slope": 2, "intercept": 0, "onset": 1}
    assert seq["lower_bound_ok"] is True
    csv_head = (tmp_path / "scan-asymptotic.csv").read_text().splitlines()[0]
    assert csv_head == "p,module_reg,sheaf_reg"


def test_scan_symbolic_and_closure(tmp_path):
    assert main(["scan-symbolic", "arrangement(3,2)", "--pmax", "3", "--out-dir", str(tmp_path)]) == 0
    validate(tmp_path, "scan-symbolic", "regularity-scan")
    assert main(["scan-closure", "ideal(x1^2, x2^2)", "--pmax", "2", "--out-dir", str(tmp_path)]) == 0
    validate(tmp_path, "scan-closure", "regularity-scan")


def test_greedy_cert(tmp_path):
    code = main([
        "greedy-cert", "--n", "3", "--e", "2", "--t", "1",
        "--monomial", "x1^2*x2^2*x3^2", "--out-dir", str(tmp_path),
    ])
    assert code == 0
    report = validate(tmp_path, "greedy-cert", "greedy")
    assert len(report["trace"]["steps"]) == 3
    assert report["trace"]["intermediates"][-1] == [0, 0, 0]


def test_greedy_cert_rejects_bad_vector(tmp_path, capsys):
    code = main([
        "greedy-cert", "--n", "3", "--e", "2", "--t", "1",
        "--monomial", "x1^4*x2^2", "--out-dir", str(tmp_path),
    ])
    assert code == 2
    err = capsys.readouterr().err
    assert "condition (1)" in err


def test_bel_check_equality_case(tmp_path):
    code = main([
        "bel-check", "ideal(x1^3, x2^2)", "--degrees", "3,2", "--codim", "2",
        "--pmax", "2", "--ambient", "3", "--out-dir", str(tmp_path),
    ])
    assert code == 0
    report = validate(tmp_path, "bel-check", "bound-check")
    assert all(e["holds"] and e["slack"] == 0 for e in report["report"]["entries"])


def test_bel_check_failing_bound_exits_one(tmp_path):
    # deliberately wrong caller assertion: degrees (1,1) on the triangle
    code = main([
        "bel-check", "arrangement(3,2)", "--degrees", "1,1", "--codim", "2",
        "--pmax", "1", "--out-dir", str(tmp_path),
    ])
    assert code == 1


def test_parse_error_exit_code(tmp_path, capsys):
    assert main(["eval", "ideal(x0)", "--out-dir", str(tmp_path)]) == 2
    err = capsys.readouterr().err
    diag = json.loads(err.strip())
    assert diag["error"] == "parse-error"
    assert diag["line"] == 1 and diag["column"] == 7


def test_cap_exit_code(tmp_path):
    code = main(["reg", "power(arrangement(3,2),3)", "--max-closure", "3", "--out-dir", str(tmp_path)])
    assert code == 3


def test_enum_cap_reaches_closure_expressions(tmp_path):
    code = main(["closure", "ideal(x1^8, x2^8)", "3", "--max-enum", "10", "--out-dir", str(tmp_path)])
    assert code == 3
    code = main(["closure", "ideal(x1^8, x2^8)", "1", "--out-dir", str(tmp_path)])
    assert code == 0


def test_scan_cap_truncation_exit(tmp_path):
    code = main(["scan-asymptotic", "arrangement(3,2)", "--pmax", "3", "--max-closure", "3", "--out-dir", str(tmp_path)])
    assert code == 3
    report = read_report(tmp_path, "scan-asymptotic")
    assert report["sequence"]["truncated_at"] == 1


def test_usage_error_exit_code():
    assert main(["no-such-command"]) == 2


def test_reports_are_deterministic(tmp_path):
    out1 = tmp_path / "a"
    out2 = tmp_path / "b"
    for out in (out1, out2):
        assert main(["reg", "power(arrangement(3,2),2)", "--out-dir", str(out)]) == 0
    assert (out1 / "reg.json").read_bytes() == (out2 / "reg.json").read_bytes()
    assert (out1 / "reg.csv").read_bytes() == (out2 / "reg.csv").read_bytes()


def test_cached_rerun_is_byte_identical(tmp_path):
    cache = tmp_path / "cache"
    out1 = tmp_path / "a"
    out2 = tmp_path / "b"
    for out in (out1, out2):
        code = main([
            "reg", "power(arrangement(3,2),2)",
            "--cache-dir", str(cache), "--out-dir", str(out),
        ])
        assert code == 0
    assert (out1 / "reg.json").read_bytes() == (out2 / "reg.json").read_bytes()
    assert any(cache.rglob("*.json"))


def test_env_settings_are_honored(tmp_path, monkeypatch):
    monkeypatch.setenv("IDEALPOWERS_MAX_CLOSURE", "3")
    assert main(["reg", "power(arrangement(3,2),3)", "--out-dir", str(tmp_path)]) == 3
    monkeypatch.setenv("IDEALPOWERS_MAX_CLOSURE", "100000")
    assert main(["reg", "power(arrangement(3,2),3)", "--out-dir", str(tmp_path)]) == 0


def test_config_file_precedence(tmp_path, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"max_closure": 3}))
    monkeypatch.setenv("IDEALPOWERS_CONFIG", str(cfg))
    assert main(["reg", "power(arrangement(3,2),3)", "--out-dir", str(tmp_path / "o")]) == 3
    # explicit flag outranks the config file
    assert main([
        "reg", "power(arrangement(3,2),3)", "--max-closure", "100000",
        "--out-dir", str(tmp_path / "o"),
    ]) == 0
