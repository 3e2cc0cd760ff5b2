"""Command-line interface: output formats, exit codes, round-trips and the
suite runner's determinism and skip behavior."""

import io
import json

import pytest

from qcheb import cli, families, suites
from qcheb.polyring import XsPoly


def run_cli(argv):
    out = io.StringIO()
    code = cli.main(argv, out=out)
    return code, out.getvalue()


def test_gen_text():
    code, text = run_cli(["gen", "--family", "T", "--n", "2", "--q", "2"])
    assert code == 0
    assert "T_2 = 3*x^2 + 2*s" in text


def test_gen_json_round_trip():
    code, text = run_cli(
        ["gen", "--family", "U", "--n", "4", "--q", "3/5", "--format", "json"]
    )
    assert code == 0
    payload = json.loads(text)
    assert payload["q"] == "3/5"
    from fractions import Fraction

    for row in payload["rows"]:
        poly = XsPoly.from_json(row["poly"])
        assert poly == families.cheb_u(row["n"], Fraction(3, 5))


def test_gen_csv():
    code, text = run_cli(["gen", "--family", "F_QB", "--n", "3", "--format", "csv"])
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "n,poly"
    assert len(lines) == 5


def test_gen_bad_family_exits_2():
    code, _ = run_cli(["gen", "--family", "NOPE", "--n", "2"])
    assert code == 2


def test_gen_bad_rational_exits_2():
    code, _ = run_cli(["gen", "--family", "T", "--n", "2", "--q", "2/0"])
    assert code == 2


def test_gen_pole_exits_2():
    # q = 2, b = 1/2 puts a pole at level 1
    code, _ = run_cli(["gen", "--family", "F_QB", "--n", "5", "--q", "2", "--b", "1/2"])
    assert code == 2


def test_moments_values():
    code, text = run_cli(["moments", "--family", "GEN_FIB", "--n", "2", "--q", "2"])
    assert code == 0
    assert "moment(x^1) = 0" in text
    assert "moment(x^2) = -2/15*s" in text


def test_moments_classical():
    code, text = run_cli(["moments", "--family", "CARLITZ", "--n", "4", "--q", "1"])
    assert code == 0
    assert "moment(x^4) = 2*s^2" in text


def test_catalan():
    code, text = run_cli(["catalan", "--n", "5", "--q", "1"])
    assert code == 0
    assert text.strip() == "1, 1, 2, 5, 14, 42"
    code, text = run_cli(["catalan", "--n", "2", "--q", "3"])
    assert text.strip() == "1, 1, 4"


def test_catalan_json():
    code, text = run_cli(["catalan", "--n", "3", "--q", "1/2", "--format", "json"])
    payload = json.loads(text)
    assert payload["values"][2] == "3/2"


def test_verify_small_passes():
    code, text = run_cli(
        ["verify", "--suite", "core", "--q", "2", "--max-n", "6", "--format", "json"]
    )
    assert code == 0
    payload = json.loads(text)
    assert payload["summary"]["fail"] == 0
    assert payload["summary"]["pass"] > 0
    assert all(r["status"] in ("pass", "skipped") for r in payload["reports"])


def test_verify_q1_skips():
    code, text = run_cli(
        ["verify", "--suite", "core", "--q", "1", "--max-n", "4", "--format", "json"]
    )
    assert code == 0
    payload = json.loads(text)
    assert payload["summary"]["skipped"] > 0
    assert payload["summary"]["fail"] == 0
    # the classical-limit checks still run
    ids = {r["identity_id"] for r in payload["reports"] if r["status"] == "pass"}
    assert "classical-fib-lucas" in ids


def test_verify_fault_injection_exits_1():
    code, text = run_cli(
        [
            "verify", "--suite", "core", "--q", "2", "--max-n", "4",
            "--inject-fault", "U", "--format", "json",
        ]
    )
    assert code == 1
    payload = json.loads(text)
    assert payload["summary"]["fail"] >= 1
    fails = [r for r in payload["reports"] if r["status"] == "fail"]
    assert all("witness" in r for r in fails)
    # the hook is cleared afterwards
    assert families._FAULT is None


def test_verify_csv_columns():
    code, text = run_cli(
        ["verify", "--suite", "core", "--q", "3/5", "--max-n", "4", "--format", "csv"]
    )
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "identity_id,q,b,n_lo,n_hi,status"


def test_verify_deterministic_across_parallelism():
    args = ["verify", "--suite", "core", "--q", "2", "--max-n", "5", "--format", "json"]
    _, serial = run_cli(args)
    _, parallel = run_cli(args + ["--parallelism", "4"])
    assert serial == parallel


def test_verify_bad_flags_exit_2():
    code, _ = run_cli(["verify", "--suite", "nope"])
    assert code == 2
    code, _ = run_cli(["verify", "--parallelism", "0"])
    assert code == 2
    code, _ = run_cli(["verify", "--max-n", "0"])
    assert code == 2


def test_suite_summary_counts():
    reports = suites.run_suite("core", qs=[2], bounds={"dual": 4})
    counts = suites.summarize(reports)
    assert counts["fail"] == 0
    assert counts["pass"] == len(reports) - counts["skipped"]


def test_unknown_suite_raises():
    with pytest.raises(ValueError):
        suites.build_work_items("bogus")
