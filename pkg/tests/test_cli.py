import csv
import io
import json
import subprocess
import sys

import pytest

from partnorm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def canonical(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def test_enum_csv(capsys):
    code, out, _ = run(capsys, "enum", "4", "--class", "all", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 5
    assert rows[0] == {"parts": "4", "size": "4", "length": "1", "norm": "4", "rank": "3"}


def test_enum_jsonl(capsys):
    code, out, _ = run(capsys, "enum", "7", "--class", "rr")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 3
    for line in lines:
        assert canonical(json.loads(line)) == line
    assert json.loads(lines[1]) == {"parts": [6, 1], "size": 7, "length": 2, "norm": "6", "rank": 4}


def test_enum_bad_class(capsys):
    code, _, err = run(capsys, "enum", "3", "--class", "nosuch")
    assert code == 2 and "nosuch" in err


@pytest.mark.parametrize("name,n,last", [("max-norm", 10, "10 36"), ("p", 10, "10 42"), ("p-dot", 4, "4 14"),
                                          ("lehmer", 3, "3 11/6"), ("mult-partitions", 12, "12 4"),
                                          ("max-norm-rr", 9, "9 18")])
def test_seq(capsys, name, n, last):
    code, out, _ = run(capsys, "seq", name, str(n))
    assert code == 0 and out.splitlines()[-1] == last


def test_seq_json_roundtrip(capsys):
    code, out, _ = run(capsys, "seq", "lehmer-distinct", "6", "--format", "json")
    assert code == 0 and canonical(json.loads(out)) == out.strip()
    assert json.loads(out)["terms"][3] == {"n": 3, "a": "5/6"}


def test_seq_unknown(capsys):
    assert run(capsys, "seq", "nosuch", "5")[0] == 2


def test_zeta_exact(capsys):
    code, out, _ = run(capsys, "zeta", "fixed-length", "--s", "2", "--k", "2", "--exact")
    assert code == 0 and out.strip() == "7/360 * pi^4"


def test_zeta_product(capsys):
    code, out, _ = run(capsys, "zeta", "product", "--set", "primes", "--s", "2", "--tol", "1e-10")
    value, bound = out.split()[:2]
    assert code == 0 and abs(float(value) - 1.6449340668482264) <= 1e-10
    assert float(bound.split("=")[1]) <= 1e-10


def test_zeta_domain_errors(capsys):
    code, _, err = run(capsys, "zeta", "product", "--set", "primes", "--s", "1")
    assert code == 2 and "s must be > 1" in err
    assert run(capsys, "zeta", "fixed-length", "--s", "2")[0] == 2
    assert run(capsys, "zeta", "fixed-length", "--s", "3", "--k", "2", "--exact")[0] == 2


def test_zeta_json(capsys):
    code, out, _ = run(capsys, "zeta", "nuclear-dirichlet", "--s", "3", "--nu-max", "100", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["tail_bound"] is None and canonical(data) == out.strip()
    code, out, _ = run(capsys, "zeta", "golden", "--terms", "12", "--format", "json")
    assert abs(json.loads(out)["value"] - 1.0166407384630519) < 1e-12


def test_series(capsys):
    code, out, _ = run(capsys, "series", "reciprocal-norm", "--order", "3")
    data = json.loads(out)
    assert code == 0 and data[3] == {"num": "11", "den": "6"}
    assert canonical(data) == out.strip()
    assert run(capsys, "series", "nosuch")[0] == 2


def test_sample_deterministic(capsys):
    a = run(capsys, "sample", "10", "--count", "5", "--seed", "3")[1]
    b = run(capsys, "sample", "10", "--count", "5", "--seed", "3")[1]
    assert a == b and len(a.splitlines()) == 5
    assert all(sum(map(int, line.split())) == 10 for line in a.splitlines())
    assert run(capsys, "sample", "10", "--count", "5")[1] == run(capsys, "sample", "10", "--count", "5")[1]


def test_verify_fine(capsys):
    code, out, _ = run(capsys, "verify", "fine", "--n-max", "20")
    assert code == 0 and out.count("ExactPass") == 21


def test_verify_rr_flags(capsys):
    code, out, _ = run(capsys, "verify", "extremal-rr", "--n-max", "40", "--format", "jsonl")
    reports = [json.loads(line) for line in out.splitlines()]
    flagged = [r for r in reports if r["paper_flag"]]
    assert code == 0 and [r["identity"] for r in flagged] == [f"max-norm-rr[n={n}]" for n in (4, 10, 18, 28, 40)]
    assert all(r["status"] == "Discrepancy" and "case v" in r["notes"] for r in flagged)
    code, _, _ = run(capsys, "verify", "extremal-rr", "--n-max", "12", "--no-allow-paper-flags")
    assert code == 1


def test_verify_unknown(capsys):
    assert run(capsys, "verify", "nosuch")[0] == 2


def test_entry_point():
    proc = subprocess.run([sys.executable, "-m", "partnorm", "seq", "p", "5"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.splitlines()[-1] == "5 7"
    proc = subprocess.run([sys.executable, "-m", "partnorm", "enum"], capture_output=True, text=True)
    assert proc.returncode == 2
