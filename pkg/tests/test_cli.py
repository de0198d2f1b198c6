import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from hyperzeta import cli
from hyperzeta.cache import cached_primes, cached_sieve
from hyperzeta.dirichlet import primes_upto, sieve_tables


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--format", "json")
    return code, json.loads(text)


def test_canonicalize():
    code, doc = run_json("canonicalize", "--alpha", "1", "--beta", "5", "--gamma", "3")
    assert code == 0
    assert doc["command"] == "canonicalize"
    row = doc["results"][0]
    assert (row["n"], row["A"], row["B"]) == (1, 2, 3)
    assert row["invariant_B"] == 3


def test_canonicalize_rank_deficient_is_usage_error(capsys):
    code, _ = run("canonicalize", "--alpha", "0", "--beta", "1", "--gamma", "1")
    assert code == 1
    assert "rank deficient" in capsys.readouterr().err


def test_coeffs_both_match():
    code, text = run("coeffs", "--B", "6", "--limit", "40", "--method", "both")
    assert code == 0
    assert text.strip().endswith("MATCH")
    code, doc = run_json("coeffs", "--B", "6", "--limit", "40", "--method", "both", "--A", "5")
    assert doc["match"] is True
    assert [r["m"] for r in doc["results"]] == list(range(1, 41))


def test_coeffs_formula_b1():
    code, doc = run_json("coeffs", "--B", "1", "--limit", "30")
    assert [r["formula"] for r in doc["results"]] == list(range(1, 31))


def test_coeffs_csv():
    code, text = run("coeffs", "--B", "2", "--limit", "5", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == ["m", "formula"]
    assert [int(r["formula"]) for r in rows] == [1, 3, 3, 6, 5]


def test_classes():
    code, doc = run_json("classes", "--A", "1", "--B", "2", "--index", "2")
    assert code == 0
    assert doc["class_count"] == 3
    assert sum(r["size"] for r in doc["results"]) == 3


def test_ratio_and_table1():
    code, doc = run_json("ratio", "--B", "4", "--prime-limit", "1000")
    row = doc["results"][0]
    assert row["residue_exact"] == "21/16"
    assert "error_bound" in doc
    code, doc = run_json("table1", "--prime-limit", "10000")
    assert [r["B"] for r in doc["results"]] == [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15,
                                                18, 20, 24]
    assert doc["results"][0]["r"] == 0.6079


def test_hb_modes():
    code, doc = run_json("hb", "--b", "7", "--prime-limit", "10000")
    vals = {r["mode"]: r["value"] for r in doc["results"]}
    assert abs(vals["general"] - vals["closed"]) < 1e-9
    assert doc["error_bound"] > 0
    # no closed form for larger groups; "both" reports the general value only
    code, doc = run_json("hb", "--b", "13", "--prime-limit", "1000")
    assert code == 0 and doc["results"][1]["value"] is None
    code, _ = run("hb", "--b", "13", "--prime-limit", "1000", "--mode", "closed")
    assert code == 1


def test_verify_small():
    code, doc = run_json("verify", "--suite", "oracle", "--limit", "12")
    assert code == 0 and doc["passed"] is True
    assert all(r["passed"] for r in doc["results"])


def test_verify_failure_exit_code(monkeypatch):
    from hyperzeta import verify
    monkeypatch.setitem(verify._RUNNERS, "oracle",
                        lambda limit, seed: [verify.Check("oracle", "forced", False)])
    code, _ = run("verify", "--suite", "oracle")
    assert code == 2


def test_usage_errors():
    assert run("coeffs")[0] == 1
    assert run("coeffs", "--B", "0")[0] == 1
    assert run("nonsense")[0] == 1
    assert run("hb", "--b", "5", "--s", "1.0")[0] == 1


def test_help_lists_every_subcommand(capsys):
    assert run("--help")[0] == 0
    text = capsys.readouterr().out
    for name in ("canonicalize", "coeffs", "classes", "ratio", "table1", "hb", "verify"):
        assert name in text


def test_output_is_deterministic():
    args = ("table1", "--prime-limit", "5000", "--format", "csv")
    assert run(*args)[1] == run(*args)[1]


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "hyperzeta", "canonicalize",
                        "--alpha", "2", "--beta", "3", "--gamma", "4", "--format", "csv"],
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert p.stdout.splitlines()[1].startswith("2,3,4,")


def test_cache_primes_roundtrip(tmp_path):
    path = str(tmp_path / "primes.npz")
    a = cached_primes(path, 1000)
    b = cached_primes(path, 1000)
    assert np.array_equal(a, b) and np.array_equal(a, primes_upto(1000))
    # a different limit rebuilds
    c = cached_primes(path, 500)
    assert np.array_equal(c, primes_upto(500))
    with np.load(path) as z:
        assert list(z["header"])[-1] == "500"


def test_cache_sieve_roundtrip(tmp_path):
    path = str(tmp_path / "sieve.npz")
    t1 = cached_sieve(path, 300)
    t2 = cached_sieve(path, 300)
    ref = sieve_tables(300)
    for t in (t1, t2):
        assert np.array_equal(t.mu, ref.mu) and np.array_equal(t.phi, ref.phi)
    assert not t2.mu.flags.writeable


def test_cache_corrupt_file_is_rebuilt(tmp_path):
    path = tmp_path / "bad.npz"
    path.write_bytes(b"not a zip")
    assert np.array_equal(cached_primes(str(path), 100), primes_upto(100))
    assert np.array_equal(cached_primes(str(path), 100), primes_upto(100))


def test_cache_kind_mismatch(tmp_path):
    path = str(tmp_path / "c.npz")
    cached_primes(path, 200)
    t = cached_sieve(path, 200)
    assert t.limit == 200


def test_cli_with_cache(tmp_path):
    path = str(tmp_path / "cli.npz")
    code, doc = run_json("coeffs", "--B", "3", "--limit", "50", "--cache", path)
    assert code == 0
    code, doc2 = run_json("coeffs", "--B", "3", "--limit", "50", "--cache", path)
    assert doc == doc2
