import io
import json
import subprocess
import sys

import pytest

from partialdom.catalog import named_graph
from partialdom.cli import run
from partialdom.graph6 import parse_graph6, write_graph6
from partialdom.iso import is_isomorphic
from helpers import FIXTURES

A1 = write_graph6(named_graph("A1")).decode()
G14_1 = write_graph6(named_graph("G14_1")).decode()


def call(argv, stdin=b"", capsys=None, monkeypatch=None):
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(stdin)))
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(capsys, monkeypatch):
    return lambda argv, stdin=b"": call(argv, stdin, capsys, monkeypatch)


def test_gamma_a1(cli):
    code, out, _ = cli(["gamma"], (A1 + "\n").encode())
    assert code == 0
    d = json.loads(out)
    assert d["kind"] == "Gamma" and d["value"] == 3 and d["coverage"] == 8


def test_pd_g14(cli):
    code, out, _ = cli(["pd", "--alpha", "7/8"], G14_1.encode())
    d = json.loads(out)
    assert code == 0 and d["value"] == 4 and d["coverage"] == 13 and d["alpha"] == "7/8"


def test_pd_rejects_decimal(cli):
    code, _, err = cli(["pd", "--alpha", "0.875"], G14_1.encode())
    assert code == 2 and "P/Q" in err


def test_pd_needs_alpha(cli):
    assert cli(["pd"], G14_1.encode())[0] == 2


def test_rho_multiple_lines(cli):
    petersen = write_graph6(named_graph("Petersen")).decode()
    code, out, _ = cli(["rho", "--output", "tsv"], f"{petersen}\nC~\n".encode())
    assert code == 0
    assert [line.split("\t")[:2] for line in out.splitlines()] == [["Packing", "1"], ["Packing", "1"]]


def test_parse_error_exit_three(cli):
    code, out, err = cli(["gamma"], b"C~\nC~extra\n")
    assert code == 3 and "line 2" in err and len(out.splitlines()) == 1


def test_timeout_exit_one(cli):
    big = subprocess.run([sys.executable, "-m", "partialdom", "gen", "--random-cubic", "300",
                          "--seed", "1", "--connected"], capture_output=True, check=True).stdout
    code, out, _ = cli(["--timeout-ms", "20", "gamma"], big)
    assert code == 1 and json.loads(out)["status"] == "timeout"


def test_construct(cli):
    code, out, _ = cli(["construct", "--regime", "generic78"], A1.encode())
    d = json.loads(out)
    assert code == 0 and d["value"] == 2 and d["coverage"] == 7 and d["regime"] == "generic78"


def test_construct_failure_exit_one(cli):
    code, _, err = cli(["construct", "--regime", "cubic1314"], A1.encode())
    assert code == 1 and "does not apply" in err


def test_construct_bad_regime(cli):
    assert cli(["construct", "--regime", "x"], A1.encode())[0] == 2


@pytest.mark.parametrize("argv, expected", [
    (["gen", "--named", "K4"], "C~"),
    (["gen", "--named", "a1"], A1),
    (["gen", "--gp", "5", "2"], write_graph6(named_graph("Petersen")).decode()),
    (["gen", "--random-cubic", "8", "--seed", "1"], "GbFDPW"),
])
def test_gen(cli, argv, expected):
    code, out, _ = cli(argv)
    if argv[1] == "--gp":
        assert is_isomorphic(parse_graph6(out.strip()), named_graph("Petersen"))
    else:
        assert out.strip() == expected
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["gen"],
    ["gen", "--named", "A1", "--gp", "5", "2"],
    ["gen", "--random-cubic", "8"],
    ["gen", "--random-cubic", "7", "--seed", "1"],
    ["gen", "--gp", "4", "2"],
    ["gen", "--named", "A1", "--seed", "3"],
    ["gen", "--named", "nope"],
    ["frobnicate"],
    [],
    ["--jobs", "0", "gamma"],
])
def test_usage_errors(cli, argv):
    assert cli(argv)[0] == 2


def test_verify_gp(cli):
    code, out, _ = cli(["verify", "--suite", "gp:3:13"])
    d = json.loads(out)
    assert code == 0 and d["total"] == 11 and not d["violations"]
    assert "elapsed_ms" not in d


def test_verify_gp_bad_range(cli):
    assert cli(["verify", "--suite", "gp:2:13"])[0] == 2
    assert cli(["verify", "--suite", "gp:3"])[0] == 2


def test_verify_ks(cli):
    code, out, _ = cli(["verify", "--suite", "ks", str(FIXTURES / "cubic_connected_08.g6")])
    d = json.loads(out)
    assert code == 0 and len(d["exceptions_found"]) == 2
    assert d["summary"]["exception_matches"] == ["A1", "A2"]


def test_verify_timing_flag(cli):
    code, out, _ = cli(["verify", "--suite", "reed", "--timing"], b"C~\n")
    assert code == 0 and "elapsed_ms" in json.loads(out)


def test_verify_stdin_and_parse_error(cli):
    code, out, err = cli(["verify", "--suite", "ks", "-"], b"C~\nnope!\n")
    assert code == 3 and json.loads(out)["errors"][0]["line"] == 2


def test_verify_violation_exit_one(cli, monkeypatch):
    import partialdom.verify as verify

    monkeypatch.setattr(verify, "_match", lambda suite, g: None)
    code, out, _ = cli(["verify", "--suite", "ks"], A1.encode())
    assert code == 1 and len(json.loads(out)["violations"]) == 1


def test_verify_missing_file(cli):
    assert cli(["verify", "--suite", "ks", "/nonexistent.g6"])[0] == 2


def test_verify_tsv(cli):
    code, out, _ = cli(["verify", "--suite", "favaron", "--output", "tsv",
                        str(FIXTURES / "cubic_connected_10.g6")])
    assert code == 0 and "summary.exception_matches\tPetersen" in out


def test_iso(cli):
    a2 = write_graph6(named_graph("A2")).decode()
    code, out, _ = cli(["iso", A1, a2])
    assert code == 0 and json.loads(out)["isomorphic"] is False
    code, out, _ = cli(["iso", A1, A1])
    assert json.loads(out)["isomorphic"] is True
    assert cli(["iso", A1, "C~x"])[0] == 3


def test_stats(cli):
    code, out, _ = cli(["stats"], f"{A1}\n".encode())
    d = json.loads(out)
    assert code == 0 and d == {"n": 8, "min_degree": 3, "max_degree": 3, "is_cubic": True,
                               "is_supercubic": True, "is_connected": True, "girth": 4}


def _cli_bytes(*args, stdin=None):
    proc = subprocess.run([sys.executable, "-m", "partialdom", *args], input=stdin,
                          capture_output=True)
    return proc.returncode, proc.stdout


def test_byte_identical_across_jobs():
    corpus = str(FIXTURES / "cubic_connected_12.g6")
    runs = [_cli_bytes("--jobs", str(j), "verify", "--suite", "extremal", corpus) for j in (1, 2, 2)]
    assert runs[0][0] == 0
    assert runs[0] == runs[1] == runs[2]


def test_flags_after_subcommand():
    code, out = _cli_bytes("gamma", "--output", "tsv", stdin=b"C~\n")
    assert code == 0 and out == b"Gamma\t1\t4\t0\n"
