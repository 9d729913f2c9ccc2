import csv
import json
import subprocess
import sys

import pytest

from blockwitness import WitnessCertificate
from blockwitness.cli import CSV_COLUMNS, main
from blockwitness.witness import verify_certificate


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_witness_json(capsys):
    code, out, _ = run(capsys, "witness", "7", "5", "2", "--group", "sym", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["partition"] == [2, 2, 1, 1, 1] and data["case"] == "PW_GREATER_DEGENERATE"
    verify_certificate(WitnessCertificate.from_json(data))


def test_witness_a_zero(capsys):
    code, out, _ = run(capsys, "witness", "7", "7", "2")
    assert code == 0
    assert json.loads(out)["partition"] == [4, 1, 1, 1]


def test_witness_text(capsys):
    code, out, _ = run(capsys, "witness", "7", "7", "2", "--group", "alt", "--format", "text")
    assert code == 0
    assert "partition" in out and "[4,1,1,1]" in out and "alternating" in out


@pytest.mark.parametrize(
    "argv, message",
    [
        (["witness", "5", "5", "5"], "q must differ from p"),
        (["witness", "9", "4", "2"], "p must be prime"),
        (["witness", "9", "7", "6"], "q must be prime"),
        (["witness", "4", "3", "2"], "n >= 5"),
        (["enumerate", "4", "5", "2"], "p=5 exceeds n=4"),
        (["enumerate", "9", "3", "5"], "q < p"),
        (["check-range", "--nmax", "4"], "at least 5"),
    ],
)
def test_precondition_exit_codes(capsys, argv, message):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert message in err


@pytest.mark.parametrize("literal", ["[1,2]", "3,1", "[x]"])
def test_malformed_literal(capsys, literal):
    with pytest.raises(SystemExit) as info:
        main(["core", literal, "2"])
    assert info.value.code == 2


def test_non_integer_argument(capsys):
    with pytest.raises(SystemExit) as info:
        main(["witness", "seven", "5", "2"])
    assert info.value.code == 2


def test_certification_failure_exit_code(capsys, monkeypatch):
    import importlib

    from blockwitness import cli

    witness_module = importlib.import_module("blockwitness.witness")
    monkeypatch.setattr(witness_module, "construct", lambda frame, case: witness_module.Partition([7]))
    code, _, err = run(capsys, "witness", "7", "5", "2")
    assert code == 3 and "certification failed" in err
    assert cli.EXIT_VERIFY == 3


def test_enumerate(capsys, tmp_path):
    path = tmp_path / "b.csv"
    code, out, _ = run(capsys, "enumerate", "5", "5", "2", "--csv", str(path))
    assert code == 0
    assert "[4,1]" in out
    rows = list(csv.reader(path.open()))
    assert rows[0] == CSV_COLUMNS
    assert [r[5] for r in rows[1:]] == ["[4,1]", "[3,1,1]", "[2,1,1,1]"]
    assert rows[1] == ["5", "5", "2", "symmetric", "", "[4,1]", "2", "false"]


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "5", "5", "3", "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert records and records[0]["partition"] == [3, 1, 1] and records[0]["degree"] == "6"


def test_check_range_small(capsys, tmp_path):
    path = tmp_path / "w.csv"
    code, out, _ = run(capsys, "check-range", "--nmax", "12", "--jobs", "1", "--csv", str(path))
    assert code == 0
    assert "failures: 0" in out
    rows = list(csv.DictReader(path.open()))
    assert {r["group"] for r in rows} == {"symmetric", "alternating"}
    assert any(r["case"] == "PW_GREATER_DEGENERATE" for r in rows)


def test_check_range_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "check-range", "--nmax", "11", "--jobs", "1")
    _, parallel, _ = run(capsys, "check-range", "--nmax", "11", "--jobs", "2")
    assert serial == parallel


def test_check_range_failure(capsys, monkeypatch):
    from blockwitness import rangecheck

    real = rangecheck.certify

    def sabotage(frame, group):
        if frame.n == 7 and frame.p == 5 and frame.q == 2:
            from blockwitness.witness import CertificationError

            raise CertificationError("sabotaged", frame, (7,))
        return real(frame, group)

    monkeypatch.setattr(rangecheck, "certify", sabotage)
    code, out, _ = run(capsys, "check-range", "--nmax", "8", "--jobs", "1")
    assert code == 3
    failures = json.loads(out.strip().splitlines()[-1])
    assert {(f["n"], f["p"], f["q"]) for f in failures} == {(7, 5, 2)}


def test_core_tower_valuation(capsys):
    assert run(capsys, "core", "[3,1]", "2")[1].strip() == "[]"
    code, out, _ = run(capsys, "tower", "[2,1]", "2")
    assert code == 0 and out.splitlines()[0].startswith("layer 0: [[2,1]]")
    code, out, _ = run(capsys, "tower", "[2,1]", "2", "--format", "json")
    assert json.loads(out) == {"q": 2, "layers": [[[2, 1]], [[], []]]}
    code, out, _ = run(capsys, "valuation", "[2,1]", "2")
    assert code == 0 and out.split() == ["macdonald:", "1", "legendre-hook:", "1"]
    assert run(capsys, "valuation", "[2,1]", "4")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "blockwitness", "core", "[4,1]", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "[]"
