import json

import pytest

from catalania import cli
from catalania.character import GradedCharacter, SchurExpansion


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ideal_info_golden(capsys):
    code, out, _ = run(capsys, "ideal-info", "--n", "6", "--psi", "4,4,1")
    assert code == 0
    rec = json.loads(out)
    assert rec["rows"] == [4, 4, 1, 0, 0, 0]
    assert rec["d"] == [2, 1, 3, 3, 2, 1]
    assert rec["I"] == [2, 3]
    assert rec["size"] == 9 and rec["area"] == 6


def test_ideal_info_empty_and_invalid(capsys):
    code, out, _ = run(capsys, "ideal-info", "--n", "3", "--psi", "")
    assert code == 0
    rec = json.loads(out)
    assert rec["rows"] == [0, 0, 0] and rec["ell"] == 0
    code, _, err = run(capsys, "ideal-info", "--n", "3", "--psi", "3,1")
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "ideal-info", "--n", "0", "--psi", "")
    assert code == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["catalan", "--n", "2", "--route", "Z"])
    assert info.value.code == 2


def test_catalan_json(capsys):
    code, out, _ = run(capsys, "catalan", "--n", "2", "--psi", "1", "--lambda", "1,1", "--w", "w0")
    assert code == 0
    data = json.loads(out)
    assert SchurExpansion.from_json(data["schur"]) == {(1, 1): 1, (2,): {1: 1}}
    H = GradedCharacter.from_json(data["H"])
    assert H.level == 1 and data["meta"]["route"] == "M"

    code, out, _ = run(capsys, "catalan", "--n", "3", "--psi", "", "--lambda", "2,1")
    assert code == 0
    assert json.loads(out)["schur"] == [{"mu": "2,1", "coeff": {"0": 1}}]


def test_catalan_both_routes(capsys):
    code, out, _ = run(
        capsys, "catalan", "--n", "6", "--psi", "4,4,1", "--lambda", "1,1,1,1,1,1", "--route", "both"
    )
    assert code == 0
    data = json.loads(out)
    assert data["equal"] is True
    assert data["M"]["character"] == data["N"]["character"]


def test_catalan_text(capsys):
    code, out, _ = run(capsys, "catalan", "--n", "2", "--psi", "1", "--lambda", "1,1", "--format", "text")
    assert code == 0
    assert "s_(2): q" in out and "s_(1,1): 1" in out


def test_catalan_tameness_and_bad_input(capsys):
    argv = ["catalan", "--n", "6", "--psi", "4,4,1", "--lambda", "1", "--w", "id"]
    code, out, _ = run(capsys, *argv)
    assert code == 0 and json.loads(out)["meta"]["tame"] is False
    code, _, _ = run(capsys, *argv, "--strict-tame")
    assert code == 3
    code, _, _ = run(capsys, "catalan", "--n", "2", "--lambda", "1,1,1")
    assert code == 2
    code, _, _ = run(capsys, "catalan", "--n", "2", "--lambda", "1,2")
    assert code == 2
    code, _, _ = run(capsys, "catalan", "--n", "2", "--lambda", "1", "--w", "s0")
    assert code == 2


def test_kostka(capsys):
    code, out, _ = run(capsys, "kostka", "--n", "3", "--psi", "2,1", "--lambda", "1,1,1")
    assert code == 0
    data = json.loads(out)
    assert SchurExpansion.from_json(data["kostka"]) == {
        (1, 1, 1): 1,
        (2, 1): {1: 1, 2: 1},
        (3,): {3: 1},
    }


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 14 == len(set(data["ideals"]))


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "identities", "--n", "7"],
        ["check", "coincidence", "--n", "4", "--max-weight", "4"],
        ["check", "operators", "--n", "3", "--seed", "7"],
    ],
)
def test_check_examples(capsys, argv):
    code, out, _ = run(capsys, *argv, "--jobs", "1")
    report = json.loads(out)
    assert code == 0
    assert report["failures"] == []
    if argv[1] == "identities":
        assert report["cases"] == 429


def test_check_independent_of_jobs(capsys):
    _, one, _ = run(capsys, "check", "tame", "--n", "3", "--jobs", "1")
    _, two, _ = run(capsys, "check", "tame", "--n", "3", "--jobs", "2")
    a, b = json.loads(one), json.loads(two)
    a.pop("elapsed")
    b.pop("elapsed")
    assert a == b


def test_sweep_is_deterministic(tmp_path, capsys):
    first, second = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert run(capsys, "sweep", "--n", "2", "--max-weight", "2", "--out", str(first))[0] == 0
    assert run(capsys, "sweep", "--n", "2", "--max-weight", "2", "--out", str(second))[0] == 0
    assert first.read_bytes() == second.read_bytes()
    records = [json.loads(line) for line in first.read_text().splitlines()]
    assert len(records) == 2 * 4
    empty = [r for r in records if r["lambda"] == ""]
    assert all(r["kostka"] == [{"mu": "", "coeff": {"0": 1}}] for r in empty)


def test_sweep_io_error(tmp_path, capsys):
    target = tmp_path / "missing" / "out.jsonl"
    code, _, err = run(capsys, "sweep", "--n", "2", "--max-weight", "1", "--out", str(target))
    assert code == 4 and "cannot write" in err
