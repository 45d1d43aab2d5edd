import json

import pytest

from invsemi.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_json(capsys):
    code, out, err = run(capsys, "info", "41,99,70,53", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["frobenius"] == 1019
    assert data["generators"] == [41, 53, 70, 99]
    assert data["symmetric"] is True


def test_info_human_agrees_with_json(capsys):
    code, human, _ = run(capsys, "info", "11,13,17")
    code2, out, _ = run(capsys, "info", "11,13,17", "--json")
    data = json.loads(out)
    assert str(data["frobenius"]) in human
    assert all(str(f) in human for f in data["pf"])


def test_json_round_trip(capsys):
    for argv in (
        ["info", "41,99,70,53", "--json"],
        ["mu", "43,20,27,37", "--json"],
        ["factorize", "5,6,9", "44", "--json"],
        ["invpoly", "3,4,5", "7", "--json"],
        ["ann", "11,13,17", "143", "--json"],
        ["free", "4,6,5", "--json"],
        ["hec", "5", "2", "--json"],
    ):
        code, out, err = run(capsys, *argv)
        assert code == 0, err
        data = json.loads(out)
        assert json.loads(json.dumps(data, sort_keys=True)) == data


def test_invpoly_text(capsys):
    code, out, _ = run(capsys, "invpoly", "3,4,5", "7")
    assert code == 0
    assert out.strip() == "X1*X2"


def test_usage_error_invalid_generator():
    with pytest.raises(SystemExit) as exc:
        main(["info", "0,3"])
    assert exc.value.code == 2


def test_usage_error_unknown_command():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate", "2,3"])
    assert exc.value.code == 2


def test_domain_error_exit_code(capsys):
    code, out, err = run(capsys, "apery", "3,4,5", "2")
    assert code == 1
    assert "error" in err

    code, out, err = run(capsys, "classify", "3,4,5")
    assert code == 1  # not symmetric

    code, out, err = run(capsys, "bresinsky", "10,14,15,21")
    assert code == 1  # complete intersection


def test_glue_command(capsys):
    code, out, err = run(
        capsys,
        "glue",
        "--h1", "3,4", "--d1", "5", "--h2", "2,3", "--d2", "7",
        "--invpoly", "8", "6",
        "--json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["frobenius"] == 67
    assert data["generators"] == [14, 15, 20, 21]
    assert len(data["invpoly"]["terms"]) == 2


def test_check_as_and_verify_intersection(capsys):
    code, out, _ = run(capsys, "check-as", "11,13,17", "11", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["bound"] == 10

    code, out, _ = run(capsys, "verify-intersection", "3,4,5", "1,0,0", "--json")
    assert code == 0
    assert json.loads(out)["colength"] == 3


def test_classify_and_ci(capsys):
    code, out, _ = run(capsys, "classify", "5,6,7,8", "--json")
    assert code == 0
    assert json.loads(out)["variant"] == "2"

    code, out, _ = run(capsys, "ci", "--alphas", "2,3,5", "--json")
    assert code == 0
    assert json.loads(out)["generators"] == [6, 10, 15]

    code, out, _ = run(capsys, "ci", "6,10,15", "--json")
    assert code == 0
    assert json.loads(out)["same_degree_ci"] is True


def test_verify_4gor_command(capsys):
    code, out, _ = run(capsys, "verify-4gor", "41,99,70,53", "--json", "--seed", "5")
    assert code == 0
    data = json.loads(out)
    assert data["mu"] == 5
    assert data["annihilation_spot_check"] is True


def test_bresinsky_command_json_shape(capsys):
    code, out, _ = run(capsys, "bresinsky", "41,99,70,53", "--json")
    assert code == 0
    data = json.loads(out)
    assert set(data) >= {"alpha", "alpha_off", "generators", "witness_index"}
    assert data["alpha"] == [3, 11, 2, 20]
    assert data["witness_index"] == 1


def test_bound_flag(capsys):
    code, out, err = run(capsys, "factorize", "3,4,5", "1000", "--bound", "100")
    assert code == 1
    assert "bound" in err
