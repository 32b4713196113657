"""Command line driver: output shapes and exit codes."""

import json

import pytest

from braidcat import cli


def test_nf_prints_the_normal_form(capsys):
    rc = cli.main(["braid", "nf", "--n", "4", "--word", "1 -2 1"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out == "D^-1 | 4 1 3 2 | 2 3 1 4 | 2 1 3 4\n"


def test_eq_equal_pair(capsys):
    rc = cli.main(["braid", "eq", "--n", "4", "--a", "1 2 1", "--b", "2 1 2"])
    assert rc == 0
    assert capsys.readouterr().out == "nf: equal\n"


def test_eq_unequal_pair_sets_exit_code(capsys):
    rc = cli.main(["braid", "eq", "--n", "4", "--a", "1", "--b", "2"])
    assert rc == 1
    assert capsys.readouterr().out == "nf: unequal\n"


def test_eq_all_oracles(capsys):
    rc = cli.main(["braid", "eq", "--n", "4", "--a", "1 3", "--b", "3 1", "--oracle", "all"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out == "nf: equal\nhandle: equal\nlk: equal\n"


def test_eq_parse_error(capsys):
    rc = cli.main(["braid", "eq", "--n", "4", "--a", "9", "--b", "1"])
    err = capsys.readouterr().err
    assert rc == 2
    assert err.startswith("error:")


def test_derive(capsys):
    rc = cli.main(["derive", "--kind", "L", "--word", "2"])
    assert rc == 0
    assert capsys.readouterr().out == "2 4 3\n"
    rc = cli.main(["derive", "--kind", "FR", "--word", "2"])
    assert rc == 0
    assert capsys.readouterr().out.strip() != ""


def test_derive_unknown_kind_is_a_usage_error():
    with pytest.raises(SystemExit) as err:
        cli.main(["derive", "--kind", "Q", "--word", "2"])
    assert err.value.code == 2


def test_check_pass_and_fail(capsys):
    rc = cli.main(["check", "--word", "2"])
    assert rc == 0
    assert capsys.readouterr().out == "assoc: true\nfunct: true\n"
    rc = cli.main(["check", "--word", "3 3 2"])
    assert rc == 1
    assert capsys.readouterr().out == "assoc: false\nfunct: true\n"


def test_check_single_obligation(capsys):
    rc = cli.main(["check", "--word", "3 3 2", "--tests", "funct"])
    assert rc == 0
    assert capsys.readouterr().out == "funct: true\n"


def test_check_precondition_violation(capsys):
    rc = cli.main(["check", "--word", "1"])
    captured = capsys.readouterr()
    assert rc == 2
    assert captured.out == ""
    assert "permute strands by (2 3)" in captured.err
    assert "(1 2)" in captured.err


def test_search_conjecture_writes_report(tmp_path, capsys):
    out_file = tmp_path / "report.json"
    rc = cli.main(["search", "conjecture", "--max-len", "1", "--out", str(out_file)])
    printed = capsys.readouterr().out
    assert rc == 0
    assert "survivors passing both obligations: 2" in printed
    data = json.loads(out_file.read_text())
    assert sorted(s["word"] for s in data["survivors"]) == ["-2", "2"]


def test_coset_scan(capsys):
    rc = cli.main(["coset", "scan", "--range", "1"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "27 coset words, L = R holds for 27" in out
    assert "(m,p,q)=(0,0,0)" in out


def test_obstruction_scan(capsys):
    rc = cli.main(["obstruction", "scan", "--max-len", "3"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "witnesses: 0" in out


def test_fuzz(capsys):
    rc = cli.main(["fuzz", "--trials", "10", "--seed", "1"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "0 oracle disagreements" in out


def test_unknown_command_is_a_usage_error():
    with pytest.raises(SystemExit) as err:
        cli.main(["bogus"])
    assert err.value.code == 2
