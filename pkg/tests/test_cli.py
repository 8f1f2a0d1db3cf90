import json

import pytest

import rmtopt.cli as cli
from conftest import DATA
from rmtopt import parse, t_count

STATS_KEYS = [
    "n",
    "k",
    "decoder",
    "t_original",
    "t_canonical",
    "t_optimized",
    "decode_distance",
    "millis",
]


def copy_fixture(tmp_path, name):
    dst = tmp_path / name
    dst.write_text((DATA / name).read_text())
    return dst


def stats_of(capsys):
    lines = capsys.readouterr().out.strip().splitlines()
    return dict(line.split("=", 1) for line in lines)


def test_basic_run(tmp_path, capsys):
    src = copy_fixture(tmp_path, "double_ccz.qc")
    out = tmp_path / "result.qc"
    assert cli.run([str(src), "-o", str(out), "--decoder", "exact"]) == 0
    stats = stats_of(capsys)
    assert list(stats) == STATS_KEYS
    assert stats["n"] == "4"
    assert stats["k"] == "2"
    assert stats["decoder"] == "exact"
    assert stats["t_original"] == "14"
    assert stats["t_canonical"] == "8"
    assert stats["t_optimized"] == "7"
    assert stats["decode_distance"] == "7"
    optimized = parse(out.read_text())
    assert t_count(optimized) == 7


def test_default_output_path(tmp_path, capsys):
    src = copy_fixture(tmp_path, "ccz.qc")
    assert cli.run([str(src)]) == 0
    assert (tmp_path / "ccz.opt.qc").is_file()


def test_json_output(tmp_path, capsys):
    src = copy_fixture(tmp_path, "double_ccz.qc")
    out = tmp_path / "r.qc"
    assert cli.run([str(src), "-o", str(out), "--json", "--profile"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert list(report) == STATS_KEYS + ["profile_0", "profile_1", "profile_2"]
    assert report["t_optimized"] == 7
    assert report["profile_2"] == 7


def test_profile_lines(tmp_path, capsys):
    src = copy_fixture(tmp_path, "double_ccz.qc")
    assert cli.run([str(src), "-o", str(tmp_path / "r.qc"), "--profile"]) == 0
    stats = stats_of(capsys)
    assert stats["profile_0"] == "3"
    assert stats["profile_1"] == "6"
    assert stats["profile_2"] == "7"


def test_verify_flag_passes(tmp_path, capsys):
    src = copy_fixture(tmp_path, "double_ccz.qc")
    assert cli.run([str(src), "-o", str(tmp_path / "r.qc"), "--verify"]) == 0


def test_verify_failure_exits_2(tmp_path, capsys, monkeypatch):
    monkeypatch.setattr(cli, "verify_equivalent", lambda *a, **kw: False)
    src = copy_fixture(tmp_path, "ccz.qc")
    assert cli.run([str(src), "-o", str(tmp_path / "r.qc"), "--verify"]) == 2
    assert "verification failed" in capsys.readouterr().err
    assert not (tmp_path / "r.qc").exists()


def test_unknown_decoder_exits_1(tmp_path, capsys):
    src = copy_fixture(tmp_path, "ccz.qc")
    assert cli.run([str(src), "--decoder", "bogus"]) == 1
    err = capsys.readouterr().err
    assert "bogus" in err
    for name in ("exact", "majority", "recursive", "none"):
        assert name in err


def test_missing_input_exits_1(tmp_path, capsys):
    assert cli.run([str(tmp_path / "nope.qc")]) == 1
    assert "no such file" in capsys.readouterr().err


def test_parse_error_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.qc"
    bad.write_text(".v a\nBEGIN\nfrobnicate a\nEND\n")
    assert cli.run([str(bad)]) == 1
    assert "line 3" in capsys.readouterr().err


def test_exact_cap_exits_1(tmp_path, capsys):
    src = copy_fixture(tmp_path, "double_ccz.qc")
    assert cli.run([str(src), "--decoder", "exact", "--max-exact-dim", "0"]) == 1
    assert "dimension" in capsys.readouterr().err


def test_modulus_override(tmp_path, capsys):
    src = copy_fixture(tmp_path, "ccz.qc")
    out = tmp_path / "r.qc"
    assert cli.run([str(src), "-o", str(out), "--k", "1"]) == 0
    stats = stats_of(capsys)
    assert stats["k"] == "1"
    assert parse(out.read_text()).k == 1


def test_seed_flag_is_accepted(tmp_path, capsys):
    src = copy_fixture(tmp_path, "ccz.qc")
    assert cli.run([str(src), "-o", str(tmp_path / "r.qc"), "--seed", "7"]) == 0


def test_repeated_runs_are_deterministic(tmp_path, capsys):
    src = copy_fixture(tmp_path, "double_ccz.qc")
    runs = []
    outputs = []
    for name in ("a.qc", "b.qc"):
        out = tmp_path / name
        assert cli.run([str(src), "-o", str(out), "--decoder", "recursive"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        runs.append([line for line in lines if not line.startswith("millis=")])
        outputs.append(out.read_text())
    assert runs[0] == runs[1]
    assert outputs[0] == outputs[1]
