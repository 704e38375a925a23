import json

import pytest

from clsec.cli import _parse_snr, main


def test_parse_snr_range():
    assert _parse_snr("0:6:1") == (0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0)
    assert _parse_snr("1:3:0.5") == (1.0, 1.5, 2.0, 2.5, 3.0)


def test_parse_snr_list():
    assert _parse_snr("2,4,6") == (2.0, 4.0, 6.0)
    assert _parse_snr("3") == (3.0,)


def test_parse_snr_rejects_bad_range():
    import argparse
    with pytest.raises(argparse.ArgumentTypeError):
        _parse_snr("0:6")
    with pytest.raises(argparse.ArgumentTypeError):
        _parse_snr("0:6:-1")


def test_header_demo_default(capsys):
    assert main(["header-demo"]) == 0
    out = capsys.readouterr().out
    assert "words N = 121" in out
    assert "total = 404 bits" in out
    assert "9.49%" in out


def test_selftest_command():
    assert main(["selftest"]) == 0


def test_run_with_flags(tmp_path, corpus_file):
    out = tmp_path / "res"
    rc = main(["run", "--corpus", str(corpus_file), "--snr", "3", "--trials", "1",
               "--schemes", "bcjr,wl_llr", "--seed", "5", "--out", str(out)])
    assert rc == 0
    rows = (tmp_path / "res.csv").read_text().splitlines()
    assert len(rows) == 1 + 2   # header + two scheme rows


def test_run_config_file_values_survive(tmp_path, corpus_file, monkeypatch):
    # values given only in the config file must not be clobbered by defaults
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps({
        "corpus": str(corpus_file),
        "channel": {"snr_db": [2.0]},
        "seed": 1234,
        "trials": 1,
        "schemes": ["bcjr"],
        "out": str(tmp_path / "a"),
    }))
    assert main(["run", "--config", str(cfg_path)]) == 0
    first = (tmp_path / "a.csv").read_bytes()

    # same settings through flags must give the identical file
    rc = main(["run", "--corpus", str(corpus_file), "--snr", "2", "--trials", "1",
               "--schemes", "bcjr", "--seed", "1234", "--out", str(tmp_path / "b")])
    assert rc == 0
    assert (tmp_path / "b.csv").read_bytes() == first


def test_run_flag_overrides_config(tmp_path, corpus_file):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps({
        "corpus": str(corpus_file),
        "channel": {"snr_db": [2.0]},
        "trials": 1,
        "schemes": ["bcjr"],
        "seed": 7,
        "out": str(tmp_path / "x"),
    }))
    assert main(["run", "--config", str(cfg_path), "--seed", "8",
                 "--out", str(tmp_path / "y")]) == 0
    body = (tmp_path / "y.csv").read_text()
    assert body  # ran with the overriding seed and out path
    assert not (tmp_path / "x.csv").exists()


def test_env_endpoint_overrides_flag(tmp_path, corpus_file, monkeypatch):
    # a bogus env endpoint must win over the flag; the remote path fails while
    # talking to the env address, never the flag address
    monkeypatch.setenv("CLSEC_SCORER_ENDPOINT", "http://127.0.0.1:1")
    from clsec.errors import ScorerUnavailable, SourceUnavailable
    with pytest.raises((ScorerUnavailable, SourceUnavailable)) as err:
        main(["run", "--corpus", str(corpus_file), "--snr", "2", "--trials", "1",
              "--scorer", "remote", "--endpoint", "http://also-bogus.invalid",
              "--out", str(tmp_path / "z")])
    assert "127.0.0.1" in str(err.value)
    assert "also-bogus" not in str(err.value)


@pytest.fixture
def corpus_file():
    from clsec import data
    return data.corpus_dir() / "p08_navigation.txt"
