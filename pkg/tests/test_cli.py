"""CLI surface: parsing, output schema, exit codes."""

from __future__ import annotations

import json

import pytest

from rcayley.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_spectrum_normal_json(capsys):
    code, out, _ = run(
        capsys, "spectrum", "--group", "d2p:11", "--subset", "normal:X=;Y=1", "--oracle"
    )
    assert code == 0
    rec = json.loads(out)
    assert rec["schema"] == 1
    assert rec["valency"] == 11
    assert rec["status"] == "ramanujan"
    assert rec["oracle_max_delta"] < 1e-8


def test_spectrum_interval_and_mask_roundtrip(capsys):
    code, out, _ = run(
        capsys, "spectrum", "--group", "d2p:13", "--subset", "interval:l1=3,l2=4"
    )
    assert code == 0
    mask = json.loads(out)["mask"]
    code2, out2, _ = run(
        capsys, "spectrum", "--group", "d2p:13", "--subset", f"mask:{mask}"
    )
    assert code2 == 0
    assert json.loads(out2)["mask"] == mask


def test_bounds_command(capsys):
    code, out, _ = run(capsys, "bounds", "--group", "fpq:31,5")
    assert code == 0
    rec = json.loads(out)
    assert rec["l_hat"] == 21 and rec["l0"] == 21
    code2, out2, _ = run(capsys, "bounds", "--group", "d2p:11", "--exhaustive")
    assert json.loads(out2)["l_hat"] == 7


def test_classify_command(capsys):
    code, out, _ = run(capsys, "classify", "--p", "29")
    assert code == 0
    rec = json.loads(out)
    assert rec["verdict"] == "exceptional" and rec["tilde_l"] == 14


def test_scan_csv_header(capsys):
    code, out, _ = run(capsys, "scan", "--from", "29", "--to", "60")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,parity,r,k,c,verdict,mu1,rb"
    assert len(lines) == 1 + 8  # primes 29, 31, 37, 41, 43, 47, 53, 59


def test_hl_command(capsys):
    code, out, _ = run(capsys, "hl", "--r", "1", "--c", "1", "--cutoff", "1e4")
    assert code == 0
    rec = json.loads(out)
    assert abs(rec["half_constant"] - 1.84998) < 2e-2


def test_avoid_command(capsys):
    code, out, _ = run(capsys, "avoid", "--a", "35")
    assert code == 0
    assert json.loads(out)["witness"] == 8


def test_tilde_command(capsys):
    code, out, _ = run(capsys, "tilde", "--p", "7")
    assert code == 0
    assert json.loads(out)["tilde_l"] == 6


def test_exit_code_parse_error(capsys):
    assert run(capsys, "spectrum", "--group", "d2p:10", "--subset", "normal:Y=1")[0] == 2
    assert run(capsys, "spectrum", "--group", "d2p:11", "--subset", "bogus:1")[0] == 2
    assert run(capsys, "classify", "--p", "28")[0] == 2
    assert run(capsys, "tilde", "--p", "17")[0] == 2


def test_exit_code_bad_mask(capsys):
    code, _, err = run(capsys, "spectrum", "--group", "d2p:11", "--subset", "mask:01")
    assert code == 2  # identity bit set


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--samples", "20", "--seed", "1")
    assert code == 0
    assert "all checks passed" in out
