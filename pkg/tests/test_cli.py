"""CLI: grammar, golden commands, JSON schema, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from chainops.cli import ElementParser, main
from chainops.errors import InvalidInput
from chainops.maclane import cyc_eg, sym_eg
from chainops.minimal import minimal_complex
from chainops.rings import GF, ZZ
from chainops.surjections import surjection_complex


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "chainops.cli", *argv],
        capture_output=True,
        text=True,
    )
    return proc


def test_parse_surjection_expression():
    S = surjection_complex("bf", 3)
    x = ElementParser(S, ZZ).parse("(1,2,1,3) - 2*(2,1,2,3)")
    assert dict(x.terms) == {(1, 2, 1, 3): 1, (2, 1, 2, 3): -2}


def test_parse_degenerate_warns_and_drops(capsys):
    S = surjection_complex("bf", 2)
    x = ElementParser(S, ZZ).parse("(1,1,2)")
    assert x.is_zero()
    assert "degenerate" in capsys.readouterr().err


def test_parse_eg_tuple():
    E = sym_eg(3)
    x = ElementParser(E, ZZ).parse("(1 2 3; 2 1 3)")
    gen = next(iter(x.terms))
    assert [p.images for p in gen] == [(1, 2, 3), (2, 1, 3)]


def test_parse_cyclic_and_minimal():
    EC = cyc_eg(5)
    x = ElementParser(EC, ZZ).parse("(0; 2; 3)")
    assert next(iter(x.terms)) == (0, 2, 3)
    M = minimal_complex(5)
    y = ElementParser(M, ZZ).parse("3*(2,4)")
    assert dict(y.terms) == {(2, 4): 3}


def test_parse_syntax_error_position():
    S = surjection_complex("bf", 2)
    with pytest.raises(InvalidInput) as err:
        ElementParser(S, ZZ).parse("(1,2 + (2,1)")
    assert "column" in str(err.value)


def test_parse_serialize_round_trip():
    import random

    rng = random.Random(17)
    S = surjection_complex("bf", 3)
    gens = list(S.basis(2))
    for _ in range(20):
        terms = {g: rng.randint(-5, 5) for g in rng.sample(gens, 4)}
        from chainops.elements import Element

        x = Element(S, ZZ, 2, dict(terms))
        text = repr(x)
        back = ElementParser(S, ZZ).parse(text)
        assert back == x


def test_cli_golden_boundary_13_1():
    out = run_cli(
        "boundary", "--flavor", "bf", "--n", "5", "(2,1,2,3,4,2,3,1,5,4,1,2)"
    )
    assert out.returncode == 0
    # ten signed terms from the golden caesura table
    assert out.stdout.count("(") == 10
    assert "+ (2,1,2,3,2,3,1,5,4,1,2)" in out.stdout


def test_cli_constant():
    out = run_cli("constant", "--m", "2", "--p", "5")
    assert out.returncode == 0 and out.stdout.strip() == "4"


def test_cli_contract_text_case():
    out = run_cli("contract", "--flavor", "bf", "--n", "4", "(1,4,3,2,4)")
    assert out.returncode == 0
    assert out.stdout.strip() == "(1,2,3,4,3,4) + (1,2,4,3,2,4)"


def test_cli_json_schema():
    out = run_cli(
        "boundary",
        "--flavor",
        "bf",
        "--n",
        "3",
        "--format",
        "json",
        "(1,2,1,3)",
    )
    data = json.loads(out.stdout)
    assert data["complex"] == "S^bf(3)"
    assert data["n"] == 3
    assert data["ring"] == {"kind": "Z"}
    assert data["degree"] == 0
    assert all(set(t) == {"coeff", "gen"} for t in data["terms"])


def test_cli_deterministic_output():
    args = ("tr", "--n", "3", "(1 2 3; 2 1 3; 3 2 1)")
    a, b = run_cli(*args), run_cli(*args)
    assert a.stdout == b.stdout and a.returncode == 0


def test_cli_invalid_input_exit_2():
    out = run_cli("boundary", "--flavor", "bf", "--n", "3", "(1,2")
    assert out.returncode == 2
    out = run_cli("boundary", "(1,2)")
    assert out.returncode == 2


def test_cli_guard_exit_3():
    out = run_cli(
        "bf-action",
        "--n",
        "3",
        "--m",
        "3",
        "--term-guard",
        "2",
        "(1,2,3,1)",
    )
    assert out.returncode == 3


def test_cli_verify_suite_ok():
    out = run_cli("verify", "--suite", "golden-boundaries")
    assert out.returncode == 0
    assert "PASS" in out.stdout


def test_cli_verify_json():
    out = run_cli("verify", "--suite", "minimal", "--format", "json")
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["ok"] is True
    assert data["suite"] == "minimal"


def test_cli_iso_and_act():
    out = run_cli("iso", "--from", "bf", "--to", "ms", "--n", "3", "(1,2,1,3)")
    assert out.returncode == 0
    out = run_cli(
        "act", "--flavor", "ms", "--n", "3", "--g", "2 1 3", "(1,2,1,3)"
    )
    assert out.returncode == 0


def test_cli_aw_ez():
    out = run_cli("ez", "--simplex", "1", "--simplex2", "1", "(0,1)", "(0,1)")
    assert out.returncode == 0 and "((0,0)" in out.stdout
    out = run_cli("aw", "--simplex", "1", "(0,1)", "(0,1)")
    assert out.returncode == 0 and "(x)" in out.stdout


def test_cli_compose_and_partial():
    out = run_cli(
        "compose",
        "--flavor",
        "bf",
        "--arities",
        "2,1,2",
        "(1,2,1)",
        "(1)",
        "(1,2,1)",
    )
    assert out.returncode == 0
    out = run_cli(
        "partial-compose",
        "--flavor",
        "bf",
        "--i",
        "2",
        "--r",
        "3",
        "--s",
        "2",
        "(1,2,1,3,2)",
        "(1,2,1)",
    )
    assert out.returncode == 0
    assert "(1,2,1,4,2,3,2)" in out.stdout


def test_cli_eval_cochain(tmp_path):
    faces = {
        "dim": 2,
        "simplices": [
            {"id": "v0", "dim": 0},
            {"id": "v1", "dim": 0},
            {"id": "v2", "dim": 0},
            {"id": "e01", "dim": 1, "faces": ["v1", "v0"]},
            {"id": "e02", "dim": 1, "faces": ["v2", "v0"]},
            {"id": "e12", "dim": 1, "faces": ["v2", "v1"]},
            {"id": "t", "dim": 2, "faces": ["e12", "e02", "e01"]},
        ],
    }
    ft = tmp_path / "faces.json"
    ft.write_text(json.dumps(faces))
    a = tmp_path / "a.json"
    a.write_text(json.dumps({"degree": 1, "values": {"e01": 1}}))
    b = tmp_path / "b.json"
    b.write_text(json.dumps({"degree": 1, "values": {"e12": 1}}))
    out = run_cli(
        "eval-cochain",
        "--n",
        "2",
        "--x",
        "(1,2)",
        "--faces",
        str(ft),
        "--cochains",
        str(a),
        str(b),
        "--simplex-id",
        "t",
    )
    assert out.returncode == 0 and out.stdout.strip() == "-1"


def test_cli_phi_pi_lambda_diagonal():
    assert run_cli("phi-M", "--n", "3", "(0,2)").returncode == 0
    assert run_cli("pi-M", "--n", "3", "(0; 2; 0)").returncode == 0
    assert run_cli("lambda", "--n", "5", "--l", "2", "(0,3)").returncode == 0
    assert (
        run_cli(
            "diagonal", "--minimal", "3", "--arity", "3", "(0,2)"
        ).returncode
        == 0
    )
    assert (
        run_cli("diagonal", "--simplex", "2", "--arity", "2", "(0,1,2)").returncode
        == 0
    )
    assert run_cli("pr", "--flavor", "bf", "--n", "3", "(1,2,1,3)").returncode == 0


def test_cli_prime_field_ring():
    out = run_cli(
        "boundary", "--flavor", "bf", "--n", "3", "--ring", "F3",
        "3*(1,2,1,3)",
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "0"


def test_cli_verify_all_suites_listed():
    out = run_cli("verify", "--suite", "no-such-suite")
    assert out.returncode == 2
    assert "contracted" in out.stderr


def test_cli_verify_parallel_jobs():
    out = run_cli(
        "verify", "--suite", "contracted", "--n", "2",
        "--max-degree", "2", "--jobs", "2",
    )
    assert out.returncode == 0
    assert "FAIL" not in out.stdout


def test_cli_compose_barratt_eccles():
    out = run_cli(
        "compose", "--be", "--arities", "2,1,2",
        "(1 2; 2 1)", "(1)", "(1 2)",
    )
    assert out.returncode == 0 and "(x)" not in out.stdout


def test_cli_ez_maclane():
    out = run_cli("ez", "--eg", "2", "--eg2", "2", "(1 2; 2 1)", "(1 2; 2 1)")
    assert out.returncode == 0


def test_cli_bf_action_json():
    out = run_cli(
        "bf-action", "--n", "2", "--m", "1", "--format", "json", "(1,2,1)"
    )
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["degree"] == 2


def test_term_guard_env_var():
    import os, subprocess

    env = dict(os.environ, CHAINOPS_TERM_GUARD="2")
    proc = subprocess.run(
        [sys.executable, "-m", "chainops.cli", "bf-action", "--n", "3",
         "--m", "3", "(1,2,3,1)"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 3
