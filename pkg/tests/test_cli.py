import json
import subprocess
import sys

import pytest

from pellsum.cli import main, parse_base
from pellsum.quadfield import quad
from fractions import Fraction


def run_main(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_coords_example(capsys, tmp_path):
    out_file = tmp_path / "coords.json"
    code, out, err = run_main(
        ["coords", "--d", "13", "--m", "4", "--coord", "1",
         "--bound", "2000000", "--out", str(out_file)],
        capsys,
    )
    assert code == 0 and err == ""
    doc = json.loads(out_file.read_text(encoding="utf-8"))
    assert doc["results"]["values"] == [11, 119, 1298, 14159, 154451, 1684802]
    assert doc["config"]["subcommand"] == "coords"
    assert doc["version"]
    assert "11" in out


def test_structured_format_prints_the_document(capsys):
    code, out, err = run_main(
        ["pell", "--d", "13", "--format", "structured"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["fundamental"] == [649, 180]
    assert doc["results"]["period"] == [1, 1, 1, 1, 6]
    assert out.endswith("\n")


def test_document_is_canonical(capsys, tmp_path):
    # keys sorted, trailing newline, no volatile fields
    out_file = tmp_path / "doc.json"
    code, out, err = run_main(
        ["pairs-search", "--rec", "1,-1;0,3", "--d", "5", "--m", "4",
         "--n", "40", "--bound", "100", "--out", str(out_file)],
        capsys,
    )
    assert code == 0
    text = out_file.read_text(encoding="utf-8")
    assert text.endswith("\n")
    doc = json.loads(text)
    assert json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n" == text
    flat = text.lower()
    assert "wall" not in flat and "shard" not in flat
    assert "wall time" in out  # the volatile line goes to stdout instead


def test_bound_example(capsys):
    code, out, err = run_main(
        ["bound", "--s", "1", "--degrees", "0", "--field-degree", "2",
         "--format", "structured"],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["value"] == "2199023255552"
    assert doc["results"]["digits"] == 13


def test_recur_and_binet(capsys):
    code, out, err = run_main(["recur", "--rec", "6,-1;0,1", "--n", "4"], capsys)
    assert code == 0 and "0, 1, 6, 35, 204" in out
    code, out, err = run_main(["binet", "--rec", "6,-1;0,1", "--format", "structured"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["roots"] == ["3 + 2*sqrt(2)", "3 - 2*sqrt(2)"]
    assert doc["results"]["coefficients"][0] == "1/8*sqrt(2)"


def test_hypotheses_report_field_names(capsys):
    code, out, err = run_main(
        ["hypotheses", "--rec", "2,2;0,1", "--format", "structured"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    results = doc["results"]
    assert results["applicable"] is True
    assert results["nondegenerate"] is True
    assert results["pairwise_independent"] is True
    assert results["no_root_of_unity"] is True
    assert results["last_coeff_not_unit"] is True


def test_solve_norm(capsys):
    code, out, err = run_main(
        ["solve-norm", "--d", "13", "--m", "4", "--format", "structured"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["orbit_count"] == 1
    assert doc["results"]["orbits"][0]["representative"] == [11, 3]


def test_vanishing(capsys):
    code, out, err = run_main(
        ["vanishing", "--rec", "6,-1;0,1", "--n", "30", "--format", "structured"],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["hits"] == [{"n1": 0, "n2": 0, "delta": [1, 2]}]


def test_partitions_subcommand(capsys):
    code, out, err = run_main(
        ["partitions", "--bases", "3+2*sqrt(2),3-2*sqrt(2)", "--exp-bound", "5",
         "--format", "structured"],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["bell"] == 2
    verdicts = {tuple(map(tuple, p["blocks"])): p["verdict"]
                for p in doc["results"]["partitions"]}
    assert verdicts[((1, 2),)] == "certified-dependent"
    assert verdicts[((1,), (2,))] == "independent-up-to-5"


def test_verify_remark_subcommand(capsys):
    code, out, err = run_main(["verify-remark", "--id", "2.4", "--n", "100"], capsys)
    assert code == 0
    assert "agreement: every check reproduced" in out
    code, out, err = run_main(
        ["verify-remark", "--id", "2.5", "--n", "30", "--format", "structured"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["agreement"] is True
    assert len(doc["results"]["discrepancies"]) == 2


def test_sunit_search_subcommand(capsys):
    code, out, err = run_main(
        ["sunit-search", "--primes", "2,3,5", "--t", "2", "--exp-bound", "3",
         "--d", "13", "--m", "4", "--bound", "1500", "--format", "structured"],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    entries = {tuple(hit["entries"]) for hit in doc["results"]["hits"]}
    assert ("-6", "125") in entries
    assert ("3", "8") in entries


def test_malformed_arguments_exit_1(capsys):
    # argparse-level problems leave through SystemExit with code 1, not 2
    for argv in (
        ["unknown-subcommand"],
        ["coords", "--d", "13"],  # missing required flags
        ["coords", "--d", "x", "--m", "4", "--coord", "1", "--bound", "5"],
        [],
    ):
        with pytest.raises(SystemExit) as info:
            main(argv)
        capsys.readouterr()
        assert info.value.code == 1, argv


def test_domain_errors_exit_1_without_raising(capsys):
    # parseable arguments, bad values: handled and reported, not raised
    for argv in (
        ["recur", "--rec", "nonsense", "--n", "4"],
        ["pell", "--d", "12"],  # 12 is not squarefree
        ["sunit-search", "--primes", "2,4", "--t", "2", "--exp-bound", "1",
         "--d", "13", "--m", "4", "--bound", "10"],
        ["verify-remark", "--id", "2.9", "--n", "100"],
        ["verify-remark", "--id", "2.4", "--n", "5"],
        ["bound", "--s", "0", "--degrees", "1", "--field-degree", "2"],
        ["partitions", "--bases", "2", "--exp-bound", "3"],
        ["binet", "--rec", "2,-1;0,2"],  # repeated root
    ):
        code, out, err = run_main(argv, capsys)
        assert code == 1 and err, argv
    code, out, err = run_main(["pell", "--d", "12"], capsys)
    assert code == 1 and "squarefree" in err


def test_invariant_violation_exits_2(capsys, monkeypatch):
    import pellsum.cli as cli
    from pellsum.errors import InvariantViolationError

    def explode(args):
        raise InvariantViolationError("cross-check failed")

    monkeypatch.setitem(cli._HANDLERS, "pell", explode)
    code, out, err = run_main(["pell", "--d", "13"], capsys)
    assert code == 2
    assert "invariant violation" in err


def test_shard_env_does_not_change_documents(tmp_path):
    argv = [
        sys.executable, "-m", "pellsum", "pairs-search",
        "--rec", "2,2;0,1", "--d", "13", "--m", "4",
        "--n", "80", "--bound", "2000000", "--format", "structured",
    ]
    import os
    env1 = dict(os.environ, PELLSUM_SHARDS="1")
    env4 = dict(os.environ, PELLSUM_SHARDS="4")
    run1 = subprocess.run(argv, capture_output=True, text=True, env=env1, check=True)
    run4 = subprocess.run(argv, capture_output=True, text=True, env=env4, check=True)
    assert run1.stdout == run4.stdout
    assert json.loads(run1.stdout)["results"]["hit_count"] >= 1


def test_parse_base_forms():
    assert parse_base("3") == Fraction(3)
    assert parse_base("-7/2") == Fraction(-7, 2)
    assert parse_base("3+2*sqrt(2)") == quad(3, 2, 2)
    assert parse_base("3-2*sqrt(2)") == quad(3, -2, 2)
    assert parse_base("1/2+1/2*sqrt(5)") == quad(Fraction(1, 2), Fraction(1, 2), 5)
    assert parse_base("sqrt(3)") == quad(0, 1, 3)
    assert parse_base("-sqrt(3)") == quad(0, -1, 3)
    assert parse_base(" 2*sqrt(7) ") == quad(0, 2, 7)
    for bad in ("", "sqrt()", "2 sqrt(2)", "1+*sqrt(2)", "one"):
        with pytest.raises(ValueError):
            parse_base(bad)


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert "pellsum" in capsys.readouterr().out
