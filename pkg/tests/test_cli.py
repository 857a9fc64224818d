"""Command line interface: parsing, output shapes, exit codes."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from gpi import verify as verify_mod
from gpi.cli import main
from gpi.verify import TheoremReport

S3_DESC = json.dumps(
    {
        "type": "semidirect",
        "normal": {"type": "perm", "degree": 3, "generators": [[[0, 1, 2]]]},
        "quotient": {"type": "perm", "degree": 2, "generators": [[[0, 1]]]},
        "action": [[[[0, 2, 1]]]],
    }
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_human(capsys):
    code, out, err = run(capsys, "info", "S4")
    assert code == 0 and err == ""
    assert "order 24" in out and "chief series 1 < 4 < 12 < 24" in out


def test_info_json(capsys):
    code, out, _ = run(capsys, "info", "SL(2,3)", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "gpi-report/1"
    assert data["command"] == "info"
    assert data["order"] == 24 and data["hypercenter"] == 2
    assert data["p_supersoluble"] == {"2": False, "3": True}


def test_info_unknown_group(capsys):
    code, _, err = run(capsys, "info", "Z99")
    assert code == 2
    assert "unknown group" in err


def test_check_witness_and_refusal(capsys):
    code, out, _ = run(capsys, "check", "--group", "S4", "--subgroup", "[[[0, 1]]]")
    assert code == 0
    assert "witness" in out
    code, out, _ = run(capsys, "check", "--group", "S4", "--subgroup", "[[[0, 1, 2, 3]]]")
    assert code == 1
    assert "refusal" in out and "normalizer index 3" in out


def test_check_element_id_generators(capsys):
    # id 0 is the identity, so this is the trivial subgroup: witnessed.
    code, out, _ = run(capsys, "check", "--group", "Q8", "--subgroup", "[0]")
    assert code == 0 and "witness" in out


def test_check_family_json(capsys):
    code, out, _ = run(
        capsys, "check", "--group", "SL(2,5)", "--prime", "2",
        "--subgroup", "family:cyc4", "--json",
    )
    assert code == 1
    data = json.loads(out)
    assert data["schema"] == "gpi-report/1"
    assert data["count"] == 3 and data["satisfied"] == 0
    for verdict in data["verdicts"]:
        assert verdict["verdict"] == "refusal"
        assert any(
            factor["index"] == 15
            for entry in verdict["blocked"]
            for factor in entry["factors"]
        )


def test_check_family_sylow(capsys):
    code, out, _ = run(
        capsys, "check", "--group", "A5", "--prime", "2", "--subgroup", "family:sylow"
    )
    assert code == 1
    assert "normalizer index 5" in out


def test_check_usage_errors(capsys):
    code, _, err = run(capsys, "check", "--group", "A5", "--subgroup", "family:sylow")
    assert code == 2 and "--prime" in err
    code, _, err = run(
        capsys, "check", "--group", "A5", "--prime", "2", "--subgroup", "family:huge"
    )
    assert code == 2 and "unknown family" in err
    code, _, err = run(
        capsys, "check", "--group", "A5", "--prime", "4", "--subgroup", "family:sylow"
    )
    assert code == 2 and "prime" in err
    code, _, err = run(capsys, "check", "--group", "A5", "--subgroup", "[[[")
    assert code == 2 and "bad JSON" in err
    code, _, err = run(capsys, "check", "--group", "A5", "--subgroup", "[999]")
    assert code == 2 and "element id" in err
    code, _, err = run(capsys, "check", "--group", "A5", "--subgroup", '{"a": 1}')
    assert code == 2 and "JSON list" in err


def test_theorem_ok(capsys):
    code, out, _ = run(capsys, "theorem", "--id", "cls", "--group", "SL(2,5)", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["command"] == "theorem"
    assert data["report"]["ok"] is True
    assert data["report"]["hypothesis_true"] == 1


def test_theorem_violation_exit(capsys, monkeypatch):
    def forged(G, exhaustive=False, primes=None):
        rep = TheoremReport("l28", "sylow-property-p-soluble", G.name)
        rep.details.append({"p": 2, "hypothesis": True, "conclusion": False})
        return rep

    monkeypatch.setitem(verify_mod.CHECKERS, "l28", forged)
    code, out, _ = run(capsys, "theorem", "--id", "l28", "--group", "S4")
    assert code == 1
    assert "VIOLATED" in out


def test_theorem_usage_errors(capsys):
    code, _, err = run(
        capsys, "theorem", "--id", "l28", "--group", "S4", "--normal", "[1]"
    )
    assert code == 2 and "does not range over" in err
    code, _, err = run(
        capsys, "theorem", "--id", "t13", "--group", "S4", "--prime", "6"
    )
    assert code == 2 and "wants a prime" in err
    with pytest.raises(SystemExit) as exc:
        main(["theorem", "--id", "nope", "--group", "S4"])
    assert exc.value.code == 2


def test_theorem_normal_restriction(capsys):
    code, out, _ = run(
        capsys, "theorem", "--id", "t12", "--group", "S4",
        "--normal", "[[[0, 1], [2, 3]], [[0, 2], [1, 3]]]", "--json",
    )
    assert code == 0
    report = json.loads(out)["report"]
    assert report["instances"] == 1
    assert report["details"][0]["E"] == 4


def test_corpus_filter(capsys):
    code, out, _ = run(capsys, "corpus", "--filter", "SL(2,3)")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("SL(2,3)")]
    assert len(lines) == 7
    assert "0 violations" in out


def test_corpus_json_stdout(capsys):
    code, out, _ = run(capsys, "corpus", "--filter", "Q8", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "gpi-report/1"
    assert data["groups"] == ["Q8"]
    assert data["ok"] is True and len(data["reports"]) == 7


def test_corpus_json_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "corpus", "--filter", "C12", "--json", str(target))
    assert code == 0
    assert "wrote" in out
    data = json.loads(target.read_text())
    assert data["command"] == "corpus" and data["violations"] == 0


def test_semidirect_description(capsys):
    code, out, _ = run(capsys, "info", S3_DESC, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 6
    assert data["abelian"] is False and data["supersoluble"] is True


def test_description_errors(capsys):
    code, _, err = run(capsys, "info", '{"type": "wedge"}')
    assert code == 2 and "unknown group description" in err
    code, _, err = run(capsys, "info", '{"type": "perm"}')
    assert code == 2
    code, _, err = run(capsys, "info", "[1, 2]")
    assert code == 2 and "name or an object" in err


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "gpi.cli", "info", "Q8"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "order 8" in proc.stdout
