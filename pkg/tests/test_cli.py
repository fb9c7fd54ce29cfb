import json

import pytest

from coxkit import corpus
from coxkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- golden outputs ------------------------------------------------------------


def test_normalize_golden(capsys):
    code, out, err = run(capsys, "normalize", "a2", "t s t")
    assert (code, out, err) == (0, "s t s\n", "")


def test_length_golden(capsys):
    code, out, err = run(capsys, "length", "a2", "s s")
    assert (code, out) == (0, "0\n")


def test_mult_golden(capsys):
    code, out, _ = run(capsys, "mult", "a2", "s t s", "s")
    assert (code, out) == (0, "s t\n")


def test_pc_golden(capsys):
    code, out, _ = run(capsys, "pc", "a2", "s t s")
    assert code == 0
    assert out.splitlines() == ["representative: s", "generators: {t}",
                                "rank: 1", "status: Exact", "refinements: 1"]


def test_roots_golden(capsys):
    code, out, _ = run(capsys, "roots", "a2", "--depth", "8")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "positive roots through depth 8: 3"
    assert len(lines) == 4


def test_reflect_golden(capsys):
    code, out, _ = run(capsys, "reflect", "dihedral_inf", "3,2")
    assert (code, out) == (0, "s t s t s\n")


def test_locate_golden(capsys):
    code, out, _ = run(capsys, "locate", "a2", "1/2,1/2")
    assert code == 0
    assert out.splitlines()[0] == "element: e"


def test_intersect_golden(capsys):
    code, out, _ = run(capsys, "intersect", "a3", "e", "a,b", "e", "b,c")
    assert code == 0
    assert out.splitlines() == ["representative: e", "generators: {b}",
                                "rank: 1"]


def test_validate_golden(capsys):
    code, out, _ = run(capsys, "validate", "b3")
    assert code == 0
    assert "rank: 3" in out and "field degree: 4" in out


def test_oracle_compare(capsys):
    code, out, _ = run(capsys, "oracle-compare", "a2", "--samples", "50")
    assert code == 0
    assert "oracle agrees" in out


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "infinite-closure")
    assert code == 0
    assert out.startswith("infinite-closure: 2 checks, ok")
    assert "all suites passed" in out


# -- json mode -----------------------------------------------------------------


def test_json_normalize(capsys):
    code, out, _ = run(capsys, "--json", "normalize", "a2", "t s t")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "normalize"
    assert doc["inputs"] == {"group": "a2", "word": "t s t"}
    assert doc["result"] == {"word": "s t s", "length": 3}
    assert doc["status"] == "ok"


def test_json_matches_text_semantics(capsys):
    _, text_out, _ = run(capsys, "pc", "a2", "s t s")
    code, out, _ = run(capsys, "--json", "pc", "a2", "s t s")
    doc = json.loads(out)
    assert doc["result"]["representative"] == "s"
    assert doc["result"]["generators"] == ["t"]
    assert doc["result"]["rank"] == 1
    assert doc["result"]["status"] == "exact"
    assert "representative: s" in text_out


def test_json_error_payload(capsys):
    code, out, err = run(capsys, "--json", "normalize", "a2", "q")
    assert code == 1
    doc = json.loads(out)
    assert doc["status"] == "error"
    assert doc["result"]["error"] == "UnknownGenerator"


# -- exit codes ----------------------------------------------------------------


def test_domain_error_exit_code(capsys):
    code, out, err = run(capsys, "normalize", "a2", "q")
    assert code == 1
    assert err.startswith("UnknownGenerator:")


def test_invalid_file_is_domain_error(capsys, tmp_path):
    bad = tmp_path / "bad.cox"
    bad.write_text("rank 2\nlabels s t\n1 3\n3 2\n")
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 1
    assert err.startswith("InvalidMatrix:")


def test_decimal_rejected_as_usage_error(capsys):
    code, _, err = run(capsys, "locate", "a2", "0.5,0.5")
    assert code == 2
    assert "decimal" in err


def test_unknown_group_is_usage_error(capsys):
    code, _, err = run(capsys, "length", "nope", "s")
    assert code == 2


def test_unknown_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate", "a2"])
    assert exc.value.code == 2


def test_group_file_argument(capsys, tmp_path):
    from coxkit.coxgroup import serialize_group
    path = tmp_path / "mine.cox"
    path.write_text(serialize_group(corpus.load("b2")))
    code, out, _ = run(capsys, "normalize", str(path), "s t s t s")
    assert code == 0
    assert out == "t s t\n"
