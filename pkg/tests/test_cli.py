import json

import pytest

from perfcode.cli import main, resolve_elements
from perfcode import GeneralizedQuaternion, build_group

Q24 = build_group(GeneralizedQuaternion(24))


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_resolve_elements():
    assert resolve_elements(Q24, "x^4") == (4,)
    assert resolve_elements(Q24, "x^3,y") == (3, 12)
    assert resolve_elements(Q24, "x^3, x*y") == (3, 13)
    assert resolve_elements(Q24, "x^6y") == (18,)
    assert resolve_elements(Q24, "e,x,7") == (0, 1, 7)
    G = build_group(GeneralizedQuaternion(8))
    with pytest.raises(ValueError):
        resolve_elements(G, "z^2")
    with pytest.raises(ValueError):
        resolve_elements(G, "99")


def test_resolve_elements_tuple_labels(capsys):
    from perfcode import Cyclic, Product
    G = build_group(Product(Cyclic(2), Cyclic(3)))
    assert resolve_elements(G, "(1,0),(0,1)") == (3, 1)


def test_decide_q24(capsys):
    code, out, err = run_cli(capsys, "decide", "Q(24)", "--subgroup", "x^4")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] is True
    assert data["subgroup"] == [0, 4, 8]
    assert data["witness"] == [1, 6, 11, 12, 13, 18, 19]


def test_decide_negative_exit_code(capsys):
    code, out, err = run_cli(capsys, "decide", "Z(8)", "--subgroup", "4")
    assert code == 1
    data = json.loads(out)
    assert data["verdict"] is False
    assert data["negative_witness"] is not None


def test_witness_alias(capsys):
    code1, out1, _ = run_cli(capsys, "decide", "Q(24)", "--subgroup", "x^3,y")
    code2, out2, _ = run_cli(capsys, "witness", "Q(24)", "--subgroup", "x^3,y")
    assert (code1, out1) == (code2, out2)
    assert json.loads(out1)["witness"] == [1, 11]


def test_classify(capsys):
    code, out, _ = run_cli(capsys, "classify", "Z(8)")
    assert code == 1
    assert json.loads(out)["code_perfect"] is False

    code, out, _ = run_cli(capsys, "classify", "Z(15)")
    assert code == 0
    data = json.loads(out)
    assert data["code_perfect"] is True
    assert "order 4" in data["reason"]


def test_subgroups(capsys):
    code, out, _ = run_cli(capsys, "subgroups", "Z(6)")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert [ln["elements"] for ln in lines] == [
        [0], [0, 3], [0, 2, 4], [0, 1, 2, 3, 4, 5]]


def test_codes_q24(capsys):
    code, out, _ = run_cli(capsys, "codes", "Q(24)")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    positives = {tuple(ln["subgroup"]): ln["witness"] for ln in lines if ln["verdict"]}
    assert len(lines) == 18
    assert len(positives) == 6
    assert positives[(0, 4, 8)] == [1, 6, 11, 12, 13, 18, 19]


def test_verify(capsys):
    code, out, _ = run_cli(capsys, "verify", "Z(6)", "--s", "1,5", "--code", "0,3")
    assert code == 0
    data = json.loads(out)
    assert data["agreement"] is True
    assert data["perfect_code"] is True
    assert data["multiplicity"]["counts"] == [1] * 6

    code, out, _ = run_cli(capsys, "verify", "Z(6)", "--s", "1,5", "--code", "0,2")
    assert code == 1
    assert json.loads(out)["perfect_code"] is False


def test_graph(tmp_path, capsys):
    out_path = tmp_path / "q24.dot"
    code, out, _ = run_cli(
        capsys, "graph", "Q(24)", "--s", "x,x^6,x^11,y,xy,x^6y,x^7y",
        "--highlight", "e,x^4,x^8", "--out", str(out_path))
    assert code == 0
    data = json.loads(out)
    assert data == {"out": str(out_path), "nodes": 24, "edges": 84,
                    "highlighted": 3}
    text = out_path.read_text()
    assert text.count(" -- ") == 84
    assert text.count("fillcolor=gold") == 3


def test_catalogue(capsys):
    code, out, _ = run_cli(capsys, "catalogue", "--max-order", "12")
    assert code == 0
    assert "all groups agree" in out
    assert "FAIL" not in out
    assert "Q(8)" in out and "Z(12)" in out


def test_deterministic_output(capsys):
    _, out1, _ = run_cli(capsys, "codes", "Q(24)")
    _, out2, _ = run_cli(capsys, "codes", "Q(24)")
    assert out1 == out2
    _, out1, _ = run_cli(capsys, "catalogue", "--max-order", "10")
    _, out2, _ = run_cli(capsys, "catalogue", "--max-order", "10")
    assert out1 == out2


def test_spec_error_reporting(capsys):
    code, out, err = run_cli(capsys, "decide", "Q(10)", "--subgroup", "x")
    assert code == 2
    assert out == ""
    data = json.loads(err)
    assert data["error"] == "SpecSemanticError"
    assert data["offset"] == 0

    code, _, err = run_cli(capsys, "classify", "W(3)")
    assert code == 2
    data = json.loads(err)
    assert data["error"] == "SpecSyntaxError"
    assert "expected" in data


def test_bad_subgroup_token(capsys):
    code, _, err = run_cli(capsys, "decide", "Q(24)", "--subgroup", "nope")
    assert code == 2
    assert json.loads(err)["error"] == "ValueError"


def test_missing_table_file(capsys):
    code, _, err = run_cli(capsys, "classify", "table@/does/not/exist.json")
    assert code == 2
    assert json.loads(err)["error"] == "BadTableFile"


def test_table_file_workflow(tmp_path, capsys):
    G = build_group(GeneralizedQuaternion(8))
    path = tmp_path / "q8.json"
    path.write_text(json.dumps(
        {"order": 8, "labels": G.labels, "table": G.table}))
    code, out, _ = run_cli(capsys, "classify", f"table@{path}")
    assert code == 1  # Q8 has order-4 elements
    code, out, _ = run_cli(capsys, "decide", f"table@{path}", "--subgroup", "x^2")
    # table provenance: decided by the normal criterion, same verdict as closed form
    assert code == 1


def test_unknown_flag_rejected(capsys):
    code = main(["classify", "Z(6)", "--frobnicate"])
    capsys.readouterr()
    assert code == 2


def test_strict_flag(capsys):
    code, out, _ = run_cli(capsys, "--strict", "classify", "Z(15)")
    assert code == 0
