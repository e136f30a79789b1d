import json

import pytest

from gmpi.cli import (
    InputError,
    instance_to_document,
    main,
    parse_ideal_document,
    parse_instance_document,
)
from gmpi.families import mixed_product_instance


def koszul3_doc():
    return {
        "blocks": [{"name": v, "size": 1} for v in "xyz"],
        "generators": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    }


def expansion_doc():
    return {
        "blocks": [{"name": "x", "size": 2}, {"name": "y", "size": 2}],
        "inducing_ideal": [[2, 1], [1, 2]],
        "substitutions": {
            "x:1": {"family": "power-of-maximal", "degree": 1},
            "x:2": {"family": "power-of-maximal", "degree": 2},
            "y:1": {"family": "power-of-maximal", "degree": 1},
            "y:2": {"family": "power-of-maximal", "degree": 2},
        },
        "label": "expansion",
    }


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_resolve_koszul_triangle(tmp_path, capsys):
    assert main(["resolve", write(tmp_path, "k3.json", koszul3_doc())]) == 0
    out = capsys.readouterr().out
    assert "regularity(ideal) = 1" in out
    assert "projdim(quotient) = 3" in out
    # Betti numbers 1, 3, 3, 1 appear in the triangle
    assert all(str(v) in out for v in (1, 3))


def test_resolve_json_payload(tmp_path, capsys):
    assert main(["resolve", write(tmp_path, "k3.json", koszul3_doc()), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["betti"]["entries"] == [[0, 0, 1], [1, 1, 3], [2, 2, 3], [3, 3, 1]]
    assert payload["linear"] is True


def test_gmpi_with_check_passes(tmp_path, capsys):
    assert main(["gmpi", write(tmp_path, "e.json", expansion_doc()), "--check"]) == 0
    out = capsys.readouterr().out
    assert "reg L = 3" in out
    assert "[PASS]" in out and "[FAIL]" not in out


def test_gmpi_exit_one_on_failed_check(tmp_path, capsys, monkeypatch):
    from gmpi import verify as ver
    from gmpi.verify import CheckResult
    monkeypatch.setattr(ver, "run_instance_checks",
                        lambda inst, **kw: [CheckResult("stub", "x", False)])
    assert main(["gmpi", write(tmp_path, "e.json", expansion_doc()), "--check"]) == 1


def test_family_path_ideal(capsys):
    assert main(["family", "path-ideal", "parts=2,2", "t=2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["generators"]) == 4


def test_family_random_emits_instance(capsys):
    assert main(["family", "random", "--seed", "9"]) == 0
    doc = json.loads(capsys.readouterr().out)
    inst = parse_instance_document(doc)
    assert len(inst.inducing.gens) >= 2


def test_family_unknown_tag_is_input_error(capsys):
    assert main(["family", "frobnicate"]) == 2


def test_bad_document_exit_two(tmp_path, capsys):
    bad = {"blocks": [{"name": "x", "size": 2}], "inducing_ideal": [[2]],
           "substitutions": {"z:2": [[1, 1]]}}
    assert main(["gmpi", write(tmp_path, "bad.json", bad)]) == 2
    assert main(["resolve", str(tmp_path / "missing.json")]) == 2


def test_nesting_violation_is_input_error(tmp_path):
    doc = {
        "blocks": [{"name": "x", "size": 2}, {"name": "y", "size": 1}],
        "inducing_ideal": [[2, 1], [1, 2]],
        "substitutions": {
            "x:2": [[2, 0]],
            "x:1": [[0, 1]],
            "y:1": [[1]],
            "y:2": [[2]],
        },
    }
    assert main(["gmpi", write(tmp_path, "nest.json", doc)]) == 2


def test_document_roundtrip_is_identity():
    inst = mixed_product_instance((2, 2), (2, 1), (1, 2))
    doc = instance_to_document(inst)
    again = instance_to_document(parse_instance_document(doc))
    assert doc == again


def test_verify_single_seed(capsys):
    assert main(["verify", "--seed", "9"]) == 0
    out = capsys.readouterr().out
    assert "checks passed" in out and "[FAIL]" not in out


def test_verify_json_report(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    assert main(["verify", "--seed", "9", "--json", "--out", str(out_path)]) == 0
    report = json.loads(out_path.read_text())
    assert all(item["passed"] for item in report)
    assert {"name", "label", "status", "details"} <= set(report[0])


def test_parse_ideal_document_shape_errors():
    with pytest.raises(InputError):
        parse_ideal_document({"blocks": [{"size": 1}], "generators": [[1]]})
