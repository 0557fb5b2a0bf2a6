import json
import subprocess
import sys
from fractions import Fraction

import pytest

from abeliantv import serialization
from abeliantv.catalog import catalog, continued_fraction, lens_space_chain, lookup
from abeliantv.cli import main, parse_k_range
from abeliantv.exact_arith import angle_from
from abeliantv.intlinalg import determinant
from abeliantv.serialization import InputError, dump_input, parse_input, to_jsonable


def write(tmp_path, obj, name="input.json"):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(path)


def test_k_range_parsing():
    assert parse_k_range("5") == [5]
    assert parse_k_range("2..4") == [2, 3, 4]
    for bad in ("0", "4..2", "x", "1..y"):
        with pytest.raises(Exception):
            parse_k_range(bad)


def test_continued_fraction_and_chain():
    assert continued_fraction(5, 2) == [3, 2]
    L = lens_space_chain(5, 2)
    assert L.tolist() == [[3, -1], [-1, 2]]
    for p, q in [(7, 2), (8, 3), (12, 5), (13, 8), (19, 7)]:
        assert determinant(lens_space_chain(p, q)) == p
    with pytest.raises(ValueError):
        continued_fraction(6, 4)


def test_catalog_contents():
    names = {e.name for e in catalog()}
    assert {"S3", "S1xS2", "L(7,1)", "L(5,2)", "Poincare", "T3"} <= names
    assert lookup("L(11,3)").expected_upsilon(11) == 11
    assert lookup("S3").surgery.m == 0
    with pytest.raises(KeyError):
        lookup("nowhere")


def test_round_trip_is_idempotent():
    for entry in catalog():
        doc = dump_input(entry.surgery, entry.complex)
        again = dump_input(*parse_input(json.loads(json.dumps(doc))))
        assert again == doc
    doc = {"linking_matrix": [[2, 1], [1, 3]], "external_link": {"lambda": [1, 0], "framing": 2}}
    assert dump_input(*parse_input(doc)) == doc


def test_exact_encoding():
    assert to_jsonable(Fraction(1, 3)) == {"num": 1, "den": 3}
    assert to_jsonable(angle_from(3, 4)) == {"num": 3, "den": 4, "type": "angle"}
    assert "0.33" not in serialization.dumps({"x": Fraction(1, 3)})


@pytest.mark.parametrize(
    "doc, fragment",
    [
        ({}, "neither"),
        ({"linking_matrix": [[1, 2], [3, 4]]}, "symmetric"),
        ({"linking_matrix": [[1, 2]]}, "square"),
        ({"linking_matrix": [[1, "a"], [1, 1]]}, "linking_matrix[0][1]"),
        ({"linking_matrix": [[1]], "external_link": {"lambda": [1, 2]}}, "external_link.lambda"),
        ({"vertices": 1, "edges": 2, "faces": 1, "incidence": [[1]]}, "incidence"),
        ({"vertices": 1, "edges": 1, "faces": 2, "incidence": [[1]]}, "faces"),
        ({"complex": {"vertices": 1}}, "missing field 'edges'"),
    ],
)
def test_parse_errors(doc, fragment):
    with pytest.raises(InputError, match=None) as info:
        parse_input(doc)
    assert fragment in str(info.value)


def test_load_reports_json_position(tmp_path):
    path = write(tmp_path, '{"linking_matrix": [[1,]]}')
    with pytest.raises(InputError, match="line 1, column"):
        serialization.load_input(path)


def test_compute_json(tmp_path, capsys):
    path = write(tmp_path, {"linking_matrix": [[6]], "complex": {"vertices": 1, "edges": 1, "faces": 1, "incidence": [[6]]}})
    assert main(["compute", "--input", path, "--k", "4", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    report = out["reports"][0]
    assert report["upsilon"] == 2
    assert report["tau"] == {"num": 1, "den": 2}
    assert report["z_bf"] == 12
    assert all(c["passed"] for c in report["checks"])


def test_compute_deterministic_sorted_json(tmp_path, capsys):
    args = ["compute", "--manifold", "L(5,2)", "--k", "1..4", "--format", "json", "--seed", "3"]
    main(args)
    first = capsys.readouterr().out
    main(args)
    second = capsys.readouterr().out
    assert first == second
    obj = json.loads(first)
    assert json.dumps(obj, sort_keys=True, indent=2) == first.strip()


def test_compute_with_external_link(capsys, tmp_path):
    path = write(tmp_path, {"linking_matrix": [[0]], "external_link": {"lambda": [1], "framing": 0}})
    assert main(["compute", "--input", path, "--k", "3", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)["reports"][0]
    assert report["upsilon_link"]["magnitude"] == {"num": 0, "den": 1}


def test_input_errors_exit_2(tmp_path, capsys):
    assert main(["compute", "--input", str(tmp_path / "missing.json")]) == 2
    path = write(tmp_path, {"linking_matrix": [[1, 2], [0, 1]]})
    assert main(["compute", "--input", path]) == 2
    assert "symmetric" in capsys.readouterr().err
    assert main(["compute"]) == 2
    assert main(["compute", "--manifold", "nowhere"]) == 2


def test_statesum_budget_refusal(capsys):
    assert main(["statesum", "--manifold", "T3", "--k", "30", "--budget", "1000"]) == 3
    assert "budget" in capsys.readouterr().err


def test_statesum_text(capsys):
    assert main(["statesum", "--manifold", "L(3,1)", "--k", "6"]) == 0
    assert "upsilon=3" in capsys.readouterr().out


def test_catalog_command(capsys):
    assert main(["catalog", "--format", "json"]) == 0
    names = [e["name"] for e in json.loads(capsys.readouterr().out)]
    assert names[0] == "S3"


def test_verify_category_scope(capsys):
    assert main(["verify", "--scope", "category", "--k", "1..6"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert out.strip().endswith("checks passed")


def test_verify_json_is_deterministic(capsys):
    args = ["verify", "--scope", "kirby", "--k", "2..3", "--format", "json", "--seed", "5"]
    assert main(args) == 0
    first = capsys.readouterr().out
    main(args)
    assert capsys.readouterr().out == first
    assert json.loads(first)["failed"] == 0


def test_verify_failure_exit_code(monkeypatch, capsys):
    from abeliantv import cli
    from abeliantv.verification import Record

    monkeypatch.setattr(cli, "run", lambda *a, **kw: [Record("catalog", "X", 2, "fake", False, 1, 2)])
    assert main(["verify"]) == 1
    assert "FAIL catalog X k=2" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "abeliantv", "compute", "--manifold", "S1xS2", "--k", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "upsilon=5" in proc.stdout
