import json
from pathlib import Path
from random import Random

import pytest

from topzeta.cli import InputDocument, OutputDocument, checks, main, run
from topzeta.cli.checks import CheckResult, check_series, check_snf, run_euler_suite
from topzeta.cli.documents import load_input
from topzeta.errors import InputDocumentError

INPUTS = Path(__file__).resolve().parents[1] / "inputs"


def _run(tmp_path, *args) -> dict:
    output = tmp_path / "out.json"
    assert run([*args, "--jobs", "1", "--output", str(output)]) == 0
    return json.loads(output.read_text(encoding="utf-8"))


@pytest.mark.parametrize("argv", [[], ["compute"]])
def test_usage(argv):
    assert main(argv) == 1


def test_run_input_document(tmp_path):
    document = _run(tmp_path, str(INPUTS / "z4.json"))
    assert document["status"] == "ok"
    assert document["name"] == "abelian4"
    assert document["numerator"] == [1]
    assert document["denominator"] == [[1, 0, 1], [1, 1, 1], [1, 2, 1], [1, 3, 1]]
    assert document["stats"]["magic"] == "1"


def test_run_builtin_algebra(tmp_path):
    document = _run(tmp_path, "heisenberg")
    assert document["function"] == "3/(2*s*(s - 1)*(2*s - 3))"
    assert document["stats"]["magic"] == "3/4"
    assert document["stats"]["regular"] == 1


def test_mode_override(tmp_path):
    document = _run(tmp_path, str(INPUTS / "heisenberg.json"), "--mode", "ideal")
    assert document["mode"] == "ideal"
    assert document["denominator"] == [[1, 0, 1], [1, 1, 1], [3, 2, 1]]


def test_run_submodules(tmp_path):
    document = _run(tmp_path, str(INPUTS / "nilpotent_submodules.json"))
    assert document["function"] == "1/(s*(2*s - 1))"
    assert document["stats"]["magic"] == "1/2"


@pytest.mark.parametrize(
    "content", ["{", json.dumps({"products": []}), json.dumps({"rank": 2, "mode": "rings"})]
)
def test_bad_input_documents(tmp_path, content):
    path = tmp_path / "input.json"
    path.write_text(content, encoding="utf-8")
    assert run([str(path), "--jobs", "1"]) == 1


def test_undecodable_input_document(tmp_path):
    path = tmp_path / "input.json"
    path.write_bytes(b"{\"rank\": \xff}")
    with pytest.raises(InputDocumentError):
        load_input(path)
    assert run([str(path), "--jobs", "1"]) == 1


def test_unknown_algebra_name():
    assert run(["octonions", "--jobs", "1"]) == 1


def test_output_document_round_trip(tmp_path):
    _run(tmp_path, "abelian2")
    text = (tmp_path / "out.json").read_text(encoding="utf-8")
    document = OutputDocument.from_json(json.loads(text))
    assert document.dumps() == text
    assert str(document.function) == "1/(s*(s - 1))"


@pytest.mark.parametrize(
    "data",
    [
        [],
        {"rank": 2, "ring": True},
        {"rank": True},
        {"rank": 2, "products": [[1, 2]]},
        {"rank": 2, "products": [[1, 2, [0, "1"]]]},
        {"rank": 2, "generators": [5]},
        {"rank": 2, "antisymmetric": "yes"},
    ],
)
def test_input_document_validation(data):
    with pytest.raises(InputDocumentError):
        InputDocument.from_json(data)


def test_input_document():
    document = InputDocument.from_json(json.loads((INPUTS / "heisenberg.json").read_text()))
    algebra = document.to_algebra()
    assert algebra.rank == 3
    assert algebra.antisymmetric
    assert algebra.products == ((1, 2, (0, 0, 1)),)


def test_euler_suite():
    result = CheckResult(name="euler")
    run_euler_suite(result)
    assert result.ok
    assert result.checked == 6


def test_snf_suite():
    result = CheckResult(name="snf")
    rng = Random(0)
    for _ in range(25):
        check_snf(rng, result)
    assert result.ok, result.violations


def test_series_suite_expands_to_degree_eight(monkeypatch):
    bounds = []
    enumerate_points = checks.enumerate_lattice_points

    def recording(C0, bound):
        bounds.append(bound)
        return enumerate_points(C0, bound)

    monkeypatch.setattr(checks, "enumerate_lattice_points", recording)
    result = CheckResult(name="series")
    rng = Random(0)
    for _ in range(6):
        check_series(rng, result)
    assert result.ok, result.violations
    assert bounds == [8] * 6
