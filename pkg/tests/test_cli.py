import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from fusionchar.builders import data_path, fibonacci_modular, fibonacci_ring, ising_ring
from fusionchar.builders.fixtures import dumps
from fusionchar.chartable import CharacterTable, verify_orthogonality
from fusionchar.cli import main, run_command
from fusionchar.scalar import CycNumber


def fusion(name):
    return str(data_path("fusion", name))


def run(argv):
    r, text = run_command(argv)
    return r.exit_code, text, r


@pytest.fixture
def bad_dims(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(dumps(fibonacci_ring().with_dims([CycNumber.rational(1)] * 2).to_dict()))
    return str(p)


@pytest.mark.parametrize("name", ["trivial", "fibonacci", "ising", "rep_s3", "rep_q8", "rep_z6"])
def test_chartable_succeeds(name):
    code, text, r = run(["chartable", fusion(name)])
    assert code == 0 and r.table is not None and "exit code 0" in text


def test_validation_failure_exit_1(bad_dims):
    assert run(["validate", bad_dims])[0] == 1
    code, text, r = run(["chartable", bad_dims])
    assert code == 1 and r.table is None and "dims_homomorphism" in text


def test_noncommutative_exit_2():
    code, text, _ = run(["chartable", fusion("vec_s3")])
    assert code == 2 and "not commutative" in text


def test_missing_file_exit_3(tmp_path):
    assert run(["chartable", str(tmp_path / "none.json")])[0] == 3


@pytest.mark.parametrize("content", ["{", "[1, 2]", '{"labels": ["1"]}', '{"other": 1}'])
def test_malformed_input_exit_3(tmp_path, content):
    p = tmp_path / "x.json"
    p.write_text(content)
    assert run(["validate", str(p)])[0] == 3


def test_structural_error_exit_3(tmp_path):
    p = tmp_path / "x.json"
    doc = fibonacci_ring().to_dict()
    doc["dual"] = [0]
    p.write_text(json.dumps(doc))
    assert run(["chartable", str(p)])[0] == 3


@pytest.mark.parametrize("kind,name", [("fusion", "ising"), ("modular", "ising"),
                                       ("groups", "s3"), ("hopf", "taft2")])
def test_validate_every_kind(kind, name):
    assert run(["validate", str(data_path(kind, name))])[0] == 0


def test_json_table_reverifies():
    code, text, _ = run(["chartable", fusion("ising"), "--out", "json"])
    doc = json.loads(text)
    assert code == 0 and doc["exit_code"] == 0
    T = CharacterTable.from_dict(doc["table"])
    assert verify_orthogonality(T, ising_ring()).passed
    assert doc["artifacts"]["global_dimension"]


def test_csv_table():
    code, text, _ = run(["chartable", fusion("fibonacci"), "--out", "csv"])
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 0 and rows[0] == ["class", "C0", "C1"] and len(rows) == 4


def test_csv_checks_on_failure(bad_dims):
    text = run(["chartable", bad_dims, "--out", "csv"])[1]
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0][:3] == ["report", "check", "passed"]
    assert any(r[1] == "dims_homomorphism" and r[2] == "False" for r in rows[1:])


def test_deterministic_json():
    a = run(["chartable", fusion("rep_q8"), "--out", "json", "--seed", "3"])[1]
    b = run(["chartable", fusion("rep_q8"), "--out", "json", "--seed", "3"])[1]
    assert a == b


def test_modular_commands():
    path = str(data_path("modular", "fibonacci"))
    code, _, r = run(["modular", "chartable", path])
    assert code == 0 and np.allclose(r.table.table[0], 1)
    assert run(["modular", "crosscheck", path])[0] == 0


def test_modular_perturbed_fails(tmp_path):
    p = tmp_path / "m.json"
    p.write_text(json.dumps(fibonacci_modular().perturbed(1, 1, 1e-2).to_dict()))
    assert run(["modular", "crosscheck", str(p)])[0] == 2
    assert run(["validate", str(p)])[0] == 1


def test_hopf_report_taft():
    code, _, r = run(["hopf", "report", str(data_path("hopf", "taft2"))])
    art = r.artifacts
    assert code == 0
    assert art["class_functions_dim"] == 2 and not art["unimodular"]
    assert art["pivotal_elements"] == [{"2": "1"}]
    assert "maschke_indicator" not in art


@pytest.mark.parametrize("name,indicator,semisimple", [("kz3", "3", True), ("ks3", "6", True),
                                                          ("double_sweedler", "0", False)])
def test_hopf_report_unimodular(name, indicator, semisimple):
    code, text, r = run(["hopf", "report", str(data_path("hopf", name))])
    assert code == 0
    assert r.artifacts["maschke_indicator"] == indicator
    assert r.artifacts["semisimple"] is semisimple
    assert "radford_9" in text


def test_hopf_report_character_span():
    r = run(["hopf", "report", str(data_path("hopf", "double_sweedler"))])[2]
    assert r.artifacts["character_span_dim"] == 4 and r.artifacts["class_functions_dim"] == 5


def test_hopf_fourier():
    code, _, r = run(["hopf", "fourier", str(data_path("hopf", "kz3")), "--out", "json"])
    assert code == 0 and len(r.artifacts["center_images"]) == 3
    assert run(["hopf", "fourier", str(data_path("hopf", "taft2"))])[0] == 2


@pytest.mark.parametrize("name", ["z4", "s3", "q8"])
def test_group_chartable(name):
    path = str(data_path("groups", name))
    code, _, r = run(["group", "chartable", path])
    assert code == 0 and r.artifacts["class_sizes"][0] == 1
    code, text, _ = run(["group", "chartable", path, "--method", "repring"])
    assert code == 0 and "agrees_with_group_table" in text


def test_group_chartable_explicit_ring():
    code, _, _ = run(["group", "chartable", str(data_path("groups", "s3")), "--method",
                      "repring", "--ring", fusion("rep_s3")])
    assert code == 0


def test_group_chartable_wrong_ring():
    code, text, _ = run(["group", "chartable", str(data_path("groups", "s3")), "--method",
                         "repring", "--ring", fusion("rep_z6")])
    assert code == 2


def test_main_writes_stdout(capsys):
    assert main(["validate", fusion("fibonacci")]) == 0
    assert "exit code 0" in capsys.readouterr().out


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "fusionchar", "chartable", fusion("vec_s3")],
                         capture_output=True, text=True)
    assert out.returncode == 2


def test_argparse_rejects_unknown_command():
    with pytest.raises(SystemExit):
        run_command(["frobnicate"])
