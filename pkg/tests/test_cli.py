import json
import subprocess
import sys

import pytest

from posbergman import jsonio
from posbergman.cli import main
from posbergman.om import OrientedMatroid, incidence_matrix, kernel_rows
from posbergman.trees import kn_edges, kn_oriented_matroid

from conftest import EX_CIRCUITS, EX_MW


def circuits_file(tmp_path, n, circuits, name="c.json"):
    path = tmp_path / name
    path.write_text(jsonio.dumps(jsonio.circuits_to_json(OrientedMatroid.from_signs(n, circuits))))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out


@pytest.fixture
def ex_file(tmp_path):
    return circuits_file(tmp_path, 6, EX_CIRCUITS)


@pytest.fixture
def k4_file(tmp_path):
    M, _ = kn_oriented_matroid(4)
    path = tmp_path / "k4.json"
    path.write_text(jsonio.dumps(jsonio.circuits_to_json(M)))
    return str(path)


def test_validate_ok(capsys, ex_file):
    code, out, _ = run(capsys, "validate", ex_file)
    assert code == 0 and out["passed"] and out["violations"] == []


def test_validate_c3(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "circuits": [{"pos": [1], "neg": []}, {"pos": [1, 2], "neg": []}]}))
    code, out, _ = run(capsys, "validate", str(path), "--all")
    assert code == 1 and not out["passed"]
    assert out["violations"][0]["axiom"] == "C3"


def test_validate_empty_file(capsys, tmp_path):
    path = tmp_path / "empty.json"
    path.write_text("")
    code, _, out = run(capsys, "validate", str(path))
    assert code == 2 and "empty" in out.err


def test_validate_malformed(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run(capsys, "validate", str(path))[0] == 2
    path.write_text(json.dumps({"n": 2, "circuits": [{"pos": [1], "neg": [1]}]}))
    assert run(capsys, "validate", str(path))[0] == 2
    path.write_text(json.dumps({"n": 2, "circuits": [{"pos": [3], "neg": []}]}))
    assert run(capsys, "validate", str(path))[0] == 2


def test_mw_example(capsys, ex_file):
    code, out, _ = run(capsys, "mw", ex_file, "--w", '{"w": ["1","1","1","1","1","0"]}')
    assert code == 0
    assert jsonio.circuits_from_json(out) == OrientedMatroid.from_signs(6, EX_MW)


def test_mw_constant_echo(capsys, ex_file):
    code, out, o = run(capsys, "mw", ex_file, "--w", "2,2,2,2,2,2")
    assert code == 0
    with open(ex_file) as fh:
        assert o.out == fh.read()


def test_mw_flag_and_weight_byte_identical(capsys, ex_file):
    _, _, a = run(capsys, "mw", ex_file, "--flag", '{"chain": [[6]]}')
    _, _, b = run(capsys, "mw", ex_file, "--w", "7/2,7/2,7/2,7/2,7/2,-1")
    assert a.out == b.out and a.out


def test_mw_needs_one_of(capsys, ex_file):
    assert run(capsys, "mw", ex_file)[0] == 2
    assert run(capsys, "mw", ex_file, "--w", "1,2", "--flag", '{"chain": []}')[0] == 2
    assert run(capsys, "mw", ex_file, "--w", "1,2")[0] == 2


def test_bergman_counts(capsys, k4_file):
    code, out, _ = run(capsys, "bergman", k4_file, "--positive")
    assert code == 0 and out["maximal_cells"] == 6 and out["euler_char"] == 0
    code, out, _ = run(capsys, "bergman", k4_file)
    assert out["maximal_cells"] == 18 and out["f_vector"] == [13, 18]
    code, out, _ = run(capsys, "bergman", k4_file, "--positive", "--coarse")
    assert out["full_dimensional_coarse_cells"] == 5
    assert all("mw_circuits" in c and "flags" in c for c in out["coarse_cells"])


def test_bergman_deterministic(capsys, k4_file):
    _, _, a = run(capsys, "bergman", k4_file, "--coarse", "--no-check")
    _, _, b = run(capsys, "bergman", k4_file, "--coarse", "--no-check")
    assert a.out == b.out


def test_bound_lowers_cap(capsys, k4_file):
    assert run(capsys, "--bound", "4", "bergman", k4_file)[0] == 3
    assert run(capsys, "--bound", "99", "bergman", k4_file)[0] == 2


def test_output_file(capsys, tmp_path, ex_file):
    target = tmp_path / "out.json"
    assert main(["-o", str(target), "validate", ex_file]) == 0
    assert json.loads(target.read_text())["passed"]


def matrix_file(tmp_path, rows, name):
    path = tmp_path / name
    path.write_text(jsonio.dumps(jsonio.matrix_to_json(rows, len(rows[0]))))
    return str(path)


def test_from_matrix_columns(capsys, tmp_path):
    path = matrix_file(tmp_path, incidence_matrix(4, kn_edges(4)), "inc.json")
    code, out, _ = run(capsys, "from-matrix", path, "--columns")
    assert code == 0
    assert jsonio.circuits_from_json(out) == OrientedMatroid.from_signs(6, EX_CIRCUITS)


def test_from_matrix_row_space(capsys, tmp_path):
    cycles = kernel_rows(incidence_matrix(4, kn_edges(4)))
    path = matrix_file(tmp_path, cycles, "cyc.json")
    code, out, _ = run(capsys, "from-matrix", path)
    assert jsonio.circuits_from_json(out) == OrientedMatroid.from_signs(6, EX_CIRCUITS)


def test_member(capsys, tmp_path):
    path = matrix_file(tmp_path, kernel_rows(incidence_matrix(4, kn_edges(4))), "cyc.json")
    code, out, _ = run(capsys, "member", path, "--w", "1,1,1,1,1,0")
    assert code == 0 and out["member"] and out["flag"] == [[6]]
    assert run(capsys, "member", path, "--w", "0,0,0,0,0,0")[0] == 0
    code, out, _ = run(capsys, "member", path, "--w", "0,1,0,0,0,0")
    assert code == 1 and not out["member"]
    inc = matrix_file(tmp_path, incidence_matrix(4, kn_edges(4)), "inc.json")
    assert run(capsys, "member", inc, "--columns", "--w", "1,1,1,1,1,0")[0] == 0


def test_matrix_bad_rational(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"n": 2, "rows": [["1", "x"]]}))
    assert run(capsys, "from-matrix", str(path))[0] == 2


def test_trees_count(capsys):
    code, out, _ = run(capsys, "trees", "--count", "5")
    assert code == 0 and out["positive"] == 24 and out["total"] == 180


def test_trees_shape(capsys):
    code, out, _ = run(capsys, "trees", "--shape", "((1,2),(3,4))")
    assert out["hook_count"] == 2 == out["increasing_labelings"]
    assert run(capsys, "trees", "--shape", "(1,2,3)")[0] == 2
    assert run(capsys, "trees", "--shape", "((1,2")[0] == 2


def test_trees_bijection(capsys):
    code, out, _ = run(capsys, "trees", "--bijection", "57316284")
    assert code == 0 and out["roundtrip"] and out["permutation"] == [5, 7, 3, 1, 6, 2, 8, 4]
    assert out["tree"]["label"] == 1


def test_trees_covering(capsys):
    code, out, _ = run(capsys, "trees", "--covering", "4")
    assert out["cells"] == 18 and out["complexes_per_cell"] == [8] and out["covered_by_first_fixed"]
    assert run(capsys, "trees", "--covering", "6")[0] == 3


def test_trees_capacity(capsys):
    assert run(capsys, "trees", "--count", "9")[0] == 3


def test_entry_point_subprocess(ex_file):
    proc = subprocess.run([sys.executable, "-m", "posbergman.cli", "validate", ex_file],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["passed"]


def test_stdin(monkeypatch, capsys, ex_file):
    import io

    with open(ex_file) as fh:
        monkeypatch.setattr(sys, "stdin", io.StringIO(fh.read()))
    assert run(capsys, "validate", "-")[0] == 0
