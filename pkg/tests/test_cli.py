import json
import subprocess
import sys

import pytest

from polyobstruct.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_obstruct_json(capsys):
    code, out, err = run(capsys, "obstruct", "product:(polygon:5,polygon:5)",
                         "--target", "skeleton:0", "--e", "2")
    assert code == 0 and err == ""
    data = json.loads(out)
    assert data["obstructed"] and data["threshold_e"] == 3


def test_obstruct_table(capsys):
    code, out, _ = run(capsys, "obstruct", "wedge:4,3", "--target", "surface", "--e", "4",
                       "--format", "table")
    assert code == 0 and "OBSTRUCTED" in out and "surface_embedding: yes" in out


def test_obstruct_output_is_byte_stable(capsys):
    argv = ("obstruct", "simplex:5", "--target", "skeleton:1", "--e", "3")
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


def test_unavailable_obstruction_still_exits_zero(capsys):
    code, out, _ = run(capsys, "obstruct", "wedge:4,2", "--target", "surface", "--e", "4")
    assert code == 0 and json.loads(out)["available"] is False


def test_input_errors_exit_2(capsys):
    code, out, err = run(capsys, "obstruct", "polygon:2", "--target", "skeleton:0", "--e", "1")
    assert code == 2 and out == "" and "at least 3" in err
    code, _, err = run(capsys, "obstruct", "polygon:5", "--target", "surface", "--e", "1")
    assert code == 2 and "wedge" in err
    code, _, err = run(capsys, "obstruct", "product:(polygon:4,simplex:3)", "--target",
                       "skeleton:0", "--e", "1", "--mode", "ilp")
    assert code == 2 and "not applicable" in err
    code, _, err = run(capsys, "sarkaria", "polygon:5", "--cotype", "a,b")
    assert code == 2
    code, _, err = run(capsys, "verify", "--scope", "everything")
    assert code == 2 and "unknown scope" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["obstruct", "polygon:5"])
    assert info.value.code == 2


def test_resource_guard_exits_3(capsys):
    code, out, err = run(capsys, "obstruct", "simplex:7", "--target", "skeleton:0", "--e", "1",
                         "--budget", "3")
    assert code == 3
    assert json.loads(out)["bounds"]["closed_form"]["threshold_e"] == 2
    assert "resource limit" in err
    code, out, _ = run(capsys, "obstruct", "simplex:7", "--target", "skeleton:0", "--e", "1",
                       "--mode", "brute_force", "--budget", "3")
    assert code == 3


def test_coskeleton_outputs(capsys):
    code, out, _ = run(capsys, "coskeleton", "polygon:5", "--k", "0")
    assert code == 0 and json.loads(out)["facets"] == [
        [0, 1, 2], [0, 1, 4], [0, 3, 4], [1, 2, 3], [2, 3, 4]]
    code, out, _ = run(capsys, "coskeleton", "polygon:5", "--k", "0", "--out", "fvector")
    data = json.loads(out)
    assert data["f_vector"] == [5, 10, 5] and data["euler_characteristic"] == 0
    code, out, _ = run(capsys, "coskeleton", "polygon:4", "--k", "0", "--out", "nonfaces")
    assert json.loads(out)["minimal_non_faces"] == [[0, 2], [1, 3]]


def test_sarkaria(capsys):
    code, out, _ = run(capsys, "sarkaria", "product:(simplex:2,simplex:3)", "--cotype", "1,0")
    assert code == 0 and json.loads(out)["sarkaria_index"] == 3
    code, out, _ = run(capsys, "sarkaria", "polygon:7", "--k", "0")
    data = json.loads(out)
    assert data["sarkaria_index"] == 5 and data["chromatic_number"] == 1


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "product:(simplex:3,simplex:3)", "--target", "skeleton",
                       "--e-range", "2..3", "--k-range", "0..0")
    assert code == 0
    assert [row["obstructed"] for row in json.loads(out)] == [True, False]
    code, out, _ = run(capsys, "sweep", "wedge:4,3", "--target", "surface", "--e-range", "4..5",
                       "--format", "table")
    assert code == 0 and "OBSTRUCTED" in out
    code, _, err = run(capsys, "sweep", "polygon:5", "--target", "skeleton", "--e-range", "1..2")
    assert code == 2 and "--k-range" in err


def test_verify_single_scope(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "cli_reports")
    assert code == 0 and "FAIL" not in out and "checks passed" in out


def test_console_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "polyobstruct.cli", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("polyobstruct ")
