# -------------------------------------------------
# Tests for the code_runner command-line surface and its exit codes.
# -------------------------------------------------

import json
import time
from pathlib import Path

import pytest

from code_runner import main
from helpers.helpers import code_to_text, load_code_from_txt
from mrd.gabidulin import lmrd_code
from space.subspace import canonicalize
from space.subspace_code import SubspaceCode

CODES_DIR = Path(__file__).resolve().parent.parent / "codes"
SHIPPED = {"packed291": 291, "single303": 303, "rotated314": 314, "fano329": 329}


def structured(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def test_construct_and_verify_lmrd(tmp_path, capsys):
    path = tmp_path / "lmrd.txt"
    assert main(["construct", "lmrd", "--output", str(path)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("--------------- Subspace Codes ---------------")
    assert "Constructing code using: lmrd" in out
    assert "Minimum distance: 4" in out
    assert out.rstrip().endswith("--------------- Run Complete ---------------")
    assert load_code_from_txt(str(path)).code.size == 256

    assert main(["verify", str(path), "--format", "structured"]) == 0
    document = structured(capsys)
    assert document["report"]["pass"] is True
    assert document["report"]["size"] == 256
    assert document["report"]["min_distance"] == 4


def test_same_seed_same_file(tmp_path):
    first, second = tmp_path / "a.txt", tmp_path / "b.txt"
    flags = ["--seed", "7", "--restarts", "50"]
    assert main(["construct", "fano329", *flags, "--output", str(first)]) == 0
    assert main(["construct", "fano329", *flags, "--output", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert first.read_text().startswith("SUBSPACE-CODE q=2 v=7 k=3 d=4 M=327 tag=fano327\n")


def test_shipped_codes_verify(capsys):
    for name, size in SHIPPED.items():
        assert main(["verify", str(CODES_DIR / f"{name}.txt"), "--format", "structured"]) == 0
        report = structured(capsys)["report"]
        assert report["pass"] is True
        assert report["size"] == report["claimed_size"] == size
        assert report["min_distance"] == report["dual_min_distance"] == 4


def test_record_code_verifies_quickly(capsys):
    start = time.monotonic()
    assert main(["verify", str(CODES_DIR / "fano329.txt"), "--max-meet", "2"]) == 0
    assert time.monotonic() - start < 5
    out = capsys.readouterr().out
    assert "Intersection vector: (136, 165, 28, 0)" in out
    assert "Meets S in dimension at most 2: pass" in out


def test_verify_max_meet(capsys):
    path = str(CODES_DIR / "single303.txt")
    assert main(["verify", path, "--max-meet", "1", "--format", "structured"]) == 1
    assert structured(capsys)["max_meet"] == {"limit": 1, "passed": False}
    assert main(["verify", path, "--max-meet", "2"]) == 0


def test_shipped_codes_are_reproduced(tmp_path):
    for name in ("packed291", "single303"):
        path = tmp_path / f"{name}.txt"
        assert main(["construct", name, "--output", str(path)]) == 0
        assert path.read_bytes() == (CODES_DIR / f"{name}.txt").read_bytes()


@pytest.mark.slow
def test_rotated_code_is_reproduced(tmp_path):
    path = tmp_path / "rotated314.txt"
    assert main(["construct", "rotated314", "--output", str(path)]) == 0
    assert path.read_bytes() == (CODES_DIR / "rotated314.txt").read_bytes()


@pytest.mark.slow
def test_record_code_is_reproduced(tmp_path):
    path = tmp_path / "fano329.txt"
    assert main(["construct", "fano329", "--seed", "1", "--restarts", "1000000", "--output", str(path)]) == 0
    assert path.read_bytes() == (CODES_DIR / "fano329.txt").read_bytes()


def test_construct_dual(tmp_path, capsys):
    path = tmp_path / "dual.txt"
    assert main(["construct", "lmrd", "--dual", "--format", "structured", "--output", str(path)]) == 0
    document = structured(capsys)
    assert document["report"]["params_claimed"]["k"] == 4
    assert document["report"]["intersection_vector"] == [256, 0, 0, 0]
    assert load_code_from_txt(str(path)).code.provenance == "lmrd+dual"


def test_construct_fano301(tmp_path, capsys):
    path = tmp_path / "fano301.txt"
    choice = ",".join(["0"] * 15)
    assert main(["construct", "fano301", "--choice", choice, "--format", "structured",
                 "--output", str(path)]) == 0
    document = structured(capsys)
    assert document["report"]["size"] == 301
    assert document["report"]["min_distance"] == 4


def test_bad_choice_is_a_flag_error():
    with pytest.raises(SystemExit) as info:
        main(["construct", "fano301", "--choice", "0,1"])
    assert info.value.code == 2


def test_verify_corrupted_file(tmp_path):
    code = lmrd_code()
    neighbour = canonicalize([code.words[1].rows[0], code.words[1].rows[1], 1], 7)
    corrupted = SubspaceCode(code.params, (neighbour,) + code.words[1:], "corrupted")
    path = tmp_path / "corrupted.txt"
    path.write_text(code_to_text(corrupted))
    assert main(["verify", str(path)]) == 1


def test_verify_unparsable_file(tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text("SUBSPACE-CODE q=2 v=7 k=3 d=4 M=1 tag=x\n0100000\n1000000\n0010000\n")
    assert main(["verify", str(path)]) == 2
    assert main(["verify", str(tmp_path / "missing.txt")]) == 2


def test_analyze_steiner_vector(capsys):
    assert main(["analyze", "steiner-vector", "--v", "7", "--a3", "0", "--format", "structured"]) == 0
    assert structured(capsys)["intersection_vector"] == [136, 210, 35, 0]
    assert main(["analyze", "steiner-vector", "--v", "13", "--a3", "3069", "--format", "structured"]) == 0
    document = structured(capsys)
    assert document["intersection_vector"] == [524800, 916608, 152768, 3069]
    assert document["new_planes_per_point"] == 896


def test_analyze_infeasible():
    assert main(["analyze", "steiner-vector", "--v", "7", "--a3", "6"]) == 2


def test_analyze_counts(capsys):
    assert main(["analyze", "counts", "--v", "7", "--format", "structured"]) == 0
    document = structured(capsys)
    assert document["steiner_bound"] == 381
    assert document["gaussian_binomials"] == {"1": 127, "2": 2667, "3": 11811, "4": 11811}
    assert document["flag_counts"]["solids_not_containing"] == 6096


def test_analyze_clique_stats(capsys):
    assert main(["analyze", "clique-stats", "--target", "fano-point", "--format", "structured"]) == 0
    document = structured(capsys)
    assert document["clique_number"] == 11
    assert document["maximum_cliques"] == 4
    assert main(["analyze", "clique-stats", "--target", "single", "--print-graph"]) == 0
    out = capsys.readouterr().out
    assert "Adjacency Rows:" in out
    assert "clique_number: 2" in out


def test_config_file_and_flags(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"format": "structured", "seed": 4}))
    path = tmp_path / "lmrd.txt"
    assert main(["construct", "lmrd", "--config", str(config), "--output", str(path)]) == 0
    assert structured(capsys)["seed"] == 4
    assert main(["construct", "lmrd", "--config", str(config), "--seed", "8", "--output", str(path)]) == 0
    assert structured(capsys)["seed"] == 8
    config.write_text(json.dumps({"colour": "red"}))
    assert main(["construct", "lmrd", "--config", str(config), "--output", str(path)]) == 2


if __name__ == "__main__":
    test_analyze_infeasible()
