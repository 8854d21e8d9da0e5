# -------------------------------------------------
# Tests for the independent code verifier.
# -------------------------------------------------

import pytest

from geometry.solid import lines_disjoint_from, special_solid
from helpers.errors import DimensionMismatchError, VerificationError
from mrd.gabidulin import lmrd_code
from space.enumeration import gaussian_binomial
from space.subspace import canonicalize, orthogonal_complement
from space.subspace_code import SubspaceCode
from verifier.verifier import (coverage_check, dual_check, full_report, intersection_vector,
                               min_distance, subspaces_in)


def corrupted_lmrd() -> SubspaceCode:
    """The lifted code with word 0 replaced by a plane sharing a line with word 1."""
    code = lmrd_code()
    neighbour = canonicalize([code.words[1].rows[0], code.words[1].rows[1], 1], 7)
    return SubspaceCode(code.params, (neighbour,) + code.words[1:], "corrupted")


def test_lmrd_report():
    report = full_report(lmrd_code(), special_solid())
    assert report.passed
    assert report.size == 256
    assert report.min_distance == 4
    assert report.line_double_covers == 0
    assert report.intersection_vector == (256, 0, 0, 0)
    assert report.dual_checked and report.dual_min_distance == 4
    document = report.to_dict()
    assert document["pass"] is True
    assert document["params_claimed"] == {"q": 2, "v": 7, "k": 3, "d": 4}


def test_lmrd_covers_disjoint_lines_once():
    lines = lines_disjoint_from(special_solid(), 7)
    assert coverage_check(lmrd_code(), 2, restrict_to=lines) == (0, 0)


def test_single_codeword():
    code = SubspaceCode.fromWords(lmrd_code().words[:1], 4)
    assert coverage_check(code, 2) == (0, gaussian_binomial(7, 2) - 7)
    with pytest.raises(VerificationError):
        min_distance(code)
    assert not full_report(code, special_solid()).passed


def test_corrupted_code_fails():
    code = corrupted_lmrd()
    assert min_distance(code) == 2
    report = full_report(code, special_solid())
    assert not report.passed
    assert report.line_double_covers >= 1
    assert report.intersection_vector == (255, 1, 0, 0)


def test_claimed_size_mismatch_fails():
    assert not full_report(lmrd_code(), special_solid(), claimed_size=257).passed


def test_cross_consistency():
    for code in (lmrd_code(), corrupted_lmrd()):
        double = coverage_check(code, 2).double_covers
        assert (double == 0) == (min_distance(code) >= 4)


def test_dual_check():
    code = lmrd_code()
    assert dual_check(code)
    dual = code.dual()
    assert dual.params.k == 4
    assert dual.provenance == "lmrd+dual"
    S_perp = orthogonal_complement(special_solid())
    assert intersection_vector(dual, S_perp) == (256, 0, 0, 0)
    assert full_report(dual, S_perp).passed


def test_subspaces_in():
    plane = lmrd_code().words[5]
    lines = list(subspaces_in(plane, 2))
    assert len(lines) == 7
    assert all(L.isSubspaceOf(plane) for L in lines)


def test_intersection_vector_errors():
    with pytest.raises(DimensionMismatchError):
        intersection_vector(lmrd_code(), special_solid(8))
    with pytest.raises(DimensionMismatchError):
        coverage_check(lmrd_code(), 4)


if __name__ == "__main__":
    test_lmrd_report()
    test_lmrd_covers_disjoint_lines_once()
    test_single_codeword()
    test_corrupted_code_fails()
    test_claimed_size_mismatch_fails()
    test_cross_consistency()
    test_dual_check()
    test_subspaces_in()
    test_intersection_vector_errors()
