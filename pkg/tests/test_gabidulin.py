# -------------------------------------------------
# Tests for the Gabidulin code, its matrices and the lifted code.
# -------------------------------------------------

import galois
import numpy as np
import pytest

from field.gf16 import LinPoly
from geometry.solid import lines_disjoint_from, special_solid
from helpers.errors import DimensionMismatchError, InvalidConstructionError
from mrd import gabidulin
from mrd.gabidulin import (all_linpolys, codeword_matrix, graph_subspace, lift, line_owner_map,
                           lmrd_code, lmrd_parameters, matrix_rows, rank_codeword, rank_distance)
from space.subspace import gf2_rank, meet_dim


def test_displayed_matrices():
    assert codeword_matrix(LinPoly(2, 0)).tolist() == [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert codeword_matrix(LinPoly(0, 1)).tolist() == [[1, 0, 0, 0], [0, 0, 1, 0], [1, 1, 0, 0]]
    assert codeword_matrix(LinPoly(0, 0)).dtype == np.uint8


def test_nonzero_codewords_have_rank_two():
    ranks = [gf2_rank(matrix_rows(codeword_matrix(p))) for p in all_linpolys()[1:]]
    assert min(ranks) == 2
    for p in all_linpolys()[:40]:
        assert gf2_rank(matrix_rows(codeword_matrix(p))) == np.linalg.matrix_rank(
            galois.GF2(codeword_matrix(p)))


def test_rank_distance():
    A = codeword_matrix(LinPoly(2, 0))
    B = codeword_matrix(LinPoly(0, 1))
    assert rank_distance(A, A) == 0
    assert rank_distance(A, B) == gf2_rank(matrix_rows(codeword_matrix(LinPoly(2, 1))))
    with pytest.raises(DimensionMismatchError):
        rank_distance(A, np.zeros((4, 4), dtype=np.uint8))


def test_lift_equals_graph_subspace():
    for p in all_linpolys():
        word = lift(codeword_matrix(p))
        assert word.dim == 3
        assert word == graph_subspace(p)
        assert meet_dim(word, special_solid()) == 0
    word = rank_codeword(LinPoly(1, 1))
    assert word.poly == LinPoly(1, 1)
    assert lift(word.matrix) == lmrd_code().words[17]


def test_lmrd_code():
    code = lmrd_code()
    assert code.size == 256
    assert code.provenance == "lmrd"
    assert (code.params.v, code.params.k, code.params.d) == (7, 3, 4)


def test_lines_covered_once():
    owners = line_owner_map()
    assert len(owners) == 1792
    assert set(owners) == lines_disjoint_from(special_solid(), 7)


def test_line_owner_rejects_shared_lines(monkeypatch):
    monkeypatch.setattr(gabidulin, "all_linpolys", lambda: [LinPoly(3, 5), LinPoly(3, 5)])
    with pytest.raises(InvalidConstructionError):
        line_owner_map()


def test_parameter_record():
    formula, instance = lmrd_parameters()
    assert tuple(formula) == (7, 256, 6, 3)
    assert tuple(instance) == (7, 256, 4, 3)


if __name__ == "__main__":
    test_displayed_matrices()
    test_nonzero_codewords_have_rank_two()
    test_rank_distance()
    test_lift_equals_graph_subspace()
    test_lmrd_code()
    test_lines_covered_once()
    test_parameter_record()
