"""DeVore designs, the Johnson bound and the OOC family."""

from fractions import Fraction

import numpy as np
import pytest

from detsense import (DevoreDesign, ParameterError, coherence, devore_matrix,
                      devore_optimality_ratio, johnson_bound, ooc_family,
                      ooc_matrix)


def test_devore_2_1_by_hand():
    # polynomials over GF(2) of degree <= 1 in lex coefficient order:
    # 0, x, 1, 1+x; rows are (x, y) pairs flattened as x*2 + y
    expected = np.zeros((4, 4), dtype=np.int8)
    graphs = [(0, 0), (0, 1), (1, 1), (1, 0)]  # Q(0), Q(1) per column
    for col, (y0, y1) in enumerate(graphs):
        expected[0 * 2 + y0, col] = 1
        expected[1 * 2 + y1, col] = 1
    got = devore_matrix(2, 1)
    assert np.array_equal(got.entries, expected)


@pytest.mark.parametrize("p,r", [(2, 1), (3, 2), (4, 1), (4, 2), (5, 2),
                                 (7, 2), (8, 2)])
def test_devore_shapes_weights_overlaps(p, r):
    mat = devore_matrix(p, r)
    assert (mat.rows, mat.cols) == (p * p, p ** (r + 1))
    assert mat.alphabet == "binary"
    assert np.all(mat.norm_squares == p)
    gram = mat.entries.astype(np.int64).T @ mat.entries.astype(np.int64)
    np.fill_diagonal(gram, 0)
    assert gram.max() <= r


def test_devore_8_2_coherence(devore_8_2):
    cert = coherence(devore_8_2)
    assert cert.coherence == Fraction(1, 4)
    assert cert.max_inner == 2
    assert cert.rip_order_max == 4
    assert cert.delta_table[4] == Fraction(3, 4)


def test_devore_7_2_coherence(devore_7_2):
    cert = coherence(devore_7_2)
    assert cert.coherence == Fraction(2, 7)
    assert devore_7_2.cols <= johnson_bound(49, 7, 2)


def test_devore_validation():
    with pytest.raises(ParameterError):
        devore_matrix(6, 1)       # neither prime nor a power of two
    with pytest.raises(ParameterError):
        devore_matrix(9, 1)       # prime power, not prime, not 2^e
    with pytest.raises(ParameterError):
        devore_matrix(8, 8)       # r must stay below p
    with pytest.raises(ParameterError):
        devore_matrix(65, 1)
    with pytest.raises(ParameterError):
        DevoreDesign(8, -1)


# oracle: the nested floor chain written longhand
def johnson_oracle(m, w, overlap):
    value = (m - overlap) // (w - overlap)
    j = overlap - 1
    while j >= 0:
        value = ((m - j) * value) // (w - j)
        j -= 1
    return value


def test_johnson_bound_frozen_values():
    assert johnson_bound(64, 8, 2) == 720
    assert johnson_bound(15, 5, 2) == 42
    assert johnson_bound(49, 7, 2) == 504


def test_johnson_bound_matches_oracle():
    for m, w, overlap in [(64, 8, 2), (15, 5, 2), (49, 7, 2), (16, 4, 1),
                          (25, 5, 0), (100, 10, 3)]:
        assert johnson_bound(m, w, overlap) == johnson_oracle(m, w, overlap)


def test_johnson_bound_validation():
    with pytest.raises(ParameterError):
        johnson_bound(10, 11, 2)
    with pytest.raises(ParameterError):
        johnson_bound(10, 5, 5)
    with pytest.raises(ParameterError):
        johnson_bound(10, 5, -1)


def test_optimality_ratio():
    assert devore_optimality_ratio(8, 2) == Fraction(512, 720)
    assert devore_optimality_ratio(2, 0) == 1
    assert devore_optimality_ratio(64, 2) > devore_optimality_ratio(8, 2)
    assert devore_optimality_ratio(64, 2) <= 1


# oracle: set-based circular correlation
def correlation_oracle(s1, s2, shift, length):
    shifted = {(t + shift) % length for t in s2}
    return len(set(s1) & shifted)


def test_ooc_family_a1():
    fam = ooc_family(1)
    assert fam.length == 15
    assert fam.weight == 5
    assert fam.supports == ((1, 4, 5, 6, 9), (2, 3, 8, 10, 12))
    for s in fam.supports:
        assert len(s) == 5
    for i, s1 in enumerate(fam.supports):
        for j in range(i, len(fam.supports)):
            for shift in range(15):
                if i == j and shift == 0:
                    continue
                assert correlation_oracle(
                    s1, fam.supports[j], shift, 15) <= 2


def test_ooc_family_a2():
    fam = ooc_family(2)
    assert fam.length == 255
    assert len(fam.supports) == 50
    assert all(len(s) == 5 for s in fam.supports)
    # spot check the oracle on a few pairs; the constructor verified all
    for i, j in [(0, 0), (0, 1), (7, 23), (49, 49)]:
        for shift in range(255):
            if i == j and shift == 0:
                continue
            assert correlation_oracle(
                fam.supports[i], fam.supports[j], shift, 255) <= 2


def test_ooc_family_validation():
    with pytest.raises(ParameterError):
        ooc_family(3)
    with pytest.raises(ParameterError):
        ooc_family(0)


def test_ooc_matrix_a1(ooc_1):
    assert (ooc_1.rows, ooc_1.cols) == (15, 30)
    assert np.all(ooc_1.norm_squares == 5)
    cert = coherence(ooc_1)
    assert cert.coherence == Fraction(2, 5)
    assert cert.rip_order_max == 3
    assert cert.delta_table[3] == Fraction(4, 5)
    # all columns distinct
    cols = {tuple(ooc_1.entries[:, j]) for j in range(30)}
    assert len(cols) == 30


def test_ooc_matrix_columns_shift_closed(ooc_1):
    cols = {tuple(ooc_1.entries[:, j]) for j in range(ooc_1.cols)}
    for col in list(cols):
        rotated = tuple(np.roll(np.array(col), 1))
        assert rotated in cols
