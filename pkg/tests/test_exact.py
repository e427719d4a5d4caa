from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import rank_by_minors
from twistordef.deformation import Configuration, gamma_matrix
from twistordef.exact import (
    RatMatrix,
    as_rational,
    in_row_space,
    is_rref,
    quotient_dimension,
    rank,
    row_space_basis,
)

small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r))
    return RatMatrix.from_rows(rows, cols=c)


def test_rank_identity():
    assert rank(RatMatrix.identity(3)) == 3


def test_rank_proportional_rows():
    assert rank(RatMatrix.from_rows([[1, 2], [2, 4]])) == 1


def test_rank_gamma_matrix_n3():
    m = gamma_matrix(Configuration(3, (1, 2, 3)))
    assert (m.rows, m.cols) == (5, 9)
    assert rank(m) == 5


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[2, 4]], [[1, 2]]),
        ([[1, 0], [0, 1], [1, 1]], [[1, 0], [0, 1]]),
        ([[0, 0]], []),
    ],
)
def test_row_space_basis(rows, expected):
    basis = row_space_basis(RatMatrix.from_rows(rows))
    assert basis.to_rows() == [[Fraction(x) for x in r] for r in expected]
    assert basis.cols == 2


def test_quotient_dimension():
    span = gamma_matrix(Configuration(3, (1, 2, 3)))
    assert quotient_dimension(9, span) == 4
    assert quotient_dimension(6, gamma_matrix(Configuration(2, (1, 2)))) == 1
    assert quotient_dimension(7, RatMatrix.from_rows([], cols=7)) == 7


def test_quotient_dimension_rejects_wrong_width():
    with pytest.raises(ValueError):
        quotient_dimension(4, RatMatrix.identity(3))


def test_malformed_matrix_rejected():
    with pytest.raises(ValueError):
        RatMatrix(2, 2, (Fraction(1),) * 3)
    with pytest.raises(ValueError):
        RatMatrix.from_rows([[1, 2], [3]])


def test_floats_refused():
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational("6/4") == Fraction(3, 2)


def test_membership():
    span = RatMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
    assert in_row_space([1, 2, 1], span)
    assert not in_row_space([1, 0, 0], span)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_matches_transpose(m):
    assert rank(m) == rank(m.transpose())


@settings(max_examples=150, deadline=None)
@given(matrices(max_rows=4, max_cols=4))
def test_rank_matches_minor_oracle(m):
    assert rank(m) == rank_by_minors(m.to_rows())


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_row_space_basis_is_canonical_rref(m):
    basis = row_space_basis(m)
    assert is_rref(basis)
    assert basis.rows == rank(m)
    assert all(in_row_space(m.row(i), basis) for i in range(m.rows))
    assert row_space_basis(basis) == basis


def test_reduced_fraction_arithmetic():
    import random

    rng = random.Random(7)
    for _ in range(1000):
        p, r = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        q, s = rng.randint(1, 10**6), rng.randint(1, 10**6)
        total = Fraction(p, q) + Fraction(r, s)
        assert total.denominator > 0
        from math import gcd

        assert gcd(abs(total.numerator), total.denominator) == 1
        assert total.numerator * q * s == (p * s + r * q) * total.denominator
