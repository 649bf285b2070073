from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from schwinger_su3.poly import (
    Polynomial,
    bargmann_inner,
    monomial_norm_sq,
    monomials_of_bidegree,
    monomials_of_total_degree,
    poly_from_json,
    poly_from_records,
    poly_to_json,
    poly_to_records,
)
from schwinger_su3.scalars import Qsqrt3

Z1 = Polynomial.variable(1)
Z2 = Polynomial.variable(2)
W1 = Polynomial.variable(4)
W2 = Polynomial.variable(5)
W3 = Polynomial.variable(6)

monomials = st.tuples(*([st.integers(0, 3)] * 6))
coefficients = st.fractions(min_value=-9, max_value=9, max_denominator=9)
polys = st.dictionaries(monomials, coefficients, max_size=6).map(Polynomial)


def test_additive_inverse():
    assert Z1 + (-Z1) == Polynomial.zero()
    assert not (Z1 - Z1)


def test_monomial_product():
    f = Z1 * W1
    g = Z2 * W2
    assert (f * g).coefficient((1, 1, 0, 1, 1, 0)) == 1
    assert len((f * g).terms) == 1


def test_scale_with_surd_coefficient():
    c = Qsqrt3(0, Fraction(1, 3))  # 1/sqrt(3)
    f = Z1.scale(c)
    assert f.coefficient((1, 0, 0, 0, 0, 0)) == c


def test_mode_mul_examples():
    one = Polynomial.constant(1)
    assert one.mode_mul(1) == Z1
    assert Z1.mode_mul(4) == Z1 * W1
    z3sq = Polynomial.monomial((0, 0, 2, 0, 0, 0))
    assert z3sq.mode_mul(3) == Polynomial.monomial((0, 0, 3, 0, 0, 0))


def test_mode_diff_examples():
    z1sq = Polynomial.monomial((2, 0, 0, 0, 0, 0))
    assert z1sq.mode_diff(1) == Z1.scale(2)
    assert W1.mode_diff(1) == Polynomial.zero()


def test_mode_index_range():
    with pytest.raises(ValueError):
        Z1.mode_mul(0)
    with pytest.raises(ValueError):
        Z1.mode_diff(7)


@given(polys)
def test_canonical_commutation(f):
    for j in (1, 4, 6):
        lhs = f.mode_mul(j).mode_diff(j) - f.mode_diff(j).mode_mul(j)
        assert lhs == f
    # mixed modes commute
    assert f.mode_mul(1).mode_diff(2) == f.mode_diff(2).mode_mul(1)


def test_gamma_integral_oracle():
    """The exponent-factorial rule is the radial Gaussian moment integral."""
    t = np.linspace(0.0, 60.0, 600001)
    for n in range(5):
        integral = np.trapezoid(t**n * np.exp(-t), t)
        fact = monomial_norm_sq((n, 0, 0, 0, 0, 0))
        assert abs(integral - fact) < 1e-6


def test_inner_product_values():
    z1sq = Polynomial.monomial((2, 0, 0, 0, 0, 0))
    assert bargmann_inner(z1sq, z1sq) == 2
    assert not bargmann_inner(Z1, W1)
    m = Polynomial.monomial((1, 1, 0, 1, 0, 0))
    assert bargmann_inner(m, m) == 1


@given(polys)
def test_inner_product_positive_definite(f):
    ip = bargmann_inner(f, f)
    if f:
        assert float(ip) > 0
    else:
        assert not ip


@given(polys, polys)
def test_creation_annihilation_adjointness(f, g):
    for j in (1, 3, 5):
        assert bargmann_inner(f.mode_mul(j), g) == bargmann_inner(f, g.mode_diff(j))


def test_distinct_bidegrees_orthogonal():
    zw = Z1 * W1 + Z2 * W2 + W3.mode_mul(3)
    parts = (Z1 + Z1 * Z2 * W3).bidegree_split()
    assert set(parts) == {(1, 0), (2, 1)}
    assert not bargmann_inner(parts[(1, 0)], parts[(2, 1)])
    assert not bargmann_inner(Z1, zw)


def test_bidegree_split_examples():
    f = Z1 + Z1 * Z2 * W3
    parts = f.bidegree_split()
    assert parts[(1, 0)] == Z1
    assert parts[(2, 1)] == Z1 * Z2 * W3
    assert not Polynomial.zero().bidegree_split()
    zw = Z1 * W1 + Z2 * W2 + Polynomial.monomial((0, 0, 1, 0, 0, 1))
    assert set(zw.bidegree_split()) == {(1, 1)}
    assert zw.bidegree() == (1, 1)


@given(polys)
def test_bidegree_split_recomposes(f):
    total = Polynomial.zero()
    for part in f.bidegree_split().values():
        d = part.bidegree()
        assert d is not None
        total = total + part
    assert total == f


def test_enumeration_counts():
    assert len(list(monomials_of_bidegree(2, 1))) == 6 * 3
    # six-variable monomials of degree <= 2: 1 + 6 + 21
    assert len(list(monomials_of_total_degree(2))) == 28


@given(polys)
def test_json_round_trip(f):
    assert poly_from_json(poly_to_json(f)) == f
    recs = poly_to_records(f)
    assert recs == sorted(recs, key=lambda r: r["exps"])
    assert poly_from_records(recs) == f


def test_duplicate_record_rejected():
    rec = {"exps": [1, 0, 0, 0, 0, 0], "num": "1", "den": "1",
           "surd_num": "0", "surd_den": "1"}
    with pytest.raises(ValueError):
        poly_from_records([rec, rec])
