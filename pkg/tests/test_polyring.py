"""Polynomial ring layer: XsPoly arithmetic, dilation, q-derivative,
serialization, SPoly Laurent pairs, 2x2 matrices and truncated series."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcheb.polyring import ONE, S, SPoly, TruncSeries, X, XsPoly, ZERO, Mat2
from qcheb.qkernel import q_int

F = Fraction

rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=12
)

polys = st.dictionaries(
    st.tuples(st.integers(0, 5), st.integers(0, 4)),
    rationals,
    max_size=6,
).map(XsPoly)


def test_basic_arithmetic():
    p = X * X + S.scale(3)
    q = X - ONE
    assert p + q == XsPoly({(2, 0): 1, (0, 1): 3, (1, 0): 1, (0, 0): -1})
    assert p - p == ZERO
    assert (X + S) * (X - S) == X * X - S * S
    assert p.scale(0) == ZERO


def test_zero_normalization_and_hash():
    p = X + ONE - X - ONE
    assert p == ZERO and p.is_zero()
    assert hash(X + S) == hash(S + X)


def test_dilate():
    q = F(2)
    p = XsPoly.monomial(5, 2, 3)
    assert p.dilate(q, 1, 0) == XsPoly.monomial(5 * 4, 2, 3)
    assert p.dilate(q, 0, 2) == XsPoly.monomial(5 * 64, 2, 3)
    assert p.dilate(q, -1, 1) == XsPoly.monomial(5 * 2, 2, 3)


@settings(max_examples=40)
@given(polys, polys)
def test_dilate_is_ring_homomorphism(p, r):
    q = F(3, 2)
    assert (p * r).dilate(q, 1, 2) == p.dilate(q, 1, 2) * r.dilate(q, 1, 2)
    assert (p + r).dilate(q, 1, 2) == p.dilate(q, 1, 2) + r.dilate(q, 1, 2)


def test_q_deriv_monomials():
    q = F(2)
    assert (X * X * X).q_deriv(q) == (X * X).scale(q_int(3, q))
    assert S.q_deriv(q) == ZERO
    assert ONE.q_deriv(q) == ZERO
    # classical at q = 1
    assert (X * X).q_deriv(F(1)) == X.scale(2) == (X * X).deriv()


@settings(max_examples=40)
@given(polys, polys)
def test_q_leibniz_rule(p, r):
    # D(fg) = (Df) g + f(qx) (Dg)
    q = F(2)
    lhs = (p * r).q_deriv(q)
    rhs = p.q_deriv(q) * r + p.dilate(q, 1, 0) * r.q_deriv(q)
    assert lhs == rhs


@settings(max_examples=40)
@given(polys)
def test_json_round_trip(p):
    assert XsPoly.from_json(p.to_json()) == p


def test_subs_and_eval():
    p = X * X + S.scale(2)
    assert p.subs_s(F(3)) == X * X + XsPoly.const(6)
    assert p.evalf(2.0, 3.0) == pytest.approx(10.0)


def test_str_canonical():
    p = X.scale(-2) * X + S + ONE
    assert str(p) == "-2*x^2 + 1 + s"


def test_spoly_normal_form():
    v = SPoly(X.shift_s(2), 3)  # x s^2 / s^3 -> x / s
    assert v.spow == 1 and v.num == X
    assert SPoly(ZERO, 5).spow == 0
    assert SPoly(X, -2) == SPoly(X.shift_s(2))


def test_spoly_arithmetic():
    a = SPoly(X, 1)
    b = SPoly(S)
    assert a + b == SPoly(X + S.shift_s(1), 1)
    assert a * b == SPoly(X)  # x/s * s = x
    assert a.times_s_power(1) == SPoly(X)
    assert a.times_s_power(-1) == SPoly(X, 2)


def test_spoly_dilate_respects_denominator():
    q = F(2)
    v = SPoly(X, 1)  # x / s
    # substituting s -> q s divides the value by q
    assert v.dilate(q, 0, 1) == SPoly(X.scale(F(1, 2)), 1)


def test_mat2():
    m = Mat2(ONE, X, ZERO, ONE)
    n = Mat2(ONE, S, ZERO, ONE)
    assert (m * n).a12 == X + S
    assert m.det() == ONE
    assert m.trace() == XsPoly.const(2)
    assert Mat2.identity() * m == m


def test_series_basic():
    t = TruncSeries([F(1), F(2), F(3)], 5)
    assert (t + t).coeffs[:3] == [2, 4, 6]
    assert (t * TruncSeries.one(5)) == t
    geom = TruncSeries.geom(F(2), 4)
    assert geom.coeffs == [1, 2, 4, 8]
    assert geom.shift(1).coeffs == [0, 1, 2, 4]


def test_series_recip():
    t = TruncSeries([F(1), F(-1)], 6)  # 1 - z
    assert t.recip() == TruncSeries.geom(F(1), 6)
    u = TruncSeries([F(2), F(1), F(3)], 6)
    prod = u * u.recip()
    assert prod == TruncSeries.one(6)


def test_series_recip_xspoly_coeffs():
    t = TruncSeries([ONE, X], 5)
    assert t * t.recip() == TruncSeries([ONE], 5)


def test_series_qderiv_and_dilate():
    q = F(2)
    t = TruncSeries([F(1), F(1), F(1), F(1)], 4)
    d = t.qderiv_in_var(q)
    assert d.coeffs == [1, q_int(2, q), q_int(3, q), 0]
    assert t.dilate_var(q).coeffs == [1, 2, 4, 8]
    assert t.dilate_var(q, 2).coeffs == [1, 4, 16, 64]


def test_series_truncate():
    t = TruncSeries([F(1), F(2), F(3)], 3)
    assert t.truncate(2).coeffs == [1, 2]
    with pytest.raises(ValueError):
        t.truncate(4)


def test_series_order_mismatch():
    with pytest.raises(ValueError):
        TruncSeries.one(3) + TruncSeries.one(4)
