"""Transfer-matrix products, Cassini-type identities and tridiagonal
determinants."""

from fractions import Fraction

import pytest

from qcheb import families, matrixids
from qcheb.polyring import S, X
from qcheb.qkernel import ParamPoint, sample_points

F = Fraction

POINTS = sample_points(levels=range(0, 30))
NEG_POINTS = [p for p in POINTS if p.is_pole_free(range(-10, 0))]
QS = (F(2), F(1, 2), F(3, 5), F(7))


@pytest.mark.parametrize("point", POINTS, ids=str)
def test_fib_matrix_entries(point):
    for n in range(1, 8):
        assert matrixids.fib_matrix_product(n, point) == matrixids.fib_matrix_expected(
            n, point
        )


def test_fib_matrix_product_needs_positive_n():
    with pytest.raises(ValueError):
        matrixids.fib_matrix_product(0, POINTS[0])


@pytest.mark.parametrize("point", NEG_POINTS, ids=str)
def test_cassini_all_integers(point):
    for n in range(-5, 12):
        assert matrixids.cassini_check(n, point).passed


@pytest.mark.parametrize("point", POINTS, ids=str)
def test_cassini_euler(point):
    for n in range(1, 7):
        for k in range(1, 5):
            assert matrixids.cassini_euler_check(n, k, point).passed


@pytest.mark.parametrize("point", POINTS, ids=str)
def test_trace_is_lucas(point):
    assert matrixids.trace_lucas_check(8, point).passed


@pytest.mark.parametrize("q", QS)
def test_cheb_matrix_entries(q):
    for n in range(1, 9):
        assert matrixids.cheb_matrix_product(n, q) == matrixids.cheb_matrix_expected(
            n, q
        )


@pytest.mark.parametrize("q", QS)
def test_det_identity(q):
    assert matrixids.det_identity_check(12, q).passed


@pytest.mark.parametrize("r", (F(2), F(1, 2), F(3)))
def test_det_identity_sqrt(r):
    assert matrixids.det_identity_sqrt_check(9, r).passed


@pytest.mark.parametrize("q", QS)
def test_tridiagonal_determinants(q):
    for n in range(1, 12):
        assert matrixids.tridiag_u(n, q) == families.cheb_u(n, q)
        assert matrixids.tridiag_t(n, q) == families.cheb_t(n, q)


def test_cheb_factor_shape():
    m = matrixids.cheb_factor(2, F(2))
    q = F(2)
    assert m.a11 == X.scale(q**2)
    assert m.a12 == (X * X + S.scale(q)).scale(q**2)
