"""Family generators: dual/triple routes, negative-index extensions, aliases
between families, hypergeometric forms and the dispatch surface."""

from fractions import Fraction

import pytest

from qcheb import families
from qcheb.polyring import ONE, S, SPoly, X, XsPoly, ZERO
from qcheb.qkernel import ParamPoint, q_int, q_poch, sample_points

F = Fraction

POINTS = sample_points(levels=range(0, 30))
QS = (F(2), F(1, 2), F(3, 5), F(7))


def test_fib_carlitz_first_terms():
    q = F(2)
    assert families.fib_carlitz(0, q) == ZERO
    assert families.fib_carlitz(1, q) == ONE
    assert families.fib_carlitz(2, q) == X
    assert families.fib_carlitz(3, q) == X * X + S.scale(q)
    assert families.fib_carlitz(4, q) == X * X * X + X * S.scale(q * (1 + q))


@pytest.mark.parametrize("q", QS)
def test_fib_carlitz_dual_route(q):
    for n in range(16):
        assert families.fib_carlitz(n, q) == families.fib_carlitz_rec(n, q)


@pytest.mark.parametrize("point", POINTS, ids=str)
def test_fib_qb_three_routes(point):
    for n in range(10):
        closed = families.fib_qb_closed(n, point)
        assert families.fib_qb(n, point) == closed
        assert families.fib_qb_dilated(n, point) == closed


def test_fib_qb_reduces_to_carlitz_at_b0():
    for q in QS:
        point = ParamPoint(q, F(0))
        for n in range(12):
            assert families.fib_qb(n, point) == families.fib_carlitz(n, q)


@pytest.mark.parametrize(
    "point", [p for p in POINTS if p.is_pole_free(range(-10, 0))], ids=str
)
def test_fib_qb_negative_indices(point):
    for n in range(-8, 1):
        assert families.fib_qb_ext(n, point) == families.fib_qb_backward(n, point)


@pytest.mark.parametrize("point", POINTS, ids=str)
def test_lucas_trace_routes(point):
    assert families.lucas_trace(0, point) == SPoly(XsPoly.const(2))
    for n in range(1, 10):
        assert families.lucas_trace(n, point) == SPoly(
            families.lucas_trace_closed(n, point)
        )


@pytest.mark.parametrize(
    "point", [p for p in POINTS if p.is_pole_free(range(-10, 0))], ids=str
)
def test_lucas_trace_negative(point):
    for n in range(1, 8):
        assert families.lucas_trace_neg_closed(n, point) == families.lucas_trace(
            -n, point
        )


@pytest.mark.parametrize("point", POINTS, ids=str)
def test_lucas_qb_routes(point):
    assert families.lucas_qb(0, point) == XsPoly.const(1 - point.b)
    for n in range(1, 10):
        closed = families.lucas_qb_closed(n, point)
        assert families.lucas_qb(n, point) == closed
        assert families.lucas_qb_dilated(n, point) == closed
        assert families.lucas_qb_relation(n, point) == closed


@pytest.mark.parametrize("q", QS)
def test_gen_lucas_negative(q):
    for n in range(1, 8):
        assert families.gen_lucas_neg_closed(n, q) == families.gen_lucas_backward(-n, q)


@pytest.mark.parametrize("q", QS)
def test_cheb_u_routes_and_alias(q):
    for n in range(12):
        closed = families.cheb_u_closed(n, q)
        assert families.cheb_u(n, q) == closed
        # U_n = (-q;q)_n F_(n+1)(x,-1,s,q)
        assert closed == families.gen_fib(n + 1, q).scale(q_poch(-q, q, n))
        # U_n = u_n(x; q, -qs)
        assert closed == families.alsalam_ismail(n, q, S.scale(-q), q)


@pytest.mark.parametrize("q", QS)
def test_cheb_t_routes_and_alias(q):
    for n in range(12):
        closed = families.cheb_t_closed(n, q)
        assert families.cheb_t(n, q) == closed
        if n >= 1:
            # T_n = (-q;q)_(n-1) L_n(x,-1,s,q)
            assert closed == families.gen_lucas(n, q).scale(q_poch(-q, q, n - 1))


@pytest.mark.parametrize("q", QS)
def test_cheb_negative_indices(q):
    assert families.cheb_u_ext(-1, q) == SPoly(ZERO)
    for n in range(-9, 0):
        assert families.cheb_u_ext(n, q) == families.cheb_u_backward(n, q)
        assert families.cheb_t_ext(n, q) == families.cheb_t_backward(n, q)


@pytest.mark.parametrize("q", QS)
def test_hypergeometric_forms(q):
    for n in range(10):
        assert families.hypergeom_gen_fib(n, q) == families.gen_fib(n + 1, q)
    for n in range(1, 10):
        assert families.hypergeom_gen_lucas(n, q) == families.gen_lucas(n, q)


def test_alsalam_ismail_recurrence():
    q, a = F(2), F(3)
    beta = F(5)
    u = lambda n: families.alsalam_ismail(n, a, beta, q)
    assert u(0) == ONE
    assert u(1) == X.scale(1 + a)
    for n in range(2, 8):
        assert u(n) == X.scale(1 + q ** (n - 1) * a) * u(n - 1) - q ** (n - 2) * beta * u(
            n - 2
        )


def test_family_poly_dispatch_and_fault():
    point = ParamPoint(F(2), F(0))
    assert families.family_poly(families.FamilyId.CHEB_T, 2, point) == families.cheb_t(
        2, F(2)
    )
    families.set_fault(families.FamilyId.CHEB_T)
    try:
        perturbed = families.family_poly(families.FamilyId.CHEB_T, 2, point)
        assert perturbed == families.cheb_t(2, F(2)) + ONE
        # other families unaffected
        assert families.family_poly(
            families.FamilyId.CHEB_U, 2, point
        ) == families.cheb_u(2, F(2))
    finally:
        families.set_fault(None)
    assert families.family_poly(families.FamilyId.CHEB_T, 2, point) == families.cheb_t(
        2, F(2)
    )


def test_binet_float():
    # exact classical values at (3, 1): 1, 3, 10, 33, ...
    assert families.binet_float_fib(1, 3.0, 1.0) == pytest.approx(1.0)
    assert families.binet_float_fib(4, 3.0, 1.0) == pytest.approx(33.0)
