"""Transfer-matrix products, Cassini and Cassini-Euler identities, the
Chebyshev determinant identities and tridiagonal determinant representations.
"""

from fractions import Fraction

from . import families
from .polyring import Mat2, ONE, S, SPoly, X, XsPoly, ZERO
from .qkernel import ParamPoint, as_rational, binom2, q_poch
from .report import check_range, failing, passing


def fib_factor(j: int, point: ParamPoint) -> Mat2:
    """The transfer matrix C(x, q^j b, q^j s, q) with the s-dilation applied."""
    q, b = point.q, point.b
    point.require_pole_free((j, j + 1))
    lower = S.scale(q**j / ((1 - q**j * b) * (1 - q ** (j + 1) * b)))
    return Mat2(ZERO, ONE, lower, X)


def fib_matrix_product(n: int, point: ParamPoint) -> Mat2:
    """Left product C(x, q^(n-1)b, q^(n-1)s, q) ... C(x, b, s, q), n >= 1."""
    if n < 1:
        raise ValueError("n >= 1 required")
    acc = fib_factor(0, point)
    for j in range(1, n):
        acc = fib_factor(j, point) * acc
    return acc


def fib_matrix_expected(n: int, point: ParamPoint) -> Mat2:
    """Entrywise family expressions for the product of n Fibonacci factors."""
    q, b = point.q, point.b
    shifted = point.shift_b(1)
    scalar = 1 / ((1 - b) * (1 - q * b))

    def upshift(m):
        return families.fib_qb_ext(m, shifted).dilate(q, 0, 1)

    a11 = (upshift(n - 1).times_s_power(1) * scalar).as_poly()
    a21 = (upshift(n).times_s_power(1) * scalar).as_poly()
    return Mat2(a11, families.fib_qb(n, point), a21, families.fib_qb(n + 1, point))


def cassini_check(n: int, point: ParamPoint):
    """(q,b)-Cassini:
    F_(n-1)(x,qb,qs) F_(n+1)(x,b,s) - F_n(x,b,s) F_n(x,qb,qs)
      = (-1)^n q^C(n,2) s^(n-1) / ((qb;q)_(n-1) (q^2 b;q)_(n-1)); valid on all of Z."""
    q = point.q
    shifted = point.shift_b(1)

    def up(m):
        return families.fib_qb_ext(m, shifted).dilate(q, 0, 1)

    lhs = up(n - 1) * families.fib_qb_ext(n + 1, point) - families.fib_qb_ext(
        n, point
    ) * up(n)
    scalar = (
        Fraction(-1) ** n
        * q ** binom2(n)
        / (q_poch(q * point.b, q, n - 1) * q_poch(q**2 * point.b, q, n - 1))
    )
    rhs = SPoly(XsPoly.const(scalar)).times_s_power(n - 1)
    if lhs == rhs:
        return passing("eq-2.31", point, (n, n))
    return failing("eq-2.31", point, (n, n), n, lhs, rhs)


def cassini_euler_check(n: int, k: int, point: ParamPoint):
    """(q,b)-Cassini-Euler: d(n,k,b,s) built from family values equals
    q^C(n,2) (-s)^n / ((b;q)_n (qb;q)_n) F_k(x, q^n b, q^n s)."""
    q, b = point.q, point.b
    shifted = point.shift_b(1)

    def up(m):
        return families.fib_qb_ext(m, shifted).dilate(q, 0, 1)

    f = lambda m: families.fib_qb_ext(m, point)
    point.require_pole_free((0, 1))
    d = (up(n - 1) * f(n + k) - up(n + k - 1) * f(n)).times_s_power(1) * (
        1 / ((1 - b) * (1 - q * b))
    )
    scalar = q ** binom2(n) / (q_poch(b, q, n) * q_poch(q * b, q, n))
    inner = families.fib_qb_ext(k, point.shift_b(n)).dilate(q, 0, n)
    rhs = (inner * scalar * Fraction(-1) ** n).times_s_power(n)
    if d == rhs:
        return passing("eq-2.33", point, (n, n))
    return failing("eq-2.33", point, (n, n), (n, k), d, rhs)


def trace_lucas_check(n: int, point: ParamPoint):
    """tr(C(x,q^(n-1)b,q^(n-1)s) ... C(x,b,s)) = l_n(x,b,s,q) for n >= 1."""

    def sides(m):
        return (
            SPoly(fib_matrix_product(m, point).trace()),
            families.lucas_trace(m, point),
        )

    return check_range("eq-3.1", point, range(1, n + 1), sides)


# -- Chebyshev transfer matrices ---------------------------------------


def cheb_factor(k: int, q) -> Mat2:
    """V_k(x, s, q) = [[q^k x, q^k (x^2 + qs)], [1, x]]."""
    q = as_rational(q)
    return Mat2(X.scale(q**k), (X * X + S.scale(q)).scale(q**k), ONE, X)


def cheb_matrix_product(n: int, q) -> Mat2:
    """V_0(x,s,q) V_1(x,s,q) ... V_(n-1)(x,s,q), n >= 1."""
    if n < 1:
        raise ValueError("n >= 1 required")
    q = as_rational(q)
    acc = cheb_factor(0, q)
    for k in range(1, n):
        acc = acc * cheb_factor(k, q)
    return acc


def cheb_matrix_expected(n: int, q) -> Mat2:
    """[[T_n(x,s), (x^2+qs) U_(n-1)(x,q^2 s)], [U_(n-1)(x,qs), T_n(x,qs)]]."""
    q = as_rational(q)
    u = families.cheb_u(n - 1, q) if n >= 1 else ONE
    return Mat2(
        families.cheb_t(n, q),
        (X * X + S.scale(q)) * u.dilate(q, 0, 2),
        u.dilate(q, 0, 1),
        families.cheb_t(n, q).dilate(q, 0, 1),
    )


def det_identity_check(n: int, q):
    """T_n(x,s) T_n(x,qs) - (x^2+qs) U_(n-1)(x,qs) U_(n-1)(x,q^2 s)
       = q^C(n+1,2) (-s)^n."""
    q = as_rational(q)

    def sides(m):
        t = families.cheb_t(m, q)
        u = families.cheb_u(m - 1, q)
        lhs = t * t.dilate(q, 0, 1) - (X * X + S.scale(q)) * u.dilate(q, 0, 1) * u.dilate(
            q, 0, 2
        )
        rhs = XsPoly.monomial(q ** binom2(m + 1) * Fraction(-1) ** m, 0, m)
        return lhs, rhs

    return check_range("eq-5.16", None, range(1, n + 1), sides)


def det_identity_sqrt_check(n: int, r):
    """The square-root variant with q = r^2:
    T_n(qx,s) T_n(r x,s) - r^(2n-1) (qx^2+s) U_(n-1)(x,s) U_(n-1)(r x,s)
      = r^(n^2) (-s)^n."""
    r = as_rational(r)
    q = r * r

    def sides(m):
        t = families.cheb_t(m, q)
        u = families.cheb_u(m - 1, q)
        lhs = t.dilate(r, 2, 0) * t.dilate(r, 1, 0) - r ** (2 * m - 1) * (
            X.scale(q) * X + S
        ) * u * u.dilate(r, 1, 0)
        rhs = XsPoly.monomial(r ** (m * m) * Fraction(-1) ** m, 0, m)
        return lhs, rhs

    return check_range("eq-5.17", None, range(1, n + 1), sides)


# -- tridiagonal determinants -----------------------------------------


def tridiag_u(n: int, q) -> XsPoly:
    """Determinant of the n x n tridiagonal matrix with diagonal (1+q^k)x,
    superdiagonal q^k s and subdiagonal -1, via the three-term recursion."""
    q = as_rational(q)
    if n < 1:
        raise ValueError("n >= 1 required")
    prev2, prev1 = ONE, X.scale(1 + q)  # d_0, d_1
    for k in range(2, n + 1):
        prev2, prev1 = prev1, X.scale(1 + q**k) * prev1 + S.scale(q ** (k - 1)) * prev2
    return prev1


def tridiag_t(n: int, q) -> XsPoly:
    """Tridiagonal determinant representation of T_n."""
    q = as_rational(q)
    if n < 1:
        raise ValueError("n >= 1 required")
    prev2, prev1 = ONE, X  # d_0, d_1
    for k in range(2, n + 1):
        prev2, prev1 = prev1, X.scale(1 + q ** (k - 1)) * prev1 + S.scale(
            q ** (k - 1)
        ) * prev2
    return prev1
