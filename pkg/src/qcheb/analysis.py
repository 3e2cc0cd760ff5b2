"""q-derivative relations, q-differential equations, the weight series and
Pearson equation, Rodrigues-type formulae, generating functions, and the
registry of standalone identities.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import families, matrixids
from .polyring import ONE, S, TruncSeries, X, XsPoly, ZERO
from .qkernel import as_rational, binom2, q_int, q_poch
from .report import IdentityReport, check_range, failing, passing


def _xsq_plus(q):
    return X * X + S.scale(q)


# -- derivative relations and q-ODEs -----------------------------------


def deriv_relation_t(n: int, q):
    """D T_n(x,s,q) = [n] U_(n-1)(x,s,q)."""
    q = as_rational(q)

    def sides(m):
        return (
            families.cheb_t(m, q).q_deriv(q),
            families.cheb_u(m - 1, q).scale(q_int(m, q)),
        )

    return check_range("eq-5.18", None, range(1, n + 1), sides)


def deriv_relation_u(n: int, q):
    """(x^2+qs) D U_(n-1)(x,q^2 s) + q^(n-1) x U_(n-1)(x,s) = [n] T_n(x,s)."""
    q = as_rational(q)

    def sides(m):
        u = families.cheb_u(m - 1, q)
        lhs = _xsq_plus(q) * u.dilate(q, 0, 2).q_deriv(q) + X.scale(q ** (m - 1)) * u
        return lhs, families.cheb_t(m, q).scale(q_int(m, q))

    return check_range("eq-5.19", None, range(1, n + 1), sides)


def qode_check_t(n: int, q):
    """Both forms of the T equation:
    (x^2+qs) D^2 T_n(x,q^2 s) + q^(n-1) x D T_n(x,s) = [n]^2 T_n(x,s) and
    (qx^2+s/q) D^2 T_n(x,s) + x D T_n(x,s) = q^(-n) [n]^2 T_n(qx,s)."""
    q = as_rational(q)

    def sides(m):
        t = families.cheb_t(m, q)
        d2_dilated = t.dilate(q, 0, 2).q_deriv(q).q_deriv(q)
        lhs1 = _xsq_plus(q) * d2_dilated + X.scale(q ** (m - 1)) * t.q_deriv(q)
        rhs1 = t.scale(q_int(m, q) ** 2)
        if lhs1 != rhs1:
            return lhs1, rhs1
        lhs2 = (X.scale(q) * X + S.scale(Fraction(1) / q)) * t.q_deriv(q).q_deriv(
            q
        ) + X * t.q_deriv(q)
        rhs2 = t.dilate(q, 1, 0).scale(q_int(m, q) ** 2 / q**m)
        return lhs2, rhs2

    return check_range("eq-5.20-5.22", None, range(n + 1), sides)


def qode_check_u(n: int, q):
    """Both forms of the U equation:
    (x^2+qs) D^2 U_n(x,q^2 s) + q^(n-1) [3] x D U_n(x,s) = [n][n+2] U_n(x,s) and
    (q^3 x^2+s/q) D^2 U_n(x,s) + [3] x D U_n(x,s) = q^(-n) [n][n+2] U_n(qx,s)."""
    q = as_rational(q)
    three = q_int(3, q)

    def sides(m):
        u = families.cheb_u(m, q)
        eig = q_int(m, q) * q_int(m + 2, q)
        lhs1 = _xsq_plus(q) * u.dilate(q, 0, 2).q_deriv(q).q_deriv(q) + X.scale(
            q ** (m - 1) * three
        ) * u.q_deriv(q)
        rhs1 = u.scale(eig)
        if lhs1 != rhs1:
            return lhs1, rhs1
        lhs2 = (X.scale(q**3) * X + S.scale(Fraction(1) / q)) * u.q_deriv(q).q_deriv(
            q
        ) + X.scale(three) * u.q_deriv(q)
        rhs2 = u.dilate(q, 1, 0).scale(eig / q**m)
        return lhs2, rhs2

    return check_range("eq-5.21-5.23", None, range(n + 1), sides)


# -- h-series, Pearson equation, Rodrigues formulae --------------------


@dataclass(frozen=True)
class SeriesContext:
    """Truncation context for the weight-series checks.  s_val substitutes s
    (the weight argument is -x^2/s); order is the exclusive x-power bound."""

    q: Fraction
    s_val: Fraction
    order: int

    def __post_init__(self):
        object.__setattr__(self, "q", as_rational(self.q))
        object.__setattr__(self, "s_val", as_rational(self.s_val))
        if self.s_val == 0:
            raise ValueError("s_val must be nonzero")
        if self.order < 2:
            raise ValueError("order must be at least 2")


def h_coeff(k: int, q) -> Fraction:
    """k-th coefficient of h: (q;q^2)_k / (q^2;q^2)_k."""
    return q_poch(q, q * q, k) / q_poch(q * q, q * q, k)


def h_series(ctx: SeriesContext) -> TruncSeries:
    """h as a series in its own argument, to ctx.order."""
    return TruncSeries([h_coeff(k, ctx.q) for k in range(ctx.order)], ctx.order)


def h_functional_equation_check(ctx: SeriesContext):
    """h(t)(1 - t) = (1 - qt) h(q^2 t), the finite substitute for the
    infinite-product form of h."""
    h = h_series(ctx)
    q = ctx.q
    t = TruncSeries([Fraction(0), Fraction(1)], ctx.order)
    lhs = h * (TruncSeries.one(ctx.order) - t)
    rhs = (TruncSeries.one(ctx.order) - t * q) * h.dilate_var(q * q)
    if lhs == rhs:
        return passing("h-functional-eq", None, (0, ctx.order))
    return failing("h-functional-eq", None, (0, ctx.order), ctx.order, lhs, rhs)


def h_of_x_squared(c: Fraction, ctx: SeriesContext) -> TruncSeries:
    """h(c * x^2) as a series in x."""
    coeffs = [Fraction(0)] * ctx.order
    power = Fraction(1)
    for k in range(ctx.order // 2 + 1):
        if 2 * k < ctx.order:
            coeffs[2 * k] = h_coeff(k, ctx.q) * power
        power *= c
    return TruncSeries(coeffs, ctx.order)


def weight_series(ctx: SeriesContext) -> TruncSeries:
    """w(x) = h(-x^2 / s_val)."""
    return h_of_x_squared(Fraction(-1) / ctx.s_val, ctx)


def pearson_check(ctx: SeriesContext):
    """Pearson operator equation D((x^2 + s) w(x)) = q x w(qx)."""
    q = ctx.q
    w = weight_series(ctx)
    x_sq = TruncSeries([ctx.s_val, Fraction(0), Fraction(1)], ctx.order)
    # the q-derivative loses the top coefficient, so compare one order lower
    lhs = (x_sq * w).qderiv_in_var(q).truncate(ctx.order - 1)
    rhs = (w.dilate_var(q) * q).shift(1).truncate(ctx.order - 1)
    if lhs == rhs:
        return passing("pearson", None, (0, ctx.order))
    return failing("pearson", None, (0, ctx.order), ctx.order, lhs, rhs)


def _poly_to_series(poly: XsPoly, ctx: SeriesContext) -> TruncSeries:
    """A polynomial with s substituted by s_val, as a series in x."""
    sub = poly.subs_s(ctx.s_val)
    coeffs = [Fraction(0)] * ctx.order
    for (dx, _), c in sub.terms.items():
        if dx < ctx.order:
            coeffs[dx] += c
    return TruncSeries(coeffs, ctx.order)


def rodrigues_t(n: int, ctx: SeriesContext):
    """T_n = q^(n(n+1)) / ([1][3]...[2n-1]) * (1/h(-x^2/s))
    * D^n( h(-x^2/(q^(2n) s)) prod_{k=1}^n (x^2/q^(2k+1) + s/q) )."""
    if ctx.order < 2 * n + 10:
        raise ValueError("series order too small for a degree-n Rodrigues check")
    q, s = ctx.q, ctx.s_val
    inner = h_of_x_squared(Fraction(-1) / (q ** (2 * n) * s), ctx)
    for k in range(1, n + 1):
        factor = TruncSeries([s / q, Fraction(0), q ** (-2 * k - 1)], ctx.order)
        inner = inner * factor
    for _ in range(n):
        inner = inner.qderiv_in_var(q)
    pref = q ** (n * (n + 1))
    for j in range(1, n + 1):
        pref /= q_int(2 * j - 1, q)
    # n applications of the q-derivative lose the top n coefficients
    rhs = (weight_series(ctx).recip() * inner * pref).truncate(ctx.order - n)
    lhs = _poly_to_series(families.cheb_t(n, q), ctx).truncate(ctx.order - n)
    if lhs == rhs:
        return passing("eq-5.25", None, (n, n))
    return failing("eq-5.25", None, (n, n), n, rhs, lhs)


def rodrigues_u(n: int, ctx: SeriesContext):
    """U_n = q^(n(n+1)) [n+1] / ([3][5]...[2n+1]) * h(-q x^2/s)
    * D^n( (1/h(-x^2/(q^(2n-1) s))) prod_{k=1}^n (x^2/q^(2k-1) + s/q) )."""
    if ctx.order < 2 * n + 10:
        raise ValueError("series order too small for a degree-n Rodrigues check")
    q, s = ctx.q, ctx.s_val
    inner = h_of_x_squared(Fraction(-1) / (q ** (2 * n - 1) * s), ctx).recip()
    for k in range(1, n + 1):
        factor = TruncSeries([s / q, Fraction(0), q ** (1 - 2 * k)], ctx.order)
        inner = inner * factor
    for _ in range(n):
        inner = inner.qderiv_in_var(q)
    pref = q ** (n * (n + 1)) * q_int(n + 1, q)
    for j in range(1, n + 1):
        pref /= q_int(2 * j + 1, q)
    # n applications of the q-derivative lose the top n coefficients
    rhs = (h_of_x_squared(-q / s, ctx) * inner * pref).truncate(ctx.order - n)
    lhs = _poly_to_series(families.cheb_u(n, q), ctx).truncate(ctx.order - n)
    if lhs == rhs:
        return passing("eq-5.26", None, (n, n))
    return failing("eq-5.26", None, (n, n), n, rhs, lhs)


# -- generating functions ----------------------------------------------


def genfun_u(order: int, q) -> TruncSeries:
    """Right side of the U generating function as a series in z:
    sum_k q^C(k+1,2) z^k prod_{j<k} (x + q^j s z) / prod_{j<=k} (1 - q^j x z)."""
    q = as_rational(q)
    total = TruncSeries.zero(order)
    for k in range(order):
        term = TruncSeries.one(order).shift(k) * XsPoly.const(q ** binom2(k + 1))
        for j in range(k):
            term = term * TruncSeries([X, S.scale(q**j)], order)
        for j in range(k + 1):
            term = term * TruncSeries.geom(X.scale(q**j), order)
        total = total + term
    return total


def genfun_t(order: int, q) -> TruncSeries:
    """Right side of the T generating function as a series in z:
    sum_k q^C(k,2) z^k prod_{j<k} (x + q^(j+1) s z) / prod_{j<k} (1 - q^j x z)."""
    q = as_rational(q)
    total = TruncSeries.zero(order)
    for k in range(order):
        term = TruncSeries.one(order).shift(k) * XsPoly.const(q ** binom2(k))
        for j in range(k):
            term = term * TruncSeries([X, S.scale(q ** (j + 1))], order)
            term = term * TruncSeries.geom(X.scale(q**j), order)
        total = total + term
    return total


def genfun_check(order: int, q):
    """z-coefficients of the generating-function sums match the families."""
    q = as_rational(q)
    u_series = genfun_u(order, q)
    t_series = genfun_t(order, q)

    def sides(n):
        if XsPoly._coerce(u_series.coeffs[n]) != families.cheb_u(n, q):
            return u_series.coeffs[n], families.cheb_u(n, q)
        return XsPoly._coerce(t_series.coeffs[n]), families.cheb_t(n, q)

    return check_range("eq-5.37-5.38", None, range(order), sides)


# -- identity registry -------------------------------------------------


def _u(m, q):
    return families.cheb_u(m, q) if m >= 0 else ZERO


def _registry_pairs(name, n, q):
    """LHS/RHS of one registered identity at index n and rational q."""
    t, u = families.cheb_t, families.cheb_u
    qi = q_int
    if name == "eq-2.28":
        return families.hypergeom_gen_fib(n, q), families.gen_fib(n + 1, q)
    if name == "eq-4.3":
        if n < 1:
            return ZERO, ZERO
        return families.hypergeom_gen_lucas(n, q), families.gen_lucas(n, q)
    if name == "eq-4.4":
        f = families.gen_fib
        lhs = families.gen_lucas(n, q) if n >= 1 else XsPoly.const(2)
        return lhs, f(n + 1, q).scale(1 + q**n) - X.scale(q**n) * f(n, q)
    if name == "eq-4.5":
        f = lambda m: families.gen_fib(m, q).dilate(q, 0, 2)
        lhs = (families.gen_lucas(n, q) if n >= 1 else XsPoly.const(2)).scale(q**n)
        return lhs, f(n + 1).scale(1 + q**n) - X * f(n)
    if name == "eq-3.6":
        raise ValueError("eq-3.6 needs a ParamPoint; handled separately")
    if name in ("eq-5.9", "eq-5.27"):
        return t(n, q), u(n, q) - X.scale(q**n) * _u(n - 1, q)
    if name == "eq-5.10":
        return (
            t(n + 1, q),
            X.scale(q**n) * t(n, q) + _xsq_plus(q) * _u(n - 1, q).dilate(q, 0, 2),
        )
    if name == "eq-5.11":
        gl = lambda m: families.gen_lucas(m, q) if m >= 1 else XsPoly.const(2)
        lhs = gl(n + 1).scale(1 + q**n) - X.scale(q**n) * gl(n)
        return lhs, _xsq_plus(q) * families.gen_fib(n, q).dilate(q, 0, 2)
    if name == "eq-5.28":
        # exponent resolved by brute-force match: kn - C(k,2), not the
        # printed C(kn,2)
        total = ZERO
        for k in range(n + 1):
            c = q ** (k * n - binom2(k))
            total = total + XsPoly.monomial(c, k, 0) * t(n - k, q)
        return u(n, q), total
    if name == "eq-5.29":
        first = u(n + 1, q) - X.scale(q ** (n + 1)) * u(n, q)
        second = X * u(n, q) + S.scale(q**n) * _u(n - 1, q)
        if first != second:
            return first, second
        return t(n + 1, q), second
    if name == "eq-5.30":
        if n < 1:
            return ZERO, ZERO
        return t(n, q).scale(1 + q**n), u(n, q) + S.scale(q ** (2 * n - 1)) * _u(n - 2, q)
    if name == "eq-5.31":
        total = ZERO
        for k in range(n + 1):
            c = Fraction(-1) ** k * q ** (4 * k * n + 3 * k - 2 * k * k)
            total = total + XsPoly.monomial(c * (1 + q ** (2 * n + 1 - 2 * k)), 0, k) * t(
                2 * n + 1 - 2 * k, q
            )
        return u(2 * n + 1, q), total
    if name == "eq-5.32":
        total = XsPoly.monomial(Fraction(-1) ** n * q ** (2 * n * n + n), 0, n)
        for k in range(n):
            c = Fraction(-1) ** k * q ** (4 * k * n + k - 2 * k * k)
            total = total + XsPoly.monomial(c * (1 + q ** (2 * n - 2 * k)), 0, k) * t(
                2 * n - 2 * k, q
            )
        return u(2 * n, q), total
    if name == "eq-5.33":
        lhs = t(n, q).dilate(q, 0, 2) - t(n, q)
        return lhs, S.scale((q**n - 1) * q) * _u(n - 2, q).dilate(q, 0, 2)
    if name == "eq-5.34":
        if n < 1:
            return ZERO, ZERO
        rhs = u(n, q).dilate(q, 0, 2) + S.scale(q) * _u(n - 2, q).dilate(q, 0, 2)
        return t(n, q).scale(1 + q**n), rhs
    if name == "eq-5.35":
        return t(n + 1, q) - X * t(n, q), (X * X + S).scale(q**n) * _u(n - 1, q)
    if name == "eq-5.36":
        first = t(n + 1, q)
        first_rhs = X * t(n, q) + (X * X + S).scale(q**n) * _u(n - 1, q)
        if first != first_rhs:
            return first, first_rhs
        return u(n, q), t(n, q) + X.scale(q**n) * _u(n - 1, q)
    raise ValueError(f"unknown identity {name}")


REGISTRY_IDS = (
    "eq-2.28",
    "eq-4.3",
    "eq-4.4",
    "eq-4.5",
    "eq-5.9",
    "eq-5.10",
    "eq-5.11",
    "eq-5.27",
    "eq-5.28",
    "eq-5.29",
    "eq-5.30",
    "eq-5.31",
    "eq-5.32",
    "eq-5.33",
    "eq-5.34",
    "eq-5.35",
    "eq-5.36",
)


def registry_check(name: str, max_n: int, q):
    """One registered identity for 0 <= n <= max_n at one q sample."""
    q = as_rational(q)
    # the paired-index identities consume n as the free index of their display
    limit = max_n // 2 if name in ("eq-5.31", "eq-5.32") else max_n
    return check_range(name, None, range(limit + 1), lambda n: _registry_pairs(name, n, q))


def identity_registry_run(max_n: int, qs, selection=REGISTRY_IDS):
    """Run the selected registry identities at each q sample; reports are
    tagged with the q value (b plays no role in these identities)."""
    from .qkernel import ParamPoint

    reports = []
    for name in selection:
        for q in qs:
            q = as_rational(q)
            r = registry_check(name, max_n, q)
            label = ParamPoint(q, Fraction(0), allow_classical=True)
            reports.append(
                IdentityReport(r.identity_id, label, r.index_range, r.status, r.witness)
            )
    return reports
