"""Moment-functional machinery: expansion of powers of x in the generalized
q-Fibonacci and q-Lucas bases, moments from three-term recurrences, the
q-Catalan connection and the trace-Lucas non-orthogonality witness.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import families
from .polyring import ONE, S, X, XsPoly, ZERO
from .qkernel import ParamPoint, as_rational, q_binom, q_catalan, q_int, q_poch
from .report import check_range, failing, passing


@dataclass(frozen=True)
class RecurrenceSpec:
    """Monic three-term recurrence p_k = x p_(k-1) + t(k) p_(k-2), with
    p_0 = 1 and p_1 = x.  t(k) returns an s-multiple as an XsPoly.

    For Fibonacci-type families the basis index k corresponds to family
    index k + 1 (p_k = F_(k+1)); the constructors below handle the shift.
    """

    name: str
    t: Callable[[int], XsPoly]

    def basis(self, count: int):
        """The first `count` basis polynomials p_0 ... p_(count-1)."""
        polys = [ONE, X][:count]
        for k in range(2, count):
            polys.append(X * polys[k - 1] + self.t(k) * polys[k - 2])
        return polys


def gen_fib_spec(q) -> RecurrenceSpec:
    """Basis p_k = F_(k+1)(x,-1,s,q): t(k) = q^(k-1) s / ((1+q^(k-1))(1+q^k))."""
    q = as_rational(q)
    return RecurrenceSpec(
        "gen_fib",
        lambda k: S.scale(q ** (k - 1) / ((1 + q ** (k - 1)) * (1 + q**k))),
    )


def gen_lucas_spec(q) -> RecurrenceSpec:
    """Basis L*_k (L_k(x,-1,s,q) for k >= 1, L*_0 = 1):
    t(2) = qs/(1+q) after normalizing the degree-0 element, then
    t(k) = q^(k-1) s / ((1+q^(k-2))(1+q^(k-1)))."""
    q = as_rational(q)

    def t(k):
        if k == 2:
            return S.scale(q / (1 + q))
        return S.scale(q ** (k - 1) / ((1 + q ** (k - 2)) * (1 + q ** (k - 1))))

    return RecurrenceSpec("gen_lucas", t)


def carlitz_spec(q) -> RecurrenceSpec:
    """Basis p_k = F_(k+1)(x,s,q) (Carlitz, b = 0): t(k) = q^(k-1) s."""
    q = as_rational(q)
    return RecurrenceSpec("carlitz", lambda k: S.scale(q ** (k - 1)))


def classical_spec() -> RecurrenceSpec:
    """The q = 1 Fibonacci basis: t(k) = s."""
    return RecurrenceSpec("classical", lambda k: S)


def moments_from_recurrence(spec: RecurrenceSpec, count: int):
    """Moments of the functional determined by the basis: expand x^m in the
    p_k via x p_k = p_(k+1) - t(k+1) p_(k-1); the p_0 coefficient is the
    moment.  Returns [moment(x^0), ..., moment(x^(count-1))] as s-polynomials.
    """
    coeffs = {0: ONE}  # x^0 = p_0
    moments = [ONE]
    for _ in range(1, count):
        nxt = {}
        for k, c in coeffs.items():
            nxt[k + 1] = nxt.get(k + 1, ZERO) + c
            if k >= 1:
                nxt[k - 1] = nxt.get(k - 1, ZERO) - spec.t(k + 1) * c
        coeffs = {k: c for k, c in nxt.items() if not c.is_zero()}
        moments.append(coeffs.get(0, ZERO))
    return moments


def expand_in_basis(poly: XsPoly, basis):
    """Express an x-polynomial in a basis that is monic in x (apart from a
    possibly scaled degree-0 element): returns coefficient s-polynomials.
    The degree-0 coefficient equals the functional value when basis[0] = 1."""
    degree = poly.x_degree()
    if degree + 1 > len(basis):
        raise ValueError("basis too short for the polynomial degree")
    coeffs = [ZERO] * (degree + 1)
    residual = poly
    for k in range(degree, 0, -1):
        lead = residual.x_coeffs().get(k, ZERO)
        if lead.is_zero():
            continue
        coeffs[k] = lead
        residual = residual - lead * basis[k]
    if residual.x_degree() > 0:
        raise ValueError("reduction failed: residual still involves x")
    coeffs[0] = residual
    return coeffs


# -- closed-form expansions and moments --------------------------------


def expand_x_fib(n: int, q):
    """Coefficients c_k of x^n = sum_k c_k F_(n+1-2k)(x,-1,s,q):
    c_k = ([n over k] - [n over k-1]) (-s)^k / ((-q;q)_k (-q^(n+2-2k);q)_k)."""
    q = as_rational(q)
    out = []
    for k in range(n // 2 + 1):
        scalar = (q_binom(n, k, q) - q_binom(n, k - 1, q)) / (
            q_poch(-q, q, k) * q_poch(-(q ** (n + 2 - 2 * k)), q, k)
        )
        out.append(XsPoly.monomial(scalar * Fraction(-1) ** k, 0, k))
    return out


def expand_x_lucas(n: int, q):
    """Coefficients c_k of x^n = sum_k c_k L*_(n-2k)(x,s,q):
    c_k = [n over k] (-qs)^k / ((-q;q)_k (-q^(n-2k+1);q)_k)."""
    q = as_rational(q)
    out = []
    for k in range(n // 2 + 1):
        scalar = q_binom(n, k, q) / (
            q_poch(-q, q, k) * q_poch(-(q ** (n - 2 * k + 1)), q, k)
        )
        out.append(XsPoly.monomial(scalar * (-q) ** k, 0, k))
    return out


def reconstruct_x_fib(n: int, q) -> XsPoly:
    total = ZERO
    for k, c in enumerate(expand_x_fib(n, q)):
        total = total + c * families.gen_fib(n + 1 - 2 * k, q)
    return total


def reconstruct_x_lucas(n: int, q) -> XsPoly:
    total = ZERO
    for k, c in enumerate(expand_x_lucas(n, q)):
        m = n - 2 * k
        basis_poly = ONE if m == 0 else families.gen_lucas(m, q)
        total = total + c * basis_poly
    return total


def moments_fib_closed(n: int, q) -> XsPoly:
    """Even moment of the generalized q-Fibonacci functional:
    (1/[n+1]) [2n over n] (-qs)^n / ((-q;q)_n (-q^2;q)_n).

    The (-qs)^n factor (rather than (-s)^n) is forced by the expansion of
    x^(2n) in the basis; the recurrence DP is the oracle here."""
    q = as_rational(q)
    scalar = (
        q_binom(2 * n, n, q)
        / q_int(n + 1, q)
        * (-q) ** n
        / (q_poch(-q, q, n) * q_poch(-(q**2), q, n))
    )
    return XsPoly.monomial(scalar, 0, n)


def moments_fib_product_form(n: int, q) -> XsPoly:
    """Same moment with the denominator in product form
    (1+q)(1+q^(n+1)) prod_{j=2}^n (1+q^j)^2."""
    q = as_rational(q)
    if n == 0:
        return ONE
    den = (1 + q) * (1 + q ** (n + 1))
    for j in range(2, n + 1):
        den *= (1 + q**j) ** 2
    scalar = q_binom(2 * n, n, q) / q_int(n + 1, q) * (-q) ** n / den
    return XsPoly.monomial(scalar, 0, n)


def moments_lucas_closed(n: int, q) -> XsPoly:
    """Even moment of the generalized q-Lucas functional:
    [2n over n] (-qs)^n / (-q;q)_n^2."""
    q = as_rational(q)
    scalar = q_binom(2 * n, n, q) * (-q) ** n / q_poch(-q, q, n) ** 2
    return XsPoly.monomial(scalar, 0, n)


# -- consistency checks ------------------------------------------------


def moment_consistency_check(which: str, n_max: int, q):
    """DP moments against the closed forms, including zero odd moments."""
    q = as_rational(q)
    if which == "fib":
        spec, closed = gen_fib_spec(q), moments_fib_closed
        ident = "eq-4.10"
    elif which == "lucas":
        spec, closed = gen_lucas_spec(q), moments_lucas_closed
        ident = "eq-4.14"
    else:
        raise ValueError(which)
    dp = moments_from_recurrence(spec, 2 * n_max + 1)

    def sides(m):
        if m % 2:
            return dp[m], ZERO
        return dp[m], closed(m // 2, q)

    return check_range(ident, None, range(2 * n_max + 1), sides)


def carlitz_moment_check(n_max: int, q):
    """Carlitz moments: Lambda(x^(2n)) = (-qs)^n C_n(q)."""
    q = as_rational(q)
    dp = moments_from_recurrence(carlitz_spec(q), 2 * n_max + 1)

    def sides(m):
        if m % 2:
            return dp[m], ZERO
        n = m // 2
        return dp[m], XsPoly.monomial((-q) ** n * q_catalan(n, q), 0, n)

    return check_range("carlitz-moments", None, range(2 * n_max + 1), sides)


def classical_moment_check(n_max: int):
    """q = 1 moments: Lambda(x^(2n)) = (-s)^n C(2n,n)/(n+1), plus the exact
    classical reconstruction of x^n."""
    one = Fraction(1)
    dp = moments_from_recurrence(classical_spec(), 2 * n_max + 1)

    def sides(m):
        if m % 2:
            return dp[m], ZERO
        n = m // 2
        catalan = q_catalan(n, one)
        expected = XsPoly.monomial(Fraction(-1) ** n * catalan, 0, n)
        if dp[m] != expected:
            return dp[m], expected
        # reconstruction (classical limit of the b = -1 machinery at q = 1,
        # which collapses to binomial-difference coefficients)
        total = ZERO
        basis = classical_spec().basis(m + 2)
        for k, c in enumerate(expand_in_basis(X_POWER(m), basis)):
            total = total + c * basis[k]
        return total, X_POWER(m)

    return check_range("eq-4.7-4.8", None, range(2 * n_max + 1), sides)


def X_POWER(m: int) -> XsPoly:
    return XsPoly.monomial(1, m, 0)


def orthogonality_check(spec: RecurrenceSpec, total_degree: int):
    """Smoke test: Lambda(p_m p_n) = 0 for m != n with m + n <= total_degree."""
    basis = spec.basis(total_degree + 2)
    for m in range(total_degree + 1):
        for n in range(m + 1, total_degree + 1 - m):
            coeffs = expand_in_basis(basis[m] * basis[n], basis)
            value = _apply_functional(coeffs, spec, basis)
            if not value.is_zero():
                return failing(
                    f"orthogonality-{spec.name}", None, (0, total_degree),
                    (m, n), value, ZERO,
                )
    return passing(f"orthogonality-{spec.name}", None, (0, total_degree))


def _apply_functional(coeffs, spec, basis):
    # Lambda(p_0) = 1 and Lambda(p_k) = 0 for k >= 1, so the functional value
    # is the degree-0 coefficient of the expansion.
    return coeffs[0]


def nonorthogonality_witness(q):
    """For the b = 0 trace-Lucas family:
    l_1 l_3 = l_4 - q^3 s l_2 - q^2 (1-q) s^2, so any functional annihilating
    l_n (n > 0) has Lambda(l_1 l_3) = -q^2 (1-q) s^2, nonzero for q != 1."""
    q = as_rational(q)
    point = ParamPoint(q, Fraction(0), allow_classical=(q == 1))
    l = lambda n: families.lucas_trace(n, point).as_poly()
    defect = XsPoly.monomial(-(q**2) * (1 - q), 0, 2)
    identity = l(1) * l(3) - l(4) + S.scale(q**3) * l(2) + (-defect)
    if not identity.is_zero():
        return failing("nonorthogonality", point, (0, 4), "identity", identity, ZERO)
    # expansion route: reduce l_1 l_3 against the monic l-basis (l_0 = 2
    # normalized to the constant 1) and read off the functional value
    basis = [ONE] + [l(n) for n in range(1, 5)]
    value = expand_in_basis(l(1) * l(3), basis)[0]
    if value != defect:
        return failing("nonorthogonality", point, (0, 4), "functional", value, defect)
    return passing("nonorthogonality", point, (0, 4))
