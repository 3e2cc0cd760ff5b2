"""Generators for the polynomial families: Carlitz and (q,b)-Fibonacci,
trace-Lucas and (q,b)-Lucas, the b = -1 generalized families, Al-Salam/Ismail
polynomials and both kinds of q-Chebyshev polynomials.

Every family is computable by at least two independent routes (closed-form sum
and three-term recurrence); negative indices carry an explicit s-power
denominator as an SPoly.
"""

import enum
from fractions import Fraction

from .polyring import ONE, S, SPoly, X, XsPoly, ZERO
from .qkernel import (
    ParamPoint,
    as_rational,
    binom2,
    q_binom,
    q_int,
    q_poch,
)

# -- fault injection hook (harness integrity self-test) ----------------

_FAULT = None  # FamilyId whose generated polynomials get one coefficient bumped


def set_fault(family):
    """Perturb one coefficient of every polynomial the given family generates
    through family_poly().  Pass None to clear."""
    global _FAULT
    _FAULT = family


def _memoized(fn):
    cache = {}

    def wrapper(*args):
        key = args
        hit = cache.get(key)
        if hit is None:
            hit = cache[key] = fn(*args)
        return hit

    wrapper.cache_clear = cache.clear
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


class FamilyId(enum.Enum):
    FIB_CARLITZ = "F_CARLITZ"
    FIB_QB = "F_QB"
    LUCAS_TRACE = "L_TRACE"
    LUCAS_QB = "L_QB"
    GEN_FIB = "GEN_FIB"
    GEN_LUCAS = "GEN_LUCAS"
    CHEB_U = "U"
    CHEB_T = "T"
    ALSALAM_ISMAIL = "ALSALAM_ISMAIL"


# -- Carlitz q-Fibonacci ----------------------------------------------


def fib_carlitz(n: int, q) -> XsPoly:
    """Closed-form sum over k of q^(k^2) [n-1-k over k] s^k x^(n-1-2k)."""
    q = as_rational(q)
    terms = {}
    for k in range((n - 1) // 2 + 1) if n >= 1 else range(0):
        terms[(n - 1 - 2 * k, k)] = q ** (k * k) * q_binom(n - 1 - k, k, q)
    return XsPoly(terms)


@_memoized
def fib_carlitz_rec(n: int, q) -> XsPoly:
    """Parameter-dilated recurrence route: F_n = x F_(n-1)(x,qs) + qs F_(n-2)(x,q^2 s)."""
    q = as_rational(q)
    if n == 0:
        return ZERO
    if n == 1:
        return ONE
    a = fib_carlitz_rec(n - 1, q).dilate(q, 0, 1)
    b = fib_carlitz_rec(n - 2, q).dilate(q, 0, 2)
    return X * a + S.scale(q) * b


# -- (q, b)-Fibonacci --------------------------------------------------


@_memoized
def fib_qb(n: int, point: ParamPoint) -> XsPoly:
    """Primary route: fixed-parameter recurrence with index-dependent coefficient.

    F_n = x F_(n-1) + q^(n-2) s / ((1 - q^(n-2) b)(1 - q^(n-1) b)) F_(n-2).
    """
    if n < 0:
        raise ValueError("use fib_qb_ext for negative indices")
    if n == 0:
        return ZERO
    if n == 1:
        return ONE
    q, b = point.q, point.b
    point.require_pole_free((n - 2, n - 1))
    coeff = q ** (n - 2) / ((1 - q ** (n - 2) * b) * (1 - q ** (n - 1) * b))
    return X * fib_qb(n - 1, point) + S.scale(coeff) * fib_qb(n - 2, point)


def fib_qb_closed(n: int, point: ParamPoint) -> XsPoly:
    """Closed-form sum route for the (q,b)-Fibonacci polynomials."""
    q, b = point.q, point.b
    terms = ZERO
    for k in range((n - 1) // 2 + 1) if n >= 1 else range(0):
        den = q_poch(q * b, q, k) * q_poch(q ** (n - k) * b, q, k)
        if den == 0:
            raise ValueError("pole in closed-form denominator")
        c = q ** (k * k) * q_binom(n - 1 - k, k, q) / den
        terms = terms + XsPoly.monomial(c, n - 1 - 2 * k, k)
    return terms


def fib_qb_dilated(n: int, point: ParamPoint) -> XsPoly:
    """Parameter-dilated recurrence route:
    F_n(x,b,s) = x F_(n-1)(x,qb,qs) + qs/((1-qb)(1-q^2 b)) F_(n-2)(x,q^2 b,q^2 s)."""
    if n == 0:
        return ZERO
    if n == 1:
        return ONE
    q, b = point.q, point.b
    point.require_pole_free((1, 2))
    a = fib_qb_dilated(n - 1, point.shift_b(1)).dilate(q, 0, 1)
    c = fib_qb_dilated(n - 2, point.shift_b(2)).dilate(q, 0, 2)
    return X * a + S.scale(q / ((1 - q * b) * (1 - q**2 * b))) * c


@_memoized
def fib_qb_ext(n: int, point: ParamPoint) -> SPoly:
    """(q,b)-Fibonacci for any integer index.

    Negative indices use the explicit extension
    F_(-m) = (-1)^(m-1) q^C(m+1,2) (b/q^(m-1);q)_m (b/q^m;q)_m F_m(x, b/q^m, s/q^m) / s^m.
    """
    if n >= 0:
        return SPoly(fib_qb(n, point))
    m = -n
    q, b = point.q, point.b
    scalar = (
        Fraction(-1) ** (m - 1)
        * q ** binom2(m + 1)
        * q_poch(b * q ** (1 - m), q, m)
        * q_poch(b * q**-m, q, m)
    )
    inner = fib_qb(m, point.shift_b(-m)).dilate(q, 0, -m)
    return SPoly(inner.scale(scalar), m)


def fib_qb_backward(n: int, point: ParamPoint) -> SPoly:
    """Backward-run recurrence oracle for negative indices, from
    F_(n-2) = (F_n - x F_(n-1)) (1-q^(n-2)b)(1-q^(n-1)b) / (q^(n-2) s)."""
    if n >= 0:
        return SPoly(fib_qb(n, point))
    q, b = point.q, point.b
    hi = fib_qb_backward(n + 2, point)
    mid = fib_qb_backward(n + 1, point)
    point.require_pole_free((n, n + 1))
    scalar = (1 - q**n * b) * (1 - q ** (n + 1) * b) / q**n
    return (hi - SPoly(X) * mid).scale(scalar).times_s_power(-1)


# -- trace-Lucas l_n ---------------------------------------------------


def lucas_trace(n: int, point: ParamPoint) -> SPoly:
    """l_n = F_(n+1)(x,b,s) + s/((1-b)(1-qb)) F_(n-1)(x,qb,qs), any integer n."""
    q, b = point.q, point.b
    point.require_pole_free((0, 1))
    shifted = fib_qb_ext(n - 1, point.shift_b(1)).dilate(q, 0, 1)
    return fib_qb_ext(n + 1, point) + shifted.times_s_power(1).scale(
        1 / ((1 - b) * (1 - q * b))
    )


def lucas_trace_closed(n: int, point: ParamPoint) -> XsPoly:
    """Explicit sum for l_n, n > 0."""
    if n <= 0:
        raise ValueError("closed form holds for n > 0")
    q, b = point.q, point.b
    out = ZERO
    for k in range(n // 2 + 1):
        den = q_poch(b, q, k) * q_poch(q ** (n - k + 1) * b, q, k)
        c = (
            q ** (k * k - k)
            * q_int(n, q)
            / q_int(n - k, q)
            * q_binom(n - k, k, q)
            / den
        )
        out = out + XsPoly.monomial(c, n - 2 * k, k)
    return out


def lucas_trace_neg_closed(n: int, point: ParamPoint) -> SPoly:
    """Negative-index extension:
    l_(-n) = (-1)^n q^C(n+1,2) / s^n (b/q^n;q)_n (b/q^(n-1);q)_n l_n(x, b/q^n, s/q^n)."""
    if n <= 0:
        raise ValueError("pass the positive n of l_(-n)")
    q, b = point.q, point.b
    scalar = (
        Fraction(-1) ** n
        * q ** binom2(n + 1)
        * q_poch(b * q**-n, q, n)
        * q_poch(b * q ** (1 - n), q, n)
    )
    inner = lucas_trace(n, point.shift_b(-n)).dilate(q, 0, -n)
    return inner.scale(scalar).times_s_power(-n)


# -- (q, b)-Lucas L_n --------------------------------------------------


@_memoized
def lucas_qb(n: int, point: ParamPoint) -> XsPoly:
    """Primary route: fixed-parameter recurrence (L_0 = 1 - b, L_1 = x),
    L_n = x L_(n-1) + q^(n-1) s / ((1 - q^(n-2) b)(1 - q^(n-1) b)) L_(n-2)."""
    if n < 0:
        raise ValueError("use lucas_qb_ext for negative indices")
    q, b = point.q, point.b
    if n == 0:
        return XsPoly.const(1 - b)
    if n == 1:
        return X
    point.require_pole_free((n - 2, n - 1))
    coeff = q ** (n - 1) / ((1 - q ** (n - 2) * b) * (1 - q ** (n - 1) * b))
    return X * lucas_qb(n - 1, point) + S.scale(coeff) * lucas_qb(n - 2, point)


def lucas_qb_closed(n: int, point: ParamPoint) -> XsPoly:
    """Closed form, n >= 1:
    sum of q^(k^2) s^k x^(n-2k) ([n-k over k] - q^(n-k) b [n-1-k over k-1])
    / ((qb;q)_k (q^(n-k) b;q)_k)."""
    if n < 1:
        raise ValueError("closed form holds for n >= 1")
    q, b = point.q, point.b
    out = ZERO
    for k in range(n // 2 + 1):
        den = q_poch(q * b, q, k) * q_poch(q ** (n - k) * b, q, k)
        num = q_binom(n - k, k, q) - q ** (n - k) * b * q_binom(n - 1 - k, k - 1, q)
        out = out + XsPoly.monomial(q ** (k * k) * num / den, n - 2 * k, k)
    return out


def lucas_qb_dilated(n: int, point: ParamPoint) -> XsPoly:
    """Parameter-dilated recurrence route:
    L_n(x,b,s) = x L_(n-1)(x,qb,qs) + qs/((1-qb)(1-q^2 b)) L_(n-2)(x,q^2 b,q^2 s)."""
    q, b = point.q, point.b
    if n == 0:
        return XsPoly.const(1 - b)
    if n == 1:
        return X
    point.require_pole_free((1, 2))
    a = lucas_qb_dilated(n - 1, point.shift_b(1)).dilate(q, 0, 1)
    c = lucas_qb_dilated(n - 2, point.shift_b(2)).dilate(q, 0, 2)
    return X * a + S.scale(q / ((1 - q * b) * (1 - q**2 * b))) * c


def lucas_qb_relation(n: int, point: ParamPoint) -> XsPoly:
    """Third route: L_n = F_(n+1) - q^(2n-1) s b / ((1-q^(n-1)b)(1-q^n b)) F_(n-1)."""
    if n < 1:
        raise ValueError("relation holds for n >= 1")
    q, b = point.q, point.b
    point.require_pole_free((n - 1, n))
    coeff = q ** (2 * n - 1) * b / ((1 - q ** (n - 1) * b) * (1 - q**n * b))
    return fib_qb(n + 1, point) - S.scale(coeff) * fib_qb(n - 1, point)


def gen_lucas_neg_closed(n: int, q) -> SPoly:
    """L_(-n)(x,-1,s,q) = (-1)^n q^(-C(n+1,2)) s^(-n) (-q;q)_n (-1;q)_n L_n(x,-1,s,q)."""
    if n <= 0:
        raise ValueError("pass the positive n of L_(-n)")
    q = as_rational(q)
    point = ParamPoint(q, Fraction(-1))
    scalar = (
        Fraction(-1) ** n
        / q ** binom2(n + 1)
        * q_poch(-q, q, n)
        * q_poch(Fraction(-1), q, n)
    )
    return SPoly(lucas_qb(n, point).scale(scalar), n)


def gen_lucas_backward(n: int, q) -> SPoly:
    """Backward-run (3.8)-style oracle for L_n(x,-1,s,q) at negative n."""
    q = as_rational(q)
    point = ParamPoint(q, Fraction(-1))
    if n >= 0:
        return SPoly(lucas_qb(n, point))
    # from L_(m) = x L_(m-1) + q^(m-1) s/((1+q^(m-2))(1+q^(m-1))) L_(m-2) at m = n+2
    m = n + 2
    hi = gen_lucas_backward(m, q)
    mid = gen_lucas_backward(m - 1, q)
    scalar = (1 + q ** (m - 2)) * (1 + q ** (m - 1)) / q ** (m - 1)
    return (hi - SPoly(X) * mid).scale(scalar).times_s_power(-1)


# -- Al-Salam / Ismail -------------------------------------------------


def alsalam_ismail(n: int, a, beta, q) -> XsPoly:
    """u_n(x; a, beta): u_0 = 1, u_1 = (1+a)x,
    u_n = x (1 + q^(n-1) a) u_(n-1) - q^(n-2) beta u_(n-2).

    beta may be a rational or an XsPoly (e.g. -q*s for the Chebyshev case)."""
    q = as_rational(q)
    a = as_rational(a)
    beta = XsPoly._coerce(beta)
    prev, cur = ONE, X.scale(1 + a)
    if n == 0:
        return prev
    for m in range(2, n + 1):
        prev, cur = cur, X.scale(1 + q ** (m - 1) * a) * cur - q ** (m - 2) * beta * prev
    return cur


# -- q-Chebyshev U and T ----------------------------------------------


@_memoized
def cheb_u(n: int, q) -> XsPoly:
    """U_n = (1 + q^n) x U_(n-1) + q^(n-1) s U_(n-2); U_0 = 1, U_1 = (1+q)x."""
    q = as_rational(q)
    if n < 0:
        raise ValueError("use cheb_u_ext for negative indices")
    if n == 0:
        return ONE
    if n == 1:
        return X.scale(1 + q)
    return X.scale(1 + q**n) * cheb_u(n - 1, q) + S.scale(q ** (n - 1)) * cheb_u(n - 2, q)


def cheb_u_closed(n: int, q) -> XsPoly:
    """Closed form: sum of q^(k^2) [n-k over k] (-q^(k+1);q)_(n-2k) s^k x^(n-2k)."""
    q = as_rational(q)
    out = ZERO
    for k in range(n // 2 + 1) if n >= 0 else range(0):
        c = q ** (k * k) * q_binom(n - k, k, q) * q_poch(-(q ** (k + 1)), q, n - 2 * k)
        out = out + XsPoly.monomial(c, n - 2 * k, k)
    return out


def cheb_u_ext(n: int, q) -> SPoly:
    """U_n for any integer index: U_(-1) = 0 and
    U_(-m-2) = (-1)^m (q/s)^(m+1) U_m for m >= 0."""
    q = as_rational(q)
    if n >= 0:
        return SPoly(cheb_u(n, q))
    if n == -1:
        return SPoly(ZERO)
    m = -n - 2
    scalar = Fraction(-1) ** m * q ** (m + 1)
    return SPoly(cheb_u(m, q).scale(scalar), m + 1)


def cheb_u_backward(n: int, q) -> SPoly:
    """Backward-run recurrence oracle for negative U-indices."""
    q = as_rational(q)
    if n >= 0:
        return SPoly(cheb_u(n, q))
    m = n + 2
    hi = cheb_u_backward(m, q)
    mid = cheb_u_backward(m - 1, q)
    return (hi - SPoly(X.scale(1 + q**m)) * mid).scale(q ** (1 - m)).times_s_power(-1)


@_memoized
def cheb_t(n: int, q) -> XsPoly:
    """T_n = (1 + q^(n-1)) x T_(n-1) + q^(n-1) s T_(n-2); T_0 = 1, T_1 = x."""
    q = as_rational(q)
    if n < 0:
        raise ValueError("use cheb_t_ext for negative indices")
    if n == 0:
        return ONE
    if n == 1:
        return X
    return (
        X.scale(1 + q ** (n - 1)) * cheb_t(n - 1, q)
        + S.scale(q ** (n - 1)) * cheb_t(n - 2, q)
    )


def cheb_t_closed(n: int, q) -> XsPoly:
    """Closed form via (-q;q)_(n-1) times the generalized q-Lucas sum."""
    q = as_rational(q)
    if n == 0:
        return ONE
    out = ZERO
    for k in range(n // 2 + 1):
        c = (
            q ** (k * k)
            * q_int(n, q)
            / q_int(n - k, q)
            * q_binom(n - k, k, q)
            * q_poch(-q, q, n - 1)
            / (q_poch(-q, q, k) * q_poch(-(q ** (n - k)), q, k))
        )
        out = out + XsPoly.monomial(c, n - 2 * k, k)
    return out


def cheb_t_ext(n: int, q) -> SPoly:
    """T_n for any integer index: T_(-m) = (-1)^m s^(-m) T_m."""
    q = as_rational(q)
    if n >= 0:
        return SPoly(cheb_t(n, q))
    m = -n
    return SPoly(cheb_t(m, q).scale(Fraction(-1) ** m), m)


def cheb_t_backward(n: int, q) -> SPoly:
    """Backward-run recurrence oracle for negative T-indices."""
    q = as_rational(q)
    if n >= 0:
        return SPoly(cheb_t(n, q))
    m = n + 2
    hi = cheb_t_backward(m, q)
    mid = cheb_t_backward(m - 1, q)
    return (
        (hi - SPoly(X.scale(1 + q ** (m - 1))) * mid)
        .scale(q ** (1 - m))
        .times_s_power(-1)
    )


# -- hypergeometric forms (b = -1 families) ---------------------------


def gen_fib(n: int, q) -> XsPoly:
    """F_n(x, -1, s, q)."""
    return fib_qb(n, ParamPoint(as_rational(q), Fraction(-1)))


def gen_lucas(n: int, q) -> XsPoly:
    """L_n(x, -1, s, q)."""
    return lucas_qb(n, ParamPoint(as_rational(q), Fraction(-1)))


def hypergeom_gen_fib(n: int, q) -> XsPoly:
    """Hypergeometric-form sum equal to F_(n+1)(x, -1, s, q):
    sum of (q^-n;q^2)_k (q^(1-n);q^2)_k / ((q^-2n;q^2)_k (q^2;q^2)_k) (-s)^k x^(n-2k)."""
    q = as_rational(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    q2 = q * q
    out = ZERO
    for k in range(n // 2 + 1) if n >= 0 else range(0):
        num = q_poch(q**-n, q2, k) * q_poch(q ** (1 - n), q2, k)
        den = q_poch(q ** (-2 * n), q2, k) * q_poch(q2, q2, k)
        out = out + XsPoly.monomial(num / den * Fraction(-1) ** k, n - 2 * k, k)
    return out


def hypergeom_gen_lucas(n: int, q) -> XsPoly:
    """Hypergeometric-form sum equal to L_n(x, -1, s, q) for n >= 1:
    sum of (q^-n;q^2)_k (q^(1-n);q^2)_k / ((q^(2-2n);q^2)_k (q^2;q^2)_k) (-q^2 s)^k x^(n-2k)."""
    q = as_rational(q)
    if n < 1:
        raise ValueError("hypergeometric Lucas form holds for n >= 1")
    q2 = q * q
    out = ZERO
    for k in range(n // 2 + 1):
        num = q_poch(q**-n, q2, k) * q_poch(q ** (1 - n), q2, k)
        den = q_poch(q ** (2 - 2 * n), q2, k) * q_poch(q2, q2, k)
        out = out + XsPoly.monomial(num / den * (-q2) ** k, n - 2 * k, k)
    return out


# -- uniform dispatch --------------------------------------------------


def family_poly(family: FamilyId, n: int, point: ParamPoint) -> XsPoly:
    """Generate one family member (n >= 0) at a parameter point.

    This is the surface the verify pipeline and the CLI consume; the fault
    injection hook perturbs its output when enabled."""
    q = point.q
    if family is FamilyId.FIB_CARLITZ:
        poly = fib_carlitz(n, q)
    elif family is FamilyId.FIB_QB:
        poly = fib_qb(n, point)
    elif family is FamilyId.LUCAS_TRACE:
        poly = lucas_trace(n, point).as_poly()
    elif family is FamilyId.LUCAS_QB:
        poly = lucas_qb(n, point)
    elif family is FamilyId.GEN_FIB:
        poly = gen_fib(n, q)
    elif family is FamilyId.GEN_LUCAS:
        poly = gen_lucas(n, q)
    elif family is FamilyId.CHEB_U:
        poly = cheb_u(n, q)
    elif family is FamilyId.CHEB_T:
        poly = cheb_t(n, q)
    elif family is FamilyId.ALSALAM_ISMAIL:
        poly = alsalam_ismail(n, q, S.scale(-q), q)
    else:
        raise ValueError(f"unknown family {family}")
    if _FAULT is family:
        poly = poly + ONE
    return poly


def binet_float_fib(n: int, x_val: float, s_val: float) -> float:
    """Classical Binet value (alpha^n - beta^n)/(alpha - beta) in floats."""
    disc = (x_val * x_val + 4 * s_val) ** 0.5
    alpha = (x_val + disc) / 2
    beta = (x_val - disc) / 2
    return (alpha**n - beta**n) / (alpha - beta)
