"""The noncommutative word algebra on the alphabet {X, Y}: brute-force word
application, the weight-dependent binomial theorem, Fibonacci-word sums and
the Binet-like even/odd sums.

X = x eta and Y = qs/((1-qb)(1-q^2 b)) eta^2, where eta dilates (b, s) by one
q-power and fixes x.  Words act on test monomials x^i s^j b^m held as a state
(coefficient, i, j, m, denominator levels); the b-dependence stays symbolic in
the exponents until a single final evaluation, so dilation is just an
exponent shift.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import families
from .polyring import ONE, S, X as POLY_X, XsPoly, ZERO
from .qkernel import ParamPoint, PoleError, as_rational, binom2, q_binom, q_int
from .report import check_range, failing, passing


class OpState:
    """c * x^i s^j b^m / prod (1 - q^e b), as acted on by the operators."""

    __slots__ = ("c", "i", "j", "m", "denoms")

    def __init__(self, c=Fraction(1), i=0, j=0, m=0, denoms=()):
        self.c = c
        self.i = i
        self.j = j
        self.m = m
        self.denoms = tuple(denoms)

    def eta(self, q, times=1):
        """b -> q b, s -> q s: shift every b-exponent, scale by q^(j+m) per step."""
        return OpState(
            self.c * q ** (times * (self.j + self.m)),
            self.i,
            self.j,
            self.m,
            tuple(e + times for e in self.denoms),
        )

    def apply_x(self, q):
        out = self.eta(q)
        return OpState(out.c, out.i + 1, out.j, out.m, out.denoms)

    def apply_y(self, q):
        out = self.eta(q, 2)
        return OpState(out.c * q, out.i, out.j + 1, out.m, out.denoms + (1, 2))

    def mul_b(self):
        return OpState(self.c, self.i, self.j, self.m + 1, self.denoms)

    def scale(self, c):
        return OpState(self.c * c, self.i, self.j, self.m, self.denoms)

    def evaluate(self, point: ParamPoint) -> XsPoly:
        q, b = point.q, point.b
        value = self.c * b**self.m
        for e in self.denoms:
            factor = 1 - q**e * b
            if factor == 0:
                raise PoleError(f"1 - q^{e} b vanishes at q={q}, b={b}")
            value /= factor
        return XsPoly.monomial(value, self.i, self.j)


@lru_cache(maxsize=None)
def _inv_factor(q, b, e: int):
    factor = 1 - q**e * b
    if factor == 0:
        raise PoleError(f"1 - q^{e} b vanishes at q={q}, b={b}")
    return 1 / factor


def apply_word(word, point: ParamPoint, start: OpState = None) -> XsPoly:
    """Apply a word over {"X", "Y"} to the monomial held in `start`
    (default: the constant 1), rightmost letter first.

    Equivalent to chaining OpState.apply_x/apply_y, but tracks the q-exponent
    and the denominator shifts as plain integers for speed: a denominator
    created when the running shift was s0 ends at exponent base + (total - s0).
    """
    q, b = point.q, point.b
    state = start if start is not None else OpState()
    c, i, j, m = state.c, state.i, state.j, state.m
    denoms = [(e, 0) for e in state.denoms]
    exp_q = 0
    shift = 0
    for letter in reversed(word):
        if letter == "X":
            exp_q += j + m
            i += 1
            shift += 1
        elif letter == "Y":
            exp_q += 2 * (j + m) + 1
            j += 1
            shift += 2
            denoms.append((1, shift))
            denoms.append((2, shift))
        else:
            raise ValueError(f"unknown letter {letter!r}")
    value = c * q**exp_q * b**m
    for base, s0 in denoms:
        value *= _inv_factor(q, b, base + shift - s0)
    return XsPoly.monomial(value, i, j)


def words_with_k_y(n: int, k: int):
    """All words of n letters containing exactly k Y's."""
    for positions in combinations(range(n), k):
        yield tuple("Y" if i in positions else "X" for i in range(n))


def word_sum_ck(n: int, k: int, point: ParamPoint) -> XsPoly:
    """Brute-force C_k^n(X,Y) 1: the sum over all words with k Y's and n-k X's."""
    total = ZERO
    for word in words_with_k_y(n, k):
        total = total + apply_word(word, point)
    return total


def ck_closed(n: int, k: int, point: ParamPoint) -> XsPoly:
    """Closed form: [n over k] q^(k^2) / ((q^(n+1) b;q)_k (qb;q)_k) s^k x^(n-k)."""
    q, b = point.q, point.b
    den = Fraction(1)
    for e in list(range(n + 1, n + 1 + k)) + list(range(1, k + 1)):
        factor = 1 - q**e * b
        if factor == 0:
            raise PoleError(f"1 - q^{e} b vanishes")
        den *= factor
    c = q_binom(n, k, q) * q ** (k * k) / den
    return XsPoly.monomial(c, n - k, k)


def schlosser_coefficient(n: int, k: int, b, q) -> Fraction:
    """c(n, k, b) = [n over k] (q^(k+1) b;q)_k / (q^(n+1) b;q)_k."""
    num = Fraction(1)
    den = Fraction(1)
    for j in range(k):
        num *= 1 - q ** (k + 1 + j) * b
        factor = 1 - q ** (n + 1 + j) * b
        if factor == 0:
            raise PoleError("pole in c(n,k,b)")
        den *= factor
    return q_binom(n, k, q) * num / den


def fib_words(n: int):
    """The Fibonacci words: all words over {X, Y} of length n-1 where X counts
    1 and Y counts 2."""
    if n <= 0:
        return []
    if n == 1:
        return [()]
    if n == 2:
        return [("X",)]
    return [("X",) + w for w in fib_words(n - 1)] + [("Y",) + w for w in fib_words(n - 2)]


def fib_word_sum(n: int, point: ParamPoint) -> XsPoly:
    """Brute-force Fibonacci word sum applied to 1; equals fib_qb(n, point)."""
    total = ZERO
    for word in fib_words(n):
        total = total + apply_word(word, point)
    return total


def fib_word_sum_right(n: int, point: ParamPoint) -> XsPoly:
    """The right-multiplication split: F_(n-1) X + F_(n-2) Y applied to 1."""
    if n <= 0:
        return ZERO
    if n == 1:
        return ONE
    total = ZERO
    for word in fib_words(n - 1):
        total = total + apply_word(word + ("X",), point)
    for word in fib_words(n - 2):
        total = total + apply_word(word + ("Y",), point)
    return total


# -- operator relation checks ------------------------------------------

TEST_MONOMIALS = [(i, j, m) for i in range(3) for j in range(3) for m in range(3)]


def commutation_check(point: ParamPoint, exponents=TEST_MONOMIALS):
    """Verify X Y = (1-qb)/(1-q^3 b) q Y X,  X b = q b X  and  Y b = q^2 b Y
    on the monomials x^i s^j b^m."""
    q, b = point.q, point.b
    point.require_pole_free((1, 2, 3, 4))
    for i, j, m in exponents:
        f = OpState(Fraction(1), i, j, m)
        # XY = (1-qb)/(1-q^3 b) q YX
        lhs = apply_word(("X", "Y"), point, f)
        rhs = apply_word(("Y", "X"), point, f).scale(q * (1 - q * b) / (1 - q**3 * b))
        if lhs != rhs:
            return failing("eq-2.13", point, (0, 0), (i, j, m), lhs, rhs)
        # Xb = qbX
        lhs = apply_word(("X",), point, f.mul_b())
        rhs = apply_word(("X",), point, f).scale(q * b)
        if lhs != rhs:
            return failing("eq-2.14", point, (0, 0), (i, j, m), lhs, rhs)
        # Yb = q^2 bY
        lhs = apply_word(("Y",), point, f.mul_b())
        rhs = apply_word(("Y",), point, f).scale(q**2 * b)
        if lhs != rhs:
            return failing("eq-2.15", point, (0, 0), (i, j, m), lhs, rhs)
    return passing("eq-2.13..15", point, (0, 0))


def schlosser_binomial_check(n: int, point: ParamPoint):
    """(X+Y)^n 1 expands as the sum of C_k^n with each C_k^n matching the
    closed form, and the scalar coefficients obey the level recursion
    c(n,k,b) = c(n-1,k-1,q^2 b) + q^k (1-qb)/(1-q^(2k+1)b) c(n-1,k,qb)."""
    q, b = point.q, point.b
    for m in range(n + 1):
        for k in range(m + 1):
            if word_sum_ck(m, k, point) != ck_closed(m, k, point):
                return failing(
                    "eq-2.21", point, (0, n), (m, k),
                    word_sum_ck(m, k, point), ck_closed(m, k, point),
                )
            if m >= 1:
                lhs = schlosser_coefficient(m, k, b, q)
                rhs = schlosser_coefficient(m - 1, k - 1, q**2 * b, q) + q**k * (
                    1 - q * b
                ) / (1 - q ** (2 * k + 1) * b) * schlosser_coefficient(m - 1, k, q * b, q)
                if lhs != rhs:
                    return failing("eq-2.18", point, (0, n), (m, k), lhs, rhs)
    return passing("eq-2.16..21", point, (0, n))


def fib_word_check(n: int, point: ParamPoint):
    """Fibonacci word sums equal fib_qb, including the right-split form."""

    def sides(m):
        brute = fib_word_sum(m, point)
        if brute != fib_word_sum_right(m, point):
            return brute, fib_word_sum_right(m, point)
        return brute, families.fib_qb(m, point)

    return check_range("eq-2.24", point, range(n + 1), sides)


# -- Binet-like even/odd sums (first/second kind) ----------------------


def _even_product(k: int, q) -> XsPoly:
    """prod_{j=0}^{k-1} (x^2 + q^(2j+1) s)."""
    out = ONE
    for j in range(k):
        out = out * (POLY_X * POLY_X + S.scale(q ** (2 * j + 1)))
    return out


def binet_t(n: int, q) -> XsPoly:
    """Even-part sum: sum_k q^C(n-2k,2) [n over 2k] x^(n-2k) prod (x^2+q^(2j+1)s)."""
    q = as_rational(q)
    out = ZERO
    for k in range(n // 2 + 1):
        c = q ** binom2(n - 2 * k) * q_binom(n, 2 * k, q)
        out = out + XsPoly.monomial(c, n - 2 * k, 0) * _even_product(k, q)
    return out


def binet_u(n: int, q) -> XsPoly:
    """Odd-part sum: sum_k q^C(n-2k,2) [n+1 over 2k+1] x^(n-2k) prod (x^2+q^(2j+1)s)."""
    q = as_rational(q)
    out = ZERO
    for k in range((n + 1) // 2 + 1):
        c = q_binom(n + 1, 2 * k + 1, q)
        if c == 0 or n - 2 * k < 0:
            continue
        out = out + XsPoly.monomial(q ** binom2(n - 2 * k) * c, n - 2 * k, 0) * _even_product(
            k, q
        )
    return out


def binet_product_parts(n: int, q):
    """Expand p_n = (x + A)(qx + A)...(q^(n-1)x + A) applied to 1 as an even
    part t_n and odd part u_n (so p_n 1 = t_n + u_n A), iterating with
    A^2 -> (x^2 + qs) times a two-level s-dilation."""
    q = as_rational(q)
    t, u = ONE, ZERO
    for k in range(n):
        t, u = (
            X_SCALED(q, k) * t + (POLY_X * POLY_X + S.scale(q)) * u.dilate(q, 0, 2),
            X_SCALED(q, k) * u + t,
        )
    return t, u


def X_SCALED(q, k):
    return POLY_X.scale(q**k)


def q_binomial_product_check(n: int, q):
    """(x+y)(qx+y)...(q^(n-1)x+y) = sum_k q^C(k,2) [n over k] x^k y^(n-k),
    with y played by the formal variable s."""
    q = as_rational(q)

    def sides(m):
        product = ONE
        for j in range(m):
            product = product * (POLY_X.scale(q**j) + S)
        expansion = ZERO
        for k in range(m + 1):
            c = q ** binom2(k) * q_binom(m, k, q)
            expansion = expansion + XsPoly.monomial(c, k, m - k)
        return product, expansion

    return check_range("q-binomial-product", None, range(n + 1), sides)
