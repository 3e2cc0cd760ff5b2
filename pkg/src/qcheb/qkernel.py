"""Exact scalar building blocks: q-integers, Gaussian binomials, q-Pochhammer
symbols and Carlitz q-Catalan numbers.

All arithmetic is over `fractions.Fraction`; nothing here ever rounds.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Rational = Fraction


class PoleError(ArithmeticError):
    """A parameter choice makes one of the scalar denominators vanish."""


def as_rational(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot interpret {v!r} as an exact rational")


@dataclass(frozen=True)
class ParamPoint:
    """A concrete rational substitution (q, b); x and s stay formal.

    `allow_classical=True` admits q = 1 for classical-limit checks.
    """

    q: Fraction
    b: Fraction
    allow_classical: bool = False

    def __post_init__(self):
        object.__setattr__(self, "q", as_rational(self.q))
        object.__setattr__(self, "b", as_rational(self.b))
        if self.q == 0:
            raise PoleError("q = 0 is not a valid parameter")
        if self.q == 1 and not self.allow_classical:
            raise PoleError("q = 1 requires an explicit classical-limit point")

    def shift_b(self, j: int) -> "ParamPoint":
        """The point with b replaced by q^j * b."""
        return ParamPoint(self.q, self.q**j * self.b, self.allow_classical)

    def require_pole_free(self, levels) -> None:
        """Raise PoleError unless q^j * b != 1 and q^j != -1 for all j in levels."""
        for j in levels:
            if self.q**j * self.b == 1:
                raise PoleError(f"1 - q^{j} b vanishes at q={self.q}, b={self.b}")
            if self.q**j == -1:
                raise PoleError(f"1 + q^{j} vanishes at q={self.q}")

    def is_pole_free(self, levels) -> bool:
        try:
            self.require_pole_free(levels)
        except PoleError:
            return False
        return True


# Default sample set used by every identity suite; combinations producing a
# pole in the requested level range are filtered out by sample_points().
DEFAULT_QS = (Fraction(2), Fraction(1, 2), Fraction(3, 5), Fraction(7))
DEFAULT_BS = (Fraction(0), Fraction(-1), Fraction(2), Fraction(3, 7))


def sample_points(levels=range(0, 40), qs=DEFAULT_QS, bs=DEFAULT_BS):
    """All pole-free (q, b) sample points for the given b-level range."""
    points = []
    for q in qs:
        for b in bs:
            p = ParamPoint(q, b)
            if p.is_pole_free(levels):
                points.append(p)
    return points


@lru_cache(maxsize=None)
def q_int(n: int, q: Fraction) -> Fraction:
    """[n] = 1 + q + ... + q^(n-1); equals n at q = 1."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    total = Fraction(0)
    power = Fraction(1)
    for _ in range(n):
        total += power
        power *= q
    return total


@lru_cache(maxsize=None)
def q_binom(n: int, k: int, q) -> Fraction:
    """Gaussian binomial [n over k] evaluated at q; 0 outside 0 <= k <= n."""
    q = as_rational(q)
    if k < 0 or k > n:
        return Fraction(0)
    k = min(k, n - k)
    num = Fraction(1)
    den = Fraction(1)
    for i in range(1, k + 1):
        num *= q_int(n - k + i, q)
        den *= q_int(i, q)
    return num / den


def q_poch(a, q, n: int) -> Fraction:
    """(a; q)_n = (1-a)(1-qa)...(1-q^(n-1)a), extended to negative n by
    (a; q)_(-n) = 1 / (q^(-n) a; q)_n."""
    a = as_rational(a)
    q = as_rational(q)
    if n >= 0:
        result = Fraction(1)
        factor = a
        for _ in range(n):
            result *= 1 - factor
            factor *= q
        return result
    # negative order: reciprocal of the product starting at q^n * a
    result = Fraction(1)
    factor = q**n * a
    for _ in range(-n):
        term = 1 - factor
        if term == 0:
            raise PoleError(f"(a;q)_{n} undefined: factor 1 - {factor} vanishes")
        result *= term
        factor *= q
    return 1 / result


@lru_cache(maxsize=None)
def q_catalan(n: int, q) -> Fraction:
    """Carlitz q-Catalan number via C_n = sum_k q^k C_k C_(n-1-k), C_0 = 1."""
    q = as_rational(q)
    if n < 0:
        raise ValueError("q_catalan needs n >= 0")
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    power = Fraction(1)
    for k in range(n):
        total += power * q_catalan(k, q) * q_catalan(n - 1 - k, q)
        power *= q
    return total


def binom2(n: int) -> int:
    """n choose 2, valid for any integer n."""
    return n * (n - 1) // 2
