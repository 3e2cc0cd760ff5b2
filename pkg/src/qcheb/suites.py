"""Verification suites: assembles every identity check into the "core",
"extended" and "all" suites, runs them on a bounded worker pool, and returns
deterministically ordered reports.

The classical (q = 1) reductions live here as well: they compare the q-family
generators against independently computed classical Fibonacci / Lucas /
Chebyshev polynomials and the floating-point Binet values.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import analysis, families, matrixids, moments, operators
from .polyring import ONE, S, X, XsPoly
from .qkernel import DEFAULT_BS, DEFAULT_QS, ParamPoint, sample_points
from .report import IdentityReport, check_range, failing, passing, skipped

# Index bounds per check group, chosen so `verify --suite all` stays well
# under a minute while still exercising every identity nontrivially.
BOUNDS = {
    "dual": 24,
    "third_route": 12,
    "negative": 8,
    "cassini": (-5, 16),
    "cassini_euler": (10, 5),
    "matrix": 8,
    "trace": 8,
    "det": 16,
    "det_sqrt": 10,
    "tridiag": 12,
    "moments": 10,
    "reconstruct": 12,
    "orthogonality": 8,
    "deriv": 16,
    "qode": 14,
    "series_order": 24,
    "genfun": 12,
    "registry": 14,
    "binet_sum": 12,
    "classical": 12,
    "binet_float": 20,
    "schlosser": 8,
    "fib_words": 12,
    "rodrigues": 6,
}

SQRT_SAMPLES = (Fraction(2), Fraction(1, 2), Fraction(3))
WEIGHT_CONTEXTS = ((Fraction(2), Fraction(1)), (Fraction(3, 5), Fraction(-2)))


def _label(q):
    """A b-free point used purely to tag reports of q-only identities."""
    return ParamPoint(q, Fraction(0), allow_classical=True)


def _with_point(report, point):
    return IdentityReport(
        report.identity_id, point, report.index_range, report.status, report.witness
    )


# -- dual-route checks through the dispatch surface --------------------


def _oracle(family, n, point):
    """An independent second route for each family, bypassing family_poly."""
    q = point.q
    if family is families.FamilyId.FIB_CARLITZ:
        return families.fib_carlitz_rec(n, q)
    if family is families.FamilyId.FIB_QB:
        return families.fib_qb_closed(n, point)
    if family is families.FamilyId.LUCAS_TRACE:
        return families.lucas_trace_closed(n, point)
    if family is families.FamilyId.LUCAS_QB:
        return families.lucas_qb_closed(n, point)
    if family is families.FamilyId.GEN_FIB:
        return families.fib_qb_closed(n, ParamPoint(q, Fraction(-1)))
    if family is families.FamilyId.GEN_LUCAS:
        return families.hypergeom_gen_lucas(n, q)
    if family is families.FamilyId.CHEB_U:
        return families.cheb_u_closed(n, q)
    if family is families.FamilyId.CHEB_T:
        return families.cheb_t_closed(n, q)
    if family is families.FamilyId.ALSALAM_ISMAIL:
        return families.cheb_u_closed(n, q)
    raise ValueError(family)


# families whose b parameter is free (others fix b internally)
_B_FAMILIES = frozenset(
    {
        families.FamilyId.FIB_QB,
        families.FamilyId.LUCAS_TRACE,
        families.FamilyId.LUCAS_QB,
    }
)

# families whose oracle needs n >= 1
_SKIP_ZERO = frozenset(
    {
        families.FamilyId.LUCAS_TRACE,
        families.FamilyId.LUCAS_QB,
        families.FamilyId.GEN_LUCAS,
    }
)


def dual_route_check(family, point, n_max):
    lo = 1 if family in _SKIP_ZERO else 0
    return check_range(
        f"dual-{family.value}",
        point,
        range(lo, n_max + 1),
        lambda n: (families.family_poly(family, n, point), _oracle(family, n, point)),
    )


def third_route_check(point, n_max):
    """The parameter-dilated recurrences and the Fibonacci/Lucas relation."""
    f = families

    def sides(n):
        if f.fib_qb(n, point) != f.fib_qb_dilated(n, point):
            return f.fib_qb(n, point), f.fib_qb_dilated(n, point)
        if f.lucas_qb(n, point) != f.lucas_qb_dilated(n, point):
            return f.lucas_qb(n, point), f.lucas_qb_dilated(n, point)
        if n >= 1:
            return f.lucas_qb(n, point), f.lucas_qb_relation(n, point)
        return f.lucas_qb(n, point), f.lucas_qb(n, point)

    return check_range("eq-2.8-3.6", point, range(n_max + 1), sides)


def negative_index_check(point, n_max):
    """Closed-form negative-index extensions against backward recurrences."""
    f = families
    q = point.q

    def sides(m):
        if f.fib_qb_ext(-m, point) != f.fib_qb_backward(-m, point):
            return f.fib_qb_ext(-m, point), f.fib_qb_backward(-m, point)
        if m >= 1:
            neg = f.lucas_trace_neg_closed(m, point)
            if neg != f.lucas_trace(-m, point):
                return neg, f.lucas_trace(-m, point)
        if f.cheb_u_ext(-m, q) != f.cheb_u_backward(-m, q):
            return f.cheb_u_ext(-m, q), f.cheb_u_backward(-m, q)
        return f.cheb_t_ext(-m, q), f.cheb_t_backward(-m, q)

    return check_range("negative-index", point, range(n_max + 1), sides)


def gen_lucas_negative_check(q, n_max):
    f = families
    return check_range(
        "eq-4.6",
        _label(q),
        range(1, n_max + 1),
        lambda m: (f.gen_lucas_neg_closed(m, q), f.gen_lucas_backward(-m, q)),
    )


# -- operator Binet-like sums ------------------------------------------


def binet_sum_check(q, n_max):
    """Even/odd word-product sums equal T_n and U_n, including the coupled
    product iteration."""

    def sides(n):
        if operators.binet_t(n, q) != families.cheb_t(n, q):
            return operators.binet_t(n, q), families.cheb_t(n, q)
        if operators.binet_u(n, q) != families.cheb_u(n, q):
            return operators.binet_u(n, q), families.cheb_u(n, q)
        t_part, u_part = operators.binet_product_parts(n, q)
        if t_part != families.cheb_t(n, q):
            return t_part, families.cheb_t(n, q)
        expected_u = families.cheb_u(n - 1, q) if n >= 1 else XsPoly.zero()
        return u_part, expected_u

    return check_range("eq-5.12-5.14", _label(q), range(n_max + 1), sides)


# -- matrix checks wrapped as reports ----------------------------------


def fib_matrix_check(point, n_max):
    return check_range(
        "eq-2.30",
        point,
        range(1, n_max + 1),
        lambda n: (
            matrixids.fib_matrix_product(n, point).entries(),
            matrixids.fib_matrix_expected(n, point).entries(),
        ),
    )


def cheb_matrix_check(q, n_max):
    return check_range(
        "eq-5.15",
        _label(q),
        range(1, n_max + 1),
        lambda n: (
            matrixids.cheb_matrix_product(n, q).entries(),
            matrixids.cheb_matrix_expected(n, q).entries(),
        ),
    )


def tridiag_check(q, n_max):
    return check_range(
        "eq-5.39-5.40",
        _label(q),
        range(1, n_max + 1),
        lambda n: (
            (matrixids.tridiag_u(n, q), matrixids.tridiag_t(n, q)),
            (families.cheb_u(n, q), families.cheb_t(n, q)),
        ),
    )


def cassini_range_check(point, lo, hi):
    for n in range(lo, hi + 1):
        r = matrixids.cassini_check(n, point)
        if not r.passed:
            return failing(
                "eq-2.31", point, (lo, hi), n, r.witness["lhs"], r.witness["rhs"]
            )
    return passing("eq-2.31", point, (lo, hi))


def cassini_euler_grid_check(point, n_max, k_max):
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1):
            r = matrixids.cassini_euler_check(n, k, point)
            if not r.passed:
                return failing(
                    "eq-2.33", point, (1, n_max), (n, k),
                    r.witness["lhs"], r.witness["rhs"],
                )
    return passing("eq-2.33", point, (1, n_max))


def reconstruction_check(q, n_max):
    """x^n rebuilt from its Fibonacci- and Lucas-basis expansions."""

    def sides(n):
        power = XsPoly.monomial(1, n, 0)
        if moments.reconstruct_x_fib(n, q) != power:
            return moments.reconstruct_x_fib(n, q), power
        return moments.reconstruct_x_lucas(n, q), power

    return check_range("eq-4.9-4.13", _label(q), range(n_max + 1), sides)


def orthogonality_smoke_check(q, total_degree):
    for spec in (moments.gen_fib_spec(q), moments.gen_lucas_spec(q)):
        r = moments.orthogonality_check(spec, total_degree)
        if not r.passed:
            return _with_point(r, _label(q))
    return passing("orthogonality", _label(q), (0, total_degree))


# -- classical (q = 1) reductions --------------------------------------


def _classical_fib(n):
    prev, cur = XsPoly.zero(), ONE
    for _ in range(n - 1):
        prev, cur = cur, X * cur + S * prev
    return cur if n >= 1 else XsPoly.zero()


def _classical_lucas(n):
    prev, cur = XsPoly.const(2), X
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, X * cur + S * prev
    return cur


def classical_families_check(n_max):
    """q = 1 reductions of the Fibonacci and Lucas generators: the classical
    recurrences, the binomial closed forms, and the trace identity
    L_n = F_(n+1) + s F_(n-1)."""
    one = Fraction(1)
    point = ParamPoint(one, Fraction(0), allow_classical=True)

    def sides(n):
        fib = families.fib_carlitz(n, one)
        if fib != _classical_fib(n):
            return fib, _classical_fib(n)
        closed = XsPoly.zero()
        for k in range((n - 1) // 2 + 1) if n >= 1 else []:
            closed = closed + XsPoly.monomial(math.comb(n - 1 - k, k), n - 1 - 2 * k, k)
        if fib != closed:
            return fib, closed
        if n < 1:
            return fib, closed
        lucas = families.lucas_trace(n, point).as_poly()
        if lucas != _classical_lucas(n):
            return lucas, _classical_lucas(n)
        lucas_closed = XsPoly.zero()
        for k in range(n // 2 + 1):
            c = Fraction(n, n - k) * math.comb(n - k, k)
            lucas_closed = lucas_closed + XsPoly.monomial(c, n - 2 * k, k)
        if lucas != lucas_closed:
            return lucas, lucas_closed
        return lucas, _classical_fib(n + 1) + S * _classical_fib(n - 1)

    return check_range("classical-fib-lucas", point, range(n_max + 1), sides)


def classical_cheb_check(n_max):
    """q = 1 reductions of T and U: the doubled-x recurrences and the scaling
    relations T_n(x,s) = 2^(n-1) L_n(x,s/4), U_n(x,s) = 2^n F_(n+1)(x,s/4)."""
    one = Fraction(1)
    quarter = Fraction(1, 4)

    def classical_cheb(n, first_kind):
        prev = ONE
        cur = X if first_kind else X.scale(2)
        if n == 0:
            return prev
        for _ in range(n - 1):
            prev, cur = cur, X.scale(2) * cur + S * prev
        return cur

    def sides(n):
        t = families.cheb_t(n, one)
        if t != classical_cheb(n, True):
            return t, classical_cheb(n, True)
        u = families.cheb_u(n, one)
        if u != classical_cheb(n, False):
            return u, classical_cheb(n, False)
        if n >= 1:
            scaled = _classical_lucas(n).dilate(quarter, 0, 1).scale(2 ** (n - 1))
            if t != scaled:
                return t, scaled
        return u, _classical_fib(n + 1).dilate(quarter, 0, 1).scale(2**n)

    return check_range("classical-cheb", _label(one), range(n_max + 1), sides)


def classical_pell_check(n_max):
    """T_n^2 - (x^2 - 1) U_(n-1)^2 = 1 at q = 1, s = -1."""
    one = Fraction(1)

    def sides(n):
        t = families.cheb_t(n, one).subs_s(Fraction(-1))
        u = families.cheb_u(n - 1, one).subs_s(Fraction(-1)) if n >= 1 else XsPoly.zero()
        return t * t - (X * X - ONE) * u * u, ONE

    return check_range("classical-pell", _label(one), range(n_max + 1), sides)


def classical_binet_check(n_max, x_val=3.0, s_val=1.0, tol=1e-6):
    """Float Binet values against the q = 1 polynomials at (x, s) = (3, 1)."""
    one = Fraction(1)
    disc = (x_val * x_val + 4 * s_val) ** 0.5
    alpha = (x_val + disc) / 2
    beta = (x_val - disc) / 2
    for n in range(n_max + 1):
        fib = families.fib_carlitz(n, one).evalf(x_val, s_val)
        expect = families.binet_float_fib(n, x_val, s_val)
        if abs(fib - expect) > tol * max(1.0, abs(expect)):
            return failing("classical-binet", _label(one), (0, n_max), n, fib, expect)
        lucas = _classical_lucas(n).evalf(x_val, s_val)
        expect = alpha**n + beta**n
        if abs(lucas - expect) > tol * max(1.0, abs(expect)):
            return failing("classical-binet", _label(one), (0, n_max), n, lucas, expect)
    return passing("classical-binet", _label(one), (0, n_max))


# -- suite assembly ----------------------------------------------------


def _q_item(items, q, check_id, fn):
    """Queue a q-only check, degrading to a skipped report at q = 1."""
    if q == 1:
        items.append(lambda: skipped(check_id, _label(q), (0, 0)))
    else:
        items.append(fn)


def _point_item(items, point, check_id, fn):
    if point.q == 1:
        items.append(lambda: skipped(check_id, point, (0, 0)))
    else:
        items.append(fn)


def build_work_items(suite="core", qs=None, bs=None, bounds=None):
    """The list of zero-argument callables making up a suite run."""
    if suite not in ("core", "extended", "all"):
        raise ValueError(f"unknown suite {suite!r}")
    bounds = dict(BOUNDS, **(bounds or {}))
    qs = tuple(qs) if qs is not None else DEFAULT_QS
    bs = tuple(bs) if bs is not None else DEFAULT_BS
    points = [
        p
        for p in sample_points(levels=range(0, 40), qs=[q for q in qs if q != 1], bs=bs)
    ]
    neg_points = [p for p in points if p.is_pole_free(range(-12, 0))]
    items = []
    run_core = suite in ("core", "all")
    run_extended = suite in ("extended", "all")

    if run_core:
        # dual routes through the dispatch surface (fault-injection sensitive)
        for family in families.FamilyId:
            if family in _B_FAMILIES:
                for p in points:
                    _point_item(
                        items, p, f"dual-{family.value}",
                        lambda f=family, p=p: dual_route_check(f, p, bounds["dual"]),
                    )
            else:
                for q in qs:
                    _q_item(
                        items, q, f"dual-{family.value}",
                        lambda f=family, q=q: dual_route_check(
                            f, _label(q), bounds["dual"]
                        ),
                    )
        for p in points:
            _point_item(
                items, p, "eq-2.8-3.6",
                lambda p=p: third_route_check(p, bounds["third_route"]),
            )
        for p in neg_points:
            _point_item(
                items, p, "negative-index",
                lambda p=p: negative_index_check(p, bounds["negative"]),
            )
        for q in qs:
            _q_item(
                items, q, "eq-4.6",
                lambda q=q: gen_lucas_negative_check(q, bounds["negative"]),
            )
            _q_item(items, q, "eq-5.12-5.14", lambda q=q: binet_sum_check(q, bounds["binet_sum"]))

        # matrices and determinant identities
        for p in points:
            _point_item(items, p, "eq-2.30", lambda p=p: fib_matrix_check(p, bounds["matrix"]))
            _point_item(
                items, p, "eq-3.1",
                lambda p=p: matrixids.trace_lucas_check(bounds["trace"], p),
            )
            _point_item(
                items, p, "eq-2.33",
                lambda p=p: cassini_euler_grid_check(p, *bounds["cassini_euler"]),
            )
        for p in neg_points:
            _point_item(
                items, p, "eq-2.31",
                lambda p=p: cassini_range_check(p, *bounds["cassini"]),
            )
        for q in qs:
            _q_item(items, q, "eq-5.15", lambda q=q: cheb_matrix_check(q, bounds["matrix"]))
            _q_item(
                items, q, "eq-5.16",
                lambda q=q: _with_point(
                    matrixids.det_identity_check(bounds["det"], q), _label(q)
                ),
            )
            _q_item(items, q, "eq-5.39-5.40", lambda q=q: tridiag_check(q, bounds["tridiag"]))
        for r in SQRT_SAMPLES:
            items.append(
                lambda r=r: _with_point(
                    matrixids.det_identity_sqrt_check(bounds["det_sqrt"], r),
                    _label(r * r),
                )
            )

        # moments
        for q in qs:
            _q_item(
                items, q, "eq-4.10",
                lambda q=q: _with_point(
                    moments.moment_consistency_check("fib", bounds["moments"], q), _label(q)
                ),
            )
            _q_item(
                items, q, "eq-4.14",
                lambda q=q: _with_point(
                    moments.moment_consistency_check("lucas", bounds["moments"], q), _label(q)
                ),
            )
            _q_item(
                items, q, "carlitz-moments",
                lambda q=q: _with_point(
                    moments.carlitz_moment_check(bounds["moments"], q), _label(q)
                ),
            )
            _q_item(items, q, "eq-4.9-4.13", lambda q=q: reconstruction_check(q, bounds["reconstruct"]))
            _q_item(items, q, "orthogonality", lambda q=q: orthogonality_smoke_check(q, bounds["orthogonality"]))
            _q_item(
                items, q, "nonorthogonality",
                lambda q=q: moments.nonorthogonality_witness(q),
            )
        items.append(lambda: moments.classical_moment_check(8))

        # q-analysis
        for q in qs:
            _q_item(
                items, q, "eq-5.18",
                lambda q=q: _with_point(analysis.deriv_relation_t(bounds["deriv"], q), _label(q)),
            )
            _q_item(
                items, q, "eq-5.19",
                lambda q=q: _with_point(analysis.deriv_relation_u(bounds["deriv"], q), _label(q)),
            )
            _q_item(
                items, q, "eq-5.20-5.22",
                lambda q=q: _with_point(analysis.qode_check_t(bounds["qode"], q), _label(q)),
            )
            _q_item(
                items, q, "eq-5.21-5.23",
                lambda q=q: _with_point(analysis.qode_check_u(bounds["qode"], q), _label(q)),
            )
            _q_item(
                items, q, "eq-5.37-5.38",
                lambda q=q: _with_point(analysis.genfun_check(bounds["genfun"], q), _label(q)),
            )
            for name in analysis.REGISTRY_IDS:
                _q_item(
                    items, q, name,
                    lambda name=name, q=q: _with_point(
                        analysis.registry_check(name, bounds["registry"], q), _label(q)
                    ),
                )
        for q_val, s_val in WEIGHT_CONTEXTS:
            ctx = analysis.SeriesContext(q_val, s_val, bounds["series_order"])
            items.append(
                lambda ctx=ctx: _with_point(
                    analysis.h_functional_equation_check(ctx), _label(ctx.q)
                )
            )
            items.append(
                lambda ctx=ctx: _with_point(analysis.pearson_check(ctx), _label(ctx.q))
            )

        # classical limit
        items.append(lambda: classical_families_check(bounds["classical"]))
        items.append(lambda: classical_cheb_check(bounds["classical"]))
        items.append(lambda: classical_pell_check(bounds["classical"]))
        items.append(lambda: classical_binet_check(bounds["binet_float"]))

    if run_extended:
        word_points = [
            p for q in qs if q != 1 for p in [ParamPoint(q, Fraction(3, 7))]
        ]
        for p in word_points:
            items.append(lambda p=p: operators.commutation_check(p))
            items.append(
                lambda p=p: operators.schlosser_binomial_check(bounds["schlosser"], p)
            )
            items.append(lambda p=p: operators.fib_word_check(bounds["fib_words"], p))
        if any(q == 1 for q in qs):
            items.append(lambda: skipped("eq-2.13..15", _label(Fraction(1)), (0, 0)))
        for q_val, s_val in WEIGHT_CONTEXTS:
            order = 2 * bounds["rodrigues"] + 10
            ctx = analysis.SeriesContext(q_val, s_val, order)
            for n in range(bounds["rodrigues"] + 1):
                items.append(
                    lambda n=n, ctx=ctx: _with_point(
                        analysis.rodrigues_t(n, ctx), _label(ctx.q)
                    )
                )
                items.append(
                    lambda n=n, ctx=ctx: _with_point(
                        analysis.rodrigues_u(n, ctx), _label(ctx.q)
                    )
                )

    return items


def run_suite(suite="core", qs=None, bs=None, parallelism=1, bounds=None):
    """Run a suite and return its reports sorted by (identity, point, range)."""
    items = build_work_items(suite, qs=qs, bs=bs, bounds=bounds)
    if parallelism > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            results = list(pool.map(lambda fn: fn(), items))
    else:
        results = [fn() for fn in items]
    reports = []
    for r in results:
        if isinstance(r, IdentityReport):
            reports.append(r)
        else:
            reports.extend(r)
    reports.sort(key=IdentityReport.sort_key)
    return reports


def summarize(reports):
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for r in reports:
        counts[r.status] += 1
    return counts
