"""Cross-validation suites run by ``motzkin-plateaus verify``.

Each check returns a :class:`CheckResult`; a failing check names the first
offending coefficient.
"""

import random
import time
import warnings
from dataclasses import dataclass

from . import paths
from .contfrac import (
    contfrac_gf,
    default_depth,
    first_difference,
    mixed_height_gf,
    oddheight_gf,
    peakfree_gf,
    plateau_schedule,
    uhd_uhhd_gf,
)
from .data import PUBLISHED_COUNTS
from .diagonals import diagonal_gf, difdif_residual, expected_degree
from .engines import (
    column_gfs,
    explicit_gf,
    f0_closed,
    functional_residual,
    motzkin_series,
    theorem1_residual,
    theorem2_residual,
)
from .errors import ClosedFormMismatchWarning, MotzkinError
from .paths import Rule, StatisticSpec, oracle_series
from .series import MarkerPoly, XSeries, dx, recip, sqrt, subst_diagonal, subst_y_const
from .tables import PlateauTable, base_column, base_column_unit, table_from_recursion

SUITES = ("series", "tables", "residuals", "contfrac", "diagonals", "integrality", "oracle", "special")


@dataclass
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.suite}/{self.name} ({self.seconds:.2f}s) {self.detail}".rstrip()


@dataclass
class Sizes:
    """Size overrides; ``order=None`` lets each check use its own default."""

    order: int = None
    nmax: int = 14

    def n(self, default):
        return default if self.order is None else self.order


def _table_diff(expected, actual, label_a, label_b):
    """Name the first ``c_n^p`` where two tables disagree, or return None."""
    nmax = min(expected.nmax, actual.nmax)
    for n in range(nmax + 1):
        width = max(len(expected.row(n)), len(actual.row(n)))
        for p in range(width):
            a, b = expected[n, p], actual[n, p]
            if a != b:
                return f"c_{n}^{p}: {label_a} {a} != {label_b} {b}"
    return None


def _series_diff(a, b, label_a, label_b):
    n = first_difference(a, b)
    if n is None:
        return None
    return f"x^{n}: {label_a} {a[n]} != {label_b} {b[n]}"


def _nonzero(res, what):
    n = res.valuation()
    if n is None:
        return None
    return f"{what}: nonzero coefficient at x^{n}: {res[n]}"


# -- series kernel -------------------------------------------------------------


def random_series(rng, order, unit=False, markers=True):
    """Small random XSeries; ``unit=True`` forces constant term 1."""
    coeffs = []
    for n in range(order + 1):
        terms = {}
        for _ in range(rng.randint(0, 3)):
            key = (rng.randint(0, 2), rng.randint(0, 1)) if markers else (0, 0)
            terms[key] = terms.get(key, 0) + rng.randint(-3, 3)
        coeffs.append(MarkerPoly(terms))
    if unit:
        coeffs[0] = MarkerPoly.const(1)
    return XSeries(coeffs, order)


def check_ring_axioms(sizes, trials=20, order=8):
    rng = random.Random(0)
    for t in range(trials):
        a, b, c = (random_series(rng, order) for _ in range(3))
        if (a * b) * c != a * (b * c):
            return f"trial {t}: multiplication is not associative", ""
        if a * b != b * a or a + b != b + a:
            return f"trial {t}: not commutative", ""
        if a * (b + c) != a * b + a * c:
            return f"trial {t}: not distributive", ""
        if dx(a * b) != dx(a) * b + a * dx(b):
            return f"trial {t}: product rule fails", ""
        if subst_y_const(a * b, 1) != subst_y_const(a, 1) * subst_y_const(b, 1):
            return f"trial {t}: y=1 is not multiplicative", ""
    return None, f"{trials} random triples, order {order}"


def check_inverses(sizes, trials=20, order=10):
    rng = random.Random(1)
    for t in range(trials):
        u = random_series(rng, order, unit=True)
        one = XSeries.one(order)
        if u * recip(u) != one or recip(u) * u != one:
            return f"trial {t}: recip is not an inverse", ""
        if sqrt(u) * sqrt(u) != u or sqrt(u * u) != u:
            return f"trial {t}: sqrt is not an inverse of squaring", ""
    return None, f"{trials} random units, order {order}"


def check_diagonal_substitution(sizes, r=1, order=12):
    step = r + 2
    for n1 in range(order + 1):
        for p1 in range(n1 // step + 1):
            for n2 in range(order + 1 - n1):
                for p2 in range(n2 // step + 1):
                    m1 = XSeries.from_polynomial({(n1, p1, 0): 1}, order)
                    m2 = XSeries.from_polynomial({(n2, p2, 0): 1}, order)
                    if subst_diagonal(m1 * m2, r) != subst_diagonal(m1, r) * subst_diagonal(m2, r):
                        return f"x^{n1} y^{p1} * x^{n2} y^{p2}: substitution not multiplicative", ""
    return None, f"monomials to x^{order}, r={r}"


# -- tables --------------------------------------------------------------------


def check_table1(sizes):
    published = PlateauTable(1, len(PUBLISHED_COUNTS) - 1, PUBLISHED_COUNTS)
    built = table_from_recursion(1, published.nmax)
    return _table_diff(published, built, "published", "recursion"), "r=1, n<=14"


def check_three_way(sizes, rs=(1, 2, 3), oracle_nmax=None):
    nmax = sizes.nmax
    oracle_nmax = {} if oracle_nmax is None else oracle_nmax
    for r in rs:
        rec = table_from_recursion(r, nmax)
        expl = PlateauTable.from_series(explicit_gf(r, nmax), r)
        diff = _table_diff(rec, expl, "recursion", "explicit")
        if diff:
            return f"r={r} {diff}", ""
        n_or = oracle_nmax.get(r, nmax)
        orc = PlateauTable.from_series(oracle_series(StatisticSpec.plateau(r), n_or), r)
        ref = table_from_recursion(r, n_or) if n_or != nmax else rec
        diff = _table_diff(ref, orc, "recursion", "oracle")
        if diff:
            return f"r={r} {diff}", ""
    return None, f"r in {list(rs)}, n<={nmax}"


def check_base_column_forms(sizes, nmax=40):
    a, b = base_column(1, nmax), base_column_unit(nmax)
    for n, (u, v) in enumerate(zip(a, b)):
        if u != v:
            return f"c_{n}^0: general {u} != unit {v}", ""
    return None, f"n<={nmax}"


def check_columns(sizes, rs=(1, 2), pmax=4, nmax=20):
    for r in rs:
        table = table_from_recursion(r, nmax)
        for p, col in enumerate(column_gfs(r, pmax, nmax)):
            for n in range(nmax + 1):
                if col.coefficient(n) != table[n, p]:
                    return f"r={r} c_{n}^{p}: column {col.coefficient(n)} != table {table[n, p]}", ""
    return None, f"r in {list(rs)}, p<={pmax}, n<={nmax}"


def check_specialization(sizes, rs=(1, 2, 3)):
    N = sizes.n(30)
    motz = motzkin_series(N)
    for r in rs:
        g = explicit_gf(r, N)
        diff = _series_diff(subst_y_const(g, 1), motz, f"g_{r}(y=1)", "Motzkin")
        diff = diff or _series_diff(subst_y_const(g, 0), f0_closed(r, N), f"g_{r}(y=0)", "f0")
        if diff:
            return f"r={r} {diff}", ""
    return None, f"r in {list(rs)}, N={N}"


def check_degree_bound(sizes, rs=(0, 1, 2, 3)):
    N = sizes.n(30)
    for r in rs:
        g = explicit_gf(r, N)
        for n in range(N + 1):
            if g[n].degree_y() > n // (r + 2):
                return f"r={r} x^{n}: deg_y {g[n].degree_y()} > {n // (r + 2)}", ""
    return None, f"r in {list(rs)}, N={N}"


def check_peak_triangle(sizes, nmax=12):
    expl = explicit_gf(0, nmax)
    orc = oracle_series(StatisticSpec.plateau(0), nmax)
    return _series_diff(expl, orc, "explicit r=0", "oracle peaks"), f"n<={nmax}"


# -- residuals ------------------------------------------------------------------


def check_functional(sizes, rs=(1, 2, 3)):
    N = sizes.n(30)
    for r in rs:
        diff = _nonzero(functional_residual(r, N), f"r={r}")
        if diff:
            return diff, ""
    return None, f"r in {list(rs)}, N={N}"


def check_integral_form(sizes, rs=(1, 2)):
    N = sizes.n(24)
    for r in rs:
        diff = _nonzero(theorem1_residual(r, N, pmax=N // (r + 2)), f"r={r}")
        if diff:
            return diff, ""
    return None, f"r in {list(rs)}, N={N}"


def check_diagonal_form(sizes, rs=(1, 2, 3)):
    N = sizes.n(30)
    for r in rs:
        diff = _nonzero(theorem2_residual(r, N), f"r={r}")
        if diff:
            return diff, ""
    return None, f"r in {list(rs)}, N={N}"


def check_difdif(sizes, kmax=8, mmax=10):
    for k in range(kmax + 1):
        res = difdif_residual(k, mmax)
        bad = [m for m, v in enumerate(res) if v]
        if bad:
            return f"k={k}: nonzero coefficient of z^{bad[0]}: {res[bad[0]]}", ""
    return None, f"k<={kmax}, mmax={mmax}"


# -- continued fractions -----------------------------------------------------------


def check_contfrac(sizes, rs=(0, 1, 2, 3)):
    N = sizes.n(40)
    for r in rs:
        sched = plateau_schedule(r, N)
        cf = contfrac_gf(sched, N)
        diff = _series_diff(cf, explicit_gf(r, N), f"contfrac r={r}", "explicit")
        if diff:
            return diff, ""
        deeper = contfrac_gf(sched, N, depth=default_depth(N) + 3)
        diff = _series_diff(cf, deeper, f"depth {default_depth(N)}", f"depth {default_depth(N) + 3}")
        if diff:
            return f"r={r} {diff}", ""
    return None, f"r in {list(rs)}, N={N}, depth {default_depth(N)} vs +3"


# -- diagonals ---------------------------------------------------------------------


def check_diagonal_degree(sizes, kmax=12):
    for k in range(kmax + 1):
        d = diagonal_gf(k)
        if d.degree != expected_degree(k):
            return f"deg N_{k} = {d.degree} != {expected_degree(k)}", ""
    return None, f"k<={kmax}"


def check_diagonal_table(sizes, kmax=8, mmax=4):
    table = table_from_recursion(1, 3 * mmax + kmax)
    for k in range(kmax + 1):
        coeffs = diagonal_gf(k, mmax).expand(mmax)
        for m in range(mmax + 1):
            if coeffs[m] != table[3 * m + k, m]:
                return f"h_{k} at z^{m}: {coeffs[m]} != c_{3 * m + k}^{m} = {table[3 * m + k, m]}", ""
    return None, f"k<={kmax}, m<={mmax}"


# -- integrality -------------------------------------------------------------------


def check_integrality(sizes, nmax=60, pmax=20):
    table_from_recursion(1, nmax)
    column_gfs(1, pmax, nmax)
    return None, f"table n<={nmax}; columns p<={pmax}, N={nmax}"


# -- oracle ------------------------------------------------------------------------


def check_motzkin_counts(sizes):
    nmax = sizes.nmax
    m = paths.motzkin_numbers(nmax)
    for n in range(nmax + 1):
        got = len(paths.enumerate_paths(n))
        if got != m[n]:
            return f"n={n}: {got} paths != M_{n} = {m[n]}", ""
    return None, f"n<={nmax}"


def check_oracle_bounds(sizes, rs=(0, 1, 2, 3)):
    nmax = sizes.nmax
    m = paths.motzkin_numbers(nmax)
    for r in rs:
        for n in range(nmax + 1):
            w = paths.weighted_count(n, StatisticSpec.plateau(r))
            if w.evaluate(y=1).constant_term != m[n]:
                return f"r={r} n={n}: weights sum to {w.evaluate(y=1)} != M_{n}", ""
            if w.degree_y() > n // (r + 2):
                return f"r={r} n={n}: deg_y {w.degree_y()} > {n // (r + 2)}", ""
    return None, f"r in {list(rs)}, n<={nmax}"


def check_exact_runs(sizes):
    nmax = min(sizes.nmax, 12)
    for n in range(nmax + 1):
        for path in paths.enumerate_paths(n):
            starts = [i for i, _, _ in paths.plateaus(path)]
            if len(starts) != len(set(starts)):
                return f"{path}: a U step starts two plateaus", ""
    return None, f"n<={nmax}"


# -- special statistics -------------------------------------------------------------


def _odd(h):
    return h % 2 == 1


def _at_least_two(h):
    return h >= 2


def _multiple_of_three(h):
    return h % 3 == 0


def special_spec(name, nmax):
    """Oracle statistic matching each continued-fraction schedule up to length nmax."""
    if name == "peakfree":
        return StatisticSpec(exclusions=frozenset({0}))
    if name == "oddheight":
        return StatisticSpec((Rule(1, _odd),))
    if name == "uhd-uhhd":
        return StatisticSpec((Rule(1), Rule(2, marker="z")), frozenset(range(3, nmax + 1)))
    if name == "mixed-height":
        return StatisticSpec((Rule(1, _at_least_two), Rule(2, _multiple_of_three, "z")))
    raise ValueError(f"unknown statistic {name!r}")


SPECIAL = {
    "peakfree": (peakfree_gf, 14),
    "oddheight": (oddheight_gf, 12),
    "uhd-uhhd": (uhd_uhhd_gf, 12),
    "mixed-height": (mixed_height_gf, 12),
}


def _special_check(name):
    def check(sizes):
        builder, nmax = SPECIAL[name]
        spec = special_spec(name, nmax)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", ClosedFormMismatchWarning)
            g = builder(nmax, strict=False)
        diff = _series_diff(g, oracle_series(spec, nmax), "contfrac", "oracle")
        mism = [str(w.message) for w in caught if issubclass(w.category, ClosedFormMismatchWarning)]
        note = "closed form MISMATCH: " + mism[0] if mism else "closed form agrees"
        return diff, f"n<={nmax}; {note}"

    check.__name__ = f"check_{name.replace('-', '_')}"
    return check


CHECKS = {
    "series": [
        ("ring-axioms", check_ring_axioms),
        ("inverses", check_inverses),
        ("diagonal-substitution", check_diagonal_substitution),
    ],
    "tables": [
        ("table1", check_table1),
        ("three-way", check_three_way),
        ("base-column-forms", check_base_column_forms),
        ("columns", check_columns),
        ("specialization", check_specialization),
        ("degree-bound", check_degree_bound),
        ("peak-triangle", check_peak_triangle),
    ],
    "residuals": [
        ("functional", check_functional),
        ("integral-form", check_integral_form),
        ("diagonal-form", check_diagonal_form),
        ("difdif", check_difdif),
    ],
    "contfrac": [("plateau-schedules", check_contfrac)],
    "diagonals": [
        ("degree", check_diagonal_degree),
        ("table-diagonals", check_diagonal_table),
    ],
    "integrality": [("recursion-and-columns", check_integrality)],
    "oracle": [
        ("motzkin-counts", check_motzkin_counts),
        ("weights-and-bounds", check_oracle_bounds),
        ("exact-runs", check_exact_runs),
    ],
    "special": [(name, _special_check(name)) for name in SPECIAL],
}


def run_suite(suite, sizes=None):
    """Run one suite (or ``"all"``) and return the list of results."""
    sizes = sizes or Sizes()
    names = SUITES if suite == "all" else (suite,)
    results = []
    for s in names:
        if s not in CHECKS:
            raise ValueError(f"unknown suite {s!r}")
        for name, fn in CHECKS[s]:
            start = time.perf_counter()
            try:
                failure, info = fn(sizes)
            except MotzkinError as exc:
                failure, info = f"{type(exc).__name__}: {exc}", ""
            elapsed = time.perf_counter() - start
            if failure:
                results.append(CheckResult(s, name, False, failure, elapsed))
            else:
                results.append(CheckResult(s, name, True, info, elapsed))
    return results
