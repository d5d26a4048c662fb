"""Closed forms, column generating functions and identity residuals for plateaus.

Every function takes the plateau length ``r`` and a truncation order ``N``
and works on :class:`~motzkin_plateaus.series.XSeries` values. Residual
checkers return the difference of the two sides of an identity; an all-zero
series means the identity holds to the stated order.
"""

from .errors import BranchAssertionFailed, IntegralityViolation, NonIntegralResult
from .series import Y, MarkerPoly, XSeries, dx, integrate_y, recip, sqrt, subst_diagonal


def _x(order, power=1, coeff=1):
    return XSeries.x(order, power, coeff)


def quadratic_root(numerator, name="root"):
    """Finish ``numerator / (2 x^2)`` for a quadratic-formula numerator.

    The coefficients of x^0 and x^1 must vanish and the rest must be even;
    anything else means the wrong square-root branch was taken.
    """
    for n in (0, 1):
        if numerator[n]:
            raise BranchAssertionFailed(
                f"{name}: coefficient of x^{n} in the numerator is {numerator[n]}, expected 0"
            )
    out = numerator.unshift(2).divide(2)
    try:
        return out.to_integral()
    except NonIntegralResult as exc:
        raise BranchAssertionFailed(f"{name}: numerator is not divisible by 2 ({exc})") from None


def plateau_polynomial(r, order, marked=True):
    """``1 - x + x^(r+2) - x^(r+2) y`` (without the y term if not ``marked``)."""
    p = 1 - _x(order) + _x(order, r + 2)
    if marked:
        p = p - _x(order, r + 2, Y)
    return p


def f0_closed(r, N):
    """Generating function of paths with no plateau of length r, to ``x**N``."""
    if r < 0:
        raise ValueError("plateau length must be nonnegative")
    order = N + 2
    p = plateau_polynomial(r, order, marked=False)
    return quadratic_root(p - sqrt(p * p - _x(order, 2, 4)), f"f0(r={r})")


def explicit_gf(r, N):
    """Bivariate series ``sum c[n][p] x^n y^p`` for plateaus of length r, to ``x**N``.

    For r = 1 the radicand is also formed in its factored form and both
    results must agree.
    """
    if r < 0:
        raise ValueError("plateau length must be nonnegative")
    order = N + 2
    p = plateau_polynomial(r, order)
    g = quadratic_root(p - sqrt(p * p - _x(order, 2, 4)), f"g(r={r})")
    if r == 1:
        x3 = _x(order, 3) - _x(order, 3, Y)
        factored = (1 - 3 * _x(order) + x3) * (1 + _x(order) + x3)
        g2 = quadratic_root(p - sqrt(factored), "g(r=1, factored)")
        if g2 != g:
            raise BranchAssertionFailed("factored and squared radicands disagree for r=1")
    return g


def functional_residual(r, N, g=None):
    """``g - (1 + x g + x^2 g (g - x^r + x^r y))``; zero when g is the plateau series."""
    if g is None:
        g = explicit_gf(r, N)
    order = g.order
    x = _x(order)
    correction = _x(order, r, Y) - _x(order, r)
    return g - (1 + x * g + x * x * g * (g + correction))


def column_gfs(r, pmax, N, f0=None):
    """Column series ``f_0 .. f_pmax`` where ``f_p = sum_n c[n][p] x^n``.

    ``f_p = ((x/p) d/dx[x^(r+2) f_(p-1)] - (r+1) x^(r+2) f_(p-1)) / (1 - (r+1) x^(r+2))``
    """
    if f0 is None:
        f0 = f0_closed(r, N)
    step = r + 2
    geometric = recip(1 - _x(N, step, r + 1))
    cols = [f0.truncate(N)]
    for p in range(1, pmax + 1):
        lifted = cols[-1].shift(step)
        body = dx(lifted).shift(1).divide(p) - lifted * (r + 1)
        fp = body.truncate(N) * geometric
        try:
            fp.to_integral()
        except NonIntegralResult as exc:
            raise IntegralityViolation(f"column p={p}, r={r}: {exc}") from None
        cols.append(fp)
    return cols


def column_gf(r, p, N, f0=None):
    """Series of ``c[n][p]`` for fixed p, to ``x**N``."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    return column_gfs(r, p, N, f0)[p]


def theorem1_residual(r, N, pmax=None, f0=None, g=None):
    """Residual of the integral/differential form of the plateau series.

    ``g = (1-q)/(1-q(1-y)) * (f0 + x/(1-q) * d/dx[x^(r+2) * int_0^y g dt])``
    with ``q = (r+1) x^(r+2)``. ``1/(1 - q(1-y))`` is expanded as a geometric
    series, which converges x-adically because q carries ``x^(r+2)``.
    """
    if pmax is not None and pmax < N // (r + 2):
        raise ValueError(f"pmax={pmax} is below N // (r+2) = {N // (r + 2)}")
    if g is None:
        g = explicit_gf(r, N)
    if f0 is None:
        f0 = f0_closed(r, N)
    step = r + 2
    q = _x(N, step, r + 1)
    inv = recip(1 - q)
    lifted = integrate_y(g).shift(step)
    derived = dx(lifted).shift(1).truncate(N)
    inner = f0.truncate(N) + inv * derived
    prefactor = (1 - q) * recip(1 - q * (1 - Y))
    return g.truncate(N) - prefactor * inner


def dz(a):
    """Derivative in the marker z."""
    return a.map_coefficients(
        lambda c: c.map_terms(lambda k, v: ((k[0], max(k[1] - 1, 0)), v * k[1]))
    )


def theorem2_residual(r, N, g=None):
    """Residual of ``d/dx[x G] - (1 - z - (r+1) x^(r+2)) dG/dz`` with ``G = g(x, z/x^(r+2))``.

    Only monomials ``x^k z^p`` with ``k + (r+2)(p+1) <= N`` are determined by
    a series known to ``x**N``; the residual is restricted to those and
    truncated at ``x**(N-1)``.
    """
    if g is None:
        g = explicit_gf(r, N)
    step = r + 2
    big = subst_diagonal(g, r)
    order = big.order
    lhs = dx(big.shift(1))
    factor = 1 - XSeries.const(MarkerPoly.monomial(0, 1), order) - _x(order, step, r + 1)
    res = lhs - factor * dz(big)

    def known(n):
        return lambda k, v: (k, v if n + step * (k[1] + 1) <= N else 0)

    return XSeries(
        [res[n].map_terms(known(n)) for n in range(min(N - 1, res.order) + 1)],
        max(N - 1, 0),
    )


def motzkin_series(N):
    """Motzkin numbers as a series: the plateau series at y = 1."""
    order = N + 2
    p = 1 - _x(order)
    return quadratic_root(p - sqrt(p * p - _x(order, 2, 4)), "motzkin")


__all__ = [
    "quadratic_root",
    "plateau_polynomial",
    "f0_closed",
    "explicit_gf",
    "functional_residual",
    "column_gfs",
    "column_gf",
    "theorem1_residual",
    "theorem2_residual",
    "dz",
    "motzkin_series",
]
