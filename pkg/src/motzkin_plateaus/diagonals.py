"""Diagonal generating functions h_k(z) = sum_m c[3m+k][m] z^m for unit plateaus.

Each h_k is rational with denominator ``(1-z)^(k+1)``. The numerator is
computed twice, once by integrating truncated series and once by a
polynomial recursion on numerators, and the two must agree.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DegreeMismatch, IntegralityViolation
from .series import _render
from .tables import base_column


def _trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _mul(a, b, order=None):
    if not a or not b:
        return []
    n = len(a) + len(b) - 1 if order is None else order + 1
    out = [0] * n
    for i, u in enumerate(a):
        if not u or i >= n:
            continue
        for j, v in enumerate(b):
            if i + j >= n:
                break
            out[i + j] += u * v
    return out


def _deriv(a):
    return [i * a[i] for i in range(1, len(a))]


def _integrate(a):
    return [0] + [Fraction(c, i + 1) for i, c in enumerate(a)]


def _one_minus_z_power(e):
    return [(-1) ** i * comb(e, i) for i in range(e + 1)]


def _inverse_power_series(e, order):
    """Coefficients of ``1/(1-z)^e`` up to ``z**order``."""
    return [comb(m + e - 1, e - 1) for m in range(order + 1)]


def _integral(poly, what):
    out = []
    for i, c in enumerate(poly):
        c = Fraction(c)
        if c.denominator != 1:
            raise IntegralityViolation(f"{what}: coefficient of z^{i} is {c}")
        out.append(c.numerator)
    return out


@dataclass(frozen=True)
class RationalFn:
    """``numerator(z) / (1 - z)^denominator_exponent`` for diagonal k."""

    k: int
    numerator: tuple
    denominator_exponent: int

    @property
    def degree(self):
        return len(self.numerator) - 1

    def expand(self, mmax):
        """Taylor coefficients at z = 0 up to ``z**mmax``."""
        return _mul(list(self.numerator), _inverse_power_series(self.denominator_exponent, mmax), mmax)

    def __str__(self):
        num = _render([((i, 0, 0), c) for i, c in enumerate(self.numerator)], names=("z",))
        if len(self.numerator) > 1:
            num = f"({num})"
        return f"{num}/(1 - z)^{self.denominator_exponent}"


def expected_degree(k):
    return 2 * (k // 3)


@lru_cache(maxsize=None)
def _numerators_dde(kmax, base):
    """N_0..N_kmax from ``N_k = c_k + 2 int_0^z (1-t)((1-t) N'_(k-3) + (k-2) N_(k-3)) dt``."""
    nums = []
    for k in range(kmax + 1):
        poly = [base[k]]
        if k >= 3:
            prev = nums[k - 3]
            inner = _add(_mul([1, -1], _deriv(prev)), [(k - 2) * c for c in prev])
            integrand = _mul([1, -1], inner)
            poly = _add(poly, [2 * c for c in _integrate(integrand)])
        nums.append(tuple(_trim(_integral(poly, f"N_{k}")) or [0]))
    return tuple(nums)


def _series_by_integration(kmax, order, base):
    """Truncated expansions of h_0..h_kmax via
    ``h_k = (c_k + 2 int_0^z (1-t)^k h'_(k-3)(t) dt) / (1-z)^(k+1)``."""
    hs = []
    for k in range(kmax + 1):
        inner = [base[k]]
        if k >= 3:
            integrand = _mul(_one_minus_z_power(k), _deriv(hs[k - 3]), order - 1)
            inner = _add(inner, [2 * c for c in _integrate(integrand)])
        hs.append(_mul(inner, _inverse_power_series(k + 1, order), order))
    return hs


def diagonal_gf(k, mmax=10, base=None):
    """h_k as a :class:`RationalFn`, cross-checked between both constructions.

    ``base`` overrides the plateau-free counts ``c_k^0`` (default: the r=1
    base column). Raises DegreeMismatch if the numerator degree is not
    ``2 * (k // 3)`` and IntegralityViolation if an integral fails to clear.
    """
    if k < 0:
        raise ValueError("diagonal index must be nonnegative")
    base = tuple(base) if base is not None else tuple(base_column(1, k))
    numerator = _numerators_dde(k, base[: k + 1])[k]
    degree = len(numerator) - 1
    if degree != expected_degree(k):
        raise DegreeMismatch(f"deg N_{k} = {degree}, expected {expected_degree(k)}")

    # independent route: expand by integration, then clear the denominator
    order = max(mmax, degree + 3)
    series = _series_by_integration(k, order, base[: k + 1])[k]
    cleared = _integral(_mul(series, _one_minus_z_power(k + 1), order), f"h_{k}*(1-z)^{k + 1}")
    if _trim(cleared) != list(numerator):
        raise DegreeMismatch(
            f"h_{k}: integral recurrence gives numerator {_trim(cleared)}, "
            f"numerator recursion gives {list(numerator)}"
        )
    return RationalFn(k, numerator, k + 1)


def difdif_residual(k, mmax, diagonal=diagonal_gf):
    """Coefficients of ``h_k' - z h_k' - (k+1) h_k - 2 h_(k-3)'`` up to ``z**mmax``."""
    hk = diagonal(k, mmax + 1).expand(mmax + 1)
    prev = diagonal(k - 3, mmax + 1).expand(mmax + 1) if k >= 3 else [0] * (mmax + 2)
    d = _deriv(hk)
    zd = [0] + d[:mmax]
    dprev = _deriv(prev)
    return [d[m] - zd[m] - (k + 1) * hk[m] - 2 * dprev[m] for m in range(mmax + 1)]
