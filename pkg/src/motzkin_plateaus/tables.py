"""Plateau count tables built from the sewing recursion."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import IntegralityViolation
from .series import MarkerPoly, XSeries


@dataclass(frozen=True)
class PlateauTable:
    """Counts ``c[n][p]`` of length-n Motzkin paths with p plateaus of length r.

    Row n holds ``p = 0 .. n // (r + 2)``; lookups outside that range give 0.
    """

    r: int
    nmax: int
    counts: tuple

    def __getitem__(self, key):
        n, p = key
        if n < 0 or p < 0 or n > self.nmax or p >= len(self.counts[n]):
            return 0
        return self.counts[n][p]

    def row(self, n):
        return self.counts[n]

    def rows(self):
        return list(self.counts)

    def flatten(self):
        """Row-major values, n ascending and p ascending within each row."""
        return [v for row in self.counts for v in row]

    def as_series(self):
        """The table as a bivariate series sum c[n][p] x^n y^p."""
        return XSeries(
            [MarkerPoly({(p, 0): v for p, v in enumerate(row)}) for row in self.counts],
            self.nmax,
        )

    @classmethod
    def from_series(cls, g, r):
        """Read ``c[n][p]`` off the y-coefficients of a plateau series."""
        rows = []
        for n, c in enumerate(g.coeffs):
            width = n // (r + 2) + 1
            extra = [p for (p, q) in c.terms if p >= width or q]
            if extra:
                raise ValueError(f"x^{n} has terms beyond p <= {width - 1}: {c}")
            rows.append(tuple(c.coeff(p) for p in range(width)))
        return cls(r, g.order, tuple(rows))


def base_column(r, nmax):
    """Counts of paths with no plateau of length r, for lengths 0..nmax.

    Uses ``c_n = c_{n-1} + sum_{k=0}^{n-2} c_k c_{n-k-2} - c_{n-r-2}``.
    """
    if r < 1:
        raise ValueError("base_column needs r >= 1")
    c = []
    for n in range(nmax + 1):
        if n <= 1:
            c.append(1)
            continue
        v = c[n - 1] + sum(c[k] * c[n - k - 2] for k in range(n - 1))
        if n - r - 2 >= 0:
            v -= c[n - r - 2]
        c.append(v)
    return c


def base_column_unit(nmax):
    """The r = 1 column through ``c_n = c_{n-1} + c_{n-2} + sum_{k=2}^{n-2} c_k c_{n-k-2}``."""
    c = []
    for n in range(nmax + 1):
        if n == 0:
            c.append(1)
            continue
        v = c[n - 1]
        if n >= 2:
            v += c[n - 2]
        v += sum(c[k] * c[n - k - 2] for k in range(2, n - 1))
        c.append(v)
    return c


def table_from_recursion(r, nmax, base=None):
    """Build ``c[n][p]`` for plateau length r from the sewing recursion.

    ``c[n][p] = (n - (r+1)p)/p * c[n-r-2][p-1] + (r+1) * c[n-r-2][p]``, with
    column 0 from :func:`base_column` unless ``base`` supplies it. The
    division by p is exact; a remainder raises IntegralityViolation.
    """
    if r < 1:
        raise ValueError("table_from_recursion needs r >= 1")
    col0 = list(base) if base is not None else base_column(r, nmax)
    if len(col0) < nmax + 1:
        raise ValueError(f"base column has {len(col0)} entries, need {nmax + 1}")
    step = r + 2
    rows = []

    def get(n, p):
        if n < 0 or p < 0 or p >= len(rows[n]):
            return 0
        return rows[n][p]

    for n in range(nmax + 1):
        row = [col0[n]]
        for p in range(1, n // step + 1):
            v = Fraction(n - (r + 1) * p, p) * get(n - step, p - 1) + (r + 1) * get(n - step, p)
            if v.denominator != 1:
                raise IntegralityViolation(f"c_{n}^{p} = {v} for r={r} is not an integer")
            row.append(v.numerator)
        rows.append(tuple(row))
    return PlateauTable(r, nmax, tuple(rows))
