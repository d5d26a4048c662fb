"""Height-indexed continued fractions and the special path statistics built on them.

``G = 1/(1 - x - x^2 C_1 - x^2/(1 - x - x^2 C_2 - x^2/(...)))``

The correction ``C_k`` edits what may sit directly between an up step from
height k-1 and its matching down step, so it acts on plateaus whose
horizontal steps lie at height k. The continued fraction over a schedule is
the definition of each special generating function here; the radical closed
forms are evaluated alongside and compared against it.
"""

import warnings
from dataclasses import dataclass

from .errors import ClosedFormMismatch, ClosedFormMismatchWarning
from .engines import quadratic_root
from .series import Y, Z, XSeries, recip, sqrt


def _x(order, power=1, coeff=1):
    return XSeries.x(order, power, coeff)


@dataclass(frozen=True)
class CorrectionSchedule:
    """Eventually periodic corrections: ``prefix`` gives C_1..C_j, ``period`` repeats after.

    Entries are XSeries, MarkerPolys or integers; every one of them leaves
    ``1 - x - x^2 C_k`` with constant term 1, since x^2 C_k has none.
    """

    prefix: tuple = ()
    period: tuple = (0,)

    def __post_init__(self):
        if not self.period:
            raise ValueError("a correction schedule needs a nonempty period")

    @classmethod
    def constant(cls, c):
        return cls((), (c,))

    def __getitem__(self, k):
        if k < 1:
            raise IndexError("heights start at 1")
        if k <= len(self.prefix):
            return self.prefix[k - 1]
        return self.period[(k - len(self.prefix) - 1) % len(self.period)]

    def term(self, k, order):
        c = self[k]
        if isinstance(c, XSeries):
            if c.order < order:
                raise ValueError(f"C_{k} is known to x^{c.order}, need x^{order}")
            return c.truncate(order)
        return XSeries.const(c, order)


def default_depth(N):
    # a path whose horizontal or peak steps reach height k has length >= 2k
    return N // 2 + 1


def contfrac_gf(schedule, N, depth=None):
    """Evaluate the continued fraction bottom-up to ``x**N``.

    Levels 1..depth are kept and the tail below level ``depth`` is set to 0.
    The default depth ``N // 2 + 1`` keeps every path of length <= N.
    """
    if depth is None:
        depth = default_depth(N)
    if depth < 1:
        raise ValueError("depth must be at least 1")
    x = _x(N)
    x2 = _x(N, 2)
    tail = XSeries.zero(N)
    for k in range(depth, 0, -1):
        tail = recip(1 - x - x2 * (schedule.term(k, N) + tail))
    return tail


def plateau_schedule(r, N):
    """C = x^r y - x^r at every height: the length-r plateau series."""
    return CorrectionSchedule.constant(_x(N, r, Y) - _x(N, r))


def _unit_plateau(order):
    return _x(order, 1, Y) - _x(order)  # xy - x


def _double_plateau(order):
    return _x(order, 2, Z) - _x(order, 2)  # x^2 z - x^2


def peakfree_schedule(N):
    return CorrectionSchedule.constant(-1)


def oddheight_schedule(N):
    return CorrectionSchedule((), (_unit_plateau(N), 0))


def uhd_uhhd_schedule(N, peaks=True):
    """C = xy - x + x^2 z - x^2 - x^3/(1-x); with ``peaks=False`` also -1 to drop UD."""
    long_runs = _x(N, 3) * recip(1 - _x(N))
    c = _unit_plateau(N) + _double_plateau(N) - long_runs
    if not peaks:
        c = c - 1
    return CorrectionSchedule.constant(c)


def mixed_height_schedule(N):
    y, z = _unit_plateau(N), _double_plateau(N)
    return CorrectionSchedule((0,), (y, y + z, y))


# -- radical closed forms ------------------------------------------------------


def peakfree_closed(N):
    order = N + 2
    x = _x(order)
    radicand = x**4 - 2 * x**3 - x**2 - 2 * x + 1
    return quadratic_root(x**2 - x + 1 - sqrt(radicand), "peakfree")


def oddheight_closed(N):
    """``(1-x)(A + sqrt(A(A + 4x^2))) / (2 x^2 A)``, ``A = (1-x)(x^2(xy-x) + x - 1)``."""
    order = N + 2
    x = _x(order)
    a = (1 - x) * (x * x * _unit_plateau(order) + x - 1)
    num = (1 - x) * (a + sqrt(a * (a + 4 * x * x)))
    return (quadratic_root(num, "oddheight") * recip(a.truncate(N))).to_integral()


def uhd_uhhd_closed(N):
    """``(-(A(2)+1) + sqrt((A(4)+1)(A(0)+1))) / (2x^2(x-1))``, ``A(k) = x(x-1)(x^3 z + x^2 y + x + k)``."""
    order = N + 2
    x = _x(order)

    def big_a(k):
        return x * (x - 1) * (x**3 * Z + x**2 * Y + x + k)

    num = -(big_a(2) + 1) + sqrt((big_a(4) + 1) * (big_a(0) + 1))
    return (quadratic_root(num, "uhd-uhhd") * recip(_x(N) - 1)).to_integral()


def mixed_height_closed(N):
    """``1/(1 - x - x^2 p)`` with ``p = -(A + sqrt(B)) / (2 x^2 D)``.

    Lowercase ``y``, ``z`` below hold the corrections ``Y = xy - x`` and
    ``Z = x^2 z - x^2``. The ``(y - z) x^4`` term of D uses the raw markers,
    which equals ``x^3 Y - x^2 Z``.
    """
    order = N + 2
    x = _x(order)
    y, z = _unit_plateau(order), _double_plateau(order)
    yz = XSeries.const(Y - Z, order)
    x2 = x * x
    a = (
        x2 * y * (x2 * y * (x2 * y + 3 * x - 3) + x2 * z * (x2 * y + 2 * x - 2) + 2 * x2 - 6 * x + 3)
        + x2 * z * (2 * x2 - 2 * x + 1)
        - 2 * x2
        + 3 * x
        - 1
    )
    d = x2 * y * (x2 * z + x2 * y + x - 2) + yz * x**4 + x**3 * z - 2 * x + 1
    b = (
        (x2 * y - 1)
        * (x2 * y + 2 * x - 1)
        * (d - x**3 * y - x**3 * z - 2 * x2 + x)
        * (d + x**3 * z + x**3 * y - x)
    )
    # p = -(A + sqrt B) / (2 x^2 D)
    p = -quadratic_root(a + sqrt(b), "mixed-height") * recip(d.truncate(N))
    xn = _x(N)
    return recip(1 - xn - xn * xn * p)


# -- authoritative builders -----------------------------------------------------


def first_difference(a, b):
    """First x-degree where two series differ, or None."""
    for n in range(min(a.order, b.order) + 1):
        if a[n] != b[n]:
            return n
    return None


def compare_closed_form(name, authoritative, closed, strict=False):
    """Raise (strict) or warn about the first coefficient where ``closed`` is wrong."""
    n = first_difference(authoritative, closed)
    if n is None:
        return None
    err = ClosedFormMismatch(name, n, authoritative[n], closed[n])
    if strict:
        raise err
    warnings.warn(str(err), ClosedFormMismatchWarning, stacklevel=3)
    return err


def _checked(name, schedule, closed_fn, N, strict):
    g = contfrac_gf(schedule, N)
    try:
        closed = closed_fn(N)
    except ArithmeticError as exc:
        if strict:
            raise
        warnings.warn(f"{name}: closed form failed: {exc}", ClosedFormMismatchWarning, stacklevel=3)
        return g
    compare_closed_form(name, g, closed, strict)
    return g


def peakfree_gf(N, strict=True):
    """Motzkin paths with no UD peaks (C = -1 at every height)."""
    return _checked("peakfree", peakfree_schedule(N), peakfree_closed, N, strict)


def oddheight_gf(N, strict=False):
    """Plateaus (UHD) at odd height weighted by y."""
    return _checked("oddheight", oddheight_schedule(N), oddheight_closed, N, strict)


def uhd_uhhd_gf(N, strict=False, peaks=True):
    """UHD weighted by y, UHHD by z, and no U H^j D with j >= 3.

    Peaks (UD) are allowed, as in the radical closed form. ``peaks=False``
    forbids them as well; there is no closed form to compare against then.
    """
    if not peaks:
        return contfrac_gf(uhd_uhhd_schedule(N, peaks=False), N)
    return _checked("uhd-uhhd", uhd_uhhd_schedule(N), uhd_uhhd_closed, N, strict)


def mixed_height_gf(N, strict=False):
    """UHD at height >= 2 weighted by y, UHHD at height divisible by 3 weighted by z."""
    return _checked("mixed-height", mixed_height_schedule(N), mixed_height_closed, N, strict)


__all__ = [
    "CorrectionSchedule",
    "contfrac_gf",
    "default_depth",
    "plateau_schedule",
    "peakfree_schedule",
    "oddheight_schedule",
    "uhd_uhhd_schedule",
    "mixed_height_schedule",
    "peakfree_closed",
    "oddheight_closed",
    "uhd_uhhd_closed",
    "mixed_height_closed",
    "first_difference",
    "compare_closed_form",
    "peakfree_gf",
    "oddheight_gf",
    "uhd_uhhd_gf",
    "mixed_height_gf",
]
