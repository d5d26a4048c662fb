"""Generating functions for plateaus in Motzkin paths, in exact arithmetic.

The building blocks:

* :mod:`.series` -- truncated power series in x over polynomials in y, z
* :mod:`.paths` -- brute-force enumeration, the independent ground truth
* :mod:`.tables`, :mod:`.engines`, :mod:`.diagonals`, :mod:`.contfrac` --
  recursions, closed forms, residual checks and continued fractions
* :mod:`.verify`, :mod:`.cli` -- cross-validation suites and the command line
"""

from .contfrac import (
    CorrectionSchedule,
    contfrac_gf,
    mixed_height_gf,
    oddheight_gf,
    peakfree_gf,
    plateau_schedule,
    uhd_uhhd_gf,
)
from .diagonals import RationalFn, diagonal_gf, difdif_residual
from .engines import (
    column_gf,
    explicit_gf,
    f0_closed,
    functional_residual,
    theorem1_residual,
    theorem2_residual,
)
from .errors import (
    BranchAssertionFailed,
    CapExceeded,
    ClosedFormMismatch,
    DegreeMismatch,
    IntegralityViolation,
    NegativeExponent,
    NonIntegralResult,
    NonUnitConstantTerm,
)
from .paths import Rule, StatisticSpec, count_plateaus, enumerate_paths, weighted_count
from .series import MarkerPoly, XSeries, dx, integrate_y, recip, sqrt, subst_diagonal, subst_y_const
from .tables import PlateauTable, base_column, table_from_recursion

__version__ = "0.1.0"
