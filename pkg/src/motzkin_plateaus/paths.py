"""Brute-force Motzkin path enumeration and plateau statistics.

Paths are plain strings over ``"UHD"``. Everything here is deliberately
naive: it is the ground truth the generating functions are checked against.
"""

import re
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import CapExceeded
from .series import MarkerPoly, XSeries

DEFAULT_CAP = 18

_PLATEAU = re.compile(r"U(H*)D")
_MARKERS = {"y": (1, 0), "z": (0, 1)}


def any_height(h):
    return True


def is_motzkin(path):
    """True if ``path`` is a valid Motzkin path over U/H/D."""
    height = 0
    for step in path:
        if step == "U":
            height += 1
        elif step == "D":
            height -= 1
            if height < 0:
                return False
        elif step != "H":
            return False
    return height == 0


@lru_cache(maxsize=4)
def _paths(n):
    # lexicographic in U < H < D; prune prefixes that cannot close
    out = []
    order = ("U", "H", "D")

    def extend(prefix, height, left):
        if left == 0:
            out.append(prefix)
            return
        for step in order:
            if step == "U":
                if height + 1 > left - 1:
                    continue
                extend(prefix + "U", height + 1, left - 1)
            elif step == "H":
                if height > left - 1:
                    continue
                extend(prefix + "H", height, left - 1)
            elif height > 0:
                extend(prefix + "D", height - 1, left - 1)

    extend("", 0, n)
    return tuple(out)


def enumerate_paths(n, cap=DEFAULT_CAP):
    """All Motzkin paths of length n, in lexicographic order with U < H < D."""
    if n < 0:
        raise ValueError("path length must be nonnegative")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap}")
    return _paths(n)


def plateaus(path):
    """Every ``U H^j D`` block in the path as ``(start, j, height)`` triples.

    ``start`` indexes the U step and ``height`` is the level of the H steps
    (the apex level when ``j == 0``). H-runs are maximal, so a block is
    reported under exactly one length.
    """
    out = []
    for m in _PLATEAU.finditer(path):
        i = m.start()
        height = path.count("U", 0, i) - path.count("D", 0, i) + 1
        out.append((i, len(m.group(1)), height))
    return out


def count_plateaus(path, r):
    """Positions and heights of the plateaus of exact length r in ``path``."""
    return [(i, h) for i, j, h in plateaus(path) if j == r]


@dataclass(frozen=True)
class Rule:
    """Mark every plateau of length ``r`` whose height satisfies ``height`` with ``marker``."""

    r: int
    height: object = any_height
    marker: str = "y"

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("plateau length must be nonnegative")
        if self.marker not in _MARKERS:
            raise ValueError(f"unknown marker {self.marker!r}")


@dataclass(frozen=True)
class StatisticSpec:
    """Which plateau occurrences to mark and which plateau lengths forbid a path."""

    rules: tuple = ()
    exclusions: frozenset = field(default_factory=frozenset)

    @classmethod
    def plateau(cls, r, marker="y"):
        return cls(rules=(Rule(r, any_height, marker),))


def path_weight(path, spec):
    """Exponent pair ``(#y, #z)`` for ``path``, or None if the path is excluded."""
    found = plateaus(path)
    if spec.exclusions and any(j in spec.exclusions for _, j, _ in found):
        return None
    ey = ez = 0
    for _, j, h in found:
        for rule in spec.rules:
            if rule.r == j and rule.height(h):
                if rule.marker == "y":
                    ey += 1
                else:
                    ez += 1
    return ey, ez


def weighted_count(n, spec, cap=DEFAULT_CAP):
    """Sum of ``y^#y z^#z`` over all non-excluded Motzkin paths of length n."""
    counts = {}
    for path in enumerate_paths(n, cap):
        w = path_weight(path, spec)
        if w is not None:
            counts[w] = counts.get(w, 0) + 1
    return MarkerPoly(counts)


def oracle_series(spec, order, cap=DEFAULT_CAP):
    """The generating function of ``spec`` up to ``x**order``, by enumeration."""
    return XSeries([weighted_count(n, spec, cap) for n in range(order + 1)], order)


def motzkin_numbers(nmax):
    """M_0..M_nmax from ``M_n = M_{n-1} + sum M_k M_{n-2-k}``."""
    m = []
    for n in range(nmax + 1):
        if n == 0:
            m.append(1)
            continue
        m.append(m[n - 1] + sum(m[k] * m[n - 2 - k] for k in range(n - 1)))
    return m
