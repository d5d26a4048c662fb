"""Exact truncated power series in x over integer polynomials in two markers.

A :class:`MarkerPoly` is a polynomial in the statistic markers ``y`` and ``z``.
An :class:`XSeries` is a power series in ``x`` whose coefficients are
MarkerPolys, known exactly up to and including ``x**order``.

Coefficients are Python ints. Rational coefficients (``fractions.Fraction``)
are tolerated so that divided recursions and ``integrate_y`` can be written
directly; :meth:`XSeries.to_integral` is the checkpoint that turns such a
series back into an integer one or raises :class:`NonIntegralResult`.
"""

from fractions import Fraction
from numbers import Rational

from .errors import NegativeExponent, NonIntegralResult, NonUnitConstantTerm

__all__ = [
    "MarkerPoly",
    "XSeries",
    "recip",
    "sqrt",
    "dx",
    "integrate_y",
    "subst_y_const",
    "subst_diagonal",
]


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _mul_into(acc, a, b):
    """acc += a*b where all three are term dicts."""
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            key = (i1 + i2, j1 + j2)
            acc[key] = acc.get(key, 0) + c1 * c2


class MarkerPoly:
    """Polynomial in y and z with exact coefficients.

    >>> p = MarkerPoly({(0, 0): 36, (1, 0): 14, (2, 0): 1})
    >>> str(p)
    '36 + 14*y + y^2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (i, j), c in dict(terms).items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative marker exponent ({i}, {j})")
                if not isinstance(c, Rational):
                    raise TypeError(f"coefficient {c!r} is not an exact rational")
                if c:
                    clean[(int(i), int(j))] = _normalize(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # trusted constructor: drops zeros, skips validation
        self = object.__new__(cls)
        self._terms = {k: _normalize(c) for k, c in terms.items() if c}
        self._hash = None
        return self

    @classmethod
    def const(cls, c):
        return cls._raw({(0, 0): c})

    @classmethod
    def monomial(cls, deg_y=0, deg_z=0, coeff=1):
        return cls({(deg_y, deg_z): coeff})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, MarkerPoly):
            return value
        if isinstance(value, Rational):
            return cls.const(value)
        raise TypeError(f"cannot use {value!r} as a marker polynomial")

    @property
    def terms(self):
        """A copy of the ``{(deg_y, deg_z): coeff}`` mapping."""
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, deg_y=0, deg_z=0):
        return self._terms.get((deg_y, deg_z), 0)

    def __getitem__(self, key):
        return self._terms.get(tuple(key), 0)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = MarkerPoly.const(other)
        if not isinstance(other, MarkerPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                # agree with the hash of the equal plain number
                self._hash = hash(self.constant_term)
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"MarkerPoly({str(self)!r})"

    def __str__(self):
        return _render([((0,) + k, c) for k, c in self.items()])

    def __add__(self, other):
        try:
            other = MarkerPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return MarkerPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MarkerPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = MarkerPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return MarkerPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            return MarkerPoly._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, MarkerPoly):
            return NotImplemented
        out = {}
        _mul_into(out, self._terms, other._terms)
        return MarkerPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a marker polynomial")
        out = MarkerPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def divide(self, d):
        """Exact division by a nonzero rational; result may be rational."""
        return MarkerPoly._raw({k: Fraction(c) / d for k, c in self._terms.items()})

    @property
    def constant_term(self):
        return self._terms.get((0, 0), 0)

    def is_constant(self):
        return all(k == (0, 0) for k in self._terms)

    def is_integral(self):
        return all(isinstance(c, int) for c in self._terms.values())

    def degree_y(self):
        return max((i for i, _ in self._terms), default=-1)

    def degree_z(self):
        return max((j for _, j in self._terms), default=-1)

    def evaluate(self, y=None, z=None):
        """Substitute integers for y and/or z; markers left as None stay symbolic."""
        out = {}
        for (i, j), c in self._terms.items():
            if y is not None:
                c, i = c * y**i, 0
            if z is not None:
                c, j = c * z**j, 0
            out[(i, j)] = out.get((i, j), 0) + c
        return MarkerPoly._raw(out)

    def map_terms(self, fn):
        """Apply ``fn((i, j), c) -> ((i2, j2), c2)`` to every term and re-collect."""
        out = {}
        for k, c in self._terms.items():
            k2, c2 = fn(k, c)
            out[k2] = out.get(k2, 0) + c2
        return MarkerPoly._raw(out)


Y = MarkerPoly.monomial(1, 0)
Z = MarkerPoly.monomial(0, 1)
ONE = MarkerPoly.const(1)
ZERO = MarkerPoly()


def _render(terms, names=("x", "y", "z")):
    """Render ``[((ex, ey, ez), coeff), ...]`` as ``2*x^2 - x^3*y``."""
    pieces = []
    for exps, c in sorted(terms, key=lambda t: t[0]):
        if not c:
            continue
        mono = "*".join(
            name if e == 1 else f"{name}^{e}" for name, e in zip(names, exps) if e
        )
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


class XSeries:
    """Power series in x truncated after ``x**order``.

    ``coeffs[n]`` is the MarkerPoly coefficient of ``x**n``. Binary operations
    between series of different orders truncate to the smaller order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        cs = [MarkerPoly.coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        cs = cs[: order + 1]
        cs.extend([ZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs, order):
        self = object.__new__(cls)
        self.order = order
        self.coeffs = tuple(coeffs)
        return self

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order):
        return cls._raw([ZERO] * (order + 1), order)

    @classmethod
    def one(cls, order):
        return cls.const(1, order)

    @classmethod
    def const(cls, c, order):
        return cls([c], order)

    @classmethod
    def x(cls, order, power=1, coeff=1):
        """The monomial ``coeff * x**power`` at the given order."""
        cs = [ZERO] * (order + 1)
        if power <= order:
            cs[power] = MarkerPoly.coerce(coeff)
        return cls._raw(cs, order)

    @classmethod
    def from_polynomial(cls, terms, order):
        """Build from ``{(deg_x, deg_y, deg_z): coeff}``."""
        cs = [{} for _ in range(order + 1)]
        for (n, i, j), c in terms.items():
            if n <= order:
                cs[n][(i, j)] = cs[n].get((i, j), 0) + c
        return cls._raw([MarkerPoly(t) for t in cs], order)

    # -- element access -----------------------------------------------

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self.coeffs[n]
        if n < 0 or n > self.order:
            raise IndexError(f"x^{n} is outside truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def coefficient(self, n, deg_y=0, deg_z=0):
        return self[n].coeff(deg_y, deg_z)

    def integers(self):
        """Coefficient list for a marker-free series."""
        out = []
        for n, c in enumerate(self.coeffs):
            if not c.is_constant():
                raise ValueError(f"coefficient of x^{n} carries markers: {c}")
            out.append(c.constant_term)
        return out

    @property
    def constant_term(self):
        return self.coeffs[0]

    def valuation(self):
        """Index of the first nonzero coefficient, or None for the zero series."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def is_zero(self):
        return not any(self.coeffs)

    def is_integral(self):
        return all(c.is_integral() for c in self.coeffs)

    def to_integral(self):
        """Return self after checking that every coefficient is an integer."""
        for n, c in enumerate(self.coeffs):
            for (i, j), v in c.items():
                if not isinstance(v, int):
                    raise NonIntegralResult(
                        f"coefficient of x^{n} y^{i} z^{j} is {v}, not an integer"
                    )
        return self

    # -- comparison and display ---------------------------------------

    def __eq__(self, other):
        if not isinstance(other, XSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"XSeries({str(self)!r}, order={self.order})"

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            terms.extend(((n,) + k, v) for k, v in c.items())
        return _render(terms)

    def render(self, var="x"):
        terms = []
        for n, c in enumerate(self.coeffs):
            terms.extend(((n,) + k, v) for k, v in c.items())
        return _render(terms, names=(var, "y", "z"))

    # -- ring operations ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, XSeries):
            return other
        if isinstance(other, (MarkerPoly, Rational)):
            return XSeries.const(other, self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        return XSeries._raw(
            [self.coeffs[n] + other.coeffs[n] for n in range(order + 1)], order
        )

    __radd__ = __add__

    def __neg__(self):
        return XSeries._raw([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (Rational, MarkerPoly)):
            return XSeries._raw([c * other for c in self.coeffs], self.order)
        if not isinstance(other, XSeries):
            return NotImplemented
        order = min(self.order, other.order)
        a = [c._terms for c in self.coeffs]
        b = [c._terms for c in other.coeffs]
        na = [n for n in range(order + 1) if a[n]]
        nb = [n for n in range(order + 1) if b[n]]
        out = [{} for _ in range(order + 1)]
        for i in na:
            for j in nb:
                if i + j > order:
                    break
                _mul_into(out[i + j], a[i], b[j])
        return XSeries._raw([MarkerPoly._raw(t) for t in out], order)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return recip(self) ** (-n)
        out = XSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def divide(self, d):
        """Divide every coefficient by a nonzero rational (result may be rational)."""
        return XSeries._raw([c.divide(d) for c in self.coeffs], self.order)

    def truncate(self, order):
        if order > self.order:
            raise ValueError(f"cannot raise truncation order {self.order} to {order}")
        return XSeries._raw(self.coeffs[: order + 1], order)

    def shift(self, k):
        """Multiply by ``x**k``; the truncation order grows by k."""
        if k < 0:
            return self.unshift(-k)
        return XSeries._raw((ZERO,) * k + self.coeffs, self.order + k)

    def unshift(self, k):
        """Divide by ``x**k``, which must divide exactly; the order drops by k."""
        for n in range(min(k, self.order + 1)):
            if self.coeffs[n]:
                raise NegativeExponent(
                    f"cannot divide by x^{k}: coefficient of x^{n} is {self.coeffs[n]}"
                )
        if k > self.order:
            raise ValueError(f"dividing by x^{k} leaves nothing of order {self.order}")
        return XSeries._raw(self.coeffs[k:], self.order - k)

    def map_coefficients(self, fn):
        return XSeries._raw([MarkerPoly.coerce(fn(c)) for c in self.coeffs], self.order)

    # method spellings of the module-level operations
    def recip(self):
        return recip(self)

    def sqrt(self):
        return sqrt(self)

    def dx(self):
        return dx(self)

    def integrate_y(self):
        return integrate_y(self)

    def subst_y(self, v):
        return subst_y_const(self, v)

    def subst_diagonal(self, r):
        return subst_diagonal(self, r)


def _unit_constant(a, allowed):
    c0 = a.coeffs[0]
    if not c0.is_constant() or c0.constant_term not in allowed:
        raise NonUnitConstantTerm(f"constant term {c0} is not one of {sorted(allowed)}")
    return c0.constant_term


def recip(a):
    """Multiplicative inverse of a series whose constant term is 1 or -1."""
    u = _unit_constant(a, {1, -1})
    order = a.order
    at = [c._terms for c in a.coeffs]
    nz = [i for i in range(1, order + 1) if at[i]]
    b = [{(0, 0): u}]
    for n in range(1, order + 1):
        acc = {}
        for i in nz:
            if i > n:
                break
            _mul_into(acc, at[i], b[n - i])
        b.append({k: -u * c for k, c in acc.items() if c})
    return XSeries._raw([MarkerPoly._raw(t) for t in b], order)


def sqrt(a):
    """Square root with constant term 1 of a series whose constant term is 1.

    Coefficients come from solving ``b*b == a`` one degree at a time.
    """
    _unit_constant(a, {1})
    order = a.order
    b = [{(0, 0): 1}]
    for n in range(1, order + 1):
        acc = dict(a.coeffs[n]._terms)
        cross = {}
        for i in range(1, (n + 1) // 2):
            _mul_into(cross, b[i], b[n - i])
        for k, c in cross.items():
            acc[k] = acc.get(k, 0) - 2 * c
        if n % 2 == 0:
            half = {}
            _mul_into(half, b[n // 2], b[n // 2])
            for k, c in half.items():
                acc[k] = acc.get(k, 0) - c
        b.append({k: _normalize(Fraction(c, 2) if isinstance(c, int) else c / 2)
                  for k, c in acc.items() if c})
    return XSeries._raw([MarkerPoly._raw(t) for t in b], order)


def dx(a):
    """Termwise derivative in x. The order drops by one."""
    if a.order == 0:
        return XSeries.zero(0)
    return XSeries._raw([a.coeffs[n] * n for n in range(1, a.order + 1)], a.order - 1)


def integrate_y(a):
    """Antiderivative in y from 0: ``x^n y^p z^q -> x^n y^(p+1) z^q / (p+1)``.

    The result may carry rational coefficients; call ``to_integral`` on
    whatever integral expression it ends up in.
    """
    return XSeries._raw(
        [c.map_terms(lambda k, v: ((k[0] + 1, k[1]), Fraction(v, 1) / (k[0] + 1)))
         for c in a.coeffs],
        a.order,
    )


def subst_y_const(a, v):
    """Set the marker y to the integer v, leaving z alone."""
    return XSeries._raw([c.evaluate(y=v) for c in a.coeffs], a.order)


def subst_diagonal(a, r):
    """Substitute ``y -> z / x**(r+2)``: ``x^n y^p`` becomes ``x^(n-(r+2)p) z^p``.

    The input's z-marker must be unused. The output keeps the input's order;
    note that its coefficient of ``x^k z^p`` is only determined by the input
    when ``k + (r+2)*p <= a.order``.
    """
    if r < 0:
        raise ValueError("plateau length must be nonnegative")
    step = r + 2
    out = [{} for _ in range(a.order + 1)]
    for n, c in enumerate(a.coeffs):
        for (p, q), v in c.items():
            if q:
                raise ValueError("subst_diagonal needs a series without z")
            k = n - step * p
            if k < 0:
                raise NegativeExponent(
                    f"x^{n} y^{p} maps to x^{k}: not a plateau-length-{r} series"
                )
            out[k][(0, p)] = out[k].get((0, p), 0) + v
    return XSeries._raw([MarkerPoly._raw(t) for t in out], a.order)
