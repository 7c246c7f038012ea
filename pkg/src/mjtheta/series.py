"""Truncated q-series with exact coefficients and fractional exponents.

A :class:`QSeries` is a finite q-expansion sum_x c(x) q^x where the exponents
x are rationals with a common denominator ``den`` and the coefficients are
exact (int / Fraction / Cyc).  Every series carries a justified window: all
coefficients at exponents strictly below ``order`` (a Fraction) are known
exactly, absent ones being zero.  Nothing at or above ``order`` may be
trusted.  All operations propagate the window honestly.
"""

from fractions import Fraction
from math import lcm

from .cyclo import cadd, cmul, cneg, cinv, ciszero, ex, cformat
from .errors import NonInvertibleLeadingTerm

__all__ = [
    "QSeries", "series_add", "series_mul", "series_pow", "series_rescale",
    "series_half_shift", "series_slice", "series_shift", "series_eq",
]


class QSeries:
    """coeffs: dict mapping exponent numerator -> nonzero coefficient;
    the exponent of key k is Fraction(k, den).  order: Fraction window bound
    (coefficients at exponents < order are justified)."""

    __slots__ = ("den", "coeffs", "order")

    def __init__(self, coeffs, order, den=1):
        self.den = den
        self.order = Fraction(order)
        cutoff = self.order * den
        self.coeffs = {k: v for k, v in coeffs.items()
                       if not ciszero(v) and k < cutoff}

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(order, den=1):
        return QSeries({}, order, den)

    @staticmethod
    def one(order):
        return QSeries({0: Fraction(1)}, order)

    @staticmethod
    def monomial(coeff, exponent, order):
        e = Fraction(exponent)
        return QSeries({e.numerator: coeff}, order, e.denominator)

    @staticmethod
    def from_terms(terms, order):
        """terms: iterable of (exponent: Fraction-like, coeff)."""
        terms = [(Fraction(x), c) for x, c in terms]
        den = lcm(1, *(x.denominator for x, _ in terms)) if terms else 1
        coeffs = {}
        for x, c in terms:
            k = x.numerator * (den // x.denominator)
            coeffs[k] = cadd(coeffs.get(k, 0), c)
        return QSeries(coeffs, order, den)

    # -- inspection -------------------------------------------------------

    @property
    def lo(self):
        """Smallest exponent in the support, or None if (known) zero."""
        return Fraction(min(self.coeffs), self.den) if self.coeffs else None

    def coeff(self, exponent):
        """Coefficient at a given exponent; raises if outside the window."""
        x = Fraction(exponent)
        if x >= self.order:
            raise IndexError(f"exponent {x} at or above window bound {self.order}")
        if self.den % x.denominator != 0:
            return Fraction(0)  # off the exponent grid, hence zero
        k = x.numerator * (self.den // x.denominator)
        return self.coeffs.get(k, Fraction(0))

    def items(self):
        """Sorted (exponent: Fraction, coeff) pairs."""
        return [(Fraction(k, self.den), v)
                for k, v in sorted(self.coeffs.items())]

    def support_exponents(self):
        return [Fraction(k, self.den) for k in sorted(self.coeffs)]

    def __repr__(self):
        terms = [f"{cformat(v)}*q^({Fraction(k, self.den)})"
                 for k, v in sorted(self.coeffs.items())[:8]]
        more = "" if len(self.coeffs) <= 8 else " + ..."
        body = " + ".join(terms) if terms else "0"
        return f"<{body}{more}  (+O(q^{self.order}))>"

    # -- operator sugar ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSeries):
            other = QSeries.monomial(other, 0, self.order)
        return series_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return QSeries({k: cneg(v) for k, v in self.coeffs.items()},
                       self.order, self.den)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            other = QSeries.monomial(other, 0, self.order)
        return series_add(self, -other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return series_mul(self, other)
        return QSeries({k: cmul(v, other) for k, v in self.coeffs.items()},
                       self.order, self.den)

    __rmul__ = __mul__

    def __pow__(self, e):
        return series_pow(self, e)


def _align(a, b):
    den = lcm(a.den, b.den)
    fa, fb = den // a.den, den // b.den
    ca = a.coeffs if fa == 1 else {k * fa: v for k, v in a.coeffs.items()}
    cb = b.coeffs if fb == 1 else {k * fb: v for k, v in b.coeffs.items()}
    return den, ca, cb


def series_add(a, b):
    den, ca, cb = _align(a, b)
    order = min(a.order, b.order)
    out = dict(ca)
    for k, v in cb.items():
        out[k] = cadd(out.get(k, 0), v)
    return QSeries(out, order, den)


def _lo_eff(s):
    # effective lowest exponent for window propagation: an empty support
    # means "zero as far as we know", justified up to the window bound
    return s.lo if s.coeffs else s.order


def series_mul(a, b):
    den, ca, cb = _align(a, b)
    order = min(a.order + _lo_eff(b), b.order + _lo_eff(a))
    cutoff = order * den
    out = {}
    for ka, va in ca.items():
        for kb, vb in cb.items():
            k = ka + kb
            if k < cutoff:
                out[k] = cadd(out.get(k, 0), cmul(va, vb))
    return QSeries(out, order, den)


def _reciprocal(a):
    """1/a for a series with nonempty support (Laurent inversion)."""
    if not a.coeffs:
        raise NonInvertibleLeadingTerm("series has no known nonzero term")
    den = a.den
    keys = sorted(a.coeffs)
    l = keys[0]
    c0 = a.coeffs[l]
    c0inv = cinv(c0)
    # a = q^(l/den) * c0 * (1 + u); invert the unit part by the standard
    # recurrence, valid over the same relative window
    rel = _floor_frac(a.order * den) - l  # relative window in key units
    u = {k - l: cmul(v, c0inv) for k, v in a.coeffs.items() if k != l}
    binv = {0: Fraction(1)}
    for n in range(1, rel):
        acc = Fraction(0)
        for j, uj in u.items():
            if j <= n and (n - j) in binv:
                acc = cadd(acc, cmul(uj, binv[n - j]))
        if not ciszero(acc):
            binv[n] = cneg(acc)
    out = {k - l: cmul(v, c0inv) for k, v in binv.items()}
    return QSeries(out, Fraction(rel - l, den), den)


def _floor_frac(x):
    return x.numerator // x.denominator


def series_pow(a, e):
    """a**e for integer e (negative allowed when a has an invertible leading
    term)."""
    if e == 0:
        # the window of a**0 is still limited by the relative precision of a
        return QSeries({0: Fraction(1)}, a.order - _lo_eff(a), a.den)
    if e < 0:
        return series_pow(_reciprocal(a), -e)
    result = None
    base = a
    k = e
    while k:
        if k & 1:
            result = base if result is None else series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_rescale(a, t):
    """q -> q^t for a positive rational t (exponents scale by t)."""
    t = Fraction(t)
    assert t > 0
    coeffs = {k * t.numerator: v for k, v in a.coeffs.items()}
    return QSeries(coeffs, a.order * t, a.den * t.denominator)


def series_half_shift(a, s):
    """tau -> tau + s for rational s: coefficient at exponent x picks up
    e^{2 pi i s x}."""
    s = Fraction(s)
    out = {k: cmul(v, ex(s * Fraction(k, a.den)))
           for k, v in a.coeffs.items()}
    return QSeries(out, a.order, a.den)


def series_shift(a, s):
    """Multiply by q^s: exponents shift by the rational s."""
    s = Fraction(s)
    den = lcm(a.den, s.denominator)
    f = den // a.den
    ds = s.numerator * (den // s.denominator)
    coeffs = {k * f + ds: v for k, v in a.coeffs.items()}
    return QSeries(coeffs, a.order + s, den)


def series_slice(a, r, b):
    """Pick exponents x = r (mod b) and shift them to x - r.

    r rational, b positive rational; this is the 'theta decomposition' style
    slice  f|[r; b] = sum_{x = r mod b} c(x) q^(x - r).
    """
    r, b = Fraction(r), Fraction(b)
    assert b > 0
    out = []
    for k, v in a.coeffs.items():
        x = Fraction(k, a.den)
        if (x - r) % b == 0:
            out.append((x - r, v))
    # window: exponents x < order contribute shifted exponents up to order-r
    return QSeries.from_terms(out, a.order - r) if out else \
        QSeries.zero(a.order - r)


def series_eq(a, b, strict=False):
    """Equality of all coefficients on the overlap of the two windows.

    With strict=True, require the windows to coincide as well.
    """
    order = min(a.order, b.order)
    if strict and a.order != b.order:
        return False
    den, ca, cb = _align(a, b)
    cutoff = order * den
    keys = {k for k in ca if k < cutoff} | {k for k in cb if k < cutoff}
    for k in keys:
        d = cadd(ca.get(k, 0), cneg(cb.get(k, 0)))
        if not ciszero(d):
            return False
    return True
