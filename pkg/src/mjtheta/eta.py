"""Eta quotients: q-expansion, Fricke involution, logarithmic derivative.

An :class:`EtaQuotient` is a finite product  prod_i eta(n_i tau)^{d_i}  with
integer exponents d_i.  Expansions keep the fractional q^{n/24} prefactors
exactly (exponent denominator 24).
"""

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .errors import LevelMismatch, NotConstant
from .series import QSeries, series_mul, series_pow, series_rescale

__all__ = [
    "EtaQuotient", "eta_expand", "eta_fricke", "eta_dlog",
    "verify_fricke_constant", "parse_eta", "format_eta",
]


class EtaQuotient:
    """factors: tuple of (n, d) pairs with n >= 1, d != 0, n strictly
    increasing."""

    __slots__ = ("factors",)

    def __init__(self, factors):
        merged = {}
        for n, d in factors:
            assert n >= 1
            merged[n] = merged.get(n, 0) + d
        self.factors = tuple(sorted((n, d) for n, d in merged.items() if d))

    def __repr__(self):
        return f"EtaQuotient({format_eta(self)!r})"

    def __eq__(self, other):
        return isinstance(other, EtaQuotient) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __mul__(self, other):
        return EtaQuotient(self.factors + other.factors)

    def inverse(self):
        return EtaQuotient(tuple((n, -d) for n, d in self.factors))

    @property
    def weight(self):
        """Weight as a modular form: (1/2) sum d_i."""
        return Fraction(sum(d for _, d in self.factors), 2)

    @property
    def level_lcm(self):
        from math import lcm
        return lcm(*(n for n, _ in self.factors)) if self.factors else 1

    def prefactor_exponent(self):
        """Exponent of the leading q-power: sum n_i d_i / 24."""
        return Fraction(sum(n * d for n, d in self.factors), 24)


def parse_eta(text):
    """Parse '1^4 2^4 / 3^4 6^4' (or '1^24/2^24') into an EtaQuotient."""
    num, _, den = text.partition("/")
    factors = []
    for part, sign in ((num, 1), (den, -1)):
        for tok in part.split():
            if "^" in tok:
                n, e = tok.split("^")
            else:
                n, e = tok, "1"
            factors.append((int(n), sign * int(e)))
    return EtaQuotient(factors)


def format_eta(e):
    num = " ".join(f"{n}^{d}" for n, d in e.factors if d > 0)
    den = " ".join(f"{n}^{-d}" for n, d in e.factors if d < 0)
    if not den:
        return num
    return f"{num} / {den}" if num else f"1 / {den}"


@lru_cache(maxsize=None)
def _euler_product(order):
    """prod_{n>=1} (1 - q^n) to the given integer order, by the pentagonal
    number theorem (exact sparse support)."""
    coeffs = {0: Fraction(1)}
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        g2 = j * (3 * j + 1) // 2
        if g1 >= order and g2 >= order:
            break
        s = Fraction(-1 if j % 2 else 1)
        if g1 < order:
            coeffs[g1] = s
        if g2 < order:
            coeffs[g2] = s
        j += 1
    return QSeries(coeffs, order)


def eta_expand(e, order):
    """q-expansion of the quotient, justified for exponents < order.

    Exponents are rationals with denominator dividing 24.
    """
    order = Fraction(order)
    shift = e.prefactor_exponent()
    # the Euler-product part must be known relative to the prefactor
    rel = order - shift
    result = QSeries.monomial(Fraction(1), shift, order)
    for n, d in e.factors:
        # (E(q^n))^d needs E to relative order ceil(rel/n)
        need = int(rel / n) + 1
        if need < 1:
            need = 1
        block = series_pow(series_rescale(_euler_product(need), n), d)
        result = series_mul(result, block)
    # operations above propagate conservative windows; the product of unit
    # series times a monomial is justified exactly to `order`
    return QSeries(result.coeffs, min(result.order, order), result.den)


def eta_fricke(e, m):
    """Image of the quotient under tau -> -1/(m tau).

    Every factor level must divide m.  Returns (EtaQuotient, multiplier)
    where the multiplier is the exact rational constant
    prod (m/n_i)^{d_i/2} (which must be rational, else AssertionError) and
    eta(n tau) |W_m picks up the factor (m/n)^{1/2} * (stuff) * eta((m/n) tau)
    up to the standard automorphy; for weight-0 quotients the product of the
    tau-dependent factors cancels.
    """
    for n, _ in e.factors:
        if m % n != 0:
            raise LevelMismatch(f"eta factor {n} does not divide level {m}")
    image = EtaQuotient(tuple((m // n, d) for n, d in e.factors))
    # accumulate prime exponents of prod (m/n)^{d/2}
    expo = {}
    for n, d in e.factors:
        v = m // n
        for p in _prime_factors(v):
            k = 0
            while v % p == 0:
                v //= p
                k += 1
            expo[p] = expo.get(p, Fraction(0)) + Fraction(d * k, 2)
    mult = Fraction(1)
    for p, a in expo.items():
        assert a.denominator == 1, \
            f"multiplier irrational: {p}^{a} (weight/genus mismatch)"
        mult *= Fraction(p) ** int(a)
    return image, mult


def _prime_factors(v):
    out = []
    p = 2
    while p * p <= v:
        if v % p == 0:
            out.append(p)
            while v % p == 0:
                v //= p
        p += 1
    if v > 1:
        out.append(v)
    return out


def verify_fricke_constant(e, m, order):
    """Check that e * (e|W_m) is constant, returning the constant.

    Expands both the quotient and its Fricke image to the requested order and
    multiplies the series; raises NotConstant with the first offending
    exponent otherwise.  (For weight-0 quotients whose factors pair up as
    d(m/n) = -d(n) the product telescopes to the multiplier; the series check
    keeps us honest about that.)
    """
    image, mult = eta_fricke(e, m)
    prod = series_mul(eta_expand(e, order), eta_expand(image, order))
    for k in sorted(prod.coeffs):
        if k != 0:
            raise NotConstant(Fraction(k, prod.den))
    return Fraction(prod.coeff(0)) * mult


def eta_dlog(e, order):
    """Logarithmic derivative  (1/2 pi i) d/dtau log(e), as a q-series.

    Constant term sum_i d_i n_i / 24; coefficient of q^N (N >= 1) is
    -sum_{n_i | N} d_i n_i sigma_1(N / n_i).
    """
    coeffs = {0: e.prefactor_exponent()}
    for N in range(1, order):
        acc = 0
        for n, d in e.factors:
            if N % n == 0:
                acc += d * n * _sigma1(N // n)
        if acc:
            coeffs[N] = Fraction(-acc)
    return QSeries(coeffs, order)


@lru_cache(maxsize=None)
def _sigma1(n):
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d
            if d * d != n:
                total += n // d
    return total
