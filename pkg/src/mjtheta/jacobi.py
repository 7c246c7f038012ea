"""Coefficient tables of Jacobi forms and the operator algebra on them.

The central object is :class:`CoeffTable`: a sparse store of Fourier
coefficients C(D, r) for a (mock/skew) Jacobi form of index m, indexed by the
discriminant D = r^2 - 4mn and the residue r mod 2m.  Coefficients satisfy
C(D, r) = parity * C(D, -r), so only canonical residues 0 <= r <= m are
stored.  Each residue carries a justified range [lo, hi] of discriminants:
inside the range an absent key means the coefficient is zero; outside it any
read raises InsufficientDepth.

On top of the tables live:

* theta_nullwert    -- theta constants theta^{k}_{m,r}(tau)
* om_group          -- the group O_m = Ex_m of exact divisors / involutions
* ez_apply          -- the involution phi -> phi . a  (C(D,r) -> C(D,ra))
* project_alpha     -- projection onto a character eigenspace
* hecke_Tn, U_d, V_l, sz_lift -- Hecke and Hecke-like operators
* shadow_kernel     -- the theta-kernel combination attached to an eta
                       quotient, generated from its closed coefficient formula
"""

import math
from fractions import Fraction
from math import gcd, isqrt

from .arith import divisors, is_square, kronecker, is_fundamental
from .cyclo import cadd, ciszero, cmul
from .errors import (
    InsufficientDepth, LevelNotCoprime, NotFundamental,
)
from .series import QSeries

__all__ = [
    "CoeffTable", "theta_nullwert", "om_group", "OmGroup", "omega_entry",
    "omega_product_check", "ez_apply", "project_alpha", "hecke_Tn",
    "hecke_Ud", "hecke_Vl", "sz_lift", "shadow_kernel", "shadow_coeff",
    "h_stream",
]


NEG_INF = -math.inf
POS_INF = math.inf


class CoeffTable:
    """Sparse table of coefficients C(D, r) for an index-m Jacobi form.

    parity: s with C(D, -r) = s C(D, r).
    entries: {(D, r): value} with 0 <= r <= m, D = r^2 mod 4m, value != 0.
    ranges: {r: (lo, hi)} justified discriminant window per canonical
        residue; residues missing from `ranges` carry no data at all.
    square_support: if True the form is supported on positive square
        discriminants only, so any non-square D reads as 0 regardless of
        the ranges (used for theta kernels).
    """

    __slots__ = ("m", "parity", "entries", "ranges", "square_support")

    def __init__(self, m, parity, entries, ranges, square_support=False):
        assert parity in (1, -1)
        self.m = m
        self.parity = parity
        self.square_support = square_support
        self.ranges = dict(ranges)
        self.entries = {}
        for (D, r), v in entries.items():
            if ciszero(v):
                continue
            assert 0 <= r <= m, (D, r)
            assert (D - r * r) % (4 * m) == 0, (D, r)
            lo, hi = self.ranges[r]
            assert lo <= D <= hi, (D, r)
            self.entries[(D, r)] = v

    def canonical(self, r):
        """(canonical residue in 0..m, sign)."""
        r %= 2 * self.m
        if r > self.m:
            return 2 * self.m - r, self.parity
        return r, 1

    def get(self, D, r):
        """C(D, r); raises InsufficientDepth outside the justified range."""
        m = self.m
        rc, sign = self.canonical(r)
        if (D - rc * rc) % (4 * m) != 0:
            return Fraction(0)
        if self.parity == -1 and rc in (0, m):
            return Fraction(0)
        if self.square_support and not (D > 0 and is_square(D)):
            return Fraction(0)
        if rc not in self.ranges:
            raise InsufficientDepth(f"no data for residue {r} (index {m})")
        lo, hi = self.ranges[rc]
        if not lo <= D <= hi:
            raise InsufficientDepth(
                f"C({D}, {r}) outside justified range [{lo}, {hi}]")
        v = self.entries.get((D, rc), Fraction(0))
        return v if sign == 1 else cmul(sign, v)

    def known(self, D, r):
        """True if get(D, r) will not raise."""
        try:
            self.get(D, r)
            return True
        except InsufficientDepth:
            return False

    def known_discs(self, r):
        """Sorted list of discriminants with stored (nonzero) entries at the
        canonical residue of r."""
        rc, _ = self.canonical(r)
        return sorted(D for (D, rr) in self.entries if rr == rc)

    def residues_with_data(self):
        return sorted(self.ranges)

    def scale(self, c):
        return CoeffTable(
            self.m, self.parity,
            {k: cmul(c, v) for k, v in self.entries.items()},
            self.ranges, self.square_support)

    def __repr__(self):
        return (f"<CoeffTable m={self.m} parity={self.parity:+d} "
                f"residues={self.residues_with_data()} "
                f"entries={len(self.entries)}>")


def table_lin_comb(weighted_tables):
    """Exact linear combination of tables with equal (m, parity).

    Justified ranges intersect; residues must be known in every summand to
    survive.
    """
    weighted_tables = list(weighted_tables)
    assert weighted_tables
    m = weighted_tables[0][1].m
    parity = weighted_tables[0][1].parity
    sq = all(t.square_support for _, t in weighted_tables)
    ranges = {}
    for r in range(m + 1):
        if all(r in t.ranges for _, t in weighted_tables):
            lo = max(t.ranges[r][0] for _, t in weighted_tables)
            hi = min(t.ranges[r][1] for _, t in weighted_tables)
            if lo <= hi:
                ranges[r] = (lo, hi)
    entries = {}
    for w, t in weighted_tables:
        assert t.m == m and t.parity == parity
        for (D, r), v in t.entries.items():
            if r in ranges and ranges[r][0] <= D <= ranges[r][1]:
                entries[(D, r)] = cadd(entries.get((D, r), 0), cmul(w, v))
    return CoeffTable(m, parity, entries, ranges, sq)


# -- theta constants ------------------------------------------------------

def theta_nullwert(m, r, k, order):
    """The theta constant sum_{l = r mod 2m} l^{k-1} q^{l^2/4m}.

    k = 1 gives the nullwert of theta^0_{m,r}, k = 2 that of theta^1_{m,r}.
    Exponent denominator 4m; window bound `order` (exponents < order known).
    """
    order = Fraction(order)
    bound = order * 4 * m
    coeffs = {}
    l = r % (2 * m)
    while l * l < bound:
        coeffs[l * l] = cadd(coeffs.get(l * l, 0), Fraction(l ** (k - 1)))
        l += 2 * m
    l = r % (2 * m) - 2 * m
    while l * l < bound:
        coeffs[l * l] = cadd(coeffs.get(l * l, 0), Fraction(l ** (k - 1)))
        l -= 2 * m
    return QSeries(coeffs, order, 4 * m)


# -- the group O_m of exact divisors --------------------------------------

class OmGroup:
    """O_m = {a mod 2m, a odd... in fact a invertible with a^2 = 1 mod 4m},
    identified with the group Ex_m of exact divisors of m under
    n * n' = nn'/(n,n')^2 via n -> a(n)."""

    __slots__ = ("m", "elements", "ex_divisors", "a_of")

    def __init__(self, m):
        self.m = m
        self.elements = tuple(
            a for a in range(1, 2 * m, 2) if (a * a - 1) % (4 * m) == 0)
        self.ex_divisors = tuple(
            n for n in divisors(m) if gcd(n, m // n) == 1)
        self.a_of = {n: self._a(n) for n in self.ex_divisors}
        assert sorted(self.a_of.values()) == sorted(self.elements)

    def _a(self, n):
        """CRT: a = -1 mod 2n, a = 1 mod 2m/n."""
        m = self.m
        mod1, mod2 = 2 * n, 2 * m // n
        for a in range(1, 2 * m + 1, 2):
            if (a + 1) % mod1 == 0 and (a - 1) % mod2 == 0:
                return a % (2 * m)
        raise AssertionError(f"no a({n}) for m={m}")

    def star(self, n, np):
        g = gcd(n, np)
        return n * np // (g * g)

    def characters(self):
        """All homomorphisms O_m -> {+-1}, as dicts a -> value."""
        gens = [n for n in self.ex_divisors
                if n > 1 and _is_prime_power(n)]
        chars = []
        for mask in range(1 << len(gens)):
            vals = {}
            for n in self.ex_divisors:
                v = 1
                for i, g in enumerate(gens):
                    if n % g == 0 and (mask >> i) & 1:
                        v = -v
                vals[self.a_of[n]] = v
            chars.append(vals)
        return chars


def _is_prime_power(n):
    from .arith import prime_factorization
    return len(prime_factorization(n)) == 1


def om_group(m):
    return OmGroup(m)


# -- Omega matrices -------------------------------------------------------

def omega_entry(m, n, r, rp):
    """Entry Omega_m(n)_{r, r'} in {0, 1}."""
    return int((r + rp) % (2 * n) == 0 and (r - rp) % (2 * m // n) == 0)


def omega_product_check(m, n, np):
    """Verify Omega_m(n) Omega_m(n') = Omega_m(n * n') entrywise (n exact)."""
    size = 2 * m
    tgt = OmGroup(m).star(n, np) if gcd(n, m // n) == 1 else None
    assert tgt is not None
    for r in range(size):
        for rp in range(size):
            acc = sum(omega_entry(m, n, r, s) * omega_entry(m, np, s, rp)
                      for s in range(size))
            if acc != omega_entry(m, tgt, r, rp):
                return False
    return True


# -- Eichler--Zagier action ----------------------------------------------

def ez_apply(t, a):
    """phi . a: C'(D, r) = C(D, r a), for a in O_m."""
    m = t.m
    assert (a * a - 1) % (4 * m) == 0, f"{a} not in O_{m}"
    by_res = {}
    for (D, r), v in t.entries.items():
        by_res.setdefault(r, []).append((D, v))
    ranges, entries = {}, {}
    for r in range(m + 1):
        sc, sign = t.canonical(r * a)
        if t.parity == -1 and sc in (0, m):
            ranges[r] = (NEG_INF, POS_INF)
            continue
        if sc not in t.ranges:
            continue
        ranges[r] = t.ranges[sc]
        for D, v in by_res.get(sc, []):
            entries[(D, r)] = v if sign == 1 else cmul(sign, v)
    return CoeffTable(m, t.parity, entries, ranges, t.square_support)


def project_alpha(t, alpha):
    """Projection of phi onto the alpha-eigenspace of the O_m action:
    (1/|O_m|) sum_a alpha(a) (phi . a).  alpha: dict a -> +-1."""
    n = len(alpha)
    w = Fraction(1, n)
    return table_lin_comb(
        [(w * alpha[a], ez_apply(t, a)) for a in alpha])


# -- Hecke operators ------------------------------------------------------

def _epsilon_D(D, d):
    """epsilon_D(d) = g (D/g^2 over d/g^2) if (d, D) = g^2 with D/g^2 a
    square mod 4, else 0."""
    g2 = gcd(d, D) if D else d
    if not is_square(g2):
        return 0
    g = isqrt(g2)
    Dg = D // g2
    if Dg % 4 not in (0, 1):
        return 0
    return g * kronecker(Dg, d // g2) if Dg != 0 else 0


def _src_bounds(t):
    """Global justified window across the residues that carry data."""
    los = [t.ranges[r][0] for r in t.ranges]
    his = [t.ranges[r][1] for r in t.ranges]
    if not los:
        return None
    return max(los), min(his)


def hecke_Tn(t, n, k):
    """phi | T_n at weight k, for gcd(n, m) = 1.

    The target window per residue is derived from the source window: for a
    target discriminant D every source read n^2 D / d^2 lies between D and
    n^2 D in magnitude, so [ceil(lo/n^2), floor(hi/n^2)] is justified.
    Entries are evaluated at the candidate discriminants reachable from the
    stored source entries; everything else in the window is provably zero.
    """
    m = t.m
    if gcd(n, m) != 1:
        raise LevelNotCoprime(f"T_{n} needs gcd(n, {m}) = 1")
    if any(r not in t.ranges for r in range(m + 1)):
        raise InsufficientDepth(
            "T_n needs data (or structural zeros) at every residue")
    b = _src_bounds(t)
    if b is None:
        return CoeffTable(m, t.parity, {}, {}, False)
    src_lo, src_hi = b
    lo = NEG_INF if src_lo == NEG_INF else _ceil_div(src_lo, n * n)
    hi = POS_INF if src_hi == POS_INF else src_hi // (n * n)
    cand = set()
    for (Ds, _rs) in t.entries:
        for d in divisors(n * n):
            if (Ds * d * d) % (n * n) != 0:
                continue
            D = Ds * d * d // (n * n)
            if not (lo <= D <= hi):
                continue
            for r in range(m + 1):
                if (D - r * r) % (4 * m) == 0:
                    cand.add((D, r))
    ranges = {r: (lo, hi) for r in range(m + 1)}
    entries = {}
    for D, r in cand:
        try:
            v = _hecke_value(t, n, k, D, r)
        except InsufficientDepth:
            ranges.pop(r, None)
            continue
        if not ciszero(v):
            entries[(D, r)] = v
    entries = {k_: v for k_, v in entries.items() if k_[1] in ranges}
    return CoeffTable(m, t.parity, entries, ranges, False)


def _ceil_div(a, b):
    return -((-a) // b)


def _hecke_value(t, n, k, D, r):
    m = t.m
    total = Fraction(0)
    for d in divisors(n * n):
        if (n * n * D) % (d * d) != 0:
            continue
        rp = _hecke_rprime(m, n, d, r, n * n * D // (d * d))
        if rp is None:
            continue
        eps = _epsilon_D(D, d) if D != 0 else _epsilon_zero(d)
        if eps == 0:
            continue
        total = cadd(total, cmul(d ** (k - 2) * eps,
                                 t.get(n * n * D // (d * d), rp)))
    return total


def _hecke_rprime(m, n, d, r, Dsrc):
    """The r' mod 2m with n r = d r' mod 2m(n,d), (nr)^2 = (dr')^2 mod 4m
    and Dsrc = r'^2 mod 4m (the source congruence), or None.

    The first two congruences can admit a spurious extra solution whose
    source coefficient is structurally zero; the third pins the one that
    matters.  It is unique up to nothing: we assert at most one survivor.
    """
    g = gcd(n, d)
    mod = 2 * m * g
    found = None
    for rp in range(2 * m):
        if (n * r - d * rp) % mod == 0 and \
                ((n * r) ** 2 - (d * rp) ** 2) % (4 * m) == 0 and \
                (Dsrc - rp * rp) % (4 * m) == 0:
            assert found is None or found == rp, (m, n, d, r, found, rp)
            found = rp
    return found


def _epsilon_zero(d):
    # (d, 0) = d; epsilon_0(d) = g * (0/(d/g^2)) with g^2 = d; the symbol
    # (0/x) is 1 for x = 1 and 0 otherwise, so only perfect-square d with
    # d/g^2 = ... contribute; spelled out: g if d = g^2, since (0/1) = 1
    return isqrt(d) if is_square(d) else 0


def hecke_Ud(t, d):
    """phi | U_d: index m -> m d^2 (the substitution z -> d z).

    In (n, r) indexing the coefficient rule is c'(n, r) = c(n, r/d) for
    d | r; in discriminant terms that reads C'(D, r) = C(D/d^2, r/d), the
    congruence D = r^2 mod 4md^2 forcing d^2 | D.
    """
    m = t.m
    m2 = m * d * d
    ranges, entries = {}, {}
    by_res = {}
    for (D, r), v in t.entries.items():
        by_res.setdefault(r, []).append((D, v))
    for r in range(m2 + 1):
        if r % d != 0:
            ranges[r] = (NEG_INF, POS_INF)
            continue
        sc, sign = t.canonical(r // d)
        if t.parity == -1 and sc in (0, m):
            ranges[r] = (NEG_INF, POS_INF)
            continue
        if sc not in t.ranges:
            continue
        lo, hi = t.ranges[sc]
        ranges[r] = (lo if lo == NEG_INF else lo * d * d,
                     hi if hi == POS_INF else hi * d * d)
        for D, v in by_res.get(sc, []):
            D2 = D * d * d
            if (D2 - r * r) % (4 * m2) == 0:
                entries[(D2, r)] = v if sign == 1 else cmul(sign, v)
    return CoeffTable(m2, t.parity, entries, ranges, t.square_support)


def _Vl_value(t, l, k, m2, D, r):
    """sum over d | ((r^2 - D)/4ml, r, l) of d^{k-1} C(D/d^2, r/d)."""
    n4 = (r * r - D) // (4 * m2)
    acc = Fraction(0)
    for d in divisors(l):
        if n4 % d or r % d or D % (d * d):
            continue
        acc = cadd(acc, cmul(d ** (k - 1), t.get(D // (d * d), r // d)))
    return acc


def hecke_Vl(t, l, k):
    """phi | V_l: index m -> m l.

    Source reads are D/d^2 at residue r/d for d | l, all inside the source
    window whenever D is, so the window carries over unchanged.
    """
    m = t.m
    m2 = m * l
    if any(r not in t.ranges for r in range(m + 1)):
        raise InsufficientDepth(
            "V_l needs data (or structural zeros) at every residue")
    b = _src_bounds(t)
    if b is None:
        return CoeffTable(m2, t.parity, {}, {})
    lo, hi = b
    cand = set()
    for (Ds, _rs) in t.entries:
        for d in divisors(l):
            D = Ds * d * d
            if not (lo <= D <= hi):
                continue
            for r in range(m2 + 1):
                if (D - r * r) % (4 * m2) == 0:
                    cand.add((D, r))
    ranges = {r: (lo, hi) for r in range(m2 + 1)}
    entries = {}
    for D, r in cand:
        try:
            v = _Vl_value(t, l, k, m2, D, r)
        except InsufficientDepth:
            ranges.pop(r, None)
            continue
        if not ciszero(v):
            entries[(D, r)] = v
    entries = {k_: v for k_, v in entries.items() if k_[1] in ranges}
    return CoeffTable(m2, t.parity, entries, ranges, False)


def sz_lift(t, D, r, k, order):
    """The lift S_{D,r}: n-th coefficient sum_{d|n} d^{k-2} (D/d)
    C(n^2 D / d^2, n r / d), for D fundamental.

    The n = 0 coefficient is emitted as 0 (the lift's constant term is a
    multiple of an inner product not visible from the table; comparisons
    should use n >= 1).
    """
    if not is_fundamental(D):
        raise NotFundamental(D)
    coeffs = {}
    for n in range(1, order):
        acc = Fraction(0)
        for d in divisors(n):
            s = kronecker(D, d)
            if s == 0:
                continue
            acc = cadd(acc, cmul(d ** (k - 2) * s,
                                 t.get(n * n * D // (d * d), n * r // d)))
        if not ciszero(acc):
            coeffs[n] = acc
    return QSeries(coeffs, order)


# -- theta kernels from eta quotients -------------------------------------

def shadow_coeff(eta_quotient, m, D, r):
    """Closed-form coefficient of the theta kernel attached to the quotient:
    for D = j^2 a positive square, j (Omega_{j,r} - Omega_{-j,r}) where
    Omega = sum_i d_i Omega_m(n_i); zero for non-square D."""
    if D <= 0 or not is_square(D):
        return Fraction(0)
    if (D - r * r) % (4 * m) != 0:
        return Fraction(0)
    j = isqrt(D)
    acc = 0
    for n, d in eta_quotient.factors:
        acc += d * (omega_entry(m, n, j % (2 * m), r % (2 * m))
                    - omega_entry(m, n, (-j) % (2 * m), r % (2 * m)))
    return Fraction(j * acc)


class ShadowKernel(CoeffTable):
    """The theta-type kernel attached to a principal modulus' eta quotient.

    A CoeffTable (parity -1, square support) that also remembers the eta
    quotient and the combined Omega matrix, so it can be regenerated to any
    depth with :meth:`to_depth`.
    """

    __slots__ = ("eta_quotient",)

    def omega_combo(self, r, rp):
        """Entry (r, r') of Omega = sum_i d_i Omega_m(n_i)."""
        return sum(d * omega_entry(self.m, n, r, rp)
                   for n, d in self.eta_quotient.factors)

    def to_depth(self, depth):
        return shadow_kernel(self.eta_quotient, self.m, depth)


def shadow_kernel(eta_quotient, m, depth):
    """The kernel table, justified for all discriminants D <= depth.

    Coefficients come from the closed formula in shadow_coeff; parity -1 and
    square support are structural.
    """
    from .errors import LevelMismatch
    for n, _ in eta_quotient.factors:
        if m % n != 0:
            raise LevelMismatch(f"eta factor {n} does not divide index {m}")
    entries = {}
    ranges = {r: (NEG_INF, depth) for r in range(m + 1)}
    j = 1
    while j * j <= depth:
        for r in range(m + 1):
            if (j * j - r * r) % (4 * m) == 0:
                v = shadow_coeff(eta_quotient, m, j * j, r)
                if v:
                    entries[(j * j, r)] = v
        j += 1
    t = ShadowKernel(m, -1, entries, ranges, square_support=True)
    t.eta_quotient = eta_quotient
    return t


# -- H-streams ------------------------------------------------------------

def _floor_strict(x):
    """Largest integer strictly below x."""
    x = Fraction(x)
    f = x.numerator // x.denominator
    return f - 1 if f == x else f


def h_stream(t, r, order):
    """The r-th theta-decomposition component as a q-series:
    sum_D C(D, r) q^{-D/4m}, over all justified D with -D/4m < order.

    Requires the table to be justified down to D > -4m*order; raises
    InsufficientDepth otherwise.
    """
    m = t.m
    order = Fraction(order)
    rc, _ = t.canonical(r)
    if t.parity == -1 and rc in (0, m):
        return QSeries.zero(order, 4 * m)
    if rc not in t.ranges:
        raise InsufficientDepth(f"no data for residue {r}")
    lo, hi = t.ranges[rc]
    need_lo = -order * 4 * m
    # deepest discriminant of the class D = rc^2 mod 4m with -D/4m < order
    k = (rc * rc - need_lo) / (4 * m)
    k = _floor_strict(k)
    need = rc * rc - 4 * m * k
    if lo != NEG_INF and lo > need:
        raise InsufficientDepth(
            f"residue {r}: justified down to D={lo}, need D>={need}")
    if hi == POS_INF:
        # supported-below tables (e.g. optimal forms): nothing above the
        # largest stored entry, start there
        top = max((D for (D, rr) in t.entries if rr == rc),
                  default=rc * rc)
        top = max(top, rc * rc)
    else:
        top = rc * rc + 4 * m * ((hi - rc * rc) // (4 * m))
    coeffs = {}
    D = top
    while -Fraction(D, 4 * m) < order and (lo == NEG_INF or D >= lo):
        v = t.get(D, r)
        if not ciszero(v):
            coeffs[-D] = v
        D -= 4 * m
    return QSeries(coeffs, order, 4 * m)
