import csv
from fractions import Fraction

import pytest

from mjtheta.catalog import (
    AVERAGED_FROM, FIXTURE_DEPTH_N, HData, MULT_RELATIONS,
    catalog_by_symbol, check_positivity_phi, check_positivity_sigma,
    construct_averaged, epsilon_m, get_lambency, ingest_hdata, load_catalog,
    verify_mult_relation,
)
from mjtheta.errors import (
    CongruenceViolation, InsufficientDepth, MissingSource, ParseError,
    UnknownLambency,
)
from mjtheta.jacobi import CoeffTable, NEG_INF, POS_INF, ez_apply, h_stream
from mjtheta.series import series_rescale


L1_PLUS = {
    "2", "3", "4", "5", "6", "6+3", "7", "8", "9", "10", "10+5", "12",
    "12+4", "13", "14+7", "16", "18", "18+9", "22+11", "25", "30+15",
    "30+6,10,15", "46+23",
}


def test_catalog_counts_and_partition():
    cat = load_catalog()
    assert len(cat) == 39
    assert {x.symbol for x in cat if x.in_L1_plus} == L1_PLUS
    assert sum(1 for x in cat if x.fixture is not None) == 16
    # fixtures exactly on the complement
    assert all((x.fixture is None) == x.in_L1_plus for x in cat)


def test_catalog_entry_two():
    lam = get_lambency("2")
    assert lam.m == 2 and lam.group_ns == (1,)
    assert lam.root_system == "A1^24"
    assert lam.eta.factors == ((1, 24), (2, -24))


def test_fixture_verbatim_rows():
    f = get_lambency("6+2").fixture
    want = [-2, -2, 4, -6, 6, -6, 10, -14, 12, -12, 20, -24, 22, -26, 34,
            -40]
    assert [f.get(1 - 24 * n, 1) for n in range(16)] == want
    assert f.get(4 - 24, 2) == 16
    assert f.get(16 - 24 * 4, 4) == 80
    # 36+4 has the lone odd value C(0, 12) = 1
    g = get_lambency("36+4").fixture
    assert g.get(144 - 144, 12) == 1
    # printed zeros are zeros, not gaps
    h = get_lambency("18+2").fixture
    assert h.get(1 - 72, 1) == 0


def test_fixture_blank_cells_read_zero():
    # blank leading cells all have D > 1; optimality pins them to zero
    f = get_lambency("6+2").fixture
    assert f.get(4, 2) == 0
    assert f.get(16, 4) == 0


def test_fixture_group_closure():
    f = get_lambency("6+2").fixture
    # row 5 = -row 1 via a(2) = 7 (5*7 = 35 = 11 = -1 mod 12)
    assert f.get(1, 5) == 2
    assert f.get(1 - 24, 5) == 2
    # row 3 is forced to vanish: 3*7 = 21 = 9 = -3 mod 12
    assert f.ranges[3] == (NEG_INF, POS_INF)
    assert f.get(9 - 36 * 24, 3) == 0
    # 30+3,5,15: row 27 is a signed copy of row 3
    g = get_lambency("30+3,5,15").fixture
    assert g.get(9 - 240, 27) == g.get(9 - 240, 3) == 4


def test_all_fixtures_normalized():
    for lam in load_catalog():
        if lam.fixture is not None:
            assert lam.fixture.get(1, 1) == -2, lam.symbol


def test_fixture_support_condition():
    # C(1, r) != 0 exactly when r = +-a mod 2m for some a in K
    for lam in load_catalog():
        f = lam.fixture
        if f is None:
            continue
        m2 = 2 * lam.m
        K = set(lam.K) | {(-a) % m2 for a in lam.K}
        for r in range(m2):
            if not f.known(1, r):
                continue
            v = f.get(1, r)
            assert (v != 0) == (r in K), (lam.symbol, r, v)
            if v:
                assert v == (-2 if r in lam.K else 2), (lam.symbol, r)


def test_fixture_ez_invariance():
    for lam in load_catalog():
        f = lam.fixture
        if f is None:
            continue
        for a in lam.K:
            g = ez_apply(f, a)
            for (D, r), v in f.entries.items():
                if g.known(D, r):
                    assert g.get(D, r) == v, (lam.symbol, a, D, r)


def test_unknown_lambency():
    with pytest.raises(UnknownLambency):
        get_lambency("11")


def test_uncovered_residues_raise():
    # 20+4 prints no row for r = 2 and the group cannot supply one
    f = get_lambency("20+4").fixture
    assert 2 not in f.ranges
    with pytest.raises(InsufficientDepth):
        f.get(4 - 80, 2)


# -- ingestion ------------------------------------------------------------

def write_csv(tmp_path, rows, header=True):
    p = tmp_path / "h.csv"
    with open(p, "w", newline="") as fh:
        w = csv.writer(fh)
        if header:
            w.writerow(["lambency", "class", "r", "D", "coeff"])
        w.writerows(rows)
    return p


def test_ingest_roundtrip(tmp_path):
    p = write_csv(tmp_path, [("2", "1A", 1, 1, -2), ("2", "1A", 1, -7, 4488),
                             ("2", "1A", 3, -7, -4488)])
    h = ingest_hdata(p)
    t = h.get("2")
    assert t.get(-7, 1) == 4488
    assert t.get(-7, 3) == -4488  # r = 3 = -1 mod 4
    assert h.provenance.endswith("h.csv")


def test_ingest_empty(tmp_path):
    p = write_csv(tmp_path, [])
    assert ingest_hdata(p).tables == {}


def test_ingest_congruence_violation(tmp_path):
    p = write_csv(tmp_path, [("2", "1A", 1, 2, 5)])
    with pytest.raises(CongruenceViolation):
        ingest_hdata(p)


def test_ingest_unknown_symbol(tmp_path):
    p = write_csv(tmp_path, [("11", "1A", 1, 1, -2)])
    with pytest.raises(UnknownLambency):
        ingest_hdata(p)


def test_ingest_duplicate_key(tmp_path):
    p = write_csv(tmp_path, [("2", "1A", 1, 1, -2), ("2", "1A", 1, 1, -2)])
    with pytest.raises(ParseError):
        ingest_hdata(p)


def test_ingest_antisymmetry_conflict(tmp_path):
    p = write_csv(tmp_path, [("2", "1A", 1, -7, 10), ("2", "1A", 3, -7, 10)])
    with pytest.raises(ParseError):
        ingest_hdata(p)


def test_ingest_normalization_check(tmp_path):
    p = write_csv(tmp_path, [("2", "1A", 1, 1, -1)])
    with pytest.raises(ParseError):
        ingest_hdata(p)


def test_ingest_bad_line(tmp_path):
    p = write_csv(tmp_path, [("2", "1A", "x", 1, -2)])
    with pytest.raises(ParseError) as e:
        ingest_hdata(p)
    assert "line 2" in str(e.value)


# -- averaging ------------------------------------------------------------

def fixture_as_source(symbol, source):
    """Pretend a fixture is the ingested table of its source lambency (the
    two share an index, so this exercises the averaging plumbing)."""
    return HData({(source, "1A"): get_lambency(symbol).fixture})


def test_construct_averaged_plumbing():
    # averaging an already K-invariant table reproduces it
    for symbol, (source, _n) in AVERAGED_FROM.items():
        h = fixture_as_source(symbol, source)
        avg = construct_averaged(symbol, h)
        f = get_lambency(symbol).fixture
        for (D, r), v in avg.entries.items():
            assert f.get(D, r) == v, (symbol, D, r)
        assert avg.get(1, 1) == -2


def test_construct_averaged_missing_source():
    with pytest.raises(MissingSource):
        construct_averaged("6+2", HData({}))
    with pytest.raises(UnknownLambency):
        construct_averaged("7", HData({}))


# -- multiplicative relations ---------------------------------------------

def synthesize_rhs(row_id, order):
    """Build the ingested-side records implied by a (single-line, shift-free)
    relation row, from the catalog fixture."""
    lhs_sym, rhs_sym, cls, lines = MULT_RELATIONS[row_id]
    (line,) = lines
    a, _b = line.arg
    lam = get_lambency(lhs_sym)
    mp = get_lambency(rhs_sym).m
    recs = []
    for r in range(mp + 1):
        s = None
        for i in range(line.count):
            f = series_rescale(
                h_stream(lam.fixture, r + line.step * i, Fraction(order, a)),
                a)
            s = f if s is None else s + f
        c = line.rhs_pre(r)
        D = r * r
        while -Fraction(D, 4 * mp) < order:
            v = s.coeff(Fraction(-D, 4 * mp))
            assert v % c == 0
            recs.append((rhs_sym, cls, r, D, int(v // c)))
            D -= 4 * mp
    return recs


def test_mult_relation_roundtrip(tmp_path):
    order = 5
    recs = synthesize_rhs("60+12,15,20:2A", order)
    h = ingest_hdata(write_csv(tmp_path, recs))
    rep = verify_mult_relation("60+12,15,20:2A", h, order=order)
    assert rep["status"] == "verified"
    assert rep["depth"] == order


def test_mult_relation_detects_corruption(tmp_path):
    order = 5
    recs = [list(x) for x in synthesize_rhs("60+12,15,20:2A", order)]
    for rec in recs:
        if rec[2] == 1 and rec[3] < 0 and rec[4] != 0:
            rec[4] += 1
            bad_D = rec[3]
            break
    h = ingest_hdata(write_csv(tmp_path, recs))
    rep = verify_mult_relation("60+12,15,20:2A", h, order=order)
    assert rep["status"] == "mismatch"
    assert rep["exponent"] == Fraction(-bad_D, 120)


def test_mult_relation_missing_source():
    with pytest.raises(MissingSource):
        verify_mult_relation("15+5:5A", HData({}))


def test_mult_relation_registry_shape():
    assert len(MULT_RELATIONS) == 9
    for row_id, (lhs, rhs, cls, lines) in MULT_RELATIONS.items():
        assert get_lambency(lhs).fixture is not None
        assert get_lambency(rhs).in_L1_plus
        assert lines


# -- positivity -----------------------------------------------------------

def test_epsilon():
    m = 6
    assert [epsilon_m(m, r) for r in range(12)] == \
        [0, 1, 1, 1, 1, 1, 0, -1, -1, -1, -1, -1]
    assert epsilon_m(m, -1) == -1


def test_positivity_sigma_partition():
    for lam in load_catalog():
        assert check_positivity_sigma(lam) == lam.in_L1_plus, lam.symbol


def test_positivity_phi_fails_on_all_fixtures():
    for lam in load_catalog():
        if lam.fixture is not None:
            assert not check_positivity_phi(lam), lam.symbol


def test_positivity_phi_vacuous_and_passing():
    m = 2
    zero = CoeffTable(m, -1, {}, {1: (-100, 1)})
    lam = get_lambency("2")
    assert check_positivity_phi(lam, zero)
    pos = CoeffTable(m, -1, {(1, 1): Fraction(-2), (-7, 1): Fraction(4488)},
                     {1: (-7, 1)})
    assert check_positivity_phi(lam, pos)
    neg = CoeffTable(m, -1, {(-7, 1): Fraction(-4488)}, {1: (-7, 1)})
    assert not check_positivity_phi(lam, neg)


def test_positivity_phi_requires_table():
    with pytest.raises(MissingSource):
        check_positivity_phi(get_lambency("2"))
