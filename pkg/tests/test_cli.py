import csv
import json
from fractions import Fraction

import pytest

from mjtheta.catalog import MULT_RELATIONS, get_lambency
from mjtheta.cli import main
from mjtheta.jacobi import h_stream
from mjtheta.series import series_rescale


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_expand_eta(capsys):
    rc, out, _ = run(capsys, "expand", "--eta", "1^24/2^24", "--order", "3")
    assert rc == 0
    assert out.splitlines()[:3] == ["-1 1", "0 -24", "1 276"]


def test_expand_eulerian(capsys):
    rc, out, _ = run(capsys, "expand", "--eulerian", "3:psi",
                     "--order", "5")
    assert rc == 0
    assert out.splitlines() == ["1 1", "2 1", "3 1", "4 2"]


def test_expand_empty_eta(capsys):
    rc, out, _ = run(capsys, "expand", "--eta", "", "--order", "3")
    assert rc == 0
    assert out.splitlines() == ["0 1"]


def test_expand_lambency_matches_eta(capsys):
    rc, out, _ = run(capsys, "expand", "--lambency", "2", "--order", "3")
    rc2, out2, _ = run(capsys, "expand", "--eta", "1^24/2^24",
                       "--order", "3")
    assert rc == rc2 == 0 and out == out2


def test_expand_unknown_name(capsys):
    rc, _out, err = run(capsys, "expand", "--eulerian", "9:zeta")
    assert rc == 1 and "UnknownName" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["expand"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["verify", "nonsense"])
    assert e.value.code == 2


def test_verify_fixtures(capsys):
    rc, out, _ = run(capsys, "verify", "fixtures")
    assert rc == 0
    assert sum(1 for l in out.splitlines() if l.startswith("PASS")) == 16


def test_verify_mocktheta_skips_without_data(capsys):
    rc, out, _ = run(capsys, "verify", "mocktheta", "--order", "4")
    assert rc == 0
    lines = out.splitlines()
    assert sum(1 for l in lines if l.startswith("SKIPPED")) == 25
    # 12 internal rows + watson + andrews-hickerson
    assert sum(1 for l in lines if l.startswith("PASS")) == 14


def test_verify_records_deterministic(capsys):
    rc, out1, _ = run(capsys, "verify", "positivity", "--format", "records")
    rc2, out2, _ = run(capsys, "verify", "positivity", "--format",
                       "records")
    assert rc == rc2 == 0 and out1 == out2
    recs = [json.loads(l) for l in out1.splitlines()]
    assert len(recs) == 39
    assert all(r["status"] == "pass" for r in recs)


def test_verify_jobs_parallel(capsys):
    rc, out, _ = run(capsys, "verify", "fixtures", "--jobs", "2",
                     "--format", "records")
    assert rc == 0
    assert len(out.splitlines()) == 16


def synthesize(row_id, order):
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
                h_stream(lam.fixture, r + line.step * i,
                         Fraction(order, a)), a)
            s = f if s is None else s + f
        c = line.rhs_pre(r)
        D = r * r
        while -Fraction(D, 4 * mp) < order:
            v = s.coeff(Fraction(-D, 4 * mp))
            recs.append((rhs_sym, cls, r, D, int(v // c)))
            D -= 4 * mp
    return recs


@pytest.fixture
def data_file(tmp_path):
    p = tmp_path / "h.csv"
    with open(p, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["lambency", "class", "r", "D", "coeff"])
        w.writerows(synthesize("60+12,15,20:2A", 5))
    return str(p)


def test_verify_mult_relations_with_data(capsys, data_file):
    rc, out, _ = run(capsys, "verify", "mult-relations", "--data",
                     data_file, "--order", "5")
    assert rc == 0
    lines = out.splitlines()
    assert sum(1 for l in lines if l.startswith("PASS")) == 1
    assert sum(1 for l in lines if l.startswith("SKIPPED")) == 8


def test_data_env_var(capsys, data_file, monkeypatch):
    monkeypatch.setenv("MJTHETA_DATA", data_file)
    rc, out, _ = run(capsys, "verify", "mult-relations", "--order", "5")
    assert rc == 0
    assert sum(1 for l in out.splitlines() if l.startswith("PASS")) == 1


def test_fit_command(capsys):
    rc, out, _ = run(capsys, "fit", "--lambency", "10+2", "--D", "-4",
                     "--r", "6")
    assert rc == 0
    assert "P: (3 + 4*z4), 1" in out
    assert "residual: 0" in out


def test_fit_excluded(capsys):
    rc, _out, err = run(capsys, "fit", "--lambency", "7", "--D", "-3",
                        "--r", "1")
    assert rc == 1 and "ExcludedDiscriminant" in err


def test_fit_missing_source(capsys):
    rc, _out, err = run(capsys, "fit", "--lambency", "2", "--D", "-7",
                        "--r", "1")
    assert rc == 1 and "MissingSource" in err
