import json

import pytest
from hypothesis import given, strategies as st

from theta_sums.cli import THREADS_ENV, main, resolve_threads
from theta_sums.expsum import SparsePoly
from theta_sums.polyparse import DuplicateExponent, PolyRangeError, PolySyntaxError, format_poly, parse_poly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_examples():
    assert parse_poly("2*x^3 + 3*x^7", 11).terms == ((2, 3), (3, 7))
    assert parse_poly("3*x^7+2*x^3", 11).terms == ((2, 3), (3, 7))
    assert parse_poly("x^2", 5).terms == ((1, 2),)
    assert parse_poly(" 13 * X ^ 2 ", 11).terms == ((2, 2),)


@pytest.mark.parametrize(
    "text, exc",
    [
        ("2*x^3 + 9*x^3", DuplicateExponent),
        ("11*x^3", PolyRangeError),
        ("x^10", PolyRangeError),
        ("x^0", PolyRangeError),
        ("5", PolyRangeError),
        ("2*x^", PolySyntaxError),
        ("2x^3", PolySyntaxError),
        ("x^2 - x^3", PolySyntaxError),
        ("", PolySyntaxError),
        ("x^2 +", PolySyntaxError),
    ],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_poly(text, 11)


def test_syntax_error_position():
    with pytest.raises(PolySyntaxError) as info:
        parse_poly("x^2 + y^3", 11)
    assert info.value.pos == 6


@st.composite
def polys(draw):
    p = draw(st.sampled_from([5, 7, 11, 13, 101]))
    degs = draw(st.lists(st.integers(1, p - 2), min_size=1, max_size=5, unique=True))
    coeffs = draw(st.lists(st.integers(1, p - 1), min_size=len(degs), max_size=len(degs)))
    return SparsePoly(p, tuple(zip(coeffs, degs)))


@given(polys())
def test_round_trip(f):
    assert parse_poly(format_poly(f), f.p) == f


def test_witness_command(capsys):
    code, out, _ = run(capsys, "witness", "--p", "11", "--d1", "7", "--d2", "9")
    assert code == 0
    assert "(i,j)=(3,1) branch=doubling reflected=true" in out


def test_mu_command(capsys):
    code, out, _ = run(capsys, "mu", "--p", "7", "--degrees", "2,3", "--method", "both")
    assert code == 0 and out.strip() == "mu=2 witness=(0,2)"


def test_expsum_command(capsys):
    code, out, _ = run(capsys, "expsum", "--p", "5", "--poly", "x^2")
    assert code == 0 and "nu_theta=2 nu_p=1/2" in out
    code, out, _ = run(capsys, "expsum", "--p", "7", "--poly", "x^1")
    assert "nu_theta=inf nu_p=inf" in out


def test_json_outputs_match_row_schema(capsys):
    _, out, _ = run(capsys, "mu", "--p", "11", "--degrees", "7,9", "--json")
    got = json.loads(out)
    assert {"p", "d1", "d2", "mu", "bound", "ok", "j1", "j2", "method"} <= set(got)
    assert got["mu"] == 4
    _, out, _ = run(capsys, "witness", "--p", "11", "--d1", "7", "--d2", "9", "--json")
    got = json.loads(out)
    assert {"p", "d1", "d2", "i", "j", "branch", "doublings", "reflected", "fallback", "sum_ok"} <= set(got)
    _, out, _ = run(capsys, "expsum", "--p", "5", "--poly", "x^2", "--json")
    assert json.loads(out)["nu_theta"] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["mu", "--p", "8", "--degrees", "2"],
        ["mu", "--p", "7", "--degrees", "2,x"],
        ["witness", "--p", "7", "--d1", "2", "--d2", "2"],
        ["expsum", "--p", "11", "--poly", "2*x^3 + 9*x^3"],
        ["bogus"],
        [],
        ["sweep", "theorem1", "--pmax", "37", "--out", "/dev/null"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert err and not out


def test_sweep_command(capsys, tmp_path):
    out_path = tmp_path / "c.csv"
    code, out, _ = run(capsys, "sweep", "conjecture", "--pmin", "5", "--pmax", "13", "--threads", "1", "--out", str(out_path))
    assert code == 0
    assert json.loads(out)["summary"]["violations"] == 0
    assert out_path.read_text().startswith("p,d1,d2,mu,bound,ok,j1,j2,method\n")


def test_sweep_threads_identical(capsys, tmp_path):
    files = []
    for t in ("1", "2"):
        path = tmp_path / f"w{t}.jsonl"
        assert run(capsys, "sweep", "witness", "--pmax", "41", "--threads", t, "--format", "jsonl", "--out", str(path))[0] == 0
        files.append(path.read_bytes())
    assert files[0] == files[1]


def test_sweep_violation_exit_code(capsys, tmp_path, monkeypatch):
    from theta_sums import campaign

    real = campaign._witness_task

    def broken(p):
        res = real(p)
        res.violations += 1
        return res

    monkeypatch.setattr(campaign, "_witness_task", broken)
    code, _, _ = run(capsys, "sweep", "witness", "--pmax", "7", "--threads", "1", "--out", str(tmp_path / "x.csv"))
    assert code == 2


def test_threads_resolution(monkeypatch):
    monkeypatch.setenv(THREADS_ENV, "3")
    assert resolve_threads(None) == 3
    assert resolve_threads(2) == 2
    monkeypatch.delenv(THREADS_ENV)
    assert resolve_threads(None) >= 1


def test_selftest_quick(capsys):
    code, out, _ = run(capsys, "selftest", "--quick")
    assert code == 0
    assert "FAIL" not in out
