"""Embedded fixtures run by ``theta-sums selftest``."""

from __future__ import annotations

import random
from typing import Callable, Iterator

from theta_sums.campaign import PAPER_EXAMPLES, sweep_conjecture, sweep_theorem1, sweep_witness
from theta_sums.cyclotomic import (
    INFINITE,
    CycInt,
    theta_valuation,
    theta_valuation_oracle,
)
from theta_sums.expsum import SparsePoly, exp_sum, sum_valuation, twist
from theta_sums.musolver import MuProblem, mu_bfs, mu_brute
from theta_sums.witness import check_witness, paper_witness

Check = tuple[str, bool, str]


def _paper_examples() -> Iterator[Check]:
    expected = {(5, 2, 3): (2, 0), (11, 3, 7): (1, 1), (11, 7, 9): (3, 1)}
    for p, d1, d2, i, j in PAPER_EXAMPLES:
        if (p, d1, d2) in expected:
            w = paper_witness(p, d1, d2)
            ok = (w.i, w.j) == expected[(p, d1, d2)] == (i, j) and w.i + w.j <= (p - 1) // 2
            yield f"example p={p} d=({d1},{d2})", ok, w.describe()
    claimed_ok = check_witness(7, 2, 3, 2, 1)
    yield "erratum p=7 (2,1) rejected", not claimed_ok, f"2*2+3*1 = {7 % 6} mod 6"
    w = paper_witness(7, 2, 3)
    m = mu_brute(MuProblem(7, (2, 3)))
    ok = check_witness(7, 2, 3, w.i, w.j) and w.i + w.j <= 3 and m.value <= 3
    yield "erratum p=7 replacement", ok, f"procedure {(w.i, w.j)}, optimum {m.witness}"


def _valuations() -> Iterator[Check]:
    for p in (5, 7, 11, 13, 17):
        v = theta_valuation(CycInt.constant(p, p))
        yield f"nu_theta({p}) = {p - 1}", v == p - 1, f"got {v}"
    yield "nu_theta(theta) = 1", theta_valuation(CycInt.theta(7)) == 1, ""
    yield "nu_theta(0) = inf", theta_valuation(CycInt.zero(7)) is INFINITE, ""
    rng = random.Random(20261018)
    bad = 0
    for p in (5, 7, 11):
        for _ in range(100):
            x = CycInt(p, (rng.randint(-50, 50) for _ in range(p - 1)))
            if not x.is_zero() and theta_valuation(x) != theta_valuation_oracle(x):
                bad += 1
    yield "closed form vs division oracle", bad == 0, f"{bad} mismatches"


def _gauss_sums() -> Iterator[Check]:
    for p in (5, 13, 17, 29):
        g = exp_sum(SparsePoly(p, ((1, 2),)))
        sq = g * g
        sign_ok = sq in (CycInt.constant(p, p), CycInt.constant(p, -p))
        v = theta_valuation(g)
        mu = mu_bfs(MuProblem(p, (2,))).value
        yield f"gauss sum p={p}", sign_ok and v == (p - 1) // 2 == mu, f"nu={v} mu={mu}"


def _twists() -> Iterator[Check]:
    p = 7
    bad = 0
    for d1 in range(1, p - 1):
        for d2 in range(d1 + 1, p - 1):
            f = SparsePoly.binomial(p, 1, d1, 1, d2)
            base = sum_valuation(f)
            bad += sum(sum_valuation(twist(f, c)) != base for c in range(2, p))
    yield "character invariance p=7", bad == 0, f"{bad} mismatches"


def _sweeps(threads: int) -> Iterator[Check]:
    _, s = sweep_conjecture(5, 31, "both", threads=threads)
    yield "conjecture sweep 5..31 (bfs+brute)", s.violations == 0, f"{s.rows_checked} rows"
    _, s = sweep_theorem1(13, "all", threads=threads)
    yield "theorem 1 sweep p<=13", s.violations == 0, f"{s.rows_checked} rows, {s.equality_count} equalities"
    _, s = sweep_witness(5, 499, threads=threads)
    note = f"{s.rows_checked} rows, fallbacks={s.fallbacks}"
    if s.fallbacks:
        note += " (finding: construction needed the brute-force fallback)"
    yield "witness sweep 5..499", s.violations == 0, note


SECTIONS: list[Callable[..., Iterator[Check]]] = [_paper_examples, _valuations, _gauss_sums, _twists]


def run(threads: int = 1, quick: bool = False) -> list[Check]:
    out: list[Check] = []
    for section in SECTIONS:
        out.extend(section())
    if not quick:
        out.extend(_sweeps(threads))
    return out
