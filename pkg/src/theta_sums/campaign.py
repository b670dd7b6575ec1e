"""Exhaustive sweeps over ranges of primes, with CSV / JSON-lines reports.

Work is split into one task per prime.  Tasks run either in-process
(``threads=1``) or in a process pool; results are merged in ascending ``p``
so reports do not depend on the degree of parallelism.  Violations are
collected, never raised.
"""

from __future__ import annotations

import csv
import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from enum import Enum
from fractions import Fraction
from functools import partial
from pathlib import Path
from typing import Callable, Iterable, Sequence

from theta_sums.cyclotomic import INFINITE, theta_valuation
from theta_sums.expsum import SparsePoly, exp_sum
from theta_sums.modarith import primes_in_range
from theta_sums.musolver import MuProblem, mu_bfs, mu_brute
from theta_sums.witness import check_witness, paper_witness


class RangeTooLarge(ValueError):
    pass


class Solver(str, Enum):
    BFS = "bfs"
    BRUTE = "brute"
    BOTH = "both"


class CoeffPolicy(str, Enum):
    ALL = "all"
    DIAGONAL = "diag"


SWEEPS = ("conjecture", "theorem1", "witness")
DEFAULT_BUDGET = 5 * 10**9
THEOREM1_ALL_MAX_P = 31

# (p, d1, d2, claimed i, claimed j) as printed in the source examples
PAPER_EXAMPLES = (
    (5, 2, 3, 2, 0),
    (7, 2, 3, 2, 1),
    (11, 3, 7, 1, 1),
    (11, 7, 9, 3, 1),
)


@dataclass
class SweepConfig:
    kind: str
    p_min: int = 5
    p_max: int = 11
    solver: Solver = Solver.BFS
    coeffs: CoeffPolicy = CoeffPolicy.ALL
    threads: int = 1
    budget: int = DEFAULT_BUDGET

    def __post_init__(self) -> None:
        self.solver = Solver(self.solver)
        self.coeffs = CoeffPolicy(self.coeffs)
        if self.kind not in SWEEPS:
            raise ValueError(f"unknown sweep {self.kind!r}; choose from {sorted(SWEEPS)}")
        if not 5 <= self.p_min <= self.p_max:
            raise ValueError(f"need 5 <= pmin <= pmax, got {self.p_min}, {self.p_max}")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


@dataclass(frozen=True, slots=True)
class ConjectureRow:
    p: int
    d1: int
    d2: int
    mu: int
    bound: int
    ok: bool
    j1: int
    j2: int
    method: str


@dataclass(frozen=True, slots=True)
class Theorem1Row:
    p: int
    d1: int
    d2: int
    a: int
    b: int
    nu_theta: int | str
    mu: int
    ok: bool


@dataclass(frozen=True, slots=True)
class WitnessRow:
    p: int
    d1: int
    d2: int
    i: int
    j: int
    branch: str
    doublings: int
    reflected: bool
    fallback: bool
    sum_ok: bool


@dataclass
class SweepSummary:
    kind: str
    p_min: int
    p_max: int
    rows_checked: int = 0
    violations: int = 0
    fallbacks: int = 0
    max_mu_ratio: Fraction = Fraction(0)
    equality_count: int = 0
    branches: dict[str, int] = field(default_factory=dict)
    findings: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def to_json(self, with_elapsed: bool = False) -> dict:
        out = asdict(self)
        out["max_mu_ratio"] = str(self.max_mu_ratio)
        if not with_elapsed:
            del out["elapsed"]
        return out


@dataclass
class _TaskResult:
    p: int
    rows: list
    violations: int = 0
    fallbacks: int = 0
    max_ratio: Fraction = Fraction(0)
    equalities: int = 0
    branches: Counter = field(default_factory=Counter)
    findings: list[str] = field(default_factory=list)


def pairs(p: int) -> Iterable[tuple[int, int]]:
    for d1 in range(1, p - 1):
        for d2 in range(d1 + 1, p - 1):
            yield d1, d2


def pair_count(p: int) -> int:
    n = p - 2
    return n * (n - 1) // 2


# ---------------------------------------------------------------- conjecture


def _conjecture_task(p: int, solver: Solver) -> _TaskResult:
    res = _TaskResult(p, [])
    bound = (p - 1) // 2
    for d1, d2 in pairs(p):
        prob = MuProblem(p, (d1, d2))
        if solver is Solver.BRUTE:
            r = mu_brute(prob)
        else:
            r = mu_bfs(prob)
        bad = False
        if solver is Solver.BOTH:
            rb = mu_brute(prob)
            if rb.value != r.value:
                bad = True
                res.findings.append(f"p={p} d=({d1},{d2}): bfs mu={r.value} brute mu={rb.value}")
        j1, j2 = r.witness
        ok = r.value <= bound
        if not ok:
            res.findings.append(f"p={p} d=({d1},{d2}): mu={r.value} exceeds {bound}")
        if not check_witness(p, d1, d2, j1, j2):
            bad = True
            res.findings.append(f"p={p} d=({d1},{d2}): witness ({j1},{j2}) fails check")
        res.violations += bad or not ok
        res.max_ratio = max(res.max_ratio, Fraction(r.value, bound))
        res.rows.append(ConjectureRow(p, d1, d2, r.value, bound, ok, j1, j2, solver.value))
    res.findings.extend(_example_findings(p, {(row.d1, row.d2): row for row in res.rows}))
    return res


def _example_findings(p: int, by_pair: dict) -> list[str]:
    out = []
    for ep, d1, d2, i, j in PAPER_EXAMPLES:
        if ep != p or (d1, d2) not in by_pair:
            continue
        row = by_pair[(d1, d2)]
        if not check_witness(p, d1, d2, i, j):
            resid = (d1 * i + d2 * j) % (p - 1)
            out.append(
                f"erratum p={p} d=({d1},{d2}): published ({i},{j}) gives {resid} mod {p - 1}, "
                f"not 0; derived witness ({_row_pair(row)}) with sum {_row_sum(row)}"
            )
    return out


def _row_pair(row) -> str:
    if isinstance(row, ConjectureRow):
        return f"{row.j1},{row.j2}"
    return f"{row.i},{row.j}"


def _row_sum(row) -> int:
    return row.mu if isinstance(row, ConjectureRow) else row.i + row.j


# ------------------------------------------------------------------ theorem 1


def _theorem1_task(p: int, coeffs: CoeffPolicy) -> _TaskResult:
    res = _TaskResult(p, [])
    for d1, d2 in pairs(p):
        mu = mu_bfs(MuProblem(p, (d1, d2))).value
        ab = [(1, 1)] if coeffs is CoeffPolicy.DIAGONAL else [(a, b) for a in range(1, p) for b in range(1, p)]
        for a, b in ab:
            nu = theta_valuation(exp_sum(SparsePoly.binomial(p, a, d1, b, d2)))
            ok = nu >= mu
            if not ok:
                res.violations += 1
                res.findings.append(f"p={p} F={a}x^{d1}+{b}x^{d2}: nu_theta={nu} < mu={mu}")
            if nu == mu:
                res.equalities += 1
            res.rows.append(Theorem1Row(p, d1, d2, a, b, "inf" if nu is INFINITE else nu, mu, ok))
        res.max_ratio = max(res.max_ratio, Fraction(mu, (p - 1) // 2))
    return res


# -------------------------------------------------------------------- witness


def _witness_task(p: int) -> _TaskResult:
    res = _TaskResult(p, [])
    half = (p - 1) // 2
    for d1, d2 in pairs(p):
        w = paper_witness(p, d1, d2)
        sum_ok = w.i + w.j <= half
        if not (sum_ok and check_witness(p, d1, d2, w.i, w.j)):
            res.violations += 1
            res.findings.append(f"p={p} d=({d1},{d2}): witness ({w.i},{w.j}) invalid")
        if w.fallback:
            res.fallbacks += 1
            res.findings.append(f"fallback p={p} d=({d1},{d2}): construction failed, used ({w.i},{w.j})")
        res.branches[w.branch.value] += 1
        res.max_ratio = max(res.max_ratio, Fraction(w.i + w.j, half))
        res.rows.append(
            WitnessRow(p, d1, d2, w.i, w.j, w.branch.value, w.doublings, w.reflected, w.fallback, sum_ok)
        )
    res.findings.extend(_example_findings(p, {(row.d1, row.d2): row for row in res.rows}))
    return res


# ------------------------------------------------------------------- driver


def _cost(cfg: SweepConfig, p: int) -> int:
    m = p - 1
    n = pair_count(p)
    if cfg.kind == "conjecture":
        per = {Solver.BFS: m, Solver.BRUTE: m * m, Solver.BOTH: m * m + m}[cfg.solver]
        return n * per
    if cfg.kind == "theorem1":
        per_pair = 1 if cfg.coeffs is CoeffPolicy.DIAGONAL else m * m
        return n * per_pair * p * p
    return n


def estimate_work(cfg: SweepConfig) -> int:
    return sum(_cost(cfg, p) for p in primes_in_range(cfg.p_min, cfg.p_max))


def expected_rows(cfg: SweepConfig) -> int:
    per = 1
    total = 0
    for p in primes_in_range(cfg.p_min, cfg.p_max):
        if cfg.kind == "theorem1" and cfg.coeffs is CoeffPolicy.ALL:
            per = (p - 1) ** 2
        total += pair_count(p) * per
    return total


def _task_fn(cfg: SweepConfig) -> Callable[[int], _TaskResult]:
    if cfg.kind == "conjecture":
        return partial(_conjecture_task, solver=cfg.solver)
    if cfg.kind == "theorem1":
        return partial(_theorem1_task, coeffs=cfg.coeffs)
    return _witness_task


def run_sweep(cfg: SweepConfig) -> tuple[list, SweepSummary]:
    if cfg.kind == "theorem1" and cfg.coeffs is CoeffPolicy.ALL and cfg.p_max > THEOREM1_ALL_MAX_P:
        raise RangeTooLarge(f"theorem1 with all coefficients is limited to p <= {THEOREM1_ALL_MAX_P}")
    work = estimate_work(cfg)
    if work > cfg.budget:
        raise RangeTooLarge(f"estimated work {work:.3g} exceeds budget {cfg.budget:.3g}")
    primes = primes_in_range(cfg.p_min, cfg.p_max)
    fn = _task_fn(cfg)
    start = time.perf_counter()
    if cfg.threads == 1 or len(primes) <= 1:
        results = [fn(p) for p in primes]
    else:
        # largest primes first for load balance; merge order is restored below
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            order = sorted(primes, reverse=True)
            results = list(pool.map(fn, order))
    results.sort(key=lambda r: r.p)

    summary = SweepSummary(cfg.kind, cfg.p_min, cfg.p_max)
    rows: list = []
    branches: Counter = Counter()
    for r in results:
        rows.extend(r.rows)
        summary.violations += r.violations
        summary.fallbacks += r.fallbacks
        summary.equality_count += r.equalities
        summary.max_mu_ratio = max(summary.max_mu_ratio, r.max_ratio)
        summary.findings.extend(r.findings)
        branches.update(r.branches)
    summary.rows_checked = len(rows)
    summary.branches = dict(sorted(branches.items()))
    summary.elapsed = time.perf_counter() - start
    return rows, summary


def sweep_conjecture(p_lo: int, p_hi: int, solver: Solver | str = Solver.BFS, threads: int = 1, **kw):
    return run_sweep(SweepConfig("conjecture", p_lo, p_hi, solver=Solver(solver), threads=threads, **kw))


def sweep_theorem1(p_max: int, coeff_policy: CoeffPolicy | str = CoeffPolicy.ALL, p_min: int = 5, threads: int = 1, **kw):
    return run_sweep(SweepConfig("theorem1", p_min, p_max, coeffs=CoeffPolicy(coeff_policy), threads=threads, **kw))


def sweep_witness(p_lo: int, p_hi: int, threads: int = 1, **kw):
    return run_sweep(SweepConfig("witness", p_lo, p_hi, threads=threads, **kw))



def cross_check(conj_rows: Sequence[ConjectureRow], wit_rows: Sequence[WitnessRow]) -> list[str]:
    """Witness sums must never beat the optimum for the same triple."""
    mu = {(r.p, r.d1, r.d2): r.mu for r in conj_rows}
    out = []
    for w in wit_rows:
        key = (w.p, w.d1, w.d2)
        if key in mu and w.i + w.j < mu[key]:
            out.append(f"p={w.p} d=({w.d1},{w.d2}): witness sum {w.i + w.j} below mu={mu[key]}")
    for r in conj_rows:
        if not check_witness(r.p, r.d1, r.d2, r.j1, r.j2):
            out.append(f"p={r.p} d=({r.d1},{r.d2}): conjecture witness ({r.j1},{r.j2}) invalid")
    return out


# -------------------------------------------------------------------- output


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def write_csv(rows: Sequence, path: str | Path, row_type: type | None = None) -> None:
    row_type = row_type or type(rows[0])
    names = [f.name for f in fields(row_type)]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(names)
        for row in rows:
            w.writerow([_cell(getattr(row, n)) for n in names])


def write_jsonl(rows: Sequence, summary: SweepSummary, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for row in rows:
            fh.write(json.dumps(asdict(row)) + "\n")
        fh.write(json.dumps({"summary": summary.to_json()}) + "\n")


ROW_TYPES = {"conjecture": ConjectureRow, "theorem1": Theorem1Row, "witness": WitnessRow}


def write_report(kind: str, rows: Sequence, summary: SweepSummary, path: str | Path, fmt: str = "csv") -> None:
    if fmt == "csv":
        write_csv(rows, path, ROW_TYPES[kind])
    elif fmt == "jsonl":
        write_jsonl(rows, summary, path)
    else:
        raise ValueError(f"unknown format {fmt!r}")


def read_csv(path: str | Path) -> list[dict[str, str]]:
    with open(path, encoding="utf-8", newline="") as fh:
        return list(csv.DictReader(fh))
