"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 sweep finished with
violations, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from theta_sums import campaign, selftest
from theta_sums.cyclotomic import INFINITE, p_adic_valuation, theta_valuation
from theta_sums.expsum import exp_sum
from theta_sums.musolver import InvalidSolution, MuProblem, TooLarge, mu_bfs, mu_brute
from theta_sums.polyparse import format_poly, parse_poly
from theta_sums.witness import InvalidInput, paper_witness

EXIT_OK, EXIT_USAGE, EXIT_VIOLATIONS, EXIT_INTERNAL = 0, 1, 2, 3
THREADS_ENV = "THETA_SUMS_THREADS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _degrees(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad degree list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="theta-sums", description="Divisibility of exponential sums over F_p")
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("mu", help="minimum-weight solution of sum d_i j_i = 0 mod p-1")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--degrees", type=_degrees, required=True, help="comma separated, e.g. 2,3")
    p.add_argument("--method", choices=["bfs", "brute", "both"], default="bfs")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("witness", help="explicit (i, j) with i + j <= (p-1)/2")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("expsum", help="exact exponential sum and its valuation")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--poly", required=True, help='e.g. "2*x^3 + 3*x^7"')
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sweep", help="exhaustive verification over a range of primes")
    p.add_argument("kind", choices=list(campaign.SWEEPS))
    p.add_argument("--pmin", type=int, default=5)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--method", choices=["bfs", "brute", "both"], default="bfs")
    p.add_argument("--coeffs", choices=["all", "diag"], default="all")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p.add_argument("--budget", type=int, default=campaign.DEFAULT_BUDGET)
    p.add_argument("--out", required=True)

    p = sub.add_parser("selftest", help="run the embedded fixtures")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--quick", action="store_true", help="skip the sweeps")
    return parser


def resolve_threads(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def _cmd_mu(args) -> int:
    prob = MuProblem(args.p, tuple(args.degrees))
    if args.method == "brute":
        res = mu_brute(prob)
    else:
        res = mu_bfs(prob)
    if args.method == "both":
        other = mu_brute(prob)
        if other.value != res.value:
            raise InvalidSolution(f"bfs mu={res.value} but brute mu={other.value}")
    witness = ",".join(map(str, res.witness))
    if args.json:
        out = {"p": prob.p, "degrees": list(prob.degrees), "mu": res.value,
               "witness": list(res.witness), "method": args.method}
        if len(prob.degrees) == 2:
            bound = (prob.p - 1) // 2
            out.update(d1=prob.degrees[0], d2=prob.degrees[1], bound=bound, ok=res.value <= bound,
                       j1=res.witness[0], j2=res.witness[1])
        print(json.dumps(out))
    else:
        print(f"mu={res.value} witness=({witness})")
    return EXIT_OK


def _cmd_witness(args) -> int:
    w = paper_witness(args.p, args.d1, args.d2)
    if args.json:
        print(json.dumps({
            "p": args.p, "d1": args.d1, "d2": args.d2, "i": w.i, "j": w.j,
            "branch": w.branch.value, "doublings": w.doublings, "reflected": w.reflected,
            "fallback": w.fallback, "sum_ok": w.i + w.j <= (args.p - 1) // 2,
            "trace": [list(t) for t in w.trace],
        }))
    else:
        print(w.describe())
        print(f"trace: {w.trace_text()}")
    return EXIT_OK


def _cmd_expsum(args) -> int:
    f = parse_poly(args.poly, args.p)
    s = exp_sum(f)
    nu = theta_valuation(s)
    nu_p = "inf" if nu is INFINITE else str(p_adic_valuation(s))
    if args.json:
        print(json.dumps({"p": f.p, "poly": format_poly(f), "coeffs": list(s.coeffs),
                          "nu_theta": str(nu) if nu is INFINITE else nu, "nu_p": nu_p}))
    else:
        print(f"F = {format_poly(f)}")
        print(f"S = {list(s.coeffs)}")
        print(f"nu_theta={nu} nu_p={nu_p}")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    cfg = campaign.SweepConfig(
        args.kind, args.pmin, args.pmax, solver=args.method, coeffs=args.coeffs,
        threads=resolve_threads(args.threads), budget=args.budget,
    )
    rows, summary = campaign.run_sweep(cfg)
    campaign.write_report(cfg.kind, rows, summary, args.out, args.format)
    print(json.dumps({"summary": summary.to_json()}, indent=2))
    for line in summary.findings:
        print(f"finding: {line}", file=sys.stderr)
    print(f"elapsed {summary.elapsed:.1f}s with {cfg.threads} worker(s)", file=sys.stderr)
    return EXIT_VIOLATIONS if summary.violations else EXIT_OK


def _cmd_selftest(args) -> int:
    checks = selftest.run(resolve_threads(args.threads), quick=args.quick)
    failed = 0
    for name, ok, detail in checks:
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if not failed else EXIT_INTERNAL


COMMANDS = {"mu": _cmd_mu, "witness": _cmd_witness, "expsum": _cmd_expsum,
            "sweep": _cmd_sweep, "selftest": _cmd_selftest}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.cmd](args)
    except (UsageError, InvalidInput, TooLarge, campaign.RangeTooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidSolution, AssertionError, ArithmeticError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
