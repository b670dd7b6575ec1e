"""Run the three verification sweeps at their default ranges and write reports.

Example:
python scripts/run_all_sweeps.py --out-dir results --threads 4
"""

import argparse
import json
from pathlib import Path

from theta_sums.campaign import SweepConfig, run_sweep, write_report

RUNS = [
    SweepConfig("conjecture", 5, 409, solver="bfs"),
    SweepConfig("theorem1", 5, 31, coeffs="all"),
    SweepConfig("witness", 5, 499),
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="results")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    summaries = {}
    for cfg in RUNS:
        cfg.threads = args.threads
        rows, summary = run_sweep(cfg)
        path = out_dir / f"{cfg.kind}_{cfg.p_min}_{cfg.p_max}.{args.format}"
        write_report(cfg.kind, rows, summary, path, args.format)
        summaries[cfg.kind] = summary.to_json(with_elapsed=True)
        print(f"{cfg.kind:<11} rows={summary.rows_checked:>8} violations={summary.violations} "
              f"fallbacks={summary.fallbacks} elapsed={summary.elapsed:.1f}s -> {path}")
    (out_dir / "summaries.json").write_text(json.dumps(summaries, indent=2) + "\n")


if __name__ == "__main__":
    main()
