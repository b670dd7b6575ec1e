"""Per-prime census of exact divisibility, nu_theta(S_p(F)) == mu_p(d1, d2).

For each prime, counts binomials a*x^d1 + b*x^d2 whose valuation meets the
lower bound exactly, exceeds it, or vanishes.  Because the valuation only
depends on a/b up to twisting, fixing a = 1 loses nothing.

python scripts/equality_census.py --pmax 43
"""

import argparse
from collections import Counter

from theta_sums.cyclotomic import INFINITE
from theta_sums.expsum import SparsePoly, sum_valuation
from theta_sums.modarith import primes_in_range
from theta_sums.musolver import MuProblem, mu_bfs


def census(p: int) -> Counter:
    c = Counter()
    for d1 in range(1, p - 1):
        for d2 in range(d1 + 1, p - 1):
            mu = mu_bfs(MuProblem(p, (d1, d2))).value
            for b in range(1, p):
                nu = sum_valuation(SparsePoly.binomial(p, 1, d1, b, d2))
                if nu is INFINITE:
                    c["zero"] += 1
                elif nu == mu:
                    c["exact"] += 1
                elif nu > mu:
                    c["above"] += 1
                else:
                    c["below"] += 1
    return c


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--pmin", type=int, default=5)
    parser.add_argument("--pmax", type=int, default=31)
    args = parser.parse_args()
    print(f"{'p':>4} {'exact':>8} {'above':>8} {'zero':>6} {'below':>6}")
    for p in primes_in_range(args.pmin, args.pmax):
        c = census(p)
        print(f"{p:>4} {c['exact']:>8} {c['above']:>8} {c['zero']:>6} {c['below']:>6}")


if __name__ == "__main__":
    main()
