"""Exact divisibility toolkit for exponential sums over prime fields."""

from theta_sums.cyclotomic import INFINITE, CycInt, ThetaExpansion, Valuation
from theta_sums.expsum import SparsePoly, exp_sum, sum_valuation, twist
from theta_sums.modarith import gcd, is_prime, mod_inverse, primes_in_range
from theta_sums.musolver import MuProblem, MuResult, mu_bfs, mu_brute
from theta_sums.witness import WitnessResult, check_witness, paper_witness

__all__ = [
    "INFINITE",
    "CycInt",
    "MuProblem",
    "MuResult",
    "SparsePoly",
    "ThetaExpansion",
    "Valuation",
    "WitnessResult",
    "check_witness",
    "exp_sum",
    "gcd",
    "is_prime",
    "mod_inverse",
    "mu_bfs",
    "mu_brute",
    "paper_witness",
    "primes_in_range",
    "sum_valuation",
    "twist",
]
