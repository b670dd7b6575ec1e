"""Exponential sums ``S_p(F) = sum_{x in F_p} xi^F(x)`` for sparse ``F``.

The additive character is fixed as ``t -> xi^t``.  Any other nontrivial
character is ``t -> xi^(c t)``, which :func:`twist` realizes by scaling the
coefficients of ``F``; the valuation does not depend on the choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from theta_sums.cyclotomic import CycInt, Valuation, theta_valuation
from theta_sums.modarith import check_prime


@dataclass(frozen=True)
class SparsePoly:
    """``sum a * X^d`` over ``F_p``; terms are ``(a, d)`` sorted by ``d``."""

    p: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        p = check_prime(self.p)
        terms = tuple(sorted(((int(a), int(d)) for a, d in self.terms), key=lambda t: t[1]))
        if not terms:
            raise ValueError("polynomial needs at least one term")
        seen = set()
        for a, d in terms:
            if not 1 <= a <= p - 1:
                raise ValueError(f"coefficient {a} must lie in [1, {p - 1}]")
            if not 1 <= d <= p - 2:
                raise ValueError(f"exponent {d} must lie in [1, {p - 2}]")
            if d in seen:
                raise ValueError(f"duplicate exponent {d}")
            seen.add(d)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def binomial(cls, p: int, a: int, d1: int, b: int, d2: int) -> SparsePoly:
        return cls(p, ((a, d1), (b, d2)))

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.terms)

    def __call__(self, x: int) -> int:
        return sum(a * pow(x, d, self.p) for a, d in self.terms) % self.p

    def __str__(self) -> str:
        return " + ".join(f"{a}*x^{d}" for a, d in self.terms)


@lru_cache(maxsize=4096)
def _power_table(p: int, d: int) -> tuple[int, ...]:
    return tuple(pow(x, d, p) for x in range(p))


def exponent_counts(f: SparsePoly) -> list[int]:
    """``counts[t] = #{x in F_p : F(x) = t}``."""
    p = f.p
    counts = [0] * p
    tables = [(a, _power_table(p, d)) for a, d in f.terms]
    for x in range(p):
        t = 0
        for a, tab in tables:
            t += a * tab[x]
        counts[t % p] += 1
    assert sum(counts) == p
    return counts


def exp_sum(f: SparsePoly) -> CycInt:
    return CycInt.from_exponent_counts(f.p, exponent_counts(f))


def sum_valuation(f: SparsePoly) -> Valuation:
    return theta_valuation(exp_sum(f))


def twist(f: SparsePoly, c: int) -> SparsePoly:
    if not 1 <= c <= f.p - 1:
        raise ValueError(f"twist factor {c} must lie in [1, {f.p - 1}]")
    return SparsePoly(f.p, tuple((c * a % f.p, d) for a, d in f.terms))


def binomials(p: int, d1: int, d2: int) -> Iterable[SparsePoly]:
    """All ``a X^d1 + b X^d2`` with ``a, b`` in ``F_p^*``, ``a`` outer."""
    for a in range(1, p):
        for b in range(1, p):
            yield SparsePoly.binomial(p, a, d1, b, d2)
