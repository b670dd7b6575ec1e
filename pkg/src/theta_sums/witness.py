"""Constructive small solutions ``(i, j)`` with ``i + j <= (p-1)/2``.

The procedure, for ``1 <= d1 != d2 <= p-2``:

* If ``g = gcd(d1, p-1) >= 2`` take ``((p-1)/g, 0)``; symmetrically for ``d2``.
* Otherwise both degrees are units mod ``p-1`` (hence odd).  Start from
  ``i = 1`` and the unique ``j`` with ``d1 + d2*j = 0``, which lies in
  ``[1, p-3]``.  While ``j >= (p-1)/2`` double both coordinates (``j`` taken
  mod ``p-1``); each doubling strictly lowers the dyadic band of
  ``j/(p-1)``, and ``i = 2^k`` stays ``<= (p-1)/2``.  If then
  ``i + j > (p-1)/2``, replace both by ``(p-1)/2 - i`` and ``(p-1)/2 - j``;
  since ``d1 + d2`` is even this preserves the congruence.

The result is always re-validated, and on failure replaced by the exact
minimum from :func:`theta_sums.musolver.mu_brute` with ``fallback`` set.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from theta_sums.modarith import gcd, is_prime, mod_inverse
from theta_sums.musolver import MuProblem, mu_brute


class InvalidInput(ValueError):
    pass


class Branch(str, Enum):
    GCD_D1 = "gcd_d1"
    GCD_D2 = "gcd_d2"
    DOUBLING = "doubling"


@dataclass(frozen=True)
class WitnessResult:
    i: int
    j: int
    branch: Branch
    doublings: int = 0
    reflected: bool = False
    fallback: bool = False
    # state right before the reflection step; (i, j) for the gcd branches
    pre_i: int = 0
    pre_j: int = 0
    trace: tuple[tuple[str, int, int], ...] = ()

    def describe(self) -> str:
        return (
            f"(i,j)=({self.i},{self.j}) branch={self.branch.value} "
            f"reflected={str(self.reflected).lower()} doublings={self.doublings} "
            f"fallback={str(self.fallback).lower()}"
        )

    def trace_text(self) -> str:
        return " -> ".join(f"{step} ({i},{j})" for step, i, j in self.trace)


def check_witness(p: int, d1: int, d2: int, i: int, j: int) -> bool:
    if (i, j) == (0, 0):
        return False
    if not (0 <= i <= p - 1 and 0 <= j <= p - 1):
        return False
    return (d1 * i + d2 * j) % (p - 1) == 0


def _valid(p: int, d1: int, d2: int, w: WitnessResult) -> bool:
    half = (p - 1) // 2
    if not check_witness(p, d1, d2, w.i, w.j) or w.i + w.j > half:
        return False
    if w.branch is not Branch.DOUBLING:
        return w.doublings == 0 and not w.reflected
    return w.pre_i == 1 << w.doublings and w.pre_i <= half and 0 <= w.pre_j < half


def _construct(p: int, d1: int, d2: int) -> WitnessResult:
    m = p - 1
    half = m // 2
    g1 = gcd(d1, m)
    if g1 >= 2:
        return WitnessResult(m // g1, 0, Branch.GCD_D1, pre_i=m // g1, trace=((f"gcd(d1,p-1)={g1}", m // g1, 0),))
    g2 = gcd(d2, m)
    if g2 >= 2:
        return WitnessResult(0, m // g2, Branch.GCD_D2, pre_j=m // g2, trace=((f"gcd(d2,p-1)={g2}", 0, m // g2),))

    i = 1
    j = (-d1 * mod_inverse(d2, m)) % m
    # j = 0 would force d1 = 0, j = p-2 would force d1 = d2 (mod p-1)
    assert 1 <= j <= p - 3, (p, d1, d2, j)
    trace = [("start", i, j)]
    k = 0
    # j is a unit mod p-1 and half divides p-1, so j == half cannot occur;
    # >= keeps it on the doubling side regardless
    while j >= half:
        i *= 2
        j = 2 * j % m
        k += 1
        trace.append(("double", i, j))
    pre_i, pre_j = i, j
    reflected = False
    if i + j > half:
        i, j = half - i, half - j
        reflected = True
        trace.append(("reflect", i, j))
    return WitnessResult(i, j, Branch.DOUBLING, k, reflected, pre_i=pre_i, pre_j=pre_j, trace=tuple(trace))


def paper_witness(p: int, d1: int, d2: int) -> WitnessResult:
    """Run the construction for ``(p, d1, d2)`` and validate the result."""
    if not isinstance(p, int) or p < 5 or not is_prime(p):
        raise InvalidInput(f"p must be a prime >= 5, got {p!r}")
    if d1 == d2 or not (1 <= d1 <= p - 2 and 1 <= d2 <= p - 2):
        raise InvalidInput(f"need 1 <= d1 != d2 <= p-2, got d1={d1}, d2={d2}, p={p}")
    try:
        w = _construct(p, d1, d2)
        ok = _valid(p, d1, d2, w)
    except AssertionError:
        ok = False
    if ok:
        return w
    best = mu_brute(MuProblem(p, (d1, d2)))
    i, j = best.witness
    return WitnessResult(i, j, Branch.DOUBLING, fallback=True, pre_i=i, pre_j=j, trace=(("brute", i, j),))
