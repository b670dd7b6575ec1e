"""Minimum-weight nonzero solutions of ``sum d_i j_i = 0 (mod p-1)``.

Two independent solvers live here: an enumeration over the box
``[0, p-1]^N`` (``mu_brute``) and a breadth-first search over the residues
``Z/(p-1)`` with one unit-cost edge ``r -> r + d_i`` per degree
(``mu_bfs``).  Every result is re-checked by :func:`check_solution`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from theta_sums.modarith import check_prime


class TooLarge(ValueError):
    pass


class InvalidSolution(AssertionError):
    pass


class Method(str, Enum):
    BRUTE = "brute"
    BFS = "bfs"


BRUTE_MAX_P = 2000
BRUTE_MAX_N = 2
BFS_MAX_P = 10**6


@dataclass(frozen=True)
class MuProblem:
    p: int
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        check_prime(self.p)
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if not self.degrees:
            raise ValueError("at least one degree is required")
        for d in self.degrees:
            if not 1 <= d <= self.p - 2:
                raise ValueError(f"degree {d} outside [1, {self.p - 2}]")


@dataclass(frozen=True)
class MuResult:
    value: int
    witness: tuple[int, ...]
    method: Method


def check_solution(p: int, degrees: Sequence[int], js: Sequence[int]) -> bool:
    """True iff ``js`` is a nonzero tuple in ``[0, p-1]^N`` solving the congruence."""
    if len(js) != len(degrees):
        return False
    if not any(js) or any(not 0 <= j <= p - 1 for j in js):
        return False
    return sum(d * j for d, j in zip(degrees, js)) % (p - 1) == 0


def _validated(prob: MuProblem, res: MuResult) -> MuResult:
    if not check_solution(prob.p, prob.degrees, res.witness) or sum(res.witness) != res.value:
        raise InvalidSolution(f"{res.method.value} produced invalid witness {res.witness} for {prob}")
    if res.value > prob.p - 1:
        raise InvalidSolution(f"mu={res.value} exceeds p-1 for {prob}")
    return res


def mu_brute(prob: MuProblem) -> MuResult:
    """Exhaustive search, visiting the box in order of increasing ``sum(j)``.

    Within one weight level tuples are visited lexicographically, so the first
    hit is the lexicographically smallest minimizer.
    """
    p, ds = prob.p, prob.degrees
    if len(ds) > BRUTE_MAX_N or p > BRUTE_MAX_P:
        raise TooLarge(f"brute force limited to N <= {BRUTE_MAX_N}, p <= {BRUTE_MAX_P}")
    m = p - 1
    if len(ds) == 1:
        (d,) = ds
        for j in range(1, p):
            if d * j % m == 0:
                return _validated(prob, MuResult(j, (j,), Method.BRUTE))
    else:
        d1, d2 = ds
        for s in range(1, 2 * m + 1):
            for j1 in range(max(0, s - m), min(s, m) + 1):
                j2 = s - j1
                if (d1 * j1 + d2 * j2) % m == 0:
                    return _validated(prob, MuResult(s, (j1, j2), Method.BRUTE))
    raise InvalidSolution(f"no solution found for {prob}")  # unreachable: j1 = m always works


def mu_bfs(prob: MuProblem) -> MuResult:
    """Shortest nonempty closed walk at residue 0 in the step graph on ``Z/(p-1)``.

    The frontier is seeded with the one-step residues so the empty walk never
    counts.  Parents are recorded on first discovery, scanning degrees in index
    order, which makes the witness deterministic.
    """
    p, ds = prob.p, prob.degrees
    if p > BFS_MAX_P:
        raise TooLarge(f"BFS limited to p <= {BFS_MAX_P}")
    m = p - 1
    steps = [d % m for d in ds]
    # parent_step[r] = index of the degree used to first reach r; -1 = unseen
    parent_step = [-1] * m
    queue: deque[int] = deque()
    for k, s in enumerate(steps):
        if parent_step[s] < 0:
            parent_step[s] = k
            queue.append(s)
    closing = -1
    last = -1
    indexed = list(enumerate(steps))
    pop = queue.popleft
    push = queue.append
    while queue:
        r = pop()
        for k, s in indexed:
            t = r + s
            if t >= m:
                t -= m
                if t == 0:
                    closing, last = k, r
                    break
            if parent_step[t] < 0:
                parent_step[t] = k
                push(t)
        if closing >= 0:
            break
    counts = [0] * len(ds)
    if closing < 0:
        raise InvalidSolution(f"residue 0 unreachable for {prob}")  # impossible: d_1*(p-1) = 0
    counts[closing] += 1
    r = last
    while r != 0:
        k = parent_step[r]
        counts[k] += 1
        r = (r - steps[k]) % m
    return _validated(prob, MuResult(sum(counts), tuple(counts), Method.BFS))


def mu(p: int, degrees: Sequence[int], method: Method | str = Method.BFS) -> MuResult:
    prob = MuProblem(p, tuple(degrees))
    return mu_brute(prob) if Method(method) is Method.BRUTE else mu_bfs(prob)
