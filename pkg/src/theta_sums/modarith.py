"""Integer and modular primitives shared by the rest of the package."""

from __future__ import annotations

import math


class NotInvertible(ArithmeticError):
    pass


def is_prime(n: int) -> bool:
    # trial division is plenty for p up to ~1e6
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Primes ``p`` with ``max(lo, 5) <= p <= hi``, ascending."""
    if lo < 2 or hi < lo:
        raise ValueError(f"need 2 <= lo <= hi, got lo={lo}, hi={hi}")
    return [n for n in range(max(lo, 5), hi + 1) if is_prime(n)]


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0 or (a == 0 and b == 0):
        raise ValueError(f"gcd needs non-negative arguments, not both zero: {a}, {b}")
    return math.gcd(a, b)


def mod_inverse(a: int, m: int) -> int:
    """Return ``u`` in ``[1, m-1]`` with ``a*u = 1 (mod m)``."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    a %= m
    if math.gcd(a, m) != 1:
        raise NotInvertible(f"{a} is not invertible mod {m}")
    # extended Euclid
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % m


def p_adic_int(n: int, p: int) -> int:
    """Ordinary p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def check_prime(p: int) -> int:
    if not isinstance(p, int) or p < 5 or not is_prime(p):
        raise ValueError(f"p must be a prime >= 5, got {p!r}")
    return p
