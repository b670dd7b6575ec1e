"""Slow reference computations that share no code with the package."""

import cmath
import itertools


def sieve(n):
    flags = [True] * (n + 1)
    flags[0] = flags[1] = False
    for i in range(2, int(n**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = [False] * len(flags[i * i :: i])
    return [i for i, f in enumerate(flags) if f]


def full_box_mu(p, degrees):
    """Scan every tuple in [0, p-1]^N; return (min weight, all minimizers)."""
    best, arg = None, []
    for js in itertools.product(range(p), repeat=len(degrees)):
        if not any(js) or sum(d * j for d, j in zip(degrees, js)) % (p - 1):
            continue
        s = sum(js)
        if best is None or s < best:
            best, arg = s, [js]
        elif s == best:
            arg.append(js)
    return best, arg


def numeric_exp_sum(p, terms):
    z = cmath.exp(2j * cmath.pi / p)
    return sum(z ** (sum(a * pow(x, d, p) for a, d in terms) % p) for x in range(p))


def numeric_value(p, coeffs):
    z = cmath.exp(2j * cmath.pi / p)
    return sum(c * z**k for k, c in enumerate(coeffs))
