"""Text syntax for sparse polynomials: ``2*x^3 + 3*x^7``, ``x^2``.

    poly  := term ("+" term)*
    term  := [coeff "*"] "x" "^" exp | coeff

Whitespace is ignored.  Coefficients are reduced mod p and must be nonzero;
exponents must lie in ``[1, p-2]``, so a bare constant term always fails the
range check.
"""

from __future__ import annotations

import re

from theta_sums.expsum import SparsePoly
from theta_sums.modarith import check_prime


class PolySyntaxError(ValueError):
    def __init__(self, msg: str, pos: int) -> None:
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class PolyRangeError(ValueError):
    pass


class DuplicateExponent(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<op>[+*^])|(?P<x>[xX]))")


def _tokens(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_poly(text: str, p: int) -> SparsePoly:
    check_prime(p)
    toks = _tokens(text)
    k = 0

    def expect(kind: str, value: str | None = None) -> tuple[str, str, int]:
        nonlocal k
        tok = toks[k]
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise PolySyntaxError(f"expected {want!r}, got {got!r}", tok[2])
        k += 1
        return tok

    terms: list[tuple[int, int, int]] = []
    while True:
        start = toks[k][2]
        coeff = 1
        if toks[k][0] == "int":
            coeff = int(expect("int")[1])
            if toks[k][1] == "*":
                expect("op", "*")
            else:
                terms.append((coeff, 0, start))
                coeff = None
        if coeff is not None:
            expect("x")
            expect("op", "^")
            terms.append((coeff, int(expect("int")[1]), start))
        if toks[k][0] == "end":
            break
        expect("op", "+")

    seen: set[int] = set()
    out = []
    for coeff, exp, pos in terms:
        a = coeff % p
        if a == 0:
            raise PolyRangeError(f"coefficient {coeff} at position {pos} is 0 mod {p}")
        if not 1 <= exp <= p - 2:
            raise PolyRangeError(f"exponent {exp} at position {pos} outside [1, {p - 2}]")
        if exp in seen:
            raise DuplicateExponent(f"exponent {exp} repeated at position {pos}")
        seen.add(exp)
        out.append((a, exp))
    return SparsePoly(p, tuple(out))


def format_poly(f: SparsePoly) -> str:
    return " + ".join(f"{a}*x^{d}" for a, d in f.terms)
