"""Exact arithmetic in ``Z[xi]`` for a primitive p-th root of unity ``xi``.

Elements are stored in the power basis ``1, xi, ..., xi^(p-2)``; ``xi^(p-1)``
is always rewritten as ``-(1 + xi + ... + xi^(p-2))`` so the representation
is canonical and equality is coefficient-wise.

The theta-adic valuation uses ``theta = 1 - xi``.  Writing an element as
``sum b_k theta^k`` with ``0 <= k <= p-2`` and integer ``b_k``, the term
``b_k theta^k`` has valuation ``k + (p-1) v_p(b_k)`` because ``p`` and
``theta^(p-1)`` differ by a unit and integers prime to ``p`` are units.  The
exponents ``k`` are pairwise distinct mod ``p-1``, so these term valuations
are pairwise distinct and the valuation of the sum is their minimum.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from theta_sums.modarith import check_prime, p_adic_int


class ModulusMismatch(ValueError):
    pass


class InexactDivision(ArithmeticError):
    pass


class ZeroElement(ValueError):
    pass


class _Infinite:
    """Valuation of zero.  Compares above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("theta_sums.INFINITE")

    def __lt__(self, other: object) -> bool:
        if isinstance(other, (int, _Infinite)):
            return False
        return NotImplemented

    def __le__(self, other: object) -> bool:
        if isinstance(other, (int, _Infinite)):
            return other is self
        return NotImplemented

    def __gt__(self, other: object) -> bool:
        if isinstance(other, (int, _Infinite)):
            return other is not self
        return NotImplemented

    def __ge__(self, other: object) -> bool:
        if isinstance(other, (int, _Infinite)):
            return True
        return NotImplemented

    def __add__(self, other: object) -> _Infinite:
        if isinstance(other, (int, _Infinite)):
            return self
        return NotImplemented

    __radd__ = __add__


INFINITE = _Infinite()
Valuation = Union[int, _Infinite]


@lru_cache(maxsize=None)
def _pascal(p: int) -> tuple[tuple[int, ...], ...]:
    """Rows ``C(i, 0..i)`` for ``0 <= i <= p-2``."""
    rows = [(1,)]
    for _ in range(p - 2):
        prev = rows[-1]
        rows.append((1,) + tuple(prev[k] + prev[k + 1] for k in range(len(prev) - 1)) + (1,))
    return tuple(rows)


class CycInt:
    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int]) -> None:
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise ValueError(f"expected {p - 1} coefficients for p={p}, got {len(coeffs)}")
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def from_exponent_counts(cls, p: int, counts: Sequence[int]) -> CycInt:
        """Element ``sum counts[t] * xi^t`` for ``t`` in ``[0, p-1]``."""
        if len(counts) != p:
            raise ValueError(f"expected {p} counts, got {len(counts)}")
        top = counts[p - 1]
        return cls(p, (counts[k] - top for k in range(p - 1)))

    @classmethod
    def zero(cls, p: int) -> CycInt:
        return cls(p, (0,) * (p - 1))

    @classmethod
    def constant(cls, p: int, n: int) -> CycInt:
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def theta(cls, p: int) -> CycInt:
        return cls(p, (1, -1) + (0,) * (p - 3))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: CycInt) -> None:
        if self.p != other.p:
            raise ModulusMismatch(f"cannot combine elements for p={self.p} and p={other.p}")

    def _coerce(self, other: object) -> CycInt | None:
        if isinstance(other, CycInt):
            self._check(other)
            return other
        if isinstance(other, int):
            return CycInt.constant(self.p, other)
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycInt):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == CycInt.constant(self.p, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"CycInt(p={self.p}, coeffs={list(self.coeffs)})"

    def __add__(self, other: object) -> CycInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.p, (a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        return CycInt(self.p, (-a for a in self.coeffs))

    def __sub__(self, other: object) -> CycInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> CycInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> CycInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p
        acc = [0] * p
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    k = i + j
                    acc[k - p if k >= p else k] += a * b
        return CycInt.from_exponent_counts(p, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> CycInt:
        if n < 0:
            raise ValueError("negative powers are not elements of Z[xi] in general")
        result = CycInt.constant(self.p, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval_at_one(self) -> int:
        """Image under ``xi -> 1``; well defined modulo ``p`` only."""
        return sum(self.coeffs)


class ThetaExpansion:
    """Coefficients ``b_0..b_(p-2)`` of ``sum b_k theta^k``."""

    __slots__ = ("p", "bcoeffs")

    def __init__(self, p: int, bcoeffs: Iterable[int]) -> None:
        bcoeffs = tuple(int(b) for b in bcoeffs)
        if len(bcoeffs) != p - 1:
            raise ValueError(f"expected {p - 1} theta coefficients, got {len(bcoeffs)}")
        self.p = p
        self.bcoeffs = bcoeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ThetaExpansion):
            return NotImplemented
        return self.p == other.p and self.bcoeffs == other.bcoeffs

    def __hash__(self) -> int:
        return hash((self.p, self.bcoeffs))

    def __repr__(self) -> str:
        return f"ThetaExpansion(p={self.p}, bcoeffs={list(self.bcoeffs)})"


def cyc_from_exponent(p: int, e: int) -> CycInt:
    check_prime(p)
    counts = [0] * p
    counts[e % p] = 1
    return CycInt.from_exponent_counts(p, counts)


def cyc_add(x: CycInt, y: CycInt) -> CycInt:
    x._check(y)
    return x + y


def cyc_neg(x: CycInt) -> CycInt:
    return -x


def cyc_mul(x: CycInt, y: CycInt) -> CycInt:
    x._check(y)
    return x * y


def _theta_coeff(c: Sequence[int], rows: Sequence[Sequence[int]], k: int) -> int:
    s = 0
    for i in range(k, len(c)):
        if c[i]:
            s += c[i] * rows[i][k]
    return -s if k & 1 else s


def theta_expansion(x: CycInt) -> ThetaExpansion:
    rows = _pascal(x.p)
    return ThetaExpansion(x.p, (_theta_coeff(x.coeffs, rows, k) for k in range(x.p - 1)))


def from_theta(t: ThetaExpansion) -> CycInt:
    """Inverse of :func:`theta_expansion`, substituting ``theta = 1 - xi``."""
    # same triangular transform: binomial inversion is an involution up to sign
    rows = _pascal(t.p)
    return CycInt(t.p, (_theta_coeff(t.bcoeffs, rows, i) for i in range(t.p - 1)))


def theta_valuation(x: CycInt) -> Valuation:
    if x.is_zero():
        return INFINITE
    p = x.p
    rows = _pascal(p)
    c = x.coeffs
    best = None
    for k in range(p - 1):
        if best is not None and k >= best:
            # later terms have valuation >= k
            break
        b = _theta_coeff(c, rows, k)
        if b:
            v = k + (p - 1) * p_adic_int(b, p)
            if best is None or v < best:
                best = v
    return best


@lru_cache(maxsize=None)
def _theta_cofactor(p: int) -> CycInt:
    """``prod_{i=2}^{p-1} (1 - xi^i)``; times ``theta`` this is ``p``."""
    one = CycInt.constant(p, 1)
    acc = one
    for i in range(2, p):
        acc = acc * (one - cyc_from_exponent(p, i))
    return acc


def divide_by_theta(x: CycInt) -> CycInt:
    p = x.p
    y = x * _theta_cofactor(p)
    out = []
    for c in y.coeffs:
        q, r = divmod(c, p)
        if r:
            raise InexactDivision(f"{x!r} is not divisible by theta")
        out.append(q)
    return CycInt(p, out)


def theta_valuation_oracle(x: CycInt) -> Valuation:
    """Valuation by repeated exact division by ``theta``."""
    if x.is_zero():
        return INFINITE
    p = x.p
    v = 0
    while x.eval_at_one() % p == 0:
        x = divide_by_theta(x)
        v += 1
    return v


def p_adic_valuation(x: CycInt) -> Fraction:
    if x.is_zero():
        raise ZeroElement("p-adic valuation of zero is infinite")
    return Fraction(theta_valuation(x), x.p - 1)
