import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import numeric_value
from theta_sums.cyclotomic import (
    INFINITE,
    CycInt,
    ModulusMismatch,
    ThetaExpansion,
    ZeroElement,
    cyc_add,
    cyc_from_exponent,
    cyc_mul,
    cyc_neg,
    from_theta,
    p_adic_valuation,
    theta_expansion,
    theta_valuation,
    theta_valuation_oracle,
)

PRIMES = [5, 7, 11]


@st.composite
def elements(draw, p=None, bound=30):
    p = p or draw(st.sampled_from(PRIMES))
    return CycInt(p, draw(st.lists(st.integers(-bound, bound), min_size=p - 1, max_size=p - 1)))


@st.composite
def same_p(draw, n):
    p = draw(st.sampled_from(PRIMES))
    return [draw(elements(p)) for _ in range(n)]


def test_from_exponent():
    assert cyc_from_exponent(5, 0).coeffs == (1, 0, 0, 0)
    assert cyc_from_exponent(5, 5).coeffs == (1, 0, 0, 0)
    assert cyc_from_exponent(5, 4).coeffs == (-1, -1, -1, -1)
    assert cyc_from_exponent(7, -1) == cyc_from_exponent(7, 6)


def test_small_products():
    p = 5
    xi = lambda e: cyc_from_exponent(p, e)  # noqa: E731
    assert cyc_mul(xi(2), xi(3)).coeffs == (1, 0, 0, 0)
    theta = CycInt.theta(p)
    s = CycInt(p, (1, 1, 1, 1))
    assert cyc_mul(theta, s).coeffs == (2, 1, 1, 1)
    assert cyc_mul(theta, s) == 1 - xi(4)


def test_mismatched_moduli():
    with pytest.raises(ModulusMismatch):
        cyc_add(CycInt.constant(5, 1), CycInt.constant(7, 1))


@given(elements())
def test_negation(x):
    assert cyc_add(x, cyc_neg(x)).is_zero()


@settings(max_examples=1000)
@given(same_p(3))
def test_ring_laws(xyz):
    x, y, z = xyz
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x + y == y + x
    assert x * (y + z) == x * y + x * z


@given(same_p(2))
def test_product_matches_complex_evaluation(xy):
    x, y = xy
    lhs = numeric_value(x.p, (x * y).coeffs)
    rhs = numeric_value(x.p, x.coeffs) * numeric_value(y.p, y.coeffs)
    assert abs(lhs - rhs) < 1e-6 * (1 + abs(rhs))


def test_theta_expansion_examples():
    p = 7
    assert theta_expansion(CycInt.constant(p, 1)).bcoeffs == (1, 0, 0, 0, 0, 0)
    assert theta_expansion(CycInt.theta(p)).bcoeffs == (0, 1, 0, 0, 0, 0)
    assert theta_expansion(cyc_from_exponent(p, 1)).bcoeffs == (1, -1, 0, 0, 0, 0)


@given(elements())
def test_theta_expansion_roundtrip(x):
    assert from_theta(theta_expansion(x)) == x


@given(elements())
def test_theta_expansion_is_the_same_element(x):
    # sum b_k (1 - xi)^k computed with ring arithmetic
    t = theta_expansion(x)
    theta = CycInt.theta(x.p)
    acc = CycInt.zero(x.p)
    for k, b in enumerate(t.bcoeffs):
        acc = acc + b * theta**k
    assert acc == x


def test_theta_expansion_length_checked():
    with pytest.raises(ValueError):
        ThetaExpansion(5, (1, 2))


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17])
def test_valuation_of_p(p):
    assert theta_valuation(CycInt.constant(p, p)) == p - 1
    assert p_adic_valuation(CycInt.constant(p, p)) == 1


def test_valuation_basics():
    assert theta_valuation(CycInt.theta(5)) == 1
    assert theta_valuation(CycInt.zero(5)) is INFINITE
    assert p_adic_valuation(CycInt.theta(5)) == Fraction(1, 4)
    assert theta_valuation_oracle(CycInt.theta(7)) == 1
    assert theta_valuation_oracle(CycInt.theta(7) ** 2) == 2
    with pytest.raises(ZeroElement):
        p_adic_valuation(CycInt.zero(5))


def test_gauss_sum_p5():
    g = CycInt(5, (-1, 0, -2, -2))
    assert g == 1 + 2 * cyc_from_exponent(5, 1) + 2 * cyc_from_exponent(5, 4)
    assert g * g == CycInt.constant(5, 5)
    assert theta_valuation(g) == 2
    assert p_adic_valuation(g) == Fraction(1, 2)


@given(st.sampled_from(PRIMES), st.integers(-10**9, 10**9).filter(bool))
def test_valuation_of_integers(p, n):
    v = 0
    m = n
    while m % p == 0:
        m //= p
        v += 1
    assert theta_valuation(CycInt.constant(p, n)) == (p - 1) * v


@given(elements())
def test_closed_form_matches_division_oracle(x):
    assert theta_valuation(x) == theta_valuation_oracle(x)


@given(elements(), st.integers(0, 12))
def test_oracle_on_high_valuations(x, k):
    # multiplying by theta^k pushes valuations past p-1
    y = x * CycInt.theta(x.p) ** k
    assert theta_valuation(y) == theta_valuation_oracle(y)


@settings(max_examples=500)
@given(same_p(2))
def test_multiplicative(xy):
    x, y = xy
    assert theta_valuation(x * y) == theta_valuation(x) + theta_valuation(y)


@settings(max_examples=500)
@given(same_p(2))
def test_ultrametric(xy):
    x, y = xy
    vx, vy, vs = theta_valuation(x), theta_valuation(y), theta_valuation(x + y)
    assert vs >= min(vx, vy)
    if vx != vy:
        assert vs == min(vx, vy)


def test_infinite_ordering():
    assert INFINITE > 10**30 and INFINITE >= 0 and not INFINITE < 5
    assert 3 < INFINITE and 3 <= INFINITE and INFINITE >= INFINITE
    assert INFINITE + 4 is INFINITE and 4 + INFINITE is INFINITE
    assert INFINITE != 7 and str(INFINITE) == "inf"


def test_random_thousand_against_oracle():
    rng = random.Random(7)
    for p in PRIMES:
        for _ in range(1000 // len(PRIMES) + 1):
            x = CycInt(p, (rng.randint(-100, 100) for _ in range(p - 1)))
            x = x * CycInt.theta(p) ** rng.randint(0, p)
            assert theta_valuation(x) == theta_valuation_oracle(x)
