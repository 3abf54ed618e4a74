"""Dense univariate polynomial layer over the field engine."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trinolab.gf3m import ctx_create
from trinolab.polyring import (Poly, poly_gcd, pow_mod, quadratic_factors,
                               roots_in_set)

CTX9 = ctx_create(1)
CTX81 = ctx_create(2)

coeff_lists = st.lists(st.integers(0, 8), min_size=0, max_size=7)


def brute_quadratic_factors(p):
    """Every monic quadratic divisor, found by scanning all (a, b)."""
    order = p.ctx.order
    out = []
    for a in range(order):
        for b in range(order):
            if (p % Poly(p.ctx, (b, a, 1))).is_zero:
                out.append((a, b))
    return out


# ---------------------------------------------------------------------------
# construction and representation

def test_trailing_zeros_are_trimmed():
    p = Poly(CTX9, (1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert Poly(CTX9).degree == -1
    assert Poly(CTX9, (0, 0)).is_zero


def test_monomial():
    p = Poly.monomial(CTX9, 3)
    assert p.coeffs == (0, 0, 0, 1)
    assert Poly.monomial(CTX9, 0, 5).coeffs == (5,)
    assert Poly.monomial(CTX9, 2, 0).is_zero


def test_text_roundtrip_examples():
    p = Poly.from_text(CTX9, "1,0,2")
    assert p.coeffs == (1, 0, 2)
    assert p.to_text() == "1,0,2"
    assert Poly(CTX9).to_text() == "0"
    assert Poly.from_text(CTX9, "0").is_zero
    with pytest.raises(ValueError):
        Poly.from_text(CTX9, "1,q")
    with pytest.raises(ValueError):
        Poly.from_text(CTX9, "1,9")  # encoding out of range for GF(9)


@given(coeff_lists)
def test_text_roundtrip_property(coeffs):
    p = Poly(CTX9, coeffs)
    assert Poly.from_text(CTX9, p.to_text()) == p


def test_cross_ctx_operations_rejected():
    with pytest.raises(ValueError, match="different ctxs"):
        Poly(CTX9, (1,)) + Poly(CTX81, (1,))


# ---------------------------------------------------------------------------
# ring operations

def test_mul_matches_naive_convolution():
    rng = random.Random(31)
    ctx = CTX9
    for _ in range(60):
        a = [rng.randrange(9) for _ in range(rng.randrange(6))]
        b = [rng.randrange(9) for _ in range(rng.randrange(6))]
        conv = [0] * (max(len(a) + len(b) - 1, 0))
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                conv[i + j] = ctx.add(conv[i + j], ctx.mul(x, y))
        assert (Poly(ctx, a) * Poly(ctx, b)).coeffs == Poly(ctx, conv).coeffs


def test_add_sub_neg():
    p = Poly(CTX9, (1, 2, 3))
    q = Poly(CTX9, (2, 1))
    assert (p + q).coeffs == (0, 0, 3)
    assert (p - p).is_zero
    assert (-p + p).is_zero
    assert (p - q) + q == p


def test_scalar_multiplication_uses_encodings():
    p = Poly(CTX9, (1, 2, 3))
    assert (p * 2).coeffs == (2, 1, 6)  # 2 is -1; 3*2 = neg(3) = 6
    assert (p * 0).is_zero


@settings(max_examples=80)
@given(coeff_lists, coeff_lists)
def test_divmod_identity(num, den):
    p, d = Poly(CTX81, num), Poly(CTX81, den)
    if d.is_zero:
        with pytest.raises(ZeroDivisionError, match="zero polynomial"):
            divmod(p, d)
        return
    q, r = divmod(p, d)
    assert q * d + r == p
    assert r.degree < d.degree


def test_divmod_example():
    # (x^2 + 1)(x^2 + 2) = x^4 + 2
    q, r = divmod(Poly(CTX9, (2, 0, 0, 0, 1)), Poly(CTX9, (1, 0, 1)))
    assert q.coeffs == (2, 0, 1) and r.is_zero
    q, r = divmod(Poly(CTX9, (1, 1, 1)), Poly(CTX9, (0, 1)))
    assert q.coeffs == (1, 1) and r.coeffs == (1,)


def test_floordiv_mod_operators():
    p = Poly(CTX9, (1, 0, 0, 1))
    d = Poly(CTX9, (1, 1))
    assert (p // d) * d + (p % d) == p


def test_monic_normalizes_leading_coefficient():
    p = Poly(CTX9, (0, 0, 2))
    assert p.monic().coeffs == (0, 0, 1)
    assert Poly(CTX9, (4, 0, 4)).monic().leading == 1
    assert Poly(CTX9).monic().is_zero  # zero is left alone


# ---------------------------------------------------------------------------
# evaluation

def test_eval_matches_power_sum():
    rng = random.Random(5)
    ctx = CTX81
    for _ in range(40):
        coeffs = [rng.randrange(81) for _ in range(rng.randrange(7))]
        p = Poly(ctx, coeffs)
        x = rng.randrange(81)
        expect = 0
        for i, c in enumerate(coeffs):
            expect = ctx.add(expect, ctx.mul(c, ctx.pow(x, i)))
        assert p.eval(x) == expect == p(x)


def test_eval_accepts_field_elements():
    p = Poly(CTX9, (1, 1))
    e = CTX9.element(3)
    assert p(e) == CTX9.add(1, 3)


# ---------------------------------------------------------------------------
# derivative: characteristic-3 power rule

def test_derivative_kills_cube_powers():
    # d/dx (x^3 + x^2 + x) = 2x + 1: the x^3 term has scalar 3 = 0
    p = Poly(CTX9, (0, 1, 1, 1))
    assert p.derivative().coeffs == (1, 2)
    assert Poly(CTX9, (0, 0, 0, 5)).derivative().is_zero
    assert Poly(CTX9, (7,)).derivative().is_zero


@given(coeff_lists, coeff_lists)
def test_derivative_is_leibniz(a, b):
    p, q = Poly(CTX9, a), Poly(CTX9, b)
    lhs = (p * q).derivative()
    rhs = p.derivative() * q + p * q.derivative()
    assert lhs == rhs


# ---------------------------------------------------------------------------
# gcd and modular powers

def test_gcd_of_coprime_pair_is_one():
    # x^4 + x^2 - 1 = x^2 (x^2 + 1) - 1, so any common divisor divides 1
    a = Poly(CTX9, (1, 0, 1))
    b = Poly(CTX9, (2, 0, 1, 0, 1))
    assert poly_gcd(a, b).coeffs == (1,)


def test_gcd_recovers_common_factor():
    common = Poly(CTX9, (2, 1, 1))
    a = common * Poly(CTX9, (1, 1))
    b = common * Poly(CTX9, (5, 0, 1))
    g = poly_gcd(a, b)
    assert g == common.monic()


def test_gcd_edge_cases():
    z = Poly(CTX9)
    p = Poly(CTX9, (0, 2))
    assert poly_gcd(p, z) == p.monic()
    assert poly_gcd(z, p) == p.monic()
    with pytest.raises(ValueError, match="gcd of two zero polynomials"):
        poly_gcd(z, z)


@settings(max_examples=50)
@given(coeff_lists, coeff_lists)
def test_gcd_divides_both(a, b):
    p, q = Poly(CTX9, a), Poly(CTX9, b)
    if p.is_zero and q.is_zero:
        return
    g = poly_gcd(p, q)
    assert (p % g).is_zero and (q % g).is_zero
    assert g.leading == 1


def test_pow_mod_matches_naive():
    base = Poly(CTX9, (1, 1))
    mod = Poly(CTX9, (1, 0, 0, 1))
    for e in (0, 1, 2, 7, 19):
        naive = Poly(CTX9, (1,))
        for _ in range(e):
            naive = (naive * base) % mod
        assert pow_mod(base, e, mod) == naive


# ---------------------------------------------------------------------------
# root finding over explicit candidate sets

def test_roots_in_set():
    # (x - 3)(x - 4) has roots {3, 4}
    p = Poly(CTX9, (CTX9.mul(3, 4), CTX9.neg(CTX9.add(3, 4)), 1))
    assert roots_in_set(p, range(9)) == [3, 4]
    assert roots_in_set(p, [4]) == [4]
    assert roots_in_set(p, [0, 1]) == []
    with pytest.raises(ValueError, match="zero polynomial"):
        roots_in_set(Poly(CTX9), range(9))


def test_roots_in_set_returns_sorted_encodings():
    p = Poly.monomial(CTX9, 3) - Poly.monomial(CTX9, 1)  # x^3 - x
    assert roots_in_set(p, range(8, -1, -1)) == [0, 1, 2]


# ---------------------------------------------------------------------------
# monic quadratic divisors

def test_quadratic_factors_pure_power():
    p = Poly.monomial(CTX9, 5)  # x^5 = (x^2)^2 x
    assert quadratic_factors(p) == [(0, 0)]


def test_quadratic_factors_of_split_quintic():
    # (x^2 + 1)(x + 1)(x^2 - x - 1) has five distinct roots in GF(9),
    # so every pair of roots gives a monic quadratic divisor
    p = (Poly(CTX9, (1, 0, 1)) * Poly(CTX9, (1, 1))) * Poly(CTX9, (2, 2, 1))
    pairs = quadratic_factors(p)
    assert (0, 1) in pairs
    assert len(pairs) == 10
    assert pairs == brute_quadratic_factors(p)


def test_quadratic_factors_with_repeated_roots():
    lin1, lin2 = Poly(CTX9, (CTX9.neg(2), 1)), Poly(CTX9, (CTX9.neg(5), 1))
    p = lin1 * lin1 * lin2 * lin2
    pairs = quadratic_factors(p)
    assert len(pairs) == 3  # (x-2)^2, (x-2)(x-5), (x-5)^2
    assert pairs == brute_quadratic_factors(p)


def test_quadratic_factors_with_zero_derivative():
    # (x - 1)^6 = (x^3 - 1)^2 has derivative 0; its only quadratic
    # divisor is (x - 1)^2 = x^2 + x + 1
    p = Poly(CTX9, (2, 0, 0, 1)) * Poly(CTX9, (2, 0, 0, 1))
    assert quadratic_factors(p) == [(1, 1)]


def test_quadratic_factors_degree_too_small():
    with pytest.raises(ValueError, match="degree must be at least 2"):
        quadratic_factors(Poly(CTX9, (1, 1)))
    with pytest.raises(ValueError, match="degree must be at least 2"):
        quadratic_factors(Poly(CTX9))


@pytest.mark.parametrize("seed", range(6))
def test_quadratic_factors_random_vs_brute_force(seed):
    rng = random.Random(seed)
    ctx = CTX81
    while True:
        coeffs = [rng.randrange(81) for _ in range(6)] + [1]
        p = Poly(ctx, coeffs)
        if p.degree == 6:
            break
    assert quadratic_factors(p) == brute_quadratic_factors(p)


def test_quadratic_factors_finds_planted_divisors_in_large_field():
    ctx = ctx_create(3)
    rng = random.Random(11)
    q1 = Poly(ctx, (rng.randrange(729), rng.randrange(729), 1))
    q2 = Poly(ctx, (rng.randrange(729), rng.randrange(729), 1))
    lin = Poly(ctx, (rng.randrange(729), 1))
    p = q1 * q2 * lin
    pairs = quadratic_factors(p)
    assert (q1.coeffs[1], q1.coeffs[0]) in pairs
    assert (q2.coeffs[1], q2.coeffs[0]) in pairs
    for a, b in pairs:
        assert (p % Poly(ctx, (b, a, 1))).is_zero
