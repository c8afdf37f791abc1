"""Exact arithmetic over Q[x1..xn]: pinned examples and algebraic laws."""

from fractions import Fraction

import pytest

from suspring import (
    MultiPoly,
    PreconditionError,
    RingMismatch,
    RingSpec,
    normalized,
    poly_arith,
    poly_derivative,
    poly_eval,
    poly_exact_divide,
    poly_gcd,
    poly_str,
    unit_normal,
)
from helpers import random_poly


def _xy(qxy):
    return MultiPoly.variable(qxy, "x"), MultiPoly.variable(qxy, "y")


def _f3(qxy):
    x, y = _xy(qxy)
    return (x - 1) * x * y + 1


# -- pinned arithmetic ------------------------------------------------------------


def test_product_difference_of_squares(qxy):
    x, _ = _xy(qxy)
    assert (x + 1) * (x - 1) == x ** 2 - 1


def test_additive_identity(qxy, rng):
    p = random_poly(rng, qxy)
    assert p + MultiPoly.zero(qxy) == p


def test_threefold_equation_expansion(qxy):
    x, y = _xy(qxy)
    assert _f3(qxy) == x ** 2 * y - x * y + 1


def test_poly_arith_dispatch(qxy):
    x, y = _xy(qxy)
    assert poly_arith(x, y, "+") == x + y
    assert poly_arith(x, y, "-") == x - y
    assert poly_arith(x, y, "*") == x * y
    with pytest.raises(PreconditionError):
        poly_arith(x, y, "/")


def test_scalar_coercion(qxy):
    x, _ = _xy(qxy)
    assert x + Fraction(1, 2) == x + MultiPoly.const(qxy, Fraction(1, 2))
    assert 2 * x == x + x
    assert (1 - x) == -(x - 1)


def test_ring_mismatch_rejected(qx, qxy):
    with pytest.raises(RingMismatch):
        MultiPoly.variable(qx, "x") + MultiPoly.variable(qxy, "x")


# -- pinned exact division -----------------------------------------------------------


def test_exact_divide_difference_of_squares(qxy):
    x, y = _xy(qxy)
    assert poly_exact_divide(x ** 2 - y ** 2, x - y) == x + y


def test_exact_divide_failure_returns_none(qxy):
    x, _ = _xy(qxy)
    assert poly_exact_divide(x + 1, x) is None


def test_exact_divide_bivariate(qxy):
    x, y = _xy(qxy)
    assert poly_exact_divide(x ** 2 * y - x * y, (x - 1) * x) == y


# -- pinned gcd -----------------------------------------------------------------------


def test_gcd_difference_of_squares(qxy):
    x, y = _xy(qxy)
    assert poly_gcd(x ** 2 - y ** 2, x - y) == x - y


def test_gcd_with_zero_normalizes(qxy, rng):
    p = random_poly(rng, qxy, nonzero=True)
    assert poly_gcd(p, MultiPoly.zero(qxy)) == normalized(p)


def test_gcd_coprime(qxy):
    x, y = _xy(qxy)
    assert poly_gcd(_f3(qxy), (2 * x - 1) * y) == MultiPoly.const(qxy, 1)


# -- pinned calculus and evaluation -----------------------------------------------------


def test_derivative_threefold(qxy):
    x, y = _xy(qxy)
    f = _f3(qxy)
    assert poly_derivative(f, "x") == (2 * x - 1) * y
    assert poly_derivative(f, "y") == (x - 1) * x
    assert poly_derivative(MultiPoly.const(qxy, 7), "x") == MultiPoly.zero(qxy)


def test_eval_threefold(qxy):
    f = _f3(qxy)
    assert poly_eval(f, {"x": 0, "y": 0}) == 1
    assert poly_eval(f, {"x": 2, "y": Fraction(-1, 2)}) == 0
    x, y = _xy(qxy)
    assert poly_eval(x * y, {"x": 0, "y": 5}) == 0
    with pytest.raises(PreconditionError):
        poly_eval(f, {"x": 0})


# -- representation invariants ----------------------------------------------------------


def test_no_zero_terms_stored(qxy, rng):
    x, y = _xy(qxy)
    p = x + y
    q = p - p
    assert q.is_zero() and not q.terms
    for _ in range(50):
        r = random_poly(rng, qxy) - random_poly(rng, qxy)
        assert all(c != 0 for c in r.terms.values())
        assert all(len(e) == 2 for e in r.terms)


def test_unit_normal_contract(qxy, rng):
    for _ in range(50):
        p = random_poly(rng, qxy, nonzero=True)
        lam, core = unit_normal(p)
        assert core.scale(lam) == p
        nums = [c.numerator for c in core.terms.values()]
        dens = [c.denominator for c in core.terms.values()]
        assert all(d == 1 for d in dens)
        import math
        assert math.gcd(*nums) == 1 if len(nums) > 1 else abs(nums[0]) == 1
        assert core.leading_term()[1] > 0


# -- algebraic laws on random values ----------------------------------------------------


def test_ring_laws(qxy, rng):
    for _ in range(200):
        a = random_poly(rng, qxy)
        b = random_poly(rng, qxy)
        c = random_poly(rng, qxy)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == MultiPoly.zero(qxy)
        assert a * MultiPoly.const(qxy, 1) == a


def test_exact_divide_round_trip(qxy, rng):
    hits = 0
    for _ in range(100):
        p = random_poly(rng, qxy)
        q = random_poly(rng, qxy, nonzero=True)
        r = poly_exact_divide(p * q, q)
        assert r == p
        if not p.is_zero():
            hits += 1
    assert hits > 50


def test_gcd_divides_and_scales(qxy, rng):
    for _ in range(40):
        p = random_poly(rng, qxy, max_deg=2, n_terms=3)
        q = random_poly(rng, qxy, max_deg=2, n_terms=3)
        g = poly_gcd(p, q)
        if not g.is_zero():
            assert poly_exact_divide(p, g) is not None
            assert poly_exact_divide(q, g) is not None
        r = random_poly(rng, qxy, max_deg=2, n_terms=2, nonzero=True)
        lhs = poly_gcd(p * r, q * r)
        rhs = normalized(poly_gcd(p, q) * r)
        assert lhs == rhs


def test_derivative_is_linear_and_leibniz(qxy, rng):
    for _ in range(60):
        p = random_poly(rng, qxy)
        q = random_poly(rng, qxy)
        for name in ("x", "y"):
            assert (poly_derivative(p + q, name)
                    == poly_derivative(p, name) + poly_derivative(q, name))
            assert (poly_derivative(p * q, name)
                    == poly_derivative(p, name) * q + p * poly_derivative(q, name))


def test_eval_is_a_homomorphism(qxy, rng):
    for _ in range(60):
        p = random_poly(rng, qxy)
        q = random_poly(rng, qxy)
        pt = {"x": Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
              "y": Fraction(rng.randint(-4, 4), rng.randint(1, 3))}
        assert poly_eval(p + q, pt) == poly_eval(p, pt) + poly_eval(q, pt)
        assert poly_eval(p * q, pt) == poly_eval(p, pt) * poly_eval(q, pt)


def test_poly_str_pinned(qxy):
    x, y = _xy(qxy)
    assert poly_str(_f3(qxy)) == "x^2*y - x*y + 1"
    assert poly_str(MultiPoly.zero(qxy)) == "0"
    assert poly_str(MultiPoly.const(qxy, Fraction(-3, 2))) == "-3/2"
    assert poly_str(x ** 2 - y ** 2) == "x^2 - y^2"
    assert poly_str((x * y).scale(Fraction(1, 2))) == "1/2*x*y"
