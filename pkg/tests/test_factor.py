"""Factorization over Q: pinned examples, brute-force oracles, certificates."""

from fractions import Fraction
from itertools import product

import pytest

from suspring import (
    MultiPoly,
    PreconditionError,
    ResourceLimit,
    RingSpec,
    factor_multivariate,
    factor_univariate,
    is_irreducible,
    newton_indecomposable,
    poly_exact_divide,
    unit_normal,
)
from suspring.factor import ABSOLUTELY_IRREDUCIBLE, UNKNOWN
from helpers import conic_splits_over_C, oracle_factor_low, random_poly


def _xy(qxy):
    return MultiPoly.variable(qxy, "x"), MultiPoly.variable(qxy, "y")


# -- pinned examples -----------------------------------------------------------------


def test_difference_of_squares(qx):
    x = MultiPoly.variable(qx, "x")
    fact = factor_univariate(x ** 2 - 1)
    assert fact.unit == 1
    assert dict(fact.factors) == {x - 1: 1, x + 1: 1}
    assert fact.expand() == x ** 2 - 1


def test_sum_of_squares_is_irreducible(qx):
    x = MultiPoly.variable(qx, "x")
    fact = factor_univariate(x ** 2 + 1)
    assert fact.factors == ((x ** 2 + 1, 1),)


def test_fourth_roots_of_unity(qx):
    x = MultiPoly.variable(qx, "x")
    fact = factor_univariate(x ** 4 - 1)
    assert dict(fact.factors) == {x - 1: 1, x + 1: 1, x ** 2 + 1: 1}


def test_monomial(qxy):
    x, y = _xy(qxy)
    fact = factor_multivariate(x ** 2 * y ** 3)
    assert fact.unit == 1
    assert dict(fact.factors) == {x: 2, y: 3}


def test_threefold_equation_irreducible(qxy):
    x, y = _xy(qxy)
    f3 = (x - 1) * x * y + 1
    fact = factor_multivariate(f3)
    assert fact.factors == ((f3, 1),)
    assert is_irreducible(f3)


def test_bivariate_split(qxy):
    x, y = _xy(qxy)
    fact = factor_multivariate(x ** 2 * y - x * y)
    assert fact.unit == 1
    assert dict(fact.factors) == {x: 1, x - 1: 1, y: 1}


def test_is_irreducible_pinned(qxy):
    x, _ = _xy(qxy)
    assert is_irreducible(x)
    assert not is_irreducible(x ** 2)
    with pytest.raises(PreconditionError):
        is_irreducible(MultiPoly.zero(qxy))
    with pytest.raises(PreconditionError):
        is_irreducible(MultiPoly.const(qxy, 3))


def test_newton_pinned(qxy):
    x, y = _xy(qxy)
    assert newton_indecomposable(x * y + 1) == ABSOLUTELY_IRREDUCIBLE
    assert newton_indecomposable(x ** 2 + y ** 2) == UNKNOWN
    assert newton_indecomposable(x) == ABSOLUTELY_IRREDUCIBLE
    with pytest.raises(PreconditionError):
        newton_indecomposable(MultiPoly.zero(qxy))


def test_factor_rejects_zero(qxy):
    with pytest.raises(PreconditionError):
        factor_multivariate(MultiPoly.zero(qxy))


# -- certificates on random inputs -------------------------------------------------------


def test_expand_recovers_input(qxy, rng):
    for _ in range(60):
        p = random_poly(rng, qxy, max_deg=3, n_terms=3)
        q = random_poly(rng, qxy, max_deg=2, n_terms=2)
        pq = p * q
        if pq.is_zero() or pq.is_constant():
            continue
        fact = factor_multivariate(pq)
        assert fact.expand() == pq
        for g, m in fact.factors:
            assert m >= 1
            assert g == unit_normal(g)[1], "factors are unit-normal"


def test_factors_sorted_canonically(qxy, rng):
    for _ in range(20):
        p = random_poly(rng, qxy, max_deg=3, n_terms=4, nonzero=True)
        if p.is_constant():
            continue
        fact = factor_multivariate(p)
        keys = [g.sort_key() for g, _ in fact.factors]
        assert keys == sorted(keys)


# -- exhaustive univariate agreement with the linear-divisor oracle ------------------------


def test_univariate_degree3_exhaustive(qx):
    x = MultiPoly.variable(qx, "x")
    checked = 0
    for c3, c2, c1, c0 in product(range(-2, 3), repeat=4):
        p = (MultiPoly.const(qx, c0) + x.scale(c1)
             + (x ** 2).scale(c2) + (x ** 3).scale(c3))
        if p.is_zero() or p.is_constant():
            continue
        unit, expected = oracle_factor_low(p)
        fact = factor_univariate(p)
        assert fact.unit == unit
        assert fact.factors == expected
        checked += 1
    assert checked == 5 ** 4 - 5  # all degree >= 1 choices


# -- sampled bivariate agreement ----------------------------------------------------------


def _random_low_bivariate(rng, qxy):
    monos = [(i, j) for i in range(4) for j in range(4) if i + j <= 3]
    terms = {}
    for e in monos:
        if rng.random() < 0.4:
            c = rng.randint(-2, 2)
            if c:
                terms[e] = Fraction(c)
    return MultiPoly(qxy, terms)


def test_bivariate_degree3_sampled(qxy, rng):
    x, y = _xy(qxy)
    cases = []
    for _ in range(220):
        p = _random_low_bivariate(rng, qxy)
        if not p.is_zero() and not p.is_constant():
            cases.append(p)
    # force reducible coverage: products of two integer linear forms
    for _ in range(60):
        l1 = (x.scale(rng.randint(-2, 2)) + y.scale(rng.randint(-2, 2))
              + MultiPoly.const(qxy, rng.randint(-2, 2)))
        l2 = (x.scale(rng.randint(-2, 2)) + y.scale(rng.randint(-2, 2))
              + MultiPoly.const(qxy, rng.randint(-2, 2)))
        p = l1 * l2
        if not p.is_zero() and not p.is_constant() and p.total_degree() <= 3:
            cases.append(p)
    assert len(cases) > 200
    for p in cases:
        unit, expected = oracle_factor_low(p)
        fact = factor_multivariate(p)
        assert fact.unit == unit, f"unit mismatch for {p}"
        assert fact.factors == expected, f"factor mismatch for {p}"


# -- multiplicity consistency --------------------------------------------------------------


def test_multiplicities_match_exact_division(qxy, rng):
    x, y = _xy(qxy)
    bases = [x, y, x - y, x + 1, x * y + 1]
    for _ in range(30):
        q = rng.choice(bases)
        k = rng.randint(1, 3)
        r = random_poly(rng, qxy, max_deg=2, n_terms=2, nonzero=True)
        p = q ** k * r
        fact = factor_multivariate(p)
        qn = unit_normal(q)[1]
        reported = dict(fact.factors).get(qn, 0)
        witness = 0
        rem = p
        while True:
            nxt = poly_exact_divide(rem, qn)
            if nxt is None:
                break
            witness += 1
            rem = nxt
        assert reported == witness
        assert reported >= k


# -- Newton polygon soundness ----------------------------------------------------------------


def test_newton_never_certifies_split_conics(qxy):
    """Exhaustive degree-2 grid: a singular conic splits over C, so the
    polygon test must not claim absolute irreducibility there."""
    x, y = _xy(qxy)
    flagged = 0
    for a, b, c, d, e, f in product(range(-1, 2), repeat=6):
        if (a, b, c) == (0, 0, 0):
            continue
        p = ((x ** 2).scale(a) + (x * y).scale(b) + (y ** 2).scale(c)
             + x.scale(d) + y.scale(e) + MultiPoly.const(qxy, f))
        if conic_splits_over_C(p, "x", "y"):
            assert newton_indecomposable(p) != ABSOLUTELY_IRREDUCIBLE, str(p)
            flagged += 1
    assert flagged > 100


def test_newton_certificate_implies_irreducible_over_Q(qxy, rng):
    for _ in range(120):
        p = _random_low_bivariate(rng, qxy)
        if p.is_zero() or p.is_constant():
            continue
        if newton_indecomposable(p) == ABSOLUTELY_IRREDUCIBLE:
            assert is_irreducible(p)


def test_newton_three_variables_says_unknown():
    ring = RingSpec(("x", "y", "z"))
    p = (MultiPoly.variable(ring, "x") * MultiPoly.variable(ring, "y")
         * MultiPoly.variable(ring, "z") + 1)
    assert newton_indecomposable(p) == UNKNOWN


# -- resource limits ---------------------------------------------------------------------------


def test_kronecker_image_cap(qxy):
    x, y = _xy(qxy)
    p = (x + y + 1) * (x - y + 2)
    with pytest.raises(ResourceLimit):
        factor_multivariate(p, max_image=4)
    # generous cap factors fine
    assert factor_multivariate(p, max_image=10 ** 6).expand() == p
