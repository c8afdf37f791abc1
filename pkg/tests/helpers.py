"""Shared test utilities: random generators and independent oracles.

The oracles here deliberately avoid the library's own factorization,
Smith-form, and root-finding code paths so that agreement is evidence, not
tautology.  They only lean on polynomial arithmetic and exact division,
which the arithmetic test file certifies separately by multiply-back.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from suspring import (
    MultiPoly,
    RingSpec,
    SuspElem,
    poly_exact_divide,
    unit_normal,
)


# -- random generators ---------------------------------------------------------------


def random_poly(rng, ring: RingSpec, max_deg=3, n_terms=4, coeff_range=4,
                nonzero=False) -> MultiPoly:
    n = len(ring.variables)
    p = MultiPoly.zero(ring)
    for _ in range(rng.randint(1, n_terms)):
        exp = [0] * n
        budget = rng.randint(0, max_deg)
        for _ in range(budget):
            exp[rng.randrange(n)] += 1
        c = rng.randint(-coeff_range, coeff_range)
        p = p + MultiPoly(ring, {tuple(exp): Fraction(c)}) if c else p
    if nonzero and p.is_zero():
        return MultiPoly.const(ring, rng.randint(1, coeff_range))
    return p


def random_susp(rng, tower, level=1, max_depth=2, **poly_kw) -> SuspElem:
    """Random element built through public arithmetic only."""
    u = tower.u_gen(level)
    v = tower.v_gen(level)
    total = tower.zero(level)
    for i in range(-max_depth, max_depth + 1):
        if rng.random() < 0.45:
            continue
        if level == 1:
            c = random_poly(rng, tower.base, **poly_kw)
            if c.is_zero():
                continue
            part = tower.embed(c, 1)
        else:
            c = random_susp(rng, tower, level - 1, max_depth=1, **poly_kw)
            if c.is_zero():
                continue
            part = tower.embed(c, level)
        if i > 0:
            part = part * u ** i
        elif i < 0:
            part = part * v ** (-i)
        total = total + part
    return total


# -- rational root hunting -----------------------------------------------------------


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _eval_dense(coeffs: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def rational_roots(coeffs: list[Fraction]) -> set[Fraction]:
    """All rational roots of a nonzero univariate polynomial, ascending coeffs."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    assert coeffs, "zero polynomial has every root"
    roots: set[Fraction] = set()
    while coeffs[0] == 0:
        roots.add(Fraction(0))
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return roots
    scale = 1
    for c in coeffs:
        scale = scale * c.denominator // __import__("math").gcd(scale, c.denominator)
    ints = [int(c * scale) for c in coeffs]
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for s in (1, -1):
                cand = Fraction(s * p, q)
                if _eval_dense(coeffs, cand) == 0:
                    roots.add(cand)
    return roots


# -- low-degree factorization oracle ---------------------------------------------------
# Any reducible polynomial of total degree <= 3 in <= 2 variables has a factor
# of total degree 1, and a line divides p exactly when p vanishes on it, so an
# exhaustive search over rational lines through root pairs is complete.


def _dense_in(p: MultiPoly, var: str) -> list[Fraction]:
    cm = p.coefficient_map(var)
    out = [Fraction(0)] * (max(cm) + 1 if cm else 1)
    for d, c in cm.items():
        assert c.is_constant() or len(c.variables_used()) == 0
        out[d] = c.constant_value()
    return out


def _substitute_x(p: MultiPoly, xval: Fraction, xname: str, yname: str) -> list[Fraction]:
    """Dense y-coefficients of p(xval, y)."""
    ring = p.ring
    xi = ring.variables.index(xname)
    yi = ring.variables.index(yname)
    out: dict[int, Fraction] = {}
    for exp, c in p.terms.items():
        out[exp[yi]] = out.get(exp[yi], Fraction(0)) + c * xval ** exp[xi]
    deg = max(out) if out else 0
    return [out.get(i, Fraction(0)) for i in range(deg + 1)]


def _linear_divisor(p: MultiPoly):
    ring = p.ring
    used = sorted(p.variables_used())
    if not used:
        return None
    if len(used) == 1:
        x = used[0]
        for r in rational_roots(_dense_in(p, x)):
            cand = MultiPoly.variable(ring, x) - MultiPoly.const(ring, r)
            _, cand = unit_normal(cand)
            if poly_exact_divide(p, cand) is not None:
                return cand
        return None
    xname, yname = used[0], used[1]
    x = MultiPoly.variable(ring, xname)
    y = MultiPoly.variable(ring, yname)
    candidates = []
    # vertical lines x = r: common rational root of every y-coefficient
    ycoeffs = list(p.coefficient_map(yname).values())
    first = ycoeffs[0]
    for r in rational_roots(_dense_in(first, xname)):
        candidates.append(x - MultiPoly.const(ring, r))
    # other lines through two sample columns
    cols = []
    s = 0
    while len(cols) < 2 and s < 8:
        dense = _substitute_x(p, Fraction(s), xname, yname)
        if any(c != 0 for c in dense):
            cols.append((Fraction(s), rational_roots(dense)))
        s += 1
    if len(cols) == 2:
        (s1, roots1), (s2, roots2) = cols
        for k1 in roots1:
            for k2 in roots2:
                m = (k2 - k1) / (s2 - s1)
                c0 = k1 - m * s1
                candidates.append(y - MultiPoly.const(ring, m) * x
                                  - MultiPoly.const(ring, c0))
    for cand in candidates:
        _, cand = unit_normal(cand)
        if poly_exact_divide(p, cand) is not None:
            return cand
    return None


def oracle_factor_low(p: MultiPoly):
    """(unit, sorted factor list with multiplicity) for total degree <= 3, <= 2 vars."""
    assert not p.is_zero()
    factors: list[MultiPoly] = []
    _, core = unit_normal(p)
    while core.total_degree() >= 1:
        lin = _linear_divisor(core)
        if lin is None:
            break
        q = poly_exact_divide(core, lin)
        factors.append(lin)
        _, core = unit_normal(q)
    if core.total_degree() >= 1:
        factors.append(core)  # no linear divisor and degree <= 3: irreducible
    prod = MultiPoly.const(p.ring, 1)
    for g in factors:
        prod = prod * g
    rest = poly_exact_divide(p, prod)
    assert rest is not None and rest.is_constant()
    counted: dict[MultiPoly, int] = {}
    for g in factors:
        counted[g] = counted.get(g, 0) + 1
    ordered = tuple(sorted(counted.items(), key=lambda t: t[0].sort_key()))
    return rest.constant_value(), ordered


def conic_splits_over_C(p: MultiPoly, xname: str, yname: str) -> bool:
    """Total-degree-2 polynomial splits into two linear forms over C iff the
    symmetric matrix of the associated conic is singular."""
    ring = p.ring
    xi = ring.variables.index(xname)
    yi = ring.variables.index(yname)
    c = {(2, 0): Fraction(0), (1, 1): Fraction(0), (0, 2): Fraction(0),
         (1, 0): Fraction(0), (0, 1): Fraction(0), (0, 0): Fraction(0)}
    for exp, coef in p.terms.items():
        key = (exp[xi], exp[yi])
        assert key in c, "not a degree-2 polynomial in the two names"
        c[key] = coef
    a, b, cc = c[(2, 0)], c[(1, 1)], c[(0, 2)]
    d, e, f = c[(1, 0)], c[(0, 1)], c[(0, 0)]
    m = [
        [a, b / 2, d / 2],
        [b / 2, cc, e / 2],
        [d / 2, e / 2, f],
    ]
    detm = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    return detm == 0


# -- integer lattice oracles ------------------------------------------------------------


def int_det(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[r[c] for c in range(n) if c != j] for r in rows[1:]]
        term = rows[0][j] * int_det(minor)
        total += term if j % 2 == 0 else -term
    return total


def lattice_quotient_order(rows: list[list[int]]) -> int:
    """|Z^s / column lattice| by box enumeration; needs square, det != 0."""
    s = len(rows)
    d = abs(int_det(rows))
    assert d != 0
    # x is in the lattice iff M t = x has an integer solution (Cramer)
    in_lattice = 0
    detm = int_det(rows)
    for x in product(range(d), repeat=s):
        ok = True
        for i in range(s):
            col = [[rows[r][c] if c != i else x[r] for c in range(s)]
                   for r in range(s)]
            if int_det(col) % detm != 0:
                ok = False
                break
        if ok:
            in_lattice += 1
    assert d ** s % in_lattice == 0
    return d ** s // in_lattice


# -- k-th roots ------------------------------------------------------------------------


def _int_kth_root(n: int, k: int):
    if n < 0:
        if k % 2 == 0:
            return None
        r = _int_kth_root(-n, k)
        return None if r is None else -r
    lo, hi = 0, max(1, n)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** k == n else None


def poly_kth_root(p: MultiPoly, k: int):
    """h with h^k = p, or None; greedy leading-term extraction."""
    assert k >= 2
    if p.is_zero():
        return p
    exp, c = p.leading_term()
    if any(e % k for e in exp):
        return None
    num = _int_kth_root(c.numerator, k)
    den = _int_kth_root(c.denominator, k)
    if num is None or den is None:
        return None
    h = MultiPoly(p.ring, {tuple(e // k for e in exp): Fraction(num, den)})
    lead_exp = tuple(e // k for e in exp)
    lead_c = Fraction(num, den)
    from suspring.polyring import grlex_key, mono_div
    prev_key = None
    for _ in range(400):
        r = p - h ** k
        if r.is_zero():
            return h
        rexp, rc = r.leading_term()
        key = grlex_key(rexp)
        if prev_key is not None and key >= prev_key:
            return None
        prev_key = key
        down = mono_div(rexp, tuple(e * (k - 1) for e in lead_exp))
        if down is None:
            return None
        h = h + MultiPoly(p.ring, {down: rc / (k * lead_c ** (k - 1))})
    return None


def is_proper_power(p: MultiPoly) -> bool:
    _, core = unit_normal(p)
    deg = core.total_degree()
    if deg < 2:
        return False
    for k in range(2, deg + 1):
        root = poly_kth_root(core, k)
        if root is not None and root ** k == core:
            return True
    return False
