"""Exact polynomial factorization over the rationals.

Univariate polynomials are factored by the classical chain: strip the
rational unit and monomial part, split into squarefree pieces with Yun's
algorithm, factor each piece modulo a small prime, Hensel-lift the modular
factors past a Mignotte-style coefficient bound, and recombine subsets with
trial division (Zassenhaus).  The prime is the smallest prime >= 13 that
keeps the leading coefficient a unit and the image squarefree, so the whole
pipeline is deterministic.

Multivariate polynomials are reduced to the univariate case by Kronecker
substitution x_i -> t^((D+1)^(i-1)) with D the total degree, which is
injective on the monomials that can occur in any factor.  Candidate factors
are pulled back digit by digit and certified by exact division, so a wrong
candidate is never accepted.

newton_indecomposable is a one-sided absolute irreducibility test: when the
Newton polygon of a polynomial admits no nontrivial integral Minkowski
decomposition the polynomial stays irreducible over every field extension.
The test never claims reducibility.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import PreconditionError, ResourceLimit
from .polyring import (
    MultiPoly,
    RingSpec,
    normalized,
    poly_derivative,
    poly_exact_divide,
    poly_gcd,
    poly_str,
    unit_normal,
)

ABSOLUTELY_IRREDUCIBLE = "absolutely-irreducible"
UNKNOWN = "unknown"

KRONECKER_IMAGE_LIMIT = 10 ** 6
NEWTON_SEARCH_LIMIT = 200_000


@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor^multiplicity); factors unit-normal and sorted."""

    unit: Fraction
    factors: tuple[tuple[MultiPoly, int], ...]

    def expand(self) -> MultiPoly:
        first = self.factors[0][0] if self.factors else None
        if first is None:
            raise PreconditionError("cannot expand a factorization with no ring context")
        out = MultiPoly.const(first.ring, self.unit)
        for q, m in self.factors:
            out = out * q ** m
        return out

    def expand_in(self, ring: RingSpec) -> MultiPoly:
        out = MultiPoly.const(ring, self.unit)
        for q, m in self.factors:
            out = out * q ** m
        return out

    def __str__(self):
        parts = [str(self.unit)]
        for q, m in self.factors:
            parts.append(f"({poly_str(q)})" + (f"^{m}" if m > 1 else ""))
        return " * ".join(parts)


def _sorted_factors(pairs: dict[MultiPoly, int]) -> tuple[tuple[MultiPoly, int], ...]:
    return tuple(sorted(pairs.items(), key=lambda t: t[0].sort_key()))


# -- dense arithmetic mod p ----------------------------------------------------------
# Polynomials over F_p are lists of ints in [0, p), index = degree.


def _gf_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _gf_add(f, g, p):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return _gf_trim(out)


def _gf_sub(f, g, p):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return _gf_trim(out)


def _gf_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _gf_trim(out)


def _gf_divmod(f, g, p):
    """Quotient and remainder; leading coefficient of g must be invertible."""
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        c = (f[-1] * inv) % p
        shift = len(f) - 1 - dg
        q[shift] = c
        for i, b in enumerate(g):
            f[i + shift] = (f[i + shift] - c * b) % p
        _gf_trim(f)
    return _gf_trim(q), f


def _gf_monic(f, p):
    if not f:
        return []
    inv = pow(f[-1], -1, p)
    return [(c * inv) % p for c in f]


def _gf_gcd(f, g, p):
    while g:
        f, g = g, _gf_divmod(f, g, p)[1]
    return _gf_monic(f, p)


def _gf_gcdex(f, g, p):
    """(s, t) with s*f + t*g = 1 mod p; f, g must be coprime."""
    r0, r1 = list(f), list(g)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    assert len(r0) == 1, "gcdex needs coprime inputs"
    inv = pow(r0[0], -1, p)
    return [(c * inv) % p for c in s0], [(c * inv) % p for c in t0]


def _gf_pow_xp_mod(g, p):
    """x^p mod g."""
    result = [1]
    base = [0, 1]
    e = p
    while e:
        if e & 1:
            result = _gf_divmod(_gf_mul(result, base, p), g, p)[1]
        e >>= 1
        if e:
            base = _gf_divmod(_gf_mul(base, base, p), g, p)[1]
    return result


def _gf_deriv(f, p):
    return _gf_trim([(i * c) % p for i, c in enumerate(f)][1:])


def _is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _good_prime(f: list[int]) -> int:
    """Smallest prime >= 13 keeping lc(f) a unit and the image squarefree."""
    p = 13
    while True:
        if _is_prime_int(p) and f[-1] % p != 0:
            fp = [c % p for c in f]
            if len(_gf_trim(list(fp))) == len(f):
                g = _gf_gcd(fp, _gf_deriv(fp, p), p)
                if len(g) == 1:
                    return p
        p += 1


# -- Berlekamp factorization mod p ----------------------------------------------------


def _gf_nullspace(M: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the right nullspace of the n x n matrix M over F_p."""
    n = len(M)
    A = [row[:] for row in M]
    pivots: dict[int, int] = {}
    row = 0
    for col in range(n):
        sel = None
        for r in range(row, n):
            if A[r][col] % p != 0:
                sel = r
                break
        if sel is None:
            continue
        A[row], A[sel] = A[sel], A[row]
        inv = pow(A[row][col], -1, p)
        A[row] = [(v * inv) % p for v in A[row]]
        for r in range(n):
            if r != row and A[r][col] % p != 0:
                c = A[r][col]
                A[r] = [(a - c * b) % p for a, b in zip(A[r], A[row])]
        pivots[col] = row
        row += 1
    basis = []
    free_cols = [c for c in range(n) if c not in pivots]
    for fc in free_cols:
        v = [0] * n
        v[fc] = 1
        for col, r in pivots.items():
            v[col] = (-A[r][fc]) % p
        basis.append(v)
    return basis


def _berlekamp(g: list[int], p: int) -> list[list[int]]:
    """Monic irreducible factors of a monic squarefree g over F_p."""
    n = len(g) - 1
    if n == 1:
        return [g]
    xp = _gf_pow_xp_mod(g, p)
    rows = []
    cur = [1]
    for _ in range(n):
        rows.append(list(cur) + [0] * (n - len(cur)))
        cur = _gf_divmod(_gf_mul(cur, xp, p), g, p)[1]
    # v is in the Berlekamp subalgebra iff v^p = v mod g, i.e. v contracted
    # against the rows equals v; that is the left nullspace of (Q - I).
    M = [[(rows[i][j] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    Mt = [[M[i][j] for i in range(n)] for j in range(n)]
    basis = _gf_nullspace(Mt, p)
    r = len(basis)
    factors = [g]
    if r == 1:
        return factors
    for v in basis:
        if len(factors) == r:
            break
        vpoly = _gf_trim(list(v))
        if len(vpoly) <= 1:
            continue
        for s in range(p):
            if len(factors) == r:
                break
            vs = _gf_sub(vpoly, [s], p)
            updated = []
            for h in factors:
                if len(h) - 1 <= 1:
                    updated.append(h)
                    continue
                d = _gf_gcd(h, vs, p)
                if 1 < len(d) < len(h):
                    updated.append(d)
                    updated.append(_gf_monic(_gf_divmod(h, d, p)[0], p))
                else:
                    updated.append(h)
            factors = updated
    assert len(factors) == r, "Berlekamp splitting did not complete"
    return sorted(factors, key=lambda h: (len(h), h))


# -- Hensel lifting -------------------------------------------------------------------


def _z_mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _z_sub(f, g):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] -= c
    return out


def _z_add(f, g):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] += c
    return out


def _z_trunc(f, m):
    out = [c % m for c in f]
    while out and out[-1] == 0:
        out.pop()
    return out


def _z_divmod_monicish(f, g, m):
    """Division in (Z/m)[x] by g with invertible leading coefficient."""
    f = _z_trunc(f, m)
    g = _z_trunc(g, m)
    dg = len(g) - 1
    inv = pow(g[-1], -1, m)
    q = [0] * max(len(f) - dg, 0)
    while f and len(f) - 1 >= dg:
        c = (f[-1] * inv) % m
        shift = len(f) - 1 - dg
        q[shift] = c
        for i, b in enumerate(g):
            f[i + shift] = (f[i + shift] - c * b) % m
        while f and f[-1] == 0:
            f.pop()
    return q, f


def _hensel_step(m, f, g, h, s, t):
    """One quadratic lift: from f = g*h, s*g + t*h = 1 (mod m) to the same mod m^2."""
    M = m * m
    e = _z_trunc(_z_sub(f, _z_mul(g, h)), M)
    q, r = _z_divmod_monicish(_z_mul(s, e), h, M)
    G = _z_trunc(_z_add(_z_add(g, _z_mul(t, e)), _z_mul(q, g)), M)
    H = _z_trunc(_z_add(h, r), M)
    b = _z_trunc(_z_sub(_z_add(_z_mul(s, G), _z_mul(t, H)), [1]), M)
    c, d = _z_divmod_monicish(_z_mul(s, b), H, M)
    S = _z_trunc(_z_sub(s, d), M)
    T = _z_trunc(_z_sub(_z_sub(t, _z_mul(t, b)), _z_mul(c, G)), M)
    return G, H, S, T


def _hensel_lift(p, f, factors, l):
    """Lift monic factors of f mod p to monic factors mod p^l (f = lc * prod)."""
    r = len(factors)
    lc = f[-1]
    if r == 1:
        inv = pow(lc % p ** l, -1, p ** l)
        return [_z_trunc([c * inv for c in f], p ** l)]
    k = r // 2
    d = max(1, (l - 1).bit_length())
    g = [lc % p]
    for fac in factors[:k]:
        g = _z_trunc(_z_mul(g, fac), p)
    h = [1]
    for fac in factors[k:]:
        h = _z_trunc(_z_mul(h, fac), p)
    s, t = _gf_gcdex(g, h, p)
    m = p
    for _ in range(d):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift(p, g, factors[:k], l) + _hensel_lift(p, h, factors[k:], l)


# -- Zassenhaus over Z ----------------------------------------------------------------


def _z_content(f):
    g = 0
    for c in f:
        g = gcd(g, abs(c))
    return g or 1


def _z_primitive(f):
    g = _z_content(f)
    out = [c // g for c in f]
    if out and out[-1] < 0:
        out = [-c for c in out]
    return out


def _z_exact_div(f, g):
    """f // g in Z[x] or None; g primitive."""
    f = list(f)
    q = [0] * max(len(f) - len(g) + 1, 0)
    dg = len(g) - 1
    lg = g[-1]
    while f and len(f) - 1 >= dg:
        if f[-1] % lg != 0:
            return None
        c = f[-1] // lg
        shift = len(f) - 1 - dg
        q[shift] = c
        for i, b in enumerate(g):
            f[i + shift] -= c * b
        while f and f[-1] == 0:
            f.pop()
    if f:
        return None
    return q


def _symmetric(f, m):
    out = []
    half = m // 2
    for c in f:
        c %= m
        if c > half:
            c -= m
        out.append(c)
    while out and out[-1] == 0:
        out.pop()
    return out


def _zassenhaus(f: list[int]) -> list[list[int]]:
    """Irreducible factors of a primitive squarefree f in Z[x], f(0) != 0, lc > 0."""
    n = len(f) - 1
    if n == 1:
        return [f]
    A = max(abs(c) for c in f)
    b = f[-1]
    B = (isqrt(n + 1) + 1) * (1 << n) * A * abs(b)
    p = _good_prime(f)
    fp = _gf_monic([c % p for c in f], p)
    modular = _berlekamp(fp, p)
    if len(modular) == 1:
        return [f]
    l = 1
    while p ** l <= 2 * B:
        l += 1
    lifted = _hensel_lift(p, f, modular, l)
    P = p ** l

    result = []
    T = list(range(len(lifted)))
    cur = list(f)
    s = 1
    while 2 * s <= len(T):
        found = False
        for combo in itertools.combinations(T, s):
            lc_cur = cur[-1]
            G = [lc_cur % P]
            for i in combo:
                G = _z_trunc(_z_mul(G, lifted[i]), P)
            G = _symmetric(G, P)
            if not G:
                continue
            # trailing-coefficient pretest before the full division
            if cur[0] != 0 and G[0] != 0 and (cur[0] * lc_cur) % G[0] != 0:
                continue
            Gp = _z_primitive(G)
            if len(Gp) <= 1:
                continue
            quot = _z_exact_div(cur, Gp)
            if quot is not None:
                result.append(Gp)
                cur = _z_primitive(quot)
                T = [i for i in T if i not in combo]
                found = True
                break
        if not found:
            s += 1
    if len(cur) > 1:
        result.append(cur)
    return result


# -- Yun squarefree decomposition ------------------------------------------------------


def _yun(p: MultiPoly, var: str) -> list[tuple[MultiPoly, int]]:
    """Squarefree decomposition of a primitive univariate polynomial."""
    d = poly_derivative(p, var)
    g = poly_gcd(p, d)
    if g.is_constant():
        return [(normalized(p), 1)]
    out = []
    w = poly_exact_divide(p, g)
    y = poly_exact_divide(d, g)
    z = y - poly_derivative(w, var)
    i = 1
    while not w.is_constant():
        h = poly_gcd(w, z)
        if not h.is_constant():
            out.append((h, i))
        w_next = poly_exact_divide(w, h)
        z = poly_exact_divide(z, h) - poly_derivative(w_next, var)
        w = w_next
        i += 1
    return out


# -- univariate pipeline ---------------------------------------------------------------


def _dense_int(p: MultiPoly, var: str) -> list[int]:
    """Dense integer coefficient list of an integer-coefficient polynomial."""
    i = p.ring.index(var)
    d = p.degree_in(var)
    out = [0] * (d + 1)
    for exp, c in p.terms.items():
        assert c.denominator == 1
        out[exp[i]] = c.numerator
    return out


def _from_dense(ring: RingSpec, var: str, coeffs: list[int]) -> MultiPoly:
    i = ring.index(var)
    terms = {}
    for d, c in enumerate(coeffs):
        if c:
            exp = tuple(d if j == i else 0 for j in range(ring.nvars))
            terms[exp] = Fraction(c)
    return MultiPoly(ring, terms)


def _factor_in_one_var(p: MultiPoly, var: str) -> Factorization:
    ring = p.ring
    factors: dict[MultiPoly, int] = {}
    _, pz = unit_normal(p)
    k = min(exp[ring.index(var)] for exp in pz.terms)
    if k > 0:
        xv = MultiPoly.variable(ring, var)
        factors[xv] = k
        pz = poly_exact_divide(pz, xv ** k)
    if not pz.is_constant():
        for piece, mult in _yun(pz, var):
            dense = _dense_int(normalized(piece), var)
            for fac in _zassenhaus(dense):
                q = normalized(_from_dense(ring, var, fac))
                factors[q] = factors.get(q, 0) + mult
    prod = MultiPoly.const(ring, 1)
    for q, m in factors.items():
        prod = prod * q ** m
    unit = poly_exact_divide(p, prod)
    assert unit is not None and unit.is_constant()
    return Factorization(unit.constant_value(), _sorted_factors(factors))


def factor_univariate(p: MultiPoly) -> Factorization:
    """Factor a polynomial involving at most one variable into irreducibles."""
    if p.is_zero():
        raise PreconditionError("cannot factor the zero polynomial")
    used = p.variables_used()
    if len(used) > 1:
        raise PreconditionError("factor_univariate needs a univariate polynomial")
    if not used:
        return Factorization(p.constant_value(), ())
    return _factor_in_one_var(p, used[0])


# -- Kronecker substitution -------------------------------------------------------------


def _kronecker_image(p: MultiPoly, used: tuple[str, ...], base: int) -> MultiPoly:
    tring = RingSpec(("t",))
    idx = [p.ring.index(v) for v in used]
    weights = [base ** j for j in range(len(used))]
    terms: dict[tuple[int, ...], Fraction] = {}
    for exp, c in p.terms.items():
        e = sum(exp[i] * w for i, w in zip(idx, weights))
        terms[(e,)] = c
    return MultiPoly(tring, terms)


def _kronecker_pullback(q: MultiPoly, ring: RingSpec, used: tuple[str, ...], base: int) -> MultiPoly:
    idx = [ring.index(v) for v in used]
    terms: dict[tuple[int, ...], Fraction] = {}
    for (e,), c in q.terms.items():
        exp = [0] * ring.nvars
        for i in idx:
            exp[i] = e % base
            e //= base
        assert e == 0
        terms[tuple(exp)] = c
    return MultiPoly(ring, terms)


def _multiset_subsets(counts: list[int], size: int):
    """Yield multiplicity vectors m with 0 <= m_i <= counts[i], sum(m) = size."""

    def rec(i: int, remaining: int, acc: list[int]):
        if i == len(counts):
            if remaining == 0:
                yield tuple(acc)
            return
        tail = sum(counts[i:])
        if remaining > tail:
            return
        for m in range(min(counts[i], remaining) + 1):
            acc.append(m)
            yield from rec(i + 1, remaining - m, acc)
            acc.pop()

    yield from rec(0, size, [])


def _kronecker_irreducibles(q: MultiPoly, used: tuple[str, ...], max_image: int) -> list[MultiPoly]:
    """Irreducible factors of a squarefree primitive q in >= 2 variables."""
    ring = q.ring
    D = q.total_degree()
    base = D + 1
    if base ** len(used) > max_image:
        raise ResourceLimit(
            f"Kronecker image size (degree+1)^vars = {base}^{len(used)} exceeds {max_image}")
    image = _kronecker_image(q, used, base)
    uni = _factor_in_one_var(image, "t")
    pool = [(fac, m) for fac, m in uni.factors]
    counts = [m for _, m in pool]
    remaining = q
    found: list[MultiPoly] = []
    while not remaining.is_constant():
        total = sum(counts)
        assert total > 0, "factor pool exhausted before the polynomial"
        hit = False
        for size in range(1, total + 1):
            tried: set[MultiPoly] = set()
            for vec in _multiset_subsets(counts, size):
                prod = MultiPoly.const(RingSpec(("t",)), 1)
                for (fac, _), m in zip(pool, vec):
                    if m:
                        prod = prod * fac ** m
                cand = normalized(_kronecker_pullback(prod, ring, used, base))
                if cand.is_constant() or cand in tried:
                    continue
                tried.add(cand)
                quot = poly_exact_divide(remaining, cand)
                if quot is not None:
                    found.append(cand)
                    remaining = quot
                    counts = [c - m for c, m in zip(counts, vec)]
                    hit = True
                    break
            if hit:
                break
        assert hit, "no candidate divided the remainder"
    assert sum(counts) == 0
    return found


def factor_multivariate(p: MultiPoly, max_image: int = KRONECKER_IMAGE_LIMIT) -> Factorization:
    """Factor a nonzero polynomial over Q into irreducibles."""
    if p.is_zero():
        raise PreconditionError("cannot factor the zero polynomial")
    ring = p.ring
    used = p.variables_used()
    if len(used) <= 1:
        return factor_univariate(p)
    factors: dict[MultiPoly, int] = {}
    _, pz = unit_normal(p)
    # monomial content
    core = pz
    for v in used:
        i = ring.index(v)
        k = min(exp[i] for exp in core.terms)
        if k > 0:
            xv = MultiPoly.variable(ring, v)
            factors[xv] = k
            core = poly_exact_divide(core, xv ** k)
    used_core = core.variables_used()
    if len(used_core) == 1:
        sub = _factor_in_one_var(core, used_core[0])
        for q, m in sub.factors:
            factors[q] = factors.get(q, 0) + m
    elif len(used_core) >= 2:
        g = core
        for v in used_core:
            g = poly_gcd(g, poly_derivative(core, v))
            if g.is_constant():
                break
        squarefree = core if g.is_constant() else normalized(poly_exact_divide(core, g))
        for q in _kronecker_irreducibles(squarefree, squarefree.variables_used(), max_image):
            mult = 0
            rem = core
            while True:
                nxt = poly_exact_divide(rem, q)
                if nxt is None:
                    break
                mult += 1
                rem = nxt
            assert mult >= 1
            factors[q] = factors.get(q, 0) + mult
    prod = MultiPoly.const(ring, 1)
    for q, m in factors.items():
        prod = prod * q ** m
    unit = poly_exact_divide(p, prod)
    assert unit is not None and unit.is_constant()
    return Factorization(unit.constant_value(), _sorted_factors(factors))


def is_irreducible(p: MultiPoly) -> bool:
    """True iff p is irreducible in Q[x1..xn].  p must be a nonzero non-unit."""
    if p.is_zero() or p.is_unit():
        raise PreconditionError("irreducibility is about nonzero non-units")
    fact = factor_multivariate(p)
    return len(fact.factors) == 1 and fact.factors[0][1] == 1


# -- Newton polygon indecomposability --------------------------------------------------


def _convex_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Convex hull, counterclockwise, no collinear interior vertices."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for pt in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], pt) <= 0:
            lower.pop()
        lower.append(pt)
    upper = []
    for pt in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], pt) <= 0:
            upper.pop()
        upper.append(pt)
    return lower[:-1] + upper[:-1]


def newton_indecomposable(p: MultiPoly) -> str:
    """Newton polygon test; ABSOLUTELY_IRREDUCIBLE is a proof, UNKNOWN says nothing.

    Applies to polynomials involving at most two variables.  The polygon of a
    product is the Minkowski sum of the factor polygons, and a polynomial
    without monomial factors whose polygon has no nontrivial integral
    decomposition is irreducible over every extension of Q.
    """
    if p.is_zero():
        raise PreconditionError("the zero polynomial has no Newton polygon")
    used = p.variables_used()
    if len(used) > 2:
        return UNKNOWN
    if len(p.terms) == 1:
        return ABSOLUTELY_IRREDUCIBLE if p.total_degree() == 1 else UNKNOWN
    idx = [p.ring.index(v) for v in used]
    pts = []
    for exp in p.terms:
        e = [exp[i] for i in idx]
        while len(e) < 2:
            e.append(0)
        pts.append((e[0], e[1]))
    min0 = min(q[0] for q in pts)
    min1 = min(q[1] for q in pts)
    if min0 > 0 or min1 > 0:
        # a genuine monomial factor: reducible, so nothing to certify
        return UNKNOWN
    hull = _convex_hull(pts)
    if len(hull) <= 2:
        (x0, y0), (x1, y1) = hull[0], hull[-1]
        k = gcd(abs(x1 - x0), abs(y1 - y0))
        return ABSOLUTELY_IRREDUCIBLE if k == 1 else UNKNOWN
    edges = []
    m = len(hull)
    for i in range(m):
        dx = hull[(i + 1) % m][0] - hull[i][0]
        dy = hull[(i + 1) % m][1] - hull[i][1]
        k = gcd(abs(dx), abs(dy))
        edges.append((k, (dx // k, dy // k)))
    space = 1
    for k, _ in edges:
        space *= k + 1
        if space > NEWTON_SEARCH_LIMIT:
            return UNKNOWN
    totals = [k for k, _ in edges]
    for choice in itertools.product(*[range(k + 1) for k, _ in edges]):
        if all(c == 0 for c in choice) or list(choice) == totals:
            continue
        sx = sum(c * u[0] for c, (_, u) in zip(choice, edges))
        sy = sum(c * u[1] for c, (_, u) in zip(choice, edges))
        if sx == 0 and sy == 0:
            return UNKNOWN
    return ABSOLUTELY_IRREDUCIBLE
