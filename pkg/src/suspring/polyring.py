"""Exact multivariate polynomial arithmetic over the rationals.

A polynomial is a sparse map from exponent tuples to nonzero Fraction
coefficients.  The exponent tuple is indexed by the variable list of the
RingSpec the polynomial belongs to, and zero coefficients are never stored,
so equal polynomials always have equal term maps.

The canonical term order used for printing and for leading terms is graded
lexicographic: compare total degree first, then the exponent vector
lexicographically.  Greatest common divisors are computed by content and
primitive-part recursion on the last occurring variable, with a subresultant
pseudo-remainder sequence in the main variable to keep coefficient growth
polynomial.  The gcd is returned in unit-normal form: integer coefficients
with content one and a positive leading coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Union

from .errors import PreconditionError, RingMismatch, UnknownVariable

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class RingSpec:
    """A polynomial ring over Q, identified by its ordered variable names."""

    variables: tuple[str, ...]

    def __post_init__(self):
        if len(self.variables) == 0:
            raise PreconditionError("a polynomial ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise PreconditionError(f"duplicate variable names: {self.variables}")
        for name in self.variables:
            if not name.isidentifier():
                raise PreconditionError(f"bad variable name: {name!r}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariable(f"variable {name!r} not in ring Q{list(self.variables)}") from None

    def extend(self, *names: str) -> "RingSpec":
        return RingSpec(self.variables + tuple(names))


def grlex_key(exp: Exponent) -> tuple:
    return (sum(exp), exp)


def grevlex_key(exp: Exponent) -> tuple:
    return (sum(exp), tuple(-e for e in reversed(exp)))


def mono_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Exponent, b: Exponent) -> Exponent | None:
    """a / b, or None when some exponent would go negative."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


class MultiPoly:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping[Exponent, Scalar]):
        clean: dict[Exponent, Fraction] = {}
        n = ring.nvars
        for exp, coeff in terms.items():
            if len(exp) != n:
                raise PreconditionError(f"exponent {exp} has wrong arity for {ring.variables}")
            if any(e < 0 for e in exp):
                raise PreconditionError(f"negative exponent in {exp}")
            c = Fraction(coeff)
            if c != 0:
                clean[exp] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def zero(ring: RingSpec) -> "MultiPoly":
        return MultiPoly(ring, {})

    @staticmethod
    def const(ring: RingSpec, value: Scalar) -> "MultiPoly":
        return MultiPoly(ring, {(0,) * ring.nvars: Fraction(value)})

    @staticmethod
    def variable(ring: RingSpec, name: str) -> "MultiPoly":
        i = ring.index(name)
        exp = tuple(1 if j == i else 0 for j in range(ring.nvars))
        return MultiPoly(ring, {exp: Fraction(1)})

    # -- inspection ------------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        """The term map; callers must not mutate it."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self._terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise PreconditionError("polynomial is not constant")
        return next(iter(self._terms.values()))

    def is_unit(self) -> bool:
        """Units of Q[x1..xn] are the nonzero constants."""
        return self.is_constant() and not self.is_zero()

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(exp) for exp in self._terms)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        if not self._terms:
            return -1
        return max(exp[i] for exp in self._terms)

    def variables_used(self) -> tuple[str, ...]:
        used = [False] * self.ring.nvars
        for exp in self._terms:
            for i, e in enumerate(exp):
                if e > 0:
                    used[i] = True
        return tuple(v for v, u in zip(self.ring.variables, used) if u)

    def leading_term(self, key=grlex_key) -> tuple[Exponent, Fraction]:
        if not self._terms:
            raise PreconditionError("zero polynomial has no leading term")
        exp = max(self._terms, key=key)
        return exp, self._terms[exp]

    def coefficient_map(self, name: str) -> dict[int, "MultiPoly"]:
        """View the polynomial as univariate in `name`: degree -> coefficient.

        Coefficients live in the same ring with exponent zero in `name`.
        """
        i = self.ring.index(name)
        out: dict[int, dict[Exponent, Fraction]] = {}
        for exp, c in self._terms.items():
            d = exp[i]
            rest = exp[:i] + (0,) + exp[i + 1:]
            out.setdefault(d, {})[rest] = c
        return {d: MultiPoly(self.ring, t) for d, t in out.items()}

    # -- arithmetic --------------------------------------------------------------

    def _check_ring(self, other: "MultiPoly") -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"rings differ: {self.ring.variables} vs {other.ring.variables}")

    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            self._check_ring(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.ring, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for exp, c in o._terms.items():
            s = terms.get(exp, Fraction(0)) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return MultiPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                exp = mono_mul(e1, e2)
                s = terms.get(exp, Fraction(0)) + c1 * c2
                if s:
                    terms[exp] = s
                else:
                    terms.pop(exp, None)
        return MultiPoly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise PreconditionError("polynomial powers must be non-negative integers")
        result = MultiPoly.const(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> "MultiPoly":
        c = Fraction(c)
        return MultiPoly(self.ring, {e: v * c for e, v in self._terms.items()})

    def term_mul(self, exp: Exponent, coeff: Fraction) -> "MultiPoly":
        return MultiPoly(self.ring, {mono_mul(e, exp): c * coeff for e, c in self._terms.items()})

    # -- equality ---------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.ring, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"MultiPoly({poly_str(self)!r})"

    def sort_key(self) -> tuple:
        """Deterministic total order key; used to canonicalize factor lists."""
        terms = sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)
        return (self.total_degree(), len(terms),
                tuple((e, c.numerator, c.denominator) for e, c in terms))


# -- free-function operations ------------------------------------------------------


def poly_arith(p: MultiPoly, q: MultiPoly, op: str) -> MultiPoly:
    """Ring operation dispatch: op is one of '+', '-', '*'."""
    if op == "+":
        return p + q
    if op == "-":
        return p - q
    if op == "*":
        return p * q
    raise PreconditionError(f"unknown operation {op!r}")


def poly_exact_divide(p: MultiPoly, q: MultiPoly) -> MultiPoly | None:
    """Return r with q * r = p, or None when q does not divide p.

    Single-divisor division under graded lex order.  A single polynomial
    generates an ideal for which it is itself a reduction basis, so the
    remainder is canonical and p is divisible by q exactly when it vanishes.
    """
    p._check_ring(q)
    if q.is_zero():
        raise PreconditionError("division by the zero polynomial")
    quot: dict[Exponent, Fraction] = {}
    lexp, lc = q.leading_term()
    rem = p
    while not rem.is_zero():
        rexp, rc = rem.leading_term()
        m = mono_div(rexp, lexp)
        if m is None:
            return None
        c = rc / lc
        quot[m] = quot.get(m, Fraction(0)) + c
        rem = rem - q.term_mul(m, c)
    return MultiPoly(p.ring, quot)


def poly_derivative(p: MultiPoly, name: str) -> MultiPoly:
    i = p.ring.index(name)
    terms: dict[Exponent, Fraction] = {}
    for exp, c in p.terms.items():
        e = exp[i]
        if e == 0:
            continue
        new = exp[:i] + (e - 1,) + exp[i + 1:]
        terms[new] = terms.get(new, Fraction(0)) + c * e
    return MultiPoly(p.ring, terms)


def poly_eval(p: MultiPoly, point: Mapping[str, Scalar]) -> Fraction:
    """Evaluate at a rational point assigning every ring variable."""
    values = []
    for name in p.ring.variables:
        if name not in point:
            raise PreconditionError(f"missing value for variable {name!r}")
        values.append(Fraction(point[name]))
    total = Fraction(0)
    for exp, c in p.terms.items():
        term = c
        for v, e in zip(values, exp):
            if e:
                term *= v ** e
        total += term
    return total


# -- normalization -----------------------------------------------------------------


def rational_content(coeffs: Iterable[Fraction]) -> Fraction:
    """Positive rational c such that dividing by c leaves coprime integers."""
    nums = []
    dens = []
    for c in coeffs:
        nums.append(abs(c.numerator))
        dens.append(c.denominator)
    g = 0
    for n in nums:
        g = gcd(g, n)
    l = 1
    for d in dens:
        l = lcm(l, d)
    if g == 0:
        return Fraction(1)
    return Fraction(g, l)


def unit_normal(p: MultiPoly) -> tuple[Fraction, MultiPoly]:
    """Split p = unit * normal with normal integer-primitive, positive leading coefficient.

    The zero polynomial normalizes to (1, 0).
    """
    if p.is_zero():
        return Fraction(1), p
    c = rational_content(p.terms.values())
    _, lead = p.leading_term()
    if lead < 0:
        c = -c
    return c, p.scale(1 / c)


def normalized(p: MultiPoly) -> MultiPoly:
    return unit_normal(p)[1]


# -- gcd via subresultant pseudo-remainder sequences ---------------------------------


def _main_variable(p: MultiPoly, q: MultiPoly) -> str | None:
    """Last ring variable occurring in p or q, or None when both are constant."""
    for name in reversed(p.ring.variables):
        i = p.ring.index(name)
        if any(e[i] > 0 for e in p.terms) or any(e[i] > 0 for e in q.terms):
            return name
    return None


def _univar(p: MultiPoly, name: str) -> list[MultiPoly]:
    """Dense coefficient list of p in `name`, ascending degree."""
    cmap = p.coefficient_map(name)
    d = max(cmap) if cmap else 0
    zero = MultiPoly.zero(p.ring)
    return [cmap.get(i, zero) for i in range(d + 1)]


def _assemble(coeffs: list[MultiPoly], name: str, ring: RingSpec) -> MultiPoly:
    i = ring.index(name)
    terms: dict[Exponent, Fraction] = {}
    for d, c in enumerate(coeffs):
        for exp, v in c.terms.items():
            new = exp[:i] + (d,) + exp[i + 1:]
            terms[new] = terms.get(new, Fraction(0)) + v
    return MultiPoly(ring, terms)


def _trim(coeffs: list[MultiPoly]) -> list[MultiPoly]:
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def _content_pp(p: MultiPoly, name: str) -> tuple[MultiPoly, MultiPoly]:
    """Content and primitive part of p with respect to variable `name`.

    The content is the gcd of the coefficient polynomials; for constant
    coefficients it degrades to the rational content so the primitive part
    has coprime integer coefficients.
    """
    coeffs = [c for c in p.coefficient_map(name).values()]
    cont = MultiPoly.zero(p.ring)
    for c in coeffs:
        cont = poly_gcd(cont, c)
        if cont.is_unit():
            cont = MultiPoly.const(p.ring, 1)
            break
    pp = poly_exact_divide(p, cont)
    assert pp is not None
    rc = rational_content(pp.terms.values())
    if rc != 1:
        cont = cont.scale(rc)
        pp = pp.scale(1 / rc)
    return cont, pp


def _prem(A: list[MultiPoly], B: list[MultiPoly], ring: RingSpec) -> list[MultiPoly]:
    """Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A modulo B, dense lists."""
    dA = len(A) - 1
    dB = len(B) - 1
    lB = B[-1]
    R = list(A)
    e = dA - dB + 1
    while R and len(R) - 1 >= dB:
        lR = R[-1]
        dR = len(R) - 1
        R = [c * lB for c in R]
        shift = dR - dB
        for i, b in enumerate(B):
            R[i + shift] = R[i + shift] - lR * b
        R = _trim(R)
        e -= 1
    scale = lB ** e if e > 0 else MultiPoly.const(ring, 1)
    return [c * scale for c in R]


def _exact_div_list(A: list[MultiPoly], d: MultiPoly) -> list[MultiPoly]:
    out = []
    for c in A:
        q = poly_exact_divide(c, d)
        assert q is not None, "subresultant scaling failed to divide exactly"
        out.append(q)
    return out


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Greatest common divisor, unit-normal (primitive, positive leading coefficient)."""
    p._check_ring(q)
    if p.is_zero():
        return normalized(q)
    if q.is_zero():
        return normalized(p)
    name = _main_variable(p, q)
    if name is None:
        return MultiPoly.const(p.ring, 1)

    cont_p, pp_p = _content_pp(p, name)
    cont_q, pp_q = _content_pp(q, name)
    cont = poly_gcd(cont_p, cont_q)

    A = _univar(pp_p, name)
    B = _univar(pp_q, name)
    if len(A) < len(B):
        A, B = B, A
    ring = p.ring
    one = MultiPoly.const(ring, 1)
    g = one
    h = one
    while True:
        delta = (len(A) - 1) - (len(B) - 1)
        R = _prem(A, B, ring)
        if not R:
            result = _assemble(B, name, ring)
            break
        if len(R) == 1:
            result = one
            break
        beta = g * (h ** delta)
        A = B
        B = _exact_div_list(R, beta)
        g = A[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            num = g ** delta
            den = h ** (delta - 1)
            h = poly_exact_divide(num, den)
            assert h is not None
    if not result.is_unit():
        _, result = _content_pp(result, name)
    return normalized(cont * result)


# -- printing ------------------------------------------------------------------------


def _mono_str(ring: RingSpec, exp: Exponent) -> str:
    parts = []
    for name, e in zip(ring.variables, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_str(p: MultiPoly) -> str:
    """Canonical rendering, graded lex descending; re-parseable by the CLI grammar."""
    if p.is_zero():
        return "0"
    items = sorted(p.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)
    chunks = []
    for exp, c in items:
        mono = _mono_str(p.ring, exp)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        elif c == -1:
            body = f"-{mono}"
        else:
            body = f"{c}*{mono}"
        chunks.append(body)
    out = chunks[0]
    for body in chunks[1:]:
        if body.startswith("-"):
            out += " - " + body[1:]
        else:
            out += " + " + body
    return out
