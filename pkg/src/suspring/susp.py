"""Suspension rings S = R[u,v]/(u*v - f) with exact decision procedures.

An element is kept in graded normal form: a finite map from an integer
degree i to a coefficient in the ring below, where degree i > 0 stands for
c*u^i, degree i < 0 for c*v^(-i), and degree 0 for a plain element of the
base.  No monomial ever contains both u and v; multiplication contracts
mixed products through u*v = f, so c*u^i times d*v^j contributes
c*d*f^min(i,j) in degree i - j.  Towers iterate the construction: the level
k relation u_k*v_k = f_k lives over the ring of level k - 1.

The decision procedures implement the arithmetic of these rings directly:

* divisibility by u: g = sum a_i u^i + sum b_j v^j is divisible by u exactly
  when f divides every b_j (including the degree-0 part), and the quotient
  is read off coefficientwise;
* primality of an element q with u not dividing q: for the minimal l with
  u^l * q in R[u], q is prime in S exactly when u^l * q is irreducible in
  R[u] (for f prime in R this is both sufficient and necessary);
* S is a unique factorization domain exactly when R is one and f is prime,
  and in that case factorization in S reduces to factorization in R[u]
  plus bookkeeping of the u powers introduced by the shift.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import (
    ConsistencyError,
    PreconditionError,
    RingMismatch,
    Unsupported,
    UnitF,
    ZeroF,
)
from .factor import Factorization, factor_multivariate
from .polyring import MultiPoly, RingSpec, poly_exact_divide, poly_str, unit_normal

Coeff = Union[MultiPoly, "SuspElem"]


# -- towers ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SuspLevel:
    f: Coeff
    u_name: str
    v_name: str


class SuspTower:
    """A finite tower of suspension extensions over a polynomial base ring."""

    __slots__ = ("base", "levels", "_sig")

    def __init__(self, base: RingSpec, levels: tuple[SuspLevel, ...]):
        self.base = base
        self.levels = levels
        self._sig = None

    @property
    def height(self) -> int:
        return len(self.levels)

    def signature(self) -> tuple:
        if self._sig is None:
            self._sig = (
                self.base.variables,
                tuple((lv.u_name, lv.v_name, _elem_data(lv.f)) for lv in self.levels),
            )
        return self._sig

    def __eq__(self, other):
        return isinstance(other, SuspTower) and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        rels = ", ".join(
            f"{lv.u_name}*{lv.v_name} = {_coeff_str(lv.f)}" for lv in self.levels)
        return f"SuspTower(Q{list(self.base.variables)}; {rels})"

    # -- constructors for elements ----------------------------------------------

    def f_at(self, level: int) -> Coeff:
        self._check_level(level)
        return self.levels[level - 1].f

    def coeff_zero(self, level: int) -> Coeff:
        """Zero of the coefficient ring of level `level` elements."""
        if level == 1:
            return MultiPoly.zero(self.base)
        return SuspElem(self, level - 1, {})

    def coeff_one(self, level: int) -> Coeff:
        if level == 1:
            return MultiPoly.const(self.base, 1)
        return self.embed(MultiPoly.const(self.base, 1), level - 1)

    def embed(self, x, level: int) -> "SuspElem":
        """Inject a constant, base polynomial, or lower element into `level`."""
        self._check_level(level)
        if isinstance(x, (int, Fraction)):
            x = MultiPoly.const(self.base, x)
        if isinstance(x, MultiPoly):
            if x.ring != self.base:
                raise RingMismatch("polynomial is not over the tower base ring")
            elem = SuspElem(self, 1, {0: x})
        elif isinstance(x, SuspElem):
            if x.tower != self:
                raise RingMismatch("element belongs to a different tower")
            elem = x
        else:
            raise PreconditionError(f"cannot embed {type(x).__name__}")
        while elem.level < level:
            elem = SuspElem(self, elem.level + 1, {0: elem})
        if elem.level != level:
            raise PreconditionError(f"element at level {elem.level} will not fit level {level}")
        return elem

    def u_gen(self, level: int) -> "SuspElem":
        self._check_level(level)
        return SuspElem(self, level, {1: self.coeff_one(level)})

    def v_gen(self, level: int) -> "SuspElem":
        self._check_level(level)
        return SuspElem(self, level, {-1: self.coeff_one(level)})

    def zero(self, level: int) -> "SuspElem":
        return SuspElem(self, level, {})

    def one(self, level: int) -> "SuspElem":
        return self.embed(1, level)

    def _check_level(self, level: int) -> None:
        if not 1 <= level <= self.height:
            raise PreconditionError(f"level {level} outside tower of height {self.height}")


def _elem_data(x) -> tuple:
    """Tower-free structural snapshot of an element, for signatures."""
    if isinstance(x, MultiPoly):
        return ("poly", x.ring.variables, tuple(sorted(x.terms.items())))
    return ("susp", x.level, tuple(sorted((i, _elem_data(c)) for i, c in x.coeffs.items())))


def _rebind(x, tower: SuspTower):
    if isinstance(x, MultiPoly):
        return x
    return SuspElem(tower, x.level, {i: _rebind(c, tower) for i, c in x.coeffs.items()})


def tower_new(base: RingSpec, fs: list, names: Optional[list[tuple[str, str]]] = None) -> SuspTower:
    """Build a suspension tower over Q[base] with relations u_k*v_k = f_k.

    Each f_k must be a nonzero non-unit of the ring below it: a base
    polynomial for k = 1, an element at level k - 1 for k > 1.  Coordinate
    names default to u,v for a single level and u1,v1,u2,v2,... otherwise.
    """
    if not fs:
        raise PreconditionError("a tower needs at least one relation")
    if names is None:
        if len(fs) == 1:
            names = [("u", "v")]
        else:
            names = [(f"u{k}", f"v{k}") for k in range(1, len(fs) + 1)]
    if len(names) != len(fs):
        raise PreconditionError("one (u, v) name pair per relation is required")
    taken = set(base.variables)
    for un, vn in names:
        for nm in (un, vn):
            if not nm.isidentifier():
                raise PreconditionError(f"bad coordinate name {nm!r}")
            if nm in taken:
                raise PreconditionError(f"coordinate name {nm!r} is not fresh")
            taken.add(nm)

    tower = None
    levels: tuple[SuspLevel, ...] = ()
    for k, f in enumerate(fs, start=1):
        if k == 1:
            if not isinstance(f, MultiPoly) or f.ring != base:
                raise PreconditionError("the first relation must be a base polynomial")
            if f.is_zero():
                raise ZeroF("u*v = 0 does not give a domain extension")
            if f.is_unit():
                raise UnitF("f invertible collapses u and v to units; not a suspension")
        else:
            if not isinstance(f, SuspElem) or f.level != k - 1:
                raise PreconditionError(f"relation {k} must be an element at level {k - 1}")
            # compare name-free structure: the rebind below discards the source
            # tower's coordinate names, so only base ring and relations must agree
            mine = (base.variables, tuple(_elem_data(lv.f) for lv in levels))
            theirs = (f.tower.base.variables,
                      tuple(_elem_data(lv.f) for lv in f.tower.levels))
            if mine != theirs:
                raise PreconditionError(f"relation {k} was built over a different tower")
            if f.is_zero():
                raise ZeroF("u*v = 0 does not give a domain extension")
            if f.is_unit():
                raise UnitF("f invertible collapses u and v to units; not a suspension")
        levels = levels + (SuspLevel(f, names[k - 1][0], names[k - 1][1]),)
        tower = SuspTower(base, levels)
    # rebind relation elements onto the finished tower so coefficient
    # arithmetic never sees a partial tower
    final = SuspTower(base, levels)
    final.levels = tuple(
        SuspLevel(_rebind(lv.f, final), lv.u_name, lv.v_name) for lv in levels)
    final._sig = None
    return final


def validate_domain(t: SuspTower) -> bool:
    """Every tower this module constructs presents an integral domain.

    The base is a polynomial ring over Q; adjoining u,v with u*v = f keeps
    the ring a domain whenever f is a nonzero non-unit, which tower_new
    enforces at every level.  Surfaced as an operation so callers can
    assert it.
    """
    for k in range(1, t.height + 1):
        f = t.f_at(k)
        if f.is_zero() or f.is_unit():
            return False
    return True


# -- elements -------------------------------------------------------------------------


class SuspElem:
    """Graded normal form element of a suspension tower level."""

    __slots__ = ("tower", "level", "coeffs", "_hash")

    def __init__(self, tower: SuspTower, level: int, coeffs: dict[int, Coeff]):
        if not 1 <= level <= tower.height:
            raise PreconditionError(f"level {level} outside tower of height {tower.height}")
        clean: dict[int, Coeff] = {}
        for i, c in coeffs.items():
            if level == 1:
                if not isinstance(c, MultiPoly):
                    raise PreconditionError("level-1 coefficients must be base polynomials")
            else:
                if not isinstance(c, SuspElem) or c.level != level - 1:
                    raise PreconditionError(
                        f"level-{level} coefficients must be level-{level - 1} elements")
            if not c.is_zero():
                clean[int(i)] = c
        self.tower = tower
        self.level = level
        self.coeffs = clean
        self._hash = None

    # -- inspection ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        """Units never involve u or v: they are exactly the units of the base."""
        if set(self.coeffs) - {0}:
            return False
        if not self.coeffs:
            return False
        return self.coeffs[0].is_unit()

    def u_depth(self) -> int:
        return max((i for i in self.coeffs if i > 0), default=0)

    def v_depth(self) -> int:
        return max((-i for i in self.coeffs if i < 0), default=0)

    def component(self, i: int) -> Coeff:
        return self.coeffs.get(i, self.tower.coeff_zero(self.level))

    def constant_value(self) -> Fraction:
        """The rational value of a constant element."""
        if self.is_zero():
            return Fraction(0)
        if set(self.coeffs) != {0}:
            raise PreconditionError("element is not constant")
        c = self.coeffs[0]
        if isinstance(c, MultiPoly):
            return c.constant_value()
        return c.constant_value()

    # -- arithmetic -----------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, SuspElem):
            if other.tower != self.tower or other.level != self.level:
                raise RingMismatch("suspension elements live at different levels or towers")
            return other
        if isinstance(other, (int, Fraction)):
            return self.tower.embed(other, self.level)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.coeffs)
        for i, c in o.coeffs.items():
            s = out[i] + c if i in out else c
            if s.is_zero():
                out.pop(i, None)
            else:
                out[i] = s
        return SuspElem(self.tower, self.level, out)

    __radd__ = __add__

    def __neg__(self):
        return SuspElem(self.tower, self.level, {i: -c for i, c in self.coeffs.items()})

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
        f = self.tower.f_at(self.level)
        fpow: dict[int, Coeff] = {0: self.tower.coeff_one(self.level)}

        def f_power(m: int) -> Coeff:
            while m not in fpow:
                k = max(fpow)
                fpow[k + 1] = fpow[k] * f
            return fpow[m]

        out: dict[int, Coeff] = {}
        for i, c in self.coeffs.items():
            for j, d in o.coeffs.items():
                term = c * d
                if i * j < 0:
                    term = term * f_power(min(abs(i), abs(j)))
                tgt = i + j
                s = out[tgt] + term if tgt in out else term
                if s.is_zero():
                    out.pop(tgt, None)
                else:
                    out[tgt] = s
        return SuspElem(self.tower, self.level, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise PreconditionError("powers must be non-negative integers")
        result = self.tower.one(self.level)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "SuspElem":
        c = Fraction(c)
        return SuspElem(self.tower, self.level,
                        {i: v.scale(c) for i, v in self.coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            try:
                other = self.tower.embed(other, self.level)
            except PreconditionError:
                return NotImplemented
        if not isinstance(other, SuspElem):
            return NotImplemented
        return (self.tower == other.tower and self.level == other.level
                and self.coeffs == other.coeffs)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.level, _elem_data(self)))
        return self._hash

    def __repr__(self):
        return f"SuspElem({susp_str(self)!r})"

    def sort_key(self) -> tuple:
        items = sorted(self.coeffs.items())
        return (self.level, len(items),
                tuple((i, c.sort_key()) for i, c in items))


def susp_mul(a: SuspElem, b: SuspElem) -> SuspElem:
    """Product in graded normal form; mixed u,v products contract via u*v = f."""
    return a * b


def susp_components(g: SuspElem) -> dict[int, SuspElem]:
    """Split into homogeneous components, degree -> single-degree element."""
    return {i: SuspElem(g.tower, g.level, {i: c}) for i, c in g.coeffs.items()}


def is_unit(g: SuspElem) -> bool:
    return g.is_unit()


# -- printing -------------------------------------------------------------------------


def _coeff_str(c: Coeff) -> str:
    return poly_str(c) if isinstance(c, MultiPoly) else susp_str(c)


def _needs_parens(s: str) -> bool:
    depth = 0
    for ch in s[1:]:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0:
            return True
    return False


def susp_str(g: SuspElem) -> str:
    """Canonical rendering, degree descending; re-parseable by the CLI grammar."""
    if g.is_zero():
        return "0"
    lv = g.tower.levels[g.level - 1]
    chunks = []
    for i in sorted(g.coeffs, reverse=True):
        c = g.coeffs[i]
        cstr = _coeff_str(c)
        if i == 0:
            chunks.append(cstr)
            continue
        name = lv.u_name if i > 0 else lv.v_name
        mono = name if abs(i) == 1 else f"{name}^{abs(i)}"
        if cstr == "1":
            chunks.append(mono)
        elif cstr == "-1":
            chunks.append(f"-{mono}")
        elif _needs_parens(cstr):
            chunks.append(f"({cstr})*{mono}")
        else:
            chunks.append(f"{cstr}*{mono}")
    out = chunks[0]
    for body in chunks[1:]:
        if body.startswith("-"):
            out += " - " + body[1:]
        else:
            out += " + " + body
    return out


# -- divisibility by the suspension coordinates ----------------------------------------


@dataclass(frozen=True)
class NotDivisible:
    """Failure witness: the v^j coefficient b_j that f does not divide."""

    j: int
    coefficient: Coeff


def _coeff_exact_div(a: Coeff, b: Coeff):
    if isinstance(a, MultiPoly):
        return poly_exact_divide(a, b)
    return susp_exact_divide(a, b)


def divides_u(g: SuspElem) -> Union[SuspElem, NotDivisible]:
    """Quotient g/u if it exists.

    u divides g = sum a_i u^i + sum b_j v^j exactly when f divides every
    b_j (j >= 0, counting the degree-0 part); then
    g/u = sum a_i u^(i-1) + sum (b_j/f) v^(j+1).
    """
    f = g.tower.f_at(g.level)
    out: dict[int, Coeff] = {}
    for j in sorted(-i for i in g.coeffs if i <= 0):
        b = g.coeffs[-j]
        q = _coeff_exact_div(b, f)
        if q is None:
            return NotDivisible(j, b)
        out[-(j + 1)] = q
    for i, a in g.coeffs.items():
        if i >= 1:
            out[i - 1] = a
    return SuspElem(g.tower, g.level, out)


def divides_v(g: SuspElem) -> Union[SuspElem, NotDivisible]:
    """Mirror of divides_u: v divides g exactly when f divides every a_i, i >= 0."""
    f = g.tower.f_at(g.level)
    out: dict[int, Coeff] = {}
    for i in sorted(i for i in g.coeffs if i >= 0):
        a = g.coeffs[i]
        q = _coeff_exact_div(a, f)
        if q is None:
            return NotDivisible(i, a)
        out[i + 1] = q
    for i, b in g.coeffs.items():
        if i <= -1:
            out[i + 1] = b
    return SuspElem(g.tower, g.level, out)


# -- the Laurent picture ----------------------------------------------------------------
# Sending v to f/u embeds S into R[u, 1/u]; homogeneous components stay
# separated, so the map is injective and exact division can be computed
# degreewise there and pulled back.


def _laurent(g: SuspElem) -> dict[int, Coeff]:
    f = g.tower.f_at(g.level)
    out: dict[int, Coeff] = {}
    fpow: dict[int, Coeff] = {0: g.tower.coeff_one(g.level)}

    def f_power(m: int) -> Coeff:
        while m not in fpow:
            k = max(fpow)
            fpow[k + 1] = fpow[k] * f
        return fpow[m]

    for i, c in g.coeffs.items():
        out[i] = c if i >= 0 else c * f_power(-i)
    return out


def _upoly_exact_div(A: dict[int, Coeff], B: dict[int, Coeff]):
    """Exact division of polynomials-in-u over the coefficient domain, or None."""
    rem = dict(A)
    degB = max(B)
    lcB = B[degB]
    quot: dict[int, Coeff] = {}
    while rem:
        d = max(rem)
        if d < degB:
            return None
        c = _coeff_exact_div(rem[d], lcB)
        if c is None:
            return None
        quot[d - degB] = c
        for j, bc in B.items():
            tgt = d - degB + j
            val = rem.get(tgt)
            nxt = (val - c * bc) if val is not None else -(c * bc)
            if nxt.is_zero():
                rem.pop(tgt, None)
            else:
                rem[tgt] = nxt
    return quot


def susp_exact_divide(a: SuspElem, b: SuspElem) -> Optional[SuspElem]:
    """Quotient a/b in the suspension ring, or None when b does not divide a."""
    if b.is_zero():
        raise PreconditionError("division by zero")
    if a.is_zero():
        return a
    if a.tower != b.tower or a.level != b.level:
        raise RingMismatch("operands live in different rings")
    La = _laurent(a)
    Lb = _laurent(b)
    alpha = min(La)
    beta = min(Lb)
    A0 = {i - alpha: c for i, c in La.items()}
    B0 = {i - beta: c for i, c in Lb.items()}
    W0 = _upoly_exact_div(A0, B0)
    if W0 is None:
        return None
    shift = alpha - beta
    f = a.tower.f_at(a.level)
    fpow: dict[int, Coeff] = {0: a.tower.coeff_one(a.level)}

    def f_power(m: int) -> Coeff:
        while m not in fpow:
            k = max(fpow)
            fpow[k + 1] = fpow[k] * f
        return fpow[m]

    coeffs: dict[int, Coeff] = {}
    for i, c in W0.items():
        deg = i + shift
        if deg >= 0:
            coeffs[deg] = c
        else:
            q = _coeff_exact_div(c, f_power(-deg))
            if q is None:
                return None
            coeffs[deg] = q
    result = SuspElem(a.tower, a.level, coeffs)
    assert result * b == a
    return result


# -- the shift into R[u] -----------------------------------------------------------------


def _ext_ring(t: SuspTower) -> RingSpec:
    return t.base.extend(t.levels[0].u_name)


def _to_shift_poly(g: SuspElem, l: int) -> MultiPoly:
    """u^l * g as an honest polynomial in Q[base, u]; needs l >= v_depth(g)."""
    assert g.level == 1
    ring = _ext_ring(g.tower)
    lau = _laurent(g)
    terms = {}
    for i, c in lau.items():
        d = i + l
        assert d >= 0
        for exp, val in c.terms.items():
            terms[exp + (d,)] = val
    return MultiPoly(ring, terms)


def _from_shift_poly(t: SuspTower, p: MultiPoly) -> SuspElem:
    """Read a polynomial of Q[base, u] back as a level-1 element."""
    coeffs: dict[int, MultiPoly] = {}
    for d, cp in p.coefficient_map(t.levels[0].u_name).items():
        terms = {}
        for exp, val in cp.terms.items():
            assert exp[-1] == 0
            terms[exp[:-1]] = val
        coeffs[d] = MultiPoly(t.base, terms)
    return SuspElem(t, 1, coeffs)


# -- primality ------------------------------------------------------------------------


def _f_irreducible(t: SuspTower) -> tuple[bool, Factorization]:
    fact = factor_multivariate(t.f_at(1))
    ok = len(fact.factors) == 1 and fact.factors[0][1] == 1
    return ok, fact


def certify_prime(q: SuspElem) -> bool:
    """Decide primality of a level-1 element; requires the relation f prime in R.

    q is prime exactly when it is u or v up to a unit, or u does not divide
    q and the shifted polynomial u^l * q (l minimal with u^l * q in R[u]) is
    irreducible in R[u].
    """
    if q.level != 1:
        raise Unsupported("primality certificates are implemented at level 1")
    if q.is_zero() or q.is_unit():
        raise PreconditionError("primality is about nonzero non-units")
    ok, _ = _f_irreducible(q.tower)
    if not ok:
        raise PreconditionError("certify_prime requires the relation f to be prime in R")
    r = divides_u(q)
    if isinstance(r, SuspElem):
        return r.is_unit()
    r = divides_v(q)
    if isinstance(r, SuspElem):
        return r.is_unit()
    l = q.v_depth()
    G = _to_shift_poly(q, l)
    fact = factor_multivariate(G)
    return len(fact.factors) == 1 and fact.factors[0][1] == 1


@dataclass(frozen=True)
class PrimalityReport:
    """u, v, and f are prime together or not at all; witness explains a failure."""

    level: int
    u_prime: bool
    v_prime: bool
    f_prime: bool
    witness: object = None


def is_prime_uvf(t: SuspTower, level: int = 1) -> PrimalityReport:
    """Equivalence of primality of u_k, v_k, and f_k at the given tower level."""
    t._check_level(level)
    if level == 1:
        ok, fact = _f_irreducible(t)
        return PrimalityReport(1, ok, ok, ok, None if ok else fact)
    if level == 2:
        ok1, fact1 = _f_irreducible(t)
        if not ok1:
            raise Unsupported(
                "level-2 primality needs the level-1 relation prime; it factors as "
                f"{fact1}")
        f2 = t.f_at(2)
        ok = certify_prime(f2)
        witness = None if ok else _split_witness(f2)
        return PrimalityReport(2, ok, ok, ok, witness)
    raise Unsupported("primality is decided for tower levels 1 and 2 only")


def _split_witness(q: SuspElem) -> tuple[SuspElem, SuspElem]:
    """A nontrivial factorization (d, q/d) of a non-prime level-1 element."""
    _, counter = _decompose(q, 0)
    for prime in counter:
        cof = susp_exact_divide(q, prime)
        assert cof is not None
        if not cof.is_unit():
            return (prime, cof)
    raise ConsistencyError("element was prime after all")


def is_irreducible_base_elem(a: MultiPoly, t: SuspTower) -> bool:
    """Irreducibility in S of a base-ring element (level 1).

    a stays irreducible in S exactly when it is irreducible in R and not
    associated to f; an associate of f splits as a unit times u*v.
    """
    if a.ring != t.base:
        raise RingMismatch("element is not in the tower base ring")
    if a.is_zero() or a.is_unit():
        raise PreconditionError("irreducibility is about nonzero non-units")
    fact = factor_multivariate(a)
    if len(fact.factors) != 1 or fact.factors[0][1] != 1:
        return False
    _, fn = unit_normal(t.f_at(1))
    return fact.factors[0][0] != fn


# -- factorization ---------------------------------------------------------------------


@dataclass(frozen=True)
class SuspFactorization:
    unit: SuspElem
    factors: tuple[tuple[SuspElem, int], ...]

    def expand(self) -> SuspElem:
        out = self.unit
        for q, m in self.factors:
            out = out * q ** m
        return out

    def __str__(self):
        parts = [str(self.unit.constant_value())]
        for q, m in self.factors:
            parts.append(f"({susp_str(q)})" + (f"^{m}" if m > 1 else ""))
        return " * ".join(parts)


@dataclass(frozen=True)
class NotUFD:
    """S is not factorial; the witness factors f nontrivially in R."""

    witness: Factorization

    def __str__(self):
        return f"not a UFD: f = {self.witness}"


def _normalize_prime(w: SuspElem) -> tuple[Fraction, SuspElem]:
    """Scale so the highest graded component is unit-normal in the base."""
    top = max(w.coeffs)
    lam, _ = unit_normal(w.coeffs[top])
    return lam, w.scale(1 / lam)


def _decompose(g: SuspElem, depth: int) -> tuple[Fraction, Counter]:
    """Prime factor multiset of a nonzero level-1 element; f must be prime."""
    assert depth < 8, "factor descent failed to terminate"
    t = g.tower
    u = t.u_gen(1)
    v = t.v_gen(1)
    unit = Fraction(1)
    primes: Counter = Counter()
    w = g
    while True:
        q = divides_u(w)
        if isinstance(q, NotDivisible):
            break
        primes[u] += 1
        w = q
    while True:
        q = divides_v(w)
        if isinstance(q, NotDivisible):
            break
        primes[v] += 1
        w = q
    if w.is_unit():
        return unit * w.constant_value(), primes
    if set(w.coeffs) == {0}:
        unit2, extra = _base_factors(t, w.coeffs[0])
        return unit * unit2, primes + extra
    l = w.v_depth()
    G = _to_shift_poly(w, l)
    fact = factor_multivariate(G)
    if len(fact.factors) == 1 and fact.factors[0][1] == 1:
        # the shift is irreducible in R[u], so w itself is prime
        lam, wn = _normalize_prime(w)
        primes[wn] += 1
        return unit * lam, primes
    unit *= fact.unit
    u_name = t.levels[0].u_name
    ext = _ext_ring(t)
    u_var = MultiPoly.variable(ext, u_name)
    for q, m in fact.factors:
        if q == u_var:
            primes[u] += m
            continue
        if q.degree_in(u_name) == 0:
            base = MultiPoly(t.base, {exp[:-1]: c for exp, c in q.terms.items()})
            unit2, extra = _base_factors(t, base)
            unit *= unit2 ** m
            for key, cnt in extra.items():
                primes[key] += cnt * m
            continue
        s = _from_shift_poly(t, q)
        unit2, extra = _decompose(s, depth + 1)
        unit *= unit2 ** m
        for key, cnt in extra.items():
            primes[key] += cnt * m
    assert primes[u] >= l, "u bookkeeping went negative"
    primes[u] -= l
    if primes[u] == 0:
        del primes[u]
    return unit, primes


def _base_factors(t: SuspTower, b: MultiPoly) -> tuple[Fraction, Counter]:
    """Factor a base-ring element inside S: associates of f split into u*v."""
    u = t.u_gen(1)
    v = t.v_gen(1)
    f_unit, f_norm = unit_normal(t.f_at(1))
    fact = factor_multivariate(b)
    unit = fact.unit
    primes: Counter = Counter()
    for p, a in fact.factors:
        if p == f_norm:
            primes[u] += a
            primes[v] += a
            unit *= (1 / f_unit) ** a
        else:
            primes[t.embed(p, 1)] += a
    return unit, primes


def factor_susp(g: SuspElem) -> Union[SuspFactorization, NotUFD]:
    """Factor a level-1 element into primes, or report that S is not factorial."""
    if g.level != 1:
        raise Unsupported("factorization is implemented at level 1")
    if g.is_zero() or g.is_unit():
        raise PreconditionError("factorization is about nonzero non-units")
    ok, fact_f = _f_irreducible(g.tower)
    if not ok:
        return NotUFD(fact_f)
    unit, counter = _decompose(g, 0)
    factors = tuple(sorted(
        ((q, m) for q, m in counter.items() if m > 0),
        key=lambda t2: t2[0].sort_key()))
    unit_elem = g.tower.embed(unit, 1)
    result = SuspFactorization(unit_elem, factors)
    assert result.expand() == g, "factorization failed to multiply back"
    return result


# -- reconstruction from matching fractions ----------------------------------------------


def reconstruct_from_fractions(g: SuspElem, h: SuspElem, d: int) -> SuspElem:
    """The element phi with phi = g/u^d = h/v^d, given g in R[u], h in R[v].

    The two fraction presentations force the coefficient identities
    a = b_(2d-1) * f^d and b = a_(2d-1) * f^d between the constant terms and
    the top relevant coefficients, so phi can be peeled off one layer per
    step: phi = phi' + b_(2d-1) v^d + a_(2d-1) u^d with phi' presented by the
    same data at depth d - 1.  No division is ever needed.
    """
    if g.tower != h.tower or g.level != h.level:
        raise RingMismatch("operands live in different rings")
    if d < 0:
        raise PreconditionError("the denominator exponent must be non-negative")
    if any(i < 0 for i in g.coeffs):
        raise PreconditionError("g must lie in R[u] (no negative degrees)")
    if any(i > 0 for i in h.coeffs):
        raise PreconditionError("h must lie in R[v] (no positive degrees)")
    t = g.tower
    lvl = g.level
    vd = t.v_gen(lvl) ** d
    ud = t.u_gen(lvl) ** d
    if vd * g != ud * h:
        raise ConsistencyError("v^d * g and u^d * h disagree; no common element exists")

    zero = t.coeff_zero(lvl)
    G = {i: c for i, c in g.coeffs.items()}
    H = {-i: c for i, c in h.coeffs.items()}

    def peel(Gc: dict[int, Coeff], Hc: dict[int, Coeff], k: int) -> dict[int, Coeff]:
        if k == 0:
            assert all(i == 0 for i in Gc) and all(j == 0 for j in Hc)
            val = Gc.get(0, zero)
            out: dict[int, Coeff] = {}
            if not val.is_zero():
                out[0] = val
            return out
        Gp = {i - 1: c for i, c in Gc.items() if i >= 1}
        Hp = {j - 1: c for j, c in Hc.items() if j >= 1}
        a_top = Gp.pop(2 * k - 1, zero)
        b_top = Hp.pop(2 * k - 1, zero)
        out = peel(Gp, Hp, k - 1)
        if not a_top.is_zero():
            out[k] = out.get(k, zero) + a_top
        if not b_top.is_zero():
            out[-k] = out.get(-k, zero) + b_top
        return out

    phi = SuspElem(t, lvl, peel(G, H, d))
    assert t.u_gen(lvl) ** d * phi == g and t.v_gen(lvl) ** d * phi == h
    return phi
