"""Smoothness of hypersurfaces and suspensions via Groebner bases.

The Jacobian criterion reduces smoothness of {f = 0} over C to emptiness of
the common zero set of f and its partials, which by the weak Nullstellensatz
is 1 being in the ideal they generate.  A Groebner basis computed over Q
stays one over C, so deciding 1 in the ideal over Q settles the complex
question; the Q-versus-C caveat therefore never applies to smoothness, only
to counting irreducible factors.

Buchberger's algorithm is run under graded reverse lexicographic order with
the coprime-leading-term and chain criteria for pair pruning, and a hard
pair budget so pathological inputs fail loudly instead of hanging.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .classgroup import ClassGroupResult, class_group
from .errors import ConsistencyError, PreconditionError, ResourceLimit
from .polyring import (
    MultiPoly,
    grevlex_key,
    mono_div,
    mono_lcm,
    poly_derivative,
)
from .susp import SuspTower, is_prime_uvf

DEFAULT_PAIR_BUDGET = 100_000

ORDER_NAME = "grevlex"


def _lt(p: MultiPoly):
    return p.leading_term(grevlex_key)


def reduce_poly(p: MultiPoly, gens) -> MultiPoly:
    """Full normal form of p modulo gens: no remainder term is reducible."""
    rem = MultiPoly.zero(p.ring)
    cur = p
    while not cur.is_zero():
        exp, c = _lt(cur)
        for g in gens:
            gexp, gc = _lt(g)
            q = mono_div(exp, gexp)
            if q is not None:
                cur = cur - g.term_mul(q, c / gc)
                break
        else:
            head = MultiPoly(p.ring, {exp: c})
            rem = rem + head
            cur = cur - head
    return rem


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    fe, fc = _lt(f)
    ge, gc = _lt(g)
    lcm = mono_lcm(fe, ge)
    return (f.term_mul(mono_div(lcm, fe), 1 / fc)
            - g.term_mul(mono_div(lcm, ge), 1 / gc))


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple[MultiPoly, ...]
    order: str = ORDER_NAME

    def contains_one(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_unit()


def certify_groebner(gb: GroebnerBasis) -> bool:
    """Exhaustive Buchberger criterion: every S-polynomial reduces to zero."""
    gens = gb.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not reduce_poly(s_polynomial(gens[i], gens[j]), gens).is_zero():
                return False
    return True


def _interreduce(basis: list[MultiPoly]) -> tuple[MultiPoly, ...]:
    # minimal: drop generators whose leading term another one divides
    ordered = sorted(basis, key=lambda g: grevlex_key(_lt(g)[0]))
    minimal: list[MultiPoly] = []
    for g in ordered:
        ge = _lt(g)[0]
        if any(mono_div(ge, _lt(h)[0]) is not None for h in minimal):
            continue
        minimal.append(g)
    # tail-reduce against the others and make monic
    reduced = list(minimal)
    for idx in range(len(reduced)):
        others = reduced[:idx] + reduced[idx + 1:]
        r = reduce_poly(reduced[idx], others) if others else reduced[idx]
        _, lc = _lt(r)
        reduced[idx] = r.scale(1 / lc)
    reduced.sort(key=lambda g: grevlex_key(_lt(g)[0]), reverse=True)
    return tuple(reduced)


def groebner(gens, pair_budget: Optional[int] = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens, grevlex order.

    The pair budget defaults to SUSP_PAIR_BUDGET from the environment, then
    to DEFAULT_PAIR_BUDGET; exhausting it raises ResourceLimit.
    """
    if pair_budget is None:
        try:
            pair_budget = int(os.environ.get("SUSP_PAIR_BUDGET", DEFAULT_PAIR_BUDGET))
        except ValueError:
            raise PreconditionError("SUSP_PAIR_BUDGET must be an integer")
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise PreconditionError("groebner needs at least one nonzero generator")
    ring = gens[0].ring
    if any(g.ring != ring for g in gens):
        raise PreconditionError("generators live in different rings")

    basis = list(gens)
    pending = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    spent = 0
    while pending:
        pair = min(
            pending,
            key=lambda ij: (grevlex_key(mono_lcm(_lt(basis[ij[0]])[0], _lt(basis[ij[1]])[0])),
                            ij))
        pending.discard(pair)
        spent += 1
        if spent > pair_budget:
            raise ResourceLimit(f"pair budget {pair_budget} exhausted")
        i, j = pair
        ei = _lt(basis[i])[0]
        ej = _lt(basis[j])[0]
        lcm = mono_lcm(ei, ej)
        if all(min(a, b) == 0 for a, b in zip(ei, ej)):
            continue  # coprime leading terms
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if mono_div(lcm, _lt(basis[k])[0]) is None:
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                skip = True  # chain criterion
                break
        if skip:
            continue
        r = reduce_poly(s_polynomial(basis[i], basis[j]), basis)
        if not r.is_zero():
            basis.append(r)
            new = len(basis) - 1
            pending.update((k, new) for k in range(new))
    return GroebnerBasis(_interreduce(basis))


def ideal_contains_one(gens, pair_budget: Optional[int] = None) -> bool:
    """1 in the ideal, equivalently the generators have no common zero over C."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return False
    if any(g.is_unit() for g in gens):
        return True
    return groebner(gens, pair_budget).contains_one()


# -- smoothness -----------------------------------------------------------------------


@dataclass(frozen=True)
class SmoothnessResult:
    smooth: bool
    basis: GroebnerBasis

    def __str__(self):
        return "Smooth" if self.smooth else "Singular"


def hypersurface_smooth(f: MultiPoly, pair_budget: Optional[int] = None) -> SmoothnessResult:
    """Jacobian criterion for {f = 0}: smooth iff 1 in (f, all partials of f)."""
    if f.is_zero() or f.is_constant():
        raise PreconditionError("smoothness is about non-constant hypersurfaces")
    gens = [f] + [poly_derivative(f, v) for v in f.ring.variables]
    gb = groebner([g for g in gens if not g.is_zero()], pair_budget)
    return SmoothnessResult(gb.contains_one(), gb)


@dataclass(frozen=True)
class SuspensionReport:
    f_prime: bool
    absolute_irreducibility: tuple[str, ...]
    hypersurface_smooth: bool
    suspension_smooth: bool
    factorial: bool
    class_group: ClassGroupResult
    verdict: str
    witness: Optional[GroebnerBasis]

    def to_json(self) -> dict:
        return {
            "f_prime": self.f_prime,
            "hypersurface_smooth": self.hypersurface_smooth,
            "suspension_smooth": self.suspension_smooth,
            "factorial": self.factorial,
            "class_group": self.class_group.to_json(),
        }


def _lift_to(p: MultiPoly, ring) -> MultiPoly:
    pad = ring.nvars - p.ring.nvars
    return MultiPoly(ring, {exp + (0,) * pad: c for exp, c in p.terms.items()})


def suspension_report(t: SuspTower, pair_budget: Optional[int] = None) -> SuspensionReport:
    """Primality, smoothness, and class group of the level-1 suspension.

    Smoothness of X = {uv - f = 0} is computed twice: once through the
    simplification to 1 in (f, partials of f), and once directly from the
    singular-locus ideal (uv - f, v, u, partials of f) in the full ambient
    ring.  The two routes must agree; a mismatch is an internal error, not
    a mathematical verdict.
    """
    prime_rep = is_prime_uvf(t, 1)
    cg = class_group(t)
    if prime_rep.f_prime != cg.group.is_trivial():
        raise ConsistencyError("primality and class-group routes disagree")
    f = t.f_at(1)

    hyper = hypersurface_smooth(f, pair_budget)

    lv = t.levels[0]
    ext = t.base.extend(lv.u_name, lv.v_name)
    u = MultiPoly.variable(ext, lv.u_name)
    v = MultiPoly.variable(ext, lv.v_name)
    f_ext = _lift_to(f, ext)
    direct_gens = [u * v - f_ext, v, u]
    direct_gens += [_lift_to(poly_derivative(f, name), ext) for name in t.base.variables]
    direct = ideal_contains_one([g for g in direct_gens if not g.is_zero()], pair_budget)
    if direct != hyper.smooth:
        raise ConsistencyError("the two smoothness routes disagree")

    factorial = prime_rep.f_prime
    if factorial and hyper.smooth:
        verdict = ("smooth affine factorial suspension "
                   "(flexibility holds for such suspensions; not checked computationally)")
    else:
        missing = []
        if not factorial:
            missing.append("factorial")
        if not hyper.smooth:
            missing.append("smooth")
        verdict = "not a " + " ".join(missing) + " suspension"
    return SuspensionReport(
        f_prime=prime_rep.f_prime,
        absolute_irreducibility=cg.absolute_irreducibility,
        hypersurface_smooth=hyper.smooth,
        suspension_smooth=direct,
        factorial=factorial,
        class_group=cg,
        verdict=verdict,
        witness=None if hyper.smooth else hyper.basis,
    )
