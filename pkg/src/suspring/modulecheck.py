"""Fitting ideals of finitely presented modules and the cyclicity test.

A module presented by coker(R^rows -> R^cols) is generated by k or fewer
elements exactly when Fitt_k, the ideal of (cols - k)-minors of the
presentation matrix, is the unit ideal.  Cyclicity is the case k = 1.
The verdict is only meaningful for a complete presentation: missing
relations can only enlarge the Fitting ideals, so partial data may prove
cyclicity but never refute it.  section5_report applies this to the graded
degree-1 component of a weighted threefold in A^5 whose only known relation
between its two generators is (y1 + 1, -y1); with just that row the report
stays inconclusive by design.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import PreconditionError
from .geometry import ideal_contains_one
from .polyring import MultiPoly, RingSpec, normalized, poly_str


@dataclass(frozen=True)
class PresentationMatrix:
    """rows x cols polynomial matrix presenting coker(R^rows -> R^cols)."""

    ring: RingSpec
    cols: int
    entries: tuple[tuple[MultiPoly, ...], ...]

    def __post_init__(self):
        if self.cols < 0:
            raise PreconditionError("negative number of generators")
        for row in self.entries:
            if len(row) != self.cols:
                raise PreconditionError("ragged presentation matrix")
            for e in row:
                if e.ring != self.ring:
                    raise PreconditionError("entry outside the presentation ring")

    @property
    def rows(self) -> int:
        return len(self.entries)

    def __str__(self):
        return "[" + ", ".join(
            "(" + ", ".join(poly_str(e) for e in row) + ")" for row in self.entries) + "]"


def _poly_det(rows: list[list[MultiPoly]], ring: RingSpec) -> MultiPoly:
    n = len(rows)
    if n == 0:
        return MultiPoly.const(ring, 1)
    if n == 1:
        return rows[0][0]
    total = MultiPoly.zero(ring)
    for j in range(n):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        cof = entry * _poly_det(minor, ring)
        total = total + cof if j % 2 == 0 else total - cof
    return total


def fitting_ideal(P: PresentationMatrix, k: int) -> list[MultiPoly]:
    """Generators of Fitt_k: the ideal of (cols - k)-minors.

    Empty minors (cols - k <= 0) give the unit ideal; minors larger than
    the matrix give the zero ideal, returned as an empty generator list.
    """
    if k < 0:
        raise PreconditionError("Fitting index must be non-negative")
    m = P.cols - k
    if m <= 0:
        return [MultiPoly.const(P.ring, 1)]
    if m > min(P.rows, P.cols):
        return []
    seen = set()
    gens: list[MultiPoly] = []
    for rsel in combinations(range(P.rows), m):
        for csel in combinations(range(P.cols), m):
            sub = [[P.entries[i][j] for j in csel] for i in rsel]
            d = _poly_det(sub, P.ring)
            if d.is_zero():
                continue
            d = normalized(d)
            if d not in seen:
                seen.add(d)
                gens.append(d)
    gens.sort(key=lambda g: g.sort_key())
    return gens


def can_be_generated_by(P: PresentationMatrix, k: int) -> bool:
    """Fitting criterion: generated by <= k elements iff Fitt_k = (1)."""
    gens = fitting_ideal(P, k)
    if not gens:
        return False
    return ideal_contains_one(gens)


# -- the weighted threefold report -------------------------------------------------------

INCONCLUSIVE = "inconclusive: presentation possibly incomplete"


@dataclass(frozen=True)
class Section5Report:
    ambient: RingSpec
    equations: tuple[MultiPoly, ...]
    weights: tuple[int, ...]
    generators: tuple[str, str]
    known_relation: tuple[MultiPoly, MultiPoly]
    presentation: PresentationMatrix
    cyclic: Optional[bool]
    verdict: str

    def to_json(self) -> dict:
        return {
            "equations": [poly_str(e) for e in self.equations],
            "weights": list(self.weights),
            "generators": list(self.generators),
            "known_relation": [poly_str(e) for e in self.known_relation],
            "cyclic": self.cyclic,
            "verdict": self.verdict,
        }


def section5_report(relations: Optional[list] = None) -> Section5Report:
    """Cyclicity analysis for the degree-1 component of the weighted threefold

        V(u1*v - y1*y2, u2*v - (y1+1)*y2, u1*(y1+1) - u2*y1) in A^5

    with multiplicative-group weights (1, 1, -1, 0, 0) on (u1, u2, v, y1, y2).
    The degree-1 component is generated over the base by u1 and u2 and is
    known to satisfy the relation (y1+1)*u1 - y1*u2 = 0.

    With relations=None only that single known row is used, and since a
    presentation might have further relations the verdict is inconclusive.
    A caller-supplied list of rows (pairs over Q[y1, y2]) is taken as the
    complete presentation and replaces the built-in row; the verdict is then
    the Fitting-criterion answer, with the empty list meaning a free module
    of rank 2, which is not cyclic.
    """
    ambient = RingSpec(("u1", "u2", "v", "y1", "y2"))
    u1 = MultiPoly.variable(ambient, "u1")
    u2 = MultiPoly.variable(ambient, "u2")
    v = MultiPoly.variable(ambient, "v")
    y1 = MultiPoly.variable(ambient, "y1")
    y2 = MultiPoly.variable(ambient, "y2")
    one = MultiPoly.const(ambient, 1)
    equations = (
        u1 * v - y1 * y2,
        u2 * v - (y1 + one) * y2,
        u1 * (y1 + one) - u2 * y1,
    )
    base = RingSpec(("y1", "y2"))
    b_y1 = MultiPoly.variable(base, "y1")
    b_one = MultiPoly.const(base, 1)
    known = (b_y1 + b_one, -b_y1)

    if relations is None:
        P = PresentationMatrix(base, 2, (known,))
        cyclic = None
        verdict = INCONCLUSIVE
    else:
        rows = []
        for row in relations:
            row = tuple(row)
            if len(row) != 2 or any(not isinstance(e, MultiPoly) for e in row):
                raise PreconditionError("each relation must be a pair of base polynomials")
            rows.append(row)
        P = PresentationMatrix(base, 2, tuple(rows))
        cyclic = can_be_generated_by(P, 1)
        verdict = "cyclic" if cyclic else "not cyclic"
    return Section5Report(
        ambient=ambient,
        equations=equations,
        weights=(1, 1, -1, 0, 0),
        generators=("u1", "u2"),
        known_relation=known,
        presentation=P,
        cyclic=cyclic,
        verdict=verdict,
    )
