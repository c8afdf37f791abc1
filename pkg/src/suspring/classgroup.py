"""Divisor class groups of suspensions via Smith normal form.

For X = {uv = f} over a factorial base, the class group is the cokernel of
Z -> Z^s, 1 -> omega, where omega = (a_1, ..., a_s) lists the multiplicities
of the prime factorization f = p_1^a_1 ... p_s^a_s.  Each prime factor
contributes the divisor D_i = {u = p_i = 0}, and div_X(u) = sum a_i D_i, so
X is factorial exactly when s = 1 and a_1 = 1, that is when f is prime.

Smith normal form is computed by elementary row and column operations with
the transforming unimodular matrices tracked, so every result can be
certified by multiplying back.  Entries are arbitrary-precision integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import PreconditionError
from .factor import factor_multivariate, newton_indecomposable
from .polyring import MultiPoly, poly_str
from .susp import SuspTower


# -- integer matrices -------------------------------------------------------------------


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.entries:
            w = len(self.entries[0])
            if any(len(r) != w for r in self.entries):
                raise PreconditionError("ragged matrix")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(x) for x in r) for r in rows))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise PreconditionError("matrix dimensions do not match")
        return IntMatrix(tuple(
            tuple(sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                  for j in range(other.cols))
            for i in range(self.rows)))

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.entries) + "]"


def det(M: IntMatrix) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    if M.rows != M.cols:
        raise PreconditionError("determinant needs a square matrix")
    n = M.rows
    if n == 0:
        return 1
    a = [list(r) for r in M.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(M) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """U * M * V = D diagonal with d_i | d_(i+1), U and V unimodular.

    Pivots on the least nonzero absolute value; remainders after a clearing
    pass are strictly smaller than the pivot, so each pass terminates.  A
    failed divisibility d_i | d_(i+1) is repaired by folding column i+1 into
    column i and rediagonalizing; the (i,i) entry then properly divides the
    old one, so this terminates as well.
    """
    if not isinstance(M, IntMatrix):
        M = IntMatrix.from_rows(M)
    m, n = M.rows, M.cols
    A = [list(r) for r in M.entries]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(a, b):
        A[a], A[b] = A[b], A[a]
        U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for r in A:
            r[a], r[b] = r[b], r[a]
        for r in V:
            r[a], r[b] = r[b], r[a]

    def add_row(dst, src, q):
        # row_dst -= q * row_src
        A[dst] = [x - q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x - q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for r in A:
            r[dst] -= q * r[src]
        for r in V:
            r[dst] -= q * r[src]

    def neg_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]

    def diagonalize():
        for t in range(min(m, n)):
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] != 0 and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return
            if best[0] != t:
                swap_rows(t, best[0])
            if best[1] != t:
                swap_cols(t, best[1])
            while True:
                for i in range(m):
                    if i != t and A[i][t]:
                        add_row(i, t, A[i][t] // A[t][t])
                residue = next((i for i in range(m) if i != t and A[i][t]), None)
                if residue is not None:
                    swap_rows(t, residue)
                    continue
                for j in range(n):
                    if j != t and A[t][j]:
                        add_col(j, t, A[t][j] // A[t][t])
                residue = next((j for j in range(n) if j != t and A[t][j]), None)
                if residue is not None:
                    swap_cols(t, residue)
                    continue
                break

    while True:
        diagonalize()
        for i in range(min(m, n)):
            if A[i][i] < 0:
                neg_row(i)
        bad = next((i for i in range(min(m, n) - 1)
                    if A[i][i] != 0 and A[i + 1][i + 1] % A[i][i] != 0), None)
        if bad is None:
            break
        add_col(bad, bad + 1, -1)

    return (IntMatrix.from_rows(U), IntMatrix.from_rows(A), IntMatrix.from_rows(V))


# -- abelian groups ----------------------------------------------------------------------


@dataclass(frozen=True)
class AbelianGroupPresentation:
    """Z^free_rank plus cyclic parts Z/d_1 + ... with d_1 | d_2 | ..."""

    free_rank: int
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise PreconditionError("negative free rank")
        prev = None
        for d in self.invariant_factors:
            if d < 2:
                raise PreconditionError("invariant factors must be at least 2")
            if prev is not None and d % prev != 0:
                raise PreconditionError("invariant factors must form a divisibility chain")
            prev = d

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def order(self):
        """Group order, or None when infinite."""
        if self.free_rank > 0:
            return None
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def render(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " ⊕ ".join(parts) if parts else "0"

    def __str__(self):
        return self.render()


def cokernel(M) -> AbelianGroupPresentation:
    """The group Z^rows / (column span of M), via Smith normal form."""
    if not isinstance(M, IntMatrix):
        M = IntMatrix.from_rows(M)
    _, D, _ = smith_normal_form(M)
    diag = D.diagonal()
    nonzero = [d for d in diag if d != 0]
    return AbelianGroupPresentation(
        free_rank=M.rows - len(nonzero),
        invariant_factors=tuple(d for d in nonzero if d >= 2))


# -- divisors and the class group --------------------------------------------------------


@dataclass(frozen=True)
class FormalDivisor:
    """Integer combination of pairwise non-associated prime divisor labels."""

    terms: tuple[tuple[MultiPoly, int], ...]

    def render(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for p, a in self.terms:
            label = f"[{poly_str(p)}]"
            chunks.append(label if a == 1 else f"{a}*{label}")
        return " + ".join(chunks)

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class ClassGroupResult:
    group: AbelianGroupPresentation
    div_u: FormalDivisor
    omega: tuple[int, ...]
    torsion_free: bool
    absolute_irreducibility: tuple[str, ...]
    factors: tuple[tuple[MultiPoly, int], ...]

    def to_json(self) -> dict:
        return {
            "free_rank": self.group.free_rank,
            "invariant_factors": list(self.group.invariant_factors),
            "omega": list(self.omega),
            "torsion_free": self.torsion_free,
            "absolute_irreducibility": list(self.absolute_irreducibility),
        }


def class_group(t: SuspTower) -> ClassGroupResult:
    """Cl(X) = Z^s / <omega> for the level-1 suspension X of the tower.

    The prime labels come from factor_multivariate in canonical order, so
    omega is reproducible run to run.  torsion_free holds exactly when
    omega is primitive (gcd of the multiplicities is 1), equivalently when
    f is not a proper power.  Irreducibility over Q does not imply
    irreducibility over C, so each factor carries its one-sided Newton
    polygon verdict; prime counts over C may exceed s when a verdict is
    "unknown".
    """
    if t.height < 1:
        raise PreconditionError("empty tower")
    f = t.f_at(1)
    fact = factor_multivariate(f)
    factors = fact.factors
    if not factors:
        raise PreconditionError("f is a unit; not a suspension")
    omega = tuple(a for _, a in factors)
    column = IntMatrix.from_rows([[a] for a in omega])
    group = cokernel(column)
    div_u = FormalDivisor(tuple((p, a) for p, a in factors))
    g = 0
    for a in omega:
        g = gcd(g, a)
    verdicts = tuple(newton_indecomposable(p) for p, _ in factors)
    return ClassGroupResult(
        group=group,
        div_u=div_u,
        omega=omega,
        torsion_free=(g == 1),
        absolute_irreducibility=verdicts,
        factors=factors,
    )


@dataclass(frozen=True)
class ExactSequenceReport:
    """0 -> Z -> Z^s -> Cl(X) -> Cl(Y) -> 0 with the first map 1 -> omega."""

    terms: tuple[str, str, str, str, str, str]
    xi_of_1: tuple[int, ...]
    cl_X: str
    cl_Y: str

    def render(self) -> str:
        arrow = " → "
        return (arrow.join(self.terms)
                + f"   with ξ(1) = ({', '.join(map(str, self.xi_of_1))})")

    def to_json(self) -> dict:
        return {
            "terms": list(self.terms),
            "xi_of_1": list(self.xi_of_1),
            "cl_X": self.cl_X,
            "cl_Y": self.cl_Y,
        }


def exact_sequence_report(t: SuspTower) -> ExactSequenceReport:
    """Instantiate the divisor exact sequence for a polynomial base.

    The base ring is factorial, so Cl(Y) = 0 and the sequence pins Cl(X)
    down exactly; this is the only situation in which a group is asserted.
    """
    res = class_group(t)
    s = len(res.omega)
    zs = AbelianGroupPresentation(s, ()).render()
    return ExactSequenceReport(
        terms=("0", "Z", zs, res.group.render(), "0", "0"),
        xi_of_1=res.omega,
        cl_X=res.group.render(),
        cl_Y="0",
    )
