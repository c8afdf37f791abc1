"""Smith normal form, abelian group presentations, divisor class groups."""

import pytest

from suspring import (
    AbelianGroupPresentation,
    IntMatrix,
    MultiPoly,
    PreconditionError,
    class_group,
    cokernel,
    det,
    exact_sequence_report,
    is_prime_uvf,
    smith_normal_form,
    tower_new,
)
from helpers import int_det, is_proper_power, lattice_quotient_order


def _certify_snf(M: IntMatrix):
    U, D, V = smith_normal_form(M)
    assert U.mul(M).mul(V).entries == D.entries
    assert abs(det(U)) == 1
    assert abs(det(V)) == 1
    diag = D.diagonal()
    for i in range(D.rows):
        for j in range(D.cols):
            if i != j:
                assert D.entries[i][j] == 0
    seen_zero = False
    for i, d in enumerate(diag):
        assert d >= 0
        if d == 0:
            seen_zero = True
        else:
            assert not seen_zero, "nonzero after zero on the diagonal"
            if i > 0 and diag[i - 1] != 0:
                assert d % diag[i - 1] == 0
    return U, D, V


# -- pinned Smith forms -----------------------------------------------------------------


def test_snf_single_entry():
    M = IntMatrix.from_rows([[2]])
    _, D, _ = _certify_snf(M)
    assert D.diagonal() == (2,)


def test_snf_coprime_column():
    M = IntMatrix.from_rows([[2], [3]])
    _, D, _ = _certify_snf(M)
    assert D.diagonal() == (1,)
    assert D.entries == ((1,), (0,))


def test_snf_common_factor_column():
    M = IntMatrix.from_rows([[2], [2]])
    _, D, _ = _certify_snf(M)
    assert D.entries == ((2,), (0,))


def test_int_matrix_validation():
    with pytest.raises(PreconditionError):
        IntMatrix.from_rows([[1, 2], [3]])


def test_det_pinned():
    assert det(IntMatrix.from_rows([[2, 1], [1, 1]])) == 1
    assert det(IntMatrix.identity(4)) == 1
    assert det(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1


# -- randomized certification ----------------------------------------------------------------


def test_snf_random_certification(rng):
    for _ in range(200):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        M = IntMatrix.from_rows(
            [[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)])
        _certify_snf(M)


def test_snf_det_preserved_up_to_sign(rng):
    for _ in range(60):
        n = rng.randint(1, 4)
        M = IntMatrix.from_rows(
            [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)])
        _, D, _ = smith_normal_form(M)
        prod = 1
        for d in D.diagonal():
            prod *= d
        assert prod == abs(det(M))


def test_quotient_order_matches_lattice_enumeration(rng):
    checked = 0
    while checked < 40:
        s = rng.randint(1, 3)
        rows = [[rng.randint(-4, 4) for _ in range(s)] for _ in range(s)]
        d = abs(int_det(rows))
        if d == 0 or d > 24:
            continue
        group = cokernel(IntMatrix.from_rows(rows))
        assert group.order() == lattice_quotient_order(rows) == d
        checked += 1


# -- group presentations -------------------------------------------------------------------


def test_presentation_validation():
    with pytest.raises(PreconditionError):
        AbelianGroupPresentation(0, (1,))
    with pytest.raises(PreconditionError):
        AbelianGroupPresentation(0, (2, 3))
    with pytest.raises(PreconditionError):
        AbelianGroupPresentation(-1, ())


def test_presentation_render_and_order():
    assert AbelianGroupPresentation(0, ()).render() == "0"
    assert AbelianGroupPresentation(1, ()).render() == "Z"
    assert AbelianGroupPresentation(2, (2, 6)).render() == "Z^2 ⊕ Z/2 ⊕ Z/6"
    assert AbelianGroupPresentation(0, (2, 4)).order() == 8
    assert AbelianGroupPresentation(1, ()).order() is None
    assert AbelianGroupPresentation(0, ()).is_trivial()


# -- class groups of suspensions ---------------------------------------------------------------


def _tower(ring_vars, build):
    from suspring import RingSpec
    ring = RingSpec(ring_vars)
    xs = [MultiPoly.variable(ring, v) for v in ring_vars]
    return tower_new(ring, [build(*xs)])


def test_class_group_pinned_trivial():
    t = _tower(("x",), lambda x: x)
    res = class_group(t)
    assert res.group.is_trivial()
    assert res.group.render() == "0"
    assert res.omega == (1,)
    assert res.torsion_free
    assert res.div_u.render() == "[x]"


def test_class_group_pinned_square():
    t = _tower(("x",), lambda x: x ** 2)
    res = class_group(t)
    assert res.group.render() == "Z/2"
    assert res.group.invariant_factors == (2,)
    assert not res.torsion_free
    assert res.omega == (2,)
    assert res.div_u.render() == "2*[x]"


def test_class_group_pinned_xy():
    t = _tower(("x", "y"), lambda x, y: x * y)
    res = class_group(t)
    assert res.group.render() == "Z"
    assert res.group.free_rank == 1
    assert res.omega == (1, 1)
    assert res.torsion_free


def test_class_group_pinned_x2y3():
    t = _tower(("x", "y"), lambda x, y: x ** 2 * y ** 3)
    res = class_group(t)
    assert res.group.render() == "Z"
    assert res.torsion_free  # gcd(2, 3) = 1
    assert res.omega == (3, 2)  # canonical factor order puts y first
    assert res.div_u.render() == "3*[y] + 2*[x]"


def test_class_group_pinned_x2y2():
    t = _tower(("x", "y"), lambda x, y: x ** 2 * y ** 2)
    res = class_group(t)
    assert res.group.render() == "Z ⊕ Z/2"
    assert res.group.free_rank == 1
    assert res.group.invariant_factors == (2,)
    assert not res.torsion_free


def test_class_group_json_schema():
    t = _tower(("x", "y"), lambda x, y: x ** 2 * y ** 3)
    data = class_group(t).to_json()
    assert set(data) == {"free_rank", "invariant_factors", "omega",
                         "torsion_free", "absolute_irreducibility"}
    assert data["omega"] == [3, 2]
    assert data["invariant_factors"] == []
    assert len(data["absolute_irreducibility"]) == 2


def test_class_group_trivial_iff_f_prime():
    pools = [
        (("x",), lambda x: x),
        (("x",), lambda x: x ** 2),
        (("x",), lambda x: x + 1),
        (("x", "y"), lambda x, y: x * y),
        (("x", "y"), lambda x, y: (x - 1) * x * y + 1),
        (("x", "y"), lambda x, y: x ** 2 * y ** 3),
        (("x", "y"), lambda x, y: x ** 2 * y ** 2),
    ]
    for ring_vars, build in pools:
        t = _tower(ring_vars, build)
        assert class_group(t).group.is_trivial() == is_prime_uvf(t, 1).f_prime


def test_torsion_free_iff_not_proper_power():
    pools = [
        (("x",), lambda x: x),
        (("x",), lambda x: x ** 2),
        (("x",), lambda x: x ** 3),
        (("x",), lambda x: (x + 1) * x),
        (("x", "y"), lambda x, y: x * y),
        (("x", "y"), lambda x, y: x ** 2 * y ** 2),
        (("x", "y"), lambda x, y: x ** 2 * y ** 3),
        (("x", "y"), lambda x, y: ((x + 1) * y) ** 2),
        (("x", "y"), lambda x, y: (x - 1) * x * y + 1),
    ]
    for ring_vars, build in pools:
        t = _tower(ring_vars, build)
        f = t.f_at(1)
        assert class_group(t).torsion_free == (not is_proper_power(f)), str(f)


# -- exact sequences -----------------------------------------------------------------------------


def test_exact_sequence_pinned_xy():
    t = _tower(("x", "y"), lambda x, y: x * y)
    rep = exact_sequence_report(t)
    assert rep.terms == ("0", "Z", "Z^2", "Z", "0", "0")
    assert rep.xi_of_1 == (1, 1)
    assert "ξ(1) = (1, 1)" in rep.render()
    assert rep.cl_Y == "0"


def test_exact_sequence_pinned_prime():
    t = _tower(("x",), lambda x: x)
    rep = exact_sequence_report(t)
    assert rep.terms == ("0", "Z", "Z", "0", "0", "0")
    assert rep.xi_of_1 == (1,)


def test_exact_sequence_pinned_square():
    t = _tower(("x",), lambda x: x ** 2)
    rep = exact_sequence_report(t)
    assert rep.terms == ("0", "Z", "Z", "Z/2", "0", "0")
    assert rep.xi_of_1 == (2,)
    data = rep.to_json()
    assert set(data) == {"terms", "xi_of_1", "cl_X", "cl_Y"}
    assert data["cl_X"] == "Z/2"
