import random

import pytest

from suspring import MultiPoly, RingSpec, tower_new


@pytest.fixture
def rng():
    return random.Random(20260816)


@pytest.fixture
def qx():
    return RingSpec(("x",))


@pytest.fixture
def qxy():
    return RingSpec(("x", "y"))


@pytest.fixture
def tower_x(qx):
    """S = Q[x][u,v]/(uv - x)."""
    return tower_new(qx, [MultiPoly.variable(qx, "x")])


@pytest.fixture
def tower_threefold(qxy):
    """S = Q[x,y][u,v]/(uv - ((x-1)x y + 1))."""
    x = MultiPoly.variable(qxy, "x")
    y = MultiPoly.variable(qxy, "y")
    one = MultiPoly.const(qxy, 1)
    return tower_new(qxy, [(x - one) * x * y + one])


@pytest.fixture
def tower_two_level(qx):
    """Height-2 tower over Q[x]: f1 = x, f2 = x + u1."""
    x = MultiPoly.variable(qx, "x")
    t1 = tower_new(qx, [x])
    f2 = t1.embed(x, 1) + t1.u_gen(1)
    return tower_new(qx, [x, f2])
