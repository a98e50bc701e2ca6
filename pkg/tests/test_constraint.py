import random

import pytest

from unisum.constraint import BUILTIN, UnsupportedFieldError, get_constraint, line_components, with_arity
from unisum.field import F17, GOLDILOCKS, Field


def test_eval_examples():
    assert get_constraint("identity").eval(F17, 7) == 7
    assert get_constraint("square").eval(F17, 4) == 16
    assert get_constraint("product2").eval(F17, 3, 5) == 15
    assert get_constraint("r1cs-row").eval(F17, 3, 5, 16) == 16
    with pytest.raises(ValueError):
        get_constraint("product2").eval(F17, 1)
    with pytest.raises(ValueError):
        get_constraint("nope")


def test_line_components_examples():
    assert [int(c) for c in line_components(get_constraint("identity"), F17, [5], [3])] == [5, 3]
    # (2 + 3t)^2 = 4 + 12t + 9t^2
    assert [int(c) for c in line_components(get_constraint("square"), F17, [2], [3])] == [4, 12, 9]
    g = get_constraint("cube")
    assert [int(c) for c in line_components(g, F17, [6], [0])] == [g.eval(F17, 6), 0, 0, 0]


def test_small_field_rejected():
    tiny = Field(3, 1, 2, "f3")
    with pytest.raises(UnsupportedFieldError):
        line_components(get_constraint("cube"), tiny, [1], [1])


@pytest.mark.parametrize("name", sorted(BUILTIN))
def test_line_restriction_random(name):
    F = GOLDILOCKS
    g = BUILTIN[name]
    rng = random.Random(hash(name) & 0xffff)
    for _ in range(10):
        a = [rng.randrange(F.p) for _ in range(g.arity)]
        b = [rng.randrange(F.p) for _ in range(g.arity)]
        comps = [int(c) for c in line_components(g, F, a, b)]
        for _ in range(20):
            t = rng.randrange(F.p)
            direct = g.eval(F, *[(x + t * y) % F.p for x, y in zip(a, b)])
            assert direct == sum(c * pow(t, j, F.p) for j, c in enumerate(comps)) % F.p


@pytest.mark.parametrize("name", sorted(BUILTIN))
def test_components_have_degree_at_most_d(name):
    # restrict g_j to a random line in (a, b)-space and check that d+2 samples
    # fit a polynomial of degree <= d (the (d+1)-th finite difference vanishes)
    F = GOLDILOCKS
    g = BUILTIN[name]
    d = g.degree
    rng = random.Random(9)
    base = [rng.randrange(F.p) for _ in range(2 * g.arity)]
    dirn = [rng.randrange(F.p) for _ in range(2 * g.arity)]
    for j in range(d + 1):
        vals = []
        for s in range(d + 2):
            pt = [(x + s * y) % F.p for x, y in zip(base, dirn)]
            vals.append(int(line_components(g, F, pt[:g.arity], pt[g.arity:])[j]))
        for _ in range(d + 1):
            vals = [(b - a) % F.p for a, b in zip(vals, vals[1:])]
        assert vals == [0]


def test_vectorized_matches_scalar():
    F = GOLDILOCKS
    g = get_constraint("r1cs-row")
    rng = random.Random(1)
    a = [F.random_array(rng, 8) for _ in range(3)]
    b = [F.random_array(rng, 8) for _ in range(3)]
    comps = line_components(g, F, a, b)
    for i in range(8):
        single = line_components(g, F, [x[i] for x in a], [y[i] for y in b])
        assert [int(c[i]) for c in comps] == [int(c) for c in single]


def test_with_arity_adds_linear_inputs():
    g = with_arity(get_constraint("square"), 3)
    assert (g.arity, g.degree) == (3, 2)
    assert g.eval(F17, 3, 4, 5) == (9 + 4 + 5) % 17
    assert with_arity(get_constraint("square"), 1) is get_constraint("square")
