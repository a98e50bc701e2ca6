import random

import pytest

from unisum.field import F17, GOLDILOCKS, UnsupportedDomainError, batch_inverse, counting_ops, \
    primitive_root_of_unity, tally


def test_root_of_unity_examples():
    assert primitive_root_of_unity(F17, 0) == 1
    assert primitive_root_of_unity(F17, 2) == 4
    with pytest.raises(UnsupportedDomainError):
        primitive_root_of_unity(F17, 5)
    with pytest.raises(UnsupportedDomainError):
        GOLDILOCKS.primitive_root_of_unity(33)


@pytest.mark.parametrize("F", [F17, GOLDILOCKS])
def test_roots_have_exact_order_and_nest(F):
    for m in range(F.two_adicity + 1):
        w = F.primitive_root_of_unity(m)
        assert pow(w, 1 << m, F.p) == 1
        if m:
            assert pow(w, 1 << (m - 1), F.p) != 1
        if m < F.two_adicity:
            assert F.primitive_root_of_unity(m + 1) ** 2 % F.p == w
        if m <= 12:
            assert len(set(F.subgroup(w, 1 << m).tolist())) == 1 << m


def test_exhaustive_order_search_f17():
    # order-4 elements of F17 found by brute force; the derived root is one of them
    order4 = [x for x in range(1, 17) if pow(x, 4, 17) == 1 and pow(x, 2, 17) != 1]
    assert sorted(order4) == [4, 13]
    assert F17.primitive_root_of_unity(2) in order4


def test_batch_inverse_examples():
    assert batch_inverse(F17, [1]) == [1]
    assert batch_inverse(F17, [4]) == [13]
    assert batch_inverse(F17, [2, 3]) == [9, 6]
    with pytest.raises(ZeroDivisionError, match="element 1"):
        batch_inverse(F17, [3, 0, 5])


@pytest.mark.parametrize("F", [F17, GOLDILOCKS])
def test_batch_inverse_random(F):
    rng = random.Random(5)
    for n in [1, 2, 3, 7, 64, 100]:
        xs = [rng.randrange(1, F.p) for _ in range(n)]
        inv = batch_inverse(F, xs)
        assert all(x * y % F.p == 1 for x, y in zip(xs, inv))


def test_powers_and_scalars():
    F = GOLDILOCKS
    x = 123456789
    pw = F.powers(x, 37)
    assert [int(v) for v in pw] == [pow(x, i, F.p) for i in range(37)]
    assert F.half * 2 % F.p == 1
    assert F17.div(3, 5) * 5 % 17 == 3
    with pytest.raises(ZeroDivisionError):
        F17.inv(0)


def test_fermat():
    for a in range(1, 17):
        assert pow(a, 16, 17) == 1


def test_op_counter_scoping():
    tally(5)  # outside any counter: ignored
    with counting_ops() as box:
        tally(3)
        tally(4)
    assert box[0] == 7
