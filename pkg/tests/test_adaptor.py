import random

import pytest

from unisum.adaptor import adaptor, adaptor_early_authenticate, adaptor_prove, adaptor_send
from unisum.field import F17, GOLDILOCKS, counting_ops
from unisum.piop import Transcript
from unisum.poly import Polynomial, mlex_eval, ntt_inverse, square_nonsquare_split, unex


def P(*c):
    return Polynomial(F17, list(c))


def test_prove_example():
    proof = adaptor_prove(F17, F17.array([1, 2, 3, 4]), [2, 3])
    l0, l1 = proof.levels
    assert ntt_inverse(l0.sq) == P(2, 16) and ntt_inverse(l0.no) == P(3, 16)
    assert [int(x) for x in l1.sq.values] == [3] and [int(x) for x in l1.no.values] == [5]
    assert ntt_inverse(unex(F17, l1.values)) == P(4, 16)
    assert proof.final == 9 == mlex_eval(F17, [1, 2, 3, 4], [2, 3])
    # the value-domain split agrees with the coefficient-domain one
    sq, no = square_nonsquare_split(P(11, 10, 8, 6), 2, 4)
    assert (sq, no) == (ntt_inverse(l0.sq), ntt_inverse(l0.no))


def test_zero_point_restricts_to_even_indices():
    v = F17.array(range(8))
    proof = adaptor_prove(F17, v, [0, 0, 0])
    assert proof.final == 0
    assert [int(x) for x in proof.levels[1].values] == [0, 2, 4, 6]


def run(F, v, z, s, seed=0):
    tr = Transcript(F, seed=seed)
    f0 = tr.instance_oracle("f0", unex(F, v), len(v) - 1)
    ok = adaptor(tr, f0, v, z, s)
    return ok, tr


def test_verify_example_and_counts():
    ok, tr = run(F17, F17.array([1, 2, 3, 4]), [2, 3], 9)
    assert ok
    assert tr.metrics.oracles == 4 and tr.metrics.field_elements == 0 and tr.metrics.queries == 7
    assert tr.metrics.rounds == 1
    for seed in range(20):
        ok, tr = run(F17, F17.array([1, 2, 3, 4]), [2, 3], 8, seed)
        assert not ok and tr.failures == ["adaptor: final value"]


@pytest.mark.parametrize("m", range(1, 9))
def test_honest_and_counts(m):
    F = GOLDILOCKS
    rng = random.Random(m)
    for trial in range(100 if m <= 4 else 10):
        v = F.random_array(rng, 1 << m)
        z = [rng.randrange(F.p) for _ in range(m)]
        proof = adaptor_prove(F, v, z)
        assert proof.final == mlex_eval(F, v, z)
        ok, tr = run(F, v, z, proof.final, trial)
        assert ok
        assert tr.metrics.oracles == 2 * m and tr.metrics.queries == 3 * m + 1


@pytest.mark.parametrize("m", range(1, 9))
def test_level_recombination_coefficient_identity(m):
    F = GOLDILOCKS
    rng = random.Random(50 + m)
    v = F.random_array(rng, 1 << m)
    z = [rng.randrange(F.p) for _ in range(m)]
    proof = adaptor_prove(F, v, z)
    w = F.primitive_root_of_unity(m)
    for lv in proof.levels:
        j = lv.level
        wj = pow(w, 1 << j, F.p)
        f = ntt_inverse(unex(F, lv.values) if j == 0 else
                        __import__("unisum").EvaluationTable(F, lv.values, wj))
        sq, no = ntt_inverse(lv.sq), ntt_inverse(lv.no)
        mj = m - j
        half = Polynomial.x(F) ** (1 << (mj - 1))
        rhs = (1 + half) * F.half * sq + (1 - half) * F.half * no.scale_variable(F.inv(wj))
        assert rhs == f
        assert (sq, no) == square_nonsquare_split(f, mj, wj)


def test_early_authenticate():
    v = F17.array([1, 2, 3, 4])
    z = [2, 3]
    tr = Transcript(F17)
    f0 = tr.instance_oracle("f0", unex(F17, v), 3)
    assert adaptor_early_authenticate(tr, f0, z, [], 2, 5) is f0
    proof = adaptor_prove(F17, v, z, levels=1)
    pairs = adaptor_send(tr, proof)
    auth = adaptor_early_authenticate(tr, f0, z, pairs, 2, 5)
    assert tr.verdict
    f1 = P(4, 16)
    assert all(tr.query(auth, x) == f1(x) for x in range(17))
    # composition: mlex of the residual values at the remaining point gives s
    assert mlex_eval(F17, proof.levels[0].sq.values * 0 + [int(f1(1)), int(f1(16))], [3]) == 9


def test_tampered_level_rejected_large_field():
    F = GOLDILOCKS
    rng = random.Random(8)
    m = 5
    from unisum.piop import Attack
    for trial in range(200):
        v = F.random_array(rng, 1 << m)
        z = [rng.randrange(F.p) for _ in range(m)]
        s = mlex_eval(F, v, z)
        tr = Transcript(F, seed=trial, attack=Attack("tamper-oracle", target=trial % (2 * m), seed=trial))
        f0 = tr.instance_oracle("f0", unex(F, v), (1 << m) - 1)
        assert not adaptor(tr, f0, v, z, s)


def test_prover_ops_linear():
    F = GOLDILOCKS
    rng = random.Random(0)
    ops = []
    for m in (10, 11, 12):
        v = F.random_array(rng, 1 << m)
        with counting_ops() as box:
            adaptor_prove(F, v, [rng.randrange(F.p) for _ in range(m)])
        ops.append(box[0])
    assert all(1.8 <= b / a <= 2.2 for a, b in zip(ops, ops[1:]))
