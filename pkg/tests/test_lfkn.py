import random

import pytest

from unisum.constraint import get_constraint
from unisum.field import F17, GOLDILOCKS
from unisum.lfkn import HypercubeInstance, lfkn_run, lfkn_sumcheck, round_polynomial
from unisum.piop import Attack, Transcript
from unisum.poly import mlex_eval
from unisum.protocols import brute_force_sum


def test_round_polynomial_example():
    g = get_constraint("identity")
    evals = round_polynomial(F17, [F17.array([1, 2, 3, 4])], g)
    # p(y) = 4 + 2y
    assert evals == [4, 6]
    assert sum(evals) % 17 == 10


def test_tampered_sum_rejected_at_first_check():
    g = get_constraint("identity")
    tr = Transcript(F17, seed=0)
    lfkn_run(tr, [F17.array([1, 2, 3, 4])], g, 11, rounds=1)
    assert tr.failures == ["lfkn: p(0)+p(1)=s"]


def test_zero_rounds_is_identity():
    g = get_constraint("square")
    t = [GOLDILOCKS.array([1, 2, 3, 4])]
    tr = Transcript(GOLDILOCKS)
    res = lfkn_run(tr, t, g, 30, rounds=0)
    assert res.claim == 30 and list(res.tables[0]) == [1, 2, 3, 4] and tr.metrics.rounds == 0


@pytest.mark.parametrize("gname", ["identity", "square", "product2"])
def test_honest_runs_accept(gname):
    g = get_constraint(gname)
    rng = random.Random(gname)
    for trial in range(100):
        m = 3 + trial % 4
        tables = [GOLDILOCKS.random_array(rng, 1 << m) for _ in range(g.arity)]
        s = brute_force_sum(GOLDILOCKS, g, tables)
        tr = Transcript(GOLDILOCKS, seed=trial)
        assert lfkn_sumcheck(tr, HypercubeInstance(GOLDILOCKS, tables, g, s))
        assert tr.metrics.field_elements == (g.degree + 1) * m
        assert tr.metrics.rounds == m


@pytest.mark.parametrize("m", range(1, 9))
def test_folded_tables_are_partial_mlex(m):
    F = GOLDILOCKS
    rng = random.Random(m)
    v = F.random_array(rng, 1 << m)
    g = get_constraint("identity")
    for k in range(m + 1):
        tr = Transcript(F, seed=k)
        res = lfkn_run(tr, [v], g, int(sum(v) % F.p), rounds=k)
        for beta in range(0, 1 << (m - k), max(1, (1 << (m - k)) // 16)):
            bits = [(beta >> b) & 1 for b in range(m - k)]
            assert res.tables[0][beta] == mlex_eval(F, v, res.challenges + bits)


def test_cheating_prover_rate_f17():
    # +1 on the sum with root planting; accepted only if a challenge hits a root
    g = get_constraint("square")
    m, d = 3, 2
    accepted = 0
    trials = 10_000
    rng = random.Random(0)
    tables = [F17.random_array(rng, 1 << m)]
    s = brute_force_sum(F17, g, tables)
    inst = HypercubeInstance(F17, tables, g, s)
    for seed in range(trials):
        tr = Transcript(F17, seed=seed, attack=Attack("tamper-sum", seed=seed))
        accepted += lfkn_sumcheck(tr, inst)
    rate = accepted / trials
    assert 0 < rate <= 3 * d * m / 17
