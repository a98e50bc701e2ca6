import random

import pytest

from unisum.field import F17, GOLDILOCKS
from unisum.gemini import gemini, gemini_prove
from unisum.piop import Transcript
from unisum.poly import Polynomial, even_odd_split, mlin_eval


def test_prove_example(example_poly):
    proof = gemini_prove(example_poly, [2, 3])
    assert proof.folds[0] == Polynomial(F17, [14, 3])
    assert proof.constant == 6 == mlin_eval(example_poly, [2, 3])
    assert gemini_prove(example_poly, [0, 0]).constant == 11
    f = Polynomial(F17, [4, 9])
    assert gemini_prove(f, [5]).constant == (4 + 5 * 9) % 17


def run(f, z, s, seed=0):
    tr = Transcript(f.field, seed=seed)
    o = tr.instance_oracle("f", f, (1 << len(z)) - 1)
    return gemini(tr, o, f, z, s), tr


def test_verify_example(example_poly):
    for seed in range(10):
        ok, tr = run(example_poly, [2, 3], 6, seed)
        assert ok
        r = int(tr.entries[0]["challenge"]["value"])
        collide = r * r % 17 in (r, 17 - r)  # r^2 reuses a point on this tiny field
        assert tr.metrics.queries == (4 if collide else 5) and tr.metrics.oracles == 1
        ok, tr = run(example_poly, [2, 3], 7, seed)
        assert not ok and tr.failures == ["gemini: final value"]


@pytest.mark.parametrize("m", range(1, 11))
def test_final_constant_and_counts(m):
    F = GOLDILOCKS
    rng = random.Random(m)
    for trial in range(100 if m <= 5 else 5):
        f = Polynomial(F, [rng.randrange(F.p) for _ in range(1 << m)])
        z = [rng.randrange(F.p) for _ in range(m)]
        proof = gemini_prove(f, z)
        assert proof.constant == mlin_eval(f, z)
        for i, fi in enumerate(proof.folds):
            assert fi.degree <= (1 << (m - i - 1)) - 1
    ok, tr = run(f, z, proof.constant, 3)
    assert ok
    assert tr.metrics.oracles == m - 1 and tr.metrics.queries == 3 * m - 1


def test_mlin_split_identity():
    F = GOLDILOCKS
    rng = random.Random(4)
    for m in range(1, 8):
        f = Polynomial(F, [rng.randrange(F.p) for _ in range(1 << m)])
        x = [rng.randrange(F.p) for _ in range(m)]
        ev, od = even_odd_split(f)
        assert mlin_eval(f, x) == (mlin_eval(ev, x[1:]) + x[0] * mlin_eval(od, x[1:])) % F.p
