import random
from collections import Counter

import pytest

from unisum.field import F17, GOLDILOCKS
from unisum.piop import Attack, Transcript, VirtualOracle, challenge_value, plant_roots
from unisum.poly import Polynomial, interpolate_at


def test_challenges_deterministic():
    a, b = Transcript(GOLDILOCKS, seed=5), Transcript(GOLDILOCKS, seed=5)
    assert [a.challenge() for _ in range(4)] == [b.challenge() for _ in range(4)]
    assert Transcript(GOLDILOCKS, seed=6).challenge() != Transcript(GOLDILOCKS, seed=5).challenge()


def test_nonzero_domain():
    tr = Transcript(F17, seed=0)
    assert all(1 <= tr.challenge(nonzero=True) <= 16 for _ in range(200))


def test_challenge_distribution_f17():
    counts = Counter(challenge_value(F17, 77, i) for i in range(10_000))
    expected = 10_000 / 17
    sigma = (10_000 * (1 / 17) * (16 / 17)) ** 0.5
    assert set(counts) == set(range(17))
    assert all(abs(c - expected) <= 5 * sigma for c in counts.values())
    chi2 = sum((c - expected) ** 2 / expected for c in counts.values())
    assert chi2 < 40  # 16 degrees of freedom, p ~ 1e-3


def test_query_real_and_virtual(example_poly):
    tr = Transcript(F17)
    o = tr.send_oracle("f", example_poly, 3)
    assert tr.query(o, 4) == 2
    B = tr.send_oracle("B", Polynomial(F17, [1, 1]), 1)
    v = VirtualOracle.linear("A", F17, [1, 0], [o, B])
    assert all(tr.query(v, x) == example_poly(x) for x in range(17))
    hp = [o, B]
    virt = VirtualOracle.linear("h'", F17, F17.powers(0, 2), hp)
    assert tr.query(virt, 7) == example_poly(7)


def test_query_accounting_distinct_pairs(example_poly):
    tr = Transcript(F17)
    o = tr.send_oracle("f", example_poly, 3)
    tr.query(o, 2)
    tr.query(o, 2)
    tr.query(o, 3)
    v = VirtualOracle.linear("2f", F17, [2], [o])
    tr.query(v, 3)  # same component and point: not a new query
    assert tr.metrics.queries == 2
    assert tr.metrics.oracles == 1 and tr.metrics.field_elements == 0


def test_virtual_equals_explicit_combination():
    F = GOLDILOCKS
    rng = random.Random(3)
    polys = [Polynomial(F, [rng.randrange(F.p) for _ in range(9)]) for _ in range(3)]
    wts = [rng.randrange(F.p) for _ in range(3)]
    tr = Transcript(F)
    os = [tr.send_oracle(f"p{i}", p, 8) for i, p in enumerate(polys)]
    v = VirtualOracle.linear("v", F, wts, os, shift=lambda x: 5 * x % F.p)
    explicit = sum((w * p for w, p in zip(wts, polys)), Polynomial.zero(F)) + Polynomial(F, [0, 5])
    r = tr.send_oracle("r", explicit, 8)
    for _ in range(100):
        x = rng.randrange(F.p)
        assert tr.query(v, x) == tr.query(r, x)


def test_verdict_and_json():
    tr = Transcript(F17, seed=3)
    tr.send_scalars([1, 2, 3])
    tr.challenge("r")
    tr.check(True, "ok")
    tr.check(False, "bad")
    tr.finish()
    d = tr.to_dict(protocol="x", m=1, d=1, q=1)
    assert d["verdict"] == "reject" and d["failed_checks"] == ["bad"]
    assert d["rounds"][0]["prover"]["scalars"] == ["1", "2", "3"]
    assert tr.to_json() == tr.to_json()


def test_tamper_message_and_oracle(example_poly):
    tr = Transcript(F17, attack=Attack("tamper-message", target=1))
    assert tr.send_scalars([5, 5, 5]) == [5, 6, 5]
    tr = Transcript(F17, attack=Attack("tamper-oracle", target=0, seed=1))
    o = tr.send_oracle("f", example_poly, 3)
    assert any(tr.query(o, x) != example_poly(x) for x in range(17))
    with pytest.raises(ValueError):
        Attack("bogus")


def test_plant_roots_passes_check():
    F = F17
    rng = random.Random(1)
    honest = [3, 5, 7]  # p(y) = 3 + 2y, degree bound 2 at abscissae 0..2
    cheat = plant_roots(F, rng, honest, range(3), [1, 1, 0], 9)
    assert (cheat[0] + cheat[1]) % 17 == 9
    # the cheating polynomial agrees with the honest one at exactly the planted roots
    agree = [y for y in range(17) if interpolate_at(F, range(3), cheat, y) == interpolate_at(F, range(3), honest, y)]
    assert len(agree) == 2
