"""Composed univariate sumcheck protocols and their expected costs.

Every runner takes a Transcript and a SumInstance for the claim
sum_i g(f_1(w^i), ..., f_q(w^i)) = s over the order-2^m subgroup and returns
the verdict. Metrics end up in tr.metrics.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from math import ceil, log2

import numpy as np

from .adaptor import adaptor_early_authenticate, adaptor_prove, adaptor_send, adaptor_verify
from .aurora import aurora_prove, aurora_send, aurora_verify, identity_prove, identity_verify
from .constraint import Constraint
from .dgm import dgm_run
from .direct import (effective_schedule, fold_point, kappa_run, quotient_prove, quotient_send,
                     quotient_verify, sqrt_schedule)
from .field import Field
from .gemini import gemini_prove, gemini_send, gemini_verify, gemini_verify_early
from .lfkn import lfkn_run
from .piop import Transcript, VirtualOracle
from .poly import EvaluationTable, Polynomial, kappa_eval, mlin_eval, ntt_inverse


@dataclass
class SumInstance:
    field: Field
    g: Constraint
    tables: list  # values of f_i on <w>, index i <-> w^i
    s: int
    polys: list = dc_field(default=None, repr=False)  # coefficient form, part of the witness

    def __post_init__(self):
        assert len(self.tables) == self.g.arity
        if self.polys is None:
            self.polys = [ntt_inverse(t) for t in self.eval_tables()]

    @property
    def m(self) -> int:
        return len(self.tables[0]).bit_length() - 1

    @property
    def n(self) -> int:
        return len(self.tables[0])

    @property
    def q(self) -> int:
        return len(self.tables)

    def eval_tables(self) -> list:
        w = self.field.primitive_root_of_unity(self.m)
        return [EvaluationTable(self.field, t, w) for t in self.tables]

    def oracles(self, tr: Transcript) -> list:
        return [tr.instance_oracle(f"f{i + 1}", t, self.n - 1) for i, t in enumerate(self.eval_tables())]


def brute_force_sum(field: Field, g: Constraint, tables) -> int:
    return int(np.sum(g.evaluator(*[t % field.p for t in tables]) % field.p) % field.p)


def random_instance(field: Field, m: int, g: Constraint, rng: random.Random) -> SumInstance:
    tables = [field.random_array(rng, 1 << m) for _ in range(g.arity)]
    return SumInstance(field, g, tables, brute_force_sum(field, g, tables))


def log_m(m: int) -> int:
    return ceil(log2(m)) if m > 1 else 0


def _reduced_rounds(m: int) -> int:
    if m < 2:
        raise ValueError("round-reduced compositions need m >= 2")
    return log_m(m)


def _claimed(tr: Transcript, inst: SumInstance) -> int:
    return (inst.s + 1) % inst.field.p if tr.cheating else inst.s


def _batch(tr: Transcript, inst: SumInstance, fs, ys):
    """Verifier sends t; returns weights, virtual oracle and batched claim."""
    p = inst.field.p
    t = tr.challenge("batch t")
    wts = [int(x) for x in inst.field.powers(t, inst.q)]
    fstar = VirtualOracle.linear("f*", inst.field, wts, fs)
    return wts, fstar, sum(a * b for a, b in zip(wts, ys)) % p


def _combine(field: Field, wts, arrays):
    return sum(w * a for w, a in zip(wts, arrays)) % field.p


# composed pipelines


def run_aurora(tr: Transcript, inst: SumInstance, degree_check: bool = False) -> bool:
    fs = inst.oracles(tr)
    with tr.prover():
        proof = aurora_prove(inst.field, inst.eval_tables(), inst.g, _claimed(tr, inst), inst.n,
                             degree_check, strict=False)
    oracles = aurora_send(tr, proof, inst.n, inst.g.degree)
    aurora_verify(tr, fs, inst.g, _claimed(tr, inst), inst.n, oracles)
    return tr.finish()


def run_lfkn_adaptor(tr: Transcript, inst: SumInstance) -> bool:
    field, g, m = inst.field, inst.g, inst.m
    fs = inst.oracles(tr)
    res = lfkn_run(tr, inst.tables, g, _claimed(tr, inst))
    tr.final_round()
    ys = tr.send_scalars([int(t[0]) for t in res.tables], "claimed evaluations")
    tr.check(g.eval(field, *ys) == res.claim, "g(y) = s'")
    wts, fstar, sstar = _batch(tr, inst, fs, ys)
    with tr.prover():
        proof = adaptor_prove(field, _combine(field, wts, inst.tables), res.challenges)
    pairs = adaptor_send(tr, proof)
    adaptor_verify(tr, fstar, res.challenges, sstar, pairs, m)
    return tr.finish()


def run_lfkn_adaptor_aurora(tr: Transcript, inst: SumInstance) -> bool:
    field, g, m = inst.field, inst.g, inst.m
    p = field.p
    k = _reduced_rounds(m)
    fs = inst.oracles(tr)
    res = lfkn_run(tr, inst.tables, g, _claimed(tr, inst), rounds=k)
    tr.final_round()
    gen = field.primitive_root_of_unity(m - k)
    Ft = [EvaluationTable(field, t, gen) for t in res.tables]
    Fo = [tr.send_oracle(f"F{i + 1}", t, t.size - 1) for i, t in enumerate(Ft)]
    t = tr.challenge("batch t")
    wts = [int(x) for x in field.powers(t, inst.q)]
    fstar = VirtualOracle.linear("f*", field, wts, fs)
    with tr.prover():
        proof = adaptor_prove(field, _combine(field, wts, inst.tables), res.challenges, levels=k)
    pairs = adaptor_send(tr, proof)
    r = tr.challenge("adaptor r", nonzero=True)
    auth = adaptor_early_authenticate(tr, fstar, res.challenges, pairs, m, r)
    link = sum(w * tr.query(o, r) for w, o in zip(wts, Fo)) % p
    tr.check(tr.query(auth, r) == link, "residual oracles match the authenticated fold")
    with tr.prover():
        aproof = aurora_prove(field, Ft, g, res.claim, 1 << (m - k), strict=False)
    aor = aurora_send(tr, aproof, 1 << (m - k), g.degree)
    aurora_verify(tr, Fo, g, res.claim, 1 << (m - k), aor)
    return tr.finish()


def _dgm_tail_gemini(tr, inst, fs, res):
    field, g = inst.field, inst.g
    ys = tr.send_scalars([int(v[0]) for v in res.values], "claimed evaluations")
    s_final = tr.query(res.h, 0)
    tr.check(g.eval(field, *ys) == s_final, "g(y) = h final")
    wts, fstar, sstar = _batch(tr, inst, fs, ys)
    with tr.prover():
        fpoly = Polynomial(field, _combine(field, wts, [f.padded(inst.n) for f in inst.polys]))
        proof = gemini_prove(fpoly, res.challenges)
    go = gemini_send(tr, proof, inst.m)
    gemini_verify(tr, fstar, res.challenges, sstar, go)


def run_dgm_gemini(tr: Transcript, inst: SumInstance) -> bool:
    fs = inst.oracles(tr)
    res = dgm_run(tr, inst.tables, inst.g, inst.m, sum_claim=_claimed(tr, inst))
    tr.final_round()
    _dgm_tail_gemini(tr, inst, fs, res)
    return tr.finish()


def run_dgm_gemini_aurora(tr: Transcript, inst: SumInstance) -> bool:
    field, g, m = inst.field, inst.g, inst.m
    p = field.p
    k = _reduced_rounds(m)
    fs = inst.oracles(tr)
    res = dgm_run(tr, inst.tables, g, k, sum_claim=_claimed(tr, inst))
    tr.final_round()
    n2 = 1 << (m - k)
    gen = field.primitive_root_of_unity(m - k)
    Ft = [EvaluationTable(field, v, gen) for v in res.values]
    Fo = [tr.send_oracle(f"F{i + 1}", t, n2 - 1) for i, t in enumerate(Ft)]
    t = tr.challenge("batch t")
    wts = [int(x) for x in field.powers(t, inst.q)]
    fstar = VirtualOracle.linear("f*", field, wts, fs)
    with tr.prover():
        fpoly = Polynomial(field, _combine(field, wts, [f.padded(inst.n) for f in inst.polys]))
        proof = gemini_prove(fpoly, res.challenges, m=m)
    go = gemini_send(tr, proof, m)
    r = tr.challenge("gemini r", nonzero=True)
    last = gemini_verify_early(tr, fstar, res.challenges, go, r)
    r2 = r * r % p
    link = sum(w * tr.query(o, r2) for w, o in zip(wts, Fo)) % p
    tr.check(tr.query(last, r2) == link, "residual oracles match the Gemini fold")
    with tr.prover():
        h_poly = ntt_inverse(EvaluationTable(field, res.h_values, gen))
        quot, _ = identity_prove(field, Ft, g, h_poly, n2)
    qo = tr.send_oracle("identity.quotient", quot, max(g.degree * (n2 - 1) - n2, 0))
    identity_verify(tr, Fo, g, res.h, n2, qo)
    return tr.finish()


def run_direct_gemini(tr: Transcript, inst: SumInstance) -> bool:
    """Direct rounds, then the mlin claims at the challenge vector, then Gemini."""
    field, g = inst.field, inst.g
    fs = inst.oracles(tr)
    st = kappa_run(tr, inst.tables, g, _claimed(tr, inst), [1] * inst.m)
    tr.final_round()
    with tr.prover():
        ys = [mlin_eval(f, st.challenges) for f in inst.polys]
    ys = tr.send_scalars(ys, "claimed evaluations")
    tr.check(g.eval(field, *ys) == st.claim, "g(y) = s'")
    wts, fstar, sstar = _batch(tr, inst, fs, ys)
    with tr.prover():
        fpoly = Polynomial(field, _combine(field, wts, [f.padded(inst.n) for f in inst.polys]))
        proof = gemini_prove(fpoly, st.challenges)
    go = gemini_send(tr, proof, inst.m)
    gemini_verify(tr, fstar, st.challenges, sstar, go)
    return tr.finish()


def run_direct_adaptor(tr: Transcript, inst: SumInstance) -> bool:
    """Direct rounds, then the mlex claims at the fold point, then the adaptor."""
    field, g = inst.field, inst.g
    fs = inst.oracles(tr)
    st = kappa_run(tr, inst.tables, g, _claimed(tr, inst), [1] * inst.m)
    tr.final_round()
    ys = tr.send_scalars([int(t[0]) for t in st.tables], "claimed evaluations")
    tr.check(g.eval(field, *ys) == st.claim, "g(y) = s'")
    z = fold_point(field, st.challenges)
    wts, fstar, sstar = _batch(tr, inst, fs, ys)
    with tr.prover():
        proof = adaptor_prove(field, _combine(field, wts, inst.tables), z)
    pairs = adaptor_send(tr, proof)
    adaptor_verify(tr, fstar, z, sstar, pairs, inst.m)
    return tr.finish()


def run_direct_kappa(tr: Transcript, inst: SumInstance, schedule=None) -> bool:
    """Mixed-radix rounds, then kappa evaluation claims via the quotient adaptor."""
    field, g, m = inst.field, inst.g, inst.m
    schedule = effective_schedule(sqrt_schedule(m) if schedule is None else schedule, m)
    fs = inst.oracles(tr)
    st = kappa_run(tr, inst.tables, g, _claimed(tr, inst), schedule)
    tr.final_round()
    with tr.prover():
        ys = [kappa_eval(f, schedule, st.challenges) for f in inst.polys]
    ys = tr.send_scalars(ys, "claimed evaluations")
    tr.check(g.eval(field, *ys) == st.claim, "g(y) = s'")
    wts, fstar, sstar = _batch(tr, inst, fs, ys)
    with tr.prover():
        fpoly = Polynomial(field, _combine(field, wts, [f.padded(inst.n) for f in inst.polys]))
        qs, _ = quotient_prove(fpoly, schedule, st.challenges)
    qo = quotient_send(tr, qs, schedule, m)
    quotient_verify(tr, fstar, schedule, st.challenges, sstar, qo)
    return tr.finish()


RUNNERS = {
    "aurora": run_aurora,
    "lfkn-adaptor": run_lfkn_adaptor,
    "lfkn-adaptor-aurora": run_lfkn_adaptor_aurora,
    "dgm-gemini": run_dgm_gemini,
    "dgm-gemini-aurora": run_dgm_gemini_aurora,
    "direct-gemini": run_direct_gemini,
    "direct-kappa": run_direct_kappa,
    "direct-adaptor": run_direct_adaptor,
}

ALIASES = {"adaptor": "lfkn-adaptor", "dgm": "dgm-gemini", "direct": "direct-gemini"}


def dgm_scalar_count(m: int, d: int, steps: int) -> int:
    total = 0
    for step in range(steps):
        half = 1 << (m - step - 1)
        total += sum((j // 2) % half for j in range(d + 1))
    return total


def expected_costs(protocol: str, m: int, d: int, q: int, schedule=None, degree_check: bool = False) -> dict:
    """Message counts under this package's accounting conventions."""
    k = log_m(m)
    if protocol == "aurora":
        return {"rounds": 1, "field_elements": 0, "oracles": 2 + int(degree_check)}
    if protocol == "lfkn-adaptor":
        return {"rounds": m + 1, "field_elements": (d + 1) * m + q, "oracles": 2 * m}
    if protocol == "lfkn-adaptor-aurora":
        return {"rounds": k + 1, "field_elements": (d + 1) * k, "oracles": 2 * k + q + 2}
    if protocol == "dgm-gemini":
        return {"rounds": m + 1, "field_elements": dgm_scalar_count(m, d, m) + q, "oracles": 4 * m - 1}
    if protocol == "dgm-gemini-aurora":
        return {"rounds": k + 1, "field_elements": dgm_scalar_count(m, d, k), "oracles": 4 * k + q + 1}
    if protocol == "direct-gemini":
        return {"rounds": m + 1, "field_elements": (d + 1) * m + q, "oracles": m - 1}
    if protocol == "direct-adaptor":
        return {"rounds": m + 1, "field_elements": (d + 1) * m + q, "oracles": 2 * m}
    if protocol == "direct-kappa":
        sch = effective_schedule(sqrt_schedule(m) if schedule is None else schedule, m)
        c = len(sch)
        return {"rounds": c + 1, "field_elements": sum(d * ((1 << t) - 1) + 1 for t in sch) + q, "oracles": c}
    raise ValueError(f"unknown protocol {protocol!r}")


def soundness_bound(protocol: str, field: Field, m: int, d: int, q: int, schedule=None) -> float:
    """Soundness error envelope for a false sum, capped at 1.

    Built from the round bounds (d per round polynomial of degree d, or
    d(2^t - 1) for a radix-2^t round), one batching term (q-1)/|F| and the
    terminal sub-protocol's D/(|F|-1) bound.
    """
    F = field.p
    n = 1 << m
    k = log_m(m)
    batch = (q - 1) / F
    if protocol == "aurora":
        b = d * (n - 1) / (F - 1)
    elif protocol == "lfkn-adaptor":
        b = d * m / F + batch + (n - 1) / (F - 1)
    elif protocol == "lfkn-adaptor-aurora":
        b = d * k / F + batch + (n - 1) / (F - 1) + d * ((n >> k) - 1) / (F - 1)
    elif protocol in ("dgm-gemini", "dgm-gemini-aurora"):
        steps = m if protocol == "dgm-gemini" else k
        b = steps * (d + (2 * d + 3) * (n - 1)) / (F - 1) + batch + m * (n - 1) / (F - 1)
    elif protocol in ("direct-gemini", "direct-adaptor"):
        b = d * m / F + batch + (n - 1) / (F - 1) + m * n / (F - 1)
    elif protocol == "direct-kappa":
        sch = effective_schedule(sqrt_schedule(m) if schedule is None else schedule, m)
        b = sum(d * ((1 << t) - 1) for t in sch) / F + batch + (n - 1) / F
    else:
        raise ValueError(protocol)
    return min(b, 1.0)


def run(protocol: str, field: Field, inst: SumInstance, seed: int = 0, attack=None, **opts) -> Transcript:
    protocol = ALIASES.get(protocol, protocol)
    tr = Transcript(field, seed, attack)
    RUNNERS[protocol](tr, inst, **opts)
    return tr
