"""Multivariate sumcheck over the Boolean hypercube.

Tables are value vectors indexed by integers whose least significant bit is
the first variable. Each round binds that variable.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constraint import Constraint
from .field import Field, tally
from .piop import Transcript, plant_roots
from .poly import interpolate_at, mlex_eval


@dataclass
class HypercubeInstance:
    field: Field
    tables: list
    g: Constraint
    s: int

    def __post_init__(self):
        n = len(self.tables[0])
        assert all(len(t) == n for t in self.tables)
        assert n & (n - 1) == 0
        assert len(self.tables) == self.g.arity

    @property
    def m(self) -> int:
        return len(self.tables[0]).bit_length() - 1


@dataclass
class LfknResult:
    challenges: list
    claim: int
    tables: list  # folded tables of length 2^(m-k)


def round_polynomial(field: Field, tables, g: Constraint) -> list[int]:
    """Evaluations at y = 0..d of sum over the remaining cube with x_1 = y."""
    p = field.p
    evens = [t[0::2] for t in tables]
    odds = [t[1::2] for t in tables]
    out = []
    for y in range(g.degree + 1):
        args = [((1 - y) * e + y * o) % p for e, o in zip(evens, odds)]
        tally(2 * len(evens[0]) * len(args))
        out.append(int(np.sum(g.eval_vec(field, args)) % p))
        tally(len(evens[0]))
    return out


def fold_tables(field: Field, tables, r: int) -> list:
    p = field.p
    out = [((1 - r) * t[0::2] + r * t[1::2]) % p for t in tables]
    tally(3 * len(tables[0]) // 2 * len(tables))
    return out


def lfkn_round(tr: Transcript, tables, g: Constraint, claim: int, label: str = "lfkn"):
    """One reduction step. Returns (challenge, new claim, folded tables)."""
    field = tr.field
    p = field.p
    d = g.degree
    with tr.prover():
        evals = round_polynomial(field, tables, g)
        if tr.cheating:
            evals = plant_roots(field, tr.attack.rng, evals, range(d + 1), [1, 1] + [0] * (d - 1), claim)
    sent = tr.send_scalars(evals, f"{label} round polynomial")
    tr.check((sent[0] + sent[1]) % p == claim % p, f"{label}: p(0)+p(1)=s")
    tr.new_round()
    r = tr.challenge(f"{label} r")
    new_claim = interpolate_at(field, range(d + 1), sent, r)
    with tr.prover():
        tables = fold_tables(field, tables, r)
    return r, new_claim, tables


def lfkn_run(tr: Transcript, tables, g: Constraint, claim: int, rounds: int | None = None,
             label: str = "lfkn") -> LfknResult:
    """Run k rounds (all m by default), leaving a claim about folded tables."""
    m = len(tables[0]).bit_length() - 1
    k = m if rounds is None else rounds
    assert 0 <= k <= m
    rs = []
    for _ in range(k):
        r, claim, tables = lfkn_round(tr, tables, g, claim, label)
        rs.append(r)
    return LfknResult(rs, claim, list(tables))


def lfkn_sumcheck(tr: Transcript, inst: HypercubeInstance) -> bool:
    """Full sumcheck with the final claim checked by direct mlex evaluation."""
    field = inst.field
    claim = (inst.s + 1) % field.p if tr.cheating else inst.s
    res = lfkn_run(tr, inst.tables, inst.g, claim)
    ys = [mlex_eval(field, t, res.challenges) for t in inst.tables]
    tr.check(inst.g.eval(field, *ys) == res.claim, "lfkn: g(mlex(r)) = s'")
    return tr.finish()
