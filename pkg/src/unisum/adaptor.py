"""Proving a multilinear-extension evaluation against a univariate oracle.

The prover holds v (2^m values) and the verifier an oracle for unex[v]. At each
level the current polynomial f_j is split into a square part (its values on
even powers of the domain generator) and a non-square part (values on odd
powers, pulled back to the squared domain). Folding the two halves with z_j is
exactly the mlex fold of the value vector on its least significant bit.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import Field, tally
from .piop import Oracle, Transcript, VirtualOracle
from .poly import EvaluationTable


@dataclass
class FoldLevel:
    level: int
    values: np.ndarray  # f_j over <w^(2^j)>
    sq: EvaluationTable
    no: EvaluationTable


@dataclass
class AdaptorProof:
    levels: list
    final: int  # fold constant after all levels (equals mlex[v](z) when fully folded)


def adaptor_prove(field: Field, v, z, levels: int | None = None) -> AdaptorProof:
    """Value-domain folding; O(2^m) operations in total."""
    p = field.p
    vals = v % p
    n = len(vals)
    m = n.bit_length() - 1
    k = m if levels is None else levels
    assert 0 <= k <= m and len(z) >= k
    gen = field.primitive_root_of_unity(m)
    out = []
    for j in range(k):
        sq, no = vals[0::2], vals[1::2]
        gen2 = gen * gen % p
        out.append(FoldLevel(j, vals, EvaluationTable(field, sq, gen2), EvaluationTable(field, no, gen2)))
        vals = ((1 - z[j]) * sq + z[j] * no) % p
        tally(3 * len(sq))
        gen = gen2
    return AdaptorProof(out, int(vals[0]) if len(vals) == 1 else None)


def adaptor_send(tr: Transcript, proof: AdaptorProof, label: str = "adaptor") -> list:
    pairs = []
    for lv in proof.levels:
        bound = lv.sq.size - 1
        sq = tr.send_oracle(f"{label}.f{lv.level}_sq", lv.sq, bound)
        no = tr.send_oracle(f"{label}.f{lv.level}_no", lv.no, bound)
        pairs.append((sq, no))
    return pairs


def _chain(tr: Transcript, f0: Oracle, z, pairs, m: int, r: int, label: str):
    """Checks linking f_0 to level len(pairs); returns the last LHS pieces."""
    field = tr.field
    p = field.p
    w = field.primitive_root_of_unity(m)
    half2 = field.half
    prev = None
    for j, (sq, no) in enumerate(pairs):
        if j == 0:
            lhs = tr.query(f0, r)
        else:
            psq, pno = prev
            lhs = ((1 - z[j - 1]) * tr.query(psq, r) + z[j - 1] * tr.query(pno, r)) % p
        rh = pow(r, 1 << (m - j - 1), p)
        shift = field.inv(pow(w, 1 << j, p))
        rhs = ((1 + rh) * half2 % p * tr.query(sq, r)
               + (1 - rh) * half2 % p * tr.query(no, shift * r % p)) % p
        tr.check(lhs == rhs, f"{label}: level {j} recombination")
        prev = (sq, no)
    return prev


def adaptor_verify(tr: Transcript, f0: Oracle, z, s: int, pairs, m: int, label: str = "adaptor") -> bool:
    """Protocol chain at a single nonzero point r: m recombination checks and the final scalar check."""
    p = tr.field.p
    assert len(pairs) == m
    tr.final_round()
    r = tr.challenge(f"{label} r", nonzero=True)
    sq, no = _chain(tr, f0, z, pairs, m, r, label)
    last = ((1 - z[m - 1]) * tr.query(sq, r) + z[m - 1] * tr.query(no, r)) % p
    return tr.check(last == s % p, f"{label}: final value")


def adaptor_early_authenticate(tr: Transcript, f0: Oracle, z, pairs, m: int, r: int,
                               label: str = "adaptor") -> Oracle:
    """Run the first k checks and return an oracle for unex of the k-fold."""
    k = len(pairs)
    if k == 0:
        return f0
    sq, no = _chain(tr, f0, z, pairs, m, r, label)
    zk = z[k - 1]
    return VirtualOracle.linear(f"{label}.f{k}", tr.field, [1 - zk, zk], [sq, no])


def adaptor(tr: Transcript, f0: Oracle, v, z, s: int) -> bool:
    """Standalone run: prove mlex[v](z) = s given an oracle for unex[v]."""
    m = len(z)
    with tr.prover():
        proof = adaptor_prove(tr.field, v, z)
    pairs = adaptor_send(tr, proof)
    adaptor_verify(tr, f0, z, s, pairs, m)
    return tr.finish()
