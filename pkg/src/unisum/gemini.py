"""Gemini tensor folding: prove mlin[f](z) = s against an oracle for f."""
from __future__ import annotations

from dataclasses import dataclass

from .field import tally
from .piop import Oracle, Transcript
from .poly import Polynomial


@dataclass
class GeminiProof:
    folds: list  # f_1, ..., f_k as Polynomials
    constant: int | None


def gemini_prove(f: Polynomial, z, m: int | None = None) -> GeminiProof:
    """f_i = (f_{i-1})_ev + z_i (f_{i-1})_od for each z_i, linear time.

    With m > len(z) this is the early stop: the last fold is the residual.
    """
    field, p = f.field, f.field.p
    k = len(z)
    m = k if m is None else m
    c = f.padded(1 << m)
    out = []
    for i in range(k):
        c = (c[0::2] + z[i] * c[1::2]) % p
        tally(len(c) * 2)
        out.append(Polynomial(field, c))
    const = int(c[0]) if k == m else None
    return GeminiProof(out, const)


def gemini_send(tr: Transcript, proof: GeminiProof, m: int, label: str = "gemini") -> list:
    """Send f_1..f_{m-1} for a full run, or every fold for an early stop."""
    k = len(proof.folds)
    send = proof.folds if k < m else proof.folds[:-1]
    return [tr.send_oracle(f"{label}.f{i + 1}", fi, (1 << (m - i - 1)) - 1) for i, fi in enumerate(send)]


def _fold_check(tr, prev, z_i, r, inv2r):
    p = tr.field.p
    a = tr.query(prev, r)
    b = tr.query(prev, -r % p)
    return ((a + b) * tr.field.half + z_i * (a - b) * inv2r) % p


def gemini_verify(tr: Transcript, f: Oracle, z, s: int, oracles, label: str = "gemini", r: int | None = None) -> bool:
    """One nonzero point r: each level checks f_i(r^2) against the fold of f_{i-1}(+-r)."""
    field = tr.field
    p = field.p
    m = len(z)
    assert len(oracles) == m - 1
    tr.final_round()
    if r is None:
        r = tr.challenge(f"{label} r", nonzero=True)
    inv2r = field.inv(2 * r)
    prev = f
    for i in range(m):
        val = _fold_check(tr, prev, z[i], r, inv2r)
        if i < m - 1:
            tr.check(val == tr.query(oracles[i], r * r % p), f"{label}: level {i + 1}")
            prev = oracles[i]
        else:
            tr.check(val == s % p, f"{label}: final value")
    return tr.verdict


def gemini_verify_early(tr: Transcript, f: Oracle, z, oracles, r: int, label: str = "gemini") -> Oracle:
    """Check k = len(oracles) folds; the last sent oracle is the residual claim."""
    p = tr.field.p
    inv2r = tr.field.inv(2 * r)
    prev = f
    for i, o in enumerate(oracles):
        val = _fold_check(tr, prev, z[i], r, inv2r)
        tr.check(val == tr.query(o, r * r % p), f"{label}: level {i + 1}")
        prev = o
    return prev


def gemini(tr: Transcript, f_oracle: Oracle, f: Polynomial, z, s: int) -> bool:
    with tr.prover():
        proof = gemini_prove(f, z)
    oracles = gemini_send(tr, proof, len(z))
    gemini_verify(tr, f_oracle, z, s, oracles)
    return tr.finish()
