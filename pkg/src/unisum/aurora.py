"""Single-round univariate sumcheck over a multiplicative subgroup H of size n.

For deg f < n the sum over H is n * f[0]. The prover writes the composed
P = g(f_1, ..., f_q) as Q (x^n - 1) + x g'(x) + s/n and the verifier checks
this identity at one random point. The identity-tail variant proves
g(f_1, ..., f_q) = h on H with a single quotient.
"""
from __future__ import annotations

from dataclasses import dataclass

from .constraint import Constraint
from .field import Field, tally
from .piop import Oracle, Transcript
from .poly import EvaluationTable, Polynomial, _ntt, divide_binomial, reverse_coefficients


@dataclass
class AuroraProof:
    quotient: Polynomial
    gprime: Polynomial
    companion: Polynomial | None = None


def compose(field: Field, g: Constraint, polys) -> Polynomial:
    """Coefficients of g(f_1, ..., f_q) via NTT, or formally on small fields."""
    p = field.p
    deg = g.degree * max(max(f.degree for f in polys), 0)
    N = 1
    while N < deg + 1:
        N *= 2
    k = N.bit_length() - 1
    if k > field.two_adicity:
        return g.evaluator(*polys) * 1
    w = field.primitive_root_of_unity(k)
    evals = [_ntt(field, f.padded(N), w) for f in polys]
    P = g.eval_vec(field, evals)
    coeffs = _ntt(field, P, field.inv(w)) * field.inv(N) % p
    tally(N)
    return Polynomial(field, coeffs)


def _coeffs(t) -> Polynomial:
    if isinstance(t, EvaluationTable):
        return t.to_polynomial()
    return t


def aurora_prove(field: Field, tables, g: Constraint, s: int, n: int, degree_check: bool = False,
                 strict: bool = True) -> AuroraProof:
    polys = [_coeffs(t) for t in tables]
    P = compose(field, g, polys)
    Q, R = divide_binomial(P, n, 1)
    s_over_n = s * field.inv(n) % field.p
    if strict:
        assert R[0] == s_over_n, "claimed sum does not match the composed polynomial"
    gp = Polynomial(field, R.padded(n)[1:])
    comp = reverse_coefficients(gp, n - 2) if degree_check and n >= 2 else None
    return AuroraProof(Q, gp, comp)


def aurora_send(tr: Transcript, proof: AuroraProof, n: int, d: int, label: str = "aurora") -> list:
    qb = max(d * (n - 1) - n, 0)
    out = [tr.send_oracle(f"{label}.quotient", proof.quotient, qb),
           tr.send_oracle(f"{label}.gprime", proof.gprime, max(n - 2, 0))]
    if proof.companion is not None:
        out.append(tr.send_oracle(f"{label}.gprime_rev", proof.companion, max(n - 2, 0)))
    return out


def aurora_verify(tr: Transcript, f_oracles, g: Constraint, s: int, n: int, oracles,
                  label: str = "aurora") -> bool:
    field = tr.field
    p = field.p
    tr.final_round()
    rho = tr.challenge(f"{label} rho", nonzero=True)
    vals = [tr.query(o, rho) for o in f_oracles]
    lhs = g.eval(field, *vals)
    quot, gp = oracles[0], oracles[1]
    gpr = tr.query(gp, rho)
    rhs = (tr.query(quot, rho) * (pow(rho, n, p) - 1) + rho * gpr + s * field.inv(n)) % p
    ok = tr.check(lhs == rhs, f"{label}: composed identity")
    if len(oracles) > 2 and n >= 2:
        c = tr.query(oracles[2], rho)
        ok &= tr.check(c == pow(rho, n - 2, p) * tr.query(gp, field.inv(rho)) % p, f"{label}: degree of g'")
    return ok


def aurora(tr: Transcript, f_oracles, tables, g: Constraint, s: int, n: int, degree_check: bool = False) -> bool:
    """Standalone single-round sumcheck."""
    with tr.prover():
        proof = aurora_prove(tr.field, tables, g, s, n, degree_check, strict=False)
    oracles = aurora_send(tr, proof, n, g.degree)
    aurora_verify(tr, f_oracles, g, s, n, oracles)
    return tr.finish()


def identity_prove(field: Field, tables, g: Constraint, h: Polynomial, n: int) -> Polynomial:
    """Quotient Q with g(f) - h = Q (x^n - 1); asserts the remainder vanishes."""
    P = compose(field, g, [_coeffs(t) for t in tables]) - h
    Q, R = divide_binomial(P, n, 1)
    return Q, R


def identity_verify(tr: Transcript, f_oracles, g: Constraint, h: Oracle, n: int, quot: Oracle,
                    label: str = "identity") -> bool:
    field = tr.field
    p = field.p
    tr.final_round()
    rho = tr.challenge(f"{label} rho", nonzero=True)
    lhs = (g.eval(field, *[tr.query(o, rho) for o in f_oracles]) - tr.query(h, rho)) % p
    rhs = tr.query(quot, rho) * (pow(rho, n, p) - 1) % p
    return tr.check(lhs == rhs, f"{label}: quotient identity")
