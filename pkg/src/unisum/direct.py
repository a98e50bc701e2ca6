"""Sumcheck rounds run directly on subgroup value tables.

A round pairs each domain point w^i with the points w^i * zeta^t, zeta a
primitive N-th root of unity (N = 2 gives the pair +-w^i). The prover
interpolates each group along a relative coordinate y, so the round
polynomial p(y) = sum_i g(..., sum_t l_t(y) T[i + t n/N], ...) has degree
d(N - 1), and the verifier checks sum_t p(zeta^t) = s. Binding y = r replaces
every group with its interpolated value, leaving a table on the N-times smaller
subgroup.

The accumulated fold is a Lagrange-weighted contraction of the value table
over mixed-radix digits of the index, most significant digit first. For the
binary schedule this is the multilinear extension of the values at
x_k = (1 - r_{m-k+1}) / 2, which is what `fold_point` returns.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import ceil, sqrt

import numpy as np

from .constraint import Constraint, UnsupportedFieldError
from .field import Field, tally
from .piop import Oracle, Transcript, plant_roots
from .poly import Polynomial, divide_binomial, interpolate_at, lagrange_basis_at, radix_offsets


@dataclass
class DirectState:
    tables: list
    omega: int  # generator of the current domain
    claim: int
    challenges: list


def sqrt_schedule(m: int) -> list[int]:
    c = ceil(sqrt(0.25 + 2 * m) - 0.5)
    # guard against floating point at perfect triangular numbers
    while c * (c + 1) // 2 < m:
        c += 1
    while c > 1 and (c - 1) * c // 2 >= m:
        c -= 1
    return list(range(1, c + 1))


def convergence_sum(schedule) -> float:
    """sum_j 2^(t_j - sum_{k<j} t_k), the per-round work relative to 2^m."""
    total, acc = 0.0, 0
    for t in schedule:
        total += 2.0 ** (t - acc)
        acc += t
    return total


def effective_schedule(schedule, m: int) -> list[int]:
    """Truncate so the radices multiply to exactly 2^m."""
    out, acc = [], 0
    for t in schedule:
        if acc >= m:
            break
        t = min(t, m - acc)
        out.append(t)
        acc += t
    if acc < m:
        raise ValueError(f"schedule {list(schedule)} does not cover m = {m}")
    return out


def parse_schedule(text: str, m: int) -> list[int]:
    if text in (None, "", "binary"):
        return [1] * m
    if text == "sqrt":
        return sqrt_schedule(m)
    if text == "single":
        return [m]
    return [int(t) for t in text.split(",")]


def _weights(field: Field, N: int, zeta: int, ys) -> np.ndarray:
    nodes = field.powers(zeta, N)
    return np.array([lagrange_basis_at(field, nodes, y) for y in ys], dtype=object)


def kappa_round_polynomial(field: Field, tables, g: Constraint, omega: int, t: int) -> list[int]:
    """Evaluations of the round polynomial at y = 0..d(2^t - 1)."""
    p = field.p
    n = len(tables[0])
    N = 1 << t
    D = g.degree * (N - 1)
    if D >= p:
        raise UnsupportedFieldError(f"round polynomial degree {D} needs a field larger than {p}")
    stride = n // N
    zeta = pow(omega, stride, p)
    W = _weights(field, N, zeta, range(D + 1))
    blocks = [T.reshape(N, stride) for T in tables]
    out = []
    for y in range(D + 1):
        args = [W[y].dot(B) % p for B in blocks]
        out.append(int(np.sum(g.eval_vec(field, args)) % p))
        tally(2 * n * len(blocks) + stride)
    return out


def direct_round_polynomial(field: Field, tables, g: Constraint) -> list[int]:
    """Binary round: values (1+y)/2 T(w^i) + (1-y)/2 T(-w^i) at y = 0..d."""
    p = field.p
    half = len(tables[0]) // 2
    out = []
    for y in range(g.degree + 1):
        a = (1 + y) * field.half % p
        b = (1 - y) * field.half % p
        args = [(a * T[:half] + b * T[half:]) % p for T in tables]
        out.append(int(np.sum(g.eval_vec(field, args)) % p))
        tally(3 * half * len(tables) + half)
    return out


def fold(field: Field, tables, omega: int, t: int, r: int) -> list:
    p = field.p
    n = len(tables[0])
    N = 1 << t
    stride = n // N
    wts = lagrange_basis_at(field, field.powers(pow(omega, stride, p), N), r)
    tally(2 * n * len(tables))
    return [wts.dot(T.reshape(N, stride)) % p for T in tables]


def check_weights(field: Field, N: int, zeta: int, D: int) -> list[int]:
    """Weights c_k with sum_t p(zeta^t) = sum_k c_k p(k) for deg p <= D."""
    p = field.p
    acc = field.zeros(D + 1)
    for x in field.powers(zeta, N):
        acc = (acc + lagrange_basis_at(field, range(D + 1), int(x))) % p
    return [int(c) for c in acc]


def kappa_round(tr: Transcript, state: DirectState, g: Constraint, t: int, label: str = "direct") -> DirectState:
    field = tr.field
    p = field.p
    n = len(state.tables[0])
    N = 1 << t
    D = g.degree * (N - 1)
    zeta = pow(state.omega, n // N, p)
    cw = check_weights(field, N, zeta, D)
    with tr.prover():
        if t == 1:
            evals = direct_round_polynomial(field, state.tables, g)
        else:
            evals = kappa_round_polynomial(field, state.tables, g, state.omega, t)
        if tr.cheating:
            evals = plant(tr, evals, cw, state.claim)
    sent = tr.send_scalars(evals, f"{label} round polynomial")
    total = sum(c * e for c, e in zip(cw, sent)) % p
    tr.check(total == state.claim % p, f"{label}: sum over the {N} roots = s")
    tr.new_round()
    r = tr.challenge(f"{label} r")
    claim = interpolate_at(field, range(D + 1), sent, r)
    with tr.prover():
        tables = fold(field, state.tables, state.omega, t, r)
    return DirectState(tables, pow(state.omega, N, p), claim, state.challenges + [r])


def plant(tr, evals, cw, claim):
    return plant_roots(tr.field, tr.attack.rng, evals, range(len(evals)), cw, claim)


def direct_round(tr: Transcript, state: DirectState, g: Constraint, label: str = "direct") -> DirectState:
    return kappa_round(tr, state, g, 1, label)


def kappa_run(tr: Transcript, tables, g: Constraint, claim: int, schedule, label: str = "direct") -> DirectState:
    field = tr.field
    m = len(tables[0]).bit_length() - 1
    state = DirectState(list(tables), field.primitive_root_of_unity(m), claim, [])
    for t in effective_schedule(schedule, m):
        state = kappa_round(tr, state, g, t, label)
    return state


def direct_run(tr: Transcript, tables, g: Constraint, claim: int, label: str = "direct") -> DirectState:
    m = len(tables[0]).bit_length() - 1
    return kappa_run(tr, tables, g, claim, [1] * m, label)


def fold_point(field: Field, challenges) -> list[int]:
    """mlex point (LSB first) equal to the binary fold with these challenges."""
    return [(1 - r) * field.half % field.p for r in reversed(challenges)]


# quotient adaptor for the mixed-radix evaluation claim


def quotient_prove(f: Polynomial, schedule, z) -> tuple[list, int]:
    """f = kappa[f](z) + sum_j q_j (x^(b_j) - z_j), dividing by the largest b_j first."""
    b = radix_offsets(schedule)
    rem = f
    qs = [None] * len(schedule)
    for j in reversed(range(len(schedule))):
        qs[j], rem = divide_binomial(rem, b[j], z[j])
    return qs, rem[0]


def quotient_send(tr: Transcript, qs, schedule, m: int, label: str = "quotient") -> list:
    b = radix_offsets(schedule)
    out = []
    for j, q in enumerate(qs):
        hi = (1 << m) if j == len(qs) - 1 else b[j + 1]
        out.append(tr.send_oracle(f"{label}.q{j + 1}", q, max(hi - b[j] - 1, 0)))
    return out


def quotient_verify(tr: Transcript, f: Oracle, schedule, z, s: int, q_oracles, label: str = "quotient") -> bool:
    field = tr.field
    p = field.p
    b = radix_offsets(schedule)
    tr.final_round()
    rho = tr.challenge(f"{label} rho")
    rhs = s
    for j, o in enumerate(q_oracles):
        rhs += tr.query(o, rho) * (pow(rho, b[j], p) - z[j])
    return tr.check(tr.query(f, rho) == rhs % p, f"{label}: division identity")
