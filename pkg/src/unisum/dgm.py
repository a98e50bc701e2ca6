"""Domain-identity reduction: g(f_1, ..., f_q) % (x^n - 1) = h.

One step halves the domain. Writing P = g(f_1, ..., f_q) and splitting each
input into even and odd parts, P(x) = sum_j x^j g_j(f_ev(x^2), f_od(x^2)) where
g_j are the components of g restricted to the line f_ev + t f_od. The
components are reduced modulo x^(n/2) - 1 as h'_j. Recombining them as
sum_j x^j h'_j(x^2) is not a polynomial of degree < n once d >= 2, so the
prover also sends h_j = x^floor(j/2) h'_j mod (x^(n/2) - 1) and proves
h = sum_j h_2j(x^2) + x h_2j+1(x^2). Reversed companions c_j bound the degrees
and the low coefficients q_j of h_j are sent in the clear.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constraint import Constraint, line_components
from .field import Field, tally
from .piop import Oracle, Transcript, VirtualOracle
from .poly import EvaluationTable, Polynomial, rem_cyclic, unex


@dataclass
class DgmRoundMessage:
    h_prime: list  # EvaluationTable per j over the half domain
    h: list
    c: list
    q: list  # lists of ints, lowest floor(j/2) % (n/2) coefficients of h_j
    a: list  # even-part values of each input on the half domain
    b: list  # odd-part values


def split_values(field: Field, values: np.ndarray, omega: int):
    """Values of f_ev, f_od on <omega^2> from values of f on <omega>."""
    p = field.p
    n = len(values)
    half = n // 2
    lo, hi = values[:half], values[half:]  # f(omega^i), f(-omega^i)
    inv_pts = field.powers(field.inv(omega), half)
    a = (lo + hi) * field.half % p
    b = (lo - hi) * field.half % p * inv_pts % p
    tally(5 * half)
    return a, b


def dgm_prove_step(field: Field, values: list, g: Constraint, omega: int) -> DgmRoundMessage:
    p = field.p
    n = len(values[0])
    half = n // 2
    gen = omega * omega % p
    ab = [split_values(field, v, omega) for v in values]
    a = [x for x, _ in ab]
    b = [y for _, y in ab]
    comps = line_components(g, field, a, b)
    hp, hs, cs, qs = [], [], [], []
    inv_gen_pows = field.powers(field.inv(gen), half)
    for j, G in enumerate(comps):
        G = G if isinstance(G, np.ndarray) else field.array([G] * half)
        k = (j // 2) % half
        H = G * field.powers(pow(gen, j // 2, p), half) % p
        # c_j(x) = x^(half-1) h_j(1/x); at gen^i this is gen^-i h_j(gen^-i)
        Hrev = np.roll(H[::-1], 1)
        C = Hrev * inv_gen_pows % p
        hp.append(EvaluationTable(field, G, gen))
        hs.append(EvaluationTable(field, H, gen))
        cs.append(EvaluationTable(field, C, gen))
        qs.append(low_coefficients(field, H, gen, k))
        tally(4 * half + k * half)
    return DgmRoundMessage(hp, hs, cs, qs, a, b)


def low_coefficients(field: Field, values: np.ndarray, gen: int, k: int) -> list[int]:
    """First k coefficients of the interpolant: N h[l] = sum_i gen^(-il) h(gen^i)."""
    p = field.p
    N = len(values)
    invN = field.inv(N)
    ginv = field.inv(gen)
    out = []
    for l in range(k):
        out.append(int(np.sum(values * field.powers(pow(ginv, l, p), N) % p) % p) * invN % p)
    return out


def fold_values(field: Field, a, b, r: int) -> list:
    tally(2 * len(a[0]) * len(a))
    return [(x + r * y) % field.p for x, y in zip(a, b)]


@dataclass
class DgmResult:
    challenges: list
    h: Oracle  # virtual oracle for the residual target
    h_values: np.ndarray  # its values on the residual domain (prover side)
    values: list  # folded input values on the residual domain


def dgm_run(tr: Transcript, values: list, g: Constraint, steps: int, h: Oracle | None = None,
            sum_claim: int | None = None, label: str = "dgm") -> DgmResult:
    """Run `steps` reductions.

    Either `h` is an oracle for the target, or `sum_claim` gives s and the
    first step's target is built from the sent h_j with h(0) pinned to s/n.
    """
    field = tr.field
    p = field.p
    n = len(values[0])
    m = n.bit_length() - 1
    d = g.degree
    rs = []
    h_values = None
    for step in range(steps):
        size = len(values[0])
        half = size // 2
        omega = field.primitive_root_of_unity(m - step)
        with tr.prover():
            msg = dgm_prove_step(field, values, g, omega)
        hp = tr.send_oracle_family(f"{label}{step}.h'", msg.h_prime, half - 1)
        hh = tr.send_oracle_family(f"{label}{step}.h", msg.h, half - 1)
        cc = tr.send_oracle_family(f"{label}{step}.c", msg.c, half - 1)
        qv = [tr.send_scalars(qj, f"{label}{step}.q{j}") for j, qj in enumerate(msg.q)]
        tautological = False
        if step == 0 and h is None:
            assert sum_claim is not None
            h = _recombined(field, hh, size)
            tautological = True
            target = sum_claim * field.inv(size) % p
            h0 = sum(tr.query(hh[j], 0) for j in range(0, d + 1, 2)) % p
            tr.check(h0 == target, f"{label}: sum binding h(0) = s/n")
        rho = tr.challenge(f"{label}{step} rho", nonzero=True)
        rho2 = rho * rho % p
        rinv = field.inv(rho)
        rh = pow(rho, half, p)
        for j in range(d + 1):
            tr.check(tr.query(cc[j], rho) == pow(rho, half - 1, p) * tr.query(hh[j], rinv) % p,
                     f"{label}{step}: degree check c_{j}")
        if not tautological:
            rhs = 0
            for j in range(d + 1):
                v = tr.query(hh[j], rho2)
                rhs += v if j % 2 == 0 else rho * v
            tr.check(tr.query(h, rho) == rhs % p, f"{label}{step}: recombination")
        for j in range(d + 1):
            k = (j // 2) % half
            qr = sum(c * pow(rho, i, p) for i, c in enumerate(qv[j])) % p
            lhs = pow(rho, k, p) * tr.query(hp[j], rho) % p
            tr.check(lhs == (tr.query(hh[j], rho) + qr * (rh - 1)) % p, f"{label}{step}: shift check q_{j}")
        tr.new_round()
        r = tr.challenge(f"{label}{step} r")
        rs.append(r)
        rp = field.powers(r, d + 1)
        h = VirtualOracle.linear(f"{label}{step}.h'(r)", field, rp, hp)
        with tr.prover():
            values = fold_values(field, msg.a, msg.b, r)
            h_values = sum(int(w) * t.values for w, t in zip(rp, msg.h_prime)) % p
            tally((d + 1) * half * 2)
    return DgmResult(rs, h, h_values, values)


def _recombined(field: Field, hh, size: int) -> VirtualOracle:
    p = field.p

    def combine(ask, x):
        x2 = x * x % p
        acc = 0
        for j, o in enumerate(hh):
            v = ask(o, x2)
            acc += v if j % 2 == 0 else x * v
        return acc % p

    return VirtualOracle("h", combine, size - 1, hh)


# Demonstration of the uncorrected recombination


@dataclass
class FlawReport:
    lhs_degree: int
    rhs_degree: int
    mismatch_fraction: float
    points: int
    lhs: Polynomial
    rhs: Polynomial


def honest_components(f_polys, g: Constraint, m: int) -> list[Polynomial]:
    """h'_j = g_j(f_ev, f_od, ...) % (x^(2^(m-1)) - 1) as coefficient polynomials."""
    field = f_polys[0].field
    n = 1 << m
    w = field.primitive_root_of_unity(m)
    vals = [unex(field, field.array([f(x) for x in field.subgroup(w, n)])).values for f in f_polys]
    msg = dgm_prove_step(field, vals, g, w)
    return [t.to_polynomial() for t in msg.h_prime]


def flawed_recombination(hp: list[Polynomial]) -> Polynomial:
    """sum_j x^j h'_j(x^2), the recombination that overflows the degree."""
    field = hp[0].field
    out = Polynomial.zero(field)
    for j, h in enumerate(hp):
        out = out + h.compose_power(2).shift(j)
    return out


def corrected_recombination(hp: list[Polynomial], m: int) -> Polynomial:
    field = hp[0].field
    half = 1 << (m - 1)
    out = Polynomial.zero(field)
    for j, h in enumerate(hp):
        hj = rem_cyclic(h.shift(j // 2), half, 1)
        out = out + hj.compose_power(2).shift(j % 2)
    return out


def target_remainder(f_polys, g: Constraint, m: int) -> Polynomial:
    P = g.evaluator(*f_polys) * 1
    return rem_cyclic(P, 1 << m, 1)


def dgm_flaw_demo(f_polys, g: Constraint, m: int, points=None) -> FlawReport:
    field = f_polys[0].field
    hp = honest_components(f_polys, g, m)
    lhs = flawed_recombination(hp)
    rhs = target_remainder(f_polys, g, m)
    pts = list(range(field.p)) if points is None else list(points)
    bad = sum(1 for x in pts if lhs(x) != rhs(x))
    return FlawReport(lhs.degree, rhs.degree, bad / len(pts), len(pts), lhs, rhs)
