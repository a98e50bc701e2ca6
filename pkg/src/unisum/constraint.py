"""Constraint polynomials g treated as black-box evaluators."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .field import Field, tally


class UnsupportedFieldError(ValueError):
    pass


@dataclass(frozen=True)
class Constraint:
    """A q-ary polynomial of total degree <= d.

    The evaluator must only use +, - and * so that it works on ints, numpy
    object arrays and Polynomial objects alike. Results are reduced by the
    caller.
    """
    name: str
    arity: int
    degree: int
    evaluator: Callable

    @property
    def q(self):
        return self.arity

    @property
    def d(self):
        return self.degree

    def eval(self, field: Field, *args) -> int:
        if len(args) != self.arity:
            raise ValueError(f"{self.name} takes {self.arity} arguments, got {len(args)}")
        return int(self.evaluator(*args)) % field.p

    def eval_vec(self, field: Field, args: Sequence[np.ndarray]) -> np.ndarray:
        if len(args) != self.arity:
            raise ValueError(f"{self.name} takes {self.arity} arguments, got {len(args)}")
        out = self.evaluator(*args) % field.p
        tally(len(args[0]) * self.cost)
        return out

    @property
    def cost(self) -> int:
        # rough per-point field operation count: binom(d+q, q)
        from math import comb
        return comb(self.degree + self.arity, self.arity)


BUILTIN = {
    "identity": Constraint("identity", 1, 1, lambda a: a),
    "square": Constraint("square", 1, 2, lambda a: a * a),
    "cube": Constraint("cube", 1, 3, lambda a: a * a * a),
    "product2": Constraint("product2", 2, 2, lambda a, b: a * b),
    "r1cs-row": Constraint("r1cs-row", 3, 2, lambda a, b, c: a * b - c),
}


def get_constraint(name: str) -> Constraint:
    try:
        return BUILTIN[name]
    except KeyError:
        raise ValueError(f"unknown constraint {name!r}; choose from {sorted(BUILTIN)}") from None


def with_arity(g: Constraint, q: int) -> Constraint:
    """g on the first inputs plus a plain sum of the remaining q - arity inputs."""
    if q == g.arity:
        return g
    if q < g.arity:
        raise ValueError(f"{g.name} needs at least {g.arity} inputs, got q = {q}")
    a, base = g.arity, g.evaluator
    return Constraint(f"{g.name}+{q - a}", q, g.degree, lambda *xs: base(*xs[:a]) + sum(xs[a:]))


@lru_cache(maxsize=64)
def _inverse_vandermonde(field: Field, d: int) -> np.ndarray:
    """Rows map values at t = 0..d to monomial coefficients in t."""
    p = field.p
    if p <= d:
        raise UnsupportedFieldError(f"need more than {d} distinct abscissae in F_{p}")
    n = d + 1
    # Gauss-Jordan on [V | I] with V[t][j] = t^j
    A = [[pow(t, j, p) for j in range(n)] + [int(i == t) for i in range(n)] for t in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col])
        A[col], A[piv] = A[piv], A[col]
        inv = pow(A[col][col], -1, p)
        A[col] = [x * inv % p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [(x - f * y) % p for x, y in zip(A[r], A[col])]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = A[i][n + j]
    out.setflags(write=False)
    return out


def line_components(g: Constraint, field: Field, a: Sequence, b: Sequence) -> list:
    """(g_0, ..., g_d) with g(a + t b) = sum_j t^j g_j.

    Works pointwise on scalars or on equally shaped arrays (one line per
    index).
    """
    p = field.p
    d = g.degree
    Vinv = _inverse_vandermonde(field, d)
    samples = []
    for t in range(d + 1):
        args = [(ai + t * bi) % p for ai, bi in zip(a, b)]
        samples.append(g.evaluator(*args) % p)
    comps = []
    for j in range(d + 1):
        acc = 0
        for t in range(d + 1):
            c = Vinv[j, t]
            if c:
                acc = acc + c * samples[t]
        comps.append(acc % p)
    if isinstance(a[0], np.ndarray):
        n = len(a[0])
        tally(n * (d + 1) * (2 * len(a) + g.cost + 2 * (d + 1)))
    return comps
