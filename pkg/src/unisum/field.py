"""Prime fields with large 2-power subgroups.

Scalars are plain Python ints in [0, p). Vectors are numpy object arrays of
Python ints, which keeps arithmetic exact for any modulus while still letting
numpy run the elementwise loops.
"""
from __future__ import annotations

import random
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class UnsupportedDomainError(ValueError):
    pass


@dataclass(frozen=True)
class Field:
    modulus: int
    two_adicity: int
    generator_2adic: int
    name: str = ""

    def __post_init__(self):
        p = self.modulus
        assert p > 2 and p % 2 == 1
        assert (p - 1) % (1 << self.two_adicity) == 0
        g = self.generator_2adic
        assert pow(g, 1 << self.two_adicity, p) == 1
        assert pow(g, 1 << (self.two_adicity - 1), p) != 1

    @property
    def p(self) -> int:
        return self.modulus

    def __repr__(self):
        return f"Field({self.name or self.modulus})"

    # scalars

    def __call__(self, x) -> int:
        return int(x) % self.modulus

    def inv(self, x: int) -> int:
        x %= self.modulus
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.modulus)

    def neg(self, x: int) -> int:
        return (-x) % self.modulus

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.modulus

    def pow(self, x: int, e: int) -> int:
        return pow(x, e, self.modulus)

    @property
    def half(self) -> int:
        return (self.modulus + 1) // 2

    def primitive_root_of_unity(self, m: int) -> int:
        """Generator of the order-2^m subgroup, nested: w_m = w_{m+1}^2."""
        if m < 0 or m > self.two_adicity:
            raise UnsupportedDomainError(
                f"no 2^{m}-th roots of unity in F_{self.modulus} (2-adicity {self.two_adicity})")
        return pow(self.generator_2adic, 1 << (self.two_adicity - m), self.modulus)

    def random(self, rng: random.Random, nonzero: bool = False) -> int:
        if nonzero:
            return rng.randrange(1, self.modulus)
        return rng.randrange(self.modulus)

    # vectors

    def array(self, xs) -> np.ndarray:
        out = np.empty(len(xs), dtype=object)
        out[:] = [int(x) % self.modulus for x in xs]
        return out

    def zeros(self, n: int) -> np.ndarray:
        out = np.empty(n, dtype=object)
        out.fill(0)
        return out

    def random_array(self, rng: random.Random, n: int) -> np.ndarray:
        return self.array([rng.randrange(self.modulus) for _ in range(n)])

    def powers(self, x: int, n: int) -> np.ndarray:
        """[1, x, x^2, ..., x^(n-1)] by repeated doubling of the prefix."""
        out = self.zeros(n)
        if n == 0:
            return out
        out[0] = 1
        k, xk = 1, x % self.modulus
        while k < n:
            step = min(k, n - k)
            out[k:k + step] = out[:step] * xk % self.modulus
            k += step
            xk = xk * xk % self.modulus
        return out

    def batch_inverse(self, xs) -> np.ndarray:
        """Elementwise inverses with a single field inversion.

        Product tree variant of Montgomery's trick, so each level is one
        vectorized multiply.
        """
        p = self.modulus
        a = self.array(xs) if not isinstance(xs, np.ndarray) else xs % p
        zero = np.flatnonzero(a == 0)
        if len(zero):
            raise ZeroDivisionError(f"batch_inverse: element {int(zero[0])} is zero")
        n = len(a)
        if n == 0:
            return a.copy()
        levels = [a]
        while len(levels[-1]) > 1:
            cur = levels[-1]
            if len(cur) % 2:
                cur = np.concatenate([cur, self.array([1])])
                levels[-1] = cur
            levels.append(cur[0::2] * cur[1::2] % p)
        inv = self.array([self.inv(levels[-1][0])])
        for cur in reversed(levels[:-1]):
            inv = inv[: len(cur) // 2]
            nxt = self.zeros(len(cur))
            nxt[0::2] = inv * cur[1::2] % p
            nxt[1::2] = inv * cur[0::2] % p
            inv = nxt
        return inv[:n]

    def subgroup(self, generator: int, n: int) -> np.ndarray:
        return _subgroup(self, generator % self.modulus, n)


@lru_cache(maxsize=256)
def _subgroup(field: Field, generator: int, n: int) -> np.ndarray:
    pts = field.powers(generator, n)
    pts.setflags(write=False)
    return pts


F17 = Field(17, 4, 6, "f17")
GOLDILOCKS = Field(2**64 - 2**32 + 1, 32, 1753635133440165772, "f64")

FIELDS = {"f17": F17, "f64": GOLDILOCKS}


def primitive_root_of_unity(cfg: Field, m: int) -> int:
    return cfg.primitive_root_of_unity(m)


def batch_inverse(cfg: Field, xs) -> list[int]:
    return [int(v) for v in cfg.batch_inverse(xs)]


# Prover work accounting. Provers call tally(n) for each batch of n field
# operations; only code running inside counting_ops() is counted.

_OPS: ContextVar = ContextVar("prover_ops", default=None)


@contextmanager
def counting_ops():
    box = [0]
    token = _OPS.set(box)
    try:
        yield box
    finally:
        _OPS.reset(token)


def tally(n: int) -> None:
    box = _OPS.get()
    if box is not None:
        box[0] += int(n)
