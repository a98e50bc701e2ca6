"""Univariate polynomials in coefficient and evaluation form.

Also the extension operators used by the protocols: multilinear extension of a
value vector (mlex), inverse Kronecker evaluation of a coefficient vector
(mlin), the mixed-radix generalization kappa, and the even/odd and
square/non-square splits.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .field import Field, tally

ZERO_DEGREE = -1  # degree sentinel for the zero polynomial


def _trim(a: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(a != 0)
    return a[: nz[-1] + 1] if len(nz) else a[:0]


class Polynomial:
    """Coefficient form, index i holds the coefficient of x^i (trimmed)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        self.field = field
        if isinstance(coeffs, np.ndarray) and coeffs.dtype == object:
            arr = coeffs % field.p
        else:
            arr = field.array(list(coeffs))
        self.coeffs = _trim(arr)

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def constant(cls, field, c):
        return cls(field, [c])

    @classmethod
    def x(cls, field):
        return cls(field, [0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if len(self.coeffs) else ZERO_DEGREE

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return int(self.coeffs[i]) if 0 <= i < len(self.coeffs) else 0

    def padded(self, n: int) -> np.ndarray:
        assert self.degree < n, "polynomial does not fit"
        out = self.field.zeros(n)
        out[: len(self.coeffs)] = self.coeffs
        return out

    def to_list(self) -> list[int]:
        return [int(c) for c in self.coeffs]

    def __repr__(self):
        return f"Polynomial({self.to_list()} mod {self.field.p})"

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.field, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field.p == other.field.p and self.to_list() == other.to_list()

    def __hash__(self):
        return hash((self.field.p, tuple(self.to_list())))

    def __call__(self, x: int) -> int:
        p = self.field.p
        c = self.coeffs
        if len(c) <= 32:
            acc = 0
            for a in reversed(c):
                acc = (acc * x + a) % p
            return int(acc)
        return int(np.sum(c * self.field.powers(x, len(c)) % p) % p)

    # arithmetic

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            assert other.field.p == self.field.p
            return other
        return Polynomial.constant(self.field, int(other))

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self), len(other))
        return Polynomial(self.field, self.padded(n) + other.padded(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.field, -self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        p = self.field.p
        if not isinstance(other, Polynomial):
            return Polynomial(self.field, self.coeffs * (int(other) % p))
        a, b = self.coeffs, other.coeffs
        if len(a) == 0 or len(b) == 0:
            return Polynomial.zero(self.field)
        if len(a) < len(b):
            a, b = b, a
        out = self.field.zeros(len(a) + len(b) - 1)
        for i, c in enumerate(b):
            if c:
                out[i:i + len(a)] = (out[i:i + len(a)] + c * a) % p
        return Polynomial(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        assert e >= 0
        out = Polynomial.constant(self.field, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x^k."""
        return Polynomial(self.field, np.concatenate([self.field.zeros(k), self.coeffs]))

    def scale_variable(self, c: int) -> "Polynomial":
        """The polynomial x -> f(c x)."""
        return Polynomial(self.field, self.coeffs * self.field.powers(c, len(self.coeffs)))

    def compose_power(self, k: int) -> "Polynomial":
        """The polynomial x -> f(x^k)."""
        if self.is_zero():
            return self
        out = self.field.zeros(k * (len(self.coeffs) - 1) + 1)
        out[::k] = self.coeffs
        return Polynomial(self.field, out)


class EvaluationTable:
    """Values of the interpolant of degree < 2^k over the subgroup <generator>."""

    __slots__ = ("field", "values", "generator", "log_size", "_poly")

    def __init__(self, field: Field, values, generator: int, log_size: int | None = None):
        self.field = field
        self.values = values % field.p if isinstance(values, np.ndarray) else field.array(values)
        n = len(self.values)
        k = n.bit_length() - 1
        assert n == 1 << k, "table length must be a power of two"
        if log_size is not None:
            assert log_size == k
        self.log_size = k
        self.generator = generator % field.p
        if pow(self.generator, n, field.p) != 1 or (n > 1 and pow(self.generator, n // 2, field.p) == 1):
            raise ValueError("generator order does not match table size")
        self._poly = None

    @property
    def size(self) -> int:
        return len(self.values)

    def __repr__(self):
        return f"EvaluationTable({[int(v) for v in self.values]}, g={self.generator})"

    def points(self) -> np.ndarray:
        return self.field.subgroup(self.generator, self.size)

    def __call__(self, x: int) -> int:
        return barycentric_eval(self.field, self.values, self.generator, x)

    def to_polynomial(self) -> Polynomial:
        if self._poly is None:
            self._poly = ntt_inverse(self)
        return self._poly


def unex(field: Field, values) -> EvaluationTable:
    """Univariate extension of a length-2^m vector over the 2^m-th roots."""
    n = len(values)
    m = n.bit_length() - 1
    return EvaluationTable(field, values if isinstance(values, np.ndarray) else field.array(values),
                           field.primitive_root_of_unity(m))


def barycentric_eval(field: Field, values: np.ndarray, generator: int, x: int) -> int:
    p = field.p
    n = len(values)
    x %= p
    if n == 1:
        return int(values[0])
    pts = field.subgroup(generator, n)
    if pow(x, n, p) == 1:
        return int(values[np.flatnonzero(pts == x)[0]])
    inv = field.batch_inverse((x - pts) % p)
    acc = int(np.sum(values * pts % p * inv % p) % p)
    return (pow(x, n, p) - 1) * field.inv(n) % p * acc % p


def _bitrev(n: int) -> np.ndarray:
    k = n.bit_length() - 1
    idx = np.arange(n)
    rev = np.zeros(n, dtype=np.int64)
    for b in range(k):
        rev |= ((idx >> b) & 1) << (k - 1 - b)
    return rev


def _ntt(field: Field, a: np.ndarray, omega: int) -> np.ndarray:
    """Iterative radix-2 transform: out[i] = sum_j a[j] omega^(ij)."""
    p = field.p
    n = len(a)
    a = a[_bitrev(n)].copy()
    half = 1
    while half < n:
        tw = field.powers(pow(omega, n // (2 * half), p), half)
        blocks = a.reshape(-1, 2 * half)
        u = blocks[:, :half]
        v = blocks[:, half:] * tw % p
        a = np.concatenate([(u + v) % p, (u - v) % p], axis=1).reshape(-1)
        half *= 2
    tally(n.bit_length() * n * 3 // 2 if n > 1 else 0)
    return a


def ntt_forward(f: Polynomial, k: int, generator: int) -> EvaluationTable:
    field = f.field
    n = 1 << k
    if f.degree > n - 1:
        raise ValueError(f"degree {f.degree} too large for 2^{k} points")
    return EvaluationTable(field, _ntt(field, f.padded(n), generator), generator, k)


def ntt_inverse(t: EvaluationTable) -> Polynomial:
    field = t.field
    n = t.size
    a = _ntt(field, t.values, field.inv(t.generator))
    return Polynomial(field, a * field.inv(n) % field.p)


def even_odd_split(f: Polynomial) -> tuple[Polynomial, Polynomial]:
    return Polynomial(f.field, f.coeffs[0::2]), Polynomial(f.field, f.coeffs[1::2])


def rem_cyclic(f: Polynomial, n: int, sign: int) -> Polynomial:
    """f mod (x^n - sign) by folding length-n blocks with weight sign^block."""
    assert n >= 1 and sign in (1, -1)
    field = f.field
    c = f.coeffs
    blocks = -(-len(c) // n)
    out = field.zeros(n)
    for b in range(blocks):
        chunk = c[b * n:(b + 1) * n]
        w = 1 if (sign == 1 or b % 2 == 0) else -1
        out[: len(chunk)] = (out[: len(chunk)] + w * chunk) % field.p
    return Polynomial(field, out)


def divide_binomial(f: Polynomial, b: int, z: int) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder of f by x^b - z."""
    field, p = f.field, f.field.p
    w = f.coeffs.copy()
    L = len(w)
    if L <= b:
        return Polynomial.zero(field), f
    top = (L - 1) // b
    for j in range(top, 0, -1):
        hi = w[j * b:(j + 1) * b]
        w[(j - 1) * b:(j - 1) * b + len(hi)] = (w[(j - 1) * b:(j - 1) * b + len(hi)] + z * hi) % p
    tally(2 * L)
    return Polynomial(field, w[b:]), Polynomial(field, w[:b])


def square_nonsquare_split(f: Polynomial, m: int, w: int) -> tuple[Polynomial, Polynomial]:
    """f_sq agrees with f on w^(2i), f_no(w^(2i)) = f(w^(2i+1))."""
    if f.degree > (1 << m) - 1:
        raise ValueError("degree too large for the domain")
    half = 1 << (m - 1)
    f_sq = rem_cyclic(f, half, 1)
    f_no = rem_cyclic(f, half, -1).scale_variable(w)
    return f_sq, f_no


def crt_recombine(f_sq: Polynomial, f_no: Polynomial, m: int, w: int, x: int) -> int:
    field = f_sq.field
    p = field.p
    xh = pow(x, 1 << (m - 1), p)
    a = (1 + xh) * field.half % p
    b = (1 - xh) * field.half % p
    return (a * f_sq(x) + b * f_no(field.inv(w) * x % p)) % p


def mlin_eval(f: Polynomial, z: Sequence[int]) -> int:
    """Coefficient vector read as a multilinear polynomial; bit i_1 is the LSB."""
    p = f.field.p
    c = f.padded(1 << len(z))
    for zj in z:
        c = (c[0::2] + zj * c[1::2]) % p
    return int(c[0])


def mlex_eval(field: Field, v, z: Sequence[int]) -> int:
    """Multilinear interpolant of v over {0,1}^m at z, LSB first."""
    p = field.p
    c = v % p if isinstance(v, np.ndarray) else field.array(v)
    if len(c) != 1 << len(z):
        raise ValueError("length mismatch between table and point")
    for zj in z:
        c = ((1 - zj) * c[0::2] + zj * c[1::2]) % p
    return int(c[0])


def reverse_coefficients(f: Polynomial, bound: int) -> Polynomial:
    """q with q[i] = f[bound - i], i.e. x^bound f(1/x)."""
    if f.degree > bound:
        raise ValueError("degree exceeds the reversal bound")
    return Polynomial(f.field, f.padded(bound + 1)[::-1].copy())


def radix_offsets(schedule: Sequence[int]) -> list[int]:
    b = [1]
    for t in schedule[:-1]:
        b.append(b[-1] << t)
    return b


def kappa_eval(f: Polynomial, schedule: Sequence[int], point: Sequence[int]) -> int:
    """Evaluate the mixed-radix multivariate form of f.

    Variable j has degree 2^t_j - 1 and owns digit j of the coefficient index.
    """
    field, p = f.field, f.field.p
    total = sum(schedule)
    if f.degree >= 1 << total:
        raise ValueError("schedule too short for this polynomial")
    assert len(point) == len(schedule)
    c = f.padded(1 << total)
    for t, x in zip(schedule, point):
        rows = c.reshape(-1, 1 << t)
        c = rows.dot(field.powers(x, 1 << t)) % p
    return int(c[0])


def lagrange_basis_at(field: Field, nodes, y: int) -> np.ndarray:
    """[l_0(y), ..., l_{n-1}(y)] for the Lagrange basis on distinct nodes."""
    p = field.p
    nodes = [int(a) % p for a in nodes]
    y %= p
    for i, a in enumerate(nodes):
        if a == y:
            out = field.zeros(len(nodes))
            out[i] = 1
            return out
    num = 1
    for a in nodes:
        num = num * (y - a) % p
    dens = []
    for i, a in enumerate(nodes):
        d = (y - a) % p
        for j, b in enumerate(nodes):
            if j != i:
                d = d * (a - b) % p
        dens.append(d)
    inv = field.batch_inverse(field.array(dens))
    return inv * num % p


def interpolate_at(field: Field, nodes, values, y: int) -> int:
    w = lagrange_basis_at(field, nodes, y)
    return int(np.sum(w * (field.array(values) if not isinstance(values, np.ndarray) else values) % field.p)
               % field.p)
