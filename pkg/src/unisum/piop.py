"""Simulation substrate for polynomial IOPs.

A Transcript is the channel between an (honest or adversarial) prover and the
verifier. It hands out seeded challenges, wraps sent polynomials as oracles,
answers and counts oracle queries, and keeps the cost metrics.
"""
from __future__ import annotations

import json
import random
import time
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable, Optional


from .field import _OPS, Field
from .poly import Polynomial

ATTACKS = ("tamper-sum", "tamper-oracle", "tamper-message")


class Oracle:
    """Query handle for a degree-bounded function.

    `backing` is a Polynomial, an EvaluationTable or any callable on field
    elements. Queries should go through Transcript.query so they are counted.
    """

    def __init__(self, oid: str, backing, degree_bound: int, sent: bool = True):
        self.id = oid
        self.backing = backing
        self.degree_bound = degree_bound
        self.sent = sent
        self.query_count = 0

    def evaluate(self, x: int) -> int:
        return int(self.backing(x))

    def __repr__(self):
        return f"Oracle({self.id}, deg<={self.degree_bound})"


class VirtualOracle(Oracle):
    """An oracle answered through queries to other oracles.

    `combine(ask, x)` computes the value at x, calling ask(oracle, point) for
    every component value it needs. The scalar linear combination
    sum_i w_i o_i is the common case, see `linear`.
    """

    def __init__(self, oid: str, combine: Callable, degree_bound: int, components=()):
        super().__init__(oid, None, degree_bound, sent=False)
        self.combine = combine
        self.components = list(components)

    def evaluate(self, x: int) -> int:
        return int(self.combine(lambda o, y: o.evaluate(y), x))

    @classmethod
    def linear(cls, oid: str, field: Field, weights, oracles, shift: Optional[Callable] = None,
               degree_bound: Optional[int] = None):
        weights = [int(w) % field.p for w in weights]
        oracles = list(oracles)
        assert len(weights) == len(oracles)
        if degree_bound is None:
            degree_bound = max(o.degree_bound for o in oracles)

        def combine(ask, x):
            acc = sum(w * ask(o, x) for w, o in zip(weights, oracles) if w)
            if shift is not None:
                acc += shift(x)
            return acc % field.p

        return cls(oid, combine, degree_bound, oracles)


@dataclass
class Metrics:
    rounds: int = 0
    field_elements: int = 0
    oracles: int = 0
    polynomials: int = 0
    queries: int = 0
    prover_ops: int = 0

    def costs(self) -> dict:
        return {"rounds": self.rounds, "field_elements": self.field_elements,
                "oracles": self.oracles, "queries": self.queries}


@dataclass
class Attack:
    mode: str
    target: int = 0  # index of the tampered oracle polynomial or scalar message
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ATTACKS:
            raise ValueError(f"unknown attack {self.mode!r}")
        self.rng = random.Random(f"attack:{self.seed}")


@dataclass
class Check:
    label: str
    ok: bool


def challenge_value(field: Field, seed: int, index: int, nonzero: bool = False) -> int:
    rng = random.Random(f"{seed}:{index}")
    return rng.randrange(1 if nonzero else 0, field.p)


class Transcript:
    def __init__(self, field: Field, seed: int = 0, attack: Optional[Attack] = None):
        self.field = field
        self.seed = seed
        self.attack = attack
        self.metrics = Metrics()
        self.entries: list[dict] = []
        self.checks: list[Check] = []
        self._pending = {"scalars": [], "oracles": []}
        self._n_challenges = 0
        self._n_scalars = 0
        self._n_polys = 0
        self._ids: set[str] = set()
        self._seen: set = set()
        self._ops = [0]
        self._terminal = False
        self.frozen = False
        self.prover_seconds = 0.0

    # prover side

    @contextmanager
    def prover(self):
        """Count field operations done by prover code inside the block."""
        token = _OPS.set(self._ops)
        t0 = time.perf_counter()
        try:
            yield
        finally:
            _OPS.reset(token)
            self.metrics.prover_ops = self._ops[0]
            self.prover_seconds += time.perf_counter() - t0

    @property
    def cheating(self) -> bool:
        return self.attack is not None and self.attack.mode == "tamper-sum"

    def _unique(self, name: str) -> str:
        oid, k = name, 1
        while oid in self._ids:
            k += 1
            oid = f"{name}~{k}"
        self._ids.add(oid)
        return oid

    def send_scalars(self, values, label: str = "") -> list[int]:
        """Prover sends field elements; returns what the verifier receives."""
        p = self.field.p
        out = [int(v) % p for v in values]
        a = self.attack
        if a is not None and a.mode == "tamper-message":
            k = a.target - self._n_scalars
            if 0 <= k < len(out):
                out[k] = (out[k] + 1) % p
        self._n_scalars += len(out)
        self.metrics.field_elements += len(out)
        self._pending["scalars"].extend(out)
        return out

    def _maybe_tamper(self, backing, degree_bound: int):
        a = self.attack
        idx = self._n_polys
        self._n_polys += 1
        if a is None or a.mode != "tamper-oracle" or a.target != idx:
            return backing
        noise = Polynomial(self.field, [self.field.random(a.rng) for _ in range(max(degree_bound, 0) + 1)])
        if noise.is_zero():
            noise = Polynomial.constant(self.field, 1)
        p = self.field.p
        return lambda x: (backing(x) + noise(x)) % p

    def send_oracle(self, name: str, backing, degree_bound: int) -> Oracle:
        o = Oracle(self._unique(name), self._maybe_tamper(backing, degree_bound), degree_bound)
        self.metrics.oracles += 1
        self.metrics.polynomials += 1
        self._pending["oracles"].append({"id": o.id, "degree_bound": degree_bound})
        return o

    def send_oracle_family(self, name: str, backings, degree_bound: int) -> list[Oracle]:
        """One oracle message carrying several polynomials (counted once)."""
        out = []
        for j, b in enumerate(backings):
            o = Oracle(self._unique(f"{name}[{j}]"), self._maybe_tamper(b, degree_bound), degree_bound)
            out.append(o)
        self.metrics.oracles += 1
        self.metrics.polynomials += len(out)
        self._pending["oracles"].append({"id": name, "degree_bound": degree_bound,
                                         "members": [o.id for o in out]})
        return out

    def instance_oracle(self, name: str, backing, degree_bound: int) -> Oracle:
        """Oracle given as part of the statement; not counted as sent."""
        return Oracle(self._unique(name), backing, degree_bound, sent=False)

    # verifier side

    def new_round(self):
        self.metrics.rounds += 1

    def final_round(self):
        if not self._terminal:
            self._terminal = True
            self.metrics.rounds += 1

    def challenge(self, label: str = "", nonzero: bool = False) -> int:
        v = challenge_value(self.field, self.seed, self._n_challenges, nonzero)
        self._n_challenges += 1
        self.entries.append({"prover": self._pending, "challenge": {"label": label, "value": str(v)}})
        self._pending = {"scalars": [], "oracles": []}
        return v

    def query(self, o: Oracle, x: int) -> int:
        x %= self.field.p
        if isinstance(o, VirtualOracle):
            return int(o.combine(self.query, x)) % self.field.p
        key = (o.id, x)
        if key not in self._seen:
            self._seen.add(key)
            self.metrics.queries += 1
            o.query_count += 1
        return o.evaluate(x) % self.field.p

    def check(self, ok: bool, label: str) -> bool:
        self.checks.append(Check(label, bool(ok)))
        return bool(ok)

    @property
    def failures(self) -> list[str]:
        return [c.label for c in self.checks if not c.ok]

    @property
    def verdict(self) -> bool:
        return all(c.ok for c in self.checks)

    def finish(self) -> bool:
        if self._pending["scalars"] or self._pending["oracles"]:
            self.entries.append({"prover": self._pending, "challenge": None})
            self._pending = {"scalars": [], "oracles": []}
        self.frozen = True
        return self.verdict

    def to_dict(self, protocol: str = "", m: int = 0, d: int = 0, q: int = 0) -> dict:
        return {
            "protocol": protocol,
            "field_modulus": str(self.field.p),
            "m": m, "d": d, "q": q,
            "seed": self.seed,
            "rounds": [
                {"prover": {"scalars": [str(s) for s in e["prover"]["scalars"]],
                            "oracles": e["prover"]["oracles"]},
                 "challenge": e["challenge"]}
                for e in self.entries
            ],
            "verdict": "accept" if self.verdict else "reject",
            "failed_checks": self.failures,
            "metrics": {**self.metrics.costs(), "polynomials": self.metrics.polynomials,
                        "prover_ops": self.metrics.prover_ops},
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(**kw), sort_keys=True)


def plant_roots(field: Field, rng: random.Random, evals, abscissae, check_weights, target: int):
    """Cheating round polynomial for a false claim.

    The honest round polynomial p is given by `evals` at `abscissae`; the
    verifier checks sum_k check_weights[k] * p(abscissae[k]) == target. Returns
    evaluations of p + delta * Z where Z vanishes at len(evals) - 1 random
    points, with delta chosen so the check passes. If the challenge later
    lands on a root of Z the new claim is true again.
    """
    p = field.p
    evals = [int(e) % p for e in evals]
    D = len(evals) - 1
    honest = sum(w * e for w, e in zip(check_weights, evals)) % p
    if honest == target % p:
        return evals
    for _ in range(100):
        roots = set()
        while len(roots) < D:
            roots.add(rng.randrange(p))
        roots = sorted(roots)
        Z = []
        for a in abscissae:
            z = 1
            for r in roots:
                z = z * (a - r) % p
            Z.append(z)
        sz = sum(w * z for w, z in zip(check_weights, Z)) % p
        if sz:
            delta = (target - honest) * pow(sz, -1, p) % p
            return [(e + delta * z) % p for e, z in zip(evals, Z)]
    raise RuntimeError("could not plant roots")
