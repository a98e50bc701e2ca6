"""Measured message counts for every pipeline next to the closed-form counts,
and prover operation counts as m grows.

Run: python3 walkthroughs/05_cost_table.py
"""
import random

from unisum import GOLDILOCKS, RUNNERS, expected_costs, get_constraint, random_instance, run
from unisum.cli import prover_ops

F = GOLDILOCKS
g = get_constraint("product2")
m = 8
inst = random_instance(F, m, g, random.Random(0))
print(f"m={m}, g={g.name} (d={g.degree}, q={g.arity})")
print(f"{'pipeline':22s} {'rounds':>6s} {'elems':>6s} {'oracles':>7s} {'queries':>7s}  formula")
for proto in RUNNERS:
    tr = run(proto, F, inst, seed=1)
    c = tr.metrics.costs()
    e = expected_costs(proto, m, g.degree, g.arity)
    print(f"{proto:22s} {c['rounds']:6d} {c['field_elements']:6d} {c['oracles']:7d} {c['queries']:7d}  "
          f"{e['rounds']}/{e['field_elements']}/{e['oracles']}  {'accept' if tr.verdict else 'reject'}")

print("\nprover field operations, ratio to the previous m")
sq = get_constraint("square")
for proto in ("adaptor-only", "dgm-gemini", "direct-adaptor", "aurora"):
    ops = [prover_ops(proto, F, sq, m) for m in range(8, 13)]
    print(f"{proto:15s}", " ".join(f"{b / a:.3f}" for a, b in zip(ops, ops[1:])))
