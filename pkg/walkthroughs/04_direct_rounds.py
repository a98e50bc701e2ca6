"""Sumcheck rounds straight on the subgroup values.

Each round pairs w^i with -w^i and sends p(y) with p(1) + p(-1) = s. After all
rounds the folded value is the multilinear extension of the values at
x_k = (1 - r_{m-k+1}) / 2, not mlin[f](r). Finishing with Gemini on mlin
therefore rejects honest provers once m >= 2; finishing with the evaluation
adaptor at the fold point works.

Run: python3 walkthroughs/04_direct_rounds.py
"""
import random

from unisum import F17, GOLDILOCKS, Polynomial, get_constraint, mlex_eval, mlin_eval, random_instance, run
from unisum.direct import (convergence_sum, direct_round_polynomial, fold, fold_point, quotient_prove,
                           sqrt_schedule)

f = Polynomial(F17, [11, 10, 8, 6])
T = F17.array([1, 2, 3, 4])  # f on <4>
print("round polynomial at y = 0, 1:", direct_round_polynomial(F17, [T], get_constraint("identity")))

w = F17.primitive_root_of_unity(2)
rs = [5, 7]
(t,) = fold(F17, [T], w, 1, rs[0])
(t,) = fold(F17, [t], w * w % 17, 1, rs[1])
print("two folds:", int(t[0]), "| mlex at fold point:", mlex_eval(F17, T, fold_point(F17, rs)),
      "| mlin[f](r):", mlin_eval(f, rs))

inst = random_instance(GOLDILOCKS, 5, get_constraint("square"), random.Random(0))
for proto in ("direct-gemini", "direct-adaptor", "direct-kappa"):
    tr = run(proto, GOLDILOCKS, inst, seed=4)
    print(f"{proto:15s} verdict {tr.verdict} failed {tr.failures} costs {tr.metrics.costs()}")

for m in (3, 10, 30):
    sch = sqrt_schedule(m)
    print(f"sqrt schedule m={m}: {sch}, convergence sum {convergence_sum(sch):.3f}")

qs, val = quotient_prove(Polynomial(F17, [11, 10]), [1], [2])
print("11 + 10x = value + q (x - 2): value", val, "q", qs[0].to_list())
