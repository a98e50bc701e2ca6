"""The evaluation adaptor: prove mlex[v](z) = s from an oracle for unex[v].

The prover splits the values into even-index and odd-index halves, sends both
as oracles, and folds with z_j. Nothing but oracles is sent; the verifier
checks the whole chain at one random point.

Run: python3 walkthroughs/02_adaptor.py
"""
import random

from unisum import F17, GOLDILOCKS, Transcript, get_constraint, mlex_eval, random_instance, run, unex
from unisum.adaptor import adaptor, adaptor_prove

v = F17.array([1, 2, 3, 4])
z = [2, 3]
proof = adaptor_prove(F17, v, z)
for lv in proof.levels:
    print(f"level {lv.level}: values {list(lv.values)} -> even {list(lv.sq.values)}, odd {list(lv.no.values)}")
print("fold constant", proof.final, "= mlex", mlex_eval(F17, v, z))

tr = Transcript(F17, seed=1)
ok = adaptor(tr, tr.instance_oracle("f", unex(F17, v), 3), v, z, proof.final)
print("verdict", ok, "costs", tr.metrics.costs())

# as the tail of a multilinear sumcheck on the value vector
F = GOLDILOCKS
inst = random_instance(F, 6, get_constraint("square"), random.Random(0))
tr = run("lfkn-adaptor", F, inst, seed=3)
print("lfkn-adaptor m=6:", tr.verdict, tr.metrics.costs())
tr = run("lfkn-adaptor-aurora", F, inst, seed=3)
print("with a univariate tail after ceil(log m) rounds:", tr.verdict, tr.metrics.costs())
