"""Halving a univariate sum through the domain identity, and why the naive
recombination breaks once g has degree 2 or more.

Run: python3 walkthroughs/03_dgm_flaw_and_fix.py
"""
import random

from unisum import F17, GOLDILOCKS, Polynomial, get_constraint, random_instance, run
from unisum.dgm import corrected_recombination, dgm_flaw_demo, honest_components

g = get_constraint("square")
f = Polynomial(F17, [11, 10, 8, 6])

hp = honest_components([f], g, 2)
print("components h'_j:", [h.to_list() for h in hp])

rep = dgm_flaw_demo([f], g, 2)
print("target h = f^2 mod (x^4 - 1):", rep.rhs.to_list())
print("sum_j x^j h'_j(x^2):", rep.lhs.to_list(), "degree", rep.lhs_degree)
print("at x = 2:", rep.lhs(2), "vs", rep.rhs(2))
print(f"disagrees on {rep.mismatch_fraction:.0%} of F17")

fixed = corrected_recombination(hp, 2)
print("shifting h'_j by x^floor(j/2) first gives", fixed.to_list(), "equal:", fixed == rep.rhs)

# the full pipeline with the shifted components, then Gemini for the final claims
inst = random_instance(GOLDILOCKS, 6, g, random.Random(1))
for proto in ("dgm-gemini", "dgm-gemini-aurora"):
    tr = run(proto, GOLDILOCKS, inst, seed=2)
    print(proto, tr.verdict, tr.metrics.costs())
