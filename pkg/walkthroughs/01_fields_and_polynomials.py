"""Fields, subgroups and the three ways to read a vector as a polynomial.

Run: python3 walkthroughs/01_fields_and_polynomials.py
"""
from unisum import F17, GOLDILOCKS, Polynomial, mlex_eval, mlin_eval, ntt_forward, unex
from unisum.poly import even_odd_split, rem_cyclic

F = F17
w = F.primitive_root_of_unity(2)
print("order-4 subgroup of F17:", list(F.subgroup(w, 4)))  # 1, 4, 16, 13

f = Polynomial(F, [11, 10, 8, 6])
vals = ntt_forward(f, 2, w).values
print("f =", f.to_list(), "values on the subgroup:", list(vals))

# the same four numbers, three readings
v = F.array([1, 2, 3, 4])
print("unex[v] coefficients:", unex(F, v).to_polynomial().to_list())  # back to f
print("mlex[v](2, 3):", mlex_eval(F, v, [2, 3]))
print("mlin[f](2, 3):", mlin_eval(f, [2, 3]))

# on the subgroup, f(w^i) is mlin[f] at (w^i, w^2i)
for i in range(4):
    x = pow(w, i, F.p)
    assert f(x) == mlin_eval(f, [x, x * x % F.p])
print("f(w^i) = mlin[f](w^i, w^2i) for every i")

ev, od = even_odd_split(f)
print("even part", ev.to_list(), "odd part", od.to_list())
print("f^2 mod (x^4 - 1):", rem_cyclic(f * f, 4, 1).to_list())

# the big field has a 2^32 subgroup
print("Goldilocks 2-adicity:", GOLDILOCKS.two_adicity)
