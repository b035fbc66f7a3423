"""
Binomial expansions, Macaulay and Green bounds
==============================================

A value h_d has a unique greedy d-binomial expansion. Shifting its tops and
bottoms gives the largest possible h_{d+1} (Macaulay) and the largest possible
restriction to a general hyperplane (Green).
"""

from hilbert_extremal.macaulay import expand, green_bound, is_o_sequence, macaulay_bound

e = expand(19, 3)
print("19_(3) =", " + ".join(f"C({a},{b})" for a, b in e.terms))

# growth and restriction bounds from the same expansion
print("macaulay_bound(19, 3) =", macaulay_bound(19, 3))
print("green_bound(19, 3) =", green_bound(19, 3))

# O-sequence check reports the first degree that grows too fast
for h in [(1, 3, 6, 10, 15), (1, 3, 5, 8), (1, 19, 17, 19, 31), (1, 19, 17, 19, 32)]:
    rep = is_o_sequence(h)
    print(h, "valid" if rep.valid else f"fails at degree {rep.degree}")
