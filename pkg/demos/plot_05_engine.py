"""
Graded ideals over a prime field
================================

The engine stores an ideal degree by degree as row-reduced bases over
GF(2^31 - 1). It computes the Hilbert function, colon and restriction by a
random linear form, and the Hilbert function of an apolar algebra.
"""

import numpy as np

from hilbert_extremal.engine import apolar_hf, build_ideal, random_form, restriction_profile

rng = np.random.default_rng(11)
model = build_ideal([random_form(3, 6, rng) for _ in range(3)], 3, cap=8)
print("three sextics:", model.hilbert_function())

prof = restriction_profile(model, seed=1)
print("h:", prof.h)
print("b:", prof.b)
print("l:", prof.l)

# h_i = b_{i-1} + l_i in every degree
print(all(prof.h[i] == prof.b[i - 1] + prof.l[i] for i in range(1, len(prof.b) + 1)))

print("apolar x^4+y^4+z^4:", apolar_hf({(4, 0, 0): 1, (0, 4, 0): 1, (0, 0, 4): 1}, 3))
print("apolar x^2 y^2:", apolar_hf({(2, 2): 1}, 2))
