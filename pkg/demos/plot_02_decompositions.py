"""
Decompositions and socle witnesses
==================================

Cutting by a linear form L splits h into the Hilbert functions of R/(I:L)
(shifted by one) and R/(I,L). For a Gorenstein vector the middle row must
itself be symmetric, which leaves very few choices.
"""

from hilbert_extremal.decomposition import (enumerate_gorenstein_decompositions,
                                            injectivity_socle, zanello_socle)

for D in enumerate_gorenstein_decompositions((1, 19, 17, 19, 1)):
    print(D)
    print()

# a value with maximal growth in degree 4 forces socle in degree 2
w = zanello_socle((1, 19, 17, 19, 31), 3)
print("maximal growth:", w.degree, w.dimension)

# a restriction row that is too small for injectivity does the same
w = injectivity_socle((1, 19, 17, 19, 28), (1, 18, 5, 7, 9), 3)
print("injectivity:", w.degree, w.dimension)
