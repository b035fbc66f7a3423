"""
Lex ideals and their Betti tables
=================================

The lex ideal has the largest Betti numbers among all ideals with a given
Hilbert function. Any other resolution comes from cancelling pairs in equal
internal degree, so an entry that outweighs its neighbours survives.
"""

from hilbert_extremal.lex import (cancellation_socle_lower_bound, ek_betti, lex_ideal,
                                  truncate_ideal)

for v in (30, 29):
    I = truncate_ideal(lex_ideal((1, 19, 17, 19, v), 19), 4)
    B = ek_betti(I)
    print(f"h_4 = {v}, generators per degree {I.generator_counts()}")
    print(B.render([0, 1, 18, 19]))
    # last column survives cancellation: socle in degree 2
    print("surviving beta_{19,21} >=", cancellation_socle_lower_bound(B, 19, 21))
    print()
