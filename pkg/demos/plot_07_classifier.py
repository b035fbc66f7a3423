"""
Socle degree 4 classifier
=========================

A small fact base of known Gorenstein and non-Gorenstein vectors
(1, a, b, a, 1) is pushed around by the add-a-variable rules. Each answer
carries the chain of facts used to reach it.
"""

from hilbert_extremal.gorenstein_prover import classify_socle4

for a, b in [(13, 12), (19, 17), (20, 18), (25, 23), (10, 12), (30, 20)]:
    res = classify_socle4(a, b)
    print((a, b), res.verdict, f"({len(res.provenance)} steps)", res.reason or "")

# first r with (1, r, r-2, r, 1) Gorenstein
print(min(r for r in range(4, 60) if classify_socle4(r, r - 2).verdict == "gorenstein"))
