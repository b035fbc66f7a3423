"""
Extremal growth and the scheme it forces
========================================

Maximal growth in degree d means the ideal agrees, from degree d on, with the
ideal of a scheme whose Hilbert polynomial can be read off the expansion. Here
h_3 = 19 in four variables behaves like a cubic surface.
"""

from hilbert_extremal.extremal import (backward_hf_recursion, predicted_scheme_hf,
                                       recognize_hypersurface_form, relate_report)

f = recognize_hypersurface_form(19, 3)
print("form (c, k):", (f.c, f.k))
print("predicted h_t:", [predicted_scheme_hf(f, t) for t in range(7)])

rec = backward_hf_recursion(19, 3)
print("backward recursion:", rec.values, "span dimension", rec.span_dim)

# a smooth rational quartic in P^3: Green is sharp but the colon row does not grow
quartic = {"h": [1, 4, 9, 13, 17, 21, 25, 29, 33], "b": [1, 4, 9, 13, 17, 21, 25, 29],
           "l": [1, 3, 5, 4, 4, 4, 4, 4, 4]}
rep = relate_report(quartic, 7)
print("gate open:", rep.gate)
for c in rep.part_a:
    print(" ", c.condition, c.value)
