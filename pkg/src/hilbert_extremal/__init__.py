"""Hilbert functions, Macaulay/Green extremality and Gorenstein sequences of socle degree 4."""
from .macaulay import (BinomialExpansion, binom, expand, green_bound, is_o_sequence,
                       last_bottom, macaulay_bound, max_growth_at, shift)

__version__ = "0.1.0"
