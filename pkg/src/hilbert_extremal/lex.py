"""Lexsegment ideals and Eliahou-Kervaire Betti tables.

Monomials are exponent tuples. Variables are ordered ``x_0 > x_1 > ... > x_{n-1}``;
for a monomial ``u`` the index ``max(u)`` is the largest ``i`` with ``x_i | u`` (0-based).
For a stable ideal,

    beta_{i+1, i+deg u}(R/I) = sum over minimal generators u of C(max(u), i).

Lex ideals are built from their standard monomials per degree, which stay small even
when the generator count does not.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import islice
from math import comb
from typing import Iterator, Sequence

from .macaulay import is_o_sequence

Monomial = tuple[int, ...]


def degree(m: Monomial) -> int:
    return sum(m)


def max_index(m: Monomial) -> int:
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i
    return -1


def divides(u: Monomial, m: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, m))


def _ascending_lex(nvars: int, t: int) -> Iterator[Monomial]:
    # lex-ascending: smallest exponent of x_0 first, recursively
    if nvars == 1:
        yield (t,)
        return
    for a in range(t + 1):
        for rest in _ascending_lex(nvars - 1, t - a):
            yield (a,) + rest


def lex_smallest(nvars: int, t: int, count: int) -> list[Monomial]:
    """The ``count`` lex-smallest monomials of degree ``t``."""
    return list(islice(_ascending_lex(nvars, t), count))


def _times(m: Monomial, i: int, k: int = 1) -> Monomial:
    e = list(m)
    e[i] += k
    return tuple(e)


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.nvars:
                raise ValueError(f"generator {g} has the wrong length")

    @classmethod
    def from_generators(cls, nvars: int, gens) -> "MonomialIdeal":
        """Minimalize and sort ``gens``."""
        gens = sorted({tuple(g) for g in gens}, key=lambda g: (degree(g), tuple(-x for x in g)))
        kept: list[Monomial] = []
        for g in gens:
            if not any(divides(k, g) for k in kept):
                kept.append(g)
        return cls(nvars, tuple(kept))

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def generators_in_degree(self, t: int) -> list[Monomial]:
        return [g for g in self.gens if degree(g) == t]

    def generator_counts(self) -> dict[int, int]:
        return dict(sorted(Counter(degree(g) for g in self.gens).items()))

    def standard_monomials(self, t: int) -> list[Monomial]:
        """Degree-``t`` monomials outside the ideal, grown degree by degree."""
        layer: set[Monomial] = {(0,) * self.nvars} if not self.contains((0,) * self.nvars) else set()
        for s in range(1, t + 1):
            nxt = set()
            for m in layer:
                for i in range(self.nvars):
                    u = _times(m, i)
                    if u not in nxt and not self.contains(u):
                        nxt.add(u)
            layer = nxt
        return sorted(layer, reverse=True)


def hf_of_monomial_ideal(I: MonomialIdeal, up_to: int) -> list[int]:
    return [len(I.standard_monomials(t)) for t in range(up_to + 1)]


def _minimal_new(std_prev: set[Monomial], std_cur: set[Monomial], nvars: int) -> list[Monomial]:
    # degree-t monomials outside std_cur all of whose degree-(t-1) divisors are standard
    cands = set()
    for s in std_prev:
        for i in range(nvars):
            u = _times(s, i)
            if u not in std_cur:
                cands.add(u)
    out = []
    for u in cands:
        if all(_times(u, i, -1) in std_prev for i in range(nvars) if u[i]):
            out.append(u)
    return out


def lex_ideal(h: Sequence[int], nvars: int) -> MonomialIdeal:
    """Lex ideal with ``H(R/I) = h`` and ``H(R/I, t) = 0`` for ``t >= len(h)``."""
    h = list(h)
    rep = is_o_sequence(h)
    if not rep.valid:
        raise ValueError(f"not an O-sequence: violation at degree {rep.degree}")
    if len(h) > 1 and h[1] > nvars:
        raise ValueError(f"h_1 = {h[1]} exceeds nvars = {nvars}")
    gens: list[Monomial] = []
    std_prev = {(0,) * nvars}
    for t in range(1, len(h) + 1):
        count = h[t] if t < len(h) else 0
        std_cur = set(lex_smallest(nvars, t, count))
        gens.extend(_minimal_new(std_prev, std_cur, nvars))
        std_prev = std_cur
    return MonomialIdeal.from_generators(nvars, gens)


def truncate_ideal(I: MonomialIdeal, d: int) -> MonomialIdeal:
    """Add every degree-``d+1`` monomial outside ``I``; the quotient vanishes above ``d``."""
    extra = I.standard_monomials(d + 1)
    kept = [g for g in I.gens if degree(g) <= d + 1]
    return MonomialIdeal.from_generators(I.nvars, kept + extra)


def stability_witness(I: MonomialIdeal) -> tuple[Monomial, Monomial] | None:
    """First ``(u, x_j u / x_max(u))`` outside ``I`` with ``j < max(u)``, if any."""
    for u in I.gens:
        m = max_index(u)
        for j in range(m):
            v = _times(_times(u, m, -1), j)
            if not I.contains(v):
                return u, v
    return None


def is_stable(I: MonomialIdeal) -> bool:
    return stability_witness(I) is None


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``beta_{i,j}`` of a quotient ``R/I``."""

    nvars: int
    entries: dict

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __post_init__(self):
        for (i, j), v in self.entries.items():
            if i < 0 or i > self.nvars or v < 0:
                raise ValueError(f"bad Betti entry {(i, j)}: {v}")

    @property
    def max_strand(self) -> int:
        return max((j - i for (i, j) in self.entries), default=0)

    def strand(self, r: int) -> list[int]:
        """Row ``r`` of the table: ``beta_{i, i+r}`` for ``i = 0..nvars``."""
        return [self[(i, i + r)] for i in range(self.nvars + 1)]

    def to_json(self) -> dict:
        return {"nvars": self.nvars,
                "betti": [[i, j, v] for (i, j), v in sorted(self.entries.items())]}

    @classmethod
    def from_json(cls, data: dict) -> "BettiTable":
        return cls(data["nvars"], {(i, j): v for i, j, v in data["betti"]})

    def render(self, columns: Sequence[int] | None = None) -> str:
        """Rows are strands ``j - i``, columns homological degrees."""
        cols = list(range(self.nvars + 1)) if columns is None else list(columns)
        rows = range(self.max_strand + 1)
        width = max([len(str(c)) for c in cols] + [len(str(v)) for v in self.entries.values()]) + 1
        lines = ["    |" + "".join(f"{c:>{width}}" for c in cols)]
        lines.append("-" * len(lines[0]))
        for r in rows:
            lines.append(f"{r:>3} |" + "".join(f"{self[(c, c + r)]:>{width}}" for c in cols))
        return "\n".join(lines)

    def k_polynomial(self) -> dict[int, int]:
        """Coefficients of ``sum_{i,j} (-1)^i beta_{i,j} t^j``."""
        out: dict[int, int] = {}
        for (i, j), v in self.entries.items():
            out[j] = out.get(j, 0) + (-1) ** i * v
        return {j: c for j, c in sorted(out.items()) if c}


def ek_betti(I: MonomialIdeal) -> BettiTable:
    """Eliahou-Kervaire Betti table of ``R/I`` for a stable ideal ``I``."""
    wit = stability_witness(I)
    if wit is not None:
        raise ValueError(f"ideal is not stable: generator {wit[0]} but {wit[1]} not in I")
    if any(degree(u) == 0 for u in I.gens):
        return BettiTable(I.nvars, {})
    hist = Counter((degree(u), max_index(u)) for u in I.gens)
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for (deg, m), count in hist.items():
        for i in range(m + 1):
            key = (i + 1, i + deg)
            entries[key] = entries.get(key, 0) + count * comb(m, i)
    return BettiTable(I.nvars, {k: v for k, v in entries.items() if v})


def cancellation_socle_lower_bound(B: BettiTable, i: int, j: int) -> int:
    """``max(0, beta_{i,j} - beta_{i-1,j} - beta_{i+1,j})``.

    Consecutive cancellations at internal degree ``j`` can lower ``beta_{i,j}`` by at most
    the two neighbours, so this bounds ``beta_{i,j}`` for any ideal with the same Hilbert
    function from below.
    """
    return max(0, B[(i, j)] - B[(i - 1, j)] - B[(i + 1, j)])


def kpoly_from_hf(h: Sequence[int], nvars: int) -> dict[int, int]:
    """Numerator of the Hilbert series of a finite ``h``: ``sum h_t t^t * (1 - t)^nvars``."""
    out: dict[int, int] = {}
    for t, ht in enumerate(h):
        for k in range(nvars + 1):
            out[t + k] = out.get(t + k, 0) + ht * (-1) ** k * comb(nvars, k)
    return {j: c for j, c in sorted(out.items()) if c}
