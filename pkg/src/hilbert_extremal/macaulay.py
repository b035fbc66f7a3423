"""Binomial expansions and the Macaulay / Green bounds on Hilbert functions."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence


def binom(m: int, c: int) -> int:
    """Binomial coefficient with ``binom(m, c) = 0`` whenever ``m < c`` or ``c < 0``."""
    if c < 0 or m < c:
        return 0
    return comb(m, c)


@dataclass(frozen=True)
class BinomialExpansion:
    """The ``degree``-binomial expansion ``value = C(t_1, degree) + C(t_2, degree-1) + ...``.

    ``terms`` holds ``(top, bottom)`` pairs with strictly decreasing tops and
    bottoms running down from ``degree`` by one, and ``top >= bottom >= 1``.
    """

    value: int
    degree: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("expansion degree must be positive")
        prev_top = None
        for k, (top, bottom) in enumerate(self.terms):
            if bottom != self.degree - k or bottom < 1:
                raise ValueError(f"bad bottom index in term {k}: {(top, bottom)}")
            if top < bottom:
                raise ValueError(f"top below bottom in term {k}: {(top, bottom)}")
            if prev_top is not None and top >= prev_top:
                raise ValueError("tops must strictly decrease")
            prev_top = top
        if sum(comb(t, b) for t, b in self.terms) != self.value:
            raise ValueError("terms do not sum to value")

    def __len__(self):
        return len(self.terms)

    @property
    def tops(self) -> tuple[int, ...]:
        return tuple(t for t, _ in self.terms)

    @property
    def bottoms(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.terms)

    def shifted_terms(self, a: int, b: int) -> list[tuple[int, int, int]]:
        """Per-term ``(top + b, bottom + a, value)``; vanished terms are kept with value 0."""
        return [(t + b, s + a, binom(t + b, s + a)) for t, s in self.terms]

    def shift(self, a: int, b: int) -> int:
        return shift(self, a, b)

    def to_json(self) -> dict:
        return {"value": self.value, "degree": self.degree,
                "terms": [list(t) for t in self.terms]}

    def __str__(self):
        if not self.terms:
            return f"0_({self.degree}) = 0"
        body = " + ".join(f"C({t},{b})" for t, b in self.terms)
        return f"{self.value}_({self.degree}) = {body}"


def expand(r: int, i: int) -> BinomialExpansion:
    """Greedy ``i``-binomial expansion of ``r``.

    >>> expand(19, 3).terms
    ((5, 3), (4, 2), (3, 1))
    """
    if i < 1:
        raise ValueError("degree must be >= 1")
    if r < 0:
        raise ValueError("value must be nonnegative")
    terms = []
    rest = r
    k = i
    while rest > 0 and k >= 1:
        top = _largest_top(rest, k)
        terms.append((top, k))
        rest -= comb(top, k)
        k -= 1
    return BinomialExpansion(r, i, tuple(terms))


def _largest_top(rest: int, k: int) -> int:
    # largest m >= k with C(m, k) <= rest (rest >= 1, so m = k qualifies)
    lo, step = k, 1
    while comb(lo + step, k) <= rest:
        lo += step
        step *= 2
    hi = lo + step  # C(hi, k) > rest
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, k) <= rest:
            lo = mid
        else:
            hi = mid
    return lo


def shift(e: BinomialExpansion, a: int, b: int) -> int:
    """``e|^b_a``: sum of ``C(top + b, bottom + a)`` with the vanishing convention."""
    return sum(binom(t + b, s + a) for t, s in e.terms)


def _check_degree(d: int):
    if d < 1:
        raise ValueError("degree must be >= 1")


def macaulay_bound(h: int, d: int) -> int:
    """Largest possible ``h_{d+1}`` given ``h_d = h``."""
    _check_degree(d)
    return shift(expand(h, d), 1, 1)


def green_bound(h: int, d: int) -> int:
    """Largest possible degree-``d`` value of the restriction to a general hyperplane."""
    _check_degree(d)
    return shift(expand(h, d), 0, -1)


@dataclass(frozen=True)
class OSequenceReport:
    valid: bool
    degree: int | None = None    # first d with h[d+1] > macaulay_bound(h[d], d)
    value: int | None = None
    bound: int | None = None

    def to_json(self) -> dict:
        if self.valid:
            return {"valid": True}
        return {"valid": False, "degree": self.degree, "value": self.value,
                "bound": self.bound}


def is_o_sequence(h: Sequence[int]) -> OSequenceReport:
    if len(h) == 0 or h[0] != 1:
        raise ValueError("an O-sequence starts with h[0] = 1")
    if any(x < 0 for x in h):
        raise ValueError("entries must be nonnegative")
    for d in range(1, len(h) - 1):
        bound = macaulay_bound(h[d], d)
        if h[d + 1] > bound:
            return OSequenceReport(False, d, h[d + 1], bound)
    return OSequenceReport(True)


def max_growth_at(h: Sequence[int], d: int) -> bool:
    if d < 1 or d + 1 >= len(h):
        raise IndexError(f"degree {d} needs entries h[{d}] and h[{d + 1}]")
    return h[d + 1] == macaulay_bound(h[d], d)


def last_bottom(e: BinomialExpansion) -> int:
    """Bottom index of the final term; the ``e >= 2`` hypothesis gate reads this."""
    if not e.terms:
        raise ValueError("empty expansion has no last term")
    return e.terms[-1][1]


def last_top(e: BinomialExpansion) -> int:
    if not e.terms:
        raise ValueError("empty expansion has no last term")
    return e.terms[-1][0]
