"""Three-row decompositions ``(h; b; l)`` of h-vectors and socle-forcing tests.

For a linear form ``L`` the exact sequence
``0 -> R/(I:L)(-1) -> R/I -> R/(I,L) -> 0`` gives ``h_i = b_{i-1} + l_i``.
A decomposition is displayed with the ``b`` row shifted one column right::

    1  19  17  19  1
        1  10  10  1
    ----------------
    1  18   7   9  0
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .macaulay import expand, green_bound, is_o_sequence, macaulay_bound, shift


@dataclass(frozen=True)
class HVector:
    entries: tuple[int, ...]

    def __init__(self, entries: Sequence[int]):
        entries = tuple(int(x) for x in entries)
        if not entries or entries[0] != 1:
            raise ValueError("h-vector must start with 1")
        if entries[-1] <= 0:
            raise ValueError("last entry of an h-vector must be positive")
        if any(x < 0 for x in entries):
            raise ValueError("h-vector entries must be nonnegative")
        object.__setattr__(self, "entries", entries)

    @property
    def socle_degree(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class Decomposition:
    h: tuple[int, ...]
    b: tuple[int, ...]
    l: tuple[int, ...]

    def __init__(self, h, b, l):
        object.__setattr__(self, "h", tuple(h))
        object.__setattr__(self, "b", tuple(b))
        object.__setattr__(self, "l", tuple(l))

    @property
    def socle_degree(self) -> int:
        return len(self.h) - 1

    def to_json(self) -> dict:
        return {"h": list(self.h), "b": list(self.b), "l": list(self.l)}

    @classmethod
    def from_json(cls, data: dict) -> "Decomposition":
        return cls(data["h"], data["b"], data["l"])

    def __str__(self):
        width = max(len(str(x)) for x in self.h + self.b + self.l) + 1
        fmt = lambda row: "".join(f"{x:>{width}}" for x in row)
        top = fmt(self.h)
        mid = " " * width + fmt(self.b)
        bot = fmt(self.l)
        return "\n".join([top, mid, "-" * len(top), bot])


@dataclass
class ValidationReport:
    valid: bool
    shape_error: str | None = None
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"valid": self.valid, "shape_error": self.shape_error,
                "failures": list(self.failures)}


def validate_decomposition(D: Decomposition, gorenstein: bool = False) -> ValidationReport:
    h, b, l = D.h, D.b, D.l
    e = len(h) - 1
    if e < 0 or len(l) != e + 1 or len(b) != e:
        return ValidationReport(
            False,
            shape_error=f"expected len(b) = {e} and len(l) = {e + 1} for socle degree {e}, "
                        f"got {len(b)} and {len(l)}")
    failures = []
    if any(x < 0 for x in h + b + l):
        failures.append("negative entry")
    if h[0] != 1 or l[0] != 1:
        failures.append("h_0 = l_0 = 1 required")
    for i in range(1, e + 1):
        if h[i] != b[i - 1] + l[i]:
            failures.append(f"additivity fails at {i}: {h[i]} != {b[i - 1]} + {l[i]}")
    if not failures:
        rep = is_o_sequence(l)
        if not rep.valid:
            failures.append(f"l is not an O-sequence: l_{rep.degree + 1} = {rep.value} "
                            f"> {rep.bound} = macaulay_bound(l_{rep.degree}, {rep.degree})")
        for d in range(1, e + 1):
            gb = green_bound(h[d], d)
            if l[d] > gb:
                failures.append(f"l_{d} = {l[d]} > {gb} = green_bound(h_{d}, {d})")
    if gorenstein and e >= 1 and not failures:
        if h[e] != 1 or b[e - 1] != 1:
            failures.append("Gorenstein requires b_{e-1} = h_e = 1")
        if tuple(b) != tuple(reversed(b)):
            failures.append("Gorenstein requires a symmetric b row")
        if b[0] == 1:
            rep = is_o_sequence(b)
            if not rep.valid:
                failures.append(f"b is not an O-sequence at degree {rep.degree}")
        else:
            failures.append("b_0 must be 1")
    return ValidationReport(not failures, failures=failures)


def enumerate_gorenstein_decompositions(H) -> list[Decomposition]:
    """All decompositions of ``H`` with a symmetric ``b`` row passing the Gorenstein checks.

    Exhaustive over integer ``b`` rows with ``0 <= b_i <= h_{i+1}``; sorted by ``b`` (so by
    ``b_1`` ascending in socle degree 4).
    """
    H = H if isinstance(H, HVector) else HVector(H)
    h = H.entries
    e = H.socle_degree
    if h[e] != 1:
        raise ValueError(f"Gorenstein candidates need h_e = 1, got {h[e]}")
    if e == 0:
        return [Decomposition(h, (), (1,))]
    # b_0 = b_{e-1} = 1; the free entries are b_1 .. b_{half}
    free = [i for i in range(1, e - 1) if i <= e - 1 - i]
    ranges = [range(0, min(h[i + 1], h[e - i]) + 1) for i in free]
    out = []
    for choice in itertools.product(*ranges):
        b = [0] * e
        b[0] = b[e - 1] = 1
        for i, v in zip(free, choice):
            b[i] = b[e - 1 - i] = v
        l = [1] + [h[i] - b[i - 1] for i in range(1, e + 1)]
        if min(l) < 0:
            continue
        D = Decomposition(h, b, l)
        if validate_decomposition(D, gorenstein=True).valid:
            out.append(D)
    return sorted(out, key=lambda D: D.b)


@dataclass(frozen=True)
class SocleWitness:
    degree: int
    dimension: int
    rule: str

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("socle witness dimension must be positive")

    def to_json(self) -> dict:
        return {"degree": self.degree, "dimension": self.dimension, "rule": self.rule}


def zanello_socle(h: Sequence[int], d: int) -> SocleWitness | None:
    """Socle in degree ``d-1`` forced by maximal growth from ``d`` to ``d+1``.

    If ``h_{d+1} = macaulay_bound(h_d, d)`` then the socle in degree ``d-1`` has dimension
    ``h_{d-1} - (h_d)_(d)|^{-1}_{-1}`` whenever that is positive.
    """
    h = tuple(h)
    if d < 1 or d + 1 >= len(h):
        raise IndexError(f"degree {d} needs h[{d - 1}], h[{d}], h[{d + 1}]")
    if h[d + 1] != macaulay_bound(h[d], d):
        return None
    eps = h[d - 1] - shift(expand(h[d], d), -1, -1)
    if eps <= 0:
        return None
    return SocleWitness(d - 1, eps, "maximal-growth")


def injectivity_defect(h: Sequence[int], l: Sequence[int], d: int) -> int:
    """``h_{d-1} - h_d + l_d``: kernel dimension of ``x L`` from degree ``d-1`` to ``d``."""
    if d < 1 or d >= len(h) or d >= len(l):
        raise IndexError(f"degree {d} out of range")
    return h[d - 1] - h[d] + l[d]


def injectivity_socle(h: Sequence[int], l: Sequence[int], d: int) -> SocleWitness | None:
    """Socle in degree ``d-1`` from injectivity at ``d`` and an ``s``-dimensional kernel at ``d-1``."""
    if injectivity_defect(h, l, d + 1) != 0:
        return None
    s = injectivity_defect(h, l, d)
    if s <= 0:
        return None
    return SocleWitness(d - 1, s, "injectivity")
