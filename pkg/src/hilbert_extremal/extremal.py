"""Extremal hyperplane restrictions.

When the restriction of ``R/I`` to a general hyperplane is as large as Green's bound
allows, and ``h_d`` has the expansion ``C(d+c, d) + ... + C(d+c-k, d-k)``, the degree-``d``
component of ``I`` cuts out a degree-``k+1`` hypersurface in a ``(c+1)``-dimensional linear
space (a characteristic-zero statement; only its numerical consequences are checked here).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .macaulay import (BinomialExpansion, binom, expand, green_bound, last_bottom,
                       last_top, macaulay_bound, shift)


@dataclass(frozen=True)
class ExtremalForm:
    d: int
    c: int
    k: int

    @property
    def lambda_dim(self) -> int:
        """Projective dimension of the linear span."""
        return self.c + 1

    @property
    def hypersurface_degree(self) -> int:
        return self.k + 1

    def to_json(self) -> dict:
        return {"d": self.d, "c": self.c, "k": self.k, "lambda_dim": self.lambda_dim,
                "hypersurface_degree": self.hypersurface_degree}


def recognize_hypersurface_form(h: int, d: int) -> ExtremalForm | None:
    """Return ``(c, k)`` when ``expand(h, d)`` has constant ``top - bottom = c``."""
    if h < 1:
        return None
    e = expand(h, d)
    offsets = {t - b for t, b in e.terms}
    if len(offsets) != 1:
        return None
    return ExtremalForm(d, offsets.pop(), len(e.terms) - 1)


def predicted_scheme_hf(f: ExtremalForm, t: int) -> int:
    """Hilbert function in degree ``t`` of a degree-``k+1`` hypersurface in ``P^{c+1}``."""
    if t < 0:
        raise ValueError("degree must be nonnegative")
    return sum(binom(t + f.c - j, t - j) for j in range(f.k + 1))


@dataclass(frozen=True)
class HilbertPolynomialEval:
    """Evaluator ``t -> P(d + t)`` built from the degree-``d`` expansion tops."""

    d: int
    tops: tuple[int, ...]

    def __call__(self, t: int) -> int:
        return sum(binom(a + t, self.d - j + t) for j, a in enumerate(self.tops))

    def at_degree(self, n: int) -> int:
        return self(n - self.d)


def hilbert_polynomial(exp: BinomialExpansion, d: int | None = None) -> HilbertPolynomialEval:
    if not exp.terms:
        raise ValueError("empty expansion")
    if d is not None and d != exp.degree:
        raise ValueError(f"expansion is in degree {exp.degree}, not {d}")
    return HilbertPolynomialEval(exp.degree, exp.tops)


@dataclass(frozen=True)
class BackwardRecursion:
    values: tuple[int, ...]     # h_1 .. h_d
    span_dim: int

    def to_json(self) -> dict:
        return {"values": list(self.values), "span_dim": self.span_dim}


def backward_hf_recursion(h: int, d: int) -> BackwardRecursion:
    """Recover ``h_1..h_d`` from ``h_d`` via ``h_{k-1} = h_k - green_bound(h_k, k)``.

    Requires the last expansion term ``C(a_e, e)`` to have ``a_e > e``. The recovered
    ``h_1`` must equal ``a_d - d + 2``; the span has projective dimension ``a_d - d + 1``.
    A single-term expansion ``C(a_d, d)`` is a linear space itself, so there ``h_1`` is
    ``a_d - d + 1`` and the span drops by one.
    """
    e = expand(h, d)
    if not e.terms:
        raise ValueError("h must be positive")
    if last_top(e) <= last_bottom(e):
        raise ValueError(f"hypothesis a_e > e fails for {e}")
    vals = [h]
    for k in range(d, 1, -1):
        vals.append(vals[-1] - green_bound(vals[-1], k))
    vals.reverse()
    a_d = e.terms[0][0]
    span = a_d - d + 1 if len(e.terms) > 1 else a_d - d
    if vals[0] != span + 1:
        raise AssertionError(f"h_1 = {vals[0]} but expected {span + 1} for {e}")
    return BackwardRecursion(tuple(vals), span)


def sequential_green_targets(h: int, d: int, s: int) -> list[int]:
    """Successive sharp restriction values ``(h)|^{-1}_0, ..., (h)|^{-s}_0``."""
    if s <= 0:
        return []
    e = expand(h, d)
    if not e.terms or last_bottom(e) < 2:
        raise ValueError(f"needs last bottom >= 2, got {e}")
    return [shift(e, 0, -j) for j in range(1, s + 1)]


# --- relating Green sharpness and Macaulay maximal growth -----------------------------

def _max_growth(row: Sequence[int] | None, d: int) -> bool | None:
    """``row[d+1] == macaulay_bound(row[d], d)``, or None if data is missing."""
    if row is None or d < 1 or d + 1 >= len(row):
        return None
    return row[d + 1] == macaulay_bound(row[d], d)


@dataclass
class ConditionValue:
    condition: str
    description: str
    value: bool | None

    @property
    def data_sufficient(self) -> bool:
        return self.value is not None


@dataclass
class RelateReport:
    d: int
    injective_at_d: bool | None
    injective_at_d_minus_1: bool | None
    last_bottom: int
    gate: bool
    part_a: list[ConditionValue]
    part_b: list[ConditionValue]
    m_sharp_from: int | None = None
    g_max_from: int | None = None
    window_end: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def hypotheses_a(self) -> bool:
        return bool(self.gate and self.injective_at_d)

    @property
    def hypotheses_b(self) -> bool:
        return bool(self.gate and self.injective_at_d_minus_1)

    @staticmethod
    def _agree(conds: list[ConditionValue]) -> bool:
        vals = {c.value for c in conds if c.value is not None}
        return len(vals) <= 1

    @property
    def violations(self) -> list[str]:
        """Parts whose hypotheses hold but whose conditions disagree."""
        out = []
        if self.hypotheses_a and not self._agree(self.part_a):
            out.append("a")
        if self.hypotheses_b and not self._agree(self.part_b):
            out.append("b")
        return out

    def to_json(self) -> dict:
        flags = {"injective_at_d": self.injective_at_d,
                 "injective_at_d_minus_1": self.injective_at_d_minus_1,
                 "last_bottom": self.last_bottom, "e_ge_2": self.gate}

        def rows(conds, part_flags):
            return [{"condition": c.condition, "description": c.description,
                     "value": c.value, "data_sufficient": c.data_sufficient,
                     "hypothesis_flags": part_flags} for c in conds]

        return {
            "d": self.d,
            "hypothesis_flags": flags,
            "part_a": rows(self.part_a, {"injective_at_d": self.injective_at_d,
                                         "e_ge_2": self.gate}),
            "part_b": rows(self.part_b, {"injective_at_d_minus_1": self.injective_at_d_minus_1,
                                         "e_ge_2": self.gate}),
            "hypotheses_a": self.hypotheses_a,
            "hypotheses_b": self.hypotheses_b,
            "violations": self.violations,
            "m_sharp_from": self.m_sharp_from,
            "g_max_from": self.g_max_from,
            "window_end": self.window_end,
            "notes": list(self.notes),
        }


def _get(row, i):
    if row is None or i < 0 or i >= len(row):
        return None
    return row[i]


def _profile_rows(profile) -> dict:
    if isinstance(profile, dict):
        return profile
    return profile.rows()


def sharp_and_growth_onsets(h: Sequence[int], l: Sequence[int]) -> tuple[int | None, int | None, int]:
    """Smallest ``t`` from which Green is sharp / growth is maximal through the window end.

    The window is the supplied rows; beyond it nothing is known.
    """
    end = min(len(h), len(l)) - 1
    sharp = [l[k] == green_bound(h[k], k) for k in range(1, end + 1)]
    m = None
    for k in range(end, 0, -1):
        if not sharp[k - 1]:
            break
        m = k
    g = None
    for k in range(len(h) - 2, 0, -1):
        if h[k + 1] != macaulay_bound(h[k], k):
            break
        g = k
    return m, g, end


def relate_report(profile, d: int) -> RelateReport:
    """Evaluate both equivalence lists at degree ``d`` on a restriction profile.

    ``profile`` is a mapping (or an object with ``rows()``) carrying ``h``, ``b``, ``l``
    for ``R/I``, ``R/(I:L)``, ``R/(I,L)``; optionally ``hJ``, ``bJ``, ``lJ`` for
    ``J = <I_{<=d}>`` and ``scheme = {"h": ..., "l": ...}`` for a saturated model.
    Missing rows leave the affected conditions at ``None``.
    """
    rows = _profile_rows(profile)
    h, b, l = rows.get("h"), rows.get("b"), rows.get("l")
    bJ, hJ = rows.get("bJ"), rows.get("hJ")
    if h is None or d < 2 or d >= len(h):
        raise ValueError("profile must carry h with d in range, d >= 2")
    hd = h[d]
    exp = expand(hd, d)
    lb = last_bottom(exp) if exp.terms else 0
    gate = lb >= 2

    def defect(k):
        vals = (_get(h, k - 1), _get(h, k), _get(l, k))
        if None in vals:
            return None
        return vals[0] - vals[1] + vals[2]

    inj_d = None if defect(d + 1) is None else defect(d + 1) == 0
    inj_dm1 = None if defect(d) is None else defect(d) == 0

    ld = _get(l, d)
    green_sharp = None if ld is None else ld == green_bound(hd, d)
    green_desc = "Green restriction bound is sharp for R/I in degree d"
    a = [
        ConditionValue("a.i", green_desc, green_sharp),
        ConditionValue("a.ii", "R/(I:L) has maximal growth from d-1 to d", _max_growth(b, d - 1)),
        ConditionValue("a.iii", "R/(J:L) has maximal growth from d-1 to d", _max_growth(bJ, d - 1)),
        ConditionValue("a.iv", "R/J has maximal growth from d to d+1", _max_growth(hJ, d)),
    ]
    bpart = [
        ConditionValue("b.i", green_desc, green_sharp),
        ConditionValue("b.ii", "R/I has maximal growth from d-1 to d", _max_growth(h, d - 1)),
        ConditionValue("b.iii", "R/(J:L) has maximal growth from d-1 to d", _max_growth(bJ, d - 1)),
    ]
    rep = RelateReport(d, inj_d, inj_dm1, lb, gate, a, bpart)
    if not gate:
        rep.notes.append(f"last bottom of {exp} is {lb} < 2: the conditions need not agree")
    scheme = rows.get("scheme")
    if scheme is not None:
        rep.m_sharp_from, rep.g_max_from, rep.window_end = sharp_and_growth_onsets(
            scheme["h"], scheme["l"])
    for part in rep.violations:
        rep.notes.append(f"counterexample: part ({part}) hypotheses hold but conditions disagree")
    return rep
