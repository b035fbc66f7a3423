"""Degree-capped graded ideals over a prime field.

A :class:`GradedIdealModel` stores, for every degree ``t <= cap``, an RREF matrix whose
row space is ``[I]_t`` in the monomial basis of ``R_t``. Colon ideals, restrictions and
truncations are computed degree by degree with exact mod-``p`` elimination.

"General linear form" statements are approximated by drawing coefficients uniformly from
the field; with ``p`` near ``2**31`` a bad draw is unlikely but not excluded.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

import numpy as np

from .linalg import DEFAULT_PRIME, left_kernel, matmul_mod, normal_form, rank, rank_exact, rref
from .macaulay import macaulay_bound

Poly = dict  # exponent tuple -> integer coefficient

DEFAULT_TRIALS = 3


# --- monomial bases ------------------------------------------------------------------

@lru_cache(maxsize=None)
def monomials(nvars: int, t: int) -> tuple[tuple[int, ...], ...]:
    """Degree-``t`` monomials in ``nvars`` variables, lex-descending (``x_0 > x_1 > ...``)."""
    if t < 0:
        return ()
    if nvars == 1:
        return ((t,),)
    out = []
    for a in range(t, -1, -1):
        for rest in monomials(nvars - 1, t - a):
            out.append((a,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, t: int) -> dict:
    return {m: i for i, m in enumerate(monomials(nvars, t))}


@lru_cache(maxsize=None)
def _times_var(nvars: int, t: int, i: int) -> np.ndarray:
    """Column positions in ``R_{t+1}`` of ``x_i * m`` for each ``m`` in ``R_t``."""
    idx = monomial_index(nvars, t + 1)
    out = []
    for m in monomials(nvars, t):
        e = list(m)
        e[i] += 1
        out.append(idx[tuple(e)])
    return np.array(out, dtype=np.int64)


def dim_R(nvars: int, t: int) -> int:
    return comb(nvars + t - 1, t) if t >= 0 else 0


def multiply_by_linear(V: np.ndarray, L: Sequence[int], nvars: int, t: int, p: int) -> np.ndarray:
    """Rows of ``V`` (in ``R_t``) multiplied by the linear form with coefficients ``L``."""
    V = np.asarray(V, dtype=np.int64)
    out = np.zeros((V.shape[0], dim_R(nvars, t + 1)), dtype=np.int64)
    for i, c in enumerate(L):
        c = int(c) % p
        if c == 0:
            continue
        out[:, _times_var(nvars, t, i)] += (V * c) % p
        out %= p
    return out


def multiply_by_variables(V: np.ndarray, nvars: int, t: int) -> np.ndarray:
    """Stack of ``x_i * V`` for all variables: spans ``R_1 * span(V)``."""
    V = np.asarray(V, dtype=np.int64)
    n1 = dim_R(nvars, t + 1)
    blocks = []
    for i in range(nvars):
        B = np.zeros((V.shape[0], n1), dtype=np.int64)
        B[:, _times_var(nvars, t, i)] = V
        blocks.append(B)
    if not blocks:
        return np.zeros((0, n1), dtype=np.int64)
    return np.concatenate(blocks, axis=0)


# --- polynomials ---------------------------------------------------------------------

def poly_from_json(data: Iterable[Mapping]) -> Poly:
    out: Poly = {}
    for term in data:
        e = tuple(int(x) for x in term["exp"])
        out[e] = out.get(e, 0) + int(term["coef"])
    return {e: c for e, c in out.items() if c != 0}


def poly_to_json(f: Poly) -> list[dict]:
    return [{"coef": int(c), "exp": list(e)} for e, c in sorted(f.items(), reverse=True)]


def poly_degree(f: Poly, index: int | None = None) -> int:
    degs = {sum(e) for e in f}
    if len(degs) != 1:
        where = "" if index is None else f" (generator {index})"
        raise ValueError(f"polynomial is not homogeneous{where}")
    return degs.pop()


def poly_vector(f: Poly, nvars: int, p: int) -> tuple[int, np.ndarray]:
    t = poly_degree(f)
    idx = monomial_index(nvars, t)
    v = np.zeros(dim_R(nvars, t), dtype=np.int64)
    for e, c in f.items():
        if len(e) != nvars:
            raise ValueError(f"exponent {e} does not have {nvars} entries")
        v[idx[e]] = (v[idx[e]] + c) % p
    return t, v


def linear_form(coeffs: Sequence[int]) -> Poly:
    n = len(coeffs)
    return {tuple(int(i == j) for j in range(n)): int(c) for i, c in enumerate(coeffs) if c}


def random_form(nvars: int, degree: int, rng: np.random.Generator, p: int = DEFAULT_PRIME,
                support: Sequence[tuple[int, ...]] | None = None) -> Poly:
    mons = monomials(nvars, degree) if support is None else support
    coefs = rng.integers(0, p, size=len(mons))
    return {m: int(c) for m, c in zip(mons, coefs) if c}


def poly_mul(f: Poly, g: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


def monomial_poly(exps: Sequence[int]) -> Poly:
    return {tuple(exps): 1}


# --- graded ideal model --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GradedIdealModel:
    nvars: int
    p: int
    cap: int
    bases: tuple[np.ndarray, ...]          # bases[t]: RREF rows spanning [I]_t
    generators: tuple[Poly, ...] = ()

    def dim(self, t: int) -> int:
        """``dim [I]_t``."""
        return int(self.bases[t].shape[0])

    def hilbert_function(self) -> list[int]:
        """``dim [R/I]_t`` for ``t = 0..cap``."""
        return [dim_R(self.nvars, t) - self.dim(t) for t in range(self.cap + 1)]

    def pivots(self, t: int) -> list[int]:
        B = self.bases[t]
        return [int(np.flatnonzero(row)[0]) for row in B]

    def contains(self, f: Poly) -> bool:
        t, v = poly_vector(f, self.nvars, self.p)
        if t > self.cap:
            raise ValueError("degree above cap")
        return not normal_form(v[None, :], self.bases[t], self.pivots(t), self.p).any()

    def same_as(self, other: "GradedIdealModel", upto: int | None = None) -> bool:
        top = min(self.cap, other.cap) if upto is None else upto
        return all(self.bases[t].shape == other.bases[t].shape
                   and np.array_equal(self.bases[t], other.bases[t]) for t in range(top + 1))

    def is_ideal(self) -> bool:
        """Check ``R_1 [I]_{t-1} <= [I]_t`` for every degree."""
        for t in range(1, self.cap + 1):
            up = multiply_by_variables(self.bases[t - 1], self.nvars, t - 1)
            if up.size and normal_form(up, self.bases[t], self.pivots(t), self.p).any():
                return False
        return True

    def minimal_generator_counts(self) -> list[int]:
        counts = [self.dim(0)]
        for t in range(1, self.cap + 1):
            up = multiply_by_variables(self.bases[t - 1], self.nvars, t - 1)
            counts.append(self.dim(t) - rank(up, self.p))
        return counts


def _empty(nvars: int, t: int) -> np.ndarray:
    return np.zeros((0, dim_R(nvars, t)), dtype=np.int64)


def _from_generators_by_degree(by_degree: dict[int, list[np.ndarray]], nvars: int, p: int,
                               cap: int) -> tuple[np.ndarray, ...]:
    bases = []
    prev = None
    for t in range(cap + 1):
        parts = []
        if prev is not None and prev.shape[0]:
            parts.append(multiply_by_variables(prev, nvars, t - 1))
        parts.extend(v[None, :] if v.ndim == 1 else v for v in by_degree.get(t, []))
        if parts:
            B, _ = rref(np.concatenate(parts, axis=0), p)
        else:
            B = _empty(nvars, t)
        bases.append(B)
        prev = B
    return tuple(bases)


def build_ideal(gens: Sequence[Poly], nvars: int, p: int = DEFAULT_PRIME,
                cap: int = 6) -> GradedIdealModel:
    """Ideal generated by homogeneous ``gens``, truncated at degree ``cap``."""
    by_degree: dict[int, list[np.ndarray]] = {}
    for k, g in enumerate(gens):
        if not g:
            continue
        t = poly_degree(g, k)
        _, v = poly_vector(g, nvars, p)
        if t <= cap:
            by_degree.setdefault(t, []).append(v)
    return GradedIdealModel(nvars, p, cap, _from_generators_by_degree(by_degree, nvars, p, cap),
                            tuple(gens))


def _linear_vector(model: GradedIdealModel, L: Sequence[int]) -> np.ndarray:
    if len(L) != model.nvars:
        raise ValueError("linear form has the wrong number of coefficients")
    return np.array([int(c) % model.p for c in L], dtype=np.int64)


def in_degree_one(model: GradedIdealModel, L: Sequence[int]) -> bool:
    if model.cap < 1:
        return False
    v = _linear_vector(model, L)
    return not normal_form(v[None, :], model.bases[1], model.pivots(1), model.p).any()


def restrict(model: GradedIdealModel, L: Sequence[int]) -> GradedIdealModel:
    """``(I, L)`` on the same degree window."""
    if in_degree_one(model, L):
        raise ValueError("linear form lies in [I]_1")
    v = _linear_vector(model, L)
    bases = [model.bases[0]]
    for t in range(1, model.cap + 1):
        ones = np.eye(dim_R(model.nvars, t - 1), dtype=np.int64)
        LR = multiply_by_linear(ones, v, model.nvars, t - 1, model.p)
        B, _ = rref(np.concatenate([model.bases[t], LR], axis=0), model.p)
        bases.append(B)
    gens = model.generators + (linear_form(list(L)),) if model.generators else ()
    return GradedIdealModel(model.nvars, model.p, model.cap, tuple(bases), gens)


def colon_linear(model: GradedIdealModel, L: Sequence[int]) -> GradedIdealModel:
    """``(I : L)`` in degrees ``0..cap-1``; ``[I:L]_t = {f : L f in [I]_{t+1}}``."""
    if in_degree_one(model, L):
        raise ValueError("linear form lies in [I]_1")
    v = _linear_vector(model, L)
    bases = []
    for t in range(model.cap):
        ones = np.eye(dim_R(model.nvars, t), dtype=np.int64)
        LR = multiply_by_linear(ones, v, model.nvars, t, model.p)
        reduced = normal_form(LR, model.bases[t + 1], model.pivots(t + 1), model.p)
        bases.append(left_kernel(reduced, model.p))
    return GradedIdealModel(model.nvars, model.p, model.cap - 1, tuple(bases))


def truncation_generated(model: GradedIdealModel, d: int) -> GradedIdealModel:
    """``J = <[I]_{<=d}>`` on the same degree window."""
    if d > model.cap:
        raise ValueError("truncation degree above cap")
    bases = list(model.bases[: d + 1])
    for t in range(d + 1, model.cap + 1):
        prev = bases[-1]
        if prev.shape[0]:
            B, _ = rref(multiply_by_variables(prev, model.nvars, t - 1), model.p)
        else:
            B = _empty(model.nvars, t)
        bases.append(B)
    return GradedIdealModel(model.nvars, model.p, model.cap, tuple(bases))


def random_linear_form(model: GradedIdealModel, rng: np.random.Generator) -> list[int]:
    """Uniform random linear form, rejection-sampled against ``[I]_1``."""
    for _ in range(1000):
        L = [int(x) for x in rng.integers(0, model.p, size=model.nvars)]
        if any(L) and not in_degree_one(model, L):
            return L
    raise RuntimeError("could not draw a linear form outside [I]_1")


# --- restriction profiles ------------------------------------------------------------

@dataclass
class RestrictionProfile:
    """Rows ``h = H(R/I)``, ``b = H(R/(I:L))``, ``l = H(R/(I,L))`` (plus ``J`` rows)."""

    h: list[int]
    b: list[int]
    l: list[int]
    p: int
    seed: int | None
    L: list[int]
    j_degree: int | None = None
    hJ: list[int] | None = None
    bJ: list[int] | None = None
    lJ: list[int] | None = None

    def rows(self) -> dict:
        out = {"h": self.h, "b": self.b, "l": self.l}
        if self.j_degree is not None:
            out.update(hJ=self.hJ, bJ=self.bJ, lJ=self.lJ)
        return out

    def to_json(self) -> dict:
        out = {"h": self.h, "b": self.b, "l": self.l, "p": self.p, "seed": self.seed,
               "L": self.L}
        if self.j_degree is not None:
            out.update(j_degree=self.j_degree, hJ=self.hJ, bJ=self.bJ, lJ=self.lJ)
        return out


def _rows_for(model: GradedIdealModel, L: Sequence[int]) -> tuple[list[int], list[int], list[int]]:
    h = model.hilbert_function()
    b = colon_linear(model, L).hilbert_function()
    l = restrict(model, L).hilbert_function()
    for i in range(1, len(b) + 1):
        if h[i] != b[i - 1] + l[i]:
            raise AssertionError(f"additivity fails in degree {i}: {h[i]} != {b[i - 1]} + {l[i]}")
    return h, b, l


def restriction_profile(model: GradedIdealModel, seed: int | None = 0,
                        L: Sequence[int] | None = None,
                        j_degree: int | None = None) -> RestrictionProfile:
    """Decomposition rows for a random (or given) linear form.

    With ``j_degree = d`` the rows of ``J = <[I]_{<=d}>`` are computed with the same form.
    """
    if L is None:
        L = random_linear_form(model, np.random.default_rng(seed))
    L = [int(c) % model.p for c in L]
    h, b, l = _rows_for(model, L)
    prof = RestrictionProfile(h, b, l, model.p, seed, L)
    if j_degree is not None:
        J = truncation_generated(model, j_degree)
        prof.j_degree = j_degree
        prof.hJ, prof.bJ, prof.lJ = _rows_for(J, L)
    return prof


def is_saturated_from(model: GradedIdealModel, m: int, trials: int = DEFAULT_TRIALS,
                      seed: int | None = 0) -> bool:
    """Whether ``(I:L)_t = I_t`` for ``m <= t <= cap-1`` for ``trials`` random ``L``.

    A ``False`` is certain; a ``True`` can be wrong only if every draw was special.
    """
    if m >= model.cap:
        raise ValueError("m must be below the degree cap")
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        L = random_linear_form(model, rng)
        C = colon_linear(model, L)
        if any(C.dim(t) != model.dim(t) for t in range(max(m, 0), model.cap)):
            return False
    return True


def saturation_onset(model: GradedIdealModel, trials: int = DEFAULT_TRIALS,
                     seed: int | None = 0) -> int | None:
    """Smallest ``m`` with :func:`is_saturated_from` true, or None inside the window."""
    for m in range(model.cap):
        if is_saturated_from(model, m, trials, seed):
            return m
    return None


def gotzmann_predict(h_d: int, d: int, horizon: int) -> list[int]:
    """``h_{d+1}, ..., h_{d+horizon}`` forced by maximal growth from degree ``d``."""
    out = []
    cur = h_d
    for t in range(d, d + horizon):
        cur = macaulay_bound(cur, t)
        out.append(cur)
    return out


# --- apolarity -----------------------------------------------------------------------

def _falling(b: Sequence[int], a: Sequence[int]) -> int:
    out = 1
    for bi, ai in zip(b, a):
        out *= factorial(bi) // factorial(bi - ai)
    return out


def catalecticant(F: Poly, nvars: int, i: int) -> list[list[int]]:
    """Matrix of the degree-``i`` partial derivatives of ``F`` in the monomial basis."""
    d = poly_degree(F)
    rows = []
    for a in monomials(nvars, i):
        row = []
        for c in monomials(nvars, d - i):
            b = tuple(x + y for x, y in zip(a, c))
            coef = F.get(b, 0)
            row.append(coef * _falling(b, a) if coef else 0)
        rows.append(row)
    return rows


def apolar_hf(F: Poly, nvars: int) -> list[int]:
    """Hilbert function of the apolar algebra of ``F`` (ranks of catalecticants over Q)."""
    if not F:
        raise ValueError("F must be nonzero")
    for e in F:
        if len(e) != nvars:
            raise ValueError(f"exponent {e} does not have {nvars} entries")
    d = poly_degree(F)
    return [rank_exact(catalecticant(F, nvars, i)) for i in range(d + 1)]


# --- brute-force Betti numbers of monomial quotients ---------------------------------

def _divides(g: Sequence[int], m: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(g, m))


def koszul_betti(gens: Sequence[Sequence[int]], nvars: int, top_degree: int,
                 p: int = 32003) -> dict[tuple[int, int], int]:
    """Graded Betti numbers of an artinian monomial quotient ``R/I`` via Koszul homology.

    ``beta_{i,j} = dim H_i(K(x; R/I))_j``. Every monomial of degree ``top_degree + 1`` must
    lie in ``I``; the quotient is read off monomial by monomial, so this is plain exact
    linear algebra over ``GF(p)`` and independent of any resolution formula.
    """
    gens = [tuple(g) for g in gens]

    def standard(t):
        return [m for m in monomials(nvars, t) if not any(_divides(g, m) for g in gens)]

    if standard(top_degree + 1):
        raise ValueError(f"quotient is nonzero in degree {top_degree + 1}")
    std = {t: standard(t) for t in range(top_degree + 1)}
    std_idx = {t: {m: k for k, m in enumerate(ms)} for t, ms in std.items()}
    subsets = {i: list(itertools.combinations(range(nvars), i)) for i in range(nvars + 1)}

    def basis(i, j):
        t = j - i
        if t < 0 or t > top_degree:
            return []
        return [(S, m) for S in subsets[i] for m in std[t]]

    def boundary_rank(i, j):
        # K_{i,j} -> K_{i-1,j}: e_S (x) m  ->  sum_pos (-1)^pos e_{S - s} (x) x_s m
        if i == 0 or i > nvars:
            return 0
        src, dst = basis(i, j), basis(i - 1, j)
        if not src or not dst:
            return 0
        t = j - i
        dst_pos = {key: k for k, key in enumerate(dst)}
        M = np.zeros((len(src), len(dst)), dtype=np.int64)
        for r, (S, m) in enumerate(src):
            for pos, s in enumerate(S):
                e = list(m)
                e[s] += 1
                e = tuple(e)
                if e not in std_idx.get(t + 1, {}):
                    continue
                c = dst_pos[(S[:pos] + S[pos + 1:], e)]
                M[r, c] = (M[r, c] + (1 if pos % 2 == 0 else p - 1)) % p
        return rank(M, p)

    out = {}
    for j in range(top_degree + nvars + 1):
        for i in range(min(j, nvars) + 1):
            dim = len(basis(i, j))
            if not dim:
                continue
            val = dim - boundary_rank(i, j) - boundary_rank(i + 1, j)
            if val:
                out[(i, j)] = val
    return out


def monomial_socle(gens: Sequence[Sequence[int]], nvars: int, max_degree: int) -> list[int]:
    """Per-degree count of standard monomials ``m`` with ``x_i m`` in ``I`` for every ``i``."""
    gens = [tuple(g) for g in gens]
    inI = lambda m: any(_divides(g, m) for g in gens)
    out = []
    for t in range(max_degree + 1):
        cnt = 0
        for m in monomials(nvars, t):
            if inI(m):
                continue
            ups = []
            for i in range(nvars):
                e = list(m)
                e[i] += 1
                ups.append(inI(e))
            cnt += all(ups)
        out.append(cnt)
    return out


def load_polys(text: str) -> list[Poly]:
    """Parse a JSON list of polynomials (each a list of ``{"coef", "exp"}`` terms)."""
    data = json.loads(text)
    if data and isinstance(data[0], dict):
        data = [data]
    return [poly_from_json(f) for f in data]
