"""A replayable elimination of (1,19,17,19,1) and the (1,r,r-2,r,1) classifier.

A :class:`ProofTrace` is an ordered list of steps. A ``machine_checked`` step names a rule
from :data:`RULES`, its inputs and the outputs the rule produced; replay re-runs the rule
and compares. A ``cited_axiom`` step carries bibliography keys and is never replayed.

Inputs may point at earlier outputs with ``{"ref": step_id, "key": name}`` (plus an
optional ``"index"``), so tampering with one step is caught at that step rather than
silently flowing into later ones.

Case splits are steps whose outputs contain ``"cases"``. The trace's ``case_tree`` maps
each split and case to the step that closes it (an output ``"contradiction": true``) or
to a further split. The conclusion is only drawn when every leaf is closed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import comb
from typing import Any, Callable

import numpy as np

from . import decomposition as dec
from . import engine
from . import extremal
from . import lex
from .macaulay import expand, green_bound, is_o_sequence, macaulay_bound

MACHINE = "machine_checked"
CITED = "cited_axiom"

H19 = (1, 19, 17, 19, 1)


class ReplayError(Exception):
    def __init__(self, step_id: str, message: str):
        super().__init__(f"step {step_id}: {message}")
        self.step_id = step_id


# --- rules ---------------------------------------------------------------------------

RULES: dict[str, Callable[..., dict]] = {}


def rule(name):
    def wrap(fn):
        RULES[name] = fn
        return fn
    return wrap


def _witness(w):
    return None if w is None else w.to_json()


@rule("macaulay_split")
def _macaulay_split(h, d, floor):
    bound = macaulay_bound(h, d)
    cases = [str(v) for v in range(bound, floor, -1)] + [f"<={floor}"]
    return {"bound": bound, "cases": cases}


@rule("zanello_socle")
def _zanello(h, d):
    w = dec.zanello_socle(h, d)
    top = len(h) - 1
    return {"witness": _witness(w), "contradiction": w is not None and w.degree < top}


@rule("injectivity_socle")
def _injectivity(h, l, d):
    w = dec.injectivity_socle(h, l, d)
    return {"defect_at_d_plus_1": dec.injectivity_defect(h, l, d + 1),
            "witness": _witness(w), "contradiction": w is not None}


@rule("lex_cancellation")
def _lex_cancellation(h, nvars, truncate, i, j, columns):
    I = lex.truncate_ideal(lex.lex_ideal(h, nvars), truncate)
    B = lex.ek_betti(I)
    table = {str(r): [B[(c, c + r)] for c in columns] for r in range(B.max_strand + 1)}
    bound = lex.cancellation_socle_lower_bound(B, i, j)
    return {
        "generator_counts": {str(k): v for k, v in I.generator_counts().items()},
        "table_columns": list(columns),
        "table": table,
        "lower_bound": bound,
        "socle_degree": j - nvars if i == nvars else None,
        "contradiction": bound > 0 and i == nvars and j - nvars < len(h) - 1,
    }


@rule("at_most")
def _at_most(value, bound):
    return {"holds": value <= bound}


@rule("enumerate_gorenstein")
def _enumerate(h):
    ds = dec.enumerate_gorenstein_decompositions(h)
    return {"decompositions": [D.to_json() for D in ds],
            "cases": [f"b={D.b[1]}" for D in ds]}


@rule("green_bound")
def _green(h, d):
    return {"bound": green_bound(h, d)}


@rule("hypersurface_form")
def _form(h, d, l=None):
    f = extremal.recognize_hypersurface_form(h, d)
    out = {"form": None if f is None else f.to_json()}
    if l is not None:
        out["green_sharp"] = l == green_bound(h, d)
    return out


@rule("hypersurface_growth")
def _growth(c, k, d, t, cap):
    value = extremal.predicted_scheme_hf(extremal.ExtremalForm(d, c, k), t)
    return {"value": value, "contradiction": value > cap}


@rule("gotzmann")
def _gotzmann(h_d, d, horizon):
    return {"values": engine.gotzmann_predict(h_d, d, horizon)}


@rule("alpha_window")
def _alpha_window(h_base, b_base, l_next, h_max, b_max, d):
    # h_{d} = h_base - alpha, b_{d-1} = b_base + alpha, l_d fixed
    alphas = [a for a in range(-h_base, h_base + 1)
              if 0 <= h_base - a <= h_max and 0 <= b_base + a <= b_max
              and green_bound(h_base - a, d) >= l_next]
    return {"alphas": alphas}


@rule("green_preimage")
def _green_preimage(h_max, d, l_min):
    """Values ``h <= h_max`` whose Green bound in degree ``d`` reaches ``l_min``."""
    return {"values": [h for h in range(h_max + 1) if green_bound(h, d) >= l_min]}


@rule("squeeze")
def _squeeze(l_prev, l_cur, d):
    lower = l_cur - l_prev
    upper = green_bound(l_cur, d)
    return {"lower": lower, "upper": upper, "forced": lower if lower == upper else None}


@rule("macaulay_preimage")
def _macaulay_preimage(upper, d, next_value):
    vals = [x for x in range(upper + 1) if macaulay_bound(x, d) >= next_value]
    return {"values": vals, "cases": [str(x) for x in vals]}


@rule("extend_by_injectivity")
def _extend(h, l, l_next):
    # multiplication by L injective from the last degree: b_{e} = h_{e}
    e = len(h) - 1
    b = [h[i + 1] - l[i + 1] for i in range(e)] + [h[e]]
    D = dec.Decomposition(list(h) + [h[e] + l_next], b, list(l) + [l_next])
    rep = dec.validate_decomposition(D)
    return {"decomposition": D.to_json(), "valid": rep.valid}


@rule("max_growth")
def _max_growth(h, d):
    e = expand(h, d)
    return {"expansion": [list(t) for t in e.terms], "next": macaulay_bound(h, d)}


@rule("degree_rows")
def _degree_rows(h_max, b_options, l_options, d):
    rows = []
    for b in sorted(b_options, reverse=True):
        for lv in sorted(set(l_options)):
            hv = b + lv
            if hv <= h_max and lv <= green_bound(hv, d):
                rows.append([hv, b, lv])
    rows.sort(key=lambda r: (-r[0], -r[1]))
    return {"rows": rows, "cases": [f"({a},{b},{c})" for a, b, c in rows]}


@rule("column")
def _column(h, l):
    """Degree column ``(h_d, b_{d-1}, l_d)`` from additivity."""
    return {"row": [h, h - l, l]}


@rule("same_row")
def _same_row(row, closed_row):
    same = list(row) == list(closed_row)
    return {"same": same, "contradiction": same}


@rule("select_by_value")
def _select(rows, degree, value):
    keep = [k for k in sorted(rows) if rows[k][degree] == value]
    return {"cases": keep}


@rule("engine_hf")
def _engine_hf(gens, nvars, cap, p, L=None):
    model = engine.build_ideal([engine.poly_from_json(g) for g in gens], nvars, p, cap)
    out = {"h": model.hilbert_function()}
    if L is not None:
        out["l"] = engine.restrict(model, L).hilbert_function()
    return out


@rule("hilbert_slack")
def _slack(value, scheme_value):
    """Extra points ``m`` allowed when ``value >= scheme_value + m``."""
    return {"m_values": list(range(0, value - scheme_value + 1))}


# --- trace ---------------------------------------------------------------------------

@dataclass
class Step:
    id: str
    rule: str
    inputs: dict
    outputs: dict
    status: str = MACHINE
    citation: list[str] = field(default_factory=list)
    claim: str = ""
    group: str | None = None
    note: str | None = None

    def to_json(self) -> dict:
        out = {"id": self.id, "rule": self.rule, "inputs": self.inputs,
               "outputs": self.outputs, "status": self.status,
               "citation": list(self.citation), "claim": self.claim}
        if self.group is not None:
            out["group"] = self.group
        if self.note is not None:
            out["note"] = self.note
        return out

    @classmethod
    def from_json(cls, d: dict) -> "Step":
        return cls(d["id"], d["rule"], d["inputs"], d["outputs"], d["status"],
                   list(d.get("citation", [])), d.get("claim", ""), d.get("group"),
                   d.get("note"))


def _normalize(x):
    return json.loads(json.dumps(x, sort_keys=True))


def _resolve(value, outputs: dict[str, dict]):
    if isinstance(value, dict):
        if set(value) <= {"ref", "key", "index"} and "ref" in value and "key" in value:
            if value["ref"] not in outputs:
                raise KeyError(f"reference to unknown or later step {value['ref']}")
            v = outputs[value["ref"]][value["key"]]
            if "index" in value:
                for i in (value["index"] if isinstance(value["index"], list) else [value["index"]]):
                    v = v[i]
            return v
        return {k: _resolve(v, outputs) for k, v in value.items()}
    if isinstance(value, list):
        return [_resolve(v, outputs) for v in value]
    return value


def ref(step_id: str, key: str, index=None) -> dict:
    out = {"ref": step_id, "key": key}
    if index is not None:
        out["index"] = index
    return out


@dataclass
class ProofTrace:
    claim: str
    steps: list[Step]
    case_tree: dict[str, dict[str, str]]
    root: str
    conclusion: str | None = None

    def step(self, step_id: str) -> Step:
        for s in self.steps:
            if s.id == step_id:
                return s
        raise KeyError(step_id)

    def cited_groups(self) -> list[str]:
        return sorted({s.group or s.id for s in self.steps if s.status == CITED})

    def to_json(self) -> dict:
        return {"claim": self.claim, "root": self.root, "conclusion": self.conclusion,
                "case_tree": self.case_tree, "steps": [s.to_json() for s in self.steps]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1)

    @classmethod
    def from_json(cls, d: dict) -> "ProofTrace":
        return cls(d["claim"], [Step.from_json(s) for s in d["steps"]], d["case_tree"],
                   d["root"], d.get("conclusion"))

    def render(self) -> str:
        lines = [self.claim, ""]
        for s in self.steps:
            tag = "cited" if s.status == CITED else "check"
            lines.append(f"[{s.id}] ({tag}) {s.claim}")
            if s.status == CITED:
                lines.append(f"      sources: {', '.join(s.citation)}")
            else:
                shown = {k: v for k, v in s.outputs.items() if k not in ("table",)}
                lines.append(f"      {s.rule} -> {json.dumps(shown, sort_keys=True)}")
            if s.note:
                lines.append(f"      note: {s.note}")
        lines.append("")
        lines.append(f"conclusion: {self.conclusion}")
        return "\n".join(lines)


class _Builder:
    def __init__(self):
        self.steps: list[Step] = []
        self.outputs: dict[str, dict] = {}

    def check(self, step_id, rule_name, inputs, claim, note=None, citation=()):
        resolved = _resolve(inputs, self.outputs)
        out = _normalize(RULES[rule_name](**resolved))
        self.steps.append(Step(step_id, rule_name, _normalize(inputs), out, MACHINE,
                               list(citation), claim, None, note))
        self.outputs[step_id] = out
        return out

    def cite(self, step_id, citation, claim, group, premises):
        self.steps.append(Step(step_id, "cited", _normalize(premises), {}, CITED,
                               list(citation), claim, group))
        self.outputs[step_id] = {}


def bibliography() -> dict:
    return _load_json("bibliography.json")


@lru_cache(maxsize=None)
def _load_text(name: str) -> str:
    return resources.files("hilbert_extremal").joinpath("data", name).read_text()


def _load_json(name: str) -> dict:
    return json.loads(_load_text(name))


def verify_trace(trace: ProofTrace) -> str:
    """Replay every machine-checked step and check the case tree; return the conclusion.

    Raises :class:`ReplayError` naming the first step that fails.
    """
    bib = bibliography()["entries"]
    outputs: dict[str, dict] = {}
    seen = set()
    for s in trace.steps:
        if s.id in seen:
            raise ReplayError(s.id, "duplicate step id")
        seen.add(s.id)
        for key in s.citation:
            if key not in bib and key not in RULES and key != "prove_not_gorenstein_19":
                raise ReplayError(s.id, f"citation {key!r} not in the bibliography")
        if s.status == CITED:
            if not s.citation:
                raise ReplayError(s.id, "cited step without a citation")
            outputs[s.id] = {}
            continue
        if s.status != MACHINE:
            raise ReplayError(s.id, f"unknown status {s.status!r}")
        if s.rule not in RULES:
            raise ReplayError(s.id, f"unknown rule {s.rule!r}")
        try:
            got = _normalize(RULES[s.rule](**_resolve(s.inputs, outputs)))
        except Exception as exc:  # a broken input is a failed replay
            raise ReplayError(s.id, f"rule raised {exc!r}") from exc
        if got != _normalize(s.outputs):
            raise ReplayError(s.id, "recomputed outputs differ from the recorded ones")
        outputs[s.id] = got

    def closed(node: str, path: tuple) -> bool:
        if node in path:
            raise ReplayError(node, "cycle in case tree")
        out = outputs.get(node)
        if out is None:
            raise ReplayError(node, "case tree names a missing step")
        if node in trace.case_tree:
            branches = trace.case_tree[node]
            if sorted(branches) != sorted(out.get("cases", [])):
                raise ReplayError(node, "case tree does not match the computed cases")
            return all(closed(nxt, path + (node,)) for nxt in branches.values())
        if not out.get("contradiction"):
            raise ReplayError(node, "branch leaf is not a contradiction")
        return True

    return "not_gorenstein" if closed(trace.root, ()) else "open"


def _rand_forms(rng, nvars, degree, count, p):
    return [engine.random_form(nvars, degree, rng, p) for _ in range(count)]


def prove_not_gorenstein_19(seed: int = 0, p: int = engine.DEFAULT_PRIME) -> ProofTrace:
    """Build and replay the case analysis showing (1,19,17,19,1) is not Gorenstein.

    ``J`` is the ideal generated by the components of degree at most 3 of a hypothetical
    Gorenstein ideal ``I``. Random polynomials used for the engine checks are drawn from
    ``seed`` once and stored in the trace, so replay does not depend on the seed.
    """
    B = _Builder()
    h = list(H19)

    B.check("1.macaulay", "macaulay_split", {"h": 19, "d": 3, "floor": 28},
            "H(R/J,4) is at most the Macaulay bound of 19 in degree 3")
    B.check("2.value31", "zanello_socle", {"h": [1, 19, 17, 19, 31], "d": 3},
            "H(R/J,4) = 31 is maximal growth, forcing socle in degree 2")
    for v, label in ((30, "3.value30"), (29, "3.value29")):
        B.check(label, "lex_cancellation",
                {"h": [1, 19, 17, 19, v], "nvars": 19, "truncate": 4, "i": 19, "j": 21,
                 "columns": [0, 1, 18, 19]},
                f"H(R/J,4) = {v}: the truncated lex ideal keeps beta_19,21 after cancellation",
                citation=["eliahou-kervaire", "peeva"])
    B.check("4.reduction", "at_most", {"value": 28, "bound": ref("1.macaulay", "bound")},
            "remaining values of H(R/J,4) are at most 28")
    B.check("5.decompositions", "enumerate_gorenstein", {"h": h},
            "decompositions of H with symmetric middle row")

    # Case 1
    B.check("6.case1.form", "hypersurface_form", {"h": 19, "d": 3, "l": 9},
            "Case 1: 19 in degree 3 has extremal form and l_3 = 9 is Green-sharp",
            citation=["green"])
    B.check("6.case1.growth", "hypersurface_growth",
            {"c": ref("6.case1.form", "form", "c"), "k": ref("6.case1.form", "form", "k"),
             "d": 3, "t": 4, "cap": 28},
            "Case 1: the cubic hypersurface forces H(R/J,4) = 31 > 28")

    # Case 3
    B.check("7.case3.gotzmann", "gotzmann", {"h_d": 5, "d": 2, "horizon": 2},
            "Case 3: l = (1,18,5,7) has maximal growth; persistence gives l_4 = 9",
            citation=["gotzmann"])
    B.check("7.case3.alpha", "alpha_window",
            {"h_base": 28, "b_base": 19, "l_next": ref("7.case3.gotzmann", "values", 1),
             "h_max": 28, "b_max": 19, "d": 4},
            "Case 3: H(R/J,4) <= 28 and H(R/(J:L),3) <= 19 force alpha = 0")
    B.check("7.case3.socle", "injectivity_socle",
            {"h": [1, 19, 17, 19, 28], "l": [1, 18, 5, 7, ref("7.case3.gotzmann", "values", 1)],
             "d": 3},
            "Case 3: injectivity from degree 3 and a kernel from degree 2 give socle")

    # Case 2
    B.check("8.case2.green", "green_bound", {"h": 6, "d": 2},
            "Case 2: H(R/(J,L1,L2),2) <= green bound of l_2 = 6")
    B.check("8.case2.squeeze", "squeeze", {"l_prev": 6, "l_cur": 8, "d": 3},
            "Case 2: l_3 - l_2 <= H(R/(J,L1,L2),3) <= green bound of 8 in degree 3")
    B.check("8.case2.split", "macaulay_preimage",
            {"upper": ref("8.case2.green", "bound"), "d": 2,
             "next_value": ref("8.case2.squeeze", "forced")},
            "Case 2: H(R/(J,L1,L2),2) is 2 or 3")

    # Case 2(a)
    B.check("8a.persistence", "gotzmann",
            {"h_d": ref("8.case2.squeeze", "forced"), "d": 3, "horizon": 1},
            "Case 2(a): (J,L1,L2) is 2-regular, so its quotient stays at 2 in degree 4",
            citation=["gotzmann"])
    B.check("8a.restriction", "extend_by_injectivity",
            {"h": [1, 18, 6, 8], "l": [1, 17, 2, 2],
             "l_next": ref("8a.persistence", "values", 0)},
            "Case 2(a): multiplication by L2 is injective from degree 3, so l_4 = 10")
    B.check("8a.alpha", "green_preimage",
            {"h_max": 28, "d": 4,
             "l_min": ref("8a.restriction", "decomposition", ["h", 4])},
            "Case 2(a): h_4 <= 28 with green bound at least 10 forces h_4 = 28")
    B.check("8a.column", "column",
            {"h": ref("8a.alpha", "values", 0),
             "l": ref("8a.restriction", "decomposition", ["h", 4])},
            "Case 2(a): the degree-4 column of R/J is (28, 18, 10), so alpha = 0")
    B.check("8a.growth", "max_growth", {"h": ref("8a.alpha", "values", 0), "d": 4},
            "Case 2(a): 28 = C(6,4)+C(5,3)+C(3,2); J saturated in degree 4 grows maximally")
    B.check("8a.socle", "zanello_socle",
            {"h": [1, 19, 17, 19, ref("8a.alpha", "values", 0), ref("8a.growth", "next")],
             "d": 4},
            "Case 2(a): maximal growth from degree 4 forces socle in degree 3",
            citation=["zanello"])

    # Case 2(b)
    B.check("8b.plane", "hypersurface_form", {"h": 6, "d": 2},
            "Case 2(b): l_2 = 6 = C(4,2) with sharp restriction cuts out a plane",
            citation=["green"])
    rng = np.random.default_rng(seed)
    c1, c2 = _rand_forms(rng, 3, 3, 2, p)
    lin = engine.random_form(3, 1, rng, p)
    g1, g2 = _rand_forms(rng, 3, 2, 2, p)
    q = engine.random_form(3, 2, rng, p)
    m1, m2 = _rand_forms(rng, 3, 1, 2, p)
    plane = {
        "i": [c1, c2],
        "ii": [engine.poly_mul(lin, g1), engine.poly_mul(lin, g2)],
        "iii": [engine.poly_mul(q, m1), engine.poly_mul(q, m2)],
    }
    for key, gens in plane.items():
        B.check(f"8b.plane_hf.{key}", "engine_hf",
                {"gens": [engine.poly_to_json(g) for g in gens], "nvars": 3, "cap": 5,
                 "p": p},
                f"Case 2(b)({key}): Hilbert function of the plane quotient R/(J,L1)")
    B.check("8b.colon", "green_preimage", {"h_max": 19, "d": 3, "l_min": 8},
            "Case 2(b): H(R/(J:L1),3) <= 19 restricts onto 8, so it is 18 or 19")
    B.check("8b.decompositions", "degree_rows",
            {"h_max": 28, "b_options": ref("8b.colon", "values"),
             "l_options": [ref(f"8b.plane_hf.{k}", "h", 4) for k in plane], "d": 4},
            "Case 2(b): the degree-4 columns (h_4, b_3, l_4) allowed by h_4 <= 28")
    B.check("8b.first", "injectivity_socle",
            {"h": [1, 19, 17, 19, 28], "l": [1, 18, 6, 8, 9], "d": 3},
            "Case 2(b), column (28,19,9): injectivity from degree 3 forces socle in degree 2",
            note="reconstructed: the arithmetic (s = 6 in degree 2) is not displayed in the source argument")
    B.check("8b.second", "same_row",
            {"row": [28, 18, 10],
             "closed_row": ref("8a.column", "row")},
            "Case 2(b), column (28,18,10): this is the column eliminated in Case 2(a)")
    B.check("8b.third", "select_by_value",
            {"rows": {k: ref(f"8b.plane_hf.{k}", "h") for k in plane}, "degree": 4, "value": 9},
            "Case 2(b), column (27,18,9): l_4 = 9 leaves plane cases (i) and (ii)")

    # (i): two cubic surfaces in P^3
    B.cite("8b.i.geometry", ["strano", "migliore"],
           "Case 2(b)(i): the saturation of J is a curve C of degree 9 in P^3 plus m points, "
           "and C is the complete intersection of two cubic surfaces",
           group="case2b-i-geometry",
           premises={"general_hyperplane_section": "complete intersection of two plane cubics",
                     "curve_degree": 9})
    k1, k2 = _rand_forms(rng, 4, 3, 2, p)
    L4 = [int(x) for x in rng.integers(1, p, size=4)]
    B.check("8b.i.curve", "engine_hf",
            {"gens": [engine.poly_to_json(k1), engine.poly_to_json(k2)], "nvars": 4, "cap": 5,
             "p": p, "L": L4},
            "Case 2(b)(i): Hilbert function of two general cubics in 4 variables and its restriction")
    B.check("8b.i.points", "hilbert_slack", {"value": 27, "scheme_value": ref("8b.i.curve", "h", 4)},
            "Case 2(b)(i): 27 = 27 + m forces m = 0, so J is saturated in degree 4")
    B.check("8b.i.socle", "injectivity_socle",
            {"h": [1, 19, 17, 19, 27, ref("8b.i.curve", "h", 5)],
             "l": [1, 18, 6, 8, 9, ref("8b.i.curve", "l", 5)], "d": 4},
            "Case 2(b)(i): injective from degree 4 but not from 3, so socle in degree 3")

    # (ii): a plane and a curve cut by (L Q1, L Q2)
    B.cite("8b.ii.geometry", ["plane-section-geometry"],
           "Case 2(b)(ii): the saturation of J contains a scheme X in P^3 with ideal (L Q1, L Q2), "
           "and J agrees with its saturation from degree 4",
           group="case2b-ii-geometry",
           premises={"hilbert_polynomial_of_restriction": "t + 5"})
    lx = engine.random_form(4, 1, rng, p)
    q1, q2 = _rand_forms(rng, 4, 2, 2, p)
    L4b = [int(x) for x in rng.integers(1, p, size=4)]
    B.check("8b.ii.scheme", "engine_hf",
            {"gens": [engine.poly_to_json(engine.poly_mul(lx, q1)),
                      engine.poly_to_json(engine.poly_mul(lx, q2))],
             "nvars": 4, "cap": 5, "p": p, "L": L4b},
            "Case 2(b)(ii): X = V(L Q1, L Q2) has H(X,4) = 35 - 8 = 27")
    B.check("8b.ii.socle", "injectivity_socle",
            {"h": [1, 19, 17, 19, ref("8b.ii.scheme", "h", 4), ref("8b.ii.scheme", "h", 5)],
             "l": [1, 18, 6, 8, 9, ref("8b.ii.scheme", "l", 5)], "d": 4},
            "Case 2(b)(ii): same injectivity argument, socle in degree 3")

    tree = {
        "1.macaulay": {"31": "2.value31", "30": "3.value30", "29": "3.value29",
                       "<=28": "5.decompositions"},
        "5.decompositions": {"b=10": "6.case1.growth", "b=11": "8.case2.split",
                             "b=12": "7.case3.socle"},
        "8.case2.split": {"2": "8a.socle", "3": "8b.decompositions"},
        "8b.decompositions": {"(28,19,9)": "8b.first", "(28,18,10)": "8b.second",
                              "(27,18,9)": "8b.third"},
        "8b.third": {"i": "8b.i.socle", "ii": "8b.ii.socle"},
    }
    trace = ProofTrace("the h-vector (1,19,17,19,1) is not a Gorenstein sequence",
                       B.steps, tree, "1.macaulay")
    trace.conclusion = verify_trace(trace)
    return trace


# --- extension rules and classification ----------------------------------------------

def _admissible(n: int, a: int) -> bool:
    return n >= 1 and a >= 0 and is_o_sequence([1, n, a, n, 1]).valid


def extension_closure(known, horizon: int) -> set[tuple[int, ...]]:
    """Close socle-degree-4 Gorenstein h-vectors under the two extension rules.

    ``(1,n,a,n,1) -> (1,n,b,n,1)`` for ``a <= b <= C(n+1,2)`` and
    ``(1,n,a,n,1) -> (1,n+1,a+1,n+1,1)``, keeping ``n <= horizon``.
    """
    out: set[tuple[int, ...]] = set()
    todo = []
    for v in known:
        v = tuple(v)
        if len(v) != 5 or v != v[::-1] or v[0] != 1 or not _admissible(v[1], v[2]):
            raise ValueError(f"{v} is not a symmetric socle-degree-4 O-sequence")
        if v[1] <= horizon:
            todo.append(v)
    while todo:
        v = todo.pop()
        if v in out:
            continue
        out.add(v)
        n, a = v[1], v[2]
        for b in range(a + 1, comb(n + 1, 2) + 1):
            w = (1, n, b, n, 1)
            if w not in out:
                todo.append(w)
        if n + 1 <= horizon:
            w = (1, n + 1, a + 1, n + 1, 1)
            if w not in out:
                todo.append(w)
    return out


def extension_chain(start: tuple[int, int], target: tuple[int, int]) -> list[str] | None:
    """Rule applications taking ``(n, a)`` to ``(n', b)``, or None if unreachable."""
    (n, a), (m, b) = start, target
    if m < n or b - a < m - n:
        return None
    chain = [f"add_variable: (1,{n + k},{a + k},{n + k},1) -> (1,{n + k + 1},{a + k + 1},{n + k + 1},1)"
             for k in range(m - n)]
    if b > a + (m - n):
        chain.append(f"raise_middle: (1,{m},{a + m - n},{m},1) -> (1,{m},{b},{m},1)")
    return chain


@dataclass
class ClassificationResult:
    a: int
    b: int
    verdict: str
    provenance: list[dict]
    reason: str | None = None

    def __post_init__(self):
        if self.verdict not in ("gorenstein", "not_gorenstein", "unknown"):
            raise ValueError(f"bad verdict {self.verdict}")
        if self.verdict != "unknown" and not self.provenance:
            raise ValueError("a definite verdict needs provenance")

    def to_json(self) -> dict:
        return {"query": [self.a, self.b], "h": [1, self.a, self.b, self.a, 1],
                "verdict": self.verdict, "provenance": self.provenance, "reason": self.reason}


class FactBaseConflict(Exception):
    pass


@dataclass(frozen=True)
class FactBase:
    version: int
    regions: tuple[dict, ...]
    sequences: tuple[dict, ...]

    @classmethod
    def load(cls, text: str | None = None) -> "FactBase":
        data = json.loads(_load_text("facts.json") if text is None else text)
        fb = cls(data["version"], tuple(data["regions"]), tuple(data["sequences"]))
        fb.check_consistency()
        return fb

    def _region_hit(self, reg, a, b):
        gap = a - b
        return (gap <= reg.get("gap_max", gap) and gap >= reg.get("gap_min", gap)
                and a <= reg.get("a_max", a))

    def derivations(self, a: int, b: int) -> list[tuple[str, list[dict]]]:
        """Every (verdict, provenance) the fact base yields for ``(1,a,b,a,1)``."""
        out = []
        if not _admissible(a, b):
            out.append(("not_gorenstein", [{"rule": "o-sequence", "citation": "macaulay",
                                            "detail": "(1,a,b,a,1) is not an O-sequence"}]))
            return out
        for s in self.sequences:
            n, c = s["a"], s["b"]
            fact = {"rule": "fact", "id": s["id"], "citation": s["citation"]}
            if s["verdict"] == "gorenstein":
                chain = extension_chain((n, c), (a, b))
                if chain is not None:
                    steps = [{"rule": "extension", "citation": "extension-rules", "detail": x}
                             for x in chain]
                    out.append(("gorenstein", [fact] + steps))
            else:
                # the contrapositive: (a,b) Gorenstein would extend to the known failure
                chain = extension_chain((a, b), (n, c))
                if chain is not None:
                    steps = [{"rule": "extension-contrapositive", "citation": "extension-rules",
                              "detail": x} for x in chain]
                    out.append(("not_gorenstein", [fact] + steps))
        for reg in self.regions:
            if self._region_hit(reg, a, b):
                out.append((reg["verdict"], [{"rule": "region", "id": reg["id"],
                                              "citation": reg["citation"],
                                              "detail": reg["statement"]}]))
        return out

    def _min_negative_gap(self) -> int | None:
        # smallest a - b at which a not_gorenstein fact can fire (None: anywhere)
        gaps = [s["a"] - s["b"] for s in self.sequences if s["verdict"] == "not_gorenstein"]
        for reg in self.regions:
            if reg["verdict"] == "not_gorenstein":
                if "gap_min" not in reg:
                    return None
                gaps.append(reg["gap_min"])
        return min(gaps, default=None)

    def check_consistency(self, a_max: int = 60):
        """Raise :class:`FactBaseConflict` if some ``(a, b)`` with ``a <= a_max`` gets both verdicts.

        Non-O-sequences only ever get one verdict, so the scan is limited to the gaps
        ``a - b`` at which a negative fact can apply.
        """
        g = self._min_negative_gap()
        for a in range(1, a_max + 1):
            top = comb(a + 1, 2) if g is None else min(comb(a + 1, 2), a - g)
            for b in range(0, top + 1):
                verdicts = {v for v, _ in self.derivations(a, b)}
                if len(verdicts) > 1:
                    raise FactBaseConflict(f"(1,{a},{b},{a},1) gets both verdicts")


@lru_cache(maxsize=1)
def default_fact_base() -> FactBase:
    return FactBase.load()


def classify_socle4(a: int, b: int, facts: FactBase | None = None) -> ClassificationResult:
    """Classify ``(1,a,b,a,1)`` as Gorenstein, not Gorenstein or unknown."""
    fb = facts or default_fact_base()
    ders = fb.derivations(a, b)
    if not ders:
        return ClassificationResult(
            a, b, "unknown", [],
            reason="no encoded fact or extension rule decides this pair; the possible middle "
                   "values are not known in general once a is large")
    # shortest provenance first
    verdict, prov = min(ders, key=lambda d: len(d[1]))
    return ClassificationResult(a, b, verdict, prov)
