"""Command-line adapters over the library.

Every command prints one JSON object ``{"command", "payload", "citations", ...}`` to
stdout (``--pretty`` prints a table instead). Randomized commands record ``seed`` and
``prime``. Usage errors exit with 2; operation errors exit with 1 and a JSON error on
stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable

from . import decomposition as dec
from . import engine
from . import extremal
from . import gorenstein_prover as prover
from . import lex
from .macaulay import expand, green_bound, is_o_sequence, macaulay_bound


class Result:
    def __init__(self, payload, citations=(), pretty: str | None = None, **meta):
        self.payload = payload
        self.citations = list(citations)
        self.pretty = pretty
        self.meta = meta

    def to_json(self, command: str) -> dict:
        out = {"command": command, "payload": self.payload, "citations": self.citations}
        out.update(self.meta)
        return out


# --- argument types ------------------------------------------------------------------

def int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").strip("()[]").split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def json_arg(text: str):
    """Inline JSON, or ``@path`` to read it from a file."""
    try:
        if text.startswith("@"):
            text = Path(text[1:]).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise argparse.ArgumentTypeError(f"bad JSON argument: {exc}")


def polys_arg(text: str):
    data = json_arg(text)
    try:
        return engine.load_polys(json.dumps(data))
    except (KeyError, TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"bad polynomial list: {exc}")


# --- commands ------------------------------------------------------------------------

def cmd_expand(a):
    e = expand(a.r, a.i)
    return Result(e.to_json(), ["macaulay"], str(e))


def cmd_bound(a):
    fn = macaulay_bound if a.kind == "macaulay" else green_bound
    val = fn(a.h, a.d)
    payload = {"kind": a.kind, "h": a.h, "d": a.d, "bound": val,
               "expansion": expand(a.h, a.d).to_json()}
    return Result(payload, [a.kind], f"{a.kind}_bound({a.h}, {a.d}) = {val}")


def cmd_osequence(a):
    rep = is_o_sequence(a.h)
    return Result(rep.to_json(), ["macaulay"])


def cmd_decompose(a):
    if a.b is not None or a.l is not None:
        if a.b is None or a.l is None:
            raise ValueError("--b and --l must be given together")
        D = dec.Decomposition(a.h, a.b, a.l)
        rep = dec.validate_decomposition(D, gorenstein=a.gorenstein)
        return Result(rep.to_json(), ["green", "macaulay"], str(D) + f"\nvalid: {rep.valid}")
    ds = dec.enumerate_gorenstein_decompositions(a.h)
    pretty = "\n\n".join(str(D) for D in ds) or "no decompositions"
    return Result({"h": a.h, "decompositions": [D.to_json() for D in ds]},
                  ["green", "macaulay"], pretty)


def cmd_socle(a):
    if a.rule == "zanello":
        w = dec.zanello_socle(a.h, a.d)
        cites = ["zanello"]
    else:
        if a.l is None:
            raise ValueError("injectivity needs --l")
        w = dec.injectivity_socle(a.h, a.l, a.d)
        cites = []
    payload = {"witness": None if w is None else w.to_json()}
    pretty = "no socle forced" if w is None else \
        f"socle of dimension {w.dimension} in degree {w.degree} ({w.rule})"
    return Result(payload, cites, pretty)


def cmd_extremal(a):
    if a.op == "recognize":
        f = extremal.recognize_hypersurface_form(a.h, a.d)
        payload = {"form": None if f is None else f.to_json()}
        if f is not None and a.t is not None:
            payload["predicted"] = {str(t): extremal.predicted_scheme_hf(f, t) for t in a.t}
        return Result(payload, ["green"])
    if a.op == "hilbpoly":
        P = extremal.hilbert_polynomial(expand(a.h, a.d))
        ts = a.t if a.t is not None else list(range(a.d, a.d + 5))
        return Result({"tops": list(P.tops), "d": P.d,
                       "values": {str(n): P.at_degree(n) for n in ts}}, ["gotzmann"])
    if a.op == "backward":
        return Result(extremal.backward_hf_recursion(a.h, a.d).to_json(), ["green"])
    if a.s is None:
        raise ValueError("sequential needs --s")
    return Result({"targets": extremal.sequential_green_targets(a.h, a.d, a.s)}, ["green"])


def _relate_pretty(rep) -> str:
    lines = [f"d = {rep.d}, last bottom = {rep.last_bottom}, e >= 2: {rep.gate}",
             f"injective at d: {rep.injective_at_d}, at d-1: {rep.injective_at_d_minus_1}"]
    for c in rep.part_a + rep.part_b:
        lines.append(f"  {c.condition:6} {str(c.value):5}  {c.description}")
    lines += [f"violations: {rep.violations}"] + [f"note: {n}" for n in rep.notes]
    return "\n".join(lines)


def cmd_relate(a):
    meta = {}
    if a.profile is not None:
        profile = a.profile
    elif a.gens is not None:
        model = engine.build_ideal(a.gens, a.nvars, a.prime, a.cap)
        profile = engine.restriction_profile(model, seed=a.seed, j_degree=a.d)
        meta = {"seed": a.seed, "prime": a.prime, "L": profile.L}
    else:
        raise ValueError("relate needs --profile or --gens")
    rep = extremal.relate_report(profile, a.d)
    payload = rep.to_json()
    if meta:
        payload["profile"] = profile.to_json()
    return Result(payload, ["green", "macaulay", "gotzmann"], _relate_pretty(rep), **meta)


def _lex_ideal(a):
    I = lex.lex_ideal(a.h, a.nvars)
    if a.truncate is not None:
        I = lex.truncate_ideal(I, a.truncate)
    return I


def cmd_lex(a):
    I = _lex_ideal(a)
    if a.op == "ideal":
        payload = {"generator_counts": {str(k): v for k, v in I.generator_counts().items()}}
        if a.list:
            payload["generators"] = [list(g) for g in I.gens]
        return Result(payload, ["macaulay"])
    B = lex.ek_betti(I)
    if a.op == "betti":
        return Result(B.to_json(), ["eliahou-kervaire"], B.render(a.columns))
    if a.i is None or a.j is None:
        raise ValueError("cancel needs --i and --j")
    bound = lex.cancellation_socle_lower_bound(B, a.i, a.j)
    payload = {"i": a.i, "j": a.j, "beta": B[(a.i, a.j)], "beta_prev": B[(a.i - 1, a.j)],
               "beta_next": B[(a.i + 1, a.j)], "lower_bound": bound}
    return Result(payload, ["eliahou-kervaire", "peeva"])


def cmd_engine(a):
    meta = {"prime": a.prime}
    if a.op == "gotzmann":
        if a.h is None or a.d is None or a.horizon is None:
            raise ValueError("gotzmann needs --h, --d and --horizon")
        return Result({"values": engine.gotzmann_predict(a.h, a.d, a.horizon)}, ["gotzmann"])
    if a.op == "apolar":
        if a.form is None:
            raise ValueError("apolar needs --form")
        F = a.form[0]
        nvars = a.nvars if a.nvars is not None else len(next(iter(F)))
        return Result({"h": engine.apolar_hf(F, nvars)}, ["macaulay"])
    if a.gens is None or a.nvars is None:
        raise ValueError(f"{a.op} needs --gens and --nvars")
    model = engine.build_ideal(a.gens, a.nvars, a.prime, a.cap)
    if a.op == "build":
        return Result({"h": model.hilbert_function(), "cap": model.cap,
                       "generator_counts": model.minimal_generator_counts()}, [], **meta)
    if a.op == "profile":
        prof = engine.restriction_profile(model, seed=a.seed, j_degree=a.j_degree)
        return Result(prof.to_json(), [], seed=a.seed, **meta)
    onset = engine.saturation_onset(model, trials=a.trials, seed=a.seed)
    return Result({"saturated_from": onset, "cap": model.cap, "trials": a.trials},
                  ["gotzmann"], seed=a.seed, **meta)


def cmd_prove(a):
    trace = prover.prove_not_gorenstein_19(seed=a.seed, p=a.prime)
    cites = sorted({c for s in trace.steps for c in s.citation})
    return Result(trace.to_json(), cites, trace.render(), seed=a.seed, prime=a.prime)


def cmd_classify(a):
    res = prover.classify_socle4(a.a, a.b)
    lines = [f"(1,{a.a},{a.b},{a.a},1): {res.verdict}"]
    lines += [f"  {p['rule']}: {p.get('id') or p.get('detail')} [{p['citation']}]"
              for p in res.provenance[:5]]
    if len(res.provenance) > 5:
        lines.append(f"  ... {len(res.provenance) - 5} more extension steps")
    if res.reason:
        lines.append(f"  {res.reason}")
    cites = sorted({p["citation"] for p in res.provenance})
    return Result(res.to_json(), cites, "\n".join(lines))


# --- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--prime", type=int, default=engine.DEFAULT_PRIME)

    p = argparse.ArgumentParser(prog="hilbert-extremal",
                                description="Hilbert function extremality toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn: Callable, **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        sp.set_defaults(func=fn)
        return sp

    s = add("expand", cmd_expand, help="i-binomial expansion")
    s.add_argument("r", type=int)
    s.add_argument("i", type=int)

    s = add("bound", cmd_bound, help="Macaulay or Green bound")
    s.add_argument("kind", choices=["macaulay", "green"])
    s.add_argument("h", type=int)
    s.add_argument("d", type=int)

    s = add("osequence", cmd_osequence, help="O-sequence check")
    s.add_argument("h", type=int_list)

    s = add("decompose", cmd_decompose, help="enumerate or validate decompositions")
    s.add_argument("h", type=int_list)
    s.add_argument("--b", type=int_list)
    s.add_argument("--l", type=int_list)
    s.add_argument("--gorenstein", action="store_true")

    s = add("socle", cmd_socle, help="forced socle witnesses")
    s.add_argument("rule", choices=["zanello", "injectivity"])
    s.add_argument("h", type=int_list)
    s.add_argument("d", type=int)
    s.add_argument("--l", type=int_list)

    s = add("extremal", cmd_extremal, help="extremal-restriction utilities")
    s.add_argument("op", choices=["recognize", "hilbpoly", "backward", "sequential"])
    s.add_argument("h", type=int)
    s.add_argument("d", type=int)
    s.add_argument("--t", type=int_list, help="degrees to evaluate")
    s.add_argument("--s", type=int, help="number of sequential restrictions")

    s = add("relate", cmd_relate, help="Green sharpness vs maximal growth at degree d")
    s.add_argument("d", type=int)
    s.add_argument("--profile", type=json_arg, help="JSON rows h, b, l (and hJ, bJ, ...)")
    s.add_argument("--gens", type=polys_arg)
    s.add_argument("--nvars", type=int)
    s.add_argument("--cap", type=int, default=6)

    s = add("lex", cmd_lex, help="lex ideals and Eliahou-Kervaire Betti numbers")
    s.add_argument("op", choices=["ideal", "betti", "cancel"])
    s.add_argument("h", type=int_list)
    s.add_argument("nvars", type=int)
    s.add_argument("--truncate", type=int)
    s.add_argument("--columns", type=int_list)
    s.add_argument("--list", action="store_true", help="list the generators")
    s.add_argument("--i", type=int)
    s.add_argument("--j", type=int)

    s = add("engine", cmd_engine, help="graded ideal computations over GF(p)")
    s.add_argument("op", choices=["build", "profile", "saturate", "gotzmann", "apolar"])
    s.add_argument("--gens", type=polys_arg)
    s.add_argument("--form", type=polys_arg)
    s.add_argument("--nvars", type=int)
    s.add_argument("--cap", type=int, default=6)
    s.add_argument("--j-degree", type=int)
    s.add_argument("--trials", type=int, default=engine.DEFAULT_TRIALS)
    s.add_argument("--h", type=int)
    s.add_argument("--d", type=int)
    s.add_argument("--horizon", type=int)

    add("prove-19", cmd_prove, help="replayable elimination of (1,19,17,19,1)")

    s = add("classify", cmd_classify, help="classify (1,a,b,a,1)")
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)
    return p


def run(argv: list[str] | None = None) -> tuple[int, str, str]:
    """Execute one command; returns ``(exit_code, stdout, stderr)`` without printing."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already wrote the usage message
        return int(exc.code or 0), "", ""
    try:
        res = args.func(args)
    except (ValueError, IndexError, ArithmeticError, AssertionError, KeyError,
            prover.ReplayError) as exc:
        err = {"command": args.command, "error": type(exc).__name__, "message": str(exc)}
        return 1, "", json.dumps(err, sort_keys=True)
    if args.pretty:
        out = res.pretty if res.pretty is not None else json.dumps(res.payload, indent=2,
                                                                   sort_keys=True)
    else:
        out = json.dumps(res.to_json(args.command), sort_keys=True)
    return 0, out, ""


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(argv)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return code
