import json
import subprocess
import sys

import pytest

from hilbert_extremal import engine, extremal, lex
from hilbert_extremal.cli import run
from hilbert_extremal.decomposition import enumerate_gorenstein_decompositions, zanello_socle
from hilbert_extremal.gorenstein_prover import classify_socle4
from hilbert_extremal.macaulay import expand, green_bound, is_o_sequence, macaulay_bound


def call(*argv):
    code, out, err = run(list(argv))
    assert code == 0, err
    return json.loads(out)


def test_expand_example():
    out = call("expand", "19", "3")
    assert out["payload"]["terms"] == [[5, 3], [4, 2], [3, 1]]
    assert out["payload"] == expand(19, 3).to_json()
    assert out["citations"] == ["macaulay"]


@pytest.mark.parametrize("kind,fn", [("macaulay", macaulay_bound), ("green", green_bound)])
def test_bound_golden(kind, fn):
    for h, d in [(19, 3), (28, 4), (6, 2)]:
        assert call("bound", kind, str(h), str(d))["payload"]["bound"] == fn(h, d)


def test_osequence_and_decompose_golden():
    assert call("osequence", "1,3,6,11")["payload"] == is_o_sequence([1, 3, 6, 11]).to_json()
    ds = call("decompose", "1,19,17,19,1")["payload"]["decompositions"]
    assert ds == [D.to_json() for D in enumerate_gorenstein_decompositions((1, 19, 17, 19, 1))]
    rep = call("decompose", "1,19,17,19,1", "--b", "1,9,9,1", "--l", "1,18,8,10,0",
               "--gorenstein")["payload"]
    assert rep["valid"] is False


def test_socle_golden():
    out = call("socle", "zanello", "1,19,17,19,31", "3")["payload"]
    assert out["witness"] == zanello_socle((1, 19, 17, 19, 31), 3).to_json()
    out = call("socle", "injectivity", "1,19,17,19,28", "3", "--l", "1,18,5,7,9")["payload"]
    assert out["witness"]["dimension"] == 5


def test_extremal_golden():
    out = call("extremal", "recognize", "19", "3", "--t", "3,4")["payload"]
    assert out["form"]["c"] == 2 and out["predicted"] == {"3": 19, "4": 31}
    assert call("extremal", "backward", "19", "3")["payload"] == \
        extremal.backward_hf_recursion(19, 3).to_json()
    assert call("extremal", "sequential", "28", "4", "--s", "2")["payload"]["targets"] == [10, 2]
    assert call("extremal", "hilbpoly", "28", "4", "--t", "5")["payload"]["values"] == {"5": 40}


def test_relate_literal_profile():
    prof = {"h": [1, 4, 9, 13, 17, 21, 25, 29, 33], "b": [1, 4, 9, 13, 17, 21, 25, 29],
            "l": [1, 3, 5, 4, 4, 4, 4, 4, 4]}
    out = call("relate", "7", "--profile", json.dumps(prof))["payload"]
    assert out == extremal.relate_report(prof, 7).to_json()
    assert out["hypothesis_flags"]["e_ge_2"] is False


def test_relate_from_generators_records_seed():
    gens = [[{"coef": 1, "exp": [2, 0]}], [{"coef": 1, "exp": [0, 3]}]]
    out = call("relate", "2", "--gens", json.dumps(gens), "--nvars", "2", "--cap", "4",
               "--seed", "7")
    assert out["seed"] == 7 and out["prime"] == engine.DEFAULT_PRIME
    assert "L" in out


def test_lex_golden():
    I = lex.truncate_ideal(lex.lex_ideal((1, 3, 5, 7), 3), 3)
    out = call("lex", "betti", "1,3,5,7", "3", "--truncate", "3")["payload"]
    assert out == lex.ek_betti(I).to_json()
    out = call("lex", "ideal", "1,3,5,7", "3", "--list")["payload"]
    assert out["generators"] == [list(g) for g in lex.lex_ideal((1, 3, 5, 7), 3).gens]
    out = call("lex", "cancel", "1,3,5,7", "3", "--i", "3", "--j", "6")["payload"]
    assert out["lower_bound"] == lex.cancellation_socle_lower_bound(lex.ek_betti(I), 3, 6)


def test_engine_commands():
    gens = json.dumps([[{"coef": 1, "exp": [2, 0, 0]}], [{"coef": 1, "exp": [0, 2, 0]}],
                       [{"coef": 1, "exp": [0, 0, 2]}]])
    out = call("engine", "build", "--gens", gens, "--nvars", "3", "--cap", "4")
    assert out["payload"]["h"] == [1, 3, 3, 1, 0]
    assert out["prime"] == engine.DEFAULT_PRIME
    prof = call("engine", "profile", "--gens", gens, "--nvars", "3", "--cap", "4", "--seed", "3")
    assert prof["seed"] == 3 and prof["payload"]["l"] == [1, 2, 0, 0, 0]
    sat = call("engine", "saturate", "--gens", gens, "--nvars", "3", "--cap", "4")
    assert sat["payload"]["saturated_from"] is None and sat["seed"] == 0
    x2 = json.dumps([[{"coef": 1, "exp": [2, 0, 0]}]])
    sat = call("engine", "saturate", "--gens", x2, "--nvars", "3", "--cap", "4")
    assert sat["payload"]["saturated_from"] == 0
    assert call("engine", "gotzmann", "--h", "5", "--d", "2", "--horizon", "2")["payload"] == \
        {"values": [7, 9]}
    F = json.dumps([{"coef": 1, "exp": [2, 2]}])
    assert call("engine", "apolar", "--form", F)["payload"]["h"] == [1, 2, 3, 2, 1]


def test_classify_example():
    out = call("classify", "20", "18")
    assert out["payload"]["verdict"] == "gorenstein"
    assert out["payload"] == classify_socle4(20, 18).to_json()
    assert out["citations"] == ["mz2"]


def test_prove_19():
    out = call("prove-19")
    assert out["payload"]["conclusion"] == "not_gorenstein"
    assert out["seed"] == 0 and "strano" in out["citations"]


def test_usage_errors_exit_2():
    assert run(["nope"])[0] == 2
    assert run(["expand", "19"])[0] == 2
    assert run(["osequence", "1,x"])[0] == 2
    assert run(["engine", "build", "--gens", "{not json"])[0] == 2


def test_operation_errors_exit_1():
    code, out, err = run(["extremal", "backward", "5", "5"])
    assert code == 1 and out == ""
    e = json.loads(err)
    assert e["error"] == "ValueError" and e["command"] == "extremal"
    assert run(["engine", "build"])[0] == 1
    assert run(["lex", "ideal", "1,3,11", "3"])[0] == 1


def test_pretty_tables():
    code, out, _ = run(["lex", "betti", "1,3,5,7", "3", "--columns", "0,3", "--pretty"])
    assert code == 0 and out.splitlines()[0].split() == ["|", "0", "3"]
    code, out, _ = run(["decompose", "1,19,17,19,1", "--pretty"])
    assert sum(line.startswith("---") for line in out.splitlines()) == 3
    code, out, _ = run(["relate", "7", "--pretty", "--profile",
                        '{"h": [1,4,9,13,17,21,25,29,33], "l": [1,3,5,4,4,4,4,4,4]}'])
    assert "e >= 2: False" in out


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "hilbert_extremal", "expand", "28", "4"],
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert json.loads(p.stdout)["payload"]["terms"] == [[6, 4], [5, 3], [3, 2]]
    p = subprocess.run([sys.executable, "-m", "hilbert_extremal", "classify", "x", "1"],
                       capture_output=True, text=True)
    assert p.returncode == 2
