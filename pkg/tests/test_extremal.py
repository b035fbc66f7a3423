import pytest

from hilbert_extremal.extremal import (ExtremalForm, backward_hf_recursion, hilbert_polynomial,
                                       predicted_scheme_hf, recognize_hypersurface_form,
                                       relate_report, sequential_green_targets)
from hilbert_extremal.macaulay import expand, green_bound, is_o_sequence, macaulay_bound

# smooth rational quartic in P^3: R/I_C, R/(I_C:L) = R/I_C, restriction to a plane
QUARTIC = {
    "h": [1, 4, 9, 13, 17, 21, 25, 29, 33],
    "b": [1, 4, 9, 13, 17, 21, 25, 29],
    "l": [1, 3, 5, 4, 4, 4, 4, 4, 4],
}


def test_cubic_surface_form():
    f = recognize_hypersurface_form(19, 3)
    assert (f.c, f.k) == (2, 2)
    assert (f.lambda_dim, f.hypersurface_degree) == (3, 3)
    assert predicted_scheme_hf(f, 4) == 31
    assert [predicted_scheme_hf(f, t) for t in range(6)] == [1, 4, 10, 19, 31, 46]


def test_recognize_rejects():
    assert recognize_hypersurface_form(28, 4) is None
    assert recognize_hypersurface_form(0, 3) is None
    f = recognize_hypersurface_form(6, 2)
    assert (f.c, f.k) == (2, 0)


def test_recognize_round_trip():
    for d in range(1, 7):
        seen = 0
        for h in range(1, 5001):
            f = recognize_hypersurface_form(h, d)
            if f is not None:
                assert predicted_scheme_hf(f, d) == h
                seen += 1
        # every form with value in range is recognized back
        for c in range(0, 60):
            for k in range(d):
                f = ExtremalForm(d, c, k)
                v = predicted_scheme_hf(f, d)
                if 1 <= v <= 5000 and c >= 1:
                    g = recognize_hypersurface_form(v, d)
                    assert (g.c, g.k) == (c, k)
        assert seen > 0


def test_forms_grow_maximally():
    for d in range(1, 6):
        for c in range(1, 6):
            for k in range(d):
                f = ExtremalForm(d, c, k)
                vals = [predicted_scheme_hf(f, t) for t in range(d, d + 8)]
                for t, (a, b) in enumerate(zip(vals, vals[1:]), start=d):
                    assert b == macaulay_bound(a, t)


def test_hilbert_polynomial_agrees_with_forms():
    for d in range(1, 6):
        for c in range(1, 5):
            for k in range(d):
                f = ExtremalForm(d, c, k)
                P = hilbert_polynomial(expand(predicted_scheme_hf(f, d), d))
                for t in range(d, 11):
                    assert P.at_degree(t) == predicted_scheme_hf(f, t)


def test_hilbert_polynomial_of_28():
    P = hilbert_polynomial(expand(28, 4), 4)
    assert [P.at_degree(n) for n in range(4, 7)] == [28, 40, 54]
    with pytest.raises(ValueError):
        hilbert_polynomial(expand(0, 4))
    with pytest.raises(ValueError):
        hilbert_polynomial(expand(28, 4), 3)


def test_backward_recursion():
    r = backward_hf_recursion(19, 3)
    assert r.values == (4, 10, 19) and r.span_dim == 3
    r = backward_hf_recursion(28, 4)
    assert r.values == (4, 10, 18, 28)
    line = backward_hf_recursion(6, 5)
    assert line.values == (2, 3, 4, 5, 6) and line.span_dim == 1
    with pytest.raises(ValueError):
        backward_hf_recursion(5, 5)   # 5_(5) ends with C(1,1)


def test_backward_recursion_is_o_sequence():
    n = 0
    for d in range(2, 6):
        for h in range(1, 800):
            e = expand(h, d)
            if e.terms[-1][0] <= e.terms[-1][1]:
                continue
            r = backward_hf_recursion(h, d)
            assert is_o_sequence((1,) + r.values).valid
            for k in range(2, d + 1):
                assert r.values[k - 2] == r.values[k - 1] - green_bound(r.values[k - 1], k)
            n += 1
    assert n > 500


def test_sequential_targets():
    assert sequential_green_targets(28, 4, 2) == [10, 2]
    assert sequential_green_targets(28, 4, 0) == []
    with pytest.raises(ValueError):
        sequential_green_targets(19, 3, 2)


def test_quartic_counterexample():
    rep = relate_report(QUARTIC, 7)
    assert rep.last_bottom == 1 and rep.gate is False
    vals = {c.condition: c.value for c in rep.part_a}
    assert vals["a.i"] is True
    assert vals["a.ii"] is False
    assert vals["a.iii"] is None and vals["a.iv"] is None
    assert rep.injective_at_d is True
    assert rep.violations == []
    assert any("need not agree" in n for n in rep.notes)


def test_quartic_from_degree_8():
    rows = dict(QUARTIC, h=QUARTIC["h"] + [37], b=QUARTIC["b"] + [33], l=QUARTIC["l"] + [4])
    rep = relate_report(rows, 8)
    assert rep.gate
    assert {c.value for c in rep.part_a if c.value is not None} == {True}


def test_relate_missing_rows_and_errors():
    rep = relate_report({"h": [1, 3, 6, 10]}, 2)
    assert all(c.value is None for c in rep.part_a[1:])
    assert rep.injective_at_d is None
    with pytest.raises(ValueError):
        relate_report({"h": [1, 3, 6]}, 1)
    with pytest.raises(ValueError):
        relate_report({"b": [1]}, 2)


def test_relate_scheme_onsets():
    rows = dict(QUARTIC, scheme={"h": QUARTIC["h"], "l": QUARTIC["l"]})
    rep = relate_report(rows, 7)
    assert rep.m_sharp_from == 7
    assert rep.g_max_from == 7
    assert rep.window_end == 8
    assert rep.to_json()["hypothesis_flags"]["e_ge_2"] is False
