import itertools

import pytest

from hilbert_extremal.decomposition import (Decomposition, HVector, enumerate_gorenstein_decompositions,
                                            injectivity_defect, injectivity_socle,
                                            validate_decomposition, zanello_socle)
from hilbert_extremal.engine import monomial_socle
from hilbert_extremal.lex import lex_ideal
from hilbert_extremal.macaulay import green_bound, is_o_sequence, macaulay_bound


def test_three_decompositions_of_19_17():
    ds = enumerate_gorenstein_decompositions((1, 19, 17, 19, 1))
    assert [D.b for D in ds] == [(1, 10, 10, 1), (1, 11, 11, 1), (1, 12, 12, 1)]
    assert [D.l for D in ds] == [(1, 18, 7, 9, 0), (1, 18, 6, 8, 0), (1, 18, 5, 7, 0)]


def test_stanley_vector_has_two():
    ds = enumerate_gorenstein_decompositions((1, 13, 12, 13, 1))
    assert len(ds) == 2
    assert all(validate_decomposition(D, gorenstein=True).valid for D in ds)


def brute_force(h):
    # every symmetric b row with entries up to h_max, filtered by the same rules
    e = len(h) - 1
    out = []
    half = [i for i in range(1, e - 1) if i <= e - 1 - i]
    for choice in itertools.product(range(max(h) + 1), repeat=len(half)):
        b = [0] * e
        b[0] = b[-1] = 1
        for i, v in zip(half, choice):
            b[i] = b[e - 1 - i] = v
        l = [1] + [h[i] - b[i - 1] for i in range(1, e + 1)]
        if min(l) < 0:
            continue
        if not is_o_sequence(l).valid or not is_o_sequence(b).valid:
            continue
        if any(l[d] > green_bound(h[d], d) for d in range(1, e + 1)):
            continue
        out.append(tuple(b))
    return sorted(out)


@pytest.mark.parametrize("h", [(1, 19, 17, 19, 1), (1, 13, 12, 13, 1), (1, 5, 5, 1),
                               (1, 6, 9, 6, 1), (1, 4, 7, 7, 4, 1), (1, 3, 1)])
def test_enumeration_matches_brute_force(h):
    assert [D.b for D in enumerate_gorenstein_decompositions(h)] == brute_force(h)


def test_validate_reports():
    D = Decomposition((1, 19, 17, 19, 1), (1, 10, 10, 1), (1, 18, 7, 9, 0))
    assert validate_decomposition(D, gorenstein=True).valid
    bad = Decomposition((1, 19, 17, 19, 1), (1, 9, 9, 1), (1, 18, 8, 10, 0))
    rep = validate_decomposition(bad, gorenstein=True)
    assert not rep.valid
    assert any("green_bound(h_3, 3)" in f for f in rep.failures)
    shape = validate_decomposition(Decomposition((1, 2, 1), (1,), (1, 1, 0)))
    assert shape.shape_error is not None and not shape.valid
    add = validate_decomposition(Decomposition((1, 2, 1), (1, 1), (1, 2, 0)))
    assert any("additivity" in f for f in add.failures)
    asym = Decomposition((1, 4, 7, 7, 4, 1), (1, 3, 4, 3, 1), (1, 3, 4, 3, 1, 0))
    assert "Gorenstein requires a symmetric b row" not in \
        validate_decomposition(asym, gorenstein=True).failures


def test_decomposition_json_round_trip():
    D = enumerate_gorenstein_decompositions((1, 19, 17, 19, 1))[0]
    assert Decomposition.from_json(D.to_json()) == D
    assert str(D).splitlines()[0].split() == ["1", "19", "17", "19", "1"]


def test_hvector_checks():
    assert HVector([1, 3, 1]).socle_degree == 2
    for bad in ([], [2, 1], [1, 3, 0], [1, -1, 1]):
        with pytest.raises(ValueError):
            HVector(bad)
    with pytest.raises(ValueError):
        enumerate_gorenstein_decompositions((1, 3, 2))


def test_zanello_known():
    w = zanello_socle((1, 19, 17, 19, 31), 3)
    assert (w.degree, w.dimension) == (2, 7)
    assert zanello_socle((1, 18, 16, 18, 28), 3).dimension == 6
    assert zanello_socle((1, 19, 17, 19, 30), 3) is None
    w = zanello_socle((1, 19, 17, 19, 28, 40), 4)
    assert (w.degree, w.dimension) == (3, 1)
    with pytest.raises(IndexError):
        zanello_socle((1, 3, 6), 2)


def test_injectivity_known():
    w = injectivity_socle((1, 19, 17, 19, 28), (1, 18, 5, 7, 9), 3)
    assert (w.degree, w.dimension) == (2, 5)
    w = injectivity_socle((1, 19, 17, 19, 28), (1, 18, 6, 8, 9), 3)
    assert (w.degree, w.dimension) == (2, 6)
    assert injectivity_defect((1, 19, 17, 19, 28), (1, 18, 6, 8, 10), 4) == 1
    assert injectivity_socle((1, 19, 17, 19, 28), (1, 18, 6, 8, 10), 3) is None


def test_zanello_lower_bound_on_lex_quotients():
    # every (1,n,a,b,c) with n <= 4 and maximal growth b -> c: the witness never exceeds
    # the socle of the lex quotient with that h
    checked = 0
    for n in (3, 4):
        for a in range(macaulay_bound(n, 1) + 1):
            for b in range(1, macaulay_bound(a, 2) + 1 if a else 1):
                h = (1, n, a, b, macaulay_bound(b, 3))
                w = zanello_socle(h, 3)
                if w is None:
                    continue
                I = lex_ideal(h, n)
                socle = monomial_socle([list(g) for g in I.gens], n, 4)
                assert socle[w.degree] >= w.dimension, h
                checked += 1
    assert checked == 88


def test_max_growth_guard():
    h = (1, 3, 6, 10)
    assert h[3] == macaulay_bound(6, 2)
    assert zanello_socle(h, 2) is None
