import numpy as np
import pytest

from hilbert_extremal import engine
from hilbert_extremal.engine import (apolar_hf, build_ideal, colon_linear, gotzmann_predict,
                                     is_saturated_from, koszul_betti, load_polys,
                                     monomial_poly, poly_degree, random_form,
                                     restriction_profile, saturation_onset,
                                     truncation_generated)
from hilbert_extremal.extremal import relate_report
from hilbert_extremal.lex import MonomialIdeal, hf_of_monomial_ideal
from hilbert_extremal.linalg import (DEFAULT_PRIME, left_kernel, matmul_mod, rank, rank_exact,
                                     rref)
from hilbert_extremal.macaulay import is_o_sequence

P = DEFAULT_PRIME


def mono(*e):
    return monomial_poly(e)


def test_rref_rank_against_exact():
    rng = np.random.default_rng(5)
    for _ in range(40):
        m, n = rng.integers(1, 8, size=2)
        A = rng.integers(-3, 4, size=(m, n))
        # low-rank products show up too
        if rng.random() < 0.5:
            A = rng.integers(-2, 3, size=(m, 2)) @ rng.integers(-2, 3, size=(2, n))
        assert rank(A, P) == rank_exact(A.tolist())
        R, piv = rref(A, P)
        assert all(R[i, c] == 1 for i, c in enumerate(piv))


def test_matmul_mod_exact():
    rng = np.random.default_rng(0)
    A = rng.integers(0, P, size=(6, 9))
    B = rng.integers(0, P, size=(9, 4))
    want = [[sum(int(A[i, k]) * int(B[k, j]) for k in range(9)) % P for j in range(4)]
            for i in range(6)]
    assert matmul_mod(A, B, P).tolist() == want


def test_left_kernel():
    rng = np.random.default_rng(2)
    A = rng.integers(0, 5, size=(7, 3))
    K = left_kernel(A, P)
    assert K.shape[0] == 7 - rank(A, P)
    assert not matmul_mod(K, A, P).any()


def test_rank_exact_edge_cases():
    assert rank_exact([]) == 0
    assert rank_exact([[0, 0], [0, 0]]) == 0
    assert rank_exact([[2, 4], [1, 2]]) == 1


@pytest.fixture(scope="module")
def sextic_model():
    rng = np.random.default_rng(11)
    gens = [random_form(3, 6, rng) for _ in range(3)]
    return build_ideal(gens, 3, cap=8)


def test_sextic_ci(sextic_model):
    assert sextic_model.hilbert_function() == [1, 3, 6, 10, 15, 21, 25, 27, 27]
    assert sextic_model.is_ideal()
    for seed in (1, 2, 3):
        prof = restriction_profile(sextic_model, seed=seed)
        assert prof.l[6] == 4
        assert prof.l == [1, 2, 3, 4, 5, 6, 4, 2, 0]
        h, b, l = prof.h, prof.b, prof.l
        assert all(h[i] == b[i - 1] + l[i] for i in range(1, len(b) + 1))


def test_sextic_relate(sextic_model):
    rep = relate_report(restriction_profile(sextic_model, seed=1, j_degree=6), 6)
    assert rep.gate and rep.injective_at_d
    assert [c.value for c in rep.part_a] == [False, False, False, False]
    assert rep.violations == []


@pytest.fixture(scope="module")
def cubic_model():
    # (x_0, F) with F a cubic in the other four variables
    rng = np.random.default_rng(3)
    F = random_form(4, 3, rng)
    F = {(0,) + e: c for e, c in F.items()}
    return build_ideal([mono(1, 0, 0, 0, 0), F], 5, cap=6)


def test_cubic_instance_rows(cubic_model):
    prof = restriction_profile(cubic_model, seed=0, j_degree=4)
    assert prof.h == [1, 4, 10, 19, 31, 46, 64]
    assert prof.b == [1, 4, 10, 19, 31, 46]
    assert prof.l == [1, 3, 6, 9, 12, 15, 18]


def test_cubic_instance_degree_4_all_true(cubic_model):
    rep = relate_report(restriction_profile(cubic_model, seed=0, j_degree=4), 4)
    assert rep.gate and rep.hypotheses_a and rep.hypotheses_b
    assert [c.value for c in rep.part_a] == [True, True, True, True]
    assert [c.value for c in rep.part_b] == [True, True, True]


def test_cubic_instance_degree_3_gate_closed(cubic_model):
    rep = relate_report(restriction_profile(cubic_model, seed=0, j_degree=3), 3)
    assert not rep.gate and rep.last_bottom == 1
    assert [c.value for c in rep.part_a] == [True, False, False, True]
    assert rep.violations == []


def test_monomial_hf_matches_combinatorics():
    rng = np.random.default_rng(8)
    for _ in range(15):
        n = int(rng.integers(2, 5))
        gens = [tuple(int(x) for x in rng.multinomial(int(rng.integers(1, 4)), [1 / n] * n))
                for _ in range(int(rng.integers(1, 5)))]
        model = build_ideal([monomial_poly(g) for g in gens], n, cap=5)
        I = MonomialIdeal.from_generators(n, gens)
        assert model.hilbert_function() == hf_of_monomial_ideal(I, 5)
        assert model.minimal_generator_counts()[1:] == \
            [I.generator_counts().get(t, 0) for t in range(1, 6)]


def test_colon_by_variable_on_monomials():
    # (x^2 y, y^3) : x = (x y, y^3)
    model = build_ideal([mono(2, 1), mono(0, 3)], 2, cap=5)
    C = colon_linear(model, [1, 0])
    want = build_ideal([mono(1, 1), mono(0, 3)], 2, cap=4)
    assert C.same_as(want)


def test_truncation_and_saturation():
    model = build_ideal([mono(1, 0, 0), mono(0, 2, 0), mono(0, 1, 3)], 3, cap=6)
    J = truncation_generated(model, 2)
    assert J.hilbert_function() == [1, 2, 2, 2, 2, 2, 2]
    assert model.hilbert_function() == [1, 2, 2, 2, 1, 1, 1]
    # (x, y^2) is saturated; (x, y^2, y z^3) agrees with its saturation (x, y) from degree 4
    assert is_saturated_from(J, 0)
    assert not is_saturated_from(model, 3)
    assert is_saturated_from(model, 4)
    assert saturation_onset(model) == 4


def test_gotzmann():
    assert gotzmann_predict(5, 2, 2) == [7, 9]
    assert gotzmann_predict(28, 4, 1) == [40]
    assert gotzmann_predict(2, 3, 3) == [2, 2, 2]


def test_apolar():
    x4 = {(4, 0, 0): 1, (0, 4, 0): 1, (0, 0, 4): 1}
    assert apolar_hf(x4, 3) == [1, 3, 3, 3, 1]
    assert apolar_hf({(2, 2): 1}, 2) == [1, 2, 3, 2, 1]
    assert apolar_hf({(4, 0, 0): 1}, 3) == [1, 1, 1, 1, 1]
    rng = np.random.default_rng(4)
    for _ in range(5):
        F = {e: int(c) for e, c in random_form(3, 4, rng, p=7).items()}
        h = apolar_hf(F, 3)
        assert h == h[::-1] and is_o_sequence(h).valid
    with pytest.raises(ValueError):
        apolar_hf({}, 3)


def test_koszul_small():
    assert koszul_betti([(2, 0), (1, 1), (0, 2)], 2, 1) == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    with pytest.raises(ValueError):
        koszul_betti([(2, 0)], 2, 3)


def test_polys_io():
    text = '[[{"coef": 1, "exp": [1, 0]}], [{"coef": 2, "exp": [0, 2]}, {"coef": 1, "exp": [1, 1]}]]'
    fs = load_polys(text)
    assert [poly_degree(f) for f in fs] == [1, 2]
    assert engine.poly_from_json(engine.poly_to_json(fs[1])) == fs[1]
    with pytest.raises(ValueError, match="generator 1"):
        build_ideal([mono(1, 0), {(1, 0): 1, (1, 1): 1}], 2)


def test_restrict_rejects_linear_in_ideal():
    model = build_ideal([mono(1, 0, 0)], 3, cap=3)
    with pytest.raises(ValueError):
        restriction_profile(model, L=[1, 0, 0])


def random_monomial_instance(rng):
    n = int(rng.integers(3, 5))
    gens = []
    for _ in range(int(rng.integers(1, 5))):
        deg = int(rng.integers(2, 5))
        gens.append(monomial_poly(tuple(int(x) for x in rng.multinomial(deg, [1 / n] * n))))
    return build_ideal(gens, n, cap=6), int(rng.integers(2, 5))


def test_relate_equivalence_property():
    rng = np.random.default_rng(1)
    hits, patterns = 0, set()
    for _ in range(3000):
        model, d = random_monomial_instance(rng)
        prof = restriction_profile(model, seed=int(rng.integers(1 << 30)), j_degree=d)
        rep = relate_report(prof, d)
        if rep.hypotheses_a or rep.hypotheses_b:
            assert rep.violations == [], (prof.rows(), d)
            patterns.add(tuple(c.value for c in rep.part_a))
            hits += 1
            if hits == 100:
                break
    assert hits == 100
    # both sides of the equivalence occur
    assert (True, True, True, True) in patterns and (False, False, False, False) in patterns
