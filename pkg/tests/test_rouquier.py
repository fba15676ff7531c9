import pytest

from fockspace.combinatorics import (
    EMPTY,
    enumerate_bar_weight_space,
    enumerate_weight_space,
    is_m_restricted,
    is_restricted,
    multipartitions,
    quotient_from_display,
)
from fockspace.fock_a1 import llt_canonical_basis
from fockspace.fock_a2 import canonical_basis_a2
from fockspace.qpoly import ONE, eval_q1, parse_laurent
from fockspace.rouquier import (
    ct_formula,
    from_h_bar_quotient,
    from_m_quotient,
    h_bar_quotient,
    is_w_rouquier_bar_core,
    is_w_rouquier_core,
    m_quotient,
    mainrouq_formula,
    minimal_rouquier_bar_core,
    minimal_rouquier_core,
    rock_q1,
    rouquier_bead_count,
)
from fockspace.verify import verify_rouquier_a1, verify_rouquier_a2
from reference_matrices import A2_H3_COLS, A2_H3_ENTRIES, A2_H3_ROWS

GAMMA = (32, 27, 22, 17, 16, 12, 11, 7, 6, 2, 1)


def test_rouquier_predicates():
    assert is_w_rouquier_bar_core(GAMMA, 4, 5)
    assert not is_w_rouquier_bar_core(GAMMA, 5, 5)
    assert is_w_rouquier_bar_core((10, 7, 4, 1), 4, 3)
    assert not is_w_rouquier_bar_core((10, 7, 4, 1), 5, 3)
    for m in (2, 3, 4):
        assert is_w_rouquier_core(EMPTY, 1, m)
    assert not is_w_rouquier_core(EMPTY, 2, 2)
    with pytest.raises(ValueError):
        is_w_rouquier_core((2,), 1, 2)
    with pytest.raises(ValueError):
        is_w_rouquier_bar_core((5,), 1, 5)


def test_minimal_cores():
    assert minimal_rouquier_core(3, 3) == (6, 4, 2, 2, 1, 1)
    assert minimal_rouquier_bar_core(4, 3) == (10, 7, 4, 1)
    assert minimal_rouquier_bar_core(3, 5) == (22, 17, 12, 11, 7, 6, 2, 1)
    for m in (2, 3, 4):
        for w in range(1, 5):
            nu = minimal_rouquier_core(w, m)
            assert is_w_rouquier_core(nu, w, m)
    for h in (3, 5, 7):
        for w in range(1, 5):
            ga = minimal_rouquier_bar_core(w, h)
            assert is_w_rouquier_bar_core(ga, w, h)
            assert not is_w_rouquier_bar_core(ga, w + 1, h)


def test_quotient_examples():
    psi_gamma = (9, 7, 5, 3, 3, 2, 2, 1, 1)
    la = (12, 10, 5, 3, 3, 2, 2, 2, 2, 2, 1, 1)
    assert m_quotient(la, psi_gamma, 3) == ((2,), EMPTY, (1, 1))
    assert from_m_quotient(psi_gamma, ((2,), EMPTY, (1, 1)), 3) == la
    al = (37, 32, 22, 17, 16, 12, 11, 10, 7, 6, 2, 1)
    assert h_bar_quotient(al, GAMMA, 5) == ((2,), EMPTY, (1, 1))
    assert from_h_bar_quotient(GAMMA, ((2,), EMPTY, (1, 1)), 5) == al
    assert m_quotient(psi_gamma, psi_gamma, 3) == (EMPTY,) * 3
    assert h_bar_quotient(GAMMA, GAMMA, 5) == (EMPTY,) * 3
    with pytest.raises(ValueError):
        m_quotient((5,), psi_gamma, 3)


def test_quotient_round_trips_and_sizes():
    for m in (2, 3):
        for w in range(4):
            nu = minimal_rouquier_core(max(w, 1), m)
            for q in multipartitions(w, m):
                la = from_m_quotient(nu, q, m)
                assert m_quotient(la, nu, m) == q
                s = rouquier_bead_count(nu, m, w)
                assert quotient_from_display(la, m, s + m) == q
    for h in (3, 5):
        n = (h - 1) // 2
        for w in range(4):
            ga = minimal_rouquier_bar_core(max(w, 1), h)
            for al in enumerate_bar_weight_space(ga, w, h):
                q = h_bar_quotient(al, ga, h)
                assert sum(sum(x) for x in q) == w and len(q) == n + 1
                assert from_h_bar_quotient(ga, q, h) == al


def test_restrictedness_via_last_quotient_component():
    for be in A2_H3_ROWS:
        q = h_bar_quotient(be, (10, 7, 4, 1), 3)
        assert is_restricted(be, 3) == (q[1] == EMPTY)
    for h, w in ((5, 2), (5, 3)):
        ga = minimal_rouquier_bar_core(w, h)
        for al in enumerate_bar_weight_space(ga, w, h):
            assert is_restricted(al, h) == (h_bar_quotient(al, ga, h)[-1] == EMPTY)
    for m in (2, 3):
        for w in range(1, 4):
            nu = minimal_rouquier_core(w, m)
            for la in enumerate_weight_space(nu, w, m):
                assert is_m_restricted(la, m) == (m_quotient(la, nu, m)[m - 1] == EMPTY)


def test_final_example():
    al, be, ga = (13, 7, 6, 4, 3, 1), (10, 7, 6, 4, 3, 3, 1), (10, 7, 4, 1)
    d = mainrouq_formula(al, be, ga, 3)
    assert d == parse_laurent("q^2+q^4-q^6")
    assert str(d) == "q^2+q^4-q^6"
    assert rock_q1(al, be, ga, 3) == (1, False)
    assert eval_q1(d) == 1


def test_formula_trivial_cases():
    ga = (10, 7, 4, 1)
    for be in A2_H3_COLS:
        assert mainrouq_formula(be, be, ga, 3) == ONE
        assert rock_q1(be, be, ga, 3)[0] == 1
    assert rock_q1((10, 7, 4, 3, 3, 3, 3, 1), (10, 7, 6, 4, 3, 3, 1), ga, 3)[0] == 0
    nu = minimal_rouquier_core(2, 3)
    for mu in llt_canonical_basis(nu, 2, 3).cols:
        assert ct_formula(mu, mu, nu, 3) == ONE


def test_formula_preconditions():
    with pytest.raises(ValueError):
        mainrouq_formula((13, 7, 6, 4, 3, 1), (13, 7, 6, 4, 3, 1), (10, 7, 4, 1), 3)
    with pytest.raises(ValueError):
        ct_formula((2,), (2,), EMPTY, 2)


def test_mainrouq_reproduces_reference_matrix():
    ga = (10, 7, 4, 1)
    for i, al in enumerate(A2_H3_ROWS):
        for j, be in enumerate(A2_H3_COLS):
            assert mainrouq_formula(al, be, ga, 3) == parse_laurent(A2_H3_ENTRIES[i][j])


@pytest.mark.parametrize("m,w", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_ct_formula_matches_llt(m, w):
    rep = verify_rouquier_a1(m, w)
    assert rep["passed"], rep["failures"]
    assert rep["checked"] > 0


@pytest.mark.parametrize("h,w", [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2)])
def test_mainrouq_matches_computed_basis(h, w):
    rep = verify_rouquier_a2(h, w)
    assert rep["passed"], rep["failures"]


def test_q1_values_are_non_negative_below_h():
    ga = minimal_rouquier_bar_core(2, 5)
    cb = canonical_basis_a2(ga, 2, 5)
    for be in cb.cols:
        for al in cb.rows:
            val, abelian = rock_q1(al, be, ga, 5)
            assert abelian and val >= 0
