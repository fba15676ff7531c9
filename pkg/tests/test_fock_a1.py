import random

import pytest

from fockspace.combinatorics import EMPTY, dominates, m_core_weight, partitions_of
from fockspace.fock import FockVector
from fockspace.fock_a1 import (
    apply_f,
    canonical_basis_vector,
    d_coefficient,
    f_on_partition,
    first_approximation,
    llt_canonical_basis,
)
from fockspace.qpoly import ONE, divisible_by_q, parse_laurent, quantum_factorial
from reference_matrices import A1_M3_COLS, A1_M3_ENTRIES, A1_M3_ROWS


def fv(pairs):
    return FockVector({la: parse_laurent(c) for la, c in pairs})


def test_divided_power_example():
    got = f_on_partition((6, 5, 4, 1, 1), 1, 2, 3)
    want = fv([((6, 5, 4, 2, 1, 1), "1"), ((6, 6, 4, 1, 1, 1), "1"), ((6, 6, 4, 2, 1), "q^2")])
    assert got == want


def test_action_on_empty_and_small():
    assert f_on_partition(EMPTY, 0, 1, 3) == FockVector.basis((1,))
    assert f_on_partition(EMPTY, 1, 1, 3) == FockVector()
    # both addable nodes of (1) have residue 1 when m = 2; (2,1) lies left of (1,2)
    assert f_on_partition((1,), 1, 1, 2) == fv([((1, 1), "1"), ((2,), "q^2")])


def test_divided_power_relation():
    rng = random.Random(3)
    for _ in range(40):
        m = rng.choice([2, 3, 4])
        i = rng.randrange(m)
        r, s = rng.randint(1, 3), rng.randint(1, 3)
        la = rng.choice(partitions_of(rng.randint(0, 7)))
        v = FockVector.basis(la)
        lhs = apply_f(apply_f(v, i, s, m), i, r, m)
        binom = quantum_factorial(r + s, 2)
        rhs = binom * apply_f(v, i, r + s, m)
        assert quantum_factorial(r, 2) * quantum_factorial(s, 2) * lhs == rhs


def test_action_preserves_weight_spaces():
    rng = random.Random(5)
    for _ in range(40):
        m = rng.choice([2, 3])
        la = rng.choice(partitions_of(rng.randint(0, 8)))
        i, r = rng.randrange(m), rng.randint(1, 2)
        targets = f_on_partition(la, i, r, m).support()
        keys = {m_core_weight(mu, m) for mu in targets}
        assert len(keys) <= 1


def test_G2_of_one_five():
    want = fv([((1, 1, 1, 1, 1), "1"), ((3, 1, 1), "q^2"), ((5,), "q^4")])
    assert canonical_basis_vector((1, 1, 1, 1, 1), 2) == want


def test_d_coefficient_examples():
    assert d_coefficient((4, 3, 1, 1, 1, 1, 1, 1, 1, 1), (2, 2) + (1,) * 11, 3) == parse_laurent("q^2")
    assert d_coefficient((11, 2, 1, 1), (4, 3, 3, 2, 2, 1), 3) == parse_laurent("q^6")
    assert d_coefficient((4, 3, 3, 2, 2, 1), (4, 3, 3, 2, 2, 1), 3) == ONE
    assert not d_coefficient((5,), (1, 1, 1, 1, 1), 3)
    with pytest.raises(ValueError):
        d_coefficient((5,), (5,), 3)


def test_weight_zero_is_one_by_one():
    cb = llt_canonical_basis((2, 2, 1, 1), 0, 3)
    assert cb.rows == [(2, 2, 1, 1)] and cb.cols == [(2, 2, 1, 1)]
    assert cb.entry((2, 2, 1, 1), (2, 2, 1, 1)) == ONE


def test_non_core_rejected():
    with pytest.raises(ValueError):
        llt_canonical_basis((3,), 1, 3)


def test_first_approximation_has_leading_term():
    for mu in [(1, 1, 1), (2, 1, 1), (3, 2, 1, 1)]:
        v = first_approximation(mu, 3)
        assert v.coeff(mu) == ONE
        for la, c in v.items():
            if la != mu:
                assert dominates(la, mu)


def test_reference_matrix_m3():
    cb = llt_canonical_basis((2, 2, 1, 1), 3, 3)
    assert cb.rows == A1_M3_ROWS
    assert cb.cols == A1_M3_COLS
    for i, r in enumerate(A1_M3_ROWS):
        for j, c in enumerate(A1_M3_COLS):
            assert cb.entry(r, c) == parse_laurent(A1_M3_ENTRIES[i][j])


@pytest.mark.parametrize("m,w", [(2, 4), (3, 3), (4, 2), (5, 2)])
def test_canonical_basis_properties(m, w):
    core = EMPTY
    cb = llt_canonical_basis(core, w, m)
    for mu in cb.cols:
        col = cb.column(mu)
        assert col.coeff(mu) == ONE
        for la, c in col.items():
            assert m_core_weight(la, m) == (core, w)
            if la != mu:
                assert dominates(la, mu)
                assert divisible_by_q(c, 2)
