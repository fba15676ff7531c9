import random

import pytest

from fockspace.combinatorics import (
    EMPTY,
    addable_removable_nodes,
    adds_horizontal_strip,
    adds_horizontal_strip_beta,
    bar_addable_removable,
    bar_residue,
    beta_set,
    conjugate,
    dominates,
    enumerate_bar_weight_space,
    enumerate_weight_space,
    format_partition,
    from_beta_set,
    h_bar_core_weight,
    is_h_bar_core,
    is_h_strict,
    is_m_core,
    is_m_restricted,
    is_restricted,
    m_core_weight,
    parse_partition,
    partitions_of,
    residue,
    runner_counts,
)
from oracles import bar_core_random_order, bar_nodes_brute, random_h_strict, rim_hook_core
from reference_matrices import A1_M3_COLS, A1_M3_ROWS, A2_H5_COLS, A2_H5_ROWS


def test_parse_and_format():
    assert parse_partition("5,3^2,1") == (5, 3, 3, 1)
    assert parse_partition("") == EMPTY
    assert parse_partition("2^3") == (2, 2, 2)
    assert format_partition((4, 3, 1)) == "4,3,1"
    with pytest.raises(ValueError):
        parse_partition("1,2")


def test_conjugate_examples():
    assert conjugate(EMPTY) == EMPTY
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((2, 2, 1, 1)) == (4, 2)


def test_conjugation_is_an_involution_reversing_dominance():
    for n in range(9):
        parts = partitions_of(n)
        for la in parts:
            assert conjugate(conjugate(la)) == la
            for mu in parts:
                assert dominates(la, mu) == dominates(conjugate(mu), conjugate(la))


def test_dominance_examples():
    assert dominates((3, 1), (2, 2))
    assert not dominates((2, 2), (3, 1))
    assert dominates((4, 2, 1), (4, 2, 1))
    assert not dominates((3,), (2, 1, 1, 1))


def test_ascending_lex_refines_dominance():
    for n in range(9):
        for la in partitions_of(n):
            for mu in partitions_of(n):
                if dominates(la, mu) and la != mu:
                    assert la > mu


def test_residues():
    assert residue((1, 1), 3) == 0
    assert residue((3, 4), 3) == 1
    assert residue((6, 1), 3) == 1


def test_addable_removable_examples():
    add, rem = addable_removable_nodes((6, 5, 4, 1, 1), 1, 3)
    assert add == [(6, 1), (4, 2), (2, 6)]
    assert rem == [(3, 4)]
    assert addable_removable_nodes(EMPTY, 0, 4) == ([(1, 1)], [])
    # (2,1) has residue 1 when m = 2, so the only 0-addable node is (1,3)
    assert addable_removable_nodes((2,), 0, 2) == ([(1, 3)], [])
    assert addable_removable_nodes((2,), 1, 2) == ([(2, 1)], [(1, 2)])


def test_cores_and_weights():
    assert m_core_weight(EMPTY, 3) == (EMPTY, 0)
    assert m_core_weight((2, 2, 1, 1), 3) == ((2, 2, 1, 1), 0)
    assert m_core_weight((4, 3) + (1,) * 8, 3) == ((2, 2, 1, 1), 3)


def test_core_agrees_with_rim_hook_removal():
    for n in range(13):
        for la in partitions_of(n):
            for m in (2, 3, 4, 5):
                assert m_core_weight(la, m) == rim_hook_core(la, m)


def test_core_independent_of_bead_count():
    rng = random.Random(11)
    for _ in range(200):
        la = rng.choice(partitions_of(rng.randint(0, 14)))
        m = rng.randint(2, 5)
        s = len(la) + rng.randint(0, 6)
        core = {}
        for t in (s, s + m):
            beads = beta_set(la, t)
            counts = runner_counts(beads, m)
            packed = [a + m * k for a in range(m) for k in range(counts[a])]
            core[t] = from_beta_set(packed)
        assert core[s] == core[s + m] == m_core_weight(la, m)[0]


def test_beta_set_round_trip():
    assert beta_set((3, 1), 3) == [5, 2, 0]
    for n in range(8):
        for la in partitions_of(n):
            for s in range(len(la), len(la) + 3):
                assert from_beta_set(beta_set(la, s)) == la


def test_horizontal_strip_examples():
    assert adds_horizontal_strip((4, 2), (4, 2)) == 0
    assert adds_horizontal_strip((2,), (3, 1)) == 2
    # the two new nodes sit in columns 1 and 2
    assert adds_horizontal_strip((2,), (2, 2)) == 2
    assert adds_horizontal_strip_beta((2,), (2, 2)) == 2
    assert adds_horizontal_strip((1,), (1, 1, 1)) is None
    assert adds_horizontal_strip((2, 1), (3,)) is None


def test_horizontal_strip_diagram_matches_beta_sets():
    for n in range(10):
        for la in partitions_of(n):
            for r in range(4):
                for mu in partitions_of(n + r):
                    assert adds_horizontal_strip(la, mu) == adds_horizontal_strip_beta(la, mu)


def test_bar_residue_examples():
    assert [bar_residue(c, 5) for c in range(1, 7)] == [0, 1, 2, 1, 0, 0]
    assert bar_residue(3, 5) == 2


def test_bar_nodes_examples():
    _, rem0 = bar_addable_removable((6, 2, 1), 0, 5)
    assert (1, 5) in rem0
    _, rem1 = bar_addable_removable((6, 2, 1), 1, 5)
    assert (2, 2) not in rem1
    assert bar_addable_removable(EMPTY, 0, 5) == ([(1, 1)], [])


def test_bar_nodes_match_definition():
    rng = random.Random(5)
    for h in (3, 5, 7):
        for _ in range(300):
            al = random_h_strict(h, rng)
            for i in range((h + 1) // 2):
                assert bar_addable_removable(al, i, h) == bar_nodes_brute(al, i, h)


def test_h_strict():
    assert is_h_strict((10, 5, 5, 3), 5)
    assert not is_h_strict((4, 4), 5)
    assert is_h_strict(EMPTY, 3)


def test_bar_core_examples():
    assert h_bar_core_weight((12, 11, 7, 6, 2, 1), 5) == ((12, 11, 7, 6, 2, 1), 0)
    assert h_bar_core_weight((17, 12, 11, 7, 6, 1), 5) == ((12, 11, 7, 6, 2, 1), 3)
    assert h_bar_core_weight((16, 12, 11, 7, 6, 1), 5) == ((16, 11, 7, 6, 2, 1), 2)
    assert h_bar_core_weight(EMPTY, 5) == (EMPTY, 0)


def test_bar_core_independent_of_removal_order():
    rng = random.Random(2)
    for h in (3, 5, 7):
        for _ in range(200):
            al = random_h_strict(h, rng, max_len=6, max_part=25)
            assert bar_core_random_order(al, h, rng) == h_bar_core_weight(al, h)


def test_restricted_examples():
    assert is_restricted((16, 12, 11, 7, 6, 1), 5)
    assert not is_restricted((27, 11, 7, 6, 2, 1), 5)
    for l in range(1, 6):
        assert is_restricted(tuple(range(3 * l - 2, 0, -3)), 3)
    # a gap of h is allowed below a part not divisible by h, but not below a multiple of h
    assert is_restricted((6, 1), 5)
    assert not is_restricted((7, 1), 5)
    assert is_restricted((9, 5, 1), 5)
    assert not is_restricted((5,), 5)
    assert is_restricted((4,), 5)


def test_enumerate_weight_space_a1():
    rows = enumerate_weight_space((2, 2, 1, 1), 3, 3)
    assert rows == A1_M3_ROWS
    assert [la for la in rows if is_m_restricted(la, 3)] == A1_M3_COLS
    assert enumerate_weight_space((2, 2, 1, 1), 0, 3) == [(2, 2, 1, 1)]


def test_enumerate_weight_space_bar():
    rows = enumerate_bar_weight_space((12, 11, 7, 6, 2, 1), 3, 5)
    assert rows == A2_H5_ROWS
    assert [al for al in rows if is_restricted(al, 5)] == A2_H5_COLS
    assert enumerate_bar_weight_space((4, 1), 0, 3) == [(4, 1)]


def test_weight_spaces_are_complete():
    for m in (2, 3):
        for core in [EMPTY, (1,), (2,)] if m == 3 else [EMPTY, (1,), (2, 1)]:
            if not is_m_core(core, m):
                continue
            for w in range(4):
                want = sorted(
                    la for la in partitions_of(sum(core) + m * w) if m_core_weight(la, m) == (core, w)
                )
                assert enumerate_weight_space(core, w, m) == want
    for h in (3, 5):
        for w in range(4):
            n = h * w
            want = sorted(
                la for la in _h_strict_of(n, h) if h_bar_core_weight(la, h) == (EMPTY, w)
            )
            assert enumerate_bar_weight_space(EMPTY, w, h) == want


def _h_strict_of(n, h):
    return [la for la in partitions_of(n) if is_h_strict(la, h)]


def test_enumeration_rejects_non_cores():
    with pytest.raises(ValueError):
        enumerate_weight_space((2, 2), 1, 3)
    with pytest.raises(ValueError):
        enumerate_bar_weight_space((6,), 1, 5)
    assert is_h_bar_core((12, 11, 7, 6, 2, 1), 5)
