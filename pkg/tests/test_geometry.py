from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from ocmirror.geometry import (COMPACT, COMPACT_TILDE, LOCAL_INNER_A,
                               LOCAL_INNER_B, LOCAL_OUTER, PHASES,
                               WeightSystem, charge_vectors,
                               enumerate_solutions, pf_operators,
                               weight_system)
from ocmirror.mirrormaps import g0_series
from ocmirror.series import apply_op, pure


def test_ordered_counts():
    # 14 at n=4: the recorded count of thirteen misses one of the classic
    # quadruples (see README, "known discrepancies")
    assert [len(enumerate_solutions(n)) for n in (2, 3, 4, 5, 6)] == \
        [1, 3, 14, 147, 3462]


def test_n3_list_descending():
    assert enumerate_solutions(3) == [(3, 3, 3), (2, 4, 4), (2, 3, 6)]
    assert enumerate_solutions(2) == [(2, 2)]


def test_n4_against_exhaustive_scan():
    # independent oracle: any n=4 denominator is at most 42 (the largest
    # entry of (2,3,7,42)), so a full scan below that bound is complete
    brute = sorted((t for t in combinations_with_replacement(range(2, 43), 4)
                    if sum(Fraction(1, k) for k in t) == 1), reverse=True)
    got = enumerate_solutions(4)
    assert sorted(got, reverse=True) == brute
    assert len(brute) == 14


def test_unordered_expands_permutations():
    assert len(enumerate_solutions(2, ordered=False)) == 1
    sols = enumerate_solutions(3, ordered=False)
    assert len(sols) == 10  # 1 + 3 + 6
    assert all(sum(Fraction(1, k) for k in t) == 1 for t in sols)
    assert sols == sorted(sols, reverse=True)


def test_enumerate_bounds():
    with pytest.raises(ValueError):
        enumerate_solutions(1)
    with pytest.raises(ValueError):
        enumerate_solutions(7)


def test_weight_system_rotation():
    assert weight_system((6, 2, 3), 1).ws == (1, 3, 2)
    assert weight_system((2, 3, 6), 1).ws == (3, 2, 1)
    assert weight_system((2, 3, 6), 2).ws == (2, 3, 1)
    assert weight_system((2, 4, 4), 2).ws == (1, 2, 1)
    assert weight_system((2, 2)).label() == "2|1,1"


def test_weight_system_errors():
    with pytest.raises(ValueError) as e:
        weight_system((3, 3, 4))
    assert str(e.value) == "1/3+1/3+1/4 ≠ 1"
    with pytest.raises(ValueError):
        weight_system((2, 2), brane_index=3)
    with pytest.raises(ValueError):
        weight_system((0, 2))
    with pytest.raises(ValueError):
        WeightSystem((1, 1, 3))  # 3 does not divide 5


def test_weight_system_basics():
    ws = WeightSystem((3, 2, 1))
    assert ws.k == 6 and ws.n == 3 and ws.w1 == 3
    assert ws.label() == "6|3,2,1"
    assert ws == weight_system((2, 3, 6))
    assert hash(ws) == hash(weight_system((2, 3, 6)))


ALL_CASES = [WeightSystem(t) for t in
             ((1, 1), (1, 1, 1), (2, 1, 1), (3, 2, 1), (2, 3, 1), (1, 2, 3),
              (1, 1, 1, 1, 1), (2, 1, 1, 1, 1), (4, 1, 1, 1, 1),
              (5, 2, 1, 1, 1), (1, 5, 2, 1, 1))]


def test_charge_rows_sum_to_zero():
    for ws in ALL_CASES:
        for phase in PHASES:
            rows = charge_vectors(ws, phase)
            assert len(rows) == 2
            for row in rows:
                assert len(row) == ws.n + 3
                assert sum(row) == 0


def test_charge_rows_pinned():
    assert charge_vectors(WeightSystem((1, 1)), COMPACT) == \
        [[-1, 0, 1, 1, -1], [-1, 1, 0, -1, 1]]
    assert charge_vectors(WeightSystem((3, 2, 1)), COMPACT) == \
        [[-3, 0, 2, 1, 3, -3], [-1, 1, 0, 0, -1, 1]]
    assert charge_vectors(WeightSystem((2, 3, 1)), LOCAL_INNER_B) == \
        [[-4, 0, 3, 1, 2, -2], [-1, 1, 0, 0, -1, 1]]
    # from five weights on, the last two columns trade places
    assert charge_vectors(WeightSystem((1, 1, 1, 1, 1)), COMPACT) == \
        [[-4, 0, 1, 1, 1, 1, -1, 1], [-1, 1, 0, 0, 0, 0, 1, -1]]
    assert charge_vectors(WeightSystem((1, 1)), COMPACT_TILDE) == \
        [[-2, 1, 1, 0, 0], [-1, 1, 0, -1, 1]]
    assert charge_vectors(WeightSystem((1, 1)), LOCAL_OUTER) == \
        [[-2, 1, 1, 0, 0], [1, -1, 0, 1, -1]]
    assert charge_vectors(WeightSystem((2, 1, 1)), LOCAL_INNER_A) == \
        [[-3, 1, 1, 1, -1, 1], [-1, 1, 0, 0, 1, -1]]


def test_charge_rows_bad_phase():
    with pytest.raises(ValueError):
        charge_vectors(WeightSystem((1, 1)), "conifold")


def test_operator_counts_and_names():
    for ws in (WeightSystem((1, 1)), WeightSystem((3, 2, 1))):
        for phase, count in ((COMPACT, 3), (COMPACT_TILDE, 3),
                             (LOCAL_OUTER, 2), (LOCAL_INNER_A, 2),
                             (LOCAL_INNER_B, 3)):
            ops = pf_operators(ws, phase)
            assert [L.name for L in ops] == ["L0", "L1", "L1p"][:count]


def test_compact_operators_kill_holomorphic_solution():
    for ws in ALL_CASES[:4]:
        g0 = pure(g0_series(ws, 8))
        for L in pf_operators(ws, COMPACT):
            assert apply_op(L, g0).is_zero()
