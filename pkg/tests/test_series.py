import random
from fractions import Fraction

import pytest

from ocmirror.mirrormaps import open_closed_map
from ocmirror.geometry import weight_system
from ocmirror.series import (BiSeries, LogSeries, ThetaOperator, add,
                             agree_through, apply_op, div_unit, exp_nil,
                             inv_unit, lagrange_good_coeff, log_unit,
                             monomial, mul, one, pure, revert_pair, scale,
                             shift, sub, substitute_pair, theta, truncate,
                             zero)


def rand_series(rng, order, nil=False, unit=False, span=6):
    coeffs = {}
    for m0 in range(order + 1):
        for m1 in range(order + 1 - m0):
            if rng.random() < 0.6:
                coeffs[(m0, m1)] = Fraction(rng.randint(-span, span))
    if nil or unit:
        coeffs.pop((0, 0), None)
    S = BiSeries(order, coeffs)
    return add(one(order), S) if unit else S


def test_constructor_normalizes():
    S = BiSeries(3, {(0, 0): 0, (1, 1): 2, (4, 0): 9, (2, 1): Fraction(1, 3)})
    assert (0, 0) not in S.coeffs          # zero dropped
    assert (4, 0) not in S.coeffs          # beyond the order
    assert S.coeff(1, 1) == 2
    assert S.coeff(2, 1) == Fraction(1, 3)
    with pytest.raises(ValueError):
        BiSeries(3, {(-1, 0): 1})
    with pytest.raises(ValueError):
        BiSeries(-1)


def test_items_sorted_canonical_order():
    S = BiSeries(4, {(2, 0): 1, (0, 1): 2, (1, 1): 3, (0, 2): 4, (1, 0): 5})
    assert [e for e, _ in S.items_sorted()] == \
        [(0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


def test_ring_identities():
    rng = random.Random(7)
    for _ in range(25):
        N = rng.randint(0, 6)
        S, T, U = (rand_series(rng, N) for _ in range(3))
        assert mul(S, T) == mul(T, S)
        assert mul(mul(S, T), U) == mul(S, mul(T, U))
        assert mul(S, add(T, U)) == add(mul(S, T), mul(S, U))
        assert sub(add(S, T), T) == S
        assert mul(S, one(N)) == S
        assert mul(S, zero(N)).is_zero()


def test_truncation_commutes_with_mul():
    rng = random.Random(8)
    for _ in range(20):
        N = rng.randint(1, 7)
        n = rng.randint(0, N)
        S, T = rand_series(rng, N), rand_series(rng, N)
        assert agree_through(mul(S, T), mul(truncate(S, n), truncate(T, n)), n)


def test_inv_exp_log_roundtrips():
    rng = random.Random(9)
    for _ in range(20):
        N = rng.randint(0, 7)
        U = rand_series(rng, N, unit=True)
        assert mul(U, inv_unit(U)) == one(N)
        assert div_unit(U, U) == one(N)
        assert exp_nil(log_unit(U)) == U
        S = rand_series(rng, N, nil=True)
        assert log_unit(exp_nil(S)) == S
    with pytest.raises(ValueError):
        inv_unit(zero(3))
    with pytest.raises(ValueError):
        exp_nil(one(3))
    with pytest.raises(ValueError):
        log_unit(zero(3))


def test_theta_product_rule():
    rng = random.Random(10)
    for _ in range(15):
        N = rng.randint(0, 6)
        S, T = rand_series(rng, N), rand_series(rng, N)
        for axis in (0, 1):
            assert theta(mul(S, T), axis) == \
                add(mul(theta(S, axis), T), mul(S, theta(T, axis)))


def test_shift_grows_order():
    S = BiSeries(2, {(1, 1): 5})
    T = shift(S, (2, 1))
    assert T.order == 5
    assert T.coeff(3, 2) == 5


def test_substitute_pair_monomial():
    rng = random.Random(11)
    for _ in range(10):
        N = rng.randint(1, 5)
        u = rand_series(rng, N, nil=True)
        v = rand_series(rng, N, nil=True)
        S = monomial(N, (2, 1))
        direct = mul(mul(u, u), v)
        assert substitute_pair(S, u, v) == truncate(direct, min(N, direct.order))
    with pytest.raises(ValueError):
        substitute_pair(one(3), one(3), zero(3))


def test_revert_pair_roundtrip():
    rng = random.Random(12)
    for _ in range(12):
        N = rng.randint(1, 6)
        u0 = rand_series(rng, N, unit=True, span=3)
        u1 = rand_series(rng, N, unit=True, span=3)
        q0, q1 = shift(u0, (1, 0)), shift(u1, (0, 1))
        x0, x1 = revert_pair(q0, q1)
        assert substitute_pair(truncate(q0, N), x0, x1) == monomial(N, (1, 0))
        assert substitute_pair(truncate(q1, N), x0, x1) == monomial(N, (0, 1))


def test_revert_pair_validation():
    bad = BiSeries(3, {(0, 1): 1})  # no x0 factor
    good = shift(one(2), (0, 1))
    with pytest.raises(ValueError):
        revert_pair(bad, good)


def test_lagrange_determinant_matches_reversion():
    rng = random.Random(13)
    for _ in range(6):
        N = 5
        u0 = rand_series(rng, N, unit=True, span=2)
        u1 = rand_series(rng, N, unit=True, span=2)
        x0, x1 = revert_pair(shift(u0, (1, 0)), shift(u1, (0, 1)))
        h0, h1 = log_unit(u0), log_unit(u1)
        for m0 in range(N + 1):
            for m1 in range(N + 1 - m0):
                if m0 + m1 < 1:
                    continue
                got = lagrange_good_coeff(m0, m1, h0, h1, 0, determinant=True)
                assert got == x0.coeff(m0, m1)


def test_lagrange_truncated_form_values():
    # the determinant-free prefactor reproduces the recorded inverse
    # expansions, which differ from true reversion from degree 4 on
    # (see README, "known discrepancies")
    ws = weight_system((2, 2))
    b = open_closed_map(ws, 8)
    h0, h1 = log_unit(b.u0), log_unit(b.u1)
    assert lagrange_good_coeff(2, 0, h0, h1, 0) == -1
    assert lagrange_good_coeff(3, 3, h0, h1, 0) == 5
    assert lagrange_good_coeff(3, 3, h0, h1, 0, determinant=True) == 1
    with pytest.raises(ValueError):
        lagrange_good_coeff(0, 0, h0, h1, 0)
    with pytest.raises(ValueError):
        lagrange_good_coeff(9, 1, h0, h1, 0)  # order too small


def test_theta_operator_validation():
    with pytest.raises(ValueError):
        ThetaOperator([((-1, 0), {(1, 0): 1})])
    with pytest.raises(ValueError):
        ThetaOperator([((0, 0), {(1, 0): 0})])
    L = ThetaOperator([((0, 0), {(1, 0): 1}), ((2, 1), {(0, 1): 1})], "L")
    assert L.max_shift == 3


def test_apply_op_on_plain_series():
    th0 = ThetaOperator([((0, 0), {(1, 0): 1})], "t0")
    S = pure(BiSeries(4, {(2, 1): 3, (0, 2): 1}))
    r = apply_op(th0, S)
    assert r.a == BiSeries(4, {(2, 1): 6})
    assert r.b0.is_zero() and r.b1.is_zero()


def test_apply_op_log_cross_term():
    # theta0 (g log x0) = (theta0 g) log x0 + g
    th0 = ThetaOperator([((0, 0), {(1, 0): 1})], "t0")
    g = BiSeries(3, {(0, 0): 1, (1, 0): 1})
    r = apply_op(th0, LogSeries(zero(3), g, zero(3)))
    assert r.a == g
    assert r.b0 == BiSeries(3, {(1, 0): 1})


def test_apply_op_linearity():
    rng = random.Random(14)
    L = ThetaOperator([((0, 0), {(2, 0): 1, (1, 1): -2}),
                       ((1, 0), {(0, 1): 3}),
                       ((1, 1), {(1, 0): 1, (0, 0): 1})], "L")
    for _ in range(10):
        N = rng.randint(2, 6)
        A = LogSeries(*(rand_series(rng, N) for _ in range(3)))
        B = LogSeries(*(rand_series(rng, N) for _ in range(3)))
        lhs = apply_op(L, A + B)
        rhs = apply_op(L, A) + apply_op(L, B)
        assert lhs == rhs


def test_apply_op_drops_garbage_tail():
    L = ThetaOperator([((1, 1), {(0, 0): 1})], "x0x1")
    S = pure(one(4))
    assert apply_op(L, S).order == 2
