import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hyperzeta._arith import factorize, square_unit_residues
from hyperzeta.dirichlet import DirichletCoeffs, X_func, count_squares_series, ddiv, primes_upto
from hyperzeta.errors import DomainError, UnsupportedError, UsageError
from hyperzeta.squareclass import (SUPPORTED_B, EulerEvalConfig, WeightVector, c_weight,
                                   classify_primes, euler_tail_bound, explicit_zeta_coeffs,
                                   h_error_bound, h_eval, membership_T, omega, square_units,
                                   sym_prefix, x_via_omega, y_values)
from hyperzeta.dirichlet import theorem11_coeffs


@pytest.mark.parametrize("b, elements", [(24, (1,)), (5, (1, 4)), (7, (1, 2, 4)), (1, (0,))])
def test_square_units(b, elements):
    G = square_units(b)
    assert G.elements == elements
    # closed under multiplication
    assert set(G.table().values()) <= set(elements)


def test_classify_primes_examples():
    pc = classify_primes(5, 10)
    assert list(pc.cls(4)) == [2, 3, 7] and list(pc.cls(1)) == [] and pc.p0 == (5,)
    pc = classify_primes(1, 10)
    assert list(pc.cls(0)) == [2, 3, 5, 7]
    pc = classify_primes(7, 20)
    assert pc.p0 == (7,)
    assert list(pc.cls(1)) == [13]
    assert list(pc.cls(2)) == [3, 11, 17]
    assert list(pc.cls(4)) == [2, 5, 19]
    with pytest.raises(DomainError):
        pc.cls(3)
    with pytest.raises(DomainError):
        classify_primes(7, 1)


@pytest.mark.parametrize("b", range(1, 31))
def test_classify_primes_partition(b):
    P = 2000
    pc = classify_primes(b, P)
    parts = [list(pc.p0)] + [list(v) for v in pc.classes.values()]
    flat = sorted(p for part in parts for p in part)
    assert flat == list(primes_upto(P))
    assert len(pc.p0) == len(factorize(b))


def test_omega_examples():
    assert omega(5, 12).as_dict() == {1: 0, 4: 3}
    assert omega(5, 1).as_dict() == {1: 0, 4: 0}
    assert omega(5, 11).as_dict() == {1: 1, 4: 0}
    # primes dividing b are ignored
    assert omega(5, 25).as_dict() == {1: 0, 4: 0}


def test_c_weight_examples():
    G5 = square_units(5)
    for w1 in range(5):
        assert c_weight(G5, WeightVector.of(G5, {1: w1})) == 1
    G7 = square_units(7)
    assert c_weight(G7, WeightVector.of(G7, {1: 3})) == 2
    assert c_weight(G7, WeightVector.of(G7, {1: 3, 2: 1})) == 1
    assert c_weight(G7, WeightVector.of(G7, {1: 3, 4: 1})) == 1
    G24 = square_units(24)
    assert c_weight(G24, WeightVector.of(G24, {1: 4})) == 0


def test_c_weight_index_mismatch():
    with pytest.raises(UsageError):
        c_weight(square_units(7), WeightVector.of(square_units(5)))
    with pytest.raises(UsageError):
        WeightVector.of(square_units(5), {2: 1})


def test_membership_examples():
    G = square_units(5)
    assert membership_T(G, 4, WeightVector.of(G, {4: 1}))
    assert not membership_T(G, 4, WeightVector.of(G, {1: 3}))
    assert membership_T(G, 1, WeightVector.of(G))
    with pytest.raises(DomainError):
        membership_T(G, 2, WeightVector.of(G))


def test_x_via_omega_examples():
    assert x_via_omega(5, 4, 6) == 1
    assert x_via_omega(5, 4, 11) == 0
    assert x_via_omega(5, 1, 1) == 1


@pytest.mark.parametrize("b", [5, 7, 9, 13, 16, 21, 24])
def test_x_via_omega_matches_definition(b):
    for t in square_unit_residues(b):
        for m in range(1, 3001):
            assert x_via_omega(b, t, m) == X_func(b, t, m)


def _weight_grid(G, top):
    for ws in itertools.product(range(top + 1), repeat=G.order):
        yield WeightVector(G.elements, ws)


def _check_weight(G, w):
    c = c_weight(G, w)
    assert c == c_weight(G, w.capped(G.order))
    # c counts unreachable targets
    assert c == sum(not membership_T(G, t, w) for t in G.elements)
    for i in range(G.order):
        up = list(w.weights)
        up[i] += 1
        assert c_weight(G, WeightVector(G.elements, tuple(up))) <= c


@pytest.mark.parametrize("b", [5, 7, 8, 9, 15, 16, 21])
def test_c_weight_stability_and_antitone(b):
    G = square_units(b)
    for w in _weight_grid(G, 2 * G.order):
        _check_weight(G, w)


@given(st.lists(st.integers(0, 12), min_size=6, max_size=6))
def test_c_weight_stability_and_antitone_order6(ws):
    G = square_units(13)
    _check_weight(G, WeightVector(G.elements, tuple(ws)))


def test_sym_prefix_examples():
    x = 0.3
    h = sym_prefix([x], 3)
    assert [float(v) for v in h] == pytest.approx([1, x, x * x, x ** 3])
    h = sym_prefix([1 / 4, 1 / 9], 2)
    assert float(h[2]) == pytest.approx(1 / 16 + 1 / 36 + 1 / 81)
    assert [float(v) for v in sym_prefix([], 2)] == [1, 0, 0]
    with pytest.raises(DomainError):
        sym_prefix([1.0], 2)


@given(st.lists(st.floats(0, 0.9), max_size=6), st.integers(0, 4))
def test_sym_prefix_matches_definition(xs, K):
    h = sym_prefix(xs, K)
    for k in range(K + 1):
        direct = math.fsum(math.prod(c) for c in
                           itertools.combinations_with_replacement(xs, k))
        assert float(h[k]) == pytest.approx(direct, rel=1e-12, abs=1e-15)


def test_y_values_examples():
    cfg = EulerEvalConfig(2.0, 10)
    ys, tail = y_values(classify_primes(5, 10), 4, cfg)
    assert float(ys[0]) == pytest.approx((1 - 1 / 4) * (1 - 1 / 9) * (1 - 1 / 49))
    ys, tail = y_values(classify_primes(5, 10), 1, cfg)
    assert [float(y) for y in ys] == [1.0, 0.0] and float(tail) == 0.0
    with pytest.raises(DomainError):
        EulerEvalConfig(1.0, 10)
    with pytest.raises(DomainError):
        y_values(classify_primes(5, 10), 4, EulerEvalConfig(2.0, 10, cap=1))


@pytest.mark.parametrize("b", [5, 7, 9, 16, 24])
def test_y_normalization(b):
    cfg = EulerEvalConfig(2.0, 10**5)
    pc = classify_primes(b, cfg.P)
    for u in square_unit_residues(b):
        ys, tail = y_values(pc, u, cfg)
        assert len(ys) == len(square_unit_residues(b))
        assert float(sum(ys) + tail) == pytest.approx(1.0, abs=1e-15)
        assert tail >= -1e-12
        assert all(y >= 0 for y in ys)


def test_h_eval_examples():
    for s in (1.5, 2.0, 3.0):
        assert h_eval(24, EulerEvalConfig(s, 100)) == 1.0
        assert h_eval(24, EulerEvalConfig(s, 100), "closed") == 1.0
    h5 = h_eval(5, EulerEvalConfig(2.0, 10**6))
    assert abs(h5 - 1.3566) < 1e-4
    cfg = EulerEvalConfig(2.0, 10**5)
    assert abs(h_eval(7, cfg, "general") - h_eval(7, cfg, "closed")) < 1e-9


def test_h_eval_errors():
    cfg = EulerEvalConfig(2.0, 1000)
    with pytest.raises(UnsupportedError):
        h_eval(13, cfg, "closed")
    with pytest.raises(UsageError):
        h_eval(5, cfg, "fast")


def test_h_eval_cap_does_not_matter():
    for b in (5, 7, 16):
        base = h_eval(b, EulerEvalConfig(2.0, 10**4))
        wider = h_eval(b, EulerEvalConfig(2.0, 10**4, cap=len(square_unit_residues(b)) + 2))
        assert abs(base - wider) < 1e-12


@pytest.mark.parametrize("b", [5, 7, 8, 9, 13, 16, 21])
def test_h_eval_against_coefficient_sum(b):
    # sum_m count_squares(b, m) m^{-s} = zeta(s) H_b(s); strip zeta by Moebius
    N = 10**5
    q = ddiv(count_squares_series(b, N), DirichletCoeffs.zeta(N))
    a = np.array(q.tolist(), dtype=float)
    oracle = float(np.sum(a * np.arange(1, N + 1, dtype=float) ** -3.0))
    assert h_eval(b, EulerEvalConfig(3.0, 10**6)) == pytest.approx(oracle, abs=1e-9)


def test_error_bounds():
    assert euler_tail_bound(2.0, 10**6) < 1e-6
    assert h_error_bound(24, 2.0, 10) == 0.0
    assert h_error_bound(7, 2.0, 10**6) == 3 * euler_tail_bound(2.0, 10**6)
    # the bound actually covers the change from P = 10^4 to P = 10^6
    for b in (5, 7, 16):
        lo = h_eval(b, EulerEvalConfig(2.0, 10**4))
        hi = h_eval(b, EulerEvalConfig(2.0, 10**6))
        assert abs(lo - hi) <= h_error_bound(b, 2.0, 10**4)


def test_explicit_coeffs_small():
    for B in SUPPORTED_B:
        assert explicit_zeta_coeffs(B, 300) == theorem11_coeffs(B, 300)
    with pytest.raises(UnsupportedError):
        explicit_zeta_coeffs(11, 10)
