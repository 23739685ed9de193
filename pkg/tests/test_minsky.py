import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from shiftellipse.minsky import (
    GenState,
    check_k,
    circle_alpha,
    circle_matrix,
    circle_step_forward,
    circle_step_reverse,
    closed_form_circle,
    closed_form_hyper,
    hyper_alpha,
    hyper_initial_value,
    hyper_matrix,
    hyper_step_forward,
    hyper_step_reverse,
    initial_value,
    mat2_pow,
)

raw = st.integers(min_value=-(2**30), max_value=2**30)
shift = st.integers(min_value=0, max_value=15)


def test_circle_forward_examples():
    assert circle_step_forward(GenState(65536, 0), 0) == (65536, 65536)
    assert circle_step_forward(GenState(65536, 0), 4) == (65536, 4096)


def test_circle_reverse_examples():
    assert circle_step_reverse(GenState(0, 65536), 0) == (65536, 65536)
    for k in range(16):
        assert circle_step_reverse(GenState(0, 0), k) == (0, 0)
    s = GenState(12345, -6789)
    assert circle_step_reverse(circle_step_forward(s, 3), 3) == s


def test_hyper_forward_example():
    assert hyper_step_forward(GenState(65536, 0), 0) == (65536, 65536)


@given(raw, raw, shift)
def test_circle_steps_are_exact_inverses(u, v, k):
    s = GenState(u, v)
    assert circle_step_reverse(circle_step_forward(s, k), k) == s
    assert circle_step_forward(circle_step_reverse(s, k), k) == s


@given(raw, raw, shift)
def test_hyper_steps_are_exact_inverses(u, v, k):
    s = GenState(u, v)
    assert hyper_step_reverse(hyper_step_forward(s, k), k) == s
    assert hyper_step_forward(hyper_step_reverse(s, k), k) == s


def test_steps_vectorize():
    u = np.array([65536, -300, 12345], dtype=np.int64)
    v = np.array([0, 77, -6789], dtype=np.int64)
    s = circle_step_forward(GenState(u, v), 3)
    for i in range(3):
        assert (int(s.u[i]), int(s.v[i])) == circle_step_forward(GenState(int(u[i]), int(v[i])), 3)


def test_check_k():
    assert check_k(15) == 15
    with pytest.raises(ValueError):
        check_k(16)
    with pytest.raises(ValueError):
        check_k(-1)


def test_initial_value_examples():
    assert initial_value(65536, 0, 3) == 65408
    assert initial_value(0, 65536, 1) == 16384


@pytest.mark.parametrize("k", range(2, 10))
def test_initial_values_track_exact_correction(k):
    eps = 2.0**-k
    rng = np.random.default_rng(k)
    for u0, v0 in rng.integers(-(2**28), 2**28, size=(200, 2)):
        u0, v0 = int(u0), int(v0)
        want = u0 * math.sqrt(1 - eps * eps / 4) + eps / 2 * v0
        assert abs(initial_value(u0, v0, k) - want) <= 4 + 2e-9 * abs(u0)
        want_h = u0 * math.sqrt(1 + eps * eps / 4) - eps / 2 * v0
        assert abs(hyper_initial_value(u0, v0, k) - want_h) <= 4 + 2e-9 * abs(u0)


def test_closed_forms_at_zero_steps():
    assert closed_form_circle(3.0, -2.0, 0.25, 0) == pytest.approx((3.0, -2.0))
    assert closed_form_hyper(3.0, -2.0, 0.25, 0) == pytest.approx((3.0, -2.0))


@pytest.mark.parametrize("eps", [1.0, 0.5, 0.125, 2.0**-10])
def test_closed_forms_match_float_iteration(eps):
    u0, v0, n = 1.3, -0.7, 37
    u, v = u0, v0
    for _ in range(n):
        u -= eps * v
        v += eps * u
    assert closed_form_circle(u0, v0, eps, n) == pytest.approx((u, v), rel=1e-11, abs=1e-12)
    u, v = u0, v0
    for _ in range(n):
        u += eps * v
        v += eps * u
    assert closed_form_hyper(u0, v0, eps, n) == pytest.approx((u, v), rel=1e-10)


def test_alphas():
    assert circle_alpha(1.0) == pytest.approx(math.pi / 3)
    eps = 0.25
    assert math.cosh(hyper_alpha(eps)) == pytest.approx(1 + eps * eps / 2)
    assert math.cos(circle_alpha(eps)) == pytest.approx(1 - eps * eps / 2)


def test_one_step_matrices_have_unit_determinant():
    for eps in (1.0, 0.5, 0.01):
        for m in (circle_matrix(eps), hyper_matrix(eps)):
            assert m[0][0] * m[1][1] - m[0][1] * m[1][0] == pytest.approx(1.0)


def test_mat2_pow_base_cases():
    m = [[2.0, 1.0], [0.5, 3.0]]
    assert mat2_pow(m, 0) == [[1.0, 0.0], [0.0, 1.0]]
    assert mat2_pow(m, 1) == m
    eye = [[1.0, 0.0], [0.0, 1.0]]
    assert np.allclose(mat2_pow(eye, 3), eye)


def test_mat2_pow_matches_naive():
    rng = np.random.default_rng(7)
    for _ in range(200):
        m = rng.uniform(-2, 2, (2, 2))
        tr, det = np.trace(m), np.linalg.det(m)
        if tr * tr - 4 * det == 0:
            continue
        for n in range(21):
            want = np.linalg.matrix_power(m, n)
            got = np.array(mat2_pow(m.tolist(), n))
            assert np.allclose(got, want, rtol=1e-9, atol=1e-9 * np.abs(want).max())
