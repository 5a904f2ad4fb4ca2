import itertools
import math
import time

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.zpc.errors import DomainError, HeightExceededError
from src.zpc.pair_correlation import (PairKernel, WeightKernel, f_direct,
                                      f_direct_many, f_direct_prefix,
                                      f_integral, lemma2_rhs, normalized_f,
                                      theorem2_split, trivial_bound_ratio,
                                      weight, weight_fourier_check,
                                      weight_identity_residual)
from src.zpc.zeta_zeros import ZeroSet

GRID_X = (2.0, 10.0, 100.0)
GRID_T = (50.0, 100.0, 500.0)
GRID_BETA = (1.0, 2.0, 4.0)


def _loop_oracle(gammas, x, beta):
    log_x = math.log(x)
    terms = [
        math.cos((g - h) * log_x) * 4.0 * beta * beta / (4.0 * beta * beta + (g - h) ** 2)
        for g in gammas
        for h in gammas
    ]
    return math.fsum(terms)


def test_weight_values():
    assert weight(1.0, 0.0) == 1.0
    assert weight(1.0, 2.0) == 0.5
    assert weight(2.0, 4.0) == 0.5
    np.testing.assert_array_equal(WeightKernel(3.0)(np.array([0.0, 6.0])), [1.0, 0.5])
    assert WeightKernel(2.0).laplace_density(0.0) == 2.0
    with pytest.raises(DomainError):
        weight(0.0, 1.0)


@given(
    st.floats(min_value=0.05, max_value=50.0),
    st.floats(min_value=-1e3, max_value=1e3, allow_nan=False),
)
def test_weight_identity_holds_to_rounding(beta, u):
    assert weight_identity_residual(beta, u) <= 1e-14


def test_fourier_pair_on_random_points():
    rng = np.random.default_rng(20240611)
    betas = rng.uniform(0.5, 8.0, 20)
    vs = rng.uniform(-20.0, 20.0, 20)
    for beta, v in zip(betas, vs):
        assert weight_fourier_check(beta, v, tol=1e-8) <= 1e-8


def test_synthetic_pair_sum_closed_form(synthetic_zeros):
    for x in (1.0, 2.0, 7.5):
        ev = f_direct(synthetic_zeros, x, 3.0, 1.0)
        assert ev.count == 2
        assert ev.value == pytest.approx(2.0 + 1.6 * math.cos(math.log(x)), abs=1e-15)
    assert f_direct(synthetic_zeros, 1.0, 3.0, 2.0).value == pytest.approx(2.0 + 2.0 * 16.0 / 17.0)


def test_direct_matches_loop_oracle(zeros_100):
    for x, beta in [(2.0, 1.0), (37.0, 0.5), (1000.0, 3.0)]:
        ev = f_direct(zeros_100, x, 100.0, beta)
        expected = _loop_oracle(zeros_100.gammas.tolist(), x, beta)
        assert ev.value == pytest.approx(expected, rel=1e-12, abs=1e-12)
        assert ev.err_estimate < 1e-10


def test_tile_size_does_not_change_the_sum(zeros_500):
    gammas = zeros_500.gammas
    coarse = PairKernel(gammas, 1.5).evaluate(math.log(17.0))[0]
    fine = PairKernel(gammas, 1.5, tile=37).evaluate(math.log(17.0))[0]
    assert fine == pytest.approx(coarse, rel=1e-13)


def test_dense_batch_matches_kernel(zeros_500):
    log_xs = np.log([2.0, 10.0, 100.0])
    batch = f_direct_many(zeros_500, log_xs, 500.0, 2.0)
    single = [f_direct(zeros_500, x, 500.0, 2.0).value for x in (2.0, 10.0, 100.0)]
    np.testing.assert_allclose(batch, single, rtol=1e-12)


def test_prefix_gives_step_values(zeros_100):
    gammas, prefix = f_direct_prefix(zeros_100, 10.0, 100.0, 1.0)
    assert gammas.size == prefix.size == 29
    for k in (1, 10, 29):
        head = ZeroSet.from_ordinates(gammas[:k], t_max=float(gammas[k - 1]))
        assert prefix[k - 1] == pytest.approx(f_direct(head, 10.0, max(3.0, head.t_max), 1.0).value, rel=1e-13, abs=1e-12)


def test_methods_agree_on_grid(zeros_500):
    start = time.perf_counter()
    for x, T, beta in itertools.product(GRID_X, GRID_T, GRID_BETA):
        direct = f_direct(zeros_500, x, T, beta)
        integral = f_integral(zeros_500, x, T, beta)
        assert direct.count == integral.count
        assert abs(direct.value - integral.value) <= direct.err_estimate + integral.err_estimate
    assert time.perf_counter() - start < 120.0


def test_nonnegativity_and_reciprocal_symmetry(zeros_500):
    for x, T, beta in itertools.product(GRID_X, GRID_T, GRID_BETA):
        log_x = math.log(x)
        plus, minus = f_direct_many(zeros_500, [log_x, -log_x], T, beta)
        count = zeros_500.n_of_t(T)
        assert plus >= -1e-9 * count
        assert abs(plus - minus) <= 1e-12 * max(abs(plus), 1.0)
        kernel = PairKernel(zeros_500.up_to(T), beta)
        assert kernel.evaluate(log_x)[0] == kernel.evaluate(-log_x)[0]


@pytest.mark.parametrize("x, T, beta", [(5.0, 100.0, 2.0), (10.0, 200.0, 0.5), (50.0, 500.0, 4.0)])
def test_lemma2_identity(zeros_500, x, T, beta):
    direct = f_direct(zeros_500, x, T, beta).value
    rhs = lemma2_rhs(zeros_500, x, T, beta)
    assert abs(rhs - direct) <= 1e-6 * abs(direct)


def test_lemma2_is_exact_at_beta_one(zeros_500):
    assert lemma2_rhs(zeros_500, 7.0, 300.0, 1.0) == f_direct(zeros_500, 7.0, 300.0, 1.0).value


def test_theorem2_split_bounds_the_difference(zeros_500):
    row = theorem2_split(zeros_500, 10.0, 400.0, 2.0)
    assert row["V"] == pytest.approx(math.log(2.0 * math.log(400.0)) / 2.0)
    assert abs(row["outer"]) <= row["outer_bound"]
    assert row["difference"] == pytest.approx(row["f_beta"] - row["f"])
    assert theorem2_split(zeros_500, 10.0, 400.0, 1.0)["bound"] == 0.0


def test_normalized_and_trivial_bound(zeros_500):
    ev = f_direct(zeros_500, 30.0, 500.0, 1.0)
    assert normalized_f(zeros_500, 30.0, 500.0) == pytest.approx(ev.value / ev.count)
    assert 0.0 < trivial_bound_ratio(ev) < 1.0
    row = ev.as_row()
    assert row["method"] == "direct" and row["normalized"] == ev.normalized


def test_normalized_f_without_ordinates():
    empty = ZeroSet.from_ordinates([], t_max=10.0)
    assert f_direct(empty, 2.0, 5.0).value == 0.0
    with pytest.raises(DomainError):
        normalized_f(empty, 2.0, 5.0)


@pytest.mark.parametrize(
    "x, T, beta, error",
    [
        (0.5, 50.0, 1.0, DomainError),
        (math.exp(26.0), 50.0, 1.0, DomainError),
        (2.0, 2.0, 1.0, DomainError),
        (2.0, 50.0, -1.0, DomainError),
        (2.0, 600.0, 1.0, HeightExceededError),
    ],
)
def test_argument_checks(zeros_500, x, T, beta, error):
    with pytest.raises(error):
        f_direct(zeros_500, x, T, beta)


def test_integral_tail_tolerance_range(zeros_100):
    with pytest.raises(DomainError):
        f_integral(zeros_100, 2.0, 50.0, 1.0, tail_tol=1e-2)
