import math
import time

import numpy as np
import pytest

from src.zpc.errors import (DomainError, HeightExceededError,
                            IntegerArgumentError, RangeError)
from src.zpc.explicit_formula import (block_sum, default_height,
                                      dyadic_blocks, dyadic_exponent,
                                      explicit_report, lemma1_detail,
                                      lemma1_ratio, lemma1_report,
                                      lower_order_terms, reciprocal_sums,
                                      truncated_psi, truncation_report,
                                      zero_sum_r)
from src.zpc.numerics import complex_kahan_sum, unit_phasors
from src.zpc.prime_arith import psi


def _constant_beta(v):
    return 1.0


def test_truncated_psi_reconstructs_the_sieve(zeros_2000, sieve_1e6):
    start = time.perf_counter()
    x = 100.5
    exact = psi(x, sieve_1e6)
    residuals = {}
    for Y in (500.0, 1000.0, 2000.0):
        value = truncated_psi(x, Y, zeros_2000, lower_order=True)
        residuals[Y] = abs(value - exact)
        assert residuals[Y] <= 5.0 * (x / Y) * math.log(x * Y) ** 2
    assert residuals[2000.0] < residuals[500.0]
    assert time.perf_counter() - start < 60.0


def test_truncation_report(zeros_2000, sieve_1e6):
    report = truncation_report(zeros_2000, sieve_1e6, [100.5, 1000.5], [500.0, 2000.0])
    assert len(report) == 4
    assert report.metadata["within_envelope"]
    assert report.rows[0]["sieve_psi"] == psi(100.5, sieve_1e6)


def test_lower_order_terms():
    assert lower_order_terms(100.5) == pytest.approx(-math.log(2.0 * math.pi) - 0.5 * math.log(1.0 - 100.5**-2))


def test_truncated_psi_rejects_integers_and_bad_heights(zeros_500):
    with pytest.raises(IntegerArgumentError):
        truncated_psi(100.0, 200.0, zeros_500)
    with pytest.raises(RangeError):
        truncated_psi(100.5, 10.0, zeros_500)
    with pytest.raises(HeightExceededError):
        truncated_psi(100.5, 900.0, zeros_500)
    with pytest.raises(DomainError):
        truncated_psi(1.5, 200.0, zeros_500)


@pytest.mark.parametrize("y, k", [(16.0, 4), (16.000001, 5), (17.0, 5), (15.9, 4), (1.0, 0)])
def test_dyadic_exponent(y, k):
    assert dyadic_exponent(y) == k
    assert 2.0 ** (k - 1) < y <= 2.0**k


def test_dyadic_blocks_recombine(zeros_2000):
    rng = np.random.default_rng(11)
    for _ in range(10):
        x = float(rng.uniform(2.0, 1e6))
        W = float(rng.uniform(14.0, 300.0))
        Y = float(rng.uniform(W, 2000.0))
        blocks = dyadic_blocks(x, W, Y, zeros_2000)
        gammas = zeros_2000.between(W, Y)
        cos_g, sin_g = unit_phasors(gammas, math.log(x))
        full = complex_kahan_sum((cos_g + 1j * sin_g) / gammas)
        total = complex_kahan_sum([b.weighted for b in blocks])
        assert abs(total - full) <= 1e-12 * max(1.0, abs(full))
        assert sum(b.count for b in blocks) == gammas.size
        assert -2.0 * total.imag == pytest.approx(zero_sum_r(x, W, Y, zeros_2000), abs=1e-12)
        assert [b.k for b in blocks] == sorted(b.k for b in blocks)


def test_dyadic_blocks_with_threads_are_identical(zeros_2000):
    serial = dyadic_blocks(1234.5, 20.0, 1900.0, zeros_2000)
    threaded = dyadic_blocks(1234.5, 20.0, 1900.0, zeros_2000, workers=4)
    assert serial == threaded


def test_block_sum_fields(zeros_500):
    block = block_sum(50.0, 64.0, 128.0, 7, zeros_500)
    assert block.count == zeros_500.between(64.0, 128.0).size
    assert block.prefix_max >= abs(block.value) - 1e-12
    assert block.as_row()["k"] == 7
    assert block_sum(50.0, 14.0, 14.1, 4, zeros_500).count == 0


def test_zero_sum_window(zeros_500):
    assert zero_sum_r(50.0, 100.0, 100.0, zeros_500) == 0.0
    with pytest.raises(RangeError):
        zero_sum_r(50.0, 10.0, 100.0, zeros_500)
    with pytest.raises(RangeError):
        zero_sum_r(50.0, 200.0, 100.0, zeros_500)


def test_explicit_report_clips_height(zeros_500, sieve_1e6):
    report = explicit_report(zeros_500, sieve_1e6, [1000.5, 1e5 + 0.5], W=30.0)
    assert report.rows[0]["Y"] == pytest.approx(min(default_height(1000.5), 500.0))
    assert report.rows[1]["y_clipped"]
    assert all(np.isfinite(row["residual"]) for row in report.rows)


def test_reciprocal_sums(zeros_2000):
    row = reciprocal_sums(zeros_2000, 1000.0)
    assert 0.0 < row["sum_inv_over_log2"] < 1.0
    assert row["tail_inv_sq"] > 0.0
    with pytest.raises(RangeError):
        reciprocal_sums(zeros_2000, 5000.0)


def _triples():
    xs = (2.0, 7.5, 50.0, 1000.0)
    blocks = ((14.0, 50.0), (50.0, 120.0), (100.0, 250.0), (250.0, 400.0), (400.0, 500.0))
    return [(x, s, t) for x in xs for s, t in blocks]


def test_lemma1_ratio_is_bounded_and_grid_stable(zeros_500):
    triples = _triples()
    assert len(triples) == 20
    coarse = lemma1_report(zeros_500, triples, _constant_beta, v_grid=8)
    fine = lemma1_report(zeros_500, triples, _constant_beta, v_grid=16)
    assert coarse.metadata["max_ratio"] <= 10.0
    assert fine.metadata["max_ratio"] == pytest.approx(coarse.metadata["max_ratio"], rel=0.01)
    assert fine.metadata["max_ratio"] >= coarse.metadata["max_ratio"]


def test_lemma1_detail_fields(zeros_500):
    row = lemma1_detail(10.0, 100.0, 200.0, _constant_beta, zeros_500)
    block = zeros_500.between(100.0, 200.0)
    assert row["count"] == block.size
    assert row["lhs"] == pytest.approx(abs(np.exp(1j * block * math.log(10.0)).sum()), abs=1e-10)
    assert row["ratio"] == pytest.approx(row["lhs"] / math.sqrt(200.0 * row["F_hat"]))
    assert lemma1_ratio(10.0, 14.0, 14.1, _constant_beta, zeros_500) == 0.0


def test_lemma1_argument_checks(zeros_500):
    with pytest.raises(RangeError):
        lemma1_ratio(10.0, 2.0, 100.0, _constant_beta, zeros_500)
    with pytest.raises(DomainError):
        lemma1_ratio(10.0, 20.0, 100.0, _constant_beta, zeros_500, v_grid=4)
    with pytest.raises(HeightExceededError):
        lemma1_ratio(10.0, 20.0, 600.0, _constant_beta, zeros_500)
