import math
import time

import mpmath
import numpy as np
import pytest

from src.zpc.errors import CapacityError, DomainError, RangeError
from src.zpc.prime_arith import (j_ratio, j_second_moment, li, li_many,
                                 pi_count, pnt_errors, pnt_report, psi,
                                 rtop_residual, sieve_lambda, simple_sieve,
                                 von_koch_report)


def _eratosthenes_count(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return sum(flags)


def _midpoint_j(x, h, table, step=1e-4):
    t = (np.arange(int(round(x / step))) + 0.5) * step
    values = table.psi_prefix[np.floor(t + h).astype(np.int64)] - table.psi_prefix[np.floor(t).astype(np.int64)] - h
    return math.fsum((values * values * step).tolist())


def test_psi_of_ten_matches_direct_sum(sieve_1e6):
    direct = math.fsum(math.log(p) for p in (2, 3, 5, 7) for k in range(1, 4) if p**k <= 10)
    assert psi(10.0, sieve_1e6) == pytest.approx(direct, abs=1e-12)
    assert psi(10.0, sieve_1e6) == pytest.approx(7.832014, abs=1e-6)
    assert psi(10.9, sieve_1e6) == psi(10.0, sieve_1e6)


def test_lambda_values(sieve_1e6):
    assert sieve_1e6.lambda_at(1) == 0.0
    assert sieve_1e6.lambda_at(8) == pytest.approx(math.log(2))
    assert sieve_1e6.lambda_at(12) == 0.0
    assert sieve_1e6.lambda_at(999_983) == pytest.approx(math.log(999_983))
    with pytest.raises(ValueError):
        sieve_1e6.lam[3] = 0.0


def test_prime_count_to_one_million(sieve_1e6):
    expected = _eratosthenes_count(1_000_000)
    assert expected == 78_498
    assert pi_count(1e6, sieve_1e6) == expected
    assert simple_sieve(1_000_000).size == expected


def test_psi_prefix_total(sieve_1e6):
    exact = math.fsum(sieve_1e6.lam.tolist())
    assert sieve_1e6.psi_prefix[-1] == pytest.approx(exact, rel=1e-14)


def test_sieve_with_threads_is_identical():
    serial = sieve_lambda(3_000_000)
    threaded = sieve_lambda(3_000_000, workers=4)
    assert np.array_equal(serial.primes, threaded.primes)
    assert np.array_equal(serial.psi_prefix, threaded.psi_prefix)


def test_sieve_bounds():
    with pytest.raises(DomainError):
        sieve_lambda(1)
    with pytest.raises(CapacityError):
        sieve_lambda(200_000_000)


def test_range_checks(sieve_1e6):
    with pytest.raises(RangeError):
        psi(1.5, sieve_1e6)
    with pytest.raises(RangeError):
        pi_count(2e6, sieve_1e6)
    with pytest.raises(RangeError):
        rtop_residual(50.0, sieve_1e6)


@pytest.mark.parametrize("x", [2.5, 10.0, 1000.0, 1e6])
def test_li_matches_mpmath(x):
    expected = float(mpmath.li(x) - mpmath.li(2))
    assert li(x) == pytest.approx(expected, rel=1e-12, abs=1e-9)
    assert li_many([x])[0] == pytest.approx(expected, rel=1e-13, abs=1e-12)


def test_li_domain():
    assert li(2.0) == 0.0
    with pytest.raises(DomainError):
        li(1.5)


@pytest.mark.parametrize("x, h", [(50.0, 5.0), (50.0, 2.5), (200.0, 10.0)])
def test_j_second_moment_matches_midpoint_oracle(x, h, sieve_1e6):
    assert j_second_moment(x, h, sieve_1e6) == pytest.approx(_midpoint_j(x, h, sieve_1e6), abs=1e-6)


def test_j_second_moment_range(sieve_1e6):
    assert j_ratio(1000.0, 10.0, sieve_1e6) > 0.0
    with pytest.raises(RangeError):
        j_second_moment(50.0, 0.5, sieve_1e6)
    with pytest.raises(RangeError):
        j_second_moment(1e6, 10.0, sieve_1e6)


@pytest.mark.parametrize("x", [1e3, 1e4, 1e5, 1e6])
def test_rtop_residual_is_moderate(x, sieve_1e6):
    assert abs(rtop_residual(x, sieve_1e6)) <= 10.0


def test_pnt_report(sieve_1e6):
    report = pnt_report([10.0, 1e3, 1e6], sieve_1e6)
    assert report.columns == ["x", "psi", "r", "pi", "li", "p", "residual"]
    assert math.isnan(report.rows[0]["residual"])
    errors = pnt_errors(1e3, sieve_1e6)
    assert errors.pi == 168
    assert errors.r == pytest.approx(errors.psi - 1e3)


def test_von_koch_bound_to_one_million(sieve_1e6):
    start = time.perf_counter()
    report = von_koch_report(sieve_1e6)
    assert report.metadata["bound_holds"]
    assert report.metadata["max_ratio"] <= 2.0
    assert report.metadata["x_max"] == 1_000_000
    assert [row["decade_start"] for row in report.rows] == [1, 10, 100, 1000, 10_000, 100_000, 1_000_000]
    assert time.perf_counter() - start < 60.0


def test_li_stays_below_prime_count_at_small_primes(sieve_1e6):
    for x in (2.0, 3.0, 5.0, 7.0):
        assert li(x) < pi_count(x, sieve_1e6)
