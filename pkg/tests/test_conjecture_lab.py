import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.zpc.conjecture_lab import (BetaSchedule, EllSchedule, ScanParams,
                                    WindowSchedule, conjecture1_report,
                                    conjecture2_report, conjecture2_stat,
                                    corollary_schedule_report, dyadic_heights,
                                    guess_normalization, m_of_x,
                                    schedule_sandwich, theorem1_bound, v_grid)
from src.zpc.errors import (DomainError, EmptyGridError, RangeError,
                            ScheduleDomainError)
from src.zpc.pair_correlation import f_direct


@pytest.mark.parametrize("a", [0.5, 1.0, 1.5])
@pytest.mark.parametrize("x", [1e4, 1e8, 1e12])
def test_m_of_x_scales_like_log_power(a, x):
    value = m_of_x(x, EllSchedule("logT"), BetaSchedule("cor1_power", a=a))
    assert 0.1 <= value / math.log(x) ** a <= 10.0


def test_m_of_x_domain():
    with pytest.raises(DomainError):
        m_of_x(10.0, EllSchedule(), BetaSchedule())
    with pytest.raises(ScheduleDomainError, match="beta"):
        m_of_x(1e4, EllSchedule(), BetaSchedule("constant", c=0.5))


def test_dyadic_heights():
    heights = dyadic_heights(1e4)
    assert heights[0] == 3.0
    assert heights[1] == 4.0
    top = heights[-1]
    assert top / 2.0 < 3.0 * 100.0 * math.log(2e4) ** 2 <= top


def test_beta_schedules():
    assert BetaSchedule("constant", c=2.5)(100.0) == 2.5
    assert BetaSchedule("cor1_power", a=1.0)(math.e**2) == pytest.approx(2.0)
    assert BetaSchedule("log_power", exponent=0.5)(math.e**4) == pytest.approx(2.0)
    np.testing.assert_allclose(BetaSchedule("cor1_power", a=1.5)(np.array([10.0, 1e6])), 1.0)
    with pytest.raises(ScheduleDomainError):
        BetaSchedule("cor1_power", a=2.0)
    with pytest.raises(ScheduleDomainError):
        BetaSchedule("cor3_gm", A=1.0)
    with pytest.raises(ScheduleDomainError):
        BetaSchedule("nope")
    with pytest.raises(ScheduleDomainError):
        BetaSchedule()(2.0)


def test_gm_schedule_is_floored_at_one():
    beta = BetaSchedule("cor3_gm", A=2.0)
    threshold = beta.threshold()
    assert threshold > 3.0
    assert beta.raw(threshold) == pytest.approx(1.0, abs=1e-9)
    assert beta(3.5) == 1.0
    assert beta(1e30) == pytest.approx(beta.raw(1e30))
    assert BetaSchedule("constant", c=0.5).threshold() == math.inf


def test_ell_and_window_schedules():
    assert EllSchedule("logT")(math.e**3) == pytest.approx(3.0)
    assert EllSchedule("logx_proxy", power=2.0)(math.e**3) == pytest.approx(6.0)
    assert EllSchedule("custom_power", exponent=2.0)(math.e**3) == pytest.approx(9.0)
    assert WindowSchedule("log_power", A=4.0)(math.exp(math.e)) == pytest.approx(math.e**4)
    assert WindowSchedule("cor2_exp").log_window(math.exp(16.0)) == pytest.approx(8.0)
    assert WindowSchedule("cor1_exp", a=1.0).log_window(math.exp(4.0)) == pytest.approx(2.0)
    with pytest.raises(ScheduleDomainError):
        WindowSchedule().log_window(2.0)


def test_theorem1_bound_adds_window_term():
    ell, beta, window = EllSchedule(), BetaSchedule("cor1_power", a=1.0), WindowSchedule("log_power", A=2.0)
    x = 1e8
    expected = m_of_x(x, ell, beta) + (2.0 * math.log(math.log(x))) ** 2
    assert theorem1_bound(x, ell, beta, window) == pytest.approx(expected)


def test_schedule_sandwich():
    report = schedule_sandwich(EllSchedule(), BetaSchedule("cor1_power", a=1.0), [1e6, 10.0, 1e3])
    assert [row["T"] for row in report.rows] == [10.0, 1e3, 1e6]
    assert report.metadata["beta_at_least_one"]
    assert report.metadata["beta_non_decreasing"]
    assert report.metadata["min_lower_ratio"] == pytest.approx(1.0)


def test_v_grid_is_nested_under_doubling():
    coarse = v_grid(500.0, 64)
    fine = v_grid(500.0, 128)
    assert 0.0 in coarse
    assert np.isin(coarse, fine).all()
    assert coarse[-1] == pytest.approx(math.log(2.0 * math.log(500.0)))


def test_conjecture2_stat_matches_pointwise_evaluation(zeros_500):
    x, T = 50.0, 300.0
    stat = conjecture2_stat(zeros_500, x, T, v_samples=16)
    base = f_direct(zeros_500, x, T).value
    pointwise = max(abs(f_direct(zeros_500, x * math.exp(lv), T).value - base) for lv in v_grid(T, 16))
    assert stat == pytest.approx(pointwise, rel=1e-11, abs=1e-9)
    assert conjecture2_stat(zeros_500, x, T, v_samples=32) >= stat


def test_conjecture2_stat_domain(zeros_500):
    with pytest.raises(DomainError):
        conjecture2_stat(zeros_500, 50.0, 300.0, v_samples=8)
    with pytest.raises(DomainError):
        conjecture2_stat(zeros_500, math.exp(24.0), 300.0)


def test_conjecture2_report_normalization(zeros_500):
    report = conjecture2_report(zeros_500, [20.0, 50.0], [100.0, 500.0], 16, workers=2)
    assert len(report) == 4
    for row in report.rows:
        assert row["normalization"] == pytest.approx(row["T"] * math.log(row["T"]))
        assert row["normalized"] == pytest.approx(row["stat"] / row["normalization"])
    assert report.metadata["zeros"]["count"] == len(zeros_500)


def test_conjecture2_report_is_deterministic_across_workers(zeros_500):
    serial = conjecture2_report(zeros_500, [50.0], [200.0, 400.0], 16)
    threaded = conjecture2_report(zeros_500, [50.0], [200.0, 400.0], 16, workers=3)
    assert serial.to_csv() == threaded.to_csv()


def test_conjecture1_report(zeros_500):
    report = conjecture1_report(zeros_500, [1e4, math.exp(30.0)], [200.0], BetaSchedule("constant", c=2.0))
    first, second = report.rows
    assert first["F_beta"] == pytest.approx(f_direct(zeros_500, 1e4, 200.0, 2.0).value)
    assert first["ratio"] == pytest.approx(first["F_beta"] / (200.0 * math.log(200.0)))
    assert not first["in_range"]
    assert not second["phase_safe"] and math.isnan(second["F_beta"])


@pytest.mark.parametrize("corollary", ["cor1", "cor2", "cor3", "cor4"])
def test_corollary_reports(zeros_500, sieve_1e6, corollary):
    params = ScanParams(xs=(1e4, 1e5), Ts=(100.0, 400.0, 900.0))
    report = corollary_schedule_report(zeros_500, corollary, params, sieve_1e6)
    assert len(report) == 4
    assert all(row["corollary"] == corollary for row in report.rows)
    assert all(np.isfinite(row["r_normalized"]) for row in report.rows)
    assert report.metadata["exploratory"] == (corollary == "cor3")


def test_corollary_report_errors(zeros_500):
    with pytest.raises(DomainError):
        corollary_schedule_report(zeros_500, "cor9", ScanParams(xs=(100.0,), Ts=(100.0,)))
    with pytest.raises(EmptyGridError):
        corollary_schedule_report(zeros_500, "cor1", ScanParams(xs=(100.0,), Ts=(1000.0,)))
    with pytest.raises(DomainError):
        ScanParams(xs=(100.0,), Ts=(100.0,), B=0.0)


def test_guess_normalization(sieve_1e6):
    report = guess_normalization([1e3, 1e4, 1e5, 1e6], sieve_1e6)
    assert report.columns == ["x", "r", "normalization", "value"]
    assert report.metadata["reference_limsup"] == pytest.approx(1.0 / (2.0 * math.pi))
    assert report.rows[0]["r"] == pytest.approx(sieve_1e6.psi_prefix[1000] - 1e3)
    with pytest.raises(RangeError):
        guess_normalization([50.0], sieve_1e6)


def test_m_of_x_matches_term_by_term_loop():
    x = 1e6
    k2 = math.ceil(math.log2(3.0 * math.sqrt(x) * math.log(2.0 * x) ** 2))
    expected = 0.0
    for k in range(1, k2 + 1):
        T = max(2.0**k, 3.0)
        expected += math.sqrt(math.log(T) / math.log(T) ** (3.0 - 2.0 * 0.75))
    assert m_of_x(x, EllSchedule(), BetaSchedule("cor1_power", a=0.75)) == pytest.approx(expected, rel=1e-13)


@given(
    st.floats(min_value=0.05, max_value=1.5),
    st.lists(st.floats(min_value=3.0, max_value=1e12), min_size=2, max_size=20),
)
def test_power_schedules_are_non_decreasing(a, heights):
    heights = np.sort(np.asarray(heights))
    betas = np.asarray(BetaSchedule("cor1_power", a=a)(heights))
    assert np.all(np.diff(betas) >= -1e-12 * betas[1:])
    assert np.all(betas >= 1.0)
