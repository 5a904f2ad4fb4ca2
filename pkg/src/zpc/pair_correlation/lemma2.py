"""
The integral identity linking F_β to F = F_1:

    F_β(x, T) = F(x, T) + β(1 − β²) ∫ (F(x e^u, T) − F(x, T)) e^{-2β|u|} du,

which follows from w_β = β² w + (1 − β²) w w_β. The right side is evaluated
with the direct F at every quadrature node and truncated at |u| = U where
the trivial bound |F(x e^u, T)| <= F(1, T) makes the tail negligible.
"""

from __future__ import annotations

import math

import numpy as np

from src.zpc.logging_setup import get_logger
from src.zpc.numerics.quadrature import gauss_doubling
from src.zpc.zeta_zeros import ZeroSet

from .constants import DEFAULT_QUAD_TOL, DEFAULT_SPLIT_SAMPLES
from .direct import check_arguments, f_direct, f_direct_many
from .integral import initial_panel

log = get_logger(__name__)


def _difference_integral(
    zs: ZeroSet,
    log_x: float,
    T: float,
    beta: float,
    f_base: float,
    upper: float,
    atol: float,
    label: str,
):
    """∫_{-upper}^{upper} (F(x e^u, T) − f_base) e^{-2β|u|} du, folded onto [0, upper]."""
    panel = initial_panel(zs.up_to(T), beta)

    def integrand(u: np.ndarray) -> np.ndarray:
        both = f_direct_many(zs, np.concatenate((log_x + u, log_x - u)), T, 1.0)
        return (both[: u.size] + both[u.size :] - 2.0 * f_base) * np.exp(-2.0 * beta * u)

    return gauss_doubling(integrand, 0.0, upper, panel, atol=atol, rtol=0.0, label=label)


def lemma2_rhs(
    zs: ZeroSet,
    x: float,
    T: float,
    beta: float,
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> float:
    """
    Right side of the F_β / F identity.

    At β = 1 the correction vanishes and F(x, T) is returned as is.

    Args:
        zs, x, T, beta: as f_direct
        quad_tol: relative accuracy of the truncated integral

    Returns:
        the right-hand side value
    """
    log_x, T, beta = check_arguments(zs, x, T, beta)
    base = f_direct(zs, x, T, 1.0)
    factor = 1.0 - beta * beta
    if factor == 0.0 or base.count == 0:
        return base.value

    total_weight = float(f_direct_many(zs, [0.0], T, 1.0)[0])
    scale = max(base.value, float(base.count))
    target = 0.1 * quad_tol * scale
    upper = max(0.0, math.log(2.0 * abs(factor) * total_weight / target) / (2.0 * beta))
    tail = abs(factor) * 2.0 * total_weight * math.exp(-2.0 * beta * upper)

    result = _difference_integral(
        zs,
        log_x,
        T,
        beta,
        base.value,
        upper,
        atol=quad_tol * scale / (beta * abs(factor)),
        label=f"lemma2(x={x:g}, T={T:g}, beta={beta:g})",
    )
    rhs = base.value + beta * factor * result.value
    log.info(
        "lemma2_rhs x=%g T=%g beta=%g: U=%.3f nodes=%d tail<=%.2e rhs=%.12g",
        x,
        T,
        beta,
        upper,
        result.nodes,
        tail,
        rhs,
    )
    return rhs


def theorem2_split(
    zs: ZeroSet,
    x: float,
    T: float,
    beta: float,
    v_samples: int = DEFAULT_SPLIT_SAMPLES,
) -> dict:
    """
    Split of the identity at |u| = V with V = log(β log T)/β.

    Inside |u| <= V the difference F(x e^u) − F(x) is at most the sampled
    maximum stat_V (a Conjecture 2 type statistic as long as e^V < 2 log T);
    outside, the trivial bound gives 2·|1 − β²|·F(1, T)·e^{-2βV}. The row
    reports both parts, the resulting bound on |F_β − F| and the observed
    difference. Nothing is asserted.
    """
    log_x, T, beta = check_arguments(zs, x, T, beta)
    log_t = math.log(T)
    split = max(0.0, math.log(beta * log_t) / beta)
    exp_split = math.exp(split)

    f_one = f_direct(zs, x, T, 1.0)
    f_beta = f_direct(zs, x, T, beta)
    factor = 1.0 - beta * beta

    us = np.union1d(np.linspace(-split, split, max(int(v_samples), 2)), [0.0])
    sampled = f_direct_many(zs, log_x + us, T, 1.0)
    stat_v = float(np.max(np.abs(sampled - f_one.value)))

    if factor == 0.0 or split == 0.0:
        inner = 0.0
    else:
        scale = max(f_one.value, float(f_one.count), 1.0)
        result = _difference_integral(
            zs,
            log_x,
            T,
            beta,
            f_one.value,
            split,
            atol=DEFAULT_QUAD_TOL * scale / (beta * abs(factor)),
            label=f"theorem2 inner(x={x:g}, T={T:g}, beta={beta:g})",
        )
        inner = beta * factor * result.value

    total_weight = float(f_direct_many(zs, [0.0], T, 1.0)[0])
    decay = math.exp(-2.0 * beta * split)
    outer_bound = abs(factor) * 2.0 * total_weight * decay
    bound = abs(factor) * stat_v * (1.0 - decay) + outer_bound
    diff = f_beta.value - f_one.value
    return {
        "x": float(x),
        "T": T,
        "beta": beta,
        "V": split,
        "exp_V": exp_split,
        "v_range_ok": bool(exp_split < 2.0 * log_t),
        "f": f_one.value,
        "f_beta": f_beta.value,
        "difference": diff,
        "stat_V": stat_v,
        "inner": inner,
        "outer": diff - inner,
        "outer_bound": outer_bound,
        "bound": bound,
        "bound_holds": bool(abs(diff) <= bound * (1.0 + 1e-9)),
        "t_max": zs.t_max,
    }


__all__ = ["lemma2_rhs", "theorem2_split"]
