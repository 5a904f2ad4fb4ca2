"""
Sous-commandes `zpc`: zeros, psi, fcorr, explicit, scan.

Chaque commande charge ou calcule ses données, écrit un CSV (fichier
`--out` ou stdout) et ajoute un enregistrement de métadonnées. Les erreurs
du laboratoire sont converties en code de sortie (3 domaine, 4 numérique).
"""

from __future__ import annotations

import functools
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

import click

from src.zpc.conjecture_lab import (BetaSchedule, EllSchedule, ScanParams,
                                    conjecture1_report, conjecture2_report,
                                    corollary_schedule_report,
                                    guess_normalization, m_of_x,
                                    schedule_sandwich)
from src.zpc.conjecture_lab.constants import (COROLLARIES, DEFAULT_COR1_A,
                                              DEFAULT_COR3_A, DEFAULT_COR4_B,
                                              DEFAULT_V_SAMPLES, M_X_MIN)
from src.zpc.errors import DomainError, ZpcError
from src.zpc.explicit_formula import (explicit_report, lemma1_report,
                                      truncation_report)
from src.zpc.explicit_formula.constants import DEFAULT_V_GRID
from src.zpc.logging_setup import get_logger, reconfigure_logging
from src.zpc.pair_correlation import (f_direct, f_integral, lemma2_rhs,
                                      theorem2_split)
from src.zpc.pair_correlation.constants import (DEFAULT_QUAD_TOL,
                                                DEFAULT_TAIL_TOL)
from src.zpc.prime_arith import (j_ratio, j_second_moment, pnt_report,
                                 sieve_lambda, von_koch_report)
from src.zpc.report import ScanReport
from src.zpc.zeta_zeros import (density_report, find_zeros, ingest_file,
                                load_cache, save_cache)
from src.zpc.zeta_zeros.constants import DEFAULT_REFINE_TOL

from .config import RunConfig, default_cache_path, default_metadata_path
from .output import append_metadata, emit_report, metadata_record, summary

log = get_logger(__name__)

PATH = click.Path(dir_okay=False, path_type=Path)
EXISTING = click.Path(dir_okay=False, exists=True, path_type=Path)


class LabCommandError(click.ClickException):
    """ClickException portant le code de sortie de l'erreur d'origine."""

    def __init__(self, message: str, exit_code: int) -> None:
        super().__init__(message)
        self.exit_code = exit_code


@dataclass
class CliState:
    metadata_path: Path | None = None

    def metadata(self) -> Path:
        return self.metadata_path or default_metadata_path()


def lab_command(func: Callable[..., Any]) -> Callable[..., Any]:
    """Convertit les ZpcError en LabCommandError (journalisées en ERROR)."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except ZpcError as exc:
            log.error("%s failed: %s: %s", func.__name__, type(exc).__name__, exc)
            raise LabCommandError(str(exc), exc.exit_code) from exc

    return wrapper


def _finish(state: CliState, config: RunConfig, report: ScanReport | None, out: Path | None, **outputs: Any) -> None:
    path = emit_report(report, out) if report is not None else None
    if path is not None:
        outputs["csv"] = path
    append_metadata(state.metadata(), metadata_record(config, report, outputs))


def _load(cache: Path | None):
    return load_cache(cache or default_cache_path())


@click.group(name="zpc")
@click.option("--verbose", is_flag=True, help="Journal INFO sur la console.")
@click.option("--metadata", "metadata_path", type=PATH, default=None, help="Journal JSON-lines des exécutions.")
@click.pass_context
def cli(ctx: click.Context, verbose: bool, metadata_path: Path | None) -> None:
    """Laboratoire de corrélation de paires des zéros de zêta."""
    if verbose:
        reconfigure_logging(console_level=logging.INFO)
    ctx.obj = CliState(metadata_path=metadata_path)


@cli.command()
@click.option("--t-max", type=float, default=None, help="Calculer les zéros jusqu'à cette hauteur.")
@click.option("--refine-tol", type=float, default=DEFAULT_REFINE_TOL, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--ingest", type=EXISTING, default=None, help="Table de zéros (une ordonnée par ligne).")
@click.option("--precision", type=float, default=None, help="Précision des ordonnées ingérées.")
@click.option("--cache", type=PATH, default=None, help="Cache binaire (défaut: $ZPC_CACHE_DIR/zeros.zpc).")
@click.option("--density-csv", type=PATH, default=None, help="Écrire le rapport de densité.")
@click.pass_obj
@lab_command
def zeros(state, t_max, refine_tol, workers, ingest, precision, cache, density_csv):
    """Calcule ou ingère des zéros et écrit le cache."""
    if (t_max is None) == (ingest is None):
        raise click.UsageError("give exactly one of --t-max or --ingest")
    config = RunConfig(
        "zeros",
        {"t_max": t_max, "refine_tol": refine_tol, "ingest": ingest, "precision": precision, "workers": workers},
    )
    if t_max is not None:
        zs = find_zeros(t_max, refine_tol, workers=workers)
    else:
        zs = ingest_file(ingest, precision=precision)
    path = save_cache(zs, cache or default_cache_path())
    summary("zeros: %d ordinates, t_max=%s, source=%s -> %s", len(zs), zs.t_max, zs.source, path)

    report = None
    if zs.t_max >= 20.0:
        report = density_report(zs)
        summary("density: max (N(T+1)-N(T))/log T = %.6g at T=%d", report.metadata["max_ratio"], report.metadata["max_ratio_T"])
        if density_csv is not None:
            report.write_csv(density_csv)
    outputs = {"cache": path, "zeros": zs.provenance()}
    if density_csv is not None and report is not None:
        outputs["density_csv"] = density_csv
    append_metadata(state.metadata(), metadata_record(config, report, outputs))


@cli.command()
@click.option("--x-max", type=int, required=True, help="Taille du crible.")
@click.option("--x", "xs", type=float, multiple=True, help="Points du rapport (défaut: puissances de 10).")
@click.option("--report-von-koch", is_flag=True)
@click.option("--j-h", type=float, default=None, help="Ajouter J(x, h) et J/(h x log x).")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--out", type=PATH, default=None)
@click.pass_obj
@lab_command
def psi(state, x_max, xs, report_von_koch, j_h, workers, out):
    """ψ, π, li et leurs termes d'erreur à partir du crible."""
    config = RunConfig("psi", {"x_max": x_max, "x": list(xs), "report_von_koch": report_von_koch, "j_h": j_h})
    table = sieve_lambda(x_max, workers=workers)
    points = list(xs) or [10.0**k for k in range(1, int(math.log10(x_max)) + 1) if 10**k <= x_max]
    if not points:
        raise DomainError(f"no report point <= x_max={x_max}")
    report = pnt_report(points, table)
    if j_h is not None:
        for row in report.rows:
            x = row["x"]
            feasible = 1.0 <= j_h <= x <= table.n_max - j_h
            row["j"] = j_second_moment(x, j_h, table) if feasible else float("nan")
            row["j_ratio"] = j_ratio(x, j_h, table) if feasible else float("nan")

    outputs: dict[str, Any] = {}
    if report_von_koch:
        koch = von_koch_report(table)
        summary(
            "von Koch: max |R(x)|/(sqrt(x) log^2 x) = %.6g at x=%d (bound %g holds: %s)",
            koch.metadata["max_ratio"],
            koch.metadata["max_ratio_x"],
            koch.metadata["bound_constant"],
            koch.metadata["bound_holds"],
        )
        report.record(von_koch=koch.metadata)
    _finish(state, config, report, out, **outputs)


@cli.command()
@click.option("--x", "xs", type=float, multiple=True, required=True)
@click.option("--t", "ts", type=float, multiple=True, required=True)
@click.option("--beta", "betas", type=float, multiple=True, default=(1.0,), show_default=True)
@click.option("--method", type=click.Choice(["direct", "integral", "both"]), default="direct", show_default=True)
@click.option("--check-lemma2", is_flag=True, help="Ajouter le résidu relatif de l'identité intégrale.")
@click.option("--tail-tol", type=float, default=DEFAULT_TAIL_TOL, show_default=True)
@click.option("--quad-tol", type=float, default=DEFAULT_QUAD_TOL, show_default=True)
@click.option("--cache", type=PATH, default=None)
@click.option("--out", type=PATH, default=None)
@click.pass_obj
@lab_command
def fcorr(state, xs, ts, betas, method, check_lemma2, tail_tol, quad_tol, cache, out):
    """F_β(x, T) sur une grille (x, T, β)."""
    config = RunConfig(
        "fcorr",
        {
            "x": list(xs),
            "t": list(ts),
            "beta": list(betas),
            "method": method,
            "check_lemma2": check_lemma2,
            "tail_tol": tail_tol,
            "quad_tol": quad_tol,
            "cache": cache,
        },
    )
    zs = _load(cache)
    methods = ("direct", "integral") if method == "both" else (method,)
    rows = []
    for T in ts:
        for x in xs:
            for beta in betas:
                direct = f_direct(zs, x, T, beta) if ("direct" in methods or check_lemma2) else None
                residual = float("nan")
                if check_lemma2:
                    rhs = lemma2_rhs(zs, x, T, beta, quad_tol)
                    residual = abs(rhs - direct.value) / max(abs(direct.value), 1.0)
                for name in methods:
                    ev = direct if name == "direct" else f_integral(zs, x, T, beta, tail_tol)
                    row = ev.as_row()
                    row["t_max"] = zs.t_max
                    if check_lemma2:
                        row["lemma2_residual"] = residual
                    rows.append(row)
    report = ScanReport("fcorr", rows, metadata={"zeros": zs.provenance()})
    _finish(state, config, report, out)


@cli.command()
@click.option("--x", "xs", type=float, multiple=True, required=True)
@click.option("--y", "ys", type=float, multiple=True, help="Hauteurs de troncature Y.")
@click.option("--w", "window", type=float, default=None, help="Somme sur (W, Y] comparée à R(x)/sqrt(x).")
@click.option("--lemma1", "blocks", type=(float, float), multiple=True, help="Blocs (s, t] du lemme sur les blocs.")
@click.option("--v-grid", type=int, default=DEFAULT_V_GRID, show_default=True)
@click.option("--lower-order", is_flag=True, help="Ajouter -log 2π - ½ log(1 - x^-2).")
@click.option("--n-max", type=int, default=None, help="Taille du crible (défaut: max x + 1).")
@click.option("--cache", type=PATH, default=None)
@click.option("--out", type=PATH, default=None)
@click.pass_obj
@lab_command
def explicit(state, xs, ys, window, blocks, v_grid, lower_order, n_max, cache, out):
    """Formule explicite tronquée, sommes sur les zéros et lemme sur les blocs."""
    config = RunConfig(
        "explicit",
        {
            "x": list(xs),
            "y": list(ys),
            "w": window,
            "lemma1": [list(b) for b in blocks],
            "v_grid": v_grid,
            "lower_order": lower_order,
            "n_max": n_max,
            "cache": cache,
        },
    )
    zs = _load(cache)
    if blocks:
        triples = [(x, s, t) for s, t in blocks for x in xs]
        report = lemma1_report(zs, triples, BetaSchedule("constant"), v_grid)
        summary("lemma1: max ratio %.6g", report.metadata["max_ratio"])
        _finish(state, config, report, out)
        return

    table = sieve_lambda(n_max or max(2, int(math.floor(max(xs))) + 1))
    if window is not None:
        report = explicit_report(zs, table, xs, window, ys[0] if ys else None)
    else:
        if not ys:
            raise click.UsageError("--y is required without --w or --lemma1")
        report = truncation_report(zs, table, xs, ys, lower_order=lower_order)
        for row in report.rows:
            summary(
                "x=%g Y=%g: truncated psi=%.12g, sieve psi=%.12g, residual=%.6g",
                row["x"],
                row["Y"],
                row["truncated_psi"],
                row["sieve_psi"],
                row["residual"],
            )
    _finish(state, config, report, out)


@cli.command()
@click.option("--conjecture", type=click.Choice(["1", "2"]), default=None)
@click.option("--corollary", type=click.Choice(list(COROLLARIES)), default=None)
@click.option("--normalization", is_flag=True)
@click.option("--schedule", is_flag=True)
@click.option("--theorem2", is_flag=True)
@click.option("--x", "xs", type=float, multiple=True)
@click.option("--t", "ts", type=float, multiple=True)
@click.option("--v-samples", type=int, default=DEFAULT_V_SAMPLES, show_default=True)
@click.option("--a", "a_exp", type=float, default=DEFAULT_COR1_A, show_default=True)
@click.option("--A", "a_const", type=float, default=DEFAULT_COR3_A, show_default=True)
@click.option("--B", "b_exp", type=float, default=DEFAULT_COR4_B, show_default=True)
@click.option("--beta", type=float, default=1.0, show_default=True, help="β constant (conjecture 1, theorem2).")
@click.option("--n-max", type=int, default=None, help="Crible pour les normalisations de R(x).")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--cache", type=PATH, default=None)
@click.option("--out", type=PATH, default=None)
@click.pass_obj
@lab_command
def scan(
    state, conjecture, corollary, normalization, schedule, theorem2, xs, ts, v_samples,
    a_exp, a_const, b_exp, beta, n_max, workers, cache, out,
):
    """Balayages des conjectures, corollaires, échéanciers et normalisations."""
    modes = [conjecture is not None, corollary is not None, normalization, schedule, theorem2]
    if sum(modes) != 1:
        raise click.UsageError("choose exactly one of --conjecture, --corollary, --normalization, --schedule, --theorem2")
    config = RunConfig(
        "scan",
        {
            "conjecture": conjecture,
            "corollary": corollary,
            "normalization": normalization,
            "schedule": schedule,
            "theorem2": theorem2,
            "x": list(xs),
            "t": list(ts),
            "v_samples": v_samples,
            "a": a_exp,
            "A": a_const,
            "B": b_exp,
            "beta": beta,
            "n_max": n_max,
            "cache": cache,
        },
    )

    if normalization:
        if not xs:
            raise click.UsageError("--normalization needs --x")
        table = sieve_lambda(n_max or int(math.floor(max(xs))) + 1)
        report = guess_normalization(xs, table)
    elif schedule:
        if not ts:
            raise click.UsageError("--schedule needs --t")
        beta_sched = BetaSchedule("cor1_power", a=a_exp)
        report = schedule_sandwich(EllSchedule(), beta_sched, ts)
        report.record(m_of_x={repr(float(x)): m_of_x(x, EllSchedule(), beta_sched) for x in xs if x >= M_X_MIN})
    else:
        if not xs or not ts:
            raise click.UsageError("this scan needs --x and --t")
        zs = _load(cache)
        if conjecture == "2":
            report = conjecture2_report(zs, xs, ts, v_samples, workers=workers)
        elif conjecture == "1":
            report = conjecture1_report(zs, xs, ts, BetaSchedule("constant", c=beta), workers=workers)
        elif corollary is not None:
            table = sieve_lambda(n_max) if n_max else None
            params = ScanParams(xs=xs, Ts=ts, a=a_exp, A=a_const, B=b_exp, workers=workers)
            report = corollary_schedule_report(zs, corollary, params, table)
        else:
            rows = [theorem2_split(zs, x, T, beta, v_samples) for T in ts for x in xs]
            report = ScanReport("theorem2", rows, metadata={"zeros": zs.provenance()})
    _finish(state, config, report, out)


__all__ = ["cli", "LabCommandError", "lab_command"]
