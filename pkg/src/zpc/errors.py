"""
Exceptions de zpc.

Chaque classe porte le code de sortie utilisé par la ligne de commande:
    3  erreur de domaine / d'intervalle (paramètre hors des préconditions)
    4  échec numérique (non-convergence, ensemble de zéros incomplet)

Les erreurs de domaine dérivent aussi de ValueError et les erreurs numériques
de ArithmeticError, pour rester attrapables par du code générique.
"""

from __future__ import annotations

__all__ = [
    "ZpcError",
    "DomainError",
    "RangeError",
    "HeightExceededError",
    "CapacityError",
    "IntegerArgumentError",
    "ScheduleDomainError",
    "EmptyGridError",
    "ZeroTableError",
    "ParseError",
    "OrderingError",
    "CacheFormatError",
    "NumericalError",
    "ConvergenceError",
    "CompletenessError",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_DOMAIN",
    "EXIT_NUMERICAL",
]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_NUMERICAL = 4


class ZpcError(Exception):
    """Base class of every error raised by the lab."""

    exit_code: int = 1


class DomainError(ZpcError, ValueError):
    """An argument lies outside the domain of the operation."""

    exit_code = EXIT_DOMAIN


class RangeError(DomainError):
    """An argument lies outside the range covered by a table or zero set."""


class HeightExceededError(RangeError):
    """Requested height T above the guaranteed-complete height of a ZeroSet."""

    def __init__(self, height: float, t_max: float) -> None:
        super().__init__(f"height T={height!r} exceeds zero-set t_max={t_max!r}")
        self.height = height
        self.t_max = t_max


class CapacityError(RangeError):
    """Sieve size above the supported capacity."""


class IntegerArgumentError(DomainError):
    """Step function evaluated exactly at a jump (integer argument)."""


class ScheduleDomainError(DomainError):
    """A schedule evaluates outside its admissible values (e.g. beta < 1)."""


class EmptyGridError(DomainError):
    """A scan grid has no feasible point."""


class ZeroTableError(DomainError):
    """Malformed zero table or cache."""


class ParseError(ZeroTableError):
    def __init__(self, line_number: int, text: str, reason: str = "not a positive decimal") -> None:
        super().__init__(f"line {line_number}: {text!r} is {reason}")
        self.line_number = line_number
        self.text = text


class OrderingError(ZeroTableError):
    def __init__(self, line_number: int, value: float, previous: float) -> None:
        super().__init__(
            f"line {line_number}: ordinate {value!r} is below previous {previous!r}"
        )
        self.line_number = line_number
        self.value = value
        self.previous = previous


class CacheFormatError(ZeroTableError):
    """Binary cache with a wrong magic, size or trailer."""


class NumericalError(ZpcError, ArithmeticError):
    exit_code = EXIT_NUMERICAL


class ConvergenceError(NumericalError):
    """A quadrature or root refinement did not reach its tolerance."""


class CompletenessError(NumericalError):
    """Zero count cannot be reconciled with the Riemann–von Mangoldt formula."""
