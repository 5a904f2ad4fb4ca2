"""
ScanReport: tabular output shared by every module.

Rows are plain dicts (one per grid point), metadata holds the run
configuration, the zero-set provenance and the recorded constants. CSV
emission goes through pandas with 17 significant digits so that values
round-trip and two identical runs give byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from src.zpc.errors import EmptyGridError

CSV_FLOAT_FORMAT = "%.17g"
CSV_NA_REP = "nan"


@dataclass
class ScanReport:
    """
    Rows of (parameters, value) records with run metadata.

    Attributes:
        name: report kind (e.g. "density", "conjecture2")
        rows: list of records, all sharing the keys of the first one
        metadata: recorded constants, schedules, provenance
    """

    name: str
    rows: list[dict[str, Any]]
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.rows:
            raise EmptyGridError(f"{self.name}: report has no rows")
        self.rows = [dict(r) for r in self.rows]

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def columns(self) -> list[str]:
        return list(self.rows[0].keys())

    def record(self, **values: Any) -> None:
        """Add recorded constants to the metadata."""
        self.metadata.update(values)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame.from_records(self.rows, columns=self.columns)

    def column(self, name: str) -> np.ndarray:
        return np.asarray([row[name] for row in self.rows], dtype=np.float64)

    def column_max(self, name: str) -> float:
        values = self.column(name)
        finite = values[np.isfinite(values)]
        return float(finite.max()) if finite.size else float("nan")

    def sign_changes(self, name: str) -> int:
        values = self.column(name)
        signs = np.sign(values[np.isfinite(values) & (values != 0.0)])
        return int(np.count_nonzero(signs[1:] != signs[:-1]))

    def to_csv(self) -> str:
        return self.to_frame().to_csv(
            index=False,
            float_format=CSV_FLOAT_FORMAT,
            na_rep=CSV_NA_REP,
            lineterminator="\n",
        )

    def write_csv(self, path: str | Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_csv(), encoding="utf-8", newline="")
        return path


__all__ = ["ScanReport", "CSV_FLOAT_FORMAT", "CSV_NA_REP"]
