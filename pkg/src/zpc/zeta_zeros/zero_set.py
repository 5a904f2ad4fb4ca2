"""
ZeroSet: ordered zero ordinates with provenance, plus text ingestion and the
binary cache.

Text format (published zero tables): one decimal ordinate per line, ascending,
blank lines and '#' comment lines ignored. A comment of the form
"# precision: 1e-12" sets the per-ordinate precision of the table.

Binary cache "ZPC1": magic bytes, u64 LE count, count f64 LE ordinates,
then f64 LE t_max and f64 LE precision, optionally followed by one
provenance byte (b"C" computed, b"I" ingested).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from src.zpc.errors import (CacheFormatError, DomainError, HeightExceededError,
                            OrderingError, ParseError)
from src.zpc.logging_setup import get_logger

from .constants import (CACHE_MAGIC, DEFAULT_PRECISION, FIRST_ORDINATE_FLOOR,
                        MAX_COMPUTED_PRECISION, SOURCES)

log = get_logger(__name__)

_PRECISION_RE = re.compile(r"^#\s*precision\s*[:=]\s*(\S+)\s*$", re.IGNORECASE)
_HEADER = np.dtype([("magic", "S4"), ("count", "<u8")])
_TRAILER = np.dtype([("t_max", "<f8"), ("precision", "<f8")])
# optional byte after the trailer
_SOURCE_TAGS = {"computed": b"C", "ingested": b"I"}
_TAG_SOURCES = {tag: name for name, tag in _SOURCE_TAGS.items()}


@dataclass(frozen=True, eq=False)
class ZeroSet:
    """
    Immutable list of zero ordinates γ.

    Attributes:
        gammas: strictly increasing positive ordinates (read-only float64 array)
        t_max: height up to which the list is complete
        source: "computed" or "ingested"
        precision: bound on the absolute error of each ordinate
    """

    gammas: np.ndarray
    t_max: float
    source: str
    precision: float

    def __post_init__(self) -> None:
        g = np.array(self.gammas, dtype=np.float64, copy=True).reshape(-1)
        g.setflags(write=False)
        object.__setattr__(self, "gammas", g)
        object.__setattr__(self, "t_max", float(self.t_max))
        object.__setattr__(self, "precision", float(self.precision))
        if self.source not in SOURCES:
            raise DomainError(f"unknown zero-set source {self.source!r}")
        if not (self.precision > 0.0):
            raise DomainError(f"precision must be positive, got {self.precision!r}")
        if self.source == "computed" and self.precision > MAX_COMPUTED_PRECISION:
            raise DomainError(f"computed zero sets need precision <= {MAX_COMPUTED_PRECISION}")
        if g.size:
            if not np.all(np.isfinite(g)) or g[0] <= 0.0:
                raise DomainError("ordinates must be finite and positive")
            if np.any(np.diff(g) <= 0.0):
                raise DomainError("ordinates must be strictly increasing")
            if self.t_max < g[-1]:
                raise DomainError(f"t_max={self.t_max!r} below last ordinate {g[-1]!r}")

    @classmethod
    def from_ordinates(
        cls,
        gammas: Iterable[float],
        t_max: float | None = None,
        precision: float = DEFAULT_PRECISION,
    ) -> "ZeroSet":
        """Build an ingested set directly from values (tests, synthetic sets)."""
        g = np.asarray(list(gammas), dtype=np.float64)
        top = float(g[-1]) if g.size else 0.0
        return cls(g, top if t_max is None else t_max, "ingested", precision)

    def __len__(self) -> int:
        return int(self.gammas.size)

    def _check_height(self, T) -> np.ndarray:
        arr = np.asarray(T, dtype=np.float64)
        if arr.size and float(arr.min()) <= 0.0:
            raise DomainError(f"height must be positive, got {float(arr.min())!r}")
        if arr.size and float(arr.max()) > self.t_max:
            raise HeightExceededError(float(arr.max()), self.t_max)
        return arr

    def n_of_t(self, T):
        """Number of ordinates γ <= T (vectorised over T)."""
        arr = self._check_height(T)
        counts = np.searchsorted(self.gammas, arr, side="right")
        return int(counts) if arr.ndim == 0 else counts

    def up_to(self, T: float) -> np.ndarray:
        """Ordinates γ <= T."""
        return self.gammas[: self.n_of_t(T)]

    def between(self, s: float, t: float) -> np.ndarray:
        """Ordinates s < γ <= t."""
        lo = self.n_of_t(s) if s > 0 else 0
        return self.gammas[lo : self.n_of_t(t)]

    def restrict(self, T: float) -> "ZeroSet":
        """Prefix set, complete up to T."""
        return ZeroSet(self.up_to(T), T, self.source, self.precision)

    def same_as(self, other: "ZeroSet") -> bool:
        """Bit-exact equality of ordinates, t_max and precision."""
        return (
            self.gammas.shape == other.gammas.shape
            and self.gammas.tobytes() == other.gammas.tobytes()
            and self.t_max == other.t_max
            and self.precision == other.precision
        )

    def provenance(self) -> dict:
        return {
            "source": self.source,
            "count": len(self),
            "t_max": self.t_max,
            "precision": self.precision,
        }


def ingest_zeros(lines: Iterable[str], precision: float | None = None) -> ZeroSet:
    """
    Parse a published zero table.

    Args:
        lines: text lines (an open file works)
        precision: per-ordinate precision; overrides a "# precision:" comment,
            default 1e-9

    Returns:
        ZeroSet with source "ingested" and t_max equal to the last value

    Raises:
        ParseError: line not a positive decimal above 13 (with line number)
        OrderingError: value below the previous one

    A value equal to the previous one is the same zero printed twice and is
    dropped with a warning.
    """
    values: list[float] = []
    repeated = 0
    table_precision: float | None = None
    for line_number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        if text.startswith("#"):
            match = _PRECISION_RE.match(text)
            if match:
                try:
                    table_precision = float(match.group(1))
                except ValueError as exc:
                    raise ParseError(line_number, text, "not a valid precision") from exc
            continue
        try:
            value = float(text)
        except ValueError as exc:
            raise ParseError(line_number, text) from exc
        if not math.isfinite(value) or value <= 0.0:
            raise ParseError(line_number, text)
        if value <= FIRST_ORDINATE_FLOOR:
            raise ParseError(line_number, text, "below the first zero ordinate")
        if values and value < values[-1]:
            raise OrderingError(line_number, value, values[-1])
        if values and value == values[-1]:
            repeated += 1
            continue
        values.append(value)

    if repeated:
        log.warning("Dropped %d repeated ordinates", repeated)

    chosen = precision if precision is not None else table_precision
    chosen = DEFAULT_PRECISION if chosen is None else chosen
    t_max = values[-1] if values else 0.0
    log.info("Ingested %d ordinates (t_max=%s, precision=%s)", len(values), t_max, chosen)
    return ZeroSet(np.asarray(values, dtype=np.float64), t_max, "ingested", chosen)


def ingest_file(path: str | Path, precision: float | None = None) -> ZeroSet:
    with open(path, "r", encoding="utf-8") as fh:
        return ingest_zeros(fh, precision=precision)


def serialize(zs: ZeroSet) -> bytes:
    header = np.array([(CACHE_MAGIC, len(zs))], dtype=_HEADER)
    trailer = np.array([(zs.t_max, zs.precision)], dtype=_TRAILER)
    tag = _SOURCE_TAGS[zs.source]
    return header.tobytes() + zs.gammas.astype("<f8").tobytes() + trailer.tobytes() + tag


def deserialize(data: bytes, source: str | None = None) -> ZeroSet:
    """
    Decode a "ZPC1" cache.

    The provenance byte after the trailer is optional: without it the set is
    tagged `source` (default "ingested"). An explicit `source` overrides the
    stored tag.
    """
    if len(data) < _HEADER.itemsize + _TRAILER.itemsize:
        raise CacheFormatError(f"cache too short ({len(data)} bytes)")
    header = np.frombuffer(data, dtype=_HEADER, count=1)[0]
    if bytes(header["magic"]) != CACHE_MAGIC:
        raise CacheFormatError(f"bad magic {bytes(header['magic'])!r}")
    count = int(header["count"])
    body = _HEADER.itemsize + 8 * count + _TRAILER.itemsize
    if len(data) not in (body, body + 1):
        raise CacheFormatError(f"cache size {len(data)} does not match count {count}")
    stored = "ingested"
    if len(data) == body + 1:
        tag = data[body:]
        if tag not in _TAG_SOURCES:
            raise CacheFormatError(f"unknown provenance byte {tag!r}")
        stored = _TAG_SOURCES[tag]
    gammas = np.frombuffer(data, dtype="<f8", count=count, offset=_HEADER.itemsize)
    trailer = np.frombuffer(data, dtype=_TRAILER, count=1, offset=_HEADER.itemsize + 8 * count)[0]
    return ZeroSet(
        gammas.astype(np.float64),
        float(trailer["t_max"]),
        stored if source is None else source,
        float(trailer["precision"]),
    )


def save_cache(zs: ZeroSet, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_bytes(serialize(zs))
    tmp.replace(path)
    log.info("Zero cache written: %s (%d ordinates, t_max=%s)", path, len(zs), zs.t_max)
    return path


def load_cache(path: str | Path, source: str | None = None) -> ZeroSet:
    path = Path(path)
    if not path.is_file():
        raise CacheFormatError(f"zero cache not found: {path}")
    zs = deserialize(path.read_bytes(), source=source)
    log.info("Zero cache loaded: %s (%d ordinates, t_max=%s)", path, len(zs), zs.t_max)
    return zs


__all__ = [
    "ZeroSet",
    "ingest_zeros",
    "ingest_file",
    "serialize",
    "deserialize",
    "save_cache",
    "load_cache",
]
