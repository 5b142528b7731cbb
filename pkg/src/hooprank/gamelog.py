"""Weekly game-log ingestion: parsing, validation, and eligibility filtering."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, fields
from pathlib import Path
from typing import IO, Iterable, Sequence, Union

import numpy as np

from .categories import CSV_COLUMNS, STAT_COLUMNS


class GameLogError(ValueError):
    """Raised for malformed or inconsistent game-log input.

    Carries the 1-based line number of the offending row when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class PlayerWeek:
    """One player's raw statistics for one scoring week."""

    player_id: str
    week_index: int
    injured: bool
    pts: float
    reb: float
    ast: float
    stl: float
    blk: float
    tpm: float
    tov: float
    fgm: float
    fga: float
    ftm: float
    fta: float

    def __post_init__(self):
        if self.week_index < 0:
            raise ValueError(f"week_index must be >= 0, got {self.week_index}")
        for name in STAT_COLUMNS:
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise ValueError(f"{name} must be finite and >= 0, got {value}")
        if self.fgm > self.fga:
            raise ValueError(f"fgm ({self.fgm}) exceeds fga ({self.fga})")
        if self.ftm > self.fta:
            raise ValueError(f"ftm ({self.ftm}) exceeds fta ({self.fta})")

    def stat_vector(self) -> np.ndarray:
        """Stats as a float vector in STAT_COLUMNS order."""
        return np.array([getattr(self, name) for name in STAT_COLUMNS], dtype=float)


@dataclass(frozen=True)
class PlayerHistory:
    """All observed weeks for one player, in file order."""

    player_id: str
    weeks: tuple[PlayerWeek, ...]

    def __post_init__(self):
        seen = set()
        for week in self.weeks:
            if week.week_index in seen:
                raise ValueError(
                    f"duplicate week {week.week_index} for player {self.player_id}"
                )
            seen.add(week.week_index)

    def healthy_weeks(self) -> tuple[PlayerWeek, ...]:
        return tuple(w for w in self.weeks if not w.injured)

    def stat_matrix(self, healthy_only: bool = False) -> np.ndarray:
        """(n_weeks, len(STAT_COLUMNS)) float matrix of weekly stat lines."""
        weeks = self.healthy_weeks() if healthy_only else self.weeks
        if not weeks:
            return np.empty((0, len(STAT_COLUMNS)))
        return np.stack([w.stat_vector() for w in weeks])


Source = Union[str, Path, IO[bytes], IO[str]]


def _open_text(source: Source):
    if isinstance(source, (str, Path)):
        return open(source, "r", encoding="utf-8", newline=""), True
    if isinstance(source, io.TextIOBase):
        return source, False
    # Byte stream: wrap without closing the caller's handle.
    return io.TextIOWrapper(source, encoding="utf-8", newline=""), False


def parse_game_log(source: Source, fmt: str = "csv") -> list[PlayerHistory]:
    """Parse a weekly game log into one PlayerHistory per distinct player.

    Rows are kept verbatim (injured rows included, flagged). Raises
    GameLogError with a line number for malformed rows, made > attempted,
    or duplicate (player, week) pairs.
    """
    if fmt != "csv":
        raise ValueError(f"unsupported game-log format: {fmt!r}")
    handle, should_close = _open_text(source)
    try:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise GameLogError("missing header row") from None
        if tuple(h.strip() for h in header) != CSV_COLUMNS:
            raise GameLogError(
                f"header must be exactly {','.join(CSV_COLUMNS)}", line=1
            )

        weeks_by_player: dict[str, list[PlayerWeek]] = {}
        seen_keys: set[tuple[str, int]] = set()
        for line_no, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue  # blank line
            if len(row) != len(CSV_COLUMNS):
                raise GameLogError(
                    f"expected {len(CSV_COLUMNS)} fields, got {len(row)}", line=line_no
                )
            player_id = row[0].strip()
            if not player_id:
                raise GameLogError("empty player_id", line=line_no)
            try:
                week_index = int(row[1])
                injured_raw = row[2].strip()
                if injured_raw not in ("0", "1"):
                    raise ValueError(f"injured must be 0 or 1, got {injured_raw!r}")
                stats = [float(v) for v in row[3:]]
            except ValueError as exc:
                raise GameLogError(str(exc), line=line_no) from None
            key = (player_id, week_index)
            if key in seen_keys:
                raise GameLogError(
                    f"duplicate (player, week) pair {key}", line=line_no
                )
            seen_keys.add(key)
            try:
                week = PlayerWeek(player_id, week_index, injured_raw == "1", *stats)
            except ValueError as exc:
                raise GameLogError(str(exc), line=line_no) from None
            weeks_by_player.setdefault(player_id, []).append(week)

        return [
            PlayerHistory(player_id, tuple(weeks))
            for player_id, weeks in weeks_by_player.items()
        ]
    finally:
        if should_close:
            handle.close()


def _format_value(value: float) -> str:
    if value == int(value):
        return str(int(value))
    return repr(value)


def write_game_log(histories: Iterable[PlayerHistory], dest: Union[str, Path, IO[str]]) -> None:
    """Serialize histories back to the CSV game-log format (round-trip safe)."""
    if isinstance(dest, (str, Path)):
        handle = open(dest, "w", encoding="utf-8", newline="")
        should_close = True
    else:
        handle = dest
        should_close = False
    try:
        writer = csv.writer(handle)
        writer.writerow(CSV_COLUMNS)
        for history in histories:
            for w in history.weeks:
                writer.writerow(
                    [w.player_id, w.week_index, int(w.injured)]
                    + [_format_value(getattr(w, name)) for name in STAT_COLUMNS]
                )
    finally:
        if should_close:
            handle.close()


def filter_eligible(histories: Sequence[PlayerHistory], min_weeks: int) -> list[PlayerHistory]:
    """Keep players with at least min_weeks non-injured weeks.

    Returned histories contain only the non-injured weeks, so downstream
    moments and season sampling never see injured rows. Idempotent.
    """
    if min_weeks < 1:
        raise ValueError(f"min_weeks must be >= 1, got {min_weeks}")
    eligible = []
    for history in histories:
        healthy = history.healthy_weeks()
        if len(healthy) >= min_weeks:
            eligible.append(PlayerHistory(history.player_id, healthy))
    return eligible
