"""Append-only catalog of constructed graphs, one JSON object per line."""

from __future__ import annotations

import fcntl
import json
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterator


@dataclass(frozen=True)
class CatalogRecord:
    p: int
    alpha: int
    beta: int
    gamma: int
    m: int
    k: int
    l: int
    sign: str
    n: int
    vertices: int
    valency: int
    aut_order: int | None
    label: str | None
    timestamp: str

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> CatalogRecord:
        return cls(**json.loads(line))


def now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def append_record(path: str | Path, record: CatalogRecord) -> None:
    """Append under an exclusive lock so concurrent writers never interleave."""
    with open(path, "a", encoding="utf-8") as fh:
        fcntl.flock(fh, fcntl.LOCK_EX)
        try:
            fh.write(record.to_json() + "\n")
            fh.flush()
        finally:
            fcntl.flock(fh, fcntl.LOCK_UN)


def read_records(path: str | Path) -> Iterator[CatalogRecord]:
    with open(path, encoding="utf-8") as fh:
        fcntl.flock(fh, fcntl.LOCK_SH)
        try:
            lines = fh.readlines()
        finally:
            fcntl.flock(fh, fcntl.LOCK_UN)
    for line in lines:
        if line.strip():
            yield CatalogRecord.from_json(line)
