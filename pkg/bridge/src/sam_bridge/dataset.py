"""Read segment pairs from the evaluation dataset format.

One JSON object per line; only ``id``, ``hyp``, and ``ref`` are consumed
here, extra fields (source, human judgements, external scores) pass through
untouched because the bridge never needs them.
"""

import json
from dataclasses import dataclass
from typing import List

from .errors import DatasetError


@dataclass(frozen=True)
class SegmentPair:
    segment_id: str
    hyp: str
    ref: str


def read_dataset(path) -> List[SegmentPair]:
    pairs = []
    seen = set()
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                row = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DatasetError(
                    f"{path}:{lineno}: invalid JSON: {exc.msg}") from exc
            if not isinstance(row, dict):
                raise DatasetError(f"{path}:{lineno}: expected an object")
            for field in ("id", "hyp", "ref"):
                if field not in row:
                    raise DatasetError(
                        f"{path}:{lineno}: missing field {field!r}")
                if not isinstance(row[field], str):
                    raise DatasetError(
                        f"{path}:{lineno}: field {field!r} must be a string")
            if row["id"] in seen:
                raise DatasetError(
                    f"{path}:{lineno}: duplicate id {row['id']!r}")
            seen.add(row["id"])
            pairs.append(SegmentPair(row["id"], row["hyp"], row["ref"]))
    return pairs
